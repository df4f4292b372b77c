// Byte-exact comparison of pinned CLI invocations against tests/golden/.
// Regenerate with BLOCKREG_GENERATE_GOLDEN=1 after an intentional format
// change, then review the diff.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "golden_cases.hpp"

namespace {

std::string golden_path(const std::string& name)
{
    return std::string(GOLDEN_DIR) + "/" + name + ".txt";
}

bool read_file(const std::string& path, std::string& out)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

} // namespace

int main()
{
    const std::string bin = CLI_BIN_PATH;
    const bool generate = std::getenv("BLOCKREG_GENERATE_GOLDEN") != nullptr;
    int failures = 0;

    for (const golden::Case& c : golden::cases) {
        int code = -1;
        std::string got = golden::run_cli(bin, c.args, code);

        if (generate) {
            std::ofstream out(golden_path(c.name), std::ios::binary);
            out << got;
            std::cout << "wrote " << golden_path(c.name) << "\n";
            continue;
        }

        std::string want;
        if (!read_file(golden_path(c.name), want)) {
            std::cout << "FAIL " << c.name << ": missing golden file\n";
            ++failures;
            continue;
        }
        if (code != c.exit_code) {
            std::cout << "FAIL " << c.name << ": exit code " << code << ", expected "
                      << c.exit_code << "\n";
            ++failures;
            continue;
        }
        if (got != want) {
            std::cout << "FAIL " << c.name << ": output differs\n";
            std::cout << "--- expected ---\n" << want << "--- got ---\n" << got << "---\n";
            ++failures;
            continue;
        }
        std::cout << "ok " << c.name << "\n";
    }

    if (generate)
        return 0;
    if (failures) {
        std::cout << failures << " of " << golden::case_count << " cases failed\n";
        return 1;
    }
    std::cout << "all " << golden::case_count << " cases match\n";
    return 0;
}
