// Acceptance gate: each numbered criterion prints exactly one line,
// [PASS]/[FAIL], with the number of exact checks behind it. Everything is
// integer arithmetic; a single mismatch fails the criterion.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "blockreg/regularity.hpp"
#include "golden_cases.hpp"
#include "oracles.hpp"

using namespace blockreg;

namespace {

struct Crit {
    bool pass = true;
    long long checks = 0;
    std::string first;

    void check(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok && pass) {
            pass = false;
            first = what;
        }
    }
};

// Deterministic generator; identical sequences on every run and platform.
struct Rng {
    unsigned long long s;
    explicit Rng(unsigned long long seed) : s(seed) {}

    int next(int lo, int hi)
    {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<int>((s >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    }
};

SplitSheaf random_sum(Rng& rng, const Space& space, int terms, int bound)
{
    SplitSheaf f;
    for (int t = 0; t < terms; ++t) {
        MultiDegree d;
        d.a.resize(space.factors());
        for (int i = 0; i < space.factors(); ++i)
            d[i] = rng.next(-bound, bound);
        f.add(rng.next(1, 3), BoxProduct::line_bundle(space, d));
    }
    return f;
}

SplitSheaf one_line(const Space& space, const MultiDegree& d)
{
    SplitSheaf f;
    f.add(1, BoxProduct::line_bundle(space, d));
    return f;
}

void line_grid(const Space& space, int bound, const std::function<void(const MultiDegree&)>& fn)
{
    MultiDegree d;
    d.a.assign(space.factors(), -bound);
    for (;;) {
        fn(d);
        int i = 0;
        for (; i < space.factors(); ++i) {
            if (d[i] < bound) {
                ++d[i];
                break;
            }
            d[i] = -bound;
        }
        if (i == space.factors())
            break;
    }
}

// The catalog shared by criteria 4, 5, and 8: full degree grids |a_i| <= 4
// plus 100 pinned random 3-term sums per space.
std::vector<SplitSheaf> catalog_for(const Space& space)
{
    std::vector<SplitSheaf> fs;
    line_grid(space, 4, [&](const MultiDegree& d) { fs.push_back(one_line(space, d)); });
    Rng rng(45);
    for (int rep = 0; rep < 100; ++rep)
        fs.push_back(random_sum(rng, space, 3, 3));
    return fs;
}

Crit criterion1()
{
    Crit c;
    for (int n = 1; n <= 4; ++n)
        for (int p = 0; p <= n; ++p)
            for (int k = -12; k <= 12; ++k) {
                std::vector<Int> t = bott_cohomology(FactorSheaf(n, p, k));
                int nonzero = 0;
                Int chi = 0;
                for (int q = 0; q <= n; ++q) {
                    if (t[q] != 0)
                        ++nonzero;
                    chi += q % 2 == 0 ? t[q] : -t[q];
                }
                std::string at = "(" + std::to_string(n) + "," + std::to_string(p) + ","
                                 + std::to_string(k) + ")";
                c.check(nonzero <= 1, "several degrees at " + at);
                c.check(chi == oracles::chi_recursion(n, p, k), "chi mismatch at " + at);
                std::vector<Int> s = bott_cohomology(FactorSheaf(n, n - p, -k));
                bool serre = true;
                for (int q = 0; q <= n; ++q)
                    serre = serre && t[q] == s[n - q];
                c.check(serre, "Serre duality fails at " + at);
            }
    return c;
}

Crit criterion2()
{
    Crit c;
    Rng rng(2);
    for (int n = 1; n <= 3; ++n) {
        Space space({n});
        int reps = n == 1 ? 66 : 67;
        for (int rep = 0; rep < reps; ++rep) {
            SplitSheaf f = random_sum(rng, space, rng.next(1, 4), 6);
            RegValue a = cm_regularity(n, f);
            RegValue b = block_regularity_pn(n, f);
            c.check(a.value == b.value && a.neg_infinity == b.neg_infinity,
                    "values differ on P" + std::to_string(n) + " for " + to_string(f));
        }
    }
    return c;
}

Crit criterion3()
{
    Crit c;
    // one factor: the member of block i is O(i-n) and its least regular point
    // in the window family is n-i, the block label -i shifted by n
    for (int n = 1; n <= 3; ++n) {
        Space space({n});
        for (int i = -10; i <= 10; ++i) {
            RegValue v = block_regularity_pn(n, one_line(space, MultiDegree({i - n})));
            c.check(!v.neg_infinity && v.value == n - i,
                    "P" + std::to_string(n) + " block " + std::to_string(i));
        }
    }
    Space p1p1({1, 1});
    int d = p1p1.dim();
    for (int i = -7; i <= 7; ++i)
        for (const MultiDegree& m : helix_block(p1p1, i).members) {
            AlignedRegValue v = block_regularity_aligned(p1p1, one_line(p1p1, m));
            bool inside = v.interval_gt < -i && -i <= v.value;
            bool aligned = ((-i - v.value) % (d + 1)) == 0;
            c.check(inside && (!aligned || v.value == -i),
                    "sandwich fails for O" + to_string(m) + " in block " + std::to_string(i));
        }
    return c;
}

Crit criterion4()
{
    Crit c;
    for (const Space& space : {Space({1, 1}), Space({2, 1})})
        for (const SplitSheaf& f : catalog_for(space))
            c.check(hw_block_equivalence(space, f).agree,
                    space.name() + " disagreement on " + to_string(f));
    return c;
}

Crit criterion5()
{
    Crit c;
    for (const Space& space : {Space({1, 1}), Space({2, 1})})
        for (const SplitSheaf& f : catalog_for(space)) {
            TransferCheck tc = regularity_transfer_check(space, f);
            c.check(tc.pass, space.name() + " transfer fails on " + to_string(f));
        }
    return c;
}

Crit criterion6()
{
    Crit c;
    for (const Space& space : {Space({1, 1}), Space({2, 1}), Space({3})}) {
        int period = space.dim() + 1;
        for (int k = -2; k <= 2; ++k) {
            std::vector<K0Class> solved = left_dual_classes_k0(space, k * period);
            std::vector<DualBlock> closed = aligned_window_dual(space, k);
            size_t idx = 0;
            for (const DualBlock& db : closed)
                for (const BoxProduct& b : db.members) {
                    c.check(idx < solved.size() && solved[idx] == k0_class(space, b),
                            space.name() + " dual class mismatch at k=" + std::to_string(k));
                    ++idx;
                }
            c.check(idx == solved.size(), space.name() + " dual count at k=" + std::to_string(k));
            c.check(gram_matrix(space, helix_window(space, k * period)).unitriangular(),
                    space.name() + " gram not unitriangular at k=" + std::to_string(k));
        }
    }
    GramMatrix g = gram_matrix(Space({1, 1}), fundamental_collection(Space({1, 1})));
    c.check(g.g
                == std::vector<std::vector<Int>>{
                    {1, 2, 2, 4}, {0, 1, 0, 2}, {0, 0, 1, 2}, {0, 0, 0, 1}},
            "P1xP1 fundamental gram matrix");
    return c;
}

Crit criterion7()
{
    Crit c;
    Space p1p1({1, 1});
    Rng rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        SplitSheaf f = random_sum(rng, p1p1, rng.next(1, 3), 3);
        AlignedRegValue reg = block_regularity_aligned(p1p1, f);
        std::vector<BeilinsonTerm> terms = beilinson_terms(p1p1, f, reg.value);
        K0Class acc{std::vector<Int>(4, 0)};
        for (const BeilinsonTerm& t : terms)
            for (const auto& [deg, mult] : t.summands) {
                K0Class part = k0_class(p1p1, deg) * mult;
                if ((-t.p) % 2)
                    acc -= part;
                else
                    acc += part;
            }
        c.check(acc == k0_class(p1p1, f), "K0 identity fails for " + to_string(f));
    }

    Space p2({2});
    std::vector<BeilinsonTerm> terms = beilinson_terms(p2, one_line(p2, MultiDegree({0})), 0);
    c.check(terms.size() == 3 && terms[0].summands.size() == 1
                && terms[0].summands[0] == std::pair<MultiDegree, Int>{MultiDegree({0}), 1}
                && terms[1].summands.empty() && terms[2].summands.empty(),
            "structure sheaf resolution on P2");
    return c;
}

Crit criterion8()
{
    Crit c;
    for (const Space& space : {Space({1, 1}), Space({2, 1})}) {
        std::vector<MultiDegree> bases;
        for (int t : {-1, 0, 2}) {
            MultiDegree b;
            b.a.assign(space.factors(), t);
            bases.push_back(b);
        }
        MultiDegree mixed;
        mixed.a.assign(space.factors(), 1);
        mixed[0] = -1;
        bases.push_back(mixed);

        for (const SplitSheaf& f : catalog_for(space)) {
            MultiDegree zero;
            zero.a.assign(space.factors(), 0);
            for (const MultiDegree& b : bases)
                c.check(hw_regular(space, f, b).value
                            == hw_regular(space, f.twisted(b), zero).value,
                        space.name() + " hw shift law at " + to_string(b) + " on "
                            + to_string(f));
            for (Int k = -1; k <= 1; ++k) {
                MultiDegree shift = space.period_twist() * static_cast<int>(k);
                c.check(block_regular_aligned(space, f, k).value
                            == block_regular_aligned(space, f.twisted(shift), 0).value,
                        space.name() + " aligned shift law at k=" + std::to_string(k) + " on "
                            + to_string(f));
                c.check(monotonicity_step_check(space, f, k).value,
                        space.name() + " monotonicity at k=" + std::to_string(k) + " on "
                            + to_string(f));
            }
        }
    }
    return c;
}

Crit criterion9()
{
    Crit c;
    const std::string bin = CLI_BIN_PATH;

    for (const golden::Case& gc : golden::cases) {
        int code = -1;
        std::string got = golden::run_cli(bin, gc.args, code);
        std::ifstream in(std::string(GOLDEN_DIR) + "/" + std::string(gc.name) + ".txt",
                         std::ios::binary);
        std::ostringstream want;
        want << in.rdbuf();
        c.check(in.good() && code == gc.exit_code && got == want.str(),
                std::string("golden case ") + gc.name);
    }

    int code = -1;
    std::string out = golden::run_cli(bin, "verify --suite all --quiet", code);
    c.check(code == 0 && out == "verify: pass\n", "verify --suite all on the test spaces");
    return c;
}

} // namespace

int main()
{
    struct Entry {
        int id;
        const char* label;
        Crit (*fn)();
    };
    const Entry entries[] = {
        {1, "Bott tables: single degree, Euler recursion, Serre duality", criterion1},
        {2, "window regularity equals Castelnuovo-Mumford on P^n", criterion2},
        {3, "helix members: exact values and aligned sandwich", criterion3},
        {4, "origin equivalence of multigraded and window regularity", criterion4},
        {5, "transfer bounds between the product notions", criterion5},
        {6, "dual collections in K0 and Gram matrices", criterion6},
        {7, "resolution terms reproduce the K0 class", criterion7},
        {8, "shift laws and monotonicity", criterion8},
        {9, "CLI golden files and verify suites", criterion9},
    };

    bool all = true;
    for (const Entry& e : entries) {
        Crit c = e.fn();
        all = all && c.pass;
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << e.id << ". " << e.label << " ("
                  << c.checks << " checks)";
        if (!c.pass)
            std::cout << " first failure: " << c.first;
        std::cout << "\n";
    }
    return all ? 0 : 1;
}
