#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "blockreg/expr.hpp"
#include "blockreg/regularity.hpp"

using json = nlohmann::ordered_json;
using namespace blockreg;

namespace {

// Every command prints either plain text lines or one JSON object shaped
// {"inputs": ..., "result": ..., "witnesses": [...]}.
struct Output {
    bool as_json = false;
    bool quiet = false;
    json inputs = json::object();
    json result;
    json witnesses = json::array();
    std::vector<std::string> text;

    void line(const std::string& s) { text.push_back(s); }
    void detail(const std::string& s)
    {
        if (!quiet)
            text.push_back(s);
    }

    void flush() const
    {
        if (as_json) {
            json envelope;
            envelope["inputs"] = inputs;
            envelope["result"] = result;
            envelope["witnesses"] = witnesses;
            std::cout << envelope.dump(2) << "\n";
        } else {
            for (const std::string& s : text)
                std::cout << s << "\n";
        }
    }
};

Int floordiv(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

json degree_json(const MultiDegree& d)
{
    json a = json::array();
    for (int i = 0; i < d.size(); ++i)
        a.push_back(d[i]);
    return a;
}

json witness_json(const Witness& w)
{
    return json{{"object", to_string(w.object)}, {"q", w.q}, {"dim", w.dim}};
}

std::string witness_text(const Witness& w)
{
    return to_string(w.object) + " q=" + std::to_string(w.q) + " h=" + std::to_string(w.dim);
}

json table_json(const CohomologyTable& t)
{
    json m = json::object();
    for (int q = 0; q <= t.top(); ++q)
        if (t[q] != 0)
            m[std::to_string(q)] = t[q];
    return m;
}

std::string table_text(const CohomologyTable& t)
{
    std::string s;
    for (int q = 0; q <= t.top(); ++q)
        if (t[q] != 0) {
            if (!s.empty())
                s += " ";
            s += "h^" + std::to_string(q) + "=" + std::to_string(t[q]);
        }
    return s.empty() ? "0" : s;
}

std::vector<std::string> manifest_lines(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open manifest '" + path + "'");
    std::vector<std::string> lines;
    std::string raw;
    while (std::getline(in, raw)) {
        size_t i = raw.find_first_not_of(" \t\r");
        if (i == std::string::npos || raw[i] == '#')
            continue;
        lines.push_back(raw);
    }
    return lines;
}

void note_experimental(const Space& space, Output& out)
{
    if (space.factors() <= 2)
        return;
    std::cerr << "note: more than two factors is experimental\n";
    if (out.result.is_object())
        out.result["note"] = "more than two factors is experimental";
}

// ---- cohom ------------------------------------------------------------------

int run_cohom(const std::string& space_s, const std::string& expr,
              const std::string& manifest, Output& out)
{
    Space space = parse_space(space_s);
    out.inputs["space"] = space.name();

    if (!manifest.empty()) {
        if (!expr.empty())
            throw std::invalid_argument("give either a sheaf expression or --manifest");
        out.inputs["manifest"] = manifest;
        out.result = json::array();
        for (const std::string& item : manifest_lines(manifest)) {
            SplitSheaf f = parse_sheaf(item, space);
            CohomologyTable t = cohomology(space, f);
            out.result.push_back(json{{"sheaf", to_string(f)}, {"table", table_json(t)}});
            out.line(to_string(f) + ": " + table_text(t));
        }
        out.flush();
        return 0;
    }

    if (expr.empty())
        throw std::invalid_argument("need a sheaf expression or --manifest");
    SplitSheaf f = parse_sheaf(expr, space);
    out.inputs["sheaf"] = to_string(f);
    CohomologyTable t = cohomology(space, f);
    out.result = table_json(t);
    bool any = false;
    for (int q = 0; q <= t.top(); ++q)
        if (t[q] != 0) {
            out.line("h^" + std::to_string(q) + " = " + std::to_string(t[q]));
            any = true;
        }
    if (!any)
        out.line("0");
    out.flush();
    return 0;
}

// ---- euler ------------------------------------------------------------------

int run_euler(const std::string& space_s, const std::string& a_s, const std::string& b_s,
              Output& out)
{
    Space space = parse_space(space_s);
    MultiDegree a = parse_multidegree(a_s, space);
    MultiDegree b = parse_multidegree(b_s, space);
    out.inputs["space"] = space.name();
    out.inputs["a"] = degree_json(a);
    out.inputs["b"] = degree_json(b);
    Int chi = euler_pairing(space, a, b);
    out.result = json{{"value", chi}};
    out.line(std::to_string(chi));
    out.flush();
    return 0;
}

// ---- blocks -----------------------------------------------------------------

int run_blocks(const std::string& space_s, std::optional<int> index, Output& out)
{
    Space space = parse_space(space_s);
    out.inputs["space"] = space.name();

    if (index) {
        out.inputs["index"] = *index;
        Block b = helix_block(space, *index);
        json members = json::array();
        for (const MultiDegree& m : b.members)
            members.push_back(degree_json(m));
        out.result = json{{"index", *index}, {"members", members}};
        out.line("E_" + std::to_string(*index) + ": " + to_string(b));
        out.flush();
        return 0;
    }

    BlockCollection c = fundamental_collection(space);
    json blocks = json::array();
    for (size_t j = 0; j < c.blocks.size(); ++j) {
        json members = json::array();
        for (const MultiDegree& m : c.blocks[j].members)
            members.push_back(degree_json(m));
        blocks.push_back(members);
        out.line("E_" + std::to_string(j) + ": " + to_string(c.blocks[j]));
    }
    out.result = json{{"base_index", c.base_index}, {"blocks", blocks}};
    out.flush();
    return 0;
}

// ---- gram -------------------------------------------------------------------

int run_gram(const std::string& space_s, std::optional<int> window, Output& out)
{
    Space space = parse_space(space_s);
    out.inputs["space"] = space.name();
    out.inputs["window"] = window.value_or(0);

    BlockCollection c = window ? helix_window(space, *window) : fundamental_collection(space);
    GramMatrix g = gram_matrix(space, c);

    json members = json::array();
    for (const MultiDegree& m : c.flatten())
        members.push_back(degree_json(m));
    json matrix = json::array();
    for (const auto& row : g.g)
        matrix.push_back(row);
    out.result = json{{"members", members}, {"matrix", matrix}};

    for (const auto& row : g.g) {
        std::string s;
        for (size_t v = 0; v < row.size(); ++v) {
            if (v)
                s += " ";
            s += std::to_string(row[v]);
        }
        out.line(s);
    }
    out.flush();
    return 0;
}

// ---- dual -------------------------------------------------------------------

int run_dual(const std::string& space_s, int k, bool use_k0, std::optional<int> window,
             Output& out)
{
    Space space = parse_space(space_s);
    out.inputs["space"] = space.name();
    int d = space.dim();

    if (use_k0) {
        int base = window.value_or(0);
        out.inputs["window"] = base;
        std::vector<K0Class> classes = left_dual_classes_k0(space, base);
        BlockCollection w = helix_window(space, base);
        json blocks = json::array();
        size_t idx = 0;
        for (int j = 0; j <= d; ++j) {
            size_t count = w.blocks[d - j].members.size();
            json block = json::array();
            std::string s;
            for (size_t m = 0; m < count; ++m, ++idx) {
                block.push_back(classes[idx].coords);
                if (m)
                    s += " ";
                s += to_string(classes[idx]);
            }
            blocks.push_back(block);
            out.line("D_" + std::to_string(j) + ": " + s);
        }
        out.result = json{{"window", base}, {"classes", blocks}};
        out.flush();
        return 0;
    }

    if (window)
        throw std::invalid_argument("--window needs --k0; the sheaf form exists "
                                    "for aligned windows only, use --k");
    out.inputs["k"] = k;
    std::vector<DualBlock> duals = aligned_window_dual(space, k);
    json blocks = json::array();
    for (int j = 0; j <= d; ++j) {
        json block = json::array();
        std::string s;
        for (size_t m = 0; m < duals[j].members.size(); ++m) {
            block.push_back(to_string(duals[j].members[m]));
            if (m)
                s += " ";
            s += to_string(duals[j].members[m]);
        }
        blocks.push_back(block);
        out.line("D_" + std::to_string(j) + ": " + s);
    }
    out.result = json{{"k", k}, {"blocks", blocks}};
    out.flush();
    return 0;
}

// ---- reg --------------------------------------------------------------------

void push_witnesses(const std::vector<Witness>& ws, const std::string& label, Output& out)
{
    for (const Witness& w : ws) {
        out.witnesses.push_back(witness_json(w));
        out.detail(label + ": " + witness_text(w));
    }
}

int run_reg(const std::string& space_s, const std::string& kind, const std::string& expr,
            std::optional<Int> at, const std::string& base_s, const std::string& manifest,
            Output& out)
{
    Space space = parse_space(space_s);
    out.inputs["space"] = space.name();
    out.inputs["kind"] = kind;
    int d = space.dim();
    bool single = space.factors() == 1;

    if (kind == "cm" && !single)
        throw std::invalid_argument("cm regularity lives on a single projective space; "
                                    "use --kind block or hw on products");
    if (at && kind == "hw")
        throw std::invalid_argument("--at applies to cm and block; use --base for hw");
    if (!base_s.empty() && kind != "hw")
        throw std::invalid_argument("--base applies to hw only");
    if (!manifest.empty() && (at || !base_s.empty()))
        throw std::invalid_argument("--manifest runs searches; drop --at/--base");

    // m -> k for the aligned window test; only m = k(d+1) - d is a window base.
    auto aligned_k = [&](Int m) {
        if (((m + d) % (d + 1) + (d + 1)) % (d + 1) != 0)
            throw std::invalid_argument("m = " + std::to_string(m)
                                        + " is not an aligned point (need m = k(d+1) - d)");
        return floordiv(m + d, d + 1);
    };

    auto search_value = [&](const SplitSheaf& f) -> json {
        if (kind == "cm") {
            RegValue v = cm_regularity(space.dims()[0], f);
            return json{{"value", v.neg_infinity ? json() : json(v.value)},
                        {"neg_infinity", v.neg_infinity}};
        }
        if (kind == "block" && single) {
            RegValue v = block_regularity_pn(space.dims()[0], f);
            return json{{"value", v.neg_infinity ? json() : json(v.value)},
                        {"neg_infinity", v.neg_infinity}};
        }
        if (kind == "block") {
            AlignedRegValue v = block_regularity_aligned(space, f);
            json j{{"value", v.neg_infinity ? json() : json(v.value)},
                   {"neg_infinity", v.neg_infinity}};
            if (!v.neg_infinity) {
                j["k"] = v.k;
                j["interval_gt"] = v.interval_gt;
            }
            return j;
        }
        RegValue v = hw_min_diagonal(space, f);
        return json{{"value", v.neg_infinity ? json() : json(v.value)},
                    {"neg_infinity", v.neg_infinity}};
    };

    if (!manifest.empty()) {
        if (!expr.empty())
            throw std::invalid_argument("give either a sheaf expression or --manifest");
        out.inputs["manifest"] = manifest;
        out.result = json::array();
        for (const std::string& item : manifest_lines(manifest)) {
            SplitSheaf f = parse_sheaf(item, space);
            json r = search_value(f);
            out.line(to_string(f) + ": "
                     + (r["neg_infinity"].get<bool>() ? std::string("-infinity")
                                                      : std::to_string(r["value"].get<Int>())));
            r.erase("neg_infinity");
            out.result.push_back(json{{"sheaf", to_string(f)}, {"value", r["value"]}});
        }
        note_experimental(space, out);
        out.flush();
        return 0;
    }

    if (expr.empty())
        throw std::invalid_argument("need a sheaf expression or --manifest");
    SplitSheaf f = parse_sheaf(expr, space);
    out.inputs["sheaf"] = to_string(f);

    if (at) {
        out.inputs["at"] = *at;
        BoolVerdict v;
        if (kind == "cm")
            v = cm_regular(space.dims()[0], f, *at);
        else if (single)
            v = block_regular_pn(space.dims()[0], f, *at);
        else
            v = block_regular_aligned(space, f, aligned_k(*at));
        out.result = json{{"at", *at}, {"regular", v.value}};
        out.line((v.value ? "regular at " : "not regular at ") + std::to_string(*at));
        push_witnesses(v.witnesses, "witness", out);
        note_experimental(space, out);
        out.flush();
        return 0;
    }

    if (!base_s.empty()) {
        MultiDegree base = parse_multidegree(base_s, space);
        out.inputs["base"] = degree_json(base);
        BoolVerdict v = hw_regular(space, f, base);
        out.result = json{{"base", degree_json(base)}, {"regular", v.value}};
        out.line((v.value ? "regular at " : "not regular at ") + to_string(base));
        push_witnesses(v.witnesses, "witness", out);
        note_experimental(space, out);
        out.flush();
        return 0;
    }

    // search mode
    if (kind == "block" && !single) {
        AlignedRegValue v = block_regularity_aligned(space, f);
        if (v.neg_infinity) {
            out.result = json{{"value", json()}, {"neg_infinity", true}};
            out.line("-infinity");
        } else {
            out.result = json{{"value", v.value},
                              {"neg_infinity", false},
                              {"k", v.k},
                              {"interval_gt", v.interval_gt}};
            out.line(std::to_string(v.value));
            out.detail("k = " + std::to_string(v.k));
            out.detail("exact value in (" + std::to_string(v.interval_gt) + ", "
                       + std::to_string(v.value) + "]");
            push_witnesses(v.boundary, "boundary", out);
        }
        note_experimental(space, out);
        out.flush();
        return 0;
    }

    RegValue v;
    if (kind == "cm")
        v = cm_regularity(space.dims()[0], f);
    else if (kind == "block")
        v = block_regularity_pn(space.dims()[0], f);
    else
        v = hw_min_diagonal(space, f);
    if (v.neg_infinity) {
        out.result = json{{"value", json()}, {"neg_infinity", true}};
        out.line("-infinity");
    } else {
        out.result = json{{"value", v.value}, {"neg_infinity", false}};
        out.line(std::to_string(v.value));
        push_witnesses(v.boundary, "boundary", out);
    }
    note_experimental(space, out);
    out.flush();
    return 0;
}

// ---- beilinson --------------------------------------------------------------

int run_beilinson(const std::string& space_s, const std::string& expr, Int m, Output& out)
{
    Space space = parse_space(space_s);
    SplitSheaf f = parse_sheaf(expr, space);
    out.inputs["space"] = space.name();
    out.inputs["sheaf"] = to_string(f);
    out.inputs["m"] = m;

    std::vector<BeilinsonTerm> terms = beilinson_terms(space, f, m);
    json jterms = json::array();
    for (const BeilinsonTerm& t : terms) {
        json summands = json::array();
        SplitSheaf printed;
        for (const auto& [deg, mult] : t.summands) {
            summands.push_back(json{{"degree", degree_json(deg)}, {"mult", mult}});
            printed.add(mult, BoxProduct::line_bundle(space, deg));
        }
        jterms.push_back(json{{"p", t.p}, {"summands", summands}});
        out.line("L_" + std::to_string(t.p) + ": " + to_string(printed));
    }
    out.result = json{{"m", m}, {"terms", jterms}};
    note_experimental(space, out);
    out.flush();
    return 0;
}

// ---- verify -----------------------------------------------------------------

// Deterministic generator, independent of the standard library's distributions.
struct Rng {
    unsigned long long s;
    explicit Rng(unsigned long long seed) : s(seed) {}

    int next(int lo, int hi)
    {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<int>((s >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    }
};

SplitSheaf random_sum(Rng& rng, const Space& space, int max_terms, int bound)
{
    SplitSheaf f;
    int terms = rng.next(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        MultiDegree d;
        d.a.resize(space.factors());
        for (int i = 0; i < space.factors(); ++i)
            d[i] = rng.next(-bound, bound);
        f.add(rng.next(1, 3), BoxProduct::line_bundle(space, d));
    }
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

struct SuiteOutcome {
    std::string name;
    std::string status = "pass"; // pass, fail, skipped
    long long checks = 0;
    std::string detail;
};

class SuiteRun {
public:
    SuiteOutcome out;

    explicit SuiteRun(std::string name) { out.name = std::move(name); }

    void check(bool ok, const std::string& what)
    {
        ++out.checks;
        if (!ok && out.status != "fail") {
            out.status = "fail";
            out.detail = what;
        }
    }

    void skip(const std::string& why)
    {
        out.status = "skipped";
        out.detail = why;
    }
};

SplitSheaf one_line(const Space& space, const MultiDegree& d)
{
    SplitSheaf f;
    f.add(1, BoxProduct::line_bundle(space, d));
    return f;
}

SuiteOutcome suite_prop414(const Space& space, int)
{
    SuiteRun run("prop414");
    if (space.factors() != 1) {
        run.skip("needs one factor");
        return run.out;
    }
    int n = space.dims()[0];
    Rng rng(414);
    auto compare = [&](const SplitSheaf& f) {
        RegValue a = cm_regularity(n, f);
        RegValue b = block_regularity_pn(n, f);
        run.check(a.value == b.value && a.neg_infinity == b.neg_infinity,
                  "search values differ on " + to_string(f));
        for (Int m : {a.value - 1, a.value, a.value + 1})
            run.check(cm_regular(n, f, m).value == block_regular_pn(n, f, m).value,
                      "tests differ at " + std::to_string(m) + " on " + to_string(f));
    };
    for (int i = -6; i <= 6; ++i)
        compare(one_line(space, MultiDegree({i})));
    for (int rep = 0; rep < 40; ++rep)
        compare(random_sum(rng, space, 4, 6));
    return run.out;
}

SuiteOutcome suite_prop49(const Space& space, int)
{
    SuiteRun run("prop49");
    if (space.factors() == 1) {
        int n = space.dims()[0];
        for (int i = -10; i <= 10; ++i) {
            RegValue v = block_regularity_pn(n, one_line(space, MultiDegree({i - n})));
            run.check(v.value == n - i, "member of block " + std::to_string(i));
        }
        return run.out;
    }
    int d = space.dim();
    for (int i = -7; i <= 7; ++i)
        for (const MultiDegree& m : helix_block(space, i).members) {
            AlignedRegValue v = block_regularity_aligned(space, one_line(space, m));
            bool inside = v.interval_gt < -i && -i <= v.value;
            bool eq_ok = ((-i - v.value) % (d + 1)) != 0 || v.value == -i;
            run.check(inside && eq_ok, "member O" + to_string(m) + " of block " + std::to_string(i));
        }
    return run.out;
}

SuiteOutcome suite_thm55(const Space& space, int max_degree)
{
    SuiteRun run("thm55");
    Rng rng(55);
    if (space.factors() == 1) {
        int n = space.dims()[0];
        std::vector<SplitSheaf> fs;
        for (int i = -3; i <= 3; ++i)
            fs.push_back(one_line(space, MultiDegree({i})));
        for (int rep = 0; rep < 10; ++rep)
            fs.push_back(random_sum(rng, space, 3, 4));
        for (const SplitSheaf& f : fs)
            for (Int t = -4; t <= 4; ++t) {
                MultiDegree base({static_cast<int>(t)});
                run.check(hw_regular(space, f, base).value == cm_regular(n, f, t).value,
                          "degeneration at " + std::to_string(t) + " on " + to_string(f));
            }
        return run.out;
    }
    int w = space.factors() >= 3 ? std::min(max_degree, 1) : max_degree;
    line_grid(space, w, [&](const MultiDegree& d) {
        EquivalenceCheck eq = hw_block_equivalence(space, one_line(space, d));
        run.check(eq.agree, "disagreement on O" + to_string(d));
    });
    for (int rep = 0; rep < 100; ++rep) {
        SplitSheaf f = random_sum(rng, space, 3, 3);
        EquivalenceCheck eq = hw_block_equivalence(space, f);
        run.check(eq.agree, "disagreement on " + to_string(f));
    }
    return run.out;
}

SuiteOutcome suite_cor56(const Space& space, int)
{
    SuiteRun run("cor56");
    Rng rng(56);
    auto compare = [&](const SplitSheaf& f) {
        run.check(regularity_transfer_check(space, f).pass, "transfer fails on " + to_string(f));
    };
    int w = space.factors() >= 3 ? 1 : (space.factors() == 1 ? 3 : 2);
    line_grid(space, w, [&](const MultiDegree& d) { compare(one_line(space, d)); });
    for (int rep = 0; rep < 20; ++rep)
        compare(random_sum(rng, space, 3, 3));
    return run.out;
}

SuiteOutcome suite_monotone(const Space& space, int)
{
    SuiteRun run("monotone");
    Rng rng(77);
    auto sweep = [&](const SplitSheaf& f) {
        for (Int at = -2; at <= 2; ++at)
            run.check(monotonicity_step_check(space, f, at).value,
                      "step at " + std::to_string(at) + " on " + to_string(f));
    };
    int w = space.factors() >= 3 ? 1 : 2;
    line_grid(space, w, [&](const MultiDegree& d) { sweep(one_line(space, d)); });
    for (int rep = 0; rep < 10; ++rep)
        sweep(random_sum(rng, space, 3, 3));
    return run.out;
}

SuiteOutcome suite_dualsum(const Space& space, int)
{
    SuiteRun run("dualsum");
    Rng rng(99);
    for (int rep = 0; rep < 20; ++rep) {
        SplitSheaf f = random_sum(rng, space, 3, 4);
        SplitSheaf g = random_sum(rng, space, 3, 4);
        run.check(direct_sum_check(space, f, g).pass,
                  "sum of " + to_string(f) + " and " + to_string(g));
    }
    SplitSheaf h = random_sum(rng, space, 2, 3);
    run.check(direct_sum_check(space, h, SplitSheaf::zero()).pass, "sum with 0");
    run.check(direct_sum_check(space, SplitSheaf::zero(), SplitSheaf::zero()).pass, "0 + 0");
    return run.out;
}

int run_verify(const std::string& suite, std::vector<std::string> space_args, int max_degree,
               Output& out)
{
    if (space_args.empty())
        space_args = {"P2", "P1xP1", "P2xP1"};

    std::vector<std::pair<std::string, SuiteOutcome (*)(const Space&, int)>> all = {
        {"thm55", suite_thm55},     {"cor56", suite_cor56},
        {"prop49", suite_prop49},   {"prop414", suite_prop414},
        {"monotone", suite_monotone}, {"dualsum", suite_dualsum},
    };

    out.inputs["suite"] = suite;
    out.inputs["max_degree"] = max_degree;
    json jspaces = json::array();
    std::vector<Space> spaces;
    for (const std::string& s : space_args) {
        spaces.push_back(parse_space(s));
        jspaces.push_back(spaces.back().name());
    }
    out.inputs["spaces"] = jspaces;

    bool pass = true;
    json jsuites = json::array();
    for (const Space& space : spaces)
        for (const auto& [name, fn] : all) {
            if (suite != "all" && suite != name)
                continue;
            SuiteOutcome o = fn(space, max_degree);
            pass = pass && o.status != "fail";
            jsuites.push_back(json{{"space", space.name()},
                                   {"name", o.name},
                                   {"status", o.status},
                                   {"checks", o.checks},
                                   {"detail", o.detail}});
            std::string line = space.name() + " " + o.name + ": " + o.status + " ("
                               + std::to_string(o.checks) + " checks)";
            if (!o.detail.empty())
                line += ": " + o.detail;
            out.detail(line);
        }
    out.result = json{{"suites", jsuites}, {"pass", pass}};
    out.line(pass ? "verify: pass" : "verify: FAIL");
    out.flush();
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact cohomology, block collections, and regularity on products "
                 "of projective spaces"};
    app.require_subcommand(1);

    Output out;
    auto add_common = [&](CLI::App* sc) {
        sc->add_flag("--json", out.as_json, "emit one JSON object");
        sc->add_flag("--quiet", out.quiet, "essential output only");
    };

    // cohom
    auto* sc_cohom = app.add_subcommand("cohom", "cohomology table of a split sheaf");
    std::string cohom_space, cohom_expr, cohom_manifest;
    sc_cohom->add_option("space", cohom_space, "product space, e.g. P2xP1")->required();
    sc_cohom->add_option("sheaf", cohom_expr, "expression, e.g. 'O(-1,2) + 2*Om(1,0)#O(3)'");
    sc_cohom->add_option("--manifest", cohom_manifest, "file with one expression per line");
    add_common(sc_cohom);

    // euler
    auto* sc_euler = app.add_subcommand("euler", "Euler pairing of two line bundles");
    std::string euler_space, euler_a, euler_b;
    sc_euler->add_option("space", euler_space)->required();
    sc_euler->add_option("a", euler_a, "multidegree, e.g. '(-1,0)'")->required();
    sc_euler->add_option("b", euler_b)->required();
    add_common(sc_euler);

    // blocks
    auto* sc_blocks = app.add_subcommand("blocks", "fundamental collection or one helix block");
    std::string blocks_space;
    std::optional<int> blocks_index;
    sc_blocks->add_option("space", blocks_space)->required();
    sc_blocks->add_option("--index", blocks_index, "helix block index")
        ->check(CLI::Range(-1000000, 1000000));
    add_common(sc_blocks);

    // gram
    auto* sc_gram = app.add_subcommand("gram", "Gram matrix of a block collection");
    std::string gram_space;
    std::optional<int> gram_window;
    sc_gram->add_option("space", gram_space)->required();
    sc_gram->add_option("--window", gram_window, "helix window base (default: fundamental)")
        ->check(CLI::Range(-1000000, 1000000));
    add_common(sc_gram);

    // dual
    auto* sc_dual = app.add_subcommand("dual", "left dual collection of a window");
    std::string dual_space;
    int dual_k = 0;
    bool dual_k0 = false;
    std::optional<int> dual_window;
    sc_dual->add_option("space", dual_space)->required();
    sc_dual->add_option("--k", dual_k, "aligned window k, base k(d+1)")
        ->check(CLI::Range(-100000, 100000));
    sc_dual->add_flag("--k0", dual_k0, "K0 classes from orthogonality (any window)");
    sc_dual->add_option("--window", dual_window, "window base for --k0")
        ->check(CLI::Range(-1000000, 1000000));
    add_common(sc_dual);

    // reg
    auto* sc_reg = app.add_subcommand("reg", "regularity tests and searches");
    std::string reg_space, reg_kind, reg_expr, reg_base, reg_manifest;
    std::optional<Int> reg_at;
    sc_reg->add_option("space", reg_space)->required();
    sc_reg->add_option("sheaf", reg_expr, "sum of line bundles");
    sc_reg->add_option("--kind", reg_kind, "cm, block, or hw")
        ->required()
        ->check(CLI::IsMember({"cm", "block", "hw"}));
    sc_reg->add_option("--at", reg_at, "test at this value instead of searching")
        ->check(CLI::Range(-1000000LL, 1000000LL));
    sc_reg->add_option("--base", reg_base, "multidegree base for --kind hw");
    sc_reg->add_option("--manifest", reg_manifest, "file with one expression per line");
    add_common(sc_reg);

    // beilinson
    auto* sc_beil = app.add_subcommand("beilinson", "resolution terms of a regular sheaf");
    std::string beil_space, beil_expr;
    Int beil_m = 0;
    sc_beil->add_option("space", beil_space)->required();
    sc_beil->add_option("sheaf", beil_expr)->required();
    sc_beil->add_option("--m", beil_m, "regular point (aligned on products)")
        ->required()
        ->check(CLI::Range(-1000000LL, 1000000LL));
    add_common(sc_beil);

    // verify
    auto* sc_verify = app.add_subcommand("verify", "run consistency suites");
    std::string verify_suite = "all";
    std::vector<std::string> verify_spaces;
    int verify_max_degree = 4;
    sc_verify->add_option("--suite", verify_suite)
        ->check(CLI::IsMember({"thm55", "cor56", "prop49", "prop414", "monotone", "dualsum",
                               "all"}));
    sc_verify->add_option("spaces", verify_spaces, "spaces to check (default P2 P1xP1 P2xP1)");
    sc_verify->add_option("--max-degree", verify_max_degree, "grid half-width")
        ->check(CLI::Range(1, 6));
    add_common(sc_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sc_cohom->parsed())
            return run_cohom(cohom_space, cohom_expr, cohom_manifest, out);
        if (sc_euler->parsed())
            return run_euler(euler_space, euler_a, euler_b, out);
        if (sc_blocks->parsed())
            return run_blocks(blocks_space, blocks_index, out);
        if (sc_gram->parsed())
            return run_gram(gram_space, gram_window, out);
        if (sc_dual->parsed())
            return run_dual(dual_space, dual_k, dual_k0, dual_window, out);
        if (sc_reg->parsed())
            return run_reg(reg_space, reg_kind, reg_expr, reg_at, reg_base, reg_manifest, out);
        if (sc_beil->parsed())
            return run_beilinson(beil_space, beil_expr, beil_m, out);
        if (sc_verify->parsed())
            return run_verify(verify_suite, verify_spaces, verify_max_degree, out);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SearchCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
