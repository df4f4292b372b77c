#include "blockreg/regularity.hpp"

#include <algorithm>
#include <functional>

namespace blockreg {

namespace {

Int floordiv(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

Int ceildiv(Int a, Int b)
{
    return floordiv(a + b - 1, b);
}

void require_line_bundles(const SplitSheaf& f)
{
    if (!f.all_line_bundles())
        throw std::invalid_argument("regularity tests take sums of line bundles");
}

// Largest -deg over all terms and factors; the exact answer for a single line
// bundle per factor, so a good place to start searching.
Int degree_seed(const SplitSheaf& f)
{
    Int seed = 0;
    bool first = true;
    for (const SplitSheaf::Term& t : f.terms()) {
        MultiDegree d = t.box.degree();
        for (int i = 0; i < d.size(); ++i) {
            Int v = -Int(d[i]);
            if (first || v > seed)
                seed = v;
            first = false;
        }
    }
    return seed;
}

// Least value where the monotone predicate turns true: expand a bracket
// geometrically around the seed, then bisect. Every predicate call costs one
// step against the cap.
RegValue search_least(const std::function<BoolVerdict(Int)>& regular_at, Int seed,
                      SearchLimits limits)
{
    int steps = limits.max_steps;
    auto eval = [&](Int m) {
        if (steps-- <= 0)
            throw SearchCapError("regularity search exceeded "
                                 + std::to_string(limits.max_steps) + " steps");
        return regular_at(m);
    };

    Int lo, hi; // invariant: !regular(lo), regular(hi)
    if (eval(seed)) {
        hi = seed;
        Int gap = 1;
        for (;;) {
            lo = hi - gap;
            if (!eval(lo))
                break;
            hi = lo;
            gap = checked_mul(gap, 2);
        }
    } else {
        lo = seed;
        Int gap = 1;
        for (;;) {
            hi = lo + gap;
            if (eval(hi))
                break;
            lo = hi;
            gap = checked_mul(gap, 2);
        }
    }
    while (hi - lo > 1) {
        Int mid = lo + (hi - lo) / 2;
        if (eval(mid))
            hi = mid;
        else
            lo = mid;
    }

    RegValue out;
    out.value = hi;
    out.boundary = regular_at(lo).witnesses;
    return out;
}

Space single_factor(int n)
{
    return Space({n});
}

BoxProduct pn_line(int n, Int k)
{
    return BoxProduct({FactorSheaf(n, 0, static_cast<int>(k))});
}

// H^q(box tensor F) for split F: the box twisted into each line-bundle term.
CohomologyTable tensor_cohomology(const Space& space, const BoxProduct& box,
                                  const SplitSheaf& f)
{
    CohomologyTable table(space.dim());
    for (const SplitSheaf::Term& t : f.terms()) {
        CohomologyTable part = cohomology(space, box.twisted(t.box.degree()));
        for (int q = 0; q <= table.top(); ++q)
            table.accumulate(t.mult, q, part.h[q]);
    }
    return table;
}

} // namespace

BoolVerdict cm_regular(int n, const SplitSheaf& f, Int m)
{
    require_line_bundles(f);
    Space space = single_factor(n);
    BoolVerdict verdict{true, {}};
    for (int i = 1; i <= n; ++i) {
        MultiDegree twist({static_cast<int>(m - i)});
        CohomologyTable t = cohomology(space, f.twisted(twist));
        if (t[i] != 0) {
            verdict.value = false;
            verdict.witnesses.push_back({pn_line(n, m - i), i, t[i]});
        }
    }
    return verdict;
}

RegValue cm_regularity(int n, const SplitSheaf& f, SearchLimits limits)
{
    require_line_bundles(f);
    if (f.is_zero())
        return {true, 0, {}};
    return search_least([&](Int m) { return cm_regular(n, f, m); }, degree_seed(f), limits);
}

BoolVerdict block_regular_pn(int n, const SplitSheaf& f, Int m)
{
    require_line_bundles(f);
    Space space = single_factor(n);
    BoolVerdict verdict{true, {}};
    for (int p = -n; p <= 0; ++p) {
        BoxProduct test({FactorSheaf(n, -p, static_cast<int>(m - p))});
        CohomologyTable t = tensor_cohomology(space, test, f);
        for (int q = 1; q <= n; ++q)
            if (t[q] != 0) {
                verdict.value = false;
                verdict.witnesses.push_back({test, q, t[q]});
            }
    }
    return verdict;
}

RegValue block_regularity_pn(int n, const SplitSheaf& f, SearchLimits limits)
{
    require_line_bundles(f);
    if (f.is_zero())
        return {true, 0, {}};
    return search_least([&](Int m) { return block_regular_pn(n, f, m); }, degree_seed(f),
                        limits);
}

StSet st_set(const Space& space, int i, const MultiDegree& base)
{
    if (base.size() != space.factors())
        throw std::invalid_argument("base arity mismatch");
    int r = space.factors();
    StSet out{i, base, {}};

    // Offsets delta = l - base with the defining sum; translate by base at the
    // leaves.
    std::function<void(int, Int, MultiDegree&)> rec = [&](int pos, Int remaining,
                                                          MultiDegree& delta) {
        if (pos == r) {
            if (remaining == 0)
                out.members.push_back(base + delta);
            return;
        }
        if (i >= 1) {
            // components strictly below base; bounded by the remaining sum
            for (Int v = remaining + (r - 1 - pos); v <= -1; ++v) {
                delta[pos] = static_cast<int>(v);
                rec(pos + 1, remaining - v, delta);
            }
        } else {
            for (Int v = 0; v <= remaining; ++v) {
                delta[pos] = static_cast<int>(v);
                rec(pos + 1, remaining - v, delta);
            }
        }
    };

    MultiDegree delta;
    delta.a.assign(r, 0);
    Int total = i >= 1 ? -Int(r - 1) - i : -Int(i);
    rec(0, total, delta);
    std::sort(out.members.begin(), out.members.end());
    return out;
}

BoolVerdict hw_regular(const Space& space, const SplitSheaf& f, const MultiDegree& base)
{
    require_line_bundles(f);
    if (base.size() != space.factors())
        throw std::invalid_argument("base arity mismatch");
    BoolVerdict verdict{true, {}};
    for (int i = 1; i <= space.dim(); ++i) {
        for (const MultiDegree& l : st_set(space, i, base).members) {
            CohomologyTable t = cohomology(space, f.twisted(l));
            if (t[i] != 0) {
                verdict.value = false;
                verdict.witnesses.push_back({BoxProduct::line_bundle(space, l), i, t[i]});
            }
        }
    }
    return verdict;
}

RegValue hw_min_diagonal(const Space& space, const SplitSheaf& f, SearchLimits limits)
{
    require_line_bundles(f);
    if (f.is_zero())
        return {true, 0, {}};
    auto at = [&](Int t) {
        MultiDegree base;
        base.a.assign(space.factors(), static_cast<int>(t));
        return hw_regular(space, f, base);
    };
    return search_least(at, degree_seed(f), limits);
}

BoolVerdict block_regular_aligned(const Space& space, const SplitSheaf& f, Int k)
{
    require_line_bundles(f);
    for (const SplitSheaf::Term& t : f.terms())
        check_arity(space, t.box);
    BoolVerdict verdict{true, {}};
    for (const DualBlock& db : aligned_window_dual(space, static_cast<int>(-k))) {
        for (const BoxProduct& dual : db.members) {
            CohomologyTable t = ext_table(space, dual, f);
            for (int q = 1; q <= space.dim(); ++q)
                if (t[q] != 0) {
                    verdict.value = false;
                    verdict.witnesses.push_back({dual.dual(), q, t[q]});
                }
        }
    }
    return verdict;
}

AlignedRegValue block_regularity_aligned(const Space& space, const SplitSheaf& f,
                                         SearchLimits limits)
{
    require_line_bundles(f);
    AlignedRegValue out;
    if (f.is_zero()) {
        out.neg_infinity = true;
        return out;
    }
    Int d = space.dim();
    Int k_seed = ceildiv(degree_seed(f) + d, d + 1);
    RegValue k_result = search_least([&](Int k) { return block_regular_aligned(space, f, k); },
                                     k_seed, limits);
    out.k = k_result.value;
    out.value = out.k * (d + 1) - d;
    out.interval_gt = out.value - (d + 1);
    out.boundary = std::move(k_result.boundary);
    return out;
}

EquivalenceCheck hw_block_equivalence(const Space& space, const SplitSheaf& f)
{
    MultiDegree zero;
    zero.a.assign(space.factors(), 0);
    BoolVerdict hw = hw_regular(space, f, zero);
    BoolVerdict block = block_regular_aligned(space, f, 0);
    EquivalenceCheck out;
    out.hw_value = hw.value;
    out.block_value = block.value;
    out.agree = hw.value == block.value;
    out.hw_witnesses = std::move(hw.witnesses);
    out.block_witnesses = std::move(block.witnesses);
    return out;
}

TransferCheck regularity_transfer_check(const Space& space, const SplitSheaf& f,
                                        SearchLimits limits)
{
    TransferCheck out;
    out.hw_bound.a.assign(space.factors(), 0);
    if (f.is_zero()) {
        out.skipped = true;
        out.pass = out.from_block_pass = out.from_hw_pass = true;
        return out;
    }

    Int d = space.dim();

    // Aligned value => multigraded regularity at ((lambda+2)(n_i+1))_i.
    AlignedRegValue block = block_regularity_aligned(space, f, limits);
    out.block_value = block.value;
    Int lambda = floordiv(block.value - 1, d + 1);
    for (int i = 0; i < space.factors(); ++i)
        out.hw_bound[i] = static_cast<int>((lambda + 2) * (space.dims()[i] + 1));
    out.from_block_pass = hw_regular(space, f, out.hw_bound).value;

    // Multigraded diagonal value => aligned regularity at phi(d+1)+1, itself
    // an aligned point.
    RegValue hw = hw_min_diagonal(space, f, limits);
    out.hw_diagonal = hw.value;
    Int phi = 0;
    for (int i = 0; i < space.factors(); ++i) {
        Int lam = floordiv(hw.value - 1, space.dims()[i] + 1);
        phi = i == 0 ? lam : std::max(phi, lam);
    }
    out.block_bound = phi * (d + 1) + 1;
    out.from_hw_pass = block_regular_aligned(space, f, phi + 1).value;

    out.pass = out.from_block_pass && out.from_hw_pass;
    return out;
}

BoolVerdict monotonicity_step_check(const Space& space, const SplitSheaf& f, Int at)
{
    bool single = space.factors() == 1;
    BoolVerdict here = single ? block_regular_pn(space.dims()[0], f, at)
                              : block_regular_aligned(space, f, at);
    if (!here.value)
        return {true, {}}; // nothing to propagate
    BoolVerdict next = single ? block_regular_pn(space.dims()[0], f, at + 1)
                              : block_regular_aligned(space, f, at + 1);
    if (next.value)
        return {true, {}};
    return {false, std::move(next.witnesses)};
}

DirectSumCheck direct_sum_check(const Space& space, const SplitSheaf& f, const SplitSheaf& g,
                                SearchLimits limits)
{
    auto value_of = [&](const SplitSheaf& s) -> std::optional<Int> {
        if (s.is_zero())
            return std::nullopt;
        if (space.factors() == 1)
            return block_regularity_pn(space.dims()[0], s, limits).value;
        return block_regularity_aligned(space, s, limits).value;
    };

    DirectSumCheck out;
    out.reg_f = value_of(f);
    out.reg_g = value_of(g);
    out.reg_sum = value_of(f.direct_sum(g));

    std::optional<Int> expect;
    if (out.reg_f && out.reg_g)
        expect = std::max(*out.reg_f, *out.reg_g);
    else if (out.reg_f)
        expect = out.reg_f;
    else if (out.reg_g)
        expect = out.reg_g;
    out.pass = out.reg_sum == expect;
    return out;
}

std::vector<BeilinsonTerm> beilinson_terms(const Space& space, const SplitSheaf& f, Int m)
{
    require_line_bundles(f);
    for (const SplitSheaf::Term& t : f.terms())
        check_arity(space, t.box);

    int d = space.dim();
    std::vector<BeilinsonTerm> out;

    if (space.factors() == 1) {
        int n = space.dims()[0];
        if (!block_regular_pn(n, f, m).value)
            throw std::invalid_argument("sheaf is not regular at m = " + std::to_string(m)
                                        + "; the resolution formula needs that");
        for (int p = 0; p >= -n; --p) {
            BoxProduct test({FactorSheaf(n, -p, static_cast<int>(m - p))});
            Int mult = tensor_cohomology(space, test, f)[0];
            BeilinsonTerm term{p, {}};
            if (mult != 0)
                term.summands.emplace_back(MultiDegree({static_cast<int>(-m + p)}), mult);
            out.push_back(std::move(term));
        }
        return out;
    }

    if (((m + d) % (d + 1) + (d + 1)) % (d + 1) != 0)
        throw std::invalid_argument("m = " + std::to_string(m)
                                    + " is not an aligned point (need m = k(d+1) - d)");
    Int k = floordiv(m + d, d + 1);
    if (!block_regular_aligned(space, f, k).value)
        throw std::invalid_argument("sheaf is not regular at m = " + std::to_string(m)
                                    + "; the resolution formula needs that");

    std::vector<DualBlock> duals = aligned_window_dual(space, static_cast<int>(-k));
    for (int p = 0; p >= -d; --p) {
        Block members = helix_block(space, static_cast<int>(-m) + p);
        const DualBlock& db = duals[-p];
        BeilinsonTerm term{p, {}};
        for (size_t s = 0; s < members.members.size(); ++s) {
            Int mult = ext_table(space, db.members[s], f)[0];
            if (mult != 0)
                term.summands.emplace_back(members.members[s], mult);
        }
        out.push_back(std::move(term));
    }
    return out;
}

} // namespace blockreg
