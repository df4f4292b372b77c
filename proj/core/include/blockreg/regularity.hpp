#pragma once

#include <optional>
#include <vector>

#include "blockreg/blocks.hpp"

namespace blockreg {

// Evidence for a failed vanishing condition: the test object paired against
// the sheaf, the cohomological degree, and the nonzero dimension found there.
struct Witness {
    BoxProduct object;
    int q;
    Int dim;
};

// Outcome of a yes/no regularity test. Witnesses are nonempty exactly when
// the verdict is negative.
struct BoolVerdict {
    bool value = false;
    std::vector<Witness> witnesses;

    explicit operator bool() const { return value; }
};

// Least value of a regularity search. neg_infinity marks the zero sheaf.
// boundary holds witnesses showing failure one step below the reported value.
struct RegValue {
    bool neg_infinity = false;
    Int value = 0;
    std::vector<Witness> boundary;
};

// Result of the aligned search on a product: value = k(d+1) - d is the least
// aligned regular point; the exact regularity lies in (interval_gt, value].
struct AlignedRegValue {
    bool neg_infinity = false;
    Int value = 0;
    Int k = 0;
    Int interval_gt = 0;
    std::vector<Witness> boundary;
};

struct SearchLimits {
    int max_steps = 512;
};

// ---- Castelnuovo-Mumford regularity on a single P^n -----------------------

// H^i(F(m - i)) = 0 for every i >= 1.
BoolVerdict cm_regular(int n, const SplitSheaf& f, Int m);
RegValue cm_regularity(int n, const SplitSheaf& f, SearchLimits limits = {});

// ---- Regularity against the window family on P^n --------------------------

// H^q(Om^{-p}(m - p) tensor F) = 0 for q > 0 and -n <= p <= 0. Agrees with
// cm_regular for split sheaves.
BoolVerdict block_regular_pn(int n, const SplitSheaf& f, Int m);
RegValue block_regularity_pn(int n, const SplitSheaf& f, SearchLimits limits = {});

// ---- Multigraded (Hoffman-Wang) regularity ---------------------------------

struct StSet {
    int i;
    MultiDegree base;
    std::vector<MultiDegree> members;
};

// Defining twist sets: for i >= 1 all l with sum(l - base) = -(r-1) - i and
// every component below base; for i <= 0 all l with sum(l - base) = -i and no
// component below base.
StSet st_set(const Space& space, int i, const MultiDegree& base);

// h^i(F(l)) = 0 for every i in [1, d] and every l in st_set(i, base).
BoolVerdict hw_regular(const Space& space, const SplitSheaf& f, const MultiDegree& base);

// Least t such that F is regular at base (t, ..., t).
RegValue hw_min_diagonal(const Space& space, const SplitSheaf& f, SearchLimits limits = {});

// ---- Regularity against aligned dual windows on a product ------------------

// Tests m = k(d+1) - d: H^q vanishing for q > 0 against every member of
// aligned_window_dual(-k) paired with F.
BoolVerdict block_regular_aligned(const Space& space, const SplitSheaf& f, Int k);
AlignedRegValue block_regularity_aligned(const Space& space, const SplitSheaf& f,
                                         SearchLimits limits = {});

// ---- Cross-checks between the notions --------------------------------------

// Multigraded regularity at base 0 must coincide with the aligned window test
// at k = 0.
struct EquivalenceCheck {
    bool agree = false;
    bool hw_value = false;
    bool block_value = false;
    std::vector<Witness> hw_witnesses;
    std::vector<Witness> block_witnesses;
};

EquivalenceCheck hw_block_equivalence(const Space& space, const SplitSheaf& f);

// Transfer bounds in both directions between the aligned-window value and a
// multigraded regularity base.
struct TransferCheck {
    bool pass = false;
    bool from_block_pass = false; // aligned value => multigraded bound
    bool from_hw_pass = false;    // multigraded value => aligned bound
    Int block_value = 0;          // least aligned regular point
    MultiDegree hw_bound;         // multigraded base implied by block_value
    Int hw_diagonal = 0;          // least diagonal multigraded base
    Int block_bound = 0;          // aligned point implied by hw_diagonal
    bool skipped = false;         // zero sheaf
};

TransferCheck regularity_transfer_check(const Space& space, const SplitSheaf& f,
                                        SearchLimits limits = {});

// If F is regular at the given point, it stays regular one step up (step 1 on
// P^n, one aligned period on products).
BoolVerdict monotonicity_step_check(const Space& space, const SplitSheaf& f, Int at);

struct DirectSumCheck {
    bool pass = false;
    std::optional<Int> reg_f, reg_g, reg_sum; // nullopt = -infinity
};

// Regularity of F + G must be max(reg F, reg G); exact value on P^n, least
// aligned point on products.
DirectSumCheck direct_sum_check(const Space& space, const SplitSheaf& f, const SplitSheaf& g,
                                SearchLimits limits = {});

// ---- Resolution terms -------------------------------------------------------

// The term in homological degree p of the resolution of an m-regular F:
// a sum of line bundles with multiplicities.
struct BeilinsonTerm {
    int p; // in [-d, 0]
    std::vector<std::pair<MultiDegree, Int>> summands;
};

// For r = 1 any m with F m-regular; for products m must be aligned. The
// alternating sum of the terms equals [F] in K0.
std::vector<BeilinsonTerm> beilinson_terms(const Space& space, const SplitSheaf& f, Int m);

} // namespace blockreg
