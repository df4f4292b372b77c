#pragma once

#include <vector>

#include "blockreg/factor.hpp"
#include "blockreg/space.hpp"

namespace blockreg {

// An external tensor product F_1 x ... x F_r with F_i a FactorSheaf on the
// i-th factor of the ambient space.
class BoxProduct {
public:
    explicit BoxProduct(std::vector<FactorSheaf> factors);

    static BoxProduct line_bundle(const Space& space, const MultiDegree& d);

    int factors() const { return static_cast<int>(fs_.size()); }
    const FactorSheaf& factor(int i) const { return fs_[i]; }
    const std::vector<FactorSheaf>& factor_list() const { return fs_; }

    bool is_line_bundle() const;
    MultiDegree degree() const; // line bundles only

    BoxProduct dual() const;
    BoxProduct twisted(const MultiDegree& t) const;

    friend auto operator<=>(const BoxProduct&, const BoxProduct&) = default;

private:
    std::vector<FactorSheaf> fs_;
};

std::string to_string(const BoxProduct& b);

// A finite direct sum of BoxProducts with positive multiplicities, kept in a
// normalized form (terms sorted, duplicates merged). Empty = the zero sheaf.
class SplitSheaf {
public:
    struct Term {
        Int mult;
        BoxProduct box;
    };

    SplitSheaf() = default;
    static SplitSheaf zero() { return {}; }

    void add(Int mult, const BoxProduct& box);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool all_line_bundles() const;

    SplitSheaf twisted(const MultiDegree& t) const;
    SplitSheaf direct_sum(const SplitSheaf& other) const;

    bool operator==(const SplitSheaf& o) const;

private:
    std::vector<Term> terms_;
};

std::string to_string(const SplitSheaf& f);

// Throws std::invalid_argument unless the box has one factor per projective
// factor of the space, with matching dimensions.
void check_arity(const Space& space, const BoxProduct& box);

struct CohomologyTable {
    std::vector<Int> h; // h[q], q = 0..dim

    explicit CohomologyTable(int dim = 0) : h(dim + 1, 0) {}

    int top() const { return static_cast<int>(h.size()) - 1; }
    Int operator[](int q) const
    {
        return (q < 0 || q > top()) ? 0 : h[q];
    }

    bool is_zero() const;
    bool zero_in_positive_degrees() const;
    Int euler() const;

    void accumulate(Int mult, int q, Int value);

    bool operator==(const CohomologyTable&) const = default;
};

CohomologyTable cohomology(const Space& space, const BoxProduct& box);
CohomologyTable cohomology(const Space& space, const SplitSheaf& sheaf);

// Ext^q(A, F) for F a direct sum of line bundles, computed as the cohomology
// of A^* tensored into each term.
CohomologyTable ext_table(const Space& space, const BoxProduct& a, const SplitSheaf& f);

// chi(O(a), O(b)) = prod_i binom(b_i - a_i + n_i, n_i).
Int euler_pairing(const Space& space, const MultiDegree& a, const MultiDegree& b);

Int euler_char(const Space& space, const SplitSheaf& sheaf);

} // namespace blockreg
