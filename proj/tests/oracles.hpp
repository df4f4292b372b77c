#pragma once

// Independent reference computations used only by tests. Everything here is
// deliberately written against different identities than the library code so
// the two sides can disagree when one is wrong.

#include <map>
#include <random>
#include <vector>

#include "blockreg/blocks.hpp"
#include "blockreg/sheaf.hpp"

namespace oracles {

using blockreg::Int;

// chi(O(k)) on P^n as a polynomial binomial.
inline Int chi_line(int n, int k)
{
    return blockreg::binom(Int(k) + n, n);
}

// chi(Om^p(k)) on P^n from the exterior powers of the cotangent sequence:
// chi(Om^p(k)) = binom(n+1, p) chi(O(k-p)) - chi(Om^{p-1}(k)).
inline Int chi_recursion(int n, int p, int k)
{
    if (p == 0)
        return chi_line(n, k);
    return blockreg::binom(n + 1, p) * chi_line(n, k - p) - chi_recursion(n, p - 1, k);
}

// Künneth by direct convolution of full per-factor tables, not relying on the
// single-degree structure.
inline std::vector<Int> kunneth_convolve(const blockreg::Space& space,
                                         const blockreg::BoxProduct& box)
{
    std::vector<Int> total{1};
    for (int i = 0; i < box.factors(); ++i) {
        std::vector<Int> factor = blockreg::bott_cohomology(box.factor(i));
        std::vector<Int> next(total.size() + factor.size() - 1, 0);
        for (size_t a = 0; a < total.size(); ++a)
            for (size_t b = 0; b < factor.size(); ++b)
                next[a + b] += total[a] * factor[b];
        total = std::move(next);
    }
    total.resize(space.dim() + 1, 0);
    return total;
}

// chi of a line bundle pair through cohomology tables rather than binomials.
inline Int chi_pair_by_cohomology(const blockreg::Space& space, const blockreg::MultiDegree& a,
                                  const blockreg::MultiDegree& b)
{
    auto table = blockreg::cohomology(space, blockreg::BoxProduct::line_bundle(space, b - a));
    return table.euler();
}

// Deterministic random split sheaves of line bundles.
struct SheafGen {
    std::mt19937 rng;

    explicit SheafGen(unsigned seed) : rng(seed) {}

    int uniform(int lo, int hi)
    {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    blockreg::SplitSheaf line_bundle_sum(const blockreg::Space& space, int max_terms,
                                         int degree_bound)
    {
        blockreg::SplitSheaf f;
        int terms = uniform(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            blockreg::MultiDegree d;
            for (int i = 0; i < space.factors(); ++i)
                d.a.push_back(uniform(-degree_bound, degree_bound));
            f.add(uniform(1, 3), blockreg::BoxProduct::line_bundle(space, d));
        }
        return f;
    }
};

} // namespace oracles
