#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "blockreg/ints.hpp"

namespace blockreg {

// A twisted bundle of differentials Om^p(k) on a single projective space P^n.
// Every sheaf handled per factor is kept in this normal form; wedge powers of
// the tangent bundle enter through wedge_tangent() below.
class FactorSheaf {
public:
    FactorSheaf(int dim, int ext_power, int twist);

    int dim() const { return n_; }
    int ext_power() const { return p_; }
    int twist() const { return k_; }

    bool is_line_bundle() const { return p_ == 0; }

    // (Om^p(k))^* = Om^{n-p}(n+1-k); an involution.
    FactorSheaf dual() const { return {n_, n_ - p_, n_ + 1 - k_}; }

    FactorSheaf twisted(int c) const { return {n_, p_, k_ + c}; }

    friend auto operator<=>(const FactorSheaf&, const FactorSheaf&) = default;

private:
    int n_;
    int p_;
    int k_;
};

// Lambda^p T(k) on P^n in normal form: Om^{n-p}(k+n+1).
FactorSheaf wedge_tangent(int dim, int wedge, int twist);

// The single cohomological degree carrying cohomology, if any. q == -1 means
// every H^q vanishes.
struct FactorCohomology {
    int q = -1;
    Int h = 0;
};

FactorCohomology bott_nonzero(const FactorSheaf& f);

// Full table h^0..h^n. At most one entry is nonzero.
std::vector<Int> bott_cohomology(const FactorSheaf& f);

Int euler_char(const FactorSheaf& f);

// Class of f in K_0(P^n) written on line bundles: a list of (degree,
// coefficient) pairs, via [Lambda^t T] = binom(n+1, t)[O(t)] - [Lambda^{t-1} T].
std::vector<std::pair<int, Int>> k0_line_expansion(const FactorSheaf& f);

std::string to_string(const FactorSheaf& f);

} // namespace blockreg
