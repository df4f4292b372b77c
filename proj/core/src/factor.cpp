#include "blockreg/factor.hpp"

#include <mutex>
#include <unordered_map>

namespace blockreg {

FactorSheaf::FactorSheaf(int dim, int ext_power, int twist)
    : n_(dim), p_(ext_power), k_(twist)
{
    if (dim < 0)
        throw std::invalid_argument("factor dimension must be non-negative");
    if (ext_power < 0 || ext_power > dim)
        throw std::invalid_argument("exterior power out of range [0, " + std::to_string(dim)
                                    + "] on P" + std::to_string(dim));
    if (p_ == n_ && n_ > 0) { // Om^n(k) = O(k-n-1)
        p_ = 0;
        k_ -= n_ + 1;
    }
}

FactorSheaf wedge_tangent(int dim, int wedge, int twist)
{
    if (wedge < 0 || wedge > dim)
        throw std::invalid_argument("tangent wedge power out of range [0, " + std::to_string(dim)
                                    + "] on P" + std::to_string(dim));
    return {dim, dim - wedge, twist + dim + 1};
}

namespace {

struct Key {
    int n, p, k;
    bool operator==(const Key&) const = default;
};

struct KeyHash {
    size_t operator()(const Key& key) const
    {
        size_t h = std::hash<int>{}(key.n);
        h = h * 1000003u ^ std::hash<int>{}(key.p);
        h = h * 1000003u ^ std::hash<int>{}(key.k);
        return h;
    }
};

FactorCohomology compute_bott(int n, int p, int k)
{
    if (k > p)
        return {0, checked_mul(binom(k + n - p, k), binom(k - 1, p))};
    if (k == 0)
        return {p, 1};
    if (k < p - n)
        return {n, checked_mul(binom(p - k, -k), binom(-k - 1, n - p))};
    return {};
}

} // namespace

FactorCohomology bott_nonzero(const FactorSheaf& f)
{
    static std::mutex mutex;
    static std::unordered_map<Key, FactorCohomology, KeyHash> cache;

    Key key{f.dim(), f.ext_power(), f.twist()};
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, compute_bott(key.n, key.p, key.k)).first;
    return it->second;
}

std::vector<Int> bott_cohomology(const FactorSheaf& f)
{
    std::vector<Int> table(f.dim() + 1, 0);
    FactorCohomology nz = bott_nonzero(f);
    if (nz.q >= 0)
        table[nz.q] = nz.h;
    return table;
}

Int euler_char(const FactorSheaf& f)
{
    FactorCohomology nz = bott_nonzero(f);
    if (nz.q < 0)
        return 0;
    return nz.q % 2 == 0 ? nz.h : -nz.h;
}

std::vector<std::pair<int, Int>> k0_line_expansion(const FactorSheaf& f)
{
    if (f.is_line_bundle())
        return {{f.twist(), 1}};

    int n = f.dim();
    int t = n - f.ext_power(); // f = Lambda^t T(f.twist() - n - 1)
    int base = f.twist() - n - 1;

    if (t == 0) // Om^n(k) = O(k-n-1)
        return {{base, 1}};

    // coeffs[j] multiplies [O(j)] in [Lambda^t T], j = 0..t.
    std::vector<Int> coeffs(t + 1, 0);
    coeffs[0] = 1;
    for (int s = 1; s <= t; ++s) {
        for (int j = 0; j < s; ++j)
            coeffs[j] = checked_mul(coeffs[j], -1);
        coeffs[s] = binom(n + 1, s);
    }

    std::vector<std::pair<int, Int>> out;
    out.reserve(t + 1);
    for (int j = 0; j <= t; ++j)
        out.emplace_back(j + base, coeffs[j]);
    return out;
}

std::string to_string(const FactorSheaf& f)
{
    if (f.is_line_bundle())
        return "O(" + std::to_string(f.twist()) + ")";
    return "Om(" + std::to_string(f.ext_power()) + "," + std::to_string(f.twist()) + ")";
}

} // namespace blockreg
