#pragma once

#include <compare>
#include <string>
#include <vector>

#include "blockreg/ints.hpp"

namespace blockreg {

// A multidegree (a_1, ..., a_r), one integer per projective factor.
struct MultiDegree {
    std::vector<int> a;

    MultiDegree() = default;
    explicit MultiDegree(std::vector<int> v) : a(std::move(v)) {}

    int size() const { return static_cast<int>(a.size()); }
    int operator[](int i) const { return a[i]; }
    int& operator[](int i) { return a[i]; }

    friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

    MultiDegree operator+(const MultiDegree& o) const
    {
        MultiDegree r = *this;
        for (int i = 0; i < r.size(); ++i)
            r.a[i] += o.a[i];
        return r;
    }

    MultiDegree operator-(const MultiDegree& o) const
    {
        MultiDegree r = *this;
        for (int i = 0; i < r.size(); ++i)
            r.a[i] -= o.a[i];
        return r;
    }

    MultiDegree operator*(int c) const
    {
        MultiDegree r = *this;
        for (int& x : r.a)
            x *= c;
        return r;
    }

    Int total() const
    {
        Int s = 0;
        for (int x : a)
            s += x;
        return s;
    }
};

std::string to_string(const MultiDegree& d);

// A product of projective spaces P^{n_1} x ... x P^{n_r}.
class Space {
public:
    explicit Space(std::vector<int> dims);

    int factors() const { return static_cast<int>(dims_.size()); }
    int dim() const { return dim_; }
    const std::vector<int>& dims() const { return dims_; }

    // Rank of the Grothendieck group: prod (n_i + 1).
    Int k0_rank() const;

    // Canonical multidegree K = (-n_1-1, ..., -n_r-1).
    MultiDegree canonical() const;

    // (n_1+1, ..., n_r+1) = -K, the twist applied per helix period.
    MultiDegree period_twist() const;

    std::string name() const; // "P2xP1"

    friend auto operator<=>(const Space&, const Space&) = default;

private:
    std::vector<int> dims_;
    int dim_ = 0;
};

} // namespace blockreg
