#pragma once

#include <stdexcept>
#include <string>

namespace blockreg {

using Int = long long;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arithmetic left the representable range. All arithmetic in this library is
// exact; overflow is a hard error, never a wrap.
class OverflowError : public Error {
public:
    using Error::Error;
};

// A regularity search exceeded its step cap without bracketing the answer.
class SearchCapError : public Error {
public:
    using Error::Error;
};

inline Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

// Binomial coefficient binom(a, k) as the polynomial a(a-1)...(a-k+1)/k!,
// defined for every integer a and k >= 0; zero for k < 0. For 0 <= a < k this
// is 0, for negative a it carries sign (-1)^k binom(k-a-1, k).
inline Int binom(Int a, Int k)
{
    if (k < 0)
        return 0;
    Int r = 1;
    for (Int i = 1; i <= k; ++i) {
        r = checked_mul(r, checked_sub(a, k - i));
        // r accumulates binom(a-k+i, i) * i! / i! step by step; each partial
        // product of i consecutive integers is divisible by i.
        r /= i;
    }
    return r;
}

} // namespace blockreg
