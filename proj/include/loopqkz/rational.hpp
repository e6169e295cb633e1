#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace loopqkz {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) throw std::domain_error("zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p" or "p/q" with optional sign.
inline BigRational parse_rational(std::string_view text)
{
    std::string s(text);
    BigRational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
    if (r.get_den() == 0) throw std::domain_error("zero denominator");
    r.canonicalize();
    return r;
}

inline bool is_zero(const BigRational& x) { return sgn(x) == 0; }
inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(long long x) { return x == 0; }

inline BigRational inverse(const BigRational& x)
{
    if (is_zero(x)) throw std::domain_error("zero denominator");
    return BigRational(1) / x;
}

inline std::string to_string(const BigRational& x) { return x.get_str(); }

template <class T>
T power(const T& x, int e)
{
    if (e < 0) return power(inverse(x), -e);
    T result(1);
    T base = x;
    for (unsigned n = static_cast<unsigned>(e); n != 0; n >>= 1) {
        if (n & 1U) result *= base;
        if (n > 1) base *= base;
    }
    return result;
}

inline BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace loopqkz
