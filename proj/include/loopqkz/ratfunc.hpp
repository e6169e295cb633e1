#pragma once

#include "loopqkz/laurent.hpp"

#include <string>

namespace loopqkz {

/// Fraction of Laurent polynomials. The denominator is kept free of monomial
/// factors with leading coefficient 1, and the fraction collapses to a
/// polynomial whenever the denominator divides the numerator. No multivariate
/// gcd is taken, so equality is decided by cross-multiplication.
template <class C>
class RatScalar {
public:
    using Poly = MultiLaurent<C>;

    RatScalar() : den_(Poly::constant(nullptr, C(1))) {}
    RatScalar(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.universe(), C(1))) {}
    RatScalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatScalar constant(const UniversePtr& u, C c) { return RatScalar(Poly::constant(u, std::move(c))); }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    const UniversePtr& universe() const noexcept { return num_.universe() ? num_.universe() : den_.universe(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    /// The numerator as a polynomial; throws unless the denominator is 1.
    const Poly& polynomial() const
    {
        if (!is_polynomial()) throw std::domain_error("not a Laurent polynomial");
        return num_;
    }

    RatScalar inverse() const
    {
        if (num_.is_zero()) throw std::domain_error("zero denominator");
        return RatScalar(den_, num_);
    }

    friend RatScalar operator+(const RatScalar& a, const RatScalar& b) { return combine(a, b, false); }
    friend RatScalar operator-(const RatScalar& a, const RatScalar& b) { return combine(a, b, true); }
    friend RatScalar operator*(const RatScalar& a, const RatScalar& b)
    {
        if (a.is_zero() || b.is_zero()) return RatScalar(Poly(a.universe() ? a.universe() : b.universe()));
        return RatScalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatScalar operator/(const RatScalar& a, const RatScalar& b) { return a * b.inverse(); }
    friend RatScalar operator-(const RatScalar& a)
    {
        RatScalar r = a;
        r.num_ = -r.num_;
        return r;
    }
    RatScalar& operator+=(const RatScalar& o) { return *this = *this + o; }
    RatScalar& operator-=(const RatScalar& o) { return *this = *this - o; }
    RatScalar& operator*=(const RatScalar& o) { return *this = *this * o; }
    RatScalar& operator/=(const RatScalar& o) { return *this = *this / o; }

    friend bool operator==(const RatScalar& a, const RatScalar& b)
    {
        if (a.den_ == b.den_) return a.num_ == b.num_;
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatScalar& a, const RatScalar& b) { return !(a == b); }

private:
    static RatScalar combine(const RatScalar& a, const RatScalar& b, bool subtract)
    {
        RatScalar r;
        if (a.den_ == b.den_) {
            r.num_ = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
            r.den_ = a.den_;
        } else if (auto k = b.den_.exact_quotient(a.den_)) {
            r.num_ = subtract ? a.num_ * *k - b.num_ : a.num_ * *k + b.num_;
            r.den_ = b.den_;
        } else if (auto k2 = a.den_.exact_quotient(b.den_)) {
            r.num_ = subtract ? a.num_ - b.num_ * *k2 : a.num_ + b.num_ * *k2;
            r.den_ = a.den_;
        } else {
            r.num_ = subtract ? a.num_ * b.den_ - b.num_ * a.den_ : a.num_ * b.den_ + b.num_ * a.den_;
            r.den_ = a.den_ * b.den_;
        }
        r.normalize();
        return r;
    }

    void normalize()
    {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::constant(den_.universe(), C(1));
            return;
        }
        if (!den_.universe()) {
            num_ *= C(1) / den_.leading_term().coeff;
            den_ = Poly::constant(nullptr, C(1));
            return;
        }
        const std::size_t n = den_.variable_count();
        std::vector<int> shift(n);
        for (std::size_t v = 0; v < n; ++v) shift[v] = -den_.degree_profile(v).first;
        const C lc = den_.leading_term().coeff;
        const Poly unit = Poly::monomial(den_.universe(), C(1) / lc, shift);
        num_ *= unit;
        den_ *= unit;
        if (!den_.is_constant()) {
            if (auto q = num_.exact_quotient(den_)) {
                num_ = std::move(*q);
                den_ = Poly::constant(den_.universe(), C(1));
            }
        }
    }

    Poly num_;
    Poly den_;
};

template <class C>
bool is_zero(const RatScalar<C>& x)
{
    return x.is_zero();
}

template <class C>
RatScalar<C> inverse(const RatScalar<C>& x)
{
    return x.inverse();
}

template <class C>
std::string to_string(const RatScalar<C>& x)
{
    if (x.den().is_constant()) return to_string(x.num());
    return "(" + to_string(x.num()) + ")/(" + to_string(x.den()) + ")";
}

/// Exact substitution of rational-function values for some variables.
/// Unbound variables pass through unchanged.
template <class C>
RatScalar<C> substitute(const MultiLaurent<C>& f, const std::vector<std::pair<std::size_t, RatScalar<C>>>& bindings)
{
    using Poly = MultiLaurent<C>;
    const UniversePtr& u = f.universe();
    if (f.is_zero()) return RatScalar<C>(f);
    // With b_v = n_v / d_v and exponent range [-lo_v, hi_v], every term times
    // D = prod d_v^{hi_v} n_v^{lo_v} is a polynomial in the n_v, d_v.
    struct Bound {
        std::size_t var;
        Poly n, d;
        int lo, hi;
        std::vector<Poly> npow, dpow;
    };
    std::vector<Bound> bs;
    for (const auto& [v, val] : bindings) {
        auto [mn, mx] = f.degree_profile(v);
        Bound b{v, val.num(), val.den(), std::max(0, -mn), std::max(0, mx), {}, {}};
        if (b.lo > 0 && b.n.is_zero()) throw std::domain_error("pole hit");
        const int top = b.lo + b.hi;
        b.npow.push_back(Poly::constant(u, C(1)));
        b.dpow.push_back(Poly::constant(u, C(1)));
        for (int k = 1; k <= top; ++k) {
            b.npow.push_back(b.npow.back() * b.n);
            b.dpow.push_back(b.dpow.back() * b.d);
        }
        bs.push_back(std::move(b));
    }
    Poly num(u);
    Poly den = Poly::constant(u, C(1));
    for (const auto& b : bs) den *= b.dpow[b.hi] * b.npow[b.lo];
    for (const auto& t : f.terms()) {
        detail::Key key = t.key;
        for (const auto& b : bs) key = detail::with_exponent(key, b.var, 0);
        Poly piece = Poly::from_terms(u, {{key, t.coeff}});
        for (const auto& b : bs) {
            const int e = detail::exponent(t.key, b.var);
            piece *= b.npow[e + b.lo] * b.dpow[b.hi - e];
        }
        num += piece;
    }
    return RatScalar<C>(std::move(num), std::move(den));
}

}  // namespace loopqkz
