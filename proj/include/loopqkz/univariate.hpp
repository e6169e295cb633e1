#pragma once

#include "loopqkz/rational.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace loopqkz {

/// Dense univariate polynomial c[0] + c[1] x + ... over a field C.
template <class C>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(C c0)
    {
        coeffs_.push_back(std::move(c0));
        trim();
    }
    Polynomial(long v) : Polynomial(C(v)) {}
    explicit Polynomial(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial x() { return Polynomial(std::vector<C>{C(0), C(1)}); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const C> coeffs() const noexcept { return coeffs_; }

    C coeff(int k) const
    {
        return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : C(0);
    }
    const C& leading() const
    {
        if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero");
        return coeffs_.back();
    }

    C operator()(const C& at) const
    {
        C acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    Polynomial derivative() const
    {
        std::vector<C> d;
        for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * C(static_cast<long>(k)));
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        std::vector<C> c(std::max(a.coeffs_.size(), b.coeffs_.size()), C(0));
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a) { return a * Polynomial(C(-1)); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> c(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(c));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Euclidean division; returns {quotient, remainder}.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const
    {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        std::vector<C> rem = coeffs_;
        const int dd = d.degree();
        std::vector<C> quot(std::max(0, degree() - dd + 1), C(0));
        for (int k = degree(); k >= dd; --k) {
            if (is_zero_c(rem[k])) continue;
            C f = rem[k] / d.leading();
            quot[k - dd] = f;
            for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.coeffs_[j];
        }
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    Polynomial monic() const
    {
        if (is_zero()) return {};
        C inv = C(1) / leading();
        std::vector<C> c = coeffs_;
        for (auto& x : c) x *= inv;
        return Polynomial(std::move(c));
    }

    /// Lagrange interpolation through (xs[k], ys[k]).
    static Polynomial interpolate(std::span<const C> xs, std::span<const C> ys)
    {
        if (xs.size() != ys.size()) throw std::invalid_argument("interpolation size mismatch");
        Polynomial result;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            Polynomial basis(C(1));
            C denom(1);
            for (std::size_t j = 0; j < xs.size(); ++j) {
                if (j == i) continue;
                basis = basis * Polynomial(std::vector<C>{C(-xs[j]), C(1)});
                denom *= xs[i] - xs[j];
            }
            if (is_zero_c(denom)) throw std::invalid_argument("repeated interpolation node");
            result = result + basis * Polynomial(C(ys[i] / denom));
        }
        return result;
    }

    std::string str(const std::string& var = "a") const
    {
        if (is_zero()) return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            const C& c = coeffs_[k];
            if (is_zero_c(c)) continue;
            std::string cs = to_string(c);
            std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
            std::string piece;
            if (mono.empty())
                piece = cs;
            else if (cs == "1")
                piece = mono;
            else if (cs == "-1")
                piece = "-" + mono;
            else
                piece = cs + "*" + mono;
            if (!s.empty() && piece[0] != '-') s += "+";
            s += piece;
        }
        return s;
    }

private:
    static bool is_zero_c(const C& c) { return loopqkz::is_zero(c); }

    void trim()
    {
        while (!coeffs_.empty() && is_zero_c(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<C> coeffs_;
};

template <class C>
Polynomial<C> gcd(Polynomial<C> a, Polynomial<C> b)
{
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class C>
bool is_zero(const Polynomial<C>& p)
{
    return p.is_zero();
}

template <class C>
std::string to_string(const Polynomial<C>& p)
{
    return p.str("t");
}

using RationalPolynomial = Polynomial<BigRational>;

}  // namespace loopqkz
