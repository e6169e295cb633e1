#pragma once

#include "loopqkz/rational.hpp"

#include <ostream>
#include <string>

namespace loopqkz {

/// Elements a0 + a1*eps of Q(eps), eps a primitive sixth root of unity (eps^2 = eps - 1).
/// eps plays the role of q^{1/2} at the stochastic point; omega = eps^2 is q itself.
class Cyclotomic6 {
public:
    Cyclotomic6() = default;
    Cyclotomic6(int v) : a0_(v) {}
    Cyclotomic6(long v) : a0_(v) {}
    Cyclotomic6(BigRational a0, BigRational a1 = 0) : a0_(std::move(a0)), a1_(std::move(a1)) {}

    static Cyclotomic6 epsilon() { return {0, 1}; }
    static Cyclotomic6 omega() { return {-1, 1}; }

    const BigRational& a0() const noexcept { return a0_; }
    const BigRational& a1() const noexcept { return a1_; }

    bool is_zero() const { return sgn(a0_) == 0 && sgn(a1_) == 0; }

    /// Complex conjugate; conj(eps) = eps^{-1} = 1 - eps.
    Cyclotomic6 conj() const { return {a0_ + a1_, -a1_}; }

    /// Field norm a0^2 + a0 a1 + a1^2, always a nonnegative rational.
    BigRational norm() const { return a0_ * a0_ + a0_ * a1_ + a1_ * a1_; }

    Cyclotomic6& operator+=(const Cyclotomic6& o)
    {
        a0_ += o.a0_;
        a1_ += o.a1_;
        return *this;
    }
    Cyclotomic6& operator-=(const Cyclotomic6& o)
    {
        a0_ -= o.a0_;
        a1_ -= o.a1_;
        return *this;
    }
    Cyclotomic6& operator*=(const Cyclotomic6& o)
    {
        BigRational c0 = a0_ * o.a0_ - a1_ * o.a1_;
        BigRational c1 = a0_ * o.a1_ + a1_ * o.a0_ + a1_ * o.a1_;
        a0_ = std::move(c0);
        a1_ = std::move(c1);
        return *this;
    }
    Cyclotomic6& operator/=(const Cyclotomic6& o) { return *this *= o.inverse(); }

    Cyclotomic6 inverse() const
    {
        BigRational n = norm();
        if (sgn(n) == 0) throw std::domain_error("zero denominator");
        return {(a0_ + a1_) / n, -a1_ / n};
    }

    friend Cyclotomic6 operator+(Cyclotomic6 a, const Cyclotomic6& b) { return a += b; }
    friend Cyclotomic6 operator-(Cyclotomic6 a, const Cyclotomic6& b) { return a -= b; }
    friend Cyclotomic6 operator*(Cyclotomic6 a, const Cyclotomic6& b) { return a *= b; }
    friend Cyclotomic6 operator/(Cyclotomic6 a, const Cyclotomic6& b) { return a /= b; }
    friend Cyclotomic6 operator-(const Cyclotomic6& a) { return {-a.a0_, -a.a1_}; }
    friend bool operator==(const Cyclotomic6& a, const Cyclotomic6& b)
    {
        return a.a0_ == b.a0_ && a.a1_ == b.a1_;
    }
    friend bool operator!=(const Cyclotomic6& a, const Cyclotomic6& b) { return !(a == b); }

    std::string str() const
    {
        if (sgn(a1_) == 0) return a0_.get_str();
        std::string s = sgn(a0_) == 0 ? std::string() : a0_.get_str();
        if (sgn(a1_) > 0 && !s.empty()) s += "+";
        if (a1_ == 1) return s + "eps";
        if (a1_ == -1) return s + "-eps";
        return s + a1_.get_str() + "*eps";
    }

    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic6& x) { return os << x.str(); }

private:
    BigRational a0_;
    BigRational a1_;
};

inline bool is_zero(const Cyclotomic6& x) { return x.is_zero(); }
inline Cyclotomic6 inverse(const Cyclotomic6& x) { return x.inverse(); }
inline std::string to_string(const Cyclotomic6& x) { return x.str(); }

}  // namespace loopqkz
