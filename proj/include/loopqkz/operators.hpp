#pragma once

#include "loopqkz/link_pattern.hpp"
#include "loopqkz/report.hpp"
#include "loopqkz/scalar.hpp"

#include <cstdint>
#include <optional>
#include <type_traits>
#include <stdexcept>
#include <vector>

namespace loopqkz {

/// Components in the order of a PatternBasis.
template <class T>
using StateVector = std::vector<T>;

// Exact division: field division, or exact Laurent division for polynomial
// components (which throws when the quotient is not a Laurent polynomial).
template <class T>
struct is_laurent : std::false_type {};
template <class C>
struct is_laurent<MultiLaurent<C>> : std::true_type {};

// Both arguments are non-deduced so GMP expression templates convert to T.
template <class T>
T exact_div(const std::type_identity_t<T>& a, const std::type_identity_t<T>& b)
{
    if constexpr (is_laurent<T>::value)
        return a.divide_exact(b);
    else
        return a / b;
}

/// q, zeta and an optional loop-weight override (default -q - 1/q).
template <class T>
struct SpectralParameters {
    T q;
    T zeta;
    std::optional<T> tau_override;

    T one() const { return constant_like(q, 1); }
    T zero() const { return constant_like(q, 0); }
    T q_inv() const { return exact_div<T>(one(), q); }
    T tau() const { return tau_override ? *tau_override : zero() - q - q_inv(); }
};

template <class T>
StateVector<T> apply_generator(const PatternBasis& basis, const TLGenerator& g, const StateVector<T>& v, const T& tau)
{
    StateVector<T> out(v.size(), constant_like(tau, 0));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (is_zero(v[k])) continue;
        const auto& im = basis.image(g, k);
        T w = v[k];
        for (int l = 0; l < im.loops; ++l) w = w * tau;
        out[im.target] = out[im.target] + w;
    }
    return out;
}

/// R_i(z) = [(q z - 1/q) I + (z - 1) e_i] / (q - z/q).
template <class T>
StateVector<T> apply_R(const PatternBasis& basis, const SpectralParameters<T>& p, int i, const T& z,
                       const StateVector<T>& v)
{
    const T qi = p.q_inv();
    const T den = p.q - z * qi;
    if (is_zero(den)) throw std::domain_error("R-matrix pole");
    const T a = p.q * z - qi;
    const T b = z - p.one();
    const StateVector<T> ev = apply_generator(basis, TLGenerator::e(i), v, p.tau());
    StateVector<T> out;
    out.reserve(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out.push_back(exact_div<T>(a * v[k] + b * ev[k], den));
    return out;
}

/// K(z) = [(z - q^2/zeta)(z - zeta/q) I + (1 - q)(1 - z^2) f] / [(q z - zeta/q)(z - q/zeta)].
template <class T>
StateVector<T> apply_K(const PatternBasis& basis, const SpectralParameters<T>& p, const T& z, const StateVector<T>& v)
{
    const T one = p.one();
    const T qi = p.q_inv();
    const T zi = exact_div<T>(one, p.zeta);
    const T den = (p.q * z - p.zeta * qi) * (z - p.q * zi);
    if (is_zero(den)) throw std::domain_error("K-matrix pole");
    const T a = (z - p.q * p.q * zi) * (z - p.zeta * qi);
    const T b = (one - p.q) * (one - z * z);
    const StateVector<T> fv = apply_generator(basis, TLGenerator::f(), v, p.tau());
    StateVector<T> out;
    out.reserve(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out.push_back(exact_div<T>(a * v[k] + b * fv[k], den));
    return out;
}

/// One factor of a scattering word: R_site(arg), or K(arg) when site == 0.
template <class T>
struct WordFactor {
    int site;
    T arg;
};

/// The scattering word for particle i (1-based), leftmost factor first.
template <class T>
std::vector<WordFactor<T>> scattering_word(int i, const std::vector<T>& z, const T& s)
{
    const int L = static_cast<int>(z.size());
    auto Z = [&](int k) -> const T& { return z[static_cast<std::size_t>(k - 1)]; };
    std::vector<WordFactor<T>> w;
    for (int j = i; j <= L - 1; ++j) w.push_back({j, exact_div<T>(s * Z(i), Z(j + 1))});
    w.push_back({0, exact_div<T>(constant_like(s, 1), s * Z(i))});
    for (int j = L - 1; j >= i; --j) w.push_back({j, T(s * Z(j + 1) * Z(i))});
    for (int j = i - 1; j >= 1; --j) w.push_back({j, T(s * Z(j) * Z(i))});
    for (int j = 1; j <= i - 1; ++j) w.push_back({j, exact_div<T>(Z(i), Z(j))});
    return w;
}

/// Applies a word right to left.
template <class T>
StateVector<T> apply_word(const PatternBasis& basis, const SpectralParameters<T>& p,
                          const std::vector<WordFactor<T>>& word, StateVector<T> v)
{
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        v = it->site == 0 ? apply_K(basis, p, it->arg, v) : apply_R(basis, p, it->site, it->arg, v);
    return v;
}

template <class T>
StateVector<T> apply_scattering(const PatternBasis& basis, const SpectralParameters<T>& p, int i,
                                const std::vector<T>& z, const T& s, const StateVector<T>& v)
{
    if (static_cast<int>(z.size()) != basis.size_L()) throw std::invalid_argument("one spectral value per site");
    return apply_word(basis, p, scattering_word(i, z, s), v);
}

template <class T>
StateVector<T> unit_vector(const PatternBasis& basis, std::size_t k, const T& like)
{
    StateVector<T> v(basis.dimension(), constant_like(like, 0));
    v[k] = constant_like(like, 1);
    return v;
}

/// Options for the integrability verifiers.
struct IntegrabilityOptions {
    int samples = 20;
    std::uint64_t seed = 1;
    /// Adds this integer to the loop weight (negative control when nonzero).
    long tau_shift = 0;
};

/// Unitarity, Yang-Baxter, reflection and far-commutation identities, proved
/// symbolically over Q(z, w, q^{1/2}, zeta). Feasible for L <= 3.
Report verify_integrability_symbolic(int L, long tau_shift = 0);

/// The same identities at seeded random rational points.
Report verify_integrability_sampled(int L, const IntegrabilityOptions& opt);

/// Scattering-matrix exchange relation at random points with generic s, and
/// plain commutation at q = exp(2 i pi/3), s = 1.
Report verify_scattering_commutation(int L, const IntegrabilityOptions& opt);

/// At q = exp(2 i pi/3) the all-ones covector is fixed by R_i(z), K(z) and S_i.
Report verify_stochastic_covector(int L, const IntegrabilityOptions& opt);

}  // namespace loopqkz
