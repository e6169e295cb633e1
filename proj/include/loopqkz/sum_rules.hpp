#pragma once

#include "loopqkz/cyclotomic6.hpp"
#include "loopqkz/laurent.hpp"
#include "loopqkz/qkz.hpp"
#include "loopqkz/report.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace loopqkz {

using CyclotomicLaurent = MultiLaurent<Cyclotomic6>;

/// h_j = j + ceil(j/2) - 1 for j = 1..n: 1, 2, 4, 5, 7, 8, ...
std::vector<int> symplectic_exponents(int n);

/// Sum of all components at q = omega, over Q(eps)[z^{+-1}, zeta^{+-1}].
CyclotomicLaurent sum_rule(const QkzSolution<Cyclotomic6>& sol);
/// Generic solution specialised at u = eps, re-expressed over the stochastic universe.
CyclotomicLaurent sum_rule(const QkzSolution<BigRational>& sol);

/// chi_n(x_1..x_n) = det(x_i^{h_j} - x_i^{-h_j}) / det(x_i^j - x_i^{-j}), with x_i the
/// named variables of `universe`. The numerator is expanded and divided exactly by
/// the factored Weyl denominator prod (x_i - 1/x_i) prod_{i<j} (x_j + 1/x_j - x_i - 1/x_i).
template <class C>
MultiLaurent<C> symplectic_char(int n, const UniversePtr& universe, std::span<const std::string> names);

/// The determinant ratio at exact points. Throws "Weyl denominator zero".
template <class T>
T symplectic_char(int n, std::span<const T> points);

/// chi_n(1, ..., 1, zeta) as a Laurent polynomial in the single variable "zeta".
/// The n - 1 coincident rows are replaced by their confluent limit h_j^{2k+1}
/// (odd functions of log x), k = 0..n-2; row factors cancel in the ratio.
RationalLaurent symplectic_char_edge(int n);

struct HomogeneousChar {
    BigRational value;   // chi_n(1, ..., 1) by the Weyl product
    BigRational scaled;  // value * 3^{-ceil(n(n-2)/4)}
};
HomogeneousChar symplectic_char_homogeneous(int n);

/// prod over 1 <= k <= n-1 with n-1-k even of floor(3k/2+1) (3k)! k! / ((2k+1)! (2k)!).
BigInt scaled_char_product(int n);

/// prod_{k=1}^{L} floor(3k/2+1) (3k)! k! / ((2k+1)! (2k)!).
BigInt hvsasm_count(int L);

/// Z_L at one exact point, read from the fixed space of the scattering matrices
/// at q = omega, s = 1 and normalised by the closed-form base component. Throws
/// "degenerate fixed space" unless that space is one-dimensional.
Cyclotomic6 sum_rule_at(int L, std::span<const BigRational> z, const BigRational& zeta);

/// Z_L = chi_L(z) chi_{L+1}(z, zeta): symbolically on the solution when `symbolic`,
/// and at seeded exact points from the solution's components.
Report verify_zdet(const QkzSolution<Cyclotomic6>& sol, int samples, std::uint64_t seed, bool symbolic);

/// The same factorisation at seeded points through sum_rule_at; no solution needed.
Report verify_zdet_fixed_vector(int L, int samples, std::uint64_t seed);

/// Z_L at z_L = q^2 z_{L-1} against Z_{L-2} times the boundary and bulk factors.
Report verify_sum_rule_recurrence(const QkzSolution<Cyclotomic6>& sol);

/// chi_n at x_n = q^2 x_{n-1} against chi_{n-2} times its product, at seeded points.
Report verify_char_recurrence(int n, int samples, std::uint64_t seed);

/// Symmetry in z_1..z_L and invariance under each z_i -> 1/z_i.
Report verify_sum_rule_symmetry(const CyclotomicLaurent& Z, int L);

/// 3^{-L(L-1)/2} Z_L(1, ..., 1; 1) = hvsasm_count(L) = chi_L(1..1) chi_{L+1}(1..1) 3^{-L(L-1)/2}.
Report verify_homogeneous_count(const QkzSolution<Cyclotomic6>& sol);

/// H_n(h) = sum_i h_i^n / prod_{j != i} (h_j - h_i). Throws "repeated exponent".
BigRational schur_sum(int n, std::span<const long> h);
/// One-row Schur function s_m(h) by brute-force enumeration of monomials.
BigRational one_row_schur(int m, std::span<const long> h);
/// Sign c_N with H_n = c_N s_{n-N+1}, fixed on h = (1..N), n = N-1.
int schur_sign(int N);
/// H_n vanishes for n < N-1 and equals c_N s_{n-N+1} for N-1 <= n <= N+2, on every
/// increasing tuple of N distinct integers in [-bound, bound].
Report verify_schur_identity(int max_N, long bound);

struct RhoCheck {
    int L = 0;
    BigRational closed;       // floor(L/2) (1 - (5 floor((L+1)/2) + 2) / (2(2L+3)))
    BigRational direct;       // Z_L'(1) / Z_L(1) from the exact ground state
    BigRational density;      // direct / L
    BigRational sum_closed;   // (L+1) floor(L/2) (5 floor((L+1)/2) + 2) / 3
    BigRational sum_direct;   // sum_{i=1}^{L+1} (h_i^2 - i^2)
    BigRational second_log;   // d^2/dzeta^2 log chi_{L+1}(1..1, zeta) at zeta = 1
    bool ok() const;
};
RhoCheck rho(int L);
Report verify_rho(const RhoCheck& r);

/// Coefficient of a^{floor(L/2)} in Z_L(a) equals hvsasm_count(L-1).
Report verify_leading_coefficient(int L);

}  // namespace loopqkz
