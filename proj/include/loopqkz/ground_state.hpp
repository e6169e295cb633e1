#pragma once

#include "loopqkz/linalg.hpp"
#include "loopqkz/link_pattern.hpp"
#include "loopqkz/qkz.hpp"
#include "loopqkz/report.hpp"
#include "loopqkz/univariate.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace loopqkz {

/// Polynomials in the boundary weight a.
using APolynomial = RationalPolynomial;

/// H = sum_i e_i + a f at loop weight 1, over Q[a], in canonical order.
Matrix<APolynomial> hamiltonian(int L);

/// Perron-Frobenius vector of the Hamiltonian: H psi = (L-1+a) psi, with the
/// empty pattern normalised to a^{floor(L/2)}.
struct GroundState {
    int L = 0;
    PatternBasis basis{1};
    std::vector<APolynomial> components;

    const APolynomial& operator[](std::string_view encoding) const { return components.at(basis.index(encoding)); }
    std::vector<BigRational> at(const BigRational& a) const;
};

/// Exact kernels at a = 1, 2, ... interpolated in a, then certified by the
/// eigen-equation over Q[a]. Throws "degenerate ground space" unless the kernel
/// is one-dimensional.
GroundState ground_state(int L);

/// The same state by fraction-free elimination over Q[a]; slower beyond L = 7.
GroundState ground_state_fraction_free(int L);

APolynomial a_polynomial_sum(const GroundState& gs);

/// Eigen-equation, normalisation, a = 0 support and integrality of the state.
/// Coefficient positivity is reported as its own (conjectural) item.
Report verify_ground_state(const GroundState& gs);

/// Laurent polynomial in the single variable u, invariant under u -> 1/u,
/// rewritten as a polynomial in t = u + 1/u. Throws "not inversion-invariant".
RationalPolynomial to_tau_prime(const RationalLaurent& f);

/// Homogeneous components z_i = zeta = 1 as polynomials in tau' = u + 1/u,
/// divided by their gcd and scaled to a primitive integer vector.
struct TauPrimeVector {
    int L = 0;
    std::vector<RationalPolynomial> components;
    RationalPolynomial common_factor;
    bool nonnegative = true;
};
TauPrimeVector tau_prime_components(const QkzSolution<BigRational>& sol);

/// tau' vector from homogeneous values already expressed in u.
TauPrimeVector tau_prime_from_homogeneous(int L, const std::vector<RationalLaurent>& values);

/// At seeded exact points, every scattering matrix fixes Psi(z) at q = omega, s = 1.
Report scattering_fixed_point(const QkzSolution<Cyclotomic6>& sol, int samples, std::uint64_t seed);

/// Psi_L(1,...,1; zeta) is proportional to the ground state at a = 3/(zeta + 1 + 1/zeta).
Report homogeneous_limit(const QkzSolution<Cyclotomic6>& sol, const GroundState& gs, const BigRational& zeta);

}  // namespace loopqkz
