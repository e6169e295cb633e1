#pragma once

#include "loopqkz/cyclotomic6.hpp"
#include "loopqkz/laurent.hpp"
#include "loopqkz/link_pattern.hpp"
#include "loopqkz/operators.hpp"
#include "loopqkz/ratfunc.hpp"
#include "loopqkz/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace loopqkz {

/// Variables and constants of one qKZ construction. `u` is the square root of
/// q; u, zeta and the shift s are each either a variable of `universe` or a
/// constant, and always units of the Laurent ring.
template <class C>
struct QkzParameters {
    using Poly = MultiLaurent<C>;

    int L = 0;
    UniversePtr universe;
    Poly u, zeta, s;

    Poly q() const { return u * u; }
    Poly q_inv() const { return q().unit_inverse(); }
    Poly one() const { return Poly::constant(universe, C(1)); }
    /// 1-based spectral variable.
    Poly z(int i) const { return Poly::variable(universe, "z" + std::to_string(i)); }
    std::size_t z_index(int i) const { return static_cast<std::size_t>(i - 1); }
    SpectralParameters<Poly> spectral() const { return {q(), zeta, std::nullopt}; }
};

/// Over Q with u and zeta symbolic and s = u^6 (= q^3).
QkzParameters<BigRational> generic_parameters(int L);
/// Over Q with u, zeta and s all symbolic.
QkzParameters<BigRational> free_shift_parameters(int L);
/// Over Q with numeric u, s = u^6, and zeta symbolic unless given.
QkzParameters<BigRational> numeric_parameters(int L, const BigRational& u, std::optional<BigRational> zeta = {});
/// Stochastic point: u = eps (q = omega), s = 1, zeta symbolic.
QkzParameters<Cyclotomic6> stochastic_parameters(int L);

/// Product over i < j of (q z_i/z_j - 1/q)(z_j/q - q/(s z_i)).
template <class C>
MultiLaurent<C> base_component(const QkzParameters<C>& p);

/// Laurent-polynomial components indexed like `basis`.
template <class C>
struct QkzSolution {
    QkzParameters<C> params;
    PatternBasis basis;
    std::vector<MultiLaurent<C>> components;

    const MultiLaurent<C>& operator[](std::string_view encoding) const
    {
        return components.at(basis.index(encoding));
    }
};

struct BuildOptions {
    /// When set, equation instances are scanned in a shuffled order.
    std::optional<std::uint64_t> shuffle_seed;
};

/// Worklist construction from the base component through the divided-difference
/// equations, followed by a full consistency pass. Throws "system stuck" or
/// "inconsistent".
template <class C>
QkzSolution<C> build_solution(const QkzParameters<C>& p, const BuildOptions& opt = {});

/// Residual of the e_1 equation at "()" + dots with s left free, L in {2, 3}.
struct ShiftResidual {
    RatScalar<BigRational> residual;
    UniversePtr universe;
    bool vanishes_at_root = false;       // residual|_{s = q^3} == 0
    bool divisible_by_shift = false;     // (s - q^3) divides the numerator
};
ShiftResidual shift_residual(int L);

/// Bulk, right-boundary and left-boundary exchange equations as exact identities.
template <class C>
Report verify_exchange_equations(const QkzSolution<C>& sol);

/// S_i Psi = Psi(z_i -> s z_i) for every i, each factor applied with exact division.
template <class C>
Report verify_scattering_equation(const QkzSolution<C>& sol);

/// Vanishing, symmetry and divisibility properties implied by the equations,
/// plus the degree windows.
template <class C>
Report verify_structure(const QkzSolution<C>& sol);

template <class C>
Report verify_degree_windows(const QkzSolution<C>& sol);

/// Psi_L on patterns with the arc (L-1, L), specialised at z_L = q^2 z_{L-1},
/// against the explicit factor times Psi_{L-2}. `smaller` is the size L-2 solution.
template <class C>
Report verify_recurrence(const QkzSolution<C>& sol, const QkzSolution<C>& smaller);

/// The explicit factor P_{L-1}(z_{L-1}; z_1..z_{L-2}).
template <class C>
MultiLaurent<C> recurrence_factor(const QkzParameters<C>& p);

}  // namespace loopqkz
