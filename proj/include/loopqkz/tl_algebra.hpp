#pragma once

#include "loopqkz/link_pattern.hpp"
#include "loopqkz/linalg.hpp"
#include "loopqkz/report.hpp"
#include "loopqkz/scalar.hpp"

namespace loopqkz {

/// Matrix of a generator in the canonical basis; columns are source patterns
/// and each closed bulk loop contributes a factor `tau`.
template <class T>
Matrix<T> operator_matrix(const PatternBasis& basis, const TLGenerator& g, const T& tau)
{
    const auto n = static_cast<Eigen::Index>(basis.dimension());
    const T zero = constant_like(tau, 0);
    Matrix<T> m = Matrix<T>::Constant(n, n, zero);
    for (std::size_t k = 0; k < basis.dimension(); ++k) {
        const auto& im = basis.image(g, k);
        T w = constant_like(tau, 1);
        for (int l = 0; l < im.loops; ++l) w = w * tau;
        auto& cell = m(static_cast<Eigen::Index>(im.target), static_cast<Eigen::Index>(k));
        cell = cell + w;
    }
    return m;
}

/// Generator matrix over Q[t], t standing for the loop weight.
Matrix<RationalPolynomial> operator_matrix(const PatternBasis& basis, const TLGenerator& g);

/// Defining relations of the one-boundary Temperley-Lieb algebra checked as
/// exact matrix identities over Q[t].
Report verify_tl_relations(int L);

}  // namespace loopqkz
