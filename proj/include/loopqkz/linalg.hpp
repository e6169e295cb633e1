#pragma once

#include "loopqkz/cyclotomic6.hpp"
#include "loopqkz/rational.hpp"
#include "loopqkz/univariate.hpp"

#include <Eigen/Core>

#include <vector>

namespace Eigen {

// Exact scalars: no vectorization, no meaningful epsilon.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    using Real = mpq_class;
    using NonInteger = mpq_class;
    using Nested = mpq_class;
    using Literal = mpq_class;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 100,
        MulCost = 100
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<loopqkz::Cyclotomic6> : GenericNumTraits<loopqkz::Cyclotomic6> {
    using Real = mpq_class;
    using NonInteger = loopqkz::Cyclotomic6;
    using Nested = loopqkz::Cyclotomic6;
    using Literal = loopqkz::Cyclotomic6;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 20,
        AddCost = 200,
        MulCost = 400
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<loopqkz::RationalPolynomial> : GenericNumTraits<loopqkz::RationalPolynomial> {
    using Real = loopqkz::RationalPolynomial;
    using NonInteger = loopqkz::RationalPolynomial;
    using Nested = loopqkz::RationalPolynomial;
    using Literal = loopqkz::RationalPolynomial;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 20,
        AddCost = 200,
        MulCost = 400
    };
    static inline Real epsilon() { return 0L; }
    static inline Real dummy_precision() { return 0L; }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace loopqkz {

template <class T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

template <class T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

/// In-place reduced row echelon form over an exact field; returns pivot columns.
template <class T>
std::vector<Eigen::Index> row_reduce(Matrix<T>& m)
{
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index p = row;
        while (p < m.rows() && is_zero(m(p, col))) ++p;
        if (p == m.rows()) continue;
        if (p != row) m.row(p).swap(m.row(row));
        const T inv = T(1) / m(row, col);
        for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero(m(r, col))) continue;
            const T f = m(r, col);
            for (Eigen::Index j = col; j < m.cols(); ++j)
                if (!is_zero(m(row, j))) m(r, j) = m(r, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Basis of the right kernel, one column per free variable.
template <class T>
Matrix<T> nullspace(Matrix<T> m)
{
    const auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Eigen::Index> free;
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free.push_back(c);
    Matrix<T> basis(m.cols(), static_cast<Eigen::Index>(free.size()));
    for (Eigen::Index i = 0; i < basis.rows(); ++i)
        for (Eigen::Index j = 0; j < basis.cols(); ++j) basis(i, j) = T(0);
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(r, free[k]);
    }
    return basis;
}

/// Determinant by Gaussian elimination over an exact field.
template <class T>
T determinant(Matrix<T> m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    T det(1);
    const Eigen::Index n = m.rows();
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = c;
        while (p < n && is_zero(m(p, c))) ++p;
        if (p == n) return T(0);
        if (p != c) {
            m.row(p).swap(m.row(c));
            det = -det;
        }
        det = det * m(c, c);
        const T inv = T(1) / m(c, c);
        for (Eigen::Index r = c + 1; r < n; ++r) {
            if (is_zero(m(r, c))) continue;
            const T f = m(r, c) * inv;
            for (Eigen::Index j = c; j < n; ++j) m(r, j) = m(r, j) - f * m(c, j);
        }
    }
    return det;
}

}  // namespace loopqkz
