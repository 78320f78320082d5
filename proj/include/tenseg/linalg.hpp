#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "tenseg/rational.hpp"

namespace tenseg {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatRowVector = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;

template <typename Scalar>
struct RrefResult {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> reduced;
    std::vector<Eigen::Index> pivotColumns;
    Eigen::Index rank = 0;
};

/// Reduced row-echelon form over an exact field scalar. Pivots are the
/// first nonzero entry in each column, scanned left to right, so the result
/// is deterministic.
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    RrefResult<Scalar> out;
    out.reduced = m.eval();
    auto& a = out.reduced;
    const Eigen::Index rows = a.rows(), cols = a.cols();
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = row; r < rows; ++r) {
            if (!(a(r, col) == Scalar(0))) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != row) a.row(pivot).swap(a.row(row));
        const Scalar inv = Scalar(1) / a(row, col);
        a.row(row) *= inv;
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (r == row) continue;
            const Scalar f = a(r, col);
            if (f == Scalar(0)) continue;
            a.row(r) -= f * a.row(row);
        }
        out.pivotColumns.push_back(col);
        ++row;
    }
    out.rank = static_cast<Eigen::Index>(out.pivotColumns.size());
    return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
    return rref(m).rank;
}

/// Basis of the right kernel {v : m v = 0}. One basis vector per free
/// column, taken in ascending column order with the free coordinate set
/// to 1, then rescaled so the first nonzero entry is 1.
template <typename Derived>
std::vector<Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1>>
nullspace(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    const auto res = rref(m);
    const Eigen::Index cols = m.cols();
    std::vector<bool> isPivot(static_cast<std::size_t>(cols), false);
    for (Eigen::Index p : res.pivotColumns) isPivot[static_cast<std::size_t>(p)] = true;

    std::vector<Vec> basis;
    for (Eigen::Index free = 0; free < cols; ++free) {
        if (isPivot[static_cast<std::size_t>(free)]) continue;
        Vec v = Vec::Constant(cols, Scalar(0));
        v(free) = Scalar(1);
        for (std::size_t k = 0; k < res.pivotColumns.size(); ++k) {
            v(res.pivotColumns[k]) = -res.reduced(static_cast<Eigen::Index>(k), free);
        }
        // normalize: first nonzero entry becomes 1
        for (Eigen::Index i = 0; i < cols; ++i) {
            if (!(v(i) == Scalar(0))) {
                const Scalar inv = Scalar(1) / v(i);
                v *= inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Basis of the left kernel {w : w m = 0}, as row vectors.
template <typename Derived>
std::vector<Eigen::Matrix<typename Derived::Scalar, 1, Eigen::Dynamic>>
leftNullspace(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    using Row = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;
    auto cols = nullspace(m.transpose());
    std::vector<Row> basis;
    basis.reserve(cols.size());
    for (auto& c : cols) basis.push_back(c.transpose());
    return basis;
}

/// Exact determinant by Gaussian elimination with row swaps.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix is not square");
    const Eigen::Index n = m.rows();
    if (n == 0) return Scalar(1);
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = m.eval();
    Scalar det = Scalar(1);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = col; r < n; ++r) {
            if (!(a(r, col) == Scalar(0))) { pivot = r; break; }
        }
        if (pivot < 0) return Scalar(0);
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            det = -det;
        }
        det *= a(col, col);
        const Scalar inv = Scalar(1) / a(col, col);
        for (Eigen::Index r = col + 1; r < n; ++r) {
            if (a(r, col) == Scalar(0)) continue;
            const Scalar f = a(r, col) * inv;
            a.row(r) -= f * a.row(col);
        }
    }
    return det;
}

}  // namespace tenseg
