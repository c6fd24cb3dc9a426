#pragma once

// Gaussian elimination over BigRational. Matrices here are at most ~10x10.

#include <optional>
#include <utility>
#include <vector>

#include "rslab/errors.hpp"
#include "rslab/rational.hpp"

namespace rslab {

using RationalVector = std::vector<BigRational>;
using RationalMatrix = std::vector<RationalVector>;

namespace detail {

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(RationalMatrix& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = a.size();
    const std::size_t cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const BigRational inv = BigRational(1) / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const BigRational f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank(RationalMatrix a) { return detail::rref(a).size(); }

/// Basis of {x : A x = 0}.
inline std::vector<RationalVector> nullspace(RationalMatrix a, std::size_t cols) {
    for (const auto& row : a)
        if (row.size() != cols) throw StructuralError("nullspace: ragged matrix");
    const auto pivots = detail::rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(cols, BigRational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Unique solution of A x = b, or nullopt if inconsistent or underdetermined.
inline std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
    if (a.size() != b.size()) throw StructuralError("solve: row count mismatch");
    if (a.empty()) return std::nullopt;
    const std::size_t cols = a[0].size();
    RationalMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        if (aug[i].size() != cols) throw StructuralError("solve: ragged matrix");
        aug[i].push_back(b[i]);
    }
    const auto pivots = detail::rref(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // inconsistent
    if (pivots.size() != cols) return std::nullopt;                      // free variables
    RationalVector x(cols);
    for (std::size_t i = 0; i < cols; ++i) x[pivots[i]] = aug[i][cols];
    return x;
}

inline RationalMatrix inverse(const RationalMatrix& a) {
    const std::size_t n = a.size();
    RationalMatrix aug = a;
    for (std::size_t i = 0; i < n; ++i) {
        if (aug[i].size() != n) throw StructuralError("inverse: matrix not square");
        for (std::size_t j = 0; j < n; ++j) aug[i].push_back(BigRational(i == j ? 1 : 0));
    }
    const auto pivots = detail::rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw DomainError("inverse: singular matrix");
    RationalMatrix inv(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

}  // namespace rslab
