/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef JCELL_ECHELON_HPP
#define JCELL_ECHELON_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "matrix.hpp"

namespace jcell {

/**
 * Echelon factorization of a matrix. For row forms, result = transform * M
 * with transform invertible (rows x rows); for column forms,
 * result = M * transform with transform (cols x cols).
 */
template <class F>
struct Echelon {
    Matrix<F> transform;
    Matrix<F> result;
    std::size_t rank = 0;
};

/**
 * Row echelon form: zero rows at the bottom, each leading entry strictly to
 * the right of the previous row's. Non-reduced: pivots are not normalized and
 * entries above pivots are untouched. First-nonzero pivoting, no swaps when
 * the pivot is already in place, so an input already in REF returns the
 * identity transform.
 */
template <class F>
Echelon<F> ref_with_transform(const Matrix<F>& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    Echelon<F> e{Matrix<F>::identity(rows), m, 0};
    std::size_t piv = 0;
    for (std::size_t col = 0; col < cols && piv < rows; ++col) {
        std::size_t r = piv;
        while (r < rows && e.result(r, col).is_zero()) ++r;
        if (r == rows) continue;
        if (r != piv) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(e.result(piv, j), e.result(r, j));
            for (std::size_t j = 0; j < rows; ++j) std::swap(e.transform(piv, j), e.transform(r, j));
        }
        for (std::size_t i = piv + 1; i < rows; ++i) {
            if (e.result(i, col).is_zero()) continue;
            F lambda = e.result(i, col) / e.result(piv, col);
            for (std::size_t j = col; j < cols; ++j) e.result(i, j) -= lambda * e.result(piv, j);
            for (std::size_t j = 0; j < rows; ++j) e.transform(i, j) -= lambda * e.transform(piv, j);
        }
        ++piv;
    }
    e.rank = piv;
    return e;
}

/// Reduced row echelon form: pivots are 1 and the only nonzero entry of
/// their column.
template <class F>
Echelon<F> rref_with_transform(const Matrix<F>& m) {
    Echelon<F> e = ref_with_transform(m);
    std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t i = e.rank; i-- > 0;) {
        std::size_t lead = 0;
        while (lead < cols && e.result(i, lead).is_zero()) ++lead;
        if (lead == cols) continue;
        F p = e.result(i, lead);
        if (!p.is_one()) {
            F pi = p.inv();
            for (std::size_t j = lead; j < cols; ++j) e.result(i, j) *= pi;
            for (std::size_t j = 0; j < rows; ++j) e.transform(i, j) *= pi;
        }
        for (std::size_t k = 0; k < i; ++k) {
            if (e.result(k, lead).is_zero()) continue;
            F lambda = e.result(k, lead);
            for (std::size_t j = lead; j < cols; ++j) e.result(k, j) -= lambda * e.result(i, j);
            for (std::size_t j = 0; j < rows; ++j) e.transform(k, j) -= lambda * e.transform(i, j);
        }
    }
    return e;
}

/**
 * Column echelon form: zero columns on the right, each column's leading
 * (topmost nonzero) entry strictly below the previous column's. Computed via
 * REF of the transpose, result = M * transform.
 */
template <class F>
Echelon<F> cef_with_transform(const Matrix<F>& m) {
    Echelon<F> t = ref_with_transform(m.transpose());
    return {t.transform.transpose(), t.result.transpose(), t.rank};
}

template <class F>
Echelon<F> rcef_with_transform(const Matrix<F>& m) {
    Echelon<F> t = rref_with_transform(m.transpose());
    return {t.transform.transpose(), t.result.transpose(), t.rank};
}

/**
 * Row compression: an invertible transform C with C*M = [kept rows; zero
 * rows], where the kept rows are the first maximal linearly independent set
 * of rows of M, in their original order and unmodified. Rows that depend on
 * earlier rows are zeroed and moved to the bottom (relative order kept).
 */
template <class F>
Echelon<F> row_compress_with_transform(const Matrix<F>& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    // Scratch rows with pairwise distinct leading positions, plus for each
    // its expression over the original rows. A candidate reduces to zero iff
    // it depends on the rows kept so far.
    std::vector<std::vector<F>> basis;
    std::vector<std::vector<F>> basis_expr;
    std::vector<std::size_t> lead_to_basis(cols + 1, static_cast<std::size_t>(-1));
    std::vector<std::size_t> kept, dropped;
    std::vector<std::vector<F>> dropped_expr;
    auto lead_of = [cols](const std::vector<F>& v) {
        std::size_t l = 0;
        while (l < cols && v[l].is_zero()) ++l;
        return l;
    };
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<F> v(cols);
        for (std::size_t j = 0; j < cols; ++j) v[j] = m(i, j);
        std::vector<F> expr(rows, F(0));
        expr[i] = F(1);
        std::size_t l = lead_of(v);
        while (l < cols && lead_to_basis[l] != static_cast<std::size_t>(-1)) {
            std::size_t b = lead_to_basis[l];
            F lambda = v[l] / basis[b][l];
            for (std::size_t j = l; j < cols; ++j) v[j] -= lambda * basis[b][j];
            for (std::size_t j = 0; j < rows; ++j) expr[j] -= lambda * basis_expr[b][j];
            l = lead_of(v);
        }
        if (l == cols) {
            dropped.push_back(i);
            dropped_expr.push_back(std::move(expr));
        } else {
            kept.push_back(i);
            lead_to_basis[l] = basis.size();
            basis.push_back(std::move(v));
            basis_expr.push_back(std::move(expr));
        }
    }
    Echelon<F> e;
    e.rank = kept.size();
    e.transform = Matrix<F>(rows, rows);
    e.result = Matrix<F>(rows, cols);
    for (std::size_t k = 0; k < kept.size(); ++k) {
        e.transform(k, kept[k]) = F(1);
        for (std::size_t j = 0; j < cols; ++j) e.result(k, j) = m(kept[k], j);
    }
    for (std::size_t d = 0; d < dropped.size(); ++d)
        for (std::size_t j = 0; j < rows; ++j) e.transform(kept.size() + d, j) = dropped_expr[d][j];
    return e;
}

/// Column analogue of row compression: M * D = [kept columns | zero columns].
template <class F>
Echelon<F> col_compress_with_transform(const Matrix<F>& m) {
    Echelon<F> t = row_compress_with_transform(m.transpose());
    return {t.transform.transpose(), t.result.transpose(), t.rank};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return ref_with_transform(m).rank;
}

/// Columns span the kernel of M; deterministic (free columns ascending).
template <class F>
Matrix<F> kernel_basis_matrix(const Matrix<F>& m) {
    Echelon<F> e = rref_with_transform(m);
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t i = 0; i < e.rank; ++i) {
        std::size_t lead = 0;
        while (lead < cols && e.result(i, lead).is_zero()) ++lead;
        pivot_col.push_back(lead);
        is_pivot[lead] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < cols; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Matrix<F> k(cols, free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        std::size_t j = free_cols[f];
        k(j, f) = F(1);
        for (std::size_t i = 0; i < e.rank; ++i) k(pivot_col[i], f) = -e.result(i, j);
    }
    (void)rows;
    return k;
}

/// Solves M x = b exactly; empty when b is outside the column space.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, const std::vector<F>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
    Matrix<F> bm(m.rows(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i) bm(i, 0) = b[i];
    Echelon<F> e = rref_with_transform(Matrix<F>::hstack(m, bm));
    std::size_t cols = m.cols();
    std::vector<F> x(cols, F(0));
    for (std::size_t i = 0; i < e.rank; ++i) {
        std::size_t lead = 0;
        while (lead < cols + 1 && e.result(i, lead).is_zero()) ++lead;
        if (lead == cols) return std::nullopt;  // pivot in the augmented column
        x[lead] = e.result(i, cols);
    }
    return x;
}

/// Columnwise solve M X = B.
template <class F>
std::optional<Matrix<F>> solve_matrix(const Matrix<F>& m, const Matrix<F>& b) {
    if (b.rows() != m.rows()) throw std::invalid_argument("solve_matrix: shape mismatch");
    Matrix<F> x(m.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto xi = solve(m, b.col(j));
        if (!xi) return std::nullopt;
        x.set_col(j, *xi);
    }
    return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    Echelon<F> e = rref_with_transform(m);
    if (e.rank != m.rows()) return std::nullopt;
    return e.transform;
}

}  // namespace jcell

#endif
