/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef JCELL_SIMILARITY_HPP
#define JCELL_SIMILARITY_HPP

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "poly_factor.hpp"
#include "polynomial.hpp"

namespace jcell {

/**
 * Characteristic polynomial det(zI - T) by the Berkowitz algorithm:
 * division-free, valid over any field including small characteristic.
 */
template <class F>
Polynomial<F> char_poly(const Matrix<F>& t) {
    if (t.rows() != t.cols()) throw std::invalid_argument("char_poly: matrix not square");
    std::size_t n = t.rows();
    // coefficients highest degree first
    std::vector<F> c{F(1)};
    if (n == 0) return Polynomial<F>(F(1));
    c.push_back(-t(0, 0));
    for (std::size_t r = 1; r < n; ++r) {
        // q(z) for the (r+1)x(r+1) leading block, highest degree first:
        // q = (1, -a, -R S, -R M S, ..., -R M^(r-1) S)
        std::vector<F> q;
        q.reserve(r + 2);
        q.push_back(F(1));
        q.push_back(-t(r, r));
        std::vector<F> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = t(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            F dot(0);
            for (std::size_t i = 0; i < r; ++i) dot += t(r, i) * v[i];
            q.push_back(-dot);
            if (k + 1 < r) {
                std::vector<F> nv(r, F(0));
                for (std::size_t i = 0; i < r; ++i) {
                    if (v[i].is_zero()) continue;
                    for (std::size_t j = 0; j < r; ++j) nv[j] += t(j, i) * v[i];
                }
                v = std::move(nv);
            }
        }
        // first r+2 coefficients of the convolution q * c
        std::vector<F> nc(r + 2, F(0));
        for (std::size_t k = 0; k < nc.size(); ++k)
            for (std::size_t j = 0; j < c.size() && j <= k; ++j)
                if (k - j < q.size()) nc[k] += q[k - j] * c[j];
        c = std::move(nc);
    }
    std::reverse(c.begin(), c.end());
    return Polynomial<F>(std::move(c));
}

namespace detail {

/**
 * Invariant factors of zI - T via diagonalization over kappa[z]: repeated
 * pivoting on a minimal-degree entry, row/column division with remainder,
 * and a divisibility fix-up so s_1 | s_2 | ... | s_n.
 */
template <class F>
std::vector<Polynomial<F>> smith_invariant_factors(std::vector<std::vector<Polynomial<F>>> s) {
    std::size_t n = s.size();
    std::vector<Polynomial<F>> inv;
    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            // minimal-degree nonzero pivot in the trailing block
            std::size_t pi = n, pj = n;
            long best = -1;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j) {
                    if (s[i][j].is_zero()) continue;
                    if (best < 0 || s[i][j].degree() < best) {
                        best = s[i][j].degree();
                        pi = i;
                        pj = j;
                    }
                }
            if (best < 0) throw internal_error("smith: singular characteristic matrix");
            if (pi != k) std::swap(s[pi], s[k]);
            if (pj != k)
                for (std::size_t i = 0; i < n; ++i) std::swap(s[i][pj], s[i][k]);

            bool dirty = false;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (s[i][k].is_zero()) continue;
                PolyDivMod<F> qr = divmod(s[i][k], s[k][k]);
                for (std::size_t j = k; j < n; ++j) s[i][j] = s[i][j] - qr.quot * s[k][j];
                if (!qr.rem.is_zero()) dirty = true;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (s[k][j].is_zero()) continue;
                PolyDivMod<F> qr = divmod(s[k][j], s[k][k]);
                for (std::size_t i = k; i < n; ++i) s[i][j] = s[i][j] - qr.quot * s[i][k];
                if (!qr.rem.is_zero()) dirty = true;
            }
            if (dirty) continue;  // smaller-degree entries appeared, re-pivot

            // pivot divides its row and column; enforce it divides the rest
            bool fixed = true;
            for (std::size_t i = k + 1; i < n && fixed; ++i)
                for (std::size_t j = k + 1; j < n && fixed; ++j) {
                    if (s[i][j].is_zero()) continue;
                    if (!divmod(s[i][j], s[k][k]).rem.is_zero()) {
                        for (std::size_t jj = k; jj < n; ++jj) s[k][jj] = s[k][jj] + s[i][jj];
                        fixed = false;
                    }
                }
            if (fixed) break;
        }
        inv.push_back(s[k][k].monic());
    }
    return inv;
}

}  // namespace detail

/// Invariant factors s_1 | s_2 | ... | s_n of zI - T (monic, possibly 1).
template <class F>
std::vector<Polynomial<F>> invariant_factors(const Matrix<F>& t) {
    if (t.rows() != t.cols()) throw std::invalid_argument("invariant_factors: matrix not square");
    std::size_t n = t.rows();
    std::vector<std::vector<Polynomial<F>>> s(n, std::vector<Polynomial<F>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                s[i][j] = Polynomial<F>(std::vector<F>{-t(i, j), F(1)});
            else
                s[i][j] = Polynomial<F>(-t(i, j));
        }
    return detail::smith_invariant_factors(std::move(s));
}

/// One elementary divisor of the monodromy: factor^power with factor monic
/// irreducible. Rendered "(lambda,k)" when the factor is z - lambda.
template <class F>
struct JordanCell {
    Polynomial<F> factor;
    std::size_t power = 0;

    bool is_linear() const { return factor.degree() == 1; }
    F lambda() const { return -factor.coeff(0); }

    std::string str() const {
        std::ostringstream os;
        if (is_linear())
            os << "(" << lambda().str() << "," << power << ")";
        else
            os << "(" << factor.str() << "," << power << ")";
        return os.str();
    }

    friend bool operator==(const JordanCell& a, const JordanCell& b) {
        return a.factor == b.factor && a.power == b.power;
    }
    bool sort_less(const JordanCell& o) const {
        if (factor != o.factor) return factor.sort_less(o.factor);
        return power < o.power;
    }
};

/**
 * Complete similarity invariant of an invertible matrix: dimension,
 * characteristic polynomial, the chain of characteristic divisors
 * (gcds of minors of zI - T, largest first, each dividing the previous), and
 * the multiset of Jordan cells.
 */
template <class F>
struct MonodromyClass {
    std::size_t dim = 0;
    Polynomial<F> characteristic{F(1)};
    std::vector<Polynomial<F>> divisor_chain;     // d_n, d_(n-1), ..., d_1
    std::vector<Polynomial<F>> invariants;        // nontrivial ones, ascending
    std::vector<JordanCell<F>> cells;             // sorted

    std::string cells_str() const {
        std::ostringstream os;
        os << "{";
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? ", " : "") << cells[i].str();
        os << "}";
        return os.str();
    }

    friend bool operator==(const MonodromyClass& a, const MonodromyClass& b) {
        return a.dim == b.dim && a.invariants == b.invariants;
    }
};

/// Multiset of cells at a given eigenvalue: cells whose factor vanishes there.
template <class F>
std::size_t cells_at(const MonodromyClass<F>& c, const F& value) {
    std::size_t n = 0;
    for (const auto& cell : c.cells)
        if (cell.factor.eval(value).is_zero()) ++n;
    return n;
}

template <class F>
MonodromyClass<F> jordan_cells(const Matrix<F>& t) {
    MonodromyClass<F> out;
    out.dim = t.rows();
    if (t.rows() != t.cols()) throw std::invalid_argument("jordan_cells: matrix not square");
    if (out.dim == 0) return out;
    out.characteristic = char_poly(t);
    if (out.characteristic.coeff(0).is_zero())
        throw internal_error("jordan_cells: matrix is singular, monodromy must be invertible");
    std::vector<Polynomial<F>> inv = invariant_factors(t);
    // cross-check: product of invariant factors is the characteristic polynomial
    Polynomial<F> prod(F(1));
    for (const auto& s : inv) prod = prod * s;
    if (prod != out.characteristic)
        throw internal_error("jordan_cells: invariant factors do not multiply to char poly");
    // divisor chain d_k = s_1 ... s_k reported largest first
    std::vector<Polynomial<F>> d(inv.size() + 1, Polynomial<F>(F(1)));
    for (std::size_t k = 0; k < inv.size(); ++k) d[k + 1] = d[k] * inv[k];
    for (std::size_t k = inv.size(); k >= 1; --k) out.divisor_chain.push_back(d[k]);
    for (const auto& s : inv)
        if (s.degree() > 0) out.invariants.push_back(s);
    for (const auto& s : out.invariants)
        for (const auto& [p, e] : factorize_monic(s)) out.cells.push_back({p, e});
    std::sort(out.cells.begin(), out.cells.end(),
              [](const JordanCell<F>& a, const JordanCell<F>& b) { return a.sort_less(b); });
    return out;
}

template <class F>
bool similarity_equal(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols())
        throw std::invalid_argument("similarity_equal: matrices not square");
    if (a.rows() != b.rows()) return false;
    return invariant_factors(a) == invariant_factors(b);
}

}  // namespace jcell

#endif
