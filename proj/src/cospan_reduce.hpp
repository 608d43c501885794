/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef JCELL_COSPAN_REDUCE_HPP
#define JCELL_COSPAN_REDUCE_HPP

#include <cstddef>
#include <vector>

#include "echelon.hpp"
#include "matrix.hpp"

namespace jcell {

/**
 * One applied modification: the pair was replaced by the block
 * (C*A*D, C*B*D).block(row_off, col_off, out_rows, out_cols).
 */
template <class F>
struct Modification {
    int kind = 0;  // 1, 2 or 3
    Matrix<F> C, D;
    std::size_t row_off = 0, col_off = 0, out_rows = 0, out_cols = 0;
};

/**
 * A pair of equally-sized matrices (A, B) presenting the relation
 * {(x, y) | A x = B y}, together with the trace of reductions applied to it.
 */
template <class F>
struct CospanPair {
    Matrix<F> A, B;
    std::vector<Modification<F>> trace;

    CospanPair() = default;
    CospanPair(Matrix<F> a, Matrix<F> b) : A(std::move(a)), B(std::move(b)) {
        if (A.rows() != B.rows() || A.cols() != B.cols())
            throw std::invalid_argument("CospanPair: A and B must have equal shape");
    }

    std::size_t rows() const { return A.rows(); }
    std::size_t cols() const { return A.cols(); }
};

namespace detail {

template <class F>
void apply_blocks(CospanPair<F>& p, Modification<F> mod) {
    Matrix<F> cad = mod.C * p.A * mod.D;
    Matrix<F> cbd = mod.C * p.B * mod.D;
    p.A = cad.block(mod.row_off, mod.col_off, mod.out_rows, mod.out_cols);
    p.B = cbd.block(mod.row_off, mod.col_off, mod.out_rows, mod.out_cols);
    p.trace.push_back(std::move(mod));
}

}  // namespace detail

/**
 * T1, applicable when A is not surjective. C compresses A's rows
 * (C A = [A1; 0] with A1 the independent rows), D compresses the columns of
 * the lower block B2 of C B. The new pair is the upper-right block, a
 * restriction of the cospan that keeps the regular part.
 */
template <class F>
CospanPair<F> t1(CospanPair<F> p) {
    std::size_t m = p.rows(), n = p.cols();
    Echelon<F> rc = row_compress_with_transform(p.A);
    if (rc.rank == m) throw std::invalid_argument("t1: A is surjective");
    Matrix<F> b2 = (rc.transform * p.B).block(rc.rank, 0, m - rc.rank, n);
    Echelon<F> cc = col_compress_with_transform(b2);
    detail::apply_blocks(p, {1, rc.transform, cc.transform, 0, cc.rank, rc.rank, n - cc.rank});
    return p;
}

/// T2, applicable when B is not surjective; keeps A surjective.
template <class F>
CospanPair<F> t2(CospanPair<F> p) {
    std::size_t m = p.rows(), n = p.cols();
    Echelon<F> rc = row_compress_with_transform(p.B);
    if (rc.rank == m) throw std::invalid_argument("t2: B is surjective");
    Matrix<F> a2 = (rc.transform * p.A).block(rc.rank, 0, m - rc.rank, n);
    Echelon<F> cc = col_compress_with_transform(a2);
    detail::apply_blocks(p, {2, rc.transform, cc.transform, 0, cc.rank, rc.rank, n - cc.rank});
    return p;
}

/**
 * T3, applicable when A is not injective (and both maps surjective, as the
 * reduce loop guarantees). D compresses A's columns, C compresses the rows
 * of the trailing block B2 of B D; the new pair is the lower-left block, the
 * quotient of the cospan by ker A. Keeps both maps surjective.
 */
template <class F>
CospanPair<F> t3(CospanPair<F> p) {
    std::size_t m = p.rows(), n = p.cols();
    Echelon<F> cc = col_compress_with_transform(p.A);
    if (cc.rank == n) throw std::invalid_argument("t3: A is injective");
    Matrix<F> b2 = (p.B * cc.transform).block(0, cc.rank, m, n - cc.rank);
    Echelon<F> rc = row_compress_with_transform(b2);
    detail::apply_blocks(p, {3, rc.transform, cc.transform, rc.rank, 0, m - rc.rank, cc.rank});
    return p;
}

/**
 * Reduces a pair to square invertible matrices with the same regular part:
 * (I) shrink until A is surjective, (II) until B is surjective,
 * (III) until A is injective; the survivors are invertible. A 0x0 result is
 * legal and means the regular part vanishes.
 */
template <class F>
CospanPair<F> reduce(CospanPair<F> p) {
    while (rank(p.A) < p.rows()) p = t1(std::move(p));
    while (rank(p.B) < p.rows()) p = t2(std::move(p));
    while (rank(p.A) < p.cols()) p = t3(std::move(p));
    return p;
}

/// B^{-1} A of a fully reduced pair; similar to the relation's regular part.
template <class F>
Matrix<F> monodromy_matrix(const CospanPair<F>& p) {
    if (p.rows() != p.cols()) throw std::invalid_argument("monodromy_matrix: pair not square");
    auto binv = inverse(p.B);
    if (!binv) throw std::invalid_argument("monodromy_matrix: B not invertible");
    if (!inverse(p.A)) throw std::invalid_argument("monodromy_matrix: A not invertible");
    return (*binv) * p.A;
}

}  // namespace jcell

#endif
