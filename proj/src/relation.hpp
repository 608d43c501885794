/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef JCELL_RELATION_HPP
#define JCELL_RELATION_HPP

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "echelon.hpp"
#include "matrix.hpp"
#include "subspace.hpp"

namespace jcell {

/**
 * A linear relation V1 ~> V2: a subspace of V1 x V2 held in canonical form.
 * Coordinates are stacked (v1; v2), source block first.
 */
template <class F>
class LinearRelation {
public:
    LinearRelation() = default;
    LinearRelation(std::size_t src, std::size_t tgt, Subspace<F> span)
        : src_(src), tgt_(tgt), span_(std::move(span)) {
        if (span_.ambient() != src_ + tgt_)
            throw std::invalid_argument("LinearRelation: span ambient mismatch");
    }

    /// Graph of a linear map f: kappa^n -> kappa^m, i.e. {(v, f v)}.
    static LinearRelation from_graph(const Matrix<F>& f) {
        std::size_t n = f.cols(), m = f.rows();
        Matrix<F> cols = Matrix<F>::vstack(Matrix<F>::identity(n), f);
        return LinearRelation(n, m, Subspace<F>::from_columns(n + m, cols));
    }

    /// {(v1, v2) | alpha v1 = beta v2} for a cospan alpha: V1->W, beta: V2->W.
    static LinearRelation from_cospan(const Matrix<F>& alpha, const Matrix<F>& beta) {
        if (alpha.rows() != beta.rows())
            throw std::invalid_argument("from_cospan: target dimension mismatch");
        std::size_t n = alpha.cols(), m = beta.cols();
        Matrix<F> block = Matrix<F>::hstack(alpha, -beta);
        return LinearRelation(n, m, Subspace<F>::from_columns(n + m, kernel_basis_matrix(block)));
    }

    /// {(a u, b u)} for a span a: U->V1, b: U->V2.
    static LinearRelation from_span(const Matrix<F>& a, const Matrix<F>& b) {
        if (a.cols() != b.cols()) throw std::invalid_argument("from_span: source dimension mismatch");
        std::size_t n = a.rows(), m = b.rows();
        return LinearRelation(n, m, Subspace<F>::from_columns(n + m, Matrix<F>::vstack(a, b)));
    }

    static LinearRelation identity(std::size_t n) { return from_graph(Matrix<F>::identity(n)); }

    std::size_t src_dim() const { return src_; }
    std::size_t tgt_dim() const { return tgt_; }
    const Subspace<F>& span() const { return span_; }
    std::size_t dim() const { return span_.dim(); }

    LinearRelation dagger() const {
        const Matrix<F>& b = span_.basis();
        Matrix<F> swapped =
            Matrix<F>::vstack(b.block(src_, 0, tgt_, b.cols()), b.block(0, 0, src_, b.cols()));
        return LinearRelation(tgt_, src_, Subspace<F>::from_columns(src_ + tgt_, swapped));
    }

    friend bool operator==(const LinearRelation& a, const LinearRelation& b) {
        return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.span_ == b.span_;
    }
    friend bool operator!=(const LinearRelation& a, const LinearRelation& b) { return !(a == b); }

    Subspace<F> dom() const {
        return Subspace<F>::from_columns(src_, span_.basis().block(0, 0, src_, dim()));
    }
    Subspace<F> img() const {
        return Subspace<F>::from_columns(tgt_, span_.basis().block(src_, 0, tgt_, dim()));
    }
    /// {v1 | (v1, 0) in R}.
    Subspace<F> ker() const {
        Matrix<F> bot = span_.basis().block(src_, 0, tgt_, dim());
        Matrix<F> coeff = kernel_basis_matrix(bot);
        return Subspace<F>::from_columns(src_, span_.basis().block(0, 0, src_, dim()) * coeff);
    }
    /// {v2 | (0, v2) in R}.
    Subspace<F> mul() const {
        Matrix<F> top = span_.basis().block(0, 0, src_, dim());
        Matrix<F> coeff = kernel_basis_matrix(top);
        return Subspace<F>::from_columns(tgt_, span_.basis().block(src_, 0, tgt_, dim()) * coeff);
    }

private:
    std::size_t src_ = 0, tgt_ = 0;
    Subspace<F> span_;
};

/**
 * Diagrammatic composition: r1 first, then r2 (the composite R2 . R1).
 * Computed by intersecting the two membership constraints inside
 * V1 x V2 x V3 and projecting out the middle block.
 */
template <class F>
LinearRelation<F> compose(const LinearRelation<F>& r1, const LinearRelation<F>& r2) {
    if (r1.tgt_dim() != r2.src_dim()) throw std::invalid_argument("compose: dimension mismatch");
    std::size_t n = r1.src_dim(), m = r1.tgt_dim(), p = r2.tgt_dim();
    Matrix<F> q1 = r1.span().quotient_map();  // rows x (n+m)
    Matrix<F> q2 = r2.span().quotient_map();  // rows x (m+p)
    Matrix<F> big(q1.rows() + q2.rows(), n + m + p);
    for (std::size_t i = 0; i < q1.rows(); ++i)
        for (std::size_t j = 0; j < n + m; ++j) big(i, j) = q1(i, j);
    for (std::size_t i = 0; i < q2.rows(); ++i)
        for (std::size_t j = 0; j < m + p; ++j) big(q1.rows() + i, n + j) = q2(i, j);
    Matrix<F> triples = kernel_basis_matrix(big);
    Matrix<F> proj = Matrix<F>::vstack(triples.block(0, 0, n, triples.cols()),
                                       triples.block(n + m, 0, p, triples.cols()));
    return LinearRelation<F>(n, p, Subspace<F>::from_columns(n + p, proj));
}

template <class F>
LinearRelation<F> direct_sum(const LinearRelation<F>& a, const LinearRelation<F>& b) {
    std::size_t n = a.src_dim() + b.src_dim();
    std::size_t m = a.tgt_dim() + b.tgt_dim();
    const Matrix<F>& ba = a.span().basis();
    const Matrix<F>& bb = b.span().basis();
    Matrix<F> cols(n + m, ba.cols() + bb.cols());
    for (std::size_t j = 0; j < ba.cols(); ++j) {
        for (std::size_t i = 0; i < a.src_dim(); ++i) cols(i, j) = ba(i, j);
        for (std::size_t i = 0; i < a.tgt_dim(); ++i) cols(n + i, j) = ba(a.src_dim() + i, j);
    }
    for (std::size_t j = 0; j < bb.cols(); ++j) {
        for (std::size_t i = 0; i < b.src_dim(); ++i) cols(a.src_dim() + i, ba.cols() + j) = bb(i, j);
        for (std::size_t i = 0; i < b.tgt_dim(); ++i)
            cols(n + a.tgt_dim() + i, ba.cols() + j) = bb(b.src_dim() + i, j);
    }
    return LinearRelation<F>(n, m, Subspace<F>::from_columns(n + m, cols));
}

/**
 * Regular part of an endorelation: the invertible map induced on
 * V_reg = D / (D cap (K+ + K-)), where D carries the bi-infinitely
 * extensible vectors, K+ the forward chains ending at 0 and K- the backward
 * chains starting at 0.
 */
template <class F>
struct RegularPart {
    std::size_t dim_reg = 0;
    Matrix<F> T;
    Subspace<F> D, K_plus, K_minus;
};

template <class F>
RegularPart<F> regularize(const LinearRelation<F>& r) {
    if (r.src_dim() != r.tgt_dim()) throw std::invalid_argument("regularize: not an endorelation");
    std::size_t n = r.src_dim();

    // Chains dom/img (descending) and ker/mul (ascending) of the powers R^k;
    // iterate until all four stabilize. Fixed points propagate, so comparing
    // consecutive dimensions suffices.
    LinearRelation<F> power = r;
    Subspace<F> dom_s = power.dom(), img_s = power.img(), ker_s = power.ker(), mul_s = power.mul();
    std::size_t guard = 0;
    for (;;) {
        power = compose(power, r);
        Subspace<F> d2 = power.dom(), i2 = power.img(), k2 = power.ker(), m2 = power.mul();
        bool stable = d2.dim() == dom_s.dim() && i2.dim() == img_s.dim() &&
                      k2.dim() == ker_s.dim() && m2.dim() == mul_s.dim();
        dom_s = std::move(d2);
        img_s = std::move(i2);
        ker_s = std::move(k2);
        mul_s = std::move(m2);
        if (stable) break;
        if (++guard > n + 2) throw internal_error("regularize: chains failed to stabilize");
    }

    Subspace<F> D = intersect(dom_s, img_s);
    Subspace<F> W = intersect(D, sum(ker_s, mul_s));
    std::size_t d = D.dim();

    // restrict to D, then quotient by W (in D-coordinates)
    const Matrix<F>& iota = D.basis();  // n x d
    LinearRelation<F> r_d =
        compose(compose(LinearRelation<F>::from_graph(iota), r),
                LinearRelation<F>::from_graph(iota).dagger());
    Matrix<F> w_in_d(d, W.dim());
    for (std::size_t j = 0; j < W.dim(); ++j) {
        auto c = D.coords_of(W.basis().col(j));
        if (!c) throw internal_error("regularize: W not inside D");
        w_in_d.set_col(j, *c);
    }
    Matrix<F> pi = Subspace<F>::from_columns(d, w_in_d).quotient_map();
    LinearRelation<F> r_reg =
        compose(compose(LinearRelation<F>::from_graph(pi).dagger(), r_d),
                LinearRelation<F>::from_graph(pi));

    std::size_t u = d - W.dim();
    if (r_reg.dim() != u)
        throw internal_error("regularize: regular part has wrong dimension (got " +
                             std::to_string(r_reg.dim()) + ", want " + std::to_string(u) + ")");
    Matrix<F> top = r_reg.span().basis().block(0, 0, u, u);
    Matrix<F> bot = r_reg.span().basis().block(u, 0, u, u);
    auto top_inv = inverse(top);
    if (!top_inv) throw internal_error("regularize: regular part is not the graph of a map");
    Matrix<F> T = bot * (*top_inv);
    if (!inverse(T)) throw internal_error("regularize: induced map is not invertible");

    RegularPart<F> out;
    out.dim_reg = u;
    out.T = std::move(T);
    out.D = std::move(D);
    out.K_plus = std::move(ker_s);
    out.K_minus = std::move(mul_s);
    return out;
}

}  // namespace jcell

#endif
