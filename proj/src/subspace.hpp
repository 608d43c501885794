/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef JCELL_SUBSPACE_HPP
#define JCELL_SUBSPACE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "echelon.hpp"
#include "matrix.hpp"

namespace jcell {

/**
 * Linear subspace of kappa^n held by a canonical basis: the reduced column
 * echelon form, so two equal subspaces have bitwise identical bases and
 * subspace equality is matrix equality.
 */
template <class F>
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}

    /// Span of the given columns (need not be independent).
    static Subspace from_columns(std::size_t ambient, const Matrix<F>& cols) {
        if (cols.rows() != ambient) throw std::invalid_argument("Subspace: ambient mismatch");
        Echelon<F> e = rref_with_transform(cols.transpose());
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = e.result.block(0, 0, e.rank, ambient).transpose();
        return s;
    }

    static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

    static Subspace full(std::size_t ambient) {
        return from_columns(ambient, Matrix<F>::identity(ambient));
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix<F>& basis() const { return basis_; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    /// Coordinates of v in the basis, when v lies in the subspace.
    std::optional<std::vector<F>> coords_of(const std::vector<F>& v) const {
        return solve(basis_, v);
    }

    bool contains(const std::vector<F>& v) const { return coords_of(v).has_value(); }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) return false;
        for (std::size_t j = 0; j < other.dim(); ++j)
            if (!contains(other.basis_.col(j))) return false;
        return true;
    }

    friend Subspace sum(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        return from_columns(a.ambient_, Matrix<F>::hstack(a.basis_, b.basis_));
    }

    /// Intersection via the kernel of the stacked annihilators.
    friend Subspace intersect(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        Matrix<F> q = Matrix<F>::vstack(a.quotient_map(), b.quotient_map());
        return from_columns(a.ambient_, kernel_basis_matrix(q));
    }

    /**
     * Surjection kappa^n -> kappa^(n-dim) whose kernel is exactly this
     * subspace; rows correspond to the non-pivot coordinates.
     */
    Matrix<F> quotient_map() const {
        std::size_t n = ambient_, d = dim();
        std::vector<std::size_t> pivot(d);
        std::vector<bool> is_pivot(n, false);
        for (std::size_t j = 0; j < d; ++j) {
            std::size_t i = 0;
            while (i < n && basis_(i, j).is_zero()) ++i;
            pivot[j] = i;
            is_pivot[i] = true;
        }
        Matrix<F> q(n - d, n);
        std::size_t r = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (is_pivot[i]) continue;
            q(r, i) = F(1);
            for (std::size_t j = 0; j < d; ++j) q(r, pivot[j]) = -basis_(i, j);
            ++r;
        }
        return q;
    }

    /// Image of a linear map applied to this subspace.
    friend Subspace apply(const Matrix<F>& f, const Subspace& s) {
        if (f.cols() != s.ambient_) throw std::invalid_argument("apply: shape mismatch");
        return from_columns(f.rows(), f * s.basis_);
    }

private:
    std::size_t ambient_ = 0;
    Matrix<F> basis_;
};

}  // namespace jcell

#endif
