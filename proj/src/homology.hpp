/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef JCELL_HOMOLOGY_HPP
#define JCELL_HOMOLOGY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "cut_complex.hpp"
#include "errors.hpp"
#include "matrix.hpp"

namespace jcell {

/// Sparse chain: (cell index, coefficient) sorted by index, no zeros.
template <class F>
using Chain = std::vector<std::pair<std::size_t, F>>;

namespace detail {

template <class F>
void chain_axpy(Chain<F>& dst, const F& lambda, const Chain<F>& src) {
    Chain<F> out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            F v = lambda * src[j].second;
            if (!v.is_zero()) out.emplace_back(src[j].first, std::move(v));
            ++j;
        } else {
            F v = dst[i].second + lambda * src[j].second;
            if (!v.is_zero()) out.emplace_back(dst[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

}  // namespace detail

/**
 * Left-to-right column reduction of an upper-triangular boundary matrix, the
 * persistence-style pairing. Columns of blocks that only touch their own
 * rows (the leading fiber copies of a cut complex) reduce exactly as they
 * would standalone, so one reduction serves the subcomplexes and the whole
 * complex at once.
 */
template <class F>
class BoundaryReduction {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BoundaryReduction(std::vector<int> dims,
                      const std::vector<std::vector<std::pair<std::size_t, int>>>& cols,
                      const F& unit)
        : dims_(std::move(dims)) {
        std::size_t n = dims_.size();
        r_.resize(n);
        v_.resize(n);
        low_to_col_.assign(n, npos);
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& [row, sign] : cols[j]) {
                if (row >= j) throw internal_error("boundary matrix not upper triangular");
                r_[j].emplace_back(row, unit * F(sign));
            }
            v_[j].emplace_back(j, unit * F(1));
            while (!r_[j].empty()) {
                std::size_t low = r_[j].back().first;
                std::size_t i = low_to_col_[low];
                if (i == npos) break;
                F lambda = -(r_[j].back().second / r_[i].back().second);
                detail::chain_axpy(r_[j], lambda, r_[i]);
                detail::chain_axpy(v_[j], lambda, v_[i]);
            }
            if (!r_[j].empty()) low_to_col_[r_[j].back().first] = j;
        }
    }

    std::size_t size() const { return dims_.size(); }
    int dim_of(std::size_t j) const { return dims_[j]; }

    bool is_cycle(std::size_t j) const { return r_[j].empty(); }

    /// Column that kills cell j (has low j), or npos.
    std::size_t killer(std::size_t j) const { return low_to_col_[j]; }

    /// Cycle column j is a homology generator of the subcomplex [0, block_end)
    /// iff no column inside the block kills it.
    bool essential(std::size_t j, std::size_t block_end) const {
        return r_[j].empty() && !(low_to_col_[j] != npos && low_to_col_[j] < block_end);
    }

    /// Homology basis columns of dimension r for the block [block_begin,
    /// block_end), ascending.
    std::vector<std::size_t> basis_columns(std::size_t block_begin, std::size_t block_end,
                                           int r) const {
        std::vector<std::size_t> out;
        for (std::size_t j = block_begin; j < block_end; ++j)
            if (dims_[j] == r && essential(j, block_end)) out.push_back(j);
        return out;
    }

    const Chain<F>& cycle(std::size_t j) const { return v_[j]; }
    const Chain<F>& reduced_column(std::size_t j) const { return r_[j]; }

    /**
     * Coordinates of a cycle in the full-complex homology basis of its
     * dimension: reduce by death columns (boundaries) and record essential
     * cycle coefficients at their lows.
     */
    std::vector<F> express(Chain<F> z, const std::vector<std::size_t>& basis) const {
        std::vector<F> coords(basis.size(), F(0));
        while (!z.empty()) {
            std::size_t low = z.back().first;
            std::size_t j = low_to_col_[low];
            if (j != npos) {
                F lambda = -(z.back().second / r_[j].back().second);
                detail::chain_axpy(z, lambda, r_[j]);
                continue;
            }
            auto it = std::lower_bound(basis.begin(), basis.end(), low);
            if (it == basis.end() || *it != low)
                throw internal_error("express: cycle low is neither a death nor a generator");
            F lambda = z.back().second / v_[low].back().second;
            coords[static_cast<std::size_t>(it - basis.begin())] += lambda;
            detail::chain_axpy(z, -lambda, v_[low]);
        }
        return coords;
    }

private:
    std::vector<int> dims_;
    std::vector<Chain<F>> r_, v_;
    std::vector<std::size_t> low_to_col_;
};

/**
 * Per-dimension homology of a cut complex and the two inclusion-induced
 * matrices from the fiber copies.
 */
template <class F>
struct HomologyData {
    std::vector<std::size_t> betti_y1, betti_y2, betti_total;  // index = dimension r
    std::vector<Matrix<F>> a, b;  // a[r]: H_r(total) x H_r(Y1), b[r]: ... x H_r(Y2)
};

template <class F>
HomologyData<F> cut_homology(const CutComplex& y, int r_max, const F& unit = F(1)) {
    std::vector<int> dims(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) dims[i] = y.cells[i].dim;
    BoundaryReduction<F> red(std::move(dims), y.boundary, unit);

    std::size_t n1 = y.y1_count, n2 = y.y2_count, n = y.size();
    HomologyData<F> h;
    for (int r = 0; r <= r_max; ++r) {
        std::vector<std::size_t> basis1 = red.basis_columns(0, n1, r);
        std::vector<std::size_t> basis2 = red.basis_columns(n1, n1 + n2, r);
        std::vector<std::size_t> basis = red.basis_columns(0, n, r);
        h.betti_y1.push_back(basis1.size());
        h.betti_y2.push_back(basis2.size());
        h.betti_total.push_back(basis.size());
        Matrix<F> a(basis.size(), basis1.size());
        for (std::size_t c = 0; c < basis1.size(); ++c)
            a.set_col(c, red.express(red.cycle(basis1[c]), basis));
        Matrix<F> b(basis.size(), basis2.size());
        for (std::size_t c = 0; c < basis2.size(); ++c)
            b.set_col(c, red.express(red.cycle(basis2[c]), basis));
        h.a.push_back(std::move(a));
        h.b.push_back(std::move(b));
    }
    return h;
}

/// Betti numbers of a plain simplicial complex over the coefficient field,
/// dimensions 0..dim(x).
template <class F>
std::vector<std::size_t> betti_numbers(const SimplicialComplex& x, const F& unit = F(1)) {
    std::vector<int> dims(x.size());
    std::vector<std::vector<std::pair<std::size_t, int>>> cols(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        dims[i] = x.dim_of(i);
        cols[i] = x.boundary(i);
        std::sort(cols[i].begin(), cols[i].end());
    }
    BoundaryReduction<F> red(std::move(dims), cols, unit);
    std::vector<std::size_t> betti(static_cast<std::size_t>(x.dim() + 1), 0);
    for (int r = 0; r <= x.dim(); ++r)
        betti[static_cast<std::size_t>(r)] = red.basis_columns(0, x.size(), r).size();
    return betti;
}

}  // namespace jcell

#endif
