/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef JCELL_PIPELINE_HPP
#define JCELL_PIPELINE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cospan_reduce.hpp"
#include "cut_complex.hpp"
#include "homology.hpp"
#include "relation.hpp"
#include "similarity.hpp"

namespace jcell {

/**
 * A cyclic zigzag of linear maps alpha_i: V(2i-1) -> V(2i) and
 * beta_i: V(2i+1) -> V(2i), indices cyclic with V(2m+1) = V(1).
 */
template <class F>
struct Representation {
    std::size_t m = 0;
    std::vector<std::size_t> dims;  // dim V_1 .. dim V_2m
    std::vector<Matrix<F>> alpha, beta;

    void validate() const {
        if (m == 0 || dims.size() != 2 * m || alpha.size() != m || beta.size() != m)
            throw std::invalid_argument("Representation: inconsistent sizes");
        for (std::size_t j = 0; j < m; ++j) {
            if (alpha[j].rows() != dims[2 * j + 1] || alpha[j].cols() != dims[2 * j])
                throw std::invalid_argument("Representation: alpha shape mismatch");
            if (beta[j].rows() != dims[2 * j + 1] || beta[j].cols() != dims[(2 * j + 2) % (2 * m)])
                throw std::invalid_argument("Representation: beta shape mismatch");
        }
    }
};

/// The composite relation V1 ~> V1 through the cycle: alternating graphs of
/// the alphas and daggered graphs of the betas.
template <class F>
LinearRelation<F> representation_relation(const Representation<F>& rho) {
    rho.validate();
    LinearRelation<F> rel = LinearRelation<F>::identity(rho.dims[0]);
    for (std::size_t j = 0; j < rho.m; ++j) {
        rel = compose(rel, LinearRelation<F>::from_graph(rho.alpha[j]));
        rel = compose(rel, LinearRelation<F>::from_graph(rho.beta[j]).dagger());
    }
    return rel;
}

/// Monodromy class through the definition-based regularization.
template <class F>
MonodromyClass<F> rep_jordan_oracle(const Representation<F>& rho) {
    return jordan_cells(regularize(representation_relation(rho)).T);
}

/// Monodromy class of a representation; single-cospan inputs go through the
/// matrix reduction, longer cycles through the regularization.
template <class F>
MonodromyClass<F> rep_jordan(const Representation<F>& rho) {
    rho.validate();
    if (rho.m == 1) {
        CospanPair<F> p = reduce(CospanPair<F>(rho.alpha[0], rho.beta[0]));
        return jordan_cells(monodromy_matrix(p));
    }
    return rep_jordan_oracle(rho);
}

/// Jordan cells of a simplicial circle-valued map, one class per dimension
/// r = 0..r_max.
template <class F>
std::vector<MonodromyClass<F>> jordan_cells_of_map(const SimplicialComplex& x, const CircleMap& f,
                                                   const Rational& theta, int r_max,
                                                   const F& unit = F(1)) {
    CutComplex y = build_cut(x, f, theta);
    HomologyData<F> h = cut_homology(y, r_max, unit);
    std::vector<MonodromyClass<F>> out;
    for (int r = 0; r <= r_max; ++r) {
        CospanPair<F> p =
            reduce(CospanPair<F>(h.a[static_cast<std::size_t>(r)], h.b[static_cast<std::size_t>(r)]));
        out.push_back(jordan_cells(monodromy_matrix(p)));
    }
    return out;
}

/**
 * Novikov Betti numbers from ordinary Betti numbers and the Jordan cells:
 * beta^N_r = beta_r - #J_r(1) - #J_(r-1)(1). Cells are counted, not their
 * sizes. Throws when a result would be negative, which signals inconsistent
 * inputs.
 */
template <class F>
std::vector<long> novikov_betti(const std::vector<std::size_t>& betti,
                                const std::vector<MonodromyClass<F>>& cells,
                                const F& unit = F(1)) {
    std::vector<long> out;
    for (std::size_t r = 0; r < betti.size(); ++r) {
        long v = static_cast<long>(betti[r]);
        if (r < cells.size()) v -= static_cast<long>(cells_at(cells[r], unit));
        if (r >= 1 && r - 1 < cells.size()) v -= static_cast<long>(cells_at(cells[r - 1], unit));
        if (v < 0) throw internal_error("novikov_betti: negative value at r = " + std::to_string(r));
        out.push_back(v);
    }
    return out;
}

/// Dimensions of homology with coefficients in the rank-one local system
/// attached to u: beta^N_r + #J_r(1/u) + #J_(r-1)(u).
template <class F>
std::vector<long> local_betti(const std::vector<long>& novikov,
                              const std::vector<MonodromyClass<F>>& cells, const F& u) {
    if (u.is_zero()) throw std::invalid_argument("local_betti: u must be nonzero");
    F uinv = u.inv();
    std::vector<long> out;
    for (std::size_t r = 0; r < novikov.size(); ++r) {
        long v = novikov[r];
        if (r < cells.size()) v += static_cast<long>(cells_at(cells[r], uinv));
        if (r >= 1 && r - 1 < cells.size()) v += static_cast<long>(cells_at(cells[r - 1], u));
        out.push_back(v);
    }
    return out;
}

/**
 * Betti numbers of the homotopy-theoretic fiber (the infinite cyclic cover):
 * defined only when the Novikov Betti numbers vanish through the queried
 * range, in which case dim H_r = sum over cells of size times factor degree.
 */
template <class F>
struct FiberBetti {
    std::optional<std::vector<std::size_t>> values;
    std::size_t offending_r = 0;  // meaningful when !values
};

template <class F>
FiberBetti<F> fiber_betti(const std::vector<MonodromyClass<F>>& cells,
                          const std::vector<long>& novikov) {
    FiberBetti<F> out;
    for (std::size_t r = 0; r < novikov.size(); ++r)
        if (novikov[r] != 0) {
            out.offending_r = r;
            return out;
        }
    std::vector<std::size_t> vals;
    for (const auto& cls : cells) {
        std::size_t total = 0;
        for (const auto& cell : cls.cells)
            total += cell.power * static_cast<std::size_t>(cell.factor.degree());
        vals.push_back(total);
    }
    out.values = std::move(vals);
    return out;
}

/// Monic Alexander polynomial: the product of the elementary divisors of the
/// dimension-one monodromy.
template <class F>
Polynomial<F> alexander_poly(const MonodromyClass<F>& dim1) {
    Polynomial<F> p(F(1));
    for (const auto& cell : dim1.cells) p = p * cell.factor.pow(cell.power);
    return p;
}

}  // namespace jcell

#endif
