/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef JCELL_CUT_COMPLEX_HPP
#define JCELL_CUT_COMPLEX_HPP

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "simplicial.hpp"

namespace jcell {

enum class CellKind { Uncut, Plus, Minus, Copy1, Copy2 };

/**
 * A cell of the cut complex. Crossing simplices contribute a Plus and a
 * Minus cell of their own dimension and two fiber copies one dimension
 * lower; Copy1 cells bound the Plus side (the fiber seen when leaving theta
 * upward), Copy2 cells bound the Minus side.
 */
struct CutCell {
    CellKind kind = CellKind::Uncut;
    std::size_t provenance = 0;  // simplex index in the base complex
    int dim = 0;
};

/**
 * The compactified complement of a fiber, as an ordered cell complex. The
 * order is good: faces precede cofaces, all Copy1 cells come first, then all
 * Copy2 cells, so the incidence matrix is strictly upper triangular with the
 * two fiber blocks leading.
 */
struct CutComplex {
    std::vector<CutCell> cells;
    // boundary[i]: codim-1 faces of cell i as (face index < i, sign)
    std::vector<std::vector<std::pair<std::size_t, int>>> boundary;
    std::size_t y1_count = 0, y2_count = 0;
    std::size_t n_uncut = 0, n_crossing = 0;
    int max_dim = -1;

    std::size_t size() const { return cells.size(); }
    long euler() const;
    /// Euler characteristic of the fiber from the crossing census.
    long fiber_euler() const;
    std::vector<std::size_t> census_by_dim() const;
};

/// Crossing flags per simplex; throws angle_error when theta is irregular.
std::vector<char> classify(const SimplicialComplex& x, const CircleMap& f, const Rational& theta);

CutComplex build_cut(const SimplicialComplex& x, const CircleMap& f, const Rational& theta);

/**
 * Structural checks: boundary-of-boundary vanishes (integer arithmetic),
 * strict upper triangularity, fiber blocks lead and do not interact, and the
 * five-type cell census. Throws internal_error on violation.
 */
void validate_cut(const CutComplex& y, const SimplicialComplex& x);

/**
 * The ordering algorithm: scans left to right and moves a cell in front of
 * the earliest earlier cell it must precede. One pass suffices when
 * must_precede is transitive, which face-relations plus class levels are.
 * Returns the reordered ids; ids without conflicts keep their relative
 * order.
 */
std::vector<std::size_t> good_order(
    std::vector<std::size_t> initial,
    const std::function<bool(std::size_t, std::size_t)>& must_precede);

}  // namespace jcell

#endif
