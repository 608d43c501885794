/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef JCELL_SIMPLICIAL_HPP
#define JCELL_SIMPLICIAL_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "field.hpp"

namespace jcell {

/**
 * Finite abstract simplicial complex. Simplices are strictly increasing
 * vertex lists, the set is closed under faces, and the list is sorted by
 * (dimension, lexicographic). Orientation is the one induced by the vertex
 * order.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds from any simplex list: faces are added, duplicates removed.
    static SimplicialComplex from_simplices(std::size_t vertex_count,
                                            std::vector<std::vector<int>> simplices);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t size() const { return simplices_.size(); }
    const std::vector<std::vector<int>>& simplices() const { return simplices_; }
    const std::vector<int>& simplex(std::size_t i) const { return simplices_[i]; }
    int dim_of(std::size_t i) const { return static_cast<int>(simplices_[i].size()) - 1; }
    int dim() const;
    long euler() const;

    std::size_t index_of(const std::vector<int>& s) const;
    bool contains(const std::vector<int>& s) const { return index_.count(s) != 0; }

    /// Codimension-one faces with incidence signs (-1)^i.
    std::vector<std::pair<std::size_t, int>> boundary(std::size_t i) const;

private:
    std::size_t vertex_count_ = 0;
    std::vector<std::vector<int>> simplices_;
    std::map<std::vector<int>, std::size_t> index_;
};

/// Angle in turns, always normalized to [0, 1).
Rational normalize_turn(const Rational& t);

/**
 * A simplicial circle-valued map given by one exact angle (in turns) per
 * vertex. Valid for a complex when every simplex has pairwise distinct
 * vertex values fitting in an open arc shorter than half a turn, which makes
 * the local logarithm determination unique.
 */
struct CircleMap {
    std::vector<Rational> angles;

    static CircleMap from_turns(std::vector<Rational> turns);
};

/// Lifts of a simplex's vertex values to a real interval of width < 1/2.
struct SimplexWindow {
    std::vector<Rational> lifts;  // one per simplex vertex, same order
    Rational lo, hi;              // lo = min lift, hi = max lift
};

SimplexWindow lift_simplex(const std::vector<int>& simplex, const CircleMap& f);

/// Throws parse_error when (X, f) violates the circle-map invariants.
void validate_circle_map(const SimplicialComplex& x, const CircleMap& f);

/// True iff theta differs from every vertex angle (exact comparison).
bool validate_regular_angle(const CircleMap& f, const Rational& theta);

/// Midpoint of the largest gap between vertex angles; 1/2 for no vertices.
Rational auto_theta(const CircleMap& f);

/// True iff the simplex meets the theta fiber in its interior.
bool simplex_crosses(const std::vector<int>& simplex, const CircleMap& f, const Rational& theta);

/**
 * Barycentric subdivision of the pair: new vertices are the simplices of x
 * (indexed identically), simplices are the flags, and the map sends a
 * barycenter near the mean of its simplex's lifted values, deterministically
 * perturbed so the result is again a valid circle map.
 */
std::pair<SimplicialComplex, CircleMap> barycentric_subdivision(const SimplicialComplex& x,
                                                                const CircleMap& f);

}  // namespace jcell

#endif
