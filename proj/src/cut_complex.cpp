/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#include "cut_complex.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

#include "errors.hpp"

namespace jcell {

long CutComplex::euler() const {
    long chi = 0;
    for (const CutCell& c : cells) chi += (c.dim % 2 == 0) ? 1 : -1;
    return chi;
}

long CutComplex::fiber_euler() const {
    long chi = 0;
    for (const CutCell& c : cells)
        if (c.kind == CellKind::Copy1) chi += (c.dim % 2 == 0) ? 1 : -1;
    return chi;
}

std::vector<std::size_t> CutComplex::census_by_dim() const {
    std::vector<std::size_t> n(static_cast<std::size_t>(max_dim + 1), 0);
    for (const CutCell& c : cells) ++n[static_cast<std::size_t>(c.dim)];
    return n;
}

std::vector<char> classify(const SimplicialComplex& x, const CircleMap& f, const Rational& theta) {
    if (!validate_regular_angle(f, theta))
        throw angle_error("theta = " + normalize_turn(theta).str() + " equals a vertex angle");
    std::vector<char> crossing(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        crossing[i] = simplex_crosses(x.simplex(i), f, theta) ? 1 : 0;
    return crossing;
}

std::vector<std::size_t> good_order(
    std::vector<std::size_t> order,
    const std::function<bool(std::size_t, std::size_t)>& must_precede) {
    for (std::size_t n = 1; n < order.size(); ++n) {
        std::size_t target = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (must_precede(order[n], order[j])) {
                target = j;
                break;
            }
        }
        if (target != n) {
            std::size_t moved = order[n];
            for (std::size_t k = n; k > target; --k) order[k] = order[k - 1];
            order[target] = moved;
        }
    }
    return order;
}

CutComplex build_cut(const SimplicialComplex& x, const CircleMap& f, const Rational& theta) {
    std::vector<char> crossing = classify(x, f, theta);
    Rational t = normalize_turn(theta);

    // provisional cells
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<CutCell> cells;
    std::vector<std::size_t> u_id(x.size(), npos), p_id(x.size(), npos), m_id(x.size(), npos),
        c1_id(x.size(), npos), c2_id(x.size(), npos);
    for (std::size_t s = 0; s < x.size(); ++s) {
        int d = x.dim_of(s);
        if (!crossing[s]) {
            u_id[s] = cells.size();
            cells.push_back({CellKind::Uncut, s, d});
        } else {
            c1_id[s] = cells.size();
            cells.push_back({CellKind::Copy1, s, d - 1});
            c2_id[s] = cells.size();
            cells.push_back({CellKind::Copy2, s, d - 1});
            p_id[s] = cells.size();
            cells.push_back({CellKind::Plus, s, d});
            m_id[s] = cells.size();
            cells.push_back({CellKind::Minus, s, d});
        }
    }

    // incidences in provisional ids
    std::vector<std::vector<std::pair<std::size_t, int>>> faces(cells.size());
    auto add = [&faces](std::size_t upper, std::size_t lower, int sign) {
        faces[upper].emplace_back(lower, sign);
    };
    for (std::size_t s = 0; s < x.size(); ++s) {
        if (crossing[s]) {
            // the fiber copies bound the two halves with alternating signs
            int d = x.dim_of(s);
            int sgn = (d % 2 == 0) ? 1 : -1;
            add(p_id[s], c1_id[s], sgn);
            add(m_id[s], c2_id[s], -sgn);
        }
        SimplexWindow w;
        Rational theta_lift;
        if (crossing[s]) {
            w = lift_simplex(x.simplex(s), f);
            theta_lift = t + Rational((w.lo - t).floor());
            if (theta_lift < w.lo) theta_lift += Rational(1);
        }
        for (const auto& [fidx, sign] : x.boundary(s)) {
            if (!crossing[s]) {
                if (crossing[fidx]) throw internal_error("uncut simplex with crossing face");
                add(u_id[s], u_id[fidx], sign);
                continue;
            }
            if (crossing[fidx]) {
                add(p_id[s], p_id[fidx], sign);
                add(m_id[s], m_id[fidx], sign);
                if (x.dim_of(s) >= 2) {
                    add(c1_id[s], c1_id[fidx], sign);
                    add(c2_id[s], c2_id[fidx], sign);
                }
                continue;
            }
            // uncut face of a crossing simplex: decide its side within the
            // window of s
            const std::vector<int>& sv = x.simplex(s);
            bool above = false, below = false;
            for (int v : x.simplex(fidx)) {
                std::size_t pos = static_cast<std::size_t>(
                    std::lower_bound(sv.begin(), sv.end(), v) - sv.begin());
                if (w.lifts[pos] > theta_lift)
                    above = true;
                else
                    below = true;
            }
            if (above && below) throw internal_error("uncut face straddles the cut");
            add(above ? p_id[s] : m_id[s], u_id[fidx], sign);
        }
    }

    // initial order: Copy1 block, Copy2 block (same order), then the rest
    auto kind_class = [&cells](std::size_t id) {
        switch (cells[id].kind) {
            case CellKind::Copy1: return 0;
            case CellKind::Copy2: return 1;
            default: return 2;
        }
    };
    std::vector<std::size_t> initial(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) initial[i] = i;
    std::sort(initial.begin(), initial.end(), [&](std::size_t a, std::size_t b) {
        int ca = kind_class(a), cb = kind_class(b);
        if (ca != cb) return ca < cb;
        if (cells[a].dim != cells[b].dim) return cells[a].dim < cells[b].dim;
        if (cells[a].provenance != cells[b].provenance)
            return cells[a].provenance < cells[b].provenance;
        return static_cast<int>(cells[a].kind) < static_cast<int>(cells[b].kind);
    });

    // transitive face closure for the ordering predicate; cells processed by
    // increasing dimension so one pass suffices
    std::size_t nwords = (cells.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> is_face(cells.size(),
                                                    std::vector<std::uint64_t>(nwords, 0));
    std::vector<std::size_t> by_dim(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) by_dim[i] = i;
    std::sort(by_dim.begin(), by_dim.end(),
              [&cells](std::size_t a, std::size_t b) { return cells[a].dim < cells[b].dim; });
    for (std::size_t c : by_dim)
        for (const auto& [fc, sign] : faces[c]) {
            (void)sign;
            is_face[c][fc / 64] |= (std::uint64_t{1} << (fc % 64));
            for (std::size_t w = 0; w < nwords; ++w) is_face[c][w] |= is_face[fc][w];
        }
    auto must_precede = [&](std::size_t a, std::size_t b) {
        if (kind_class(a) < kind_class(b)) return true;
        return (is_face[b][a / 64] >> (a % 64)) & 1;
    };
    std::vector<std::size_t> order = good_order(std::move(initial), must_precede);

    CutComplex y;
    y.cells.reserve(cells.size());
    std::vector<std::size_t> pos(cells.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        pos[order[i]] = i;
        y.cells.push_back(cells[order[i]]);
    }
    y.boundary.resize(cells.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (const auto& [fc, sign] : faces[order[i]]) {
            if (pos[fc] >= i) throw internal_error("cut order is not upper triangular");
            y.boundary[i].emplace_back(pos[fc], sign);
        }
        std::sort(y.boundary[i].begin(), y.boundary[i].end());
    }
    for (const CutCell& c : y.cells) {
        if (c.kind == CellKind::Copy1) ++y.y1_count;
        if (c.kind == CellKind::Copy2) ++y.y2_count;
        if (c.dim > y.max_dim) y.max_dim = c.dim;
    }
    for (std::size_t s = 0; s < x.size(); ++s) (crossing[s] ? y.n_crossing : y.n_uncut) += 1;
    validate_cut(y, x);
    return y;
}

void validate_cut(const CutComplex& y, const SimplicialComplex& x) {
    std::size_t n = y.size();
    // census |Y| = |X''| + 4 |X'|
    if (n != y.n_uncut + 4 * y.n_crossing) throw internal_error("cut census violated");
    if (y.y1_count != y.n_crossing || y.y2_count != y.n_crossing)
        throw internal_error("fiber copy count violated");
    for (std::size_t i = 0; i < n; ++i) {
        if (i < y.y1_count && y.cells[i].kind != CellKind::Copy1)
            throw internal_error("Copy1 block does not lead");
        if (i >= y.y1_count && i < y.y1_count + y.y2_count && y.cells[i].kind != CellKind::Copy2)
            throw internal_error("Copy2 block does not follow Copy1");
        for (const auto& [face, sign] : y.boundary[i]) {
            if (face >= i) throw internal_error("incidence not upper triangular");
            if (sign != 1 && sign != -1) throw internal_error("incidence entry not a unit");
            if (y.cells[face].dim != y.cells[i].dim - 1)
                throw internal_error("incidence across non-adjacent dimensions");
            bool i1 = y.cells[i].kind == CellKind::Copy1, f1 = y.cells[face].kind == CellKind::Copy1;
            bool i2 = y.cells[i].kind == CellKind::Copy2, f2 = y.cells[face].kind == CellKind::Copy2;
            if (i1 != f1 || i2 != f2) {
                // only Plus may touch Copy1, only Minus may touch Copy2
                bool ok = (y.cells[i].kind == CellKind::Plus && f1) ||
                          (y.cells[i].kind == CellKind::Minus && f2);
                if (!ok) throw internal_error("forbidden incidence across blocks");
            }
        }
    }
    // boundary of boundary vanishes, over the integers
    for (std::size_t i = 0; i < n; ++i) {
        std::map<std::size_t, long> acc;
        for (const auto& [face, s1] : y.boundary[i])
            for (const auto& [sub, s2] : y.boundary[face]) acc[sub] += static_cast<long>(s1) * s2;
        for (const auto& [cell, coeff] : acc)
            if (coeff != 0)
                throw internal_error("boundary of boundary nonzero at cells " + std::to_string(i) +
                                     " -> " + std::to_string(cell));
    }
    // Euler characteristic bookkeeping: chi(Y) = chi(X) + chi(fiber)
    if (y.euler() != x.euler() + y.fiber_euler())
        throw internal_error("Euler characteristic mismatch");
}

}  // namespace jcell
