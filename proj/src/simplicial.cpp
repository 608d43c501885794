/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#include "simplicial.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "errors.hpp"

namespace jcell {

namespace {

std::string simplex_str(const std::vector<int>& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "]";
}

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(std::size_t vertex_count,
                                                    std::vector<std::vector<int>> simplices) {
    std::set<std::vector<int>> closed;
    for (auto& s : simplices) {
        std::sort(s.begin(), s.end());
        if (s.empty()) throw parse_error("empty simplex");
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw parse_error("repeated vertex in simplex " + simplex_str(s));
        if (s.front() < 0 || static_cast<std::size_t>(s.back()) >= vertex_count)
            throw parse_error("vertex index out of range in simplex " + simplex_str(s));
        // add all nonempty subsets
        std::size_t k = s.size();
        for (std::size_t mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> face;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (1u << b)) face.push_back(s[b]);
            closed.insert(std::move(face));
        }
    }
    SimplicialComplex x;
    x.vertex_count_ = vertex_count;
    x.simplices_.assign(closed.begin(), closed.end());
    std::sort(x.simplices_.begin(), x.simplices_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    for (std::size_t i = 0; i < x.simplices_.size(); ++i) x.index_[x.simplices_[i]] = i;
    return x;
}

int SimplicialComplex::dim() const {
    return simplices_.empty() ? -1 : static_cast<int>(simplices_.back().size()) - 1;
}

long SimplicialComplex::euler() const {
    long chi = 0;
    for (const auto& s : simplices_) chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

std::size_t SimplicialComplex::index_of(const std::vector<int>& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw internal_error("simplex not in complex: " + simplex_str(s));
    return it->second;
}

std::vector<std::pair<std::size_t, int>> SimplicialComplex::boundary(std::size_t i) const {
    const std::vector<int>& s = simplices_[i];
    std::vector<std::pair<std::size_t, int>> out;
    if (s.size() == 1) return out;
    int sign = 1;
    for (std::size_t k = 0; k < s.size(); ++k) {
        std::vector<int> face;
        face.reserve(s.size() - 1);
        for (std::size_t j = 0; j < s.size(); ++j)
            if (j != k) face.push_back(s[j]);
        out.emplace_back(index_of(face), sign);
        sign = -sign;
    }
    return out;
}

Rational normalize_turn(const Rational& t) {
    return t - Rational(t.floor());
}

CircleMap CircleMap::from_turns(std::vector<Rational> turns) {
    CircleMap f;
    f.angles.reserve(turns.size());
    for (auto& t : turns) f.angles.push_back(normalize_turn(t));
    return f;
}

SimplexWindow lift_simplex(const std::vector<int>& simplex, const CircleMap& f) {
    std::vector<Rational> vals;
    vals.reserve(simplex.size());
    for (int v : simplex) vals.push_back(f.angles[static_cast<std::size_t>(v)]);
    std::vector<Rational> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    // largest circular gap; the values fit in an open arc of width < 1/2
    // exactly when it exceeds half a turn
    std::size_t k = sorted.size();
    Rational best_gap = sorted.front() + Rational(1) - sorted.back();
    std::size_t best_at = k - 1;  // gap after sorted[best_at]
    for (std::size_t i = 0; i + 1 < k; ++i) {
        Rational gap = sorted[i + 1] - sorted[i];
        if (gap > best_gap) {
            best_gap = gap;
            best_at = i;
        }
    }
    if (!(best_gap > Rational(1, 2)))
        throw parse_error("simplex " + simplex_str(simplex) +
                          " does not fit in an open half-turn arc");
    Rational start = sorted[(best_at + 1) % k];
    SimplexWindow w;
    w.lifts.reserve(k);
    for (const Rational& v : vals) w.lifts.push_back(v < start ? v + Rational(1) : v);
    w.lo = start;
    w.hi = *std::max_element(w.lifts.begin(), w.lifts.end());
    return w;
}

void validate_circle_map(const SimplicialComplex& x, const CircleMap& f) {
    if (f.angles.size() != x.vertex_count())
        throw parse_error("map has " + std::to_string(f.angles.size()) + " angles for " +
                          std::to_string(x.vertex_count()) + " vertices");
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto& s = x.simplex(i);
        if (s.size() < 2) continue;
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b)
                if (f.angles[static_cast<std::size_t>(s[a])] ==
                    f.angles[static_cast<std::size_t>(s[b])])
                    throw parse_error("simplex " + simplex_str(s) +
                                      " has two vertices with equal angle");
        lift_simplex(s, f);  // throws when the arc is too wide
    }
}

bool validate_regular_angle(const CircleMap& f, const Rational& theta) {
    Rational t = normalize_turn(theta);
    for (const Rational& a : f.angles)
        if (a == t) return false;
    return true;
}

Rational auto_theta(const CircleMap& f) {
    if (f.angles.empty()) return Rational(1, 2);
    std::vector<Rational> sorted = f.angles;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::size_t k = sorted.size();
    Rational best_gap = sorted.front() + Rational(1) - sorted.back();
    std::size_t best_at = k - 1;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        Rational gap = sorted[i + 1] - sorted[i];
        if (gap > best_gap) {
            best_gap = gap;
            best_at = i;
        }
    }
    return normalize_turn(sorted[best_at] + best_gap / Rational(2));
}

bool simplex_crosses(const std::vector<int>& simplex, const CircleMap& f, const Rational& theta) {
    SimplexWindow w = lift_simplex(simplex, f);
    Rational t = normalize_turn(theta);
    // shift theta into [lo, lo + 1)
    Rational shifted = t + Rational((w.lo - t).floor());
    if (shifted < w.lo) shifted += Rational(1);
    return shifted > w.lo && shifted < w.hi;
}

std::pair<SimplicialComplex, CircleMap> barycentric_subdivision(const SimplicialComplex& x,
                                                                const CircleMap& f) {
    std::size_t n = x.size();
    // candidate barycenter values: mean of the lifted vertex values, mod 1
    std::vector<Rational> cand(n);
    std::vector<Rational> slack(n);  // per-simplex arc slack below 1/2
    for (std::size_t i = 0; i < n; ++i) {
        SimplexWindow w = lift_simplex(x.simplex(i), f);
        Rational sum(0);
        for (const Rational& l : w.lifts) sum += l;
        cand[i] = normalize_turn(sum / Rational(static_cast<long>(w.lifts.size())));
        slack[i] = Rational(1, 2) - (w.hi - w.lo);
    }
    // deterministic perturbation by dimension; small enough to keep distinct
    // candidates distinct and every flag inside an open half-turn arc
    Rational delta = *std::min_element(slack.begin(), slack.end());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational d = normalize_turn(cand[i] - cand[j]);
            if (d > Rational(1, 2)) d = Rational(1) - d;
            if (!d.is_zero() && d < delta) delta = d;
        }
    delta = delta / Rational(2 * (x.dim() + 2));

    // flags: every permutation of every maximal simplex contributes the chain
    // of its prefixes
    std::vector<char> maximal(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [j, sign] : x.boundary(i)) {
            (void)sign;
            maximal[j] = 0;
        }
    std::vector<std::vector<int>> flags;
    for (std::size_t i = 0; i < n; ++i) {
        if (!maximal[i]) continue;
        std::vector<int> verts = x.simplex(i);
        std::sort(verts.begin(), verts.end());
        do {
            std::vector<int> chain_cell;
            std::vector<int> prefix;
            for (int v : verts) {
                prefix.push_back(v);
                std::vector<int> sorted_prefix = prefix;
                std::sort(sorted_prefix.begin(), sorted_prefix.end());
                chain_cell.push_back(static_cast<int>(x.index_of(sorted_prefix)));
            }
            flags.push_back(std::move(chain_cell));
        } while (std::next_permutation(verts.begin(), verts.end()));
    }
    SimplicialComplex sd = SimplicialComplex::from_simplices(n, std::move(flags));
    std::vector<Rational> angles(n);
    for (std::size_t i = 0; i < n; ++i)
        angles[i] = normalize_turn(cand[i] + delta * Rational(static_cast<long>(x.dim_of(i))));
    CircleMap sdf = CircleMap::from_turns(std::move(angles));
    validate_circle_map(sd, sdf);
    return {std::move(sd), std::move(sdf)};
}

}  // namespace jcell
