/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef JCELL_TESTS_HELPERS_HPP
#define JCELL_TESTS_HELPERS_HPP

#include <cstdint>
#include <vector>

#include "echelon.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace jtest {

using jcell::Fp;
using jcell::Matrix;
using jcell::Polynomial;
using jcell::Rational;

inline Matrix<Rational> qmat(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
    return Matrix<Rational>::from_rows(r);
}

inline Matrix<Fp> fmat(std::uint32_t p, const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Fp>> r;
    for (const auto& row : rows) {
        std::vector<Fp> out;
        for (long v : row) out.emplace_back(v, p);
        r.push_back(std::move(out));
    }
    return Matrix<Fp>::from_rows(r);
}

inline Polynomial<Rational> qpoly(const std::vector<long>& coeffs_low_first) {
    std::vector<Rational> c(coeffs_low_first.begin(), coeffs_low_first.end());
    return Polynomial<Rational>(std::move(c));
}

inline Polynomial<Fp> fpoly(std::uint32_t p, const std::vector<long>& coeffs_low_first) {
    std::vector<Fp> c;
    for (long v : coeffs_low_first) c.emplace_back(v, p);
    return Polynomial<Fp>(std::move(c));
}

// Deterministic generator for randomized property tests.
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline Matrix<Rational> random_qmat(Rng& rng, std::size_t rows, std::size_t cols, long lo = -3,
                                    long hi = 3) {
    Matrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(rng.range(lo, hi));
    return m;
}

inline Matrix<Fp> random_fmat(Rng& rng, std::uint32_t p, std::size_t rows, std::size_t cols) {
    Matrix<Fp> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Fp(rng.range(-3, 3), p);
    return m;
}

// Random invertible square matrix (retry until the rank is full).
template <class F, class Gen>
Matrix<F> random_invertible(Rng& rng, std::size_t n, Gen gen) {
    for (;;) {
        Matrix<F> m = gen(rng, n, n);
        if (jcell::rank(m) == n) return m;
    }
}

}  // namespace jtest

#endif
