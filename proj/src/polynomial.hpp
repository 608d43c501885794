/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef JCELL_POLYNOMIAL_HPP
#define JCELL_POLYNOMIAL_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace jcell {

/**
 * Dense univariate polynomial over an exact field. Coefficients are stored
 * lowest degree first; the leading coefficient is nonzero unless the
 * polynomial is zero (empty coefficient vector).
 */
template <class F>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(F c0) {  // NOLINT: implicit constant
        if (!c0.is_zero()) c_.push_back(std::move(c0));
    }
    explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial var() { return Polynomial(std::vector<F>{F(0), F(1)}); }

    static Polynomial monomial(F c, std::size_t k) {
        if (c.is_zero()) return Polynomial();
        std::vector<F> v(k + 1, F(0));
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    const F& lc() const {
        if (c_.empty()) throw std::invalid_argument("Polynomial: lc of zero");
        return c_.back();
    }

    F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(0); }
    const std::vector<F>& coeffs() const { return c_; }

    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    Polynomial monic() const {
        if (is_zero()) throw std::invalid_argument("Polynomial: monic of zero");
        if (is_monic()) return *this;
        return *this * lc().inv();
    }

    F eval(const F& x) const {
        F acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<F> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * F(static_cast<long>(i));
        return Polynomial(std::move(d));
    }

    /// Coefficients reversed: z^deg * p(1/z).
    Polynomial reverse() const {
        std::vector<F> r(c_.rbegin(), c_.rend());
        return Polynomial(std::move(r));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return Polynomial(std::move(c));
    }
    Polynomial operator-() const {
        std::vector<F> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const F& s) {
        std::vector<F> c(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i] * s;
        return Polynomial(std::move(c));
    }

    Polynomial pow(std::size_t k) const {
        Polynomial r(F(1)), b = *this;
        while (k) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Deterministic total order: by degree, then coefficients from the
    /// highest term down.
    bool sort_less(const Polynomial& o) const {
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (!(c_[i] == o.c_[i])) return c_[i].sort_less(o.c_[i]);
        }
        return false;
    }

    std::string str(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            std::string cs = c_[i].str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) { os << "-"; cs = cs.substr(1); }
            } else {
                os << (neg ? " - " : " + ");
                if (neg) cs = cs.substr(1);
            }
            first = false;
            if (i == 0) {
                os << cs;
            } else {
                if (cs != "1") os << cs;
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_;
};

template <class F>
struct PolyDivMod {
    Polynomial<F> quot, rem;
};

template <class F>
PolyDivMod<F> divmod(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (b.is_zero()) throw std::invalid_argument("Polynomial: division by zero");
    if (a.degree() < b.degree()) return {Polynomial<F>(), a};
    std::vector<F> rem(a.coeffs());
    std::size_t qn = static_cast<std::size_t>(a.degree() - b.degree()) + 1;
    std::vector<F> quot(qn, F(0));
    F lcinv = b.lc().inv();
    for (std::size_t k = qn; k-- > 0;) {
        F c = rem[k + b.degree()] * lcinv;
        if (c.is_zero()) continue;
        quot[k] = c;
        for (long j = 0; j <= b.degree(); ++j) rem[k + j] -= c * b.coeff(j);
    }
    return {Polynomial<F>(std::move(quot)), Polynomial<F>(std::move(rem))};
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <class F>
Polynomial<F> poly_gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        Polynomial<F> r = divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

template <class F>
struct PolyExtGcd {
    Polynomial<F> g, s, t;  // g = s*a + t*b, g monic (or zero)
};

template <class F>
PolyExtGcd<F> poly_ext_gcd(const Polynomial<F>& a, const Polynomial<F>& b) {
    Polynomial<F> r0 = a, r1 = b;
    Polynomial<F> s0(F(1)), s1, t0, t1(F(1));
    while (!r1.is_zero()) {
        PolyDivMod<F> qr = divmod(r0, r1);
        Polynomial<F> r2 = qr.rem;
        Polynomial<F> s2 = s0 - qr.quot * s1;
        Polynomial<F> t2 = t0 - qr.quot * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    F c = r0.lc().inv();
    return {r0 * c, s0 * c, t0 * c};
}

/// Exact quotient; throws when the division leaves a remainder.
template <class F>
Polynomial<F> poly_divexact(const Polynomial<F>& a, const Polynomial<F>& b) {
    PolyDivMod<F> qr = divmod(a, b);
    if (!qr.rem.is_zero()) throw std::invalid_argument("poly_divexact: inexact division");
    return qr.quot;
}

template <class F>
F poly_eval(const Polynomial<F>& p, const F& x) {
    return p.eval(x);
}

}  // namespace jcell

#endif
