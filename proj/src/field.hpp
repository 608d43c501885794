/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef JCELL_FIELD_HPP
#define JCELL_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace jcell {

/**
 * Exact rational scalar backed by GMP. Values are kept in canonical form:
 * lowest terms, positive denominator.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, field literal
    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(const mpq_class& q) : v_(q) {
        if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }

    // Accepts "p" or "p/q" with optional leading minus.
    static Rational parse(const std::string& s) {
        if (s.empty()) throw parse_error("empty rational literal");
        for (char c : s) {
            if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
                throw parse_error("bad rational literal: '" + s + "'");
        }
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw parse_error("bad rational literal: '" + s + "'");
        if (q.get_den() == 0) throw parse_error("zero denominator in '" + s + "'");
        q.canonicalize();
        return Rational(std::move(q));
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Rational inv() const {
        if (is_zero()) throw std::invalid_argument("Rational: division by zero");
        return Rational(mpq_class(1 / v_));
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    bool sort_less(const Rational& o) const { return v_ < o.v_; }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }

    // Largest integer <= value.
    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    std::string str() const { return v_.get_str(); }
    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

/**
 * Prime-field scalar with a per-element modulus tag.
 *
 * Elements built from a plain integer carry modulus 0, meaning "literal not
 * yet attached to a field"; any arithmetic with a tagged element adopts that
 * element's modulus. Mixing two distinct nonzero moduli is a bug and throws.
 */
class Fp {
public:
    Fp() = default;
    Fp(long v) : v_(v) {}  // NOLINT: implicit by design, field literal
    Fp(std::int64_t v, std::uint32_t p) : v_(normalize(v, p)), p_(p) {}

    std::uint32_t modulus() const { return p_; }
    std::int64_t value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return Fp(-v_, p_); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        return Fp(a.v_ + b.v_, unify(a, b));
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        return Fp(a.v_ - b.v_, unify(a, b));
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint32_t p = unify(a, b);
        if (p == 0) return Fp(a.v_ * b.v_, 0);
        __int128 prod = static_cast<__int128>(normalize(a.v_, p)) * normalize(b.v_, p);
        return Fp(static_cast<std::int64_t>(prod % p), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp inv() const {
        if (p_ == 0) {
            if (v_ == 1 || v_ == -1) return *this;
            if (v_ == 0) throw std::invalid_argument("Fp: division by zero");
            throw internal_error("Fp: inverting an untagged literal");
        }
        if (v_ == 0) throw std::invalid_argument("Fp: division by zero");
        // extended Euclid on (v_, p_)
        std::int64_t t = 0, newt = 1;
        std::int64_t r = p_, newr = v_;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (r != 1) throw std::invalid_argument("Fp: modulus is not prime");
        return Fp(t, p_);
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        std::uint32_t p = unify(a, b);
        if (p == 0) return a.v_ == b.v_;
        return normalize(a.v_, p) == normalize(b.v_, p);
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    bool sort_less(const Fp& o) const {
        std::uint32_t p = unify(*this, o);
        return normalize(v_, p) < normalize(o.v_, p);
    }

    std::string str() const { return std::to_string(v_); }

private:
    static std::int64_t normalize(std::int64_t v, std::uint32_t p) {
        if (p == 0) return v;
        v %= static_cast<std::int64_t>(p);
        if (v < 0) v += p;
        return v;
    }
    static std::uint32_t unify(const Fp& a, const Fp& b) {
        if (a.p_ == 0) return b.p_;
        if (b.p_ == 0) return a.p_;
        if (a.p_ != b.p_) throw internal_error("Fp: mixed moduli");
        return a.p_;
    }

    std::int64_t v_ = 0;
    std::uint32_t p_ = 0;
};

}  // namespace jcell

#endif
