/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef JCELL_POLY_FACTOR_HPP
#define JCELL_POLY_FACTOR_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "field.hpp"
#include "polynomial.hpp"

namespace jcell {

template <class F>
using FactorList = std::vector<std::pair<Polynomial<F>, std::size_t>>;

namespace detail {

struct SplitMix64 {
    std::uint64_t s;
    explicit SplitMix64(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// ---------------------------------------------------------------------------
// Factorization over F_p (squarefree / distinct-degree / Cantor-Zassenhaus).
// ---------------------------------------------------------------------------

inline Polynomial<Fp> fp_powmod(const Polynomial<Fp>& base, const mpz_class& e,
                                const Polynomial<Fp>& mod) {
    Polynomial<Fp> r(Fp(1));
    if (e == 0) return divmod(r, mod).rem;
    Polynomial<Fp> b = divmod(base, mod).rem;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = divmod(r * r, mod).rem;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = divmod(r * b, mod).rem;
    }
    return r;
}

// p-th root of f when f' = 0; over the prime field a^(1/p) = a.
inline Polynomial<Fp> fp_pth_root(const Polynomial<Fp>& f, std::uint32_t p) {
    std::vector<Fp> out;
    for (long k = 0; k <= f.degree(); k += p) out.push_back(f.coeff(static_cast<std::size_t>(k)));
    return Polynomial<Fp>(std::move(out));
}

inline void fp_squarefree(const Polynomial<Fp>& f, std::uint32_t p, std::size_t mult,
                          FactorList<Fp>& out) {
    if (f.degree() <= 0) return;
    Polynomial<Fp> df = f.derivative();
    if (df.is_zero()) {
        fp_squarefree(fp_pth_root(f, p), p, mult * p, out);
        return;
    }
    Polynomial<Fp> w = poly_gcd(f, df);
    Polynomial<Fp> b = poly_divexact(f, w);
    std::size_t i = 1;
    while (b.degree() > 0) {
        Polynomial<Fp> y = poly_gcd(b, w);
        Polynomial<Fp> z = poly_divexact(b, y);
        if (z.degree() > 0) out.emplace_back(z, mult * i);
        b = std::move(y);
        w = poly_divexact(w, b);
        ++i;
    }
    if (w.degree() > 0) fp_squarefree(fp_pth_root(w, p), p, mult * p, out);
}

// Splits a squarefree product of degree-d irreducibles.
inline void fp_equal_degree(const Polynomial<Fp>& f, std::uint32_t p, long d, SplitMix64& rng,
                            std::vector<Polynomial<Fp>>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    long n = f.degree();
    mpz_class e;
    if (p != 2) {
        mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
        e = (e - 1) / 2;
    }
    for (;;) {
        std::vector<Fp> ac(static_cast<std::size_t>(n));
        for (auto& c : ac) c = Fp(static_cast<std::int64_t>(rng.next() % p), p);
        Polynomial<Fp> a(std::move(ac));
        if (a.is_zero()) continue;
        Polynomial<Fp> g = poly_gcd(a, f);
        if (g.degree() <= 0 || g.degree() >= n) {
            Polynomial<Fp> b;
            if (p != 2) {
                b = fp_powmod(a, e, f) - Polynomial<Fp>(Fp(1));
            } else {
                Polynomial<Fp> t = divmod(a, f).rem, acc = t;
                for (long i = 1; i < d; ++i) {
                    t = divmod(t * t, f).rem;
                    acc = acc + t;
                }
                b = acc;
            }
            g = poly_gcd(b, f);
            if (g.degree() <= 0 || g.degree() >= n) continue;
        }
        fp_equal_degree(g, p, d, rng, out);
        fp_equal_degree(poly_divexact(f, g), p, d, rng, out);
        return;
    }
}

inline FactorList<Fp> fp_factorize_monic(const Polynomial<Fp>& f, std::uint32_t p) {
    FactorList<Fp> sqf;
    fp_squarefree(f.monic(), p, 1, sqf);
    FactorList<Fp> out;
    for (auto& [g, mult] : sqf) {
        // distinct-degree split
        Polynomial<Fp> rest = g.monic();
        Polynomial<Fp> h = Polynomial<Fp>::var();
        h = divmod(h, rest).rem;
        long d = 0;
        while (rest.degree() > 0 && 2 * (d + 1) <= rest.degree()) {
            ++d;
            h = fp_powmod(h, mpz_class(static_cast<unsigned long>(p)), rest);
            Polynomial<Fp> u = poly_gcd(h - Polynomial<Fp>::var(), rest);
            if (u.degree() > 0) {
                SplitMix64 rng(0x5eedf00dULL ^ (static_cast<std::uint64_t>(p) << 24) ^
                               static_cast<std::uint64_t>(u.degree()));
                std::vector<Polynomial<Fp>> irr;
                fp_equal_degree(u, p, d, rng, irr);
                for (auto& q : irr) out.emplace_back(q, mult);
                rest = poly_divexact(rest, u);
                h = divmod(h, rest).rem;
            }
        }
        if (rest.degree() > 0) out.emplace_back(rest.monic(), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first.sort_less(b.first);
        return a.second < b.second;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers for Hensel lifting (coefficients mod m).
// ---------------------------------------------------------------------------

using ZPoly = std::vector<mpz_class>;  // lowest degree first, trimmed

inline void z_trim(ZPoly& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline ZPoly z_mod(const ZPoly& a, const mpz_class& m) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_mod(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    }
    z_trim(r);
    return r;
}

// Symmetric representative in (-m/2, m/2].
inline ZPoly z_sym(const ZPoly& a, const mpz_class& m) {
    ZPoly r = z_mod(a, m);
    mpz_class half = m / 2;
    for (auto& c : r)
        if (c > half) c -= m;
    z_trim(r);
    return r;
}

inline ZPoly z_mul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return z_mod(r, m);
}

inline ZPoly z_add(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return z_mod(r, m);
}

inline ZPoly z_sub(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return z_mod(r, m);
}

// Division by a monic divisor, all mod m.
inline void z_divmod_monic(const ZPoly& a, const ZPoly& b, const mpz_class& m, ZPoly& q, ZPoly& r) {
    r = z_mod(a, m);
    q.clear();
    if (b.empty() || b.back() != 1) throw internal_error("z_divmod_monic: divisor not monic");
    long db = static_cast<long>(b.size()) - 1;
    long dr = static_cast<long>(r.size()) - 1;
    if (dr < db) return;
    q.assign(static_cast<std::size_t>(dr - db) + 1, mpz_class(0));
    for (long k = dr - db; k >= 0; --k) {
        if (static_cast<std::size_t>(k + db) >= r.size()) continue;
        mpz_class c = r[static_cast<std::size_t>(k + db)];
        if (c == 0) continue;
        q[static_cast<std::size_t>(k)] = c;
        for (long j = 0; j <= db; ++j) {
            mpz_class& t = r[static_cast<std::size_t>(k + j)];
            t -= c * b[static_cast<std::size_t>(j)];
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
        }
    }
    z_trim(r);
    z_trim(q);
}

struct HenselQuad {
    ZPoly g, h, s, t;
};

// One quadratic lifting step: from f = g*h and s*g + t*h = 1 (mod m) to the
// same congruences mod m^2, h monic throughout.
inline HenselQuad hensel_step(const mpz_class& m, const ZPoly& f, const HenselQuad& in) {
    mpz_class m2 = m * m;
    ZPoly e = z_sub(z_mod(f, m2), z_mul(in.g, in.h, m2), m2);
    ZPoly q, r;
    z_divmod_monic(z_mul(in.s, e, m2), in.h, m2, q, r);
    HenselQuad out;
    out.g = z_add(in.g, z_add(z_mul(in.t, e, m2), z_mul(q, in.g, m2), m2), m2);
    out.h = z_add(in.h, r, m2);
    ZPoly one{mpz_class(1)};
    ZPoly b = z_sub(z_add(z_mul(in.s, out.g, m2), z_mul(in.t, out.h, m2), m2), one, m2);
    ZPoly c, d;
    z_divmod_monic(z_mul(in.s, b, m2), out.h, m2, c, d);
    out.s = z_sub(in.s, d, m2);
    out.t = z_sub(z_sub(in.t, z_mul(in.t, b, m2), m2), z_mul(c, out.g, m2), m2);
    return out;
}

inline Polynomial<Fp> z_to_fp(const ZPoly& a, std::uint32_t p) {
    std::vector<Fp> c;
    c.reserve(a.size());
    mpz_class pm(static_cast<unsigned long>(p));
    for (const auto& x : a) {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), x.get_mpz_t(), pm.get_mpz_t());
        c.emplace_back(static_cast<std::int64_t>(r.get_ui()), p);
    }
    return Polynomial<Fp>(std::move(c));
}

inline ZPoly fp_to_z(const Polynomial<Fp>& a) {
    ZPoly c;
    for (long k = 0; k <= a.degree(); ++k)
        c.emplace_back(static_cast<long>(a.coeff(static_cast<std::size_t>(k)).value()));
    z_trim(c);
    return c;
}

// Lifts the mod-p factorization of the monic integer polynomial f to mod P
// (P a power of p), recursively splitting the factor list in two.
inline void hensel_lift_tree(const ZPoly& f, const std::vector<ZPoly>& fs, std::size_t lo,
                             std::size_t hi, std::uint32_t p, const mpz_class& P,
                             std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        out.push_back(z_mod(f, P));
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    mpz_class pm(static_cast<unsigned long>(p));
    ZPoly g{mpz_class(1)}, h{mpz_class(1)};
    for (std::size_t i = lo; i < mid; ++i) g = z_mul(g, fs[i], pm);
    for (std::size_t i = mid; i < hi; ++i) h = z_mul(h, fs[i], pm);
    PolyExtGcd<Fp> eg = poly_ext_gcd(z_to_fp(g, p), z_to_fp(h, p));
    if (!eg.g.is_one()) throw internal_error("hensel_lift_tree: factors not coprime");
    HenselQuad quad{g, h, fp_to_z(eg.s), fp_to_z(eg.t)};
    mpz_class m = pm;
    while (m < P) {
        quad = hensel_step(m, f, quad);
        m = m * m;
    }
    hensel_lift_tree(z_mod(quad.g, P), fs, lo, mid, p, P, out);
    hensel_lift_tree(z_mod(quad.h, P), fs, mid, hi, p, P, out);
}

// ---------------------------------------------------------------------------
// Zassenhaus over the integers.
// ---------------------------------------------------------------------------

inline mpz_class z_content(const ZPoly& a) {
    mpz_class g(0);
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

inline Polynomial<Rational> z_to_q(const ZPoly& a) {
    std::vector<Rational> c;
    c.reserve(a.size());
    for (const auto& x : a) c.emplace_back(mpz_class(x));
    return Polynomial<Rational>(std::move(c));
}

inline ZPoly q_to_z_primitive(const Polynomial<Rational>& f, mpz_class* content = nullptr) {
    mpz_class l(1);
    for (long k = 0; k <= f.degree(); ++k)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), f.coeff(static_cast<std::size_t>(k)).den().get_mpz_t());
    ZPoly v;
    for (long k = 0; k <= f.degree(); ++k) {
        Rational c = f.coeff(static_cast<std::size_t>(k)) * Rational(l);
        v.push_back(c.num());
    }
    z_trim(v);
    mpz_class g = z_content(v);
    if (g != 0)
        for (auto& c : v) c /= g;
    if (!v.empty() && v.back() < 0)
        for (auto& c : v) c = -c;
    if (content) *content = g;
    return v;
}

// Exact divisibility over Z for primitive polynomials (Gauss lemma).
inline bool z_divides(const ZPoly& g, const ZPoly& f, ZPoly* quot = nullptr) {
    if (g.empty()) return false;
    PolyDivMod<Rational> qr = divmod(z_to_q(f), z_to_q(g));
    if (!qr.rem.is_zero()) return false;
    if (quot) {
        ZPoly q;
        for (long k = 0; k <= qr.quot.degree(); ++k) {
            Rational c = qr.quot.coeff(static_cast<std::size_t>(k));
            if (!c.is_integer()) return false;
            q.push_back(c.num());
        }
        z_trim(q);
        *quot = q;
    }
    return true;
}

inline const std::vector<std::uint32_t>& small_odd_primes() {
    static const std::vector<std::uint32_t> ps = [] {
        std::vector<std::uint32_t> v;
        for (std::uint32_t n = 3; n < 10000; n += 2) {
            bool prime = true;
            for (std::uint32_t d = 3; d * d <= n; d += 2)
                if (n % d == 0) { prime = false; break; }
            if (prime) v.push_back(n);
        }
        return v;
    }();
    return ps;
}

// Factor a primitive squarefree integer polynomial (degree >= 1, lc > 0) into
// primitive irreducibles over Z.
inline std::vector<ZPoly> zassenhaus_squarefree(const ZPoly& f0) {
    std::vector<ZPoly> result;
    if (f0.size() <= 2) {  // degree <= 1
        if (f0.size() == 2) result.push_back(f0);
        return result;
    }
    long n = static_cast<long>(f0.size()) - 1;

    // pick a prime keeping f squarefree with full degree
    std::uint32_t p = 0;
    Polynomial<Fp> fbar;
    for (std::uint32_t cand : small_odd_primes()) {
        if (mpz_divisible_ui_p(f0.back().get_mpz_t(), cand)) continue;
        Polynomial<Fp> fb = z_to_fp(f0, cand);
        if (poly_gcd(fb, fb.derivative()).degree() == 0) {
            p = cand;
            fbar = fb;
            break;
        }
    }
    if (p == 0) throw internal_error("zassenhaus: no usable prime found");

    FactorList<Fp> modular = fp_factorize_monic(fbar.monic(), p);
    if (modular.size() == 1) {
        result.push_back(f0);
        return result;
    }
    std::vector<ZPoly> fs;
    for (auto& [g, e] : modular) {
        if (e != 1) throw internal_error("zassenhaus: modular factor not squarefree");
        fs.push_back(fp_to_z(g));
    }

    // coefficient bound: any factor of f (times lc) has coefficients below
    // 2^n * sqrt(n+1) * H(f) * lc
    mpz_class H(0);
    for (const auto& c : f0) {
        mpz_class a = abs(c);
        if (a > H) H = a;
    }
    mpz_class sq;
    mpz_class np1(n + 1);
    mpz_sqrt(sq.get_mpz_t(), np1.get_mpz_t());
    sq += 1;
    mpz_class B = (mpz_class(1) << static_cast<unsigned long>(n)) * sq * H * f0.back();
    mpz_class P(static_cast<unsigned long>(p));
    while (P <= 2 * B) P *= p;

    // lift the monic factorization of f / lc to mod P
    mpz_class lcinv;
    mpz_class lc = f0.back();
    if (mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), P.get_mpz_t()) == 0)
        throw internal_error("zassenhaus: lc not invertible");
    ZPoly fmonic(f0);
    for (auto& c : fmonic) c = c * lcinv;
    fmonic = z_mod(fmonic, P);
    std::vector<ZPoly> lifted;
    hensel_lift_tree(fmonic, fs, 0, fs.size(), p, P, lifted);

    // subset recombination
    ZPoly fcur = f0;
    std::vector<ZPoly> pool = lifted;
    std::size_t d = 1;
    while (2 * d <= pool.size()) {
        // enumerate index subsets of size d
        std::vector<std::size_t> idx(d);
        for (std::size_t i = 0; i < d; ++i) idx[i] = i;
        bool found = false;
        for (;;) {
            mpz_class b = fcur.back();
            ZPoly cand{b};
            for (std::size_t i : idx) cand = z_mul(cand, pool[i], P);
            cand = z_sym(cand, P);
            mpz_class cont = z_content(cand);
            if (cont != 0)
                for (auto& c : cand) c /= cont;
            if (!cand.empty() && cand.back() < 0)
                for (auto& c : cand) c = -c;
            ZPoly quot;
            if (static_cast<long>(cand.size()) - 1 >= 1 && z_divides(cand, fcur, &quot)) {
                result.push_back(cand);
                mpz_class qc = z_content(quot);
                if (qc != 0)
                    for (auto& c : quot) c /= qc;
                if (!quot.empty() && quot.back() < 0)
                    for (auto& c : quot) c = -c;
                fcur = quot;
                std::vector<ZPoly> npool;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) npool.push_back(pool[i]);
                pool = std::move(npool);
                found = true;
                break;
            }
            // next subset
            long i = static_cast<long>(d) - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] ==
                                 pool.size() - d + static_cast<std::size_t>(i))
                --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < d; ++j)
                idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++d;
    }
    if (static_cast<long>(fcur.size()) - 1 >= 1) result.push_back(fcur);
    return result;
}

// Yun's squarefree decomposition in characteristic zero.
inline FactorList<Rational> yun_squarefree(const Polynomial<Rational>& f) {
    FactorList<Rational> out;
    Polynomial<Rational> df = f.derivative();
    Polynomial<Rational> a = poly_gcd(f, df);
    Polynomial<Rational> b = poly_divexact(f, a);
    Polynomial<Rational> c = poly_divexact(df, a);
    Polynomial<Rational> d = c - b.derivative();
    std::size_t i = 1;
    while (b.degree() > 0) {
        Polynomial<Rational> g = poly_gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = poly_divexact(b, g);
        c = poly_divexact(d, g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

inline FactorList<Rational> rational_factorize_monic(const Polynomial<Rational>& fin) {
    Polynomial<Rational> f = fin.monic();
    FactorList<Rational> out;
    // strip powers of z
    std::size_t zpow = 0;
    while (f.degree() > 0 && f.coeff(0).is_zero()) {
        std::vector<Rational> shifted(f.coeffs().begin() + 1, f.coeffs().end());
        f = Polynomial<Rational>(std::move(shifted));
        ++zpow;
    }
    if (zpow) out.emplace_back(Polynomial<Rational>::var(), zpow);
    if (f.degree() >= 1) {
        for (auto& [part, mult] : yun_squarefree(f)) {
            if (part.degree() == 1) {
                out.emplace_back(part.monic(), mult);
                continue;
            }
            ZPoly zf = q_to_z_primitive(part);
            for (const ZPoly& irr : zassenhaus_squarefree(zf))
                out.emplace_back(z_to_q(irr).monic(), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first.sort_less(b.first);
        return a.second < b.second;
    });
    return out;
}

}  // namespace detail

/// Monic irreducible factorization over the coefficient field; factors are
/// monic and sorted (degree, then coefficients).
template <class F>
FactorList<F> factorize_monic(const Polynomial<F>& f);

template <>
inline FactorList<Rational> factorize_monic(const Polynomial<Rational>& f) {
    return detail::rational_factorize_monic(f);
}

template <>
inline FactorList<Fp> factorize_monic(const Polynomial<Fp>& f) {
    std::uint32_t p = 0;
    for (long k = 0; k <= f.degree() && p == 0; ++k)
        p = f.coeff(static_cast<std::size_t>(k)).modulus();
    if (p == 0) throw internal_error("factorize_monic: polynomial carries no modulus");
    return detail::fp_factorize_monic(f.monic(), p);
}

}  // namespace jcell

#endif
