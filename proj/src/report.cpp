/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#include "report.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>

#include "errors.hpp"
#include "pipeline.hpp"

namespace jcell {

using nlohmann::json;

struct Document::Impl {
    std::optional<SimplicialComplex> complex;
    std::optional<CircleMap> map;

    struct RawRep {
        std::size_t m = 0;
        long r_label = 1;
        std::vector<std::size_t> dims;
        std::vector<Matrix<Rational>> alpha, beta;
    };
    std::optional<RawRep> rep;

    std::string field = "Q";
    std::vector<Rational> thetas;
    long rmax = -1;
    std::vector<Rational> us;
};

Document::Document() : impl_(std::make_unique<Impl>()) {}
Document::~Document() = default;
Document::Document(Document&&) noexcept = default;
Document& Document::operator=(Document&&) noexcept = default;

namespace {

struct FieldSpec {
    bool rational = true;
    std::uint32_t p = 0;
};

FieldSpec parse_field(const std::string& s) {
    if (s == "Q") return {true, 0};
    if (s.rfind("Fp:", 0) == 0) {
        const std::string digits = s.substr(3);
        if (digits.empty() || digits.size() > 9)
            throw parse_error("bad field spec '" + s + "'");
        for (char c : digits)
            if (c < '0' || c > '9') throw parse_error("bad field spec '" + s + "'");
        unsigned long p = std::stoul(digits);
        if (p < 2) throw parse_error("field characteristic must be at least 2");
        for (unsigned long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw parse_error(std::to_string(p) + " is not prime");
        return {false, static_cast<std::uint32_t>(p)};
    }
    throw parse_error("unknown field '" + s + "' (expected Q or Fp:<prime>)");
}

Rational json_rational(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw parse_error(where + ": expected integer or \"p/q\" string");
}

template <class F>
F to_scalar(const Rational& q, const F& unit);

template <>
Rational to_scalar(const Rational& q, const Rational&) {
    return q;
}

template <>
Fp to_scalar(const Rational& q, const Fp& unit) {
    std::uint32_t p = unit.modulus();
    mpz_class pm(static_cast<unsigned long>(p)), r;
    mpz_mod(r.get_mpz_t(), q.num().get_mpz_t(), pm.get_mpz_t());
    Fp num(static_cast<std::int64_t>(r.get_ui()), p);
    mpz_mod(r.get_mpz_t(), q.den().get_mpz_t(), pm.get_mpz_t());
    Fp den(static_cast<std::int64_t>(r.get_ui()), p);
    if (den.is_zero()) throw parse_error("denominator of " + q.str() + " vanishes mod " +
                                         std::to_string(p));
    return num / den;
}

Matrix<Rational> json_matrix(const json& j, std::size_t rows, std::size_t cols,
                             const std::string& where) {
    if (!j.is_array() || j.size() != rows)
        throw parse_error(where + ": expected " + std::to_string(rows) + " rows");
    Matrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != cols)
            throw parse_error(where + " row " + std::to_string(i) + ": expected " +
                              std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = json_rational(row[c], where + " entry");
    }
    return m;
}

template <class F>
Matrix<F> convert_matrix(const Matrix<Rational>& m, const F& unit) {
    Matrix<F> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_scalar(m(i, j), unit);
    return out;
}

template <class F>
Representation<F> convert_rep(const Document::Impl::RawRep& raw, const F& unit) {
    Representation<F> rep;
    rep.m = raw.m;
    rep.dims = raw.dims;
    for (const auto& a : raw.alpha) rep.alpha.push_back(convert_matrix(a, unit));
    for (const auto& b : raw.beta) rep.beta.push_back(convert_matrix(b, unit));
    rep.validate();
    return rep;
}

template <class F>
json class_json(long r, const MonodromyClass<F>& c) {
    json out;
    out["r"] = r;
    out["dim"] = c.dim;
    json cells = json::array();
    for (const auto& cell : c.cells) {
        json cj;
        cj["factor"] = cell.factor.str();
        cj["k"] = cell.power;
        if (cell.is_linear()) cj["lambda"] = cell.lambda().str();
        cells.push_back(cj);
    }
    out["cells"] = cells;
    json div = json::array();
    for (const auto& d : c.divisor_chain) div.push_back(d.str());
    out["divisors"] = div;
    json inv = json::array();
    for (const auto& s : c.invariants) inv.push_back(s.str());
    out["invariant_factors"] = inv;
    out["characteristic"] = c.characteristic.str();
    return out;
}

template <class F>
void class_text(std::ostringstream& os, long r, const MonodromyClass<F>& c) {
    os << "r=" << r << ": " << c.cells_str() << " dim=" << c.dim << "\n";
    os << "  divisors: [";
    for (std::size_t i = 0; i < c.divisor_chain.size(); ++i)
        os << (i ? ", " : "") << c.divisor_chain[i].str();
    os << "]\n";
}

std::string finish_json(const json& j) { return j.dump(2) + "\n"; }

struct ThetaChoice {
    Rational value;
    bool is_auto = false;
};

std::vector<ThetaChoice> resolve_thetas(const Document::Impl& impl, const RunOptions& opts) {
    std::vector<ThetaChoice> out;
    if (!opts.thetas.empty()) {
        for (const auto& s : opts.thetas) out.push_back({normalize_turn(Rational::parse(s)), false});
        return out;
    }
    if (!impl.thetas.empty()) {
        for (const auto& t : impl.thetas) out.push_back({t, false});
        return out;
    }
    out.push_back({auto_theta(*impl.map), true});
    return out;
}

const SimplicialComplex& need_complex(const Document::Impl* impl, const std::string& cmd) {
    if (!impl || !impl->complex)
        throw parse_error("command '" + cmd + "' requires a complex block");
    return *impl->complex;
}

const Document::Impl::RawRep& need_rep(const Document::Impl* impl, const std::string& cmd) {
    if (!impl || !impl->rep)
        throw parse_error("command '" + cmd + "' requires a representation block");
    return *impl->rep;
}

long resolve_rmax(const Document::Impl* impl, const RunOptions& opts, long fallback) {
    if (opts.rmax >= 0) return opts.rmax;
    if (impl && impl->rmax >= 0) return impl->rmax;
    return fallback;
}

template <class F>
std::vector<long> betti_as_long(const SimplicialComplex& x, long rmax, const F& unit) {
    std::vector<std::size_t> b = betti_numbers(x, unit);
    std::vector<long> out;
    for (long r = 0; r <= rmax; ++r)
        out.push_back(r < static_cast<long>(b.size()) ? static_cast<long>(b[r]) : 0);
    return out;
}

std::string join_longs(const std::vector<long>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

// ---------------------------------------------------------------------------

template <class F>
RunResult run_typed(const Document::Impl* impl, const std::string& cmd, const RunOptions& opts,
                    const F& unit, const std::string& field_str) {
    std::ostringstream text;
    json out;
    out["command"] = cmd;
    out["field"] = field_str;
    text << "command: " << cmd << "\n";
    text << "field: " << field_str << "\n";
    RunResult res;

    if (cmd == "jordan") {
        const SimplicialComplex& x = need_complex(impl, cmd);
        const CircleMap& f = *impl->map;
        long rmax = resolve_rmax(impl, opts, std::max(x.dim(), 0));
        json results = json::array();
        for (const ThetaChoice& th : resolve_thetas(*impl, opts)) {
            text << "theta: " << th.value.str() << (th.is_auto ? " (auto)" : " (given)") << "\n";
            auto classes = jordan_cells_of_map(x, f, th.value, static_cast<int>(rmax), unit);
            json jt;
            jt["theta"] = th.value.str();
            jt["theta_auto"] = th.is_auto;
            json jclasses = json::array();
            for (long r = 0; r <= rmax; ++r) {
                class_text(text, r, classes[static_cast<std::size_t>(r)]);
                jclasses.push_back(class_json(r, classes[static_cast<std::size_t>(r)]));
            }
            jt["classes"] = jclasses;
            results.push_back(jt);
        }
        out["results"] = results;
    } else if (cmd == "rep") {
        const auto& raw = need_rep(impl, cmd);
        Representation<F> rep = convert_rep(raw, unit);
        MonodromyClass<F> cls = rep_jordan(rep);
        class_text(text, raw.r_label, cls);
        out["results"] = json::array({class_json(raw.r_label, cls)});
    } else if (cmd == "novikov") {
        const SimplicialComplex& x = need_complex(impl, cmd);
        const CircleMap& f = *impl->map;
        long rmax = resolve_rmax(impl, opts, std::max(x.dim(), 0));
        ThetaChoice th = resolve_thetas(*impl, opts).front();
        text << "theta: " << th.value.str() << (th.is_auto ? " (auto)" : " (given)") << "\n";
        out["theta"] = th.value.str();
        out["theta_auto"] = th.is_auto;
        auto cells = jordan_cells_of_map(x, f, th.value, static_cast<int>(rmax), unit);
        std::vector<long> betti = betti_as_long(x, rmax, unit);
        std::vector<std::size_t> betti_sz(betti.begin(), betti.end());
        std::vector<long> bn = novikov_betti(betti_sz, cells, unit);
        text << "betti = " << join_longs(betti) << "\n";
        text << "betaN = " << join_longs(bn) << "\n";
        out["betti"] = betti;
        out["betaN"] = bn;
        FiberBetti<F> fb = fiber_betti(cells, bn);
        if (fb.values) {
            std::vector<long> fv(fb.values->begin(), fb.values->end());
            text << "fiber = " << join_longs(fv) << "\n";
            out["fiber"] = fv;
        } else {
            text << "fiber = undefined (betaN nonzero at r=" << fb.offending_r << ")\n";
            out["fiber"] = nullptr;
            out["fiber_undefined_at"] = fb.offending_r;
        }
    } else if (cmd == "local") {
        const SimplicialComplex& x = need_complex(impl, cmd);
        const CircleMap& f = *impl->map;
        long rmax = resolve_rmax(impl, opts, std::max(x.dim(), 0));
        std::vector<Rational> us;
        if (!opts.us.empty())
            for (const auto& s : opts.us) us.push_back(Rational::parse(s));
        else if (impl && !impl->us.empty())
            us = impl->us;
        else
            throw parse_error("command 'local' requires u values (--u or query.u)");
        ThetaChoice th = resolve_thetas(*impl, opts).front();
        text << "theta: " << th.value.str() << (th.is_auto ? " (auto)" : " (given)") << "\n";
        out["theta"] = th.value.str();
        out["theta_auto"] = th.is_auto;
        auto cells = jordan_cells_of_map(x, f, th.value, static_cast<int>(rmax), unit);
        std::vector<long> betti = betti_as_long(x, rmax, unit);
        std::vector<std::size_t> betti_sz(betti.begin(), betti.end());
        std::vector<long> bn = novikov_betti(betti_sz, cells, unit);
        json results = json::array();
        for (const Rational& uq : us) {
            F u = to_scalar(uq, unit);
            std::vector<long> lb = local_betti(bn, cells, u);
            text << "u=" << uq.str() << ": " << join_longs(lb) << "\n";
            json ju;
            ju["u"] = uq.str();
            ju["dims"] = lb;
            results.push_back(ju);
        }
        out["results"] = results;
    } else if (cmd == "alexander") {
        Polynomial<F> alex;
        if (impl && impl->rep) {
            MonodromyClass<F> cls = rep_jordan(convert_rep(*impl->rep, unit));
            alex = alexander_poly(cls);
        } else {
            const SimplicialComplex& x = need_complex(impl, cmd);
            const CircleMap& f = *impl->map;
            ThetaChoice th = resolve_thetas(*impl, opts).front();
            text << "theta: " << th.value.str() << (th.is_auto ? " (auto)" : " (given)") << "\n";
            out["theta"] = th.value.str();
            auto cells = jordan_cells_of_map(x, f, th.value, 1, unit);
            alex = alexander_poly(cells[1]);
        }
        text << "alexander = " << alex.str() << "\n";
        out["alexander"] = alex.str();
    } else if (cmd == "oracle-check") {
        std::size_t agree = 0, total = 0;
        if (impl && impl->rep) {
            Representation<F> rep = convert_rep(*impl->rep, unit);
            total = 1;
            if (rep_jordan(rep) == rep_jordan_oracle(rep)) agree = 1;
            out["mode"] = "representation";
        } else {
            detail::SplitMix64 rng(opts.seed);
            total = opts.count;
            for (std::size_t i = 0; i < total; ++i) {
                std::size_t m = 1 + rng.next() % 8, n = 1 + rng.next() % 8;
                Matrix<F> a(m, n), b(m, n);
                for (std::size_t r = 0; r < m; ++r)
                    for (std::size_t c = 0; c < n; ++c) {
                        a(r, c) = unit * F(static_cast<long>(rng.next() % 7) - 3);
                        b(r, c) = unit * F(static_cast<long>(rng.next() % 7) - 3);
                    }
                MonodromyClass<F> fast =
                    jordan_cells(monodromy_matrix(reduce(CospanPair<F>(a, b))));
                MonodromyClass<F> slow =
                    jordan_cells(regularize(LinearRelation<F>::from_cospan(a, b)).T);
                if (fast == slow) ++agree;
            }
            out["mode"] = "random";
            out["seed"] = opts.seed;
            text << "seed = " << opts.seed << "\n";
        }
        text << "agree = " << agree << "/" << total << "\n";
        out["agree"] = agree;
        out["count"] = total;
        out["ok"] = (agree == total);
        res.ok = (agree == total);
    } else {
        throw std::invalid_argument("unknown command '" + cmd + "'");
    }

    res.text = text.str();
    res.json = finish_json(out);
    return res;
}

}  // namespace

Document Document::parse(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("document must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "field" && key != "complex" && key != "map" && key != "representation" &&
            key != "query")
            throw parse_error("unknown top-level key '" + key + "'");
    }

    Document doc;
    Impl& impl = *doc.impl_;
    if (j.contains("field")) {
        if (!j["field"].is_string()) throw parse_error("field: expected string");
        impl.field = j["field"].get<std::string>();
        parse_field(impl.field);  // validate eagerly
    }

    if (j.contains("complex") != j.contains("map"))
        throw parse_error("complex and map blocks must be given together");
    if (j.contains("complex")) {
        const json& jc = j["complex"];
        if (!jc.is_object() || !jc.contains("vertices") || !jc.contains("simplices"))
            throw parse_error("complex: expected {vertices, simplices}");
        if (!jc["vertices"].is_number_integer() || jc["vertices"].get<long>() < 0)
            throw parse_error("complex.vertices: expected nonnegative integer");
        std::size_t nverts = jc["vertices"].get<std::size_t>();
        std::vector<std::vector<int>> simplices;
        if (!jc["simplices"].is_array()) throw parse_error("complex.simplices: expected array");
        for (const json& js : jc["simplices"]) {
            if (!js.is_array()) throw parse_error("complex.simplices: expected arrays of vertices");
            std::vector<int> s;
            for (const json& v : js) {
                if (!v.is_number_integer())
                    throw parse_error("complex.simplices: vertex indices must be integers");
                s.push_back(v.get<int>());
            }
            simplices.push_back(std::move(s));
        }
        impl.complex = SimplicialComplex::from_simplices(nverts, std::move(simplices));

        const json& jm = j["map"];
        if (!jm.is_object() || !jm.contains("angles"))
            throw parse_error("map: expected {angles}");
        if (!jm["angles"].is_array()) throw parse_error("map.angles: expected array");
        std::vector<Rational> turns;
        for (const json& a : jm["angles"]) turns.push_back(json_rational(a, "map.angles"));
        impl.map = CircleMap::from_turns(std::move(turns));
        validate_circle_map(*impl.complex, *impl.map);
    }

    if (j.contains("representation")) {
        const json& jr = j["representation"];
        if (!jr.is_object() || !jr.contains("m") || !jr.contains("dims") ||
            !jr.contains("alpha") || !jr.contains("beta"))
            throw parse_error("representation: expected {m, dims, alpha, beta}");
        Impl::RawRep raw;
        if (!jr["m"].is_number_integer() || jr["m"].get<long>() < 1)
            throw parse_error("representation.m: expected positive integer");
        raw.m = jr["m"].get<std::size_t>();
        if (jr.contains("r")) {
            if (!jr["r"].is_number_integer() || jr["r"].get<long>() < 0)
                throw parse_error("representation.r: expected nonnegative integer");
            raw.r_label = jr["r"].get<long>();
        }
        if (!jr["dims"].is_array() || jr["dims"].size() != 2 * raw.m)
            throw parse_error("representation.dims: expected 2m entries");
        for (const json& d : jr["dims"]) {
            if (!d.is_number_integer() || d.get<long>() < 0)
                throw parse_error("representation.dims: expected nonnegative integers");
            raw.dims.push_back(d.get<std::size_t>());
        }
        if (!jr["alpha"].is_array() || jr["alpha"].size() != raw.m)
            throw parse_error("representation.alpha: expected m matrices");
        if (!jr["beta"].is_array() || jr["beta"].size() != raw.m)
            throw parse_error("representation.beta: expected m matrices");
        for (std::size_t k = 0; k < raw.m; ++k) {
            raw.alpha.push_back(json_matrix(jr["alpha"][k], raw.dims[2 * k + 1], raw.dims[2 * k],
                                            "representation.alpha[" + std::to_string(k) + "]"));
            raw.beta.push_back(json_matrix(jr["beta"][k], raw.dims[2 * k + 1],
                                           raw.dims[(2 * k + 2) % (2 * raw.m)],
                                           "representation.beta[" + std::to_string(k) + "]"));
        }
        impl.rep = std::move(raw);
    }

    if (j.contains("query")) {
        const json& jq = j["query"];
        if (!jq.is_object()) throw parse_error("query: expected object");
        if (jq.contains("theta")) {
            if (!jq["theta"].is_array()) throw parse_error("query.theta: expected array");
            for (const json& t : jq["theta"])
                impl.thetas.push_back(normalize_turn(json_rational(t, "query.theta")));
        }
        if (jq.contains("rmax")) {
            if (!jq["rmax"].is_number_integer() || jq["rmax"].get<long>() < 0)
                throw parse_error("query.rmax: expected nonnegative integer");
            impl.rmax = jq["rmax"].get<long>();
        }
        if (jq.contains("u")) {
            if (!jq["u"].is_array()) throw parse_error("query.u: expected array");
            for (const json& u : jq["u"]) impl.us.push_back(json_rational(u, "query.u"));
        }
    }
    return doc;
}

RunResult run_command(const Document* doc, const std::string& command, const RunOptions& opts) {
    const Document::Impl* impl = doc ? &doc->impl() : nullptr;
    if (!impl && command != "oracle-check")
        throw std::invalid_argument("command '" + command + "' requires an input document");
    std::string field = !opts.field.empty() ? opts.field : (impl ? impl->field : "Q");
    FieldSpec fs = parse_field(field);
    if (fs.rational) return run_typed<Rational>(impl, command, opts, Rational(1), field);
    return run_typed<Fp>(impl, command, opts, Fp(1, fs.p), field);
}

const char* library_version() { return "1.0.0"; }

}  // namespace jcell
