/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */

// Command-line frontend; talks to the library exclusively through the
// public C interface.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "jordancells.h"

namespace {

int fail_with(jc_error* err) {
    int code = jc_error_code(err);
    std::cerr << "error: " << jc_error_message(err) << "\n";
    jc_error_free(err);
    return code;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jordan cells of simplicial circle-valued maps, and derived invariants"};
    app.require_subcommand(1);

    std::string input_path;
    std::string field;
    std::vector<std::string> thetas;
    std::vector<std::string> us;
    long rmax = -1;
    std::string format = "text";
    unsigned long long seed = 1;
    unsigned long count = 200;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("input", input_path, "input JSON file, or - for stdin")->required();
        else
            sub->add_option("input", input_path, "input JSON file, or - for stdin");
        sub->add_option("--field", field, "coefficient field: Q or Fp:<prime>");
        sub->add_option("--theta", thetas, "cut angle in turns (p/q), repeatable");
        sub->add_option("--rmax", rmax, "highest homology dimension");
        sub->add_option("--u", us, "local-system parameter (p/q), repeatable");
        sub->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    add_common(app.add_subcommand("jordan", "Jordan cells of the circle-valued map"), true);
    add_common(app.add_subcommand("rep", "Jordan cells of a quiver representation"), true);
    add_common(app.add_subcommand("novikov", "Novikov Betti numbers"), true);
    add_common(app.add_subcommand("local", "local-system Betti numbers (needs --u or query.u)"),
               true);
    add_common(app.add_subcommand("alexander", "monic Alexander polynomial"), true);
    CLI::App* oracle = app.add_subcommand(
        "oracle-check", "compare the matrix reduction against the definition-based oracle");
    add_common(oracle, false);
    oracle->add_option("--seed", seed, "RNG seed for random instances");
    oracle->add_option("--count", count, "number of random instances");

    CLI11_PARSE(app, argc, argv);
    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();

    jc_document* doc = nullptr;
    jc_error* err = nullptr;
    if (!input_path.empty()) {
        std::string text;
        try {
            text = read_input(input_path);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return JC_ERROR_USAGE;
        }
        doc = jc_document_parse(text.c_str(), &err);
        if (!doc) return fail_with(err);
    }

    jc_options opts;
    jc_options_init(&opts);
    std::vector<const char*> theta_ptrs, u_ptrs;
    for (const auto& t : thetas) theta_ptrs.push_back(t.c_str());
    for (const auto& u : us) u_ptrs.push_back(u.c_str());
    if (!field.empty()) opts.field = field.c_str();
    opts.thetas = theta_ptrs.data();
    opts.n_thetas = theta_ptrs.size();
    opts.us = u_ptrs.data();
    opts.n_us = u_ptrs.size();
    opts.rmax = rmax;
    opts.seed = seed;
    opts.count = count;

    jc_report* report = jc_run(doc, command.c_str(), &opts, &err);
    jc_document_free(doc);
    if (!report) return fail_with(err);

    std::fputs(format == "json" ? jc_report_json(report) : jc_report_text(report), stdout);
    int ok = jc_report_ok(report);
    jc_report_free(report);
    return ok ? 0 : 1;
}
