/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#include "jordancells.h"

#include <new>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "report.hpp"

struct jc_error {
    int code = JC_ERROR_INTERNAL;
    std::string message;
};

struct jc_document {
    jcell::Document doc;
};

struct jc_report {
    jcell::RunResult result;
};

namespace {

void set_error(jc_error** err, int code, const std::string& message) {
    if (!err) return;
    *err = new (std::nothrow) jc_error{code, message};
}

template <class Fn>
auto guarded(jc_error** err, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const jcell::parse_error& e) {
        set_error(err, JC_ERROR_PARSE, e.what());
    } catch (const jcell::angle_error& e) {
        set_error(err, JC_ERROR_ANGLE, e.what());
    } catch (const std::invalid_argument& e) {
        set_error(err, JC_ERROR_USAGE, e.what());
    } catch (const jcell::internal_error& e) {
        set_error(err, JC_ERROR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        set_error(err, JC_ERROR_INTERNAL, e.what());
    }
    return nullptr;
}

}  // namespace

extern "C" {

int jc_error_code(const jc_error* err) { return err ? err->code : JC_OK; }

const char* jc_error_message(const jc_error* err) { return err ? err->message.c_str() : ""; }

void jc_error_free(jc_error* err) { delete err; }

jc_document* jc_document_parse(const char* json_text, jc_error** err) {
    if (err) *err = nullptr;
    if (!json_text) {
        set_error(err, JC_ERROR_USAGE, "json_text is NULL");
        return nullptr;
    }
    return guarded(err, [&]() -> jc_document* {
        return new jc_document{jcell::Document::parse(json_text)};
    });
}

void jc_document_free(jc_document* doc) { delete doc; }

void jc_options_init(jc_options* opts) {
    if (!opts) return;
    opts->field = nullptr;
    opts->thetas = nullptr;
    opts->n_thetas = 0;
    opts->rmax = -1;
    opts->us = nullptr;
    opts->n_us = 0;
    opts->seed = 1;
    opts->count = 200;
}

jc_report* jc_run(const jc_document* doc, const char* command, const jc_options* opts,
                  jc_error** err) {
    if (err) *err = nullptr;
    if (!command) {
        set_error(err, JC_ERROR_USAGE, "command is NULL");
        return nullptr;
    }
    jcell::RunOptions run;
    if (opts) {
        if (opts->field) run.field = opts->field;
        for (size_t i = 0; i < opts->n_thetas; ++i) run.thetas.emplace_back(opts->thetas[i]);
        run.rmax = opts->rmax;
        for (size_t i = 0; i < opts->n_us; ++i) run.us.emplace_back(opts->us[i]);
        run.seed = opts->seed;
        run.count = opts->count;
    }
    return guarded(err, [&]() -> jc_report* {
        return new jc_report{
            jcell::run_command(doc ? &doc->doc : nullptr, command, run)};
    });
}

const char* jc_report_text(const jc_report* report) {
    return report ? report->result.text.c_str() : "";
}

const char* jc_report_json(const jc_report* report) {
    return report ? report->result.json.c_str() : "";
}

int jc_report_ok(const jc_report* report) { return report && report->result.ok ? 1 : 0; }

void jc_report_free(jc_report* report) { delete report; }

const char* jc_version(void) { return jcell::library_version(); }

}  // extern "C"
