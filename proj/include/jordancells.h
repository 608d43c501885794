/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */

/*
 * C interface to the jordancells library: exact computation of the
 * homological monodromy (Jordan cells) of simplicial circle-valued maps and
 * the invariants derived from it (Novikov Betti numbers, local-system Betti
 * numbers, homotopy-fiber Betti numbers, Alexander polynomials).
 *
 * All objects are opaque handles. Functions that can fail return NULL and,
 * when an error out-parameter is supplied, store a jc_error the caller must
 * free with jc_error_free.
 */
#ifndef JORDANCELLS_H
#define JORDANCELLS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct jc_document jc_document; /* parsed input document */
typedef struct jc_report jc_report;     /* result of a command */
typedef struct jc_error jc_error;       /* failure code + message */

/* Error codes; the CLI uses them as exit codes. */
enum {
    JC_OK = 0,
    JC_ERROR_PARSE = 2,    /* malformed input document */
    JC_ERROR_ANGLE = 3,    /* cut angle equals a vertex value */
    JC_ERROR_USAGE = 4,    /* bad command or missing argument */
    JC_ERROR_INTERNAL = 5  /* internal consistency failure */
};

int jc_error_code(const jc_error* err);
const char* jc_error_message(const jc_error* err);
void jc_error_free(jc_error* err);

/* Parses a UTF-8 JSON input document. */
jc_document* jc_document_parse(const char* json_text, jc_error** err);
void jc_document_free(jc_document* doc);

typedef struct jc_options {
    const char* field;         /* "Q" or "Fp:<prime>"; NULL = document/default */
    const char* const* thetas; /* cut angles in turns, "p/q" strings */
    size_t n_thetas;
    long rmax;                 /* highest homology dimension; -1 = default */
    const char* const* us;     /* local-system parameters, "p/q" strings */
    size_t n_us;
    unsigned long long seed;   /* oracle-check: RNG seed */
    unsigned long count;       /* oracle-check: number of random instances */
} jc_options;

/* Fills an options struct with the defaults described above. */
void jc_options_init(jc_options* opts);

/*
 * Runs one command: "jordan", "rep", "novikov", "local", "alexander" or
 * "oracle-check". doc may be NULL only for oracle-check (random mode).
 * opts may be NULL for all defaults.
 */
jc_report* jc_run(const jc_document* doc, const char* command, const jc_options* opts,
                  jc_error** err);

/* Plain-text rendering of the report; owned by the report. */
const char* jc_report_text(const jc_report* report);
/* Canonical JSON rendering of the report; owned by the report. */
const char* jc_report_json(const jc_report* report);
/* 1 normally; 0 when an oracle-check found a disagreement. */
int jc_report_ok(const jc_report* report);
void jc_report_free(jc_report* report);

const char* jc_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* JORDANCELLS_H */
