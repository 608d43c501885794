/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef JCELL_REPORT_HPP
#define JCELL_REPORT_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace jcell {

/// Options shared by all commands; unset entries fall back to the document's
/// query block, then to defaults.
struct RunOptions {
    std::string field;                // "Q" or "Fp:<prime>"; empty = document/default
    std::vector<std::string> thetas;  // angles in turns, "p/q"
    long rmax = -1;                   // -1 = default (dim X, or the rep's label)
    std::vector<std::string> us;      // local-system parameters
    std::uint64_t seed = 1;
    std::size_t count = 200;
};

struct RunResult {
    std::string text;
    std::string json;
    bool ok = true;  // false when an oracle check disagreed
};

/// A parsed input document (complex, map, representation, query defaults).
class Document {
public:
    static Document parse(const std::string& json_text);
    ~Document();
    Document(Document&&) noexcept;
    Document& operator=(Document&&) noexcept;

    struct Impl;
    const Impl& impl() const { return *impl_; }

private:
    Document();
    std::unique_ptr<Impl> impl_;
};

/// Executes one command: jordan, rep, novikov, local, alexander,
/// oracle-check. doc may be null only for oracle-check.
RunResult run_command(const Document* doc, const std::string& command, const RunOptions& opts);

const char* library_version();

}  // namespace jcell

#endif
