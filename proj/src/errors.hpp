/*
 * Copyright 2026 The jordancells authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef JCELL_ERRORS_HPP
#define JCELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jcell {

// Input document is malformed (JSON syntax or a violated invariant).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// The requested cut angle coincides with a vertex value.
class angle_error : public std::runtime_error {
public:
    explicit angle_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed; indicates a bug, never bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace jcell

#endif
