// Copyright 2026 The ldpcq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LDPCQ_ALIST_HPP
#define LDPCQ_ALIST_HPP

#include <string>

#include "ldpcq/code.hpp"

namespace ldpcq {

/// Parses the standard alist format (n m / max degrees / per-column and
/// per-row degree lists / 1-indexed neighbor lists, zero-padded). The column
/// and row sections are cross-checked against each other; any inconsistency,
/// out-of-range index or truncation raises parse_error with the line number.
ClassicalCode parse_alist(const std::string& text);

/// Canonical emitter: single spaces, one section per line, zero-padding up to
/// the maximum degree, trailing newline. parse_alist(emit_alist(c)) == c.
std::string emit_alist(const ClassicalCode& c);

/// Fallback ingestion: one row of 0/1 characters per non-empty line
/// (whitespace between digits allowed).
ClassicalCode parse_dense(const std::string& text);

}  // namespace ldpcq

#endif
