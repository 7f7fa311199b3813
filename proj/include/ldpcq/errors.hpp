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

#ifndef LDPCQ_ERRORS_HPP
#define LDPCQ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ldpcq {

/// A size/memory cap was exceeded (dense oracles, contraction budgets).
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document; line is 1-based.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// The requested low-energy block is not adiabatically connected to the
/// constrained subspace (singular overlap).
class degeneracy_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ldpcq

#endif
