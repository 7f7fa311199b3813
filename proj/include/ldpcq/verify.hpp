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

#ifndef LDPCQ_VERIFY_HPP
#define LDPCQ_VERIFY_HPP

#include <string>
#include <vector>

#include "ldpcq/code.hpp"
#include "ldpcq/pauli.hpp"
#include "ldpcq/process.hpp"

namespace ldpcq {

struct RelationCheck {
  std::string relation;  // e.g. "bit 2: X2 -> Z0 Z2"
  bool passed = false;
  std::string expected;
  std::string actual;
  std::string note;
};

struct VerifyReport {
  std::vector<RelationCheck> relations;
  bool dense_checked = false;
  double max_dense_residual = 0.0;

  bool passed() const;
  std::string to_text() const;
};

struct VerifyOptions {
  /// Dense intertwining cross-check runs when n + m is at most this.
  std::size_t dense_wire_limit = 10;
  double dense_tol = 1e-10;
};

/// Structural check of the duality relations: every bit operator X_i must
/// push to the Z word over its check neighborhood exactly (phase +1), and
/// every check Z-word must push to an X word equal to the single check
/// letter modulo ker(H^T) -- the words acting as the identity on the image
/// of the map. When the dense limit allows, the operator identity
/// Process . op = op' . Process is asserted entrywise with the actual
/// pushed op'.
VerifyReport verify_duality(const ClassicalCode& c, const QuantumProcess& p,
                            const VerifyOptions& opts = {});

/// Per-pair and per-check mappings of the product merges:
/// tensor - X_alpha X_beta -> X_sigma, layer-1 and layer-2 check Z words map
/// to the corresponding product-register Z words;
/// check  - X_alpha -> X_gamma, X_beta -> X_gamma, Z_alpha Z_beta -> Z_gamma.
VerifyReport verify_product(const ClassicalCode& c1, const ClassicalCode& c2, ProductKind kind,
                            const QuantumProcess& p, const VerifyOptions& opts = {});

}  // namespace ldpcq

#endif
