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

#ifndef LDPCQ_ZX_HPP
#define LDPCQ_ZX_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "ldpcq/code.hpp"

namespace ldpcq {

enum class SpiderColor { Z, X };

/// Phase-free ZX diagram: Z/X spiders, plain or Hadamard edges, and ordered
/// boundary legs (which may also carry a Hadamard). Semantics under contract():
///   Z spider  = sum_s |s...s><s...s|        (entries 0/1, no normalization)
///   X spider  = Hadamard conjugate of the Z spider on every leg
///   H edge    = the 2x2 Hadamard matrix on that wire
/// Scalars are exactly those implied by the definitions; nothing is
/// renormalized.
class ZxDiagram {
 public:
  struct Edge {
    uint32_t a, b;
    bool hadamard;
  };
  struct Leg {
    uint32_t spider;
    bool hadamard;
  };

  uint32_t add_spider(SpiderColor color);
  /// Self-edges are rejected.
  void add_edge(uint32_t a, uint32_t b, bool hadamard = false);
  void add_input(uint32_t spider, bool hadamard = false);
  void add_output(uint32_t spider, bool hadamard = false);

  std::size_t spider_count() const { return colors_.size(); }
  SpiderColor color(uint32_t s) const { return colors_.at(s); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Leg>& inputs() const { return inputs_; }
  const std::vector<Leg>& outputs() const { return outputs_; }
  /// Incident edges plus incident boundary legs.
  std::size_t degree(uint32_t s) const;

  /// One spider per line: id, color, neighbor ids, boundary legs.
  std::string debug_dump() const;

 private:
  std::vector<SpiderColor> colors_;
  std::vector<Edge> edges_;
  std::vector<Leg> inputs_, outputs_;
};

struct ContractOptions {
  std::size_t max_boundary_legs = 24;
  std::size_t max_tensor_entries = std::size_t{1} << 24;
};

/// Dense semantics of the diagram: 2^{|outputs|} x 2^{|inputs|}, output leg 0
/// is the least significant row bit (same wire convention as DenseState).
/// Throws resource_error when a budget is exceeded.
Eigen::MatrixXcd contract(const ZxDiagram& d, const ContractOptions& opts = {});

/// Tanner-graph diagram of the Kramers-Wannier map: one Z spider per bit
/// carrying an input leg, one X spider per check carrying a Hadamard output
/// leg, one plain internal edge per Tanner edge.
ZxDiagram kw_diagram(const ClassicalCode& c);

/// Per-pair merge diagram of the product constructions: for every output bit
/// (i, j) one three-leg spider (Z for tensor, X for check) joining the two
/// layer input legs and the output leg. Leg order: all first-layer inputs by
/// j*n1+i, then all second-layer inputs, outputs by j*n1+i.
ZxDiagram product_diagram(const ClassicalCode& c1, const ClassicalCode& c2, ProductKind kind);

/// Closed form of the Kramers-Wannier map: entries
///   <y|D|x> = 2^{-m/2} * (-1)^{y . (H x)}.
/// Satisfies D sigma^x_i = (prod_{a in col_i} tau^z_a) D and
/// D prod_{i in row_a} sigma^z_i = tau^x_a D exactly.
Eigen::MatrixXcd kw_matrix_oracle(const BinaryMatrix& h, std::size_t max_qubits = 24);

/// Merges spider b into spider a (same color, connected by at least one plain
/// edge, no Hadamard edge between them). Used by the fusion-invariance tests.
ZxDiagram fuse_spiders(const ZxDiagram& d, uint32_t a, uint32_t b);

}  // namespace ldpcq

#endif
