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

#ifndef LDPCQ_PROCESS_HPP
#define LDPCQ_PROCESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ldpcq/code.hpp"

namespace ldpcq {

enum class Realization { Defect, MinimalCoupling, TensorMerge, CheckMerge };
enum class PauliBasis { X, Z };
enum class StateLabel { Plus, Minus, Zero, One };

std::string to_string(Realization r);
std::string to_string(PauliBasis b);
std::string to_string(StateLabel s);

struct Gate {
  enum class Kind { H, Cnot };
  Kind kind;
  uint32_t a;  // H: wire; CNOT: control
  uint32_t b;  // CNOT: target

  static Gate h(uint32_t w) { return {Kind::H, w, 0}; }
  static Gate cnot(uint32_t control, uint32_t target) { return {Kind::Cnot, control, target}; }
  bool operator==(const Gate&) const = default;
};

/// Ancilla preparation. `state` is given in the basis seen through the
/// trailing output-leg Hadamard when leg_hadamard is set; the physical
/// preparation is then H|state>. With the default (X, plus, leg_hadamard) the
/// wire is physically prepared in |0> and emits |+> if left untouched.
struct AncillaSpec {
  uint32_t wire;
  PauliBasis basis;
  StateLabel state;
  bool leg_hadamard;
};

struct Measurement {
  uint32_t wire;
  PauliBasis basis;
  int outcome;  // +1 or -1 postselection
};

struct WireRoles {
  bool input = false;
  bool ancilla = false;
  bool measured = false;
  bool output = false;
};

/// Ancilla preparations, a Clifford gate list (H, CNOT) applied in order, and
/// postselected measurements. Wires 0..n_in-1 are the inputs; ancilla wires
/// follow. `outputs` lists the output wires in order (output 0 is the least
/// significant simulator wire).
struct QuantumProcess {
  std::size_t n_in = 0;
  std::size_t n_out = 0;
  std::size_t total_wires = 0;
  std::vector<WireRoles> wires;
  std::vector<AncillaSpec> ancillas;
  std::vector<Gate> gates;
  std::vector<Measurement> measurements;
  std::vector<uint32_t> outputs;
  Realization realization = Realization::Defect;

  /// Throws std::invalid_argument when the wire-role invariants are violated
  /// (ancilla wires in the inputs, measured wires in the outputs, gate wires
  /// undeclared, or n_out + measurements != n_in + ancillas).
  void validate() const;
};

/// Gaussian-elimination realization: k_transpose ancillas and k measurements.
/// Gate order is input-side trace CNOTs, output-side trace CNOTs in reverse
/// trace order, then one H per output wire; this composes to a map
/// proportional to kw_matrix_oracle(C.H()).
QuantumProcess extract_defect(const ClassicalCode& c);

/// Maximal realization: m ancillas (one per check) and n measurements (one
/// per bit). CNOTs ancilla->bit over each check support, then bit->ancilla
/// over each bit support, then one H per ancilla wire.
QuantumProcess extract_minimal_coupling(const ClassicalCode& c);

/// Per-pair merge of two stacked layers into the product code register:
/// tensor - CNOT(alpha->beta) and a Z-basis +1 measurement of beta;
/// check  - CNOT(beta->alpha) and an X-basis +1 measurement of beta.
/// Inputs: alpha wires 0..N-1 then beta wires N..2N-1 (N = n1*n2, index
/// j*n1+i); outputs are the alpha wires.
QuantumProcess extract_product(const ClassicalCode& c1, const ClassicalCode& c2, ProductKind kind);

struct ResourceCounts {
  std::size_t ancillas;
  std::size_t measurements;
  bool operator==(const ResourceCounts&) const = default;
};

ResourceCounts resource_counts(const QuantumProcess& p);

/// Copy with gate index k removed (mutation tests).
QuantumProcess drop_gate(const QuantumProcess& p, std::size_t k);

}  // namespace ldpcq

#endif
