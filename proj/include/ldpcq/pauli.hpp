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

#ifndef LDPCQ_PAULI_HPP
#define LDPCQ_PAULI_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "ldpcq/code.hpp"
#include "ldpcq/f2.hpp"
#include "ldpcq/process.hpp"

namespace ldpcq {

/// Wire-indexed Pauli word i^p * prod_w X_w^{x_w} Z_w^{z_w} (X left of Z on
/// each wire). Y_w is i * X_w Z_w, so Y carries one unit of p. Two words
/// commute iff the symplectic form x1.z2 + z1.x2 vanishes mod 2.
class PauliOperator {
 public:
  explicit PauliOperator(std::size_t n_wires) : x_(n_wires), z_(n_wires) {}

  static PauliOperator identity(std::size_t n_wires) { return PauliOperator(n_wires); }
  static PauliOperator x_at(std::size_t n_wires, uint32_t w);
  static PauliOperator z_at(std::size_t n_wires, uint32_t w);
  static PauliOperator y_at(std::size_t n_wires, uint32_t w);
  static PauliOperator x_word(const BitVec& support);
  static PauliOperator z_word(const BitVec& support);

  std::size_t wires() const { return x_.size(); }
  bool x_bit(uint32_t w) const { return x_.get(w); }
  bool z_bit(uint32_t w) const { return z_.get(w); }
  const BitVec& x_bits() const { return x_; }
  const BitVec& z_bits() const { return z_; }
  uint8_t phase_pow() const { return p_; }
  std::complex<double> phase() const;
  void multiply_phase_i(int k) { p_ = static_cast<uint8_t>((p_ + (k % 4) + 4) & 3); }

  PauliOperator operator*(const PauliOperator& o) const;
  bool operator==(const PauliOperator& o) const = default;

  bool commutes_with(const PauliOperator& o) const;
  bool is_identity_word() const { return !x_.any() && !z_.any(); }
  bool is_identity() const { return is_identity_word() && p_ == 0; }
  bool is_hermitian() const;
  bool is_x_word() const { return !z_.any(); }
  bool is_z_word() const { return !x_.any(); }

  /// Conjugation by gates, in place: P <- U P U^dagger.
  void conj_h(uint32_t w);
  void conj_cnot(uint32_t control, uint32_t target);

  /// "+ X0 Y2 Z5" style; phase prefix is relative to the Hermitian letters.
  std::string to_string() const;

 private:
  BitVec x_, z_;
  uint8_t p_ = 0;
};

/// Result of conjugating an input-wire Pauli forward through a process.
/// Mapped: the output-side word op' with Process . op = op' . Process.
/// Obstructed: some factor hit a preparation or postselection it does not
/// stabilize; the map annihilates this operator direction (not an error).
struct PushResult {
  enum class Status { Mapped, Obstructed };
  Status status = Status::Obstructed;
  PauliOperator output{0};
  bool absorbed = false;  // at least one factor was absorbed along the way
  uint32_t obstruction_wire = 0;
  std::string obstruction_stage;

  bool mapped() const { return status == Status::Mapped; }
  /// Mapped with an identity output word after absorptions.
  bool fully_absorbed() const { return mapped() && absorbed && output.is_identity_word(); }
};

/// op must act on the input wires (n_in). The word is conjugated forward
/// through every gate; at a postselected measurement the stabilizing factor
/// is absorbed (with the outcome sign) and the anticommuting one obstructs.
PushResult push_pauli(const QuantumProcess& p, const PauliOperator& op);

/// push_pauli, completed for non-invertible realizations: when the forward
/// word leaves non-absorbable factors on measured wires, gate-images of
/// ancilla preparation stabilizers (identity insertions after the
/// preparation) are multiplied in to cancel them whenever a combination
/// exists. Needed for minimal-coupling check words whose gauge factors
/// cancel pairwise, e.g. H = [1 1 0].
PushResult push_pauli_extended(const QuantumProcess& p, const PauliOperator& op);

/// Weighted Pauli-term list; all terms must be Hermitian.
struct HamiltonianSpec {
  std::size_t n_wires = 0;
  struct Term {
    double coeff;
    PauliOperator op;
  };
  std::vector<Term> terms;

  void validate() const;
};

/// -J sum_a prod_{i in check a} Z_i  -  h sum_i X_i  (m + n terms).
HamiltonianSpec build_hamiltonian(const ClassicalCode& c, double j, double h);

/// Coupled-layer Hamiltonian on 2*n1*n2 wires (alpha layer then beta layer,
/// wire j*n1+i within a layer): n2 copies of code-1 checks (J=1), n1 copies
/// of code-2 checks, transverse fields h1/h2, and the interlayer coupling
/// -lambda * ZZ (tensor) or -lambda * XX (check) on every pair. lambda == 0
/// leaves the layers uncoupled (no coupling terms).
HamiltonianSpec build_coupled_layer(const ClassicalCode& c1, const ClassicalCode& c2,
                                    ProductKind kind, double h1, double h2, double lambda);

/// Just the interlayer coupling part of build_coupled_layer (the commuting
/// constraint Hamiltonian).
HamiltonianSpec coupled_layer_constraint(const ClassicalCode& c1, const ClassicalCode& c2,
                                         ProductKind kind, double lambda);

}  // namespace ldpcq

#endif
