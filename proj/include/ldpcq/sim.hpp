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

#ifndef LDPCQ_SIM_HPP
#define LDPCQ_SIM_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ldpcq/pauli.hpp"
#include "ldpcq/process.hpp"

namespace ldpcq {

using cdouble = std::complex<double>;

/// Dense state vector; wire 0 is the least significant index bit.
class DenseState {
 public:
  explicit DenseState(std::size_t n_wires);  // |0...0>
  static DenseState basis(std::size_t n_wires, uint64_t index);
  static DenseState uniform_plus(std::size_t n_wires);

  std::size_t wires() const { return n_; }
  std::vector<cdouble>& amplitudes() { return amp_; }
  const std::vector<cdouble>& amplitudes() const { return amp_; }
  cdouble amplitude(uint64_t index) const { return amp_[index]; }

  void apply_h(uint32_t w);
  void apply_cnot(uint32_t control, uint32_t target);

  double norm_sq() const;
  void scale(double s);

  /// Projects wire w onto the postselected outcome and removes the wire.
  /// Returns the branch squared norm; the state is not renormalized.
  double project_out(uint32_t w, PauliBasis basis, int outcome);

  /// Appends a new most-significant wire in state a0|0> + a1|1>.
  void append_qubit(cdouble a0, cdouble a1);

  /// Reorders wires: new wire k reads old wire new_order[k].
  void permute_wires(const std::vector<uint32_t>& new_order);

  cdouble expectation(const PauliOperator& op) const;
  static cdouble overlap(const DenseState& a, const DenseState& b);  // <a|b>
  /// |<a|b>| / (|a| |b|): 1 means equal up to a global phase.
  static double fidelity_up_to_phase(const DenseState& a, const DenseState& b);

 private:
  std::size_t n_ = 0;
  std::vector<cdouble> amp_;
};

/// Single-qubit amplitudes (|0>, |1>).
using QubitAmps = std::array<cdouble, 2>;

QubitAmps label_amplitudes(StateLabel s);

struct ApplyOptions {
  /// Physical replacement preparations, keyed by ancilla index in
  /// QuantumProcess::ancillas. Without an override the declared label is
  /// prepared, read through the output-leg Hadamard when the record carries
  /// one (label plus then preps physical |0>, which realizes the duality map
  /// itself; a physical |+> override steers the output sector instead).
  std::map<std::size_t, QubitAmps> ancilla_overrides;
  bool renormalize = true;
  double annihilation_eps = 1e-12;
  std::size_t max_wires = 20;
};

struct ApplyResult {
  DenseState state{0};
  double probability = 1.0;
  bool annihilated = false;
};

/// Appends the ancillas (physical prep; overrides replace the labeled
/// state), applies the gates in order, projects the postselected
/// measurements, and reorders the survivors into output order. probability
/// is the squared norm before renormalization.
ApplyResult apply_process(const QuantumProcess& p, const DenseState& input,
                          const ApplyOptions& opts = {});

/// 2^{n_out} x 2^{n_in} matrix from applying the process to every basis
/// state without renormalizing postselected branches. Throws resource_error
/// above the cap.
Eigen::MatrixXcd process_matrix(const QuantumProcess& p, std::size_t max_total_wires = 12);

/// Runs the defect process of the code on |+>^n. By default the ancillas are
/// fed physically in |+>, which selects the all-zeros-style representative
/// (|000> for the 3-site ring); overriding with physical |0> prepares the
/// maximally symmetric superposition, |-> the opposite sector.
ApplyResult prepare_state(const ClassicalCode& c, const ApplyOptions& opts = {});

/// Dense Hermitian matrix of a Pauli word / Hamiltonian (resource-capped).
Eigen::MatrixXcd pauli_dense(const PauliOperator& op);
Eigen::MatrixXcd dense_hamiltonian(const HamiltonianSpec& spec, std::size_t max_wires = 14);

struct SpectrumOptions {
  std::size_t dense_wires = 12;     // dense diagonalization up to here
  std::size_t iterative_wires = 20; // Lanczos beyond the dense range
  double tol = 1e-10;
  std::size_t max_low_states = 16;  // iterative-path cap
  uint64_t seed = 0x1db5c9u;
};

/// Lowest num_low eigenvalues in ascending order, degeneracies included.
std::vector<double> exact_spectrum(const HamiltonianSpec& spec, std::size_t num_low,
                                   const SpectrumOptions& opts = {});

/// Exact low-energy block: diagonalize the full Hamiltonian, take the
/// num_states lowest eigenvectors, rotate them onto the constrained basis by
/// the unitary closest to the identity (direct rotation), and express the
/// block in that basis. Spectrum-preserving by construction.
struct EffectiveBlock {
  std::vector<std::string> labels;   // one per constrained-basis column
  Eigen::MatrixXcd matrix;           // Hermitian within 1e-10
  double lambda = 0.0;               // coupling the block was computed at
  double residual = 0.0;             // subspace misalignment sin(theta_max)
  Eigen::VectorXd low_eigenvalues;   // the exact low eigenvalues
};

/// Core form with an explicit orthonormal constrained basis (columns).
EffectiveBlock effective_block_with_basis(const HamiltonianSpec& full,
                                          const Eigen::MatrixXcd& basis,
                                          std::vector<std::string> labels,
                                          std::size_t num_states, double lambda_report = 0.0,
                                          std::size_t max_wires = 12);

/// Spec-level form: h0 must be a mutually commuting sub-Hamiltonian; its
/// ground projector is built from the term stabilizers and orthonormalized.
/// Throws degeneracy_error when the low eigenspace is not adiabatically
/// connected to the constrained space (singular overlap within 1e-8).
EffectiveBlock effective_block(const HamiltonianSpec& full, const HamiltonianSpec& h0,
                               std::size_t num_states, std::size_t max_wires = 12);

/// Coupled-layer block with the canonical constrained basis and labels:
/// tensor - matched Z strings |s,s>; check - matched X strings.
EffectiveBlock effective_coupled_block(const ClassicalCode& c1, const ClassicalCode& c2,
                                       ProductKind kind, double h1, double h2, double lambda,
                                       std::size_t max_wires = 12);

struct PowerLawSample {
  double lambda;
  double value;
};
struct PowerLawFit {
  double exponent;
  double constant;
  double max_rel_residual;
};

/// Least-squares fit of log|value| against log(lambda). Requires >= 3
/// samples, nonzero values, ascending lambda.
PowerLawFit fit_power_law(const std::vector<PowerLawSample>& samples);

}  // namespace ldpcq

#endif
