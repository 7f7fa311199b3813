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

#include "ldpcq/sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ldpcq/errors.hpp"
#include "ldpcq/kernels.hpp"

namespace ldpcq {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;
}

DenseState::DenseState(std::size_t n_wires) : n_(n_wires), amp_(std::size_t{1} << n_wires) {
  amp_[0] = 1.0;
}

DenseState DenseState::basis(std::size_t n_wires, uint64_t index) {
  DenseState s(n_wires);
  s.amp_[0] = 0.0;
  s.amp_[index] = 1.0;
  return s;
}

DenseState DenseState::uniform_plus(std::size_t n_wires) {
  DenseState s(n_wires);
  const double a = std::pow(2.0, -0.5 * static_cast<double>(n_wires));
  std::fill(s.amp_.begin(), s.amp_.end(), cdouble{a, 0.0});
  return s;
}

void DenseState::apply_h(uint32_t w) {
  const std::size_t half = std::size_t{1} << w;
  for (std::size_t base = 0; base < amp_.size(); base += 2 * half)
    kern::h_pairs(amp_.data() + base, amp_.data() + base + half, half);
}

void DenseState::apply_cnot(uint32_t control, uint32_t target) {
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  if (target < control) {
    // control-set halves are contiguous blocks of length 2^control
    for (std::size_t base = cbit; base < amp_.size(); base += 2 * cbit)
      for (std::size_t sub = 0; sub < cbit; sub += 2 * tbit)
        kern::swap_blocks(amp_.data() + base + sub, amp_.data() + base + sub + tbit, tbit);
  } else {
    for (std::size_t base = 0; base < amp_.size(); base += 2 * tbit)
      for (std::size_t sub = cbit; sub < tbit; sub += 2 * cbit)
        kern::swap_blocks(amp_.data() + base + sub, amp_.data() + base + sub + tbit, cbit);
  }
}

double DenseState::norm_sq() const { return kern::norm_sq(amp_.data(), amp_.size()); }

void DenseState::scale(double s) { kern::scale(amp_.data(), amp_.size(), s); }

double DenseState::project_out(uint32_t w, PauliBasis basis, int outcome) {
  if (basis == PauliBasis::X) apply_h(w);
  const std::size_t keep_bit = (outcome >= 0) ? 0 : 1;
  std::vector<cdouble> out(amp_.size() / 2);
  std::size_t at = 0;
  for (std::size_t idx = 0; idx < amp_.size(); ++idx)
    if (((idx >> w) & 1) == keep_bit) out[at++] = amp_[idx];
  amp_ = std::move(out);
  n_ -= 1;
  return kern::norm_sq(amp_.data(), amp_.size());
}

void DenseState::append_qubit(cdouble a0, cdouble a1) {
  const std::size_t sz = amp_.size();
  std::vector<cdouble> out(sz * 2);
  for (std::size_t idx = 0; idx < sz; ++idx) {
    out[idx] = amp_[idx] * a0;
    out[idx + sz] = amp_[idx] * a1;
  }
  amp_ = std::move(out);
  n_ += 1;
}

void DenseState::permute_wires(const std::vector<uint32_t>& new_order) {
  if (new_order.size() != n_) throw std::invalid_argument("permute_wires: size mismatch");
  std::vector<cdouble> out(amp_.size());
  for (std::size_t idx = 0; idx < amp_.size(); ++idx) {
    std::size_t to = 0;
    for (std::size_t k = 0; k < n_; ++k) to |= ((idx >> new_order[k]) & 1) << k;
    out[to] = amp_[idx];
  }
  amp_ = std::move(out);
}

cdouble DenseState::expectation(const PauliOperator& op) const {
  if (op.wires() != n_) throw std::invalid_argument("expectation: wire mismatch");
  uint64_t xmask = 0, zmask = 0;
  for (std::size_t w = 0; w < n_; ++w) {
    if (op.x_bit(static_cast<uint32_t>(w))) xmask |= uint64_t{1} << w;
    if (op.z_bit(static_cast<uint32_t>(w))) zmask |= uint64_t{1} << w;
  }
  cdouble acc{0.0, 0.0};
  for (std::size_t b = 0; b < amp_.size(); ++b) {
    const double sign = (std::popcount(uint64_t(b) & zmask) & 1) ? -1.0 : 1.0;
    acc += std::conj(amp_[b ^ xmask]) * sign * amp_[b];
  }
  return acc * op.phase();
}

cdouble DenseState::overlap(const DenseState& a, const DenseState& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("overlap: wire mismatch");
  cdouble acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.amp_.size(); ++i) acc += std::conj(a.amp_[i]) * b.amp_[i];
  return acc;
}

double DenseState::fidelity_up_to_phase(const DenseState& a, const DenseState& b) {
  const double na = std::sqrt(a.norm_sq()), nb = std::sqrt(b.norm_sq());
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::abs(overlap(a, b)) / (na * nb);
}

QubitAmps label_amplitudes(StateLabel s) {
  switch (s) {
    case StateLabel::Plus: return {cdouble{kInvSqrt2, 0}, cdouble{kInvSqrt2, 0}};
    case StateLabel::Minus: return {cdouble{kInvSqrt2, 0}, cdouble{-kInvSqrt2, 0}};
    case StateLabel::Zero: return {cdouble{1, 0}, cdouble{0, 0}};
    default: return {cdouble{0, 0}, cdouble{1, 0}};
  }
}

ApplyResult apply_process(const QuantumProcess& p, const DenseState& input,
                          const ApplyOptions& opts) {
  if (input.wires() != p.n_in) throw std::invalid_argument("apply_process: input wire mismatch");
  if (p.total_wires > opts.max_wires) throw resource_error("apply_process: wire cap exceeded");

  DenseState st = input;
  // Ancillas are appended in wire order (they are declared ascending).
  // Declared labels are read in the leg basis when the record carries the
  // output-leg Hadamard (so label plus preps physical |0>); overrides are the
  // physical preparation, used verbatim.
  for (std::size_t k = 0; k < p.ancillas.size(); ++k) {
    const auto& a = p.ancillas[k];
    QubitAmps amps;
    if (auto it = opts.ancilla_overrides.find(k); it != opts.ancilla_overrides.end()) {
      amps = it->second;
    } else {
      amps = label_amplitudes(a.state);
      if (a.leg_hadamard) {
        const cdouble a0 = (amps[0] + amps[1]) * kInvSqrt2;
        const cdouble a1 = (amps[0] - amps[1]) * kInvSqrt2;
        amps = {a0, a1};
      }
    }
    if (a.wire != st.wires()) throw std::invalid_argument("apply_process: ancilla wire order");
    st.append_qubit(amps[0], amps[1]);
  }

  for (const auto& g : p.gates) {
    if (g.kind == Gate::Kind::H)
      st.apply_h(g.a);
    else
      st.apply_cnot(g.a, g.b);
  }

  // Positions shift as measured wires are traced out.
  std::vector<int32_t> pos(p.total_wires);
  std::iota(pos.begin(), pos.end(), 0);
  double probability = 1.0;
  for (const auto& m : p.measurements) {
    const int32_t q = pos[m.wire];
    probability = st.project_out(static_cast<uint32_t>(q), m.basis, m.outcome);
    for (auto& x : pos)
      if (x > q) --x;
    pos[m.wire] = -1;
  }

  ApplyResult res;
  res.probability = probability;
  if (opts.renormalize && probability < opts.annihilation_eps) {
    res.annihilated = true;
    res.state = DenseState(0);
    return res;
  }

  std::vector<uint32_t> order(p.n_out);
  for (std::size_t k = 0; k < p.n_out; ++k) {
    const int32_t q = pos[p.outputs[k]];
    if (q < 0) throw std::logic_error("apply_process: output wire was measured");
    order[k] = static_cast<uint32_t>(q);
  }
  st.permute_wires(order);
  if (opts.renormalize && probability > 0.0) st.scale(1.0 / std::sqrt(probability));
  res.state = std::move(st);
  return res;
}

Eigen::MatrixXcd process_matrix(const QuantumProcess& p, std::size_t max_total_wires) {
  if (p.total_wires > max_total_wires) throw resource_error("process_matrix: size cap exceeded");
  Eigen::MatrixXcd m(std::size_t{1} << p.n_out, std::size_t{1} << p.n_in);
  ApplyOptions opts;
  opts.renormalize = false;
  opts.max_wires = max_total_wires;
  for (uint64_t x = 0; x < (uint64_t{1} << p.n_in); ++x) {
    const ApplyResult r = apply_process(p, DenseState::basis(p.n_in, x), opts);
    for (uint64_t y = 0; y < (uint64_t{1} << p.n_out); ++y)
      m(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = r.state.amplitude(y);
  }
  return m;
}

ApplyResult prepare_state(const ClassicalCode& c, const ApplyOptions& opts) {
  const QuantumProcess p = extract_defect(c);
  ApplyOptions o = opts;
  // Reference preparation: ancillas fed physically in |+>, which lands on the
  // all-zeros-style representative; override with zero/one amplitudes for the
  // symmetric superposition or other sectors.
  if (o.ancilla_overrides.empty())
    for (std::size_t k = 0; k < p.ancillas.size(); ++k)
      o.ancilla_overrides[k] = label_amplitudes(StateLabel::Plus);
  return apply_process(p, DenseState::uniform_plus(c.n()), o);
}

Eigen::MatrixXcd pauli_dense(const PauliOperator& op) {
  const std::size_t n = op.wires();
  if (n > 14) throw resource_error("pauli_dense: size cap exceeded");
  uint64_t xmask = 0, zmask = 0;
  for (std::size_t w = 0; w < n; ++w) {
    if (op.x_bit(static_cast<uint32_t>(w))) xmask |= uint64_t{1} << w;
    if (op.z_bit(static_cast<uint32_t>(w))) zmask |= uint64_t{1} << w;
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(std::size_t{1} << n, std::size_t{1} << n);
  for (uint64_t b = 0; b < (uint64_t{1} << n); ++b) {
    const double sign = (std::popcount(b & zmask) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(b ^ xmask), static_cast<Eigen::Index>(b)) = sign * op.phase();
  }
  return m;
}

Eigen::MatrixXcd dense_hamiltonian(const HamiltonianSpec& spec, std::size_t max_wires) {
  if (spec.n_wires > max_wires) throw resource_error("dense_hamiltonian: size cap exceeded");
  const std::size_t dim = std::size_t{1} << spec.n_wires;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : spec.terms) {
    uint64_t xmask = 0, zmask = 0;
    for (std::size_t w = 0; w < spec.n_wires; ++w) {
      if (t.op.x_bit(static_cast<uint32_t>(w))) xmask |= uint64_t{1} << w;
      if (t.op.z_bit(static_cast<uint32_t>(w))) zmask |= uint64_t{1} << w;
    }
    const cdouble f = t.coeff * t.op.phase();
    for (uint64_t b = 0; b < dim; ++b) {
      const double sign = (std::popcount(b & zmask) & 1) ? -1.0 : 1.0;
      h(static_cast<Eigen::Index>(b ^ xmask), static_cast<Eigen::Index>(b)) += f * sign;
    }
  }
  return h;
}

namespace {

// y += H x, matrix-free.
void apply_spec(const HamiltonianSpec& spec, const Eigen::VectorXcd& x, Eigen::VectorXcd& y) {
  const std::size_t n = spec.n_wires;
  for (const auto& t : spec.terms) {
    uint64_t xmask = 0, zmask = 0;
    for (std::size_t w = 0; w < n; ++w) {
      if (t.op.x_bit(static_cast<uint32_t>(w))) xmask |= uint64_t{1} << w;
      if (t.op.z_bit(static_cast<uint32_t>(w))) zmask |= uint64_t{1} << w;
    }
    const cdouble f = t.coeff * t.op.phase();
    for (uint64_t b = 0; b < static_cast<uint64_t>(x.size()); ++b) {
      const double sign = (std::popcount(b & zmask) & 1) ? -1.0 : 1.0;
      y(static_cast<Eigen::Index>(b ^ xmask)) += f * sign * x(static_cast<Eigen::Index>(b));
    }
  }
}

// Lanczos with full reorthogonalization against the Krylov basis and an
// external deflation set; returns the smallest Ritz value and its vector.
struct LanczosResult {
  double value;
  Eigen::VectorXcd vector;
  bool converged;
};

LanczosResult lanczos_smallest(const HamiltonianSpec& spec,
                               const std::vector<Eigen::VectorXcd>& deflate, double tol,
                               std::mt19937_64& rng) {
  const std::size_t dim = std::size_t{1} << spec.n_wires;
  const std::size_t max_iter = std::min<std::size_t>(dim, 150);

  auto project_out_deflated = [&](Eigen::VectorXcd& v) {
    for (const auto& u : deflate) v -= u.dot(v) * u;
  };

  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (std::size_t i = 0; i < dim; ++i) v(i) = cdouble{dist(rng), dist(rng)};
  project_out_deflated(v);
  const double nv = v.norm();
  if (nv < 1e-12) return {0.0, v, false};
  v /= nv;

  std::vector<Eigen::VectorXcd> basis;
  std::vector<double> alpha, beta;
  for (std::size_t it = 0; it < max_iter; ++it) {
    basis.push_back(v);
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(dim);
    apply_spec(spec, v, w);
    project_out_deflated(w);
    alpha.push_back(std::real(v.dot(w)));
    for (int sweep = 0; sweep < 2; ++sweep)  // full reorthogonalization
      for (const auto& u : basis) w -= u.dot(w) * u;
    const double b = w.norm();

    const std::size_t k = alpha.size();
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      tri(i, i) = alpha[i];
      if (i + 1 < k) tri(i, i + 1) = tri(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
    const double theta = es.eigenvalues()(0);
    const double resid = std::abs(b * es.eigenvectors()(k - 1, 0));
    if (resid < tol || b < 1e-13 || it + 1 == max_iter) {
      Eigen::VectorXcd y = Eigen::VectorXcd::Zero(dim);
      for (std::size_t i = 0; i < k; ++i) y += es.eigenvectors()(i, 0) * basis[i];
      for (const auto& u : deflate) y -= u.dot(y) * u;
      y.normalize();
      return {theta, y, resid < tol || b < 1e-13};
    }
    beta.push_back(b);
    v = w / b;
  }
  return {alpha.empty() ? 0.0 : alpha[0], v, false};
}

}  // namespace

std::vector<double> exact_spectrum(const HamiltonianSpec& spec, std::size_t num_low,
                                   const SpectrumOptions& opts) {
  spec.validate();
  const std::size_t dim = std::size_t{1} << spec.n_wires;
  num_low = std::min<std::size_t>(num_low, dim);

  if (spec.n_wires <= opts.dense_wires) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense_hamiltonian(spec, opts.dense_wires));
    std::vector<double> out(num_low);
    for (std::size_t i = 0; i < num_low; ++i) out[i] = es.eigenvalues()(i);
    return out;
  }
  if (spec.n_wires > opts.iterative_wires)
    throw resource_error("exact_spectrum: size cap exceeded");
  if (num_low > opts.max_low_states)
    throw std::invalid_argument("exact_spectrum: too many low states for the iterative mode");

  // Deflated restarts recover degenerate copies.
  std::mt19937_64 rng(opts.seed);
  std::vector<Eigen::VectorXcd> found;
  std::vector<double> values;
  while (values.size() < num_low) {
    const LanczosResult r = lanczos_smallest(spec, found, opts.tol, rng);
    values.push_back(r.value);
    found.push_back(r.vector);
  }
  std::sort(values.begin(), values.end());
  return values;
}

EffectiveBlock effective_block_with_basis(const HamiltonianSpec& full,
                                          const Eigen::MatrixXcd& basis,
                                          std::vector<std::string> labels,
                                          std::size_t num_states, double lambda_report,
                                          std::size_t max_wires) {
  full.validate();
  if (static_cast<std::size_t>(basis.cols()) != num_states)
    throw std::invalid_argument("effective_block: num_states must match the constrained basis");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense_hamiltonian(full, max_wires));
  const Eigen::MatrixXcd low = es.eigenvectors().leftCols(num_states);
  const Eigen::VectorXd energies = es.eigenvalues().head(num_states);

  const Eigen::MatrixXcd overlap = basis.adjoint() * low;  // d x d
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(overlap, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  if (smin < 1e-8)
    throw degeneracy_error("effective_block: low eigenspace not connected to the constrained space");

  // Direct rotation: align the low eigenbasis with the constrained basis.
  const Eigen::MatrixXcd w = svd.matrixV() * svd.matrixU().adjoint();
  Eigen::MatrixXcd block = w.adjoint() * energies.asDiagonal() * w;
  block = 0.5 * (block + Eigen::MatrixXcd(block.adjoint()));

  EffectiveBlock out;
  out.labels = std::move(labels);
  out.matrix = std::move(block);
  out.lambda = lambda_report;
  out.residual = std::sqrt(std::max(0.0, 1.0 - smin * smin));
  out.low_eigenvalues = energies;
  return out;
}

EffectiveBlock effective_block(const HamiltonianSpec& full, const HamiltonianSpec& h0,
                               std::size_t num_states, std::size_t max_wires) {
  h0.validate();
  if (h0.n_wires != full.n_wires) throw std::invalid_argument("effective_block: wire mismatch");
  for (std::size_t i = 0; i < h0.terms.size(); ++i)
    for (std::size_t j = i + 1; j < h0.terms.size(); ++j)
      if (!h0.terms[i].op.commutes_with(h0.terms[j].op))
        throw std::invalid_argument("effective_block: constraint terms must commute");

  // Ground projector of h0: product of (1 + s_k P_k)/2 with s_k = -sign(c_k).
  const std::size_t dim = std::size_t{1} << full.n_wires;
  if (full.n_wires > max_wires) throw resource_error("effective_block: size cap exceeded");
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& t : h0.terms) {
    if (t.coeff == 0.0) continue;
    const double s = t.coeff < 0 ? 1.0 : -1.0;
    proj = 0.5 * (proj + s * (pauli_dense(t.op) * proj));
  }
  // Orthonormal basis of the range via pivoted Gram-Schmidt over projected
  // computational basis vectors.
  std::vector<Eigen::VectorXcd> cols;
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < dim && cols.size() < num_states; ++b) {
    Eigen::VectorXcd v = proj.col(b);
    for (const auto& u : cols) v -= u.dot(v) * u;
    const double nv = v.norm();
    if (nv > 1e-9) {
      cols.push_back(v / nv);
      labels.push_back("p" + std::to_string(b));
    }
  }
  if (cols.size() != num_states)
    throw degeneracy_error("effective_block: constrained space dimension mismatch");
  Eigen::MatrixXcd basis(dim, num_states);
  for (std::size_t k = 0; k < cols.size(); ++k) basis.col(k) = cols[k];
  return effective_block_with_basis(full, basis, std::move(labels), num_states, 0.0, max_wires);
}

EffectiveBlock effective_coupled_block(const ClassicalCode& c1, const ClassicalCode& c2,
                                       ProductKind kind, double h1, double h2, double lambda,
                                       std::size_t max_wires) {
  const std::size_t pairs = c1.n() * c2.n();
  const std::size_t dim = std::size_t{1} << (2 * pairs);
  if (2 * pairs > max_wires) throw resource_error("effective_coupled_block: size cap exceeded");
  const std::size_t d = std::size_t{1} << pairs;

  Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(dim, d);
  std::vector<std::string> labels;
  labels.reserve(d);
  auto bits_label = [&](uint64_t v, char tag) {
    std::string s(1, tag);
    s += ':';
    for (std::size_t q = 0; q < pairs; ++q) s += ((v >> q) & 1) ? '1' : '0';
    return s;
  };
  if (kind == ProductKind::Tensor) {
    // |s>_alpha |s>_beta, matched Z strings.
    for (uint64_t s = 0; s < d; ++s) {
      basis(static_cast<Eigen::Index>(s | (s << pairs)), static_cast<Eigen::Index>(s)) = 1.0;
      labels.push_back(bits_label(s, 'z'));
    }
  } else {
    // Matched X strings: amplitudes 2^-pairs * (-1)^{u.xa + u.xb}.
    const double a = std::pow(2.0, -static_cast<double>(pairs));
    for (uint64_t u = 0; u < d; ++u) {
      for (uint64_t x = 0; x < dim; ++x) {
        const uint64_t xa = x & (d - 1), xb = x >> pairs;
        const bool odd = (std::popcount(u & xa) + std::popcount(u & xb)) & 1;
        basis(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(u)) = odd ? -a : a;
      }
      labels.push_back(bits_label(u, 'x'));
    }
  }
  const HamiltonianSpec full = build_coupled_layer(c1, c2, kind, h1, h2, lambda);
  return effective_block_with_basis(full, basis, std::move(labels), d, lambda, max_wires);
}

PowerLawFit fit_power_law(const std::vector<PowerLawSample>& samples) {
  if (samples.size() < 3) throw std::invalid_argument("fit_power_law: need at least 3 samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].value == 0.0) throw std::invalid_argument("fit_power_law: zero value");
    if (samples[i].lambda <= 0.0) throw std::invalid_argument("fit_power_law: lambda must be positive");
    if (i > 0 && samples[i].lambda <= samples[i - 1].lambda)
      throw std::invalid_argument("fit_power_law: lambdas must ascend");
  }
  const std::size_t n = samples.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& s : samples) {
    const double x = std::log(s.lambda), y = std::log(std::abs(s.value));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;
  PowerLawFit fit{slope, std::exp(intercept), 0.0};
  for (const auto& s : samples) {
    const double model = fit.constant * std::pow(s.lambda, fit.exponent);
    fit.max_rel_residual =
        std::max(fit.max_rel_residual, std::abs(std::abs(s.value) - model) / std::abs(s.value));
  }
  return fit;
}

}  // namespace ldpcq
