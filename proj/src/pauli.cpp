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

#include "ldpcq/pauli.hpp"

#include <stdexcept>

namespace ldpcq {

PauliOperator PauliOperator::x_at(std::size_t n, uint32_t w) {
  PauliOperator p(n);
  p.x_.set(w, true);
  return p;
}

PauliOperator PauliOperator::z_at(std::size_t n, uint32_t w) {
  PauliOperator p(n);
  p.z_.set(w, true);
  return p;
}

PauliOperator PauliOperator::y_at(std::size_t n, uint32_t w) {
  PauliOperator p(n);
  p.x_.set(w, true);
  p.z_.set(w, true);
  p.p_ = 1;  // Y = i X Z
  return p;
}

PauliOperator PauliOperator::x_word(const BitVec& support) {
  PauliOperator p(support.size());
  p.x_ = support;
  return p;
}

PauliOperator PauliOperator::z_word(const BitVec& support) {
  PauliOperator p(support.size());
  p.z_ = support;
  return p;
}

std::complex<double> PauliOperator::phase() const {
  switch (p_ & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

PauliOperator PauliOperator::operator*(const PauliOperator& o) const {
  if (o.wires() != wires()) throw std::invalid_argument("PauliOperator::operator*: size mismatch");
  PauliOperator r(wires());
  // Reordering Z^{z1} past X^{x2} costs (-1)^{z1.x2}.
  const bool anti = z_.dot(o.x_);
  r.x_ = x_;
  r.x_.xor_with(o.x_);
  r.z_ = z_;
  r.z_.xor_with(o.z_);
  r.p_ = static_cast<uint8_t>((p_ + o.p_ + (anti ? 2 : 0)) & 3);
  return r;
}

bool PauliOperator::commutes_with(const PauliOperator& o) const {
  return (x_.dot(o.z_) ^ z_.dot(o.x_)) == 0;
}

bool PauliOperator::is_hermitian() const {
  const std::size_t y_count = [&] {
    std::size_t c = 0;
    for (std::size_t w = 0; w < wires(); ++w) c += x_.get(w) && z_.get(w);
    return c;
  }();
  return ((p_ ^ y_count) & 1) == 0;
}

void PauliOperator::conj_h(uint32_t w) {
  const bool xb = x_.get(w), zb = z_.get(w);
  if (xb && zb) p_ = static_cast<uint8_t>((p_ + 2) & 3);  // H Y H = -Y
  x_.set(w, zb);
  z_.set(w, xb);
}

void PauliOperator::conj_cnot(uint32_t c, uint32_t t) {
  const bool xc = x_.get(c), zc = z_.get(c), xt = x_.get(t), zt = z_.get(t);
  const int y_before = int(xc && zc) + int(xt && zt);
  const bool flip = xc && zt && !(xt ^ zc);
  const bool xt2 = xt ^ xc;
  const bool zc2 = zc ^ zt;
  x_.set(t, xt2);
  z_.set(c, zc2);
  const int y_after = int(xc && zc2) + int(xt2 && zt);
  p_ = static_cast<uint8_t>((p_ + (flip ? 2 : 0) + y_before - y_after + 8) & 3);
}

std::string PauliOperator::to_string() const {
  std::size_t y_count = 0;
  std::string body;
  for (std::size_t w = 0; w < wires(); ++w) {
    const bool xb = x_.get(w), zb = z_.get(w);
    if (!xb && !zb) continue;
    body += ' ';
    body += xb && zb ? 'Y' : (xb ? 'X' : 'Z');
    body += std::to_string(w);
    y_count += xb && zb;
  }
  static const char* prefix[4] = {"+", "+i", "-", "-i"};
  std::string s = prefix[(p_ - y_count % 4 + 4) & 3];
  s += body.empty() ? " I" : body;
  return s;
}

namespace {

// Physical single-qubit preparation of an ancilla record.
// Returns which Pauli stabilizes it (+P with sign).
struct PhysPrep {
  char stabilizer;  // 'X' or 'Z'
  int sign;         // +1 or -1
};

PhysPrep physical_prep(const AncillaSpec& a) {
  // Label basis state first.
  char stab;
  int sign;
  switch (a.state) {
    case StateLabel::Plus: stab = 'X'; sign = +1; break;
    case StateLabel::Minus: stab = 'X'; sign = -1; break;
    case StateLabel::Zero: stab = 'Z'; sign = +1; break;
    default: stab = 'Z'; sign = -1; break;
  }
  if (a.leg_hadamard) stab = (stab == 'X') ? 'Z' : 'X';  // H swaps the stabilizer axis
  return {stab, sign};
}

}  // namespace

namespace {

PauliOperator extend_to_register(const QuantumProcess& p, const PauliOperator& op_in) {
  BitVec x(p.total_wires), z(p.total_wires);
  for (std::size_t w = 0; w < p.n_in; ++w) {
    if (op_in.x_bit(static_cast<uint32_t>(w))) x.set(w, true);
    if (op_in.z_bit(static_cast<uint32_t>(w))) z.set(w, true);
  }
  PauliOperator op = PauliOperator::x_word(x) * PauliOperator::z_word(z);
  op.multiply_phase_i(op_in.phase_pow());
  return op;
}

// Absorbs factors sitting on ancilla wires at preparation time. Input-wire
// operators never carry any, but the rule is total: a factor stabilizing the
// physical prep is absorbed, anything else obstructs.
bool prep_stage(const QuantumProcess& p, PauliOperator& op, PushResult& res) {
  for (const auto& a : p.ancillas) {
    const bool xb = op.x_bit(a.wire), zb = op.z_bit(a.wire);
    if (!xb && !zb) continue;
    const PhysPrep prep = physical_prep(a);
    const bool is_stab = (prep.stabilizer == 'X') ? (xb && !zb) : (zb && !xb);
    if (!is_stab) {
      res.status = PushResult::Status::Obstructed;
      res.obstruction_wire = a.wire;
      res.obstruction_stage = "ancilla-prep";
      return false;
    }
    PauliOperator eraser = prep.stabilizer == 'X' ? PauliOperator::x_at(p.total_wires, a.wire)
                                                  : PauliOperator::z_at(p.total_wires, a.wire);
    op = op * eraser;
    if (prep.sign < 0) op.multiply_phase_i(2);
    res.absorbed = true;
  }
  return true;
}

void conj_through_gates(const QuantumProcess& p, PauliOperator& op) {
  for (const auto& g : p.gates) {
    if (g.kind == Gate::Kind::H)
      op.conj_h(g.a);
    else
      op.conj_cnot(g.a, g.b);
  }
}

// The component a postselected measurement cannot absorb.
bool bad_bit(const PauliOperator& op, const Measurement& m) {
  return m.basis == PauliBasis::X ? op.z_bit(m.wire) : op.x_bit(m.wire);
}

PushResult measure_and_restrict(const QuantumProcess& p, PauliOperator op, PushResult res) {
  for (const auto& m : p.measurements) {
    const bool xb = op.x_bit(m.wire), zb = op.z_bit(m.wire);
    if (!xb && !zb) continue;
    const bool absorbable = (m.basis == PauliBasis::X) ? (xb && !zb) : (zb && !xb);
    if (!absorbable) {
      res.status = PushResult::Status::Obstructed;
      res.obstruction_wire = m.wire;
      res.obstruction_stage = "measurement";
      return res;
    }
    PauliOperator eraser = m.basis == PauliBasis::X ? PauliOperator::x_at(p.total_wires, m.wire)
                                                    : PauliOperator::z_at(p.total_wires, m.wire);
    op = op * eraser;
    if (m.outcome < 0) op.multiply_phase_i(2);
    res.absorbed = true;
  }

  // Whatever remains must live on output wires.
  PauliOperator out(p.n_out);
  BitVec seen(p.total_wires);
  for (std::size_t pos = 0; pos < p.outputs.size(); ++pos) {
    const uint32_t w = p.outputs[pos];
    seen.set(w, true);
    const bool xb = op.x_bit(w), zb = op.z_bit(w);
    BitVec xs(p.n_out), zs(p.n_out);
    if (xb) xs.set(pos, true);
    if (zb) zs.set(pos, true);
    out = out * (PauliOperator::x_word(xs) * PauliOperator::z_word(zs));
  }
  for (std::size_t w = 0; w < p.total_wires; ++w) {
    if (!seen.get(w) && (op.x_bit(static_cast<uint32_t>(w)) || op.z_bit(static_cast<uint32_t>(w))))
      throw std::logic_error("push_pauli: residual factor on a dead wire");
  }
  out.multiply_phase_i(op.phase_pow());

  res.status = PushResult::Status::Mapped;
  res.output = out;
  return res;
}

}  // namespace

PushResult push_pauli(const QuantumProcess& p, const PauliOperator& op_in) {
  if (op_in.wires() != p.n_in)
    throw std::invalid_argument("push_pauli: operator must act on the input wires");
  PauliOperator op = extend_to_register(p, op_in);
  PushResult res;
  if (!prep_stage(p, op, res)) return res;
  conj_through_gates(p, op);
  return measure_and_restrict(p, op, std::move(res));
}

PushResult push_pauli_extended(const QuantumProcess& p, const PauliOperator& op_in) {
  if (op_in.wires() != p.n_in)
    throw std::invalid_argument("push_pauli_extended: operator must act on the input wires");
  PauliOperator op = extend_to_register(p, op_in);
  PushResult res;
  if (!prep_stage(p, op, res)) return res;
  conj_through_gates(p, op);

  bool clean = true;
  for (const auto& m : p.measurements) clean = clean && !bad_bit(op, m);
  if (!clean && !p.ancillas.empty()) {
    // Gate-images of the preparation stabilizers act as the identity after
    // the preparation; a GF(2) combination may cancel the stuck components.
    std::vector<PauliOperator> images;
    for (const auto& a : p.ancillas) {
      const PhysPrep prep = physical_prep(a);
      PauliOperator g = prep.stabilizer == 'X' ? PauliOperator::x_at(p.total_wires, a.wire)
                                               : PauliOperator::z_at(p.total_wires, a.wire);
      if (prep.sign < 0) g.multiply_phase_i(2);
      conj_through_gates(p, g);
      images.push_back(std::move(g));
    }
    BinaryMatrix system(p.measurements.size(), images.size());
    BitVec rhs(p.measurements.size());
    for (std::size_t r = 0; r < p.measurements.size(); ++r) {
      rhs.set(r, bad_bit(op, p.measurements[r]));
      for (std::size_t k = 0; k < images.size(); ++k)
        system.set(r, k, bad_bit(images[k], p.measurements[r]));
    }
    // solve system * s = rhs via the augmented reduction
    BinaryMatrix aug(system.rows(), system.cols() + 1);
    for (std::size_t r = 0; r < system.rows(); ++r) {
      for (std::size_t c = 0; c < system.cols(); ++c)
        if (system.get(r, c)) aug.set(r, c, true);
      if (rhs.get(r)) aug.set(r, system.cols(), true);
    }
    const RrefResult rr = rref_with_trace(aug);
    bool solvable = true;
    BitVec solution(images.size());
    for (std::size_t i = 0; i < rr.rank; ++i) {
      if (rr.pivot_cols[i] == system.cols()) {
        solvable = false;
        break;
      }
      if (rr.rref.get(i, system.cols())) solution.set(rr.pivot_cols[i], true);
    }
    if (solvable) {
      for (std::size_t k = 0; k < images.size(); ++k)
        if (solution.get(k)) op = op * images[k];
      res.absorbed = true;
    }
  }
  return measure_and_restrict(p, op, std::move(res));
}

void HamiltonianSpec::validate() const {
  for (const auto& t : terms) {
    if (t.op.wires() != n_wires) throw std::invalid_argument("HamiltonianSpec: wire mismatch");
    if (!t.op.is_hermitian() || (t.op.phase_pow() & 1))
      throw std::invalid_argument("HamiltonianSpec: non-Hermitian term");
  }
}

HamiltonianSpec build_hamiltonian(const ClassicalCode& c, double j, double h) {
  HamiltonianSpec hs;
  hs.n_wires = c.n();
  for (std::size_t a = 0; a < c.m(); ++a)
    hs.terms.push_back({-j, PauliOperator::z_word(c.H().row(a))});
  for (std::size_t i = 0; i < c.n(); ++i)
    hs.terms.push_back({-h, PauliOperator::x_at(c.n(), static_cast<uint32_t>(i))});
  hs.validate();
  return hs;
}

namespace {

// alpha wire for product bit (i, j); beta is offset by n1*n2.
inline uint32_t alpha_wire(std::size_t i, std::size_t j, std::size_t n1) {
  return static_cast<uint32_t>(j * n1 + i);
}

}  // namespace

HamiltonianSpec coupled_layer_constraint(const ClassicalCode& c1, const ClassicalCode& c2,
                                         ProductKind kind, double lambda) {
  const std::size_t n1 = c1.n(), n2 = c2.n(), pairs = n1 * n2;
  HamiltonianSpec hs;
  hs.n_wires = 2 * pairs;
  for (std::size_t q = 0; q < pairs; ++q) {
    BitVec sup(2 * pairs);
    sup.set(q, true);
    sup.set(pairs + q, true);
    hs.terms.push_back({-lambda, kind == ProductKind::Tensor ? PauliOperator::z_word(sup)
                                                             : PauliOperator::x_word(sup)});
  }
  hs.validate();
  return hs;
}

HamiltonianSpec build_coupled_layer(const ClassicalCode& c1, const ClassicalCode& c2,
                                    ProductKind kind, double h1, double h2, double lambda) {
  const std::size_t n1 = c1.n(), n2 = c2.n(), pairs = n1 * n2;
  HamiltonianSpec hs;
  hs.n_wires = 2 * pairs;

  // n2 copies of the code-1 layer (J = 1).
  for (std::size_t j = 0; j < n2; ++j)
    for (std::size_t a = 0; a < c1.m(); ++a) {
      BitVec sup(2 * pairs);
      for (uint32_t i : c1.check_support(a)) sup.set(alpha_wire(i, j, n1), true);
      hs.terms.push_back({-1.0, PauliOperator::z_word(sup)});
    }
  // n1 copies of the code-2 layer.
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t b = 0; b < c2.m(); ++b) {
      BitVec sup(2 * pairs);
      for (uint32_t j : c2.check_support(b)) sup.set(pairs + alpha_wire(i, j, n1), true);
      hs.terms.push_back({-1.0, PauliOperator::z_word(sup)});
    }
  if (h1 != 0.0)
    for (std::size_t q = 0; q < pairs; ++q)
      hs.terms.push_back({-h1, PauliOperator::x_at(2 * pairs, static_cast<uint32_t>(q))});
  if (h2 != 0.0)
    for (std::size_t q = 0; q < pairs; ++q)
      hs.terms.push_back({-h2, PauliOperator::x_at(2 * pairs, static_cast<uint32_t>(pairs + q))});
  if (lambda != 0.0) {
    const HamiltonianSpec cpl = coupled_layer_constraint(c1, c2, kind, lambda);
    hs.terms.insert(hs.terms.end(), cpl.terms.begin(), cpl.terms.end());
  }
  hs.validate();
  return hs;
}

}  // namespace ldpcq
