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

#include "ldpcq/process.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldpcq {

std::string to_string(Realization r) {
  switch (r) {
    case Realization::Defect: return "defect";
    case Realization::MinimalCoupling: return "minimal_coupling";
    case Realization::TensorMerge: return "tensor_merge";
    case Realization::CheckMerge: return "check_merge";
  }
  return "?";
}

std::string to_string(PauliBasis b) { return b == PauliBasis::X ? "X" : "Z"; }

std::string to_string(StateLabel s) {
  switch (s) {
    case StateLabel::Plus: return "plus";
    case StateLabel::Minus: return "minus";
    case StateLabel::Zero: return "zero";
    case StateLabel::One: return "one";
  }
  return "?";
}

void QuantumProcess::validate() const {
  if (wires.size() != total_wires) throw std::invalid_argument("process: wire table size");
  if (n_out + measurements.size() != n_in + ancillas.size())
    throw std::invalid_argument("process: wire conservation violated");
  if (outputs.size() != n_out) throw std::invalid_argument("process: outputs size");
  auto check_wire = [&](uint32_t w) {
    if (w >= total_wires) throw std::invalid_argument("process: undeclared wire");
  };
  for (const auto& a : ancillas) {
    check_wire(a.wire);
    if (wires[a.wire].input) throw std::invalid_argument("process: ancilla wire is an input");
    if (!wires[a.wire].ancilla) throw std::invalid_argument("process: ancilla role missing");
  }
  for (const auto& m : measurements) {
    check_wire(m.wire);
    if (wires[m.wire].output) throw std::invalid_argument("process: measured wire is an output");
  }
  for (const auto& g : gates) {
    check_wire(g.a);
    if (g.kind == Gate::Kind::Cnot) {
      check_wire(g.b);
      if (g.a == g.b) throw std::invalid_argument("process: CNOT control equals target");
    }
  }
  for (uint32_t w : outputs) {
    check_wire(w);
    if (!wires[w].output) throw std::invalid_argument("process: output role missing");
  }
}

QuantumProcess extract_defect(const ClassicalCode& c) {
  const std::size_t n = c.n(), m = c.m();

  BinaryMatrix work = c.H();
  const Elimination e1 = eliminate_in_place(work);   // rows of H
  BinaryMatrix work_t = work.transposed();
  const Elimination e2 = eliminate_in_place(work_t); // rows of H'^T (bits)

  // Bit i is matched with check row e2.pivot_col[i]; unmatched bits are
  // measured; check rows without a partner become ancilla wires.
  std::vector<int32_t> wire_of_check(m, -1);
  std::vector<bool> bit_matched(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (e2.pivot_col[i] >= 0) {
      wire_of_check[e2.pivot_col[i]] = static_cast<int32_t>(i);
      bit_matched[i] = true;
    }
  }

  QuantumProcess p;
  p.realization = Realization::Defect;
  p.n_in = n;
  p.n_out = m;

  std::size_t next_ancilla = n;
  for (std::size_t a = 0; a < m; ++a) {
    if (wire_of_check[a] < 0) {
      wire_of_check[a] = static_cast<int32_t>(next_ancilla++);
      p.ancillas.push_back({static_cast<uint32_t>(wire_of_check[a]), PauliBasis::X,
                            StateLabel::Plus, /*leg_hadamard=*/true});
    }
  }
  p.total_wires = next_ancilla;
  p.wires.assign(p.total_wires, {});
  for (std::size_t i = 0; i < n; ++i) p.wires[i].input = true;
  for (const auto& a : p.ancillas) p.wires[a.wire].ancilla = true;

  // Input-side CNOTs in trace order: for row op target += source on H'^T the
  // gate is CNOT(control = target row, target = source row).
  for (const auto& op : e2.ops) p.gates.push_back(Gate::cnot(op.target, op.source));

  // Output-side CNOTs in reverse trace order, on the wires assigned to check
  // rows: for row op target += source on H the gate is
  // CNOT(control = wire(source), target = wire(target)).
  for (std::size_t k = e1.ops.size(); k-- > 0;) {
    const auto& op = e1.ops[k];
    p.gates.push_back(Gate::cnot(static_cast<uint32_t>(wire_of_check[op.source]),
                                 static_cast<uint32_t>(wire_of_check[op.target])));
  }

  for (std::size_t a = 0; a < m; ++a)
    p.gates.push_back(Gate::h(static_cast<uint32_t>(wire_of_check[a])));

  for (std::size_t i = 0; i < n; ++i) {
    if (!bit_matched[i]) {
      p.measurements.push_back({static_cast<uint32_t>(i), PauliBasis::X, +1});
      p.wires[i].measured = true;
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    p.outputs.push_back(static_cast<uint32_t>(wire_of_check[a]));
    p.wires[wire_of_check[a]].output = true;
  }
  p.validate();
  return p;
}

QuantumProcess extract_minimal_coupling(const ClassicalCode& c) {
  const std::size_t n = c.n(), m = c.m();
  QuantumProcess p;
  p.realization = Realization::MinimalCoupling;
  p.n_in = n;
  p.n_out = m;
  p.total_wires = n + m;
  p.wires.assign(p.total_wires, {});
  for (std::size_t i = 0; i < n; ++i) {
    p.wires[i].input = true;
    p.wires[i].measured = true;
  }
  for (std::size_t a = 0; a < m; ++a) {
    const uint32_t w = static_cast<uint32_t>(n + a);
    p.ancillas.push_back({w, PauliBasis::X, StateLabel::Plus, /*leg_hadamard=*/true});
    p.wires[w].ancilla = true;
    p.wires[w].output = true;
  }

  for (std::size_t a = 0; a < m; ++a)
    for (uint32_t i : c.check_support(a))
      p.gates.push_back(Gate::cnot(static_cast<uint32_t>(n + a), i));
  for (std::size_t i = 0; i < n; ++i)
    for (uint32_t a : c.bit_support(i))
      p.gates.push_back(Gate::cnot(static_cast<uint32_t>(i), static_cast<uint32_t>(n + a)));
  for (std::size_t a = 0; a < m; ++a) p.gates.push_back(Gate::h(static_cast<uint32_t>(n + a)));

  for (std::size_t i = 0; i < n; ++i)
    p.measurements.push_back({static_cast<uint32_t>(i), PauliBasis::X, +1});
  for (std::size_t a = 0; a < m; ++a) p.outputs.push_back(static_cast<uint32_t>(n + a));
  p.validate();
  return p;
}

QuantumProcess extract_product(const ClassicalCode& c1, const ClassicalCode& c2,
                               ProductKind kind) {
  const std::size_t pairs = c1.n() * c2.n();
  QuantumProcess p;
  p.realization = kind == ProductKind::Tensor ? Realization::TensorMerge : Realization::CheckMerge;
  p.n_in = 2 * pairs;
  p.n_out = pairs;
  p.total_wires = 2 * pairs;
  p.wires.assign(p.total_wires, {});
  for (std::size_t w = 0; w < 2 * pairs; ++w) p.wires[w].input = true;

  for (std::size_t q = 0; q < pairs; ++q) {
    const uint32_t alpha = static_cast<uint32_t>(q);
    const uint32_t beta = static_cast<uint32_t>(pairs + q);
    if (kind == ProductKind::Tensor)
      p.gates.push_back(Gate::cnot(alpha, beta));
    else
      p.gates.push_back(Gate::cnot(beta, alpha));
  }
  for (std::size_t q = 0; q < pairs; ++q) {
    const uint32_t beta = static_cast<uint32_t>(pairs + q);
    p.measurements.push_back(
        {beta, kind == ProductKind::Tensor ? PauliBasis::Z : PauliBasis::X, +1});
    p.wires[beta].measured = true;
  }
  for (std::size_t q = 0; q < pairs; ++q) {
    p.outputs.push_back(static_cast<uint32_t>(q));
    p.wires[q].output = true;
  }
  p.validate();
  return p;
}

ResourceCounts resource_counts(const QuantumProcess& p) {
  return {p.ancillas.size(), p.measurements.size()};
}

QuantumProcess drop_gate(const QuantumProcess& p, std::size_t k) {
  if (k >= p.gates.size()) throw std::invalid_argument("drop_gate: index out of range");
  QuantumProcess out = p;
  out.gates.erase(out.gates.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

}  // namespace ldpcq
