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

#include "ldpcq/verify.hpp"

#include <sstream>

#include "ldpcq/sim.hpp"

namespace ldpcq {

bool VerifyReport::passed() const {
  for (const auto& r : relations)
    if (!r.passed) return false;
  return true;
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : relations) {
    os << (r.passed ? "pass" : "FAIL") << "  " << r.relation << "  expected " << r.expected
       << "  got " << r.actual;
    if (!r.note.empty()) os << "  (" << r.note << ")";
    os << '\n';
  }
  os << (passed() ? "all relations hold" : "verification FAILED");
  if (dense_checked) os << "; dense intertwining residual " << max_dense_residual;
  os << '\n';
  return os.str();
}

namespace {

bool in_span(const std::vector<BitVec>& basis, const BitVec& v, std::size_t n) {
  if (!v.any()) return true;
  if (basis.empty()) return false;
  std::vector<BitVec> rows = basis;
  rows.push_back(v);
  return rank(rows_to_matrix(rows, n)) == rank(rows_to_matrix(basis, n));
}

struct DenseChecker {
  bool enabled = false;
  Eigen::MatrixXcd d;
  double max_residual = 0.0;

  void check(const PauliOperator& in, const PauliOperator& out) {
    if (!enabled) return;
    const Eigen::MatrixXcd lhs = d * pauli_dense(in);
    const Eigen::MatrixXcd rhs = pauli_dense(out) * d;
    max_residual = std::max(max_residual, (lhs - rhs).cwiseAbs().maxCoeff());
  }
};

std::string z_word_name(const std::vector<uint32_t>& sup, char symbol) {
  if (sup.empty()) return "I";
  std::string s;
  for (uint32_t w : sup) {
    if (!s.empty()) s += ' ';
    s += symbol;
    s += std::to_string(w);
  }
  return s;
}

}  // namespace

VerifyReport verify_duality(const ClassicalCode& c, const QuantumProcess& p,
                            const VerifyOptions& opts) {
  VerifyReport rep;
  DenseChecker dense;
  if (c.n() + c.m() <= opts.dense_wire_limit) {
    dense.enabled = true;
    dense.d = process_matrix(p, p.total_wires);
    rep.dense_checked = true;
  }

  // Bit relations: X_i maps to the Z word over the checks containing bit i.
  for (std::size_t i = 0; i < c.n(); ++i) {
    RelationCheck rc;
    const auto expected_sup = c.bit_support(i);
    rc.relation = "bit " + std::to_string(i);
    rc.expected = "+ " + z_word_name(expected_sup, 'Z');
    const PauliOperator op = PauliOperator::x_at(c.n(), static_cast<uint32_t>(i));
    const PushResult pr = push_pauli_extended(p, op);
    if (!pr.mapped()) {
      rc.actual = "obstructed at wire " + std::to_string(pr.obstruction_wire);
    } else {
      rc.actual = pr.output.to_string();
      const PauliOperator want =
          PauliOperator::z_word(BitVec::from_support(c.m(), expected_sup));
      rc.passed = pr.output == want;
      dense.check(op, pr.output);
    }
    rep.relations.push_back(std::move(rc));
  }

  // Check relations: the Z word of check a maps to an X word equal to X_a
  // modulo the redundancy stabilizers of the image.
  for (std::size_t a = 0; a < c.m(); ++a) {
    RelationCheck rc;
    rc.relation = "check " + std::to_string(a);
    rc.expected = "+ X" + std::to_string(a);
    const PauliOperator op = PauliOperator::z_word(c.H().row(a));
    const PushResult pr = push_pauli_extended(p, op);
    if (!pr.mapped()) {
      rc.actual = "obstructed at wire " + std::to_string(pr.obstruction_wire);
    } else {
      rc.actual = pr.output.to_string();
      if (pr.output.is_x_word() && pr.output.phase_pow() == 0) {
        BitVec diff = pr.output.x_bits();
        diff.flip(a);
        rc.passed = in_span(c.redundancies(), diff, c.m());
        if (rc.passed && diff.any()) rc.note = "equal modulo redundancy stabilizer";
      }
      dense.check(op, pr.output);
    }
    rep.relations.push_back(std::move(rc));
  }

  if (dense.enabled) {
    rep.max_dense_residual = dense.max_residual;
    if (dense.max_residual > opts.dense_tol) {
      RelationCheck rc;
      rc.relation = "dense intertwining";
      rc.expected = "residual <= tolerance";
      rc.actual = std::to_string(dense.max_residual);
      rc.passed = false;
      rep.relations.push_back(std::move(rc));
    }
  }
  return rep;
}

VerifyReport verify_product(const ClassicalCode& c1, const ClassicalCode& c2, ProductKind kind,
                            const QuantumProcess& p, const VerifyOptions& opts) {
  const std::size_t n1 = c1.n(), n2 = c2.n(), pairs = n1 * n2;
  VerifyReport rep;
  DenseChecker dense;
  if (2 * pairs <= opts.dense_wire_limit) {
    dense.enabled = true;
    dense.d = process_matrix(p, p.total_wires);
    rep.dense_checked = true;
  }

  auto run = [&](const std::string& name, const PauliOperator& op, const PauliOperator& want) {
    RelationCheck rc;
    rc.relation = name;
    rc.expected = want.to_string();
    const PushResult pr = push_pauli_extended(p, op);
    if (!pr.mapped()) {
      rc.actual = "obstructed at wire " + std::to_string(pr.obstruction_wire);
    } else {
      rc.actual = pr.output.to_string();
      rc.passed = pr.output == want;
      dense.check(op, pr.output);
    }
    rep.relations.push_back(std::move(rc));
  };

  auto pair_wire = [&](std::size_t i, std::size_t j) { return j * n1 + i; };

  if (kind == ProductKind::Tensor) {
    for (std::size_t q = 0; q < pairs; ++q) {
      BitVec sup(2 * pairs);
      sup.set(q, true);
      sup.set(pairs + q, true);
      run("pair " + std::to_string(q) + ": XX",
          PauliOperator::x_word(sup),
          PauliOperator::x_at(pairs, static_cast<uint32_t>(q)));
    }
    for (std::size_t j = 0; j < n2; ++j)
      for (std::size_t a = 0; a < c1.m(); ++a) {
        BitVec in(2 * pairs), out(pairs);
        for (uint32_t i : c1.check_support(a)) {
          in.set(pair_wire(i, j), true);
          out.set(pair_wire(i, j), true);
        }
        run("layer-1 check " + std::to_string(a) + " copy " + std::to_string(j),
            PauliOperator::z_word(in), PauliOperator::z_word(out));
      }
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t b = 0; b < c2.m(); ++b) {
        BitVec in(2 * pairs), out(pairs);
        for (uint32_t j : c2.check_support(b)) {
          in.set(pairs + pair_wire(i, j), true);
          out.set(pair_wire(i, j), true);
        }
        run("layer-2 check " + std::to_string(b) + " copy " + std::to_string(i),
            PauliOperator::z_word(in), PauliOperator::z_word(out));
      }
  } else {
    for (std::size_t q = 0; q < pairs; ++q) {
      BitVec a_sup(2 * pairs), b_sup(2 * pairs), zz(2 * pairs);
      a_sup.set(q, true);
      b_sup.set(pairs + q, true);
      zz.set(q, true);
      zz.set(pairs + q, true);
      run("pair " + std::to_string(q) + ": X(alpha)", PauliOperator::x_word(a_sup),
          PauliOperator::x_at(pairs, static_cast<uint32_t>(q)));
      run("pair " + std::to_string(q) + ": X(beta)", PauliOperator::x_word(b_sup),
          PauliOperator::x_at(pairs, static_cast<uint32_t>(q)));
      run("pair " + std::to_string(q) + ": ZZ", PauliOperator::z_word(zz),
          PauliOperator::z_at(pairs, static_cast<uint32_t>(q)));
    }
  }

  if (dense.enabled) {
    rep.max_dense_residual = dense.max_residual;
    if (dense.max_residual > opts.dense_tol) {
      RelationCheck rc;
      rc.relation = "dense intertwining";
      rc.expected = "residual <= tolerance";
      rc.actual = std::to_string(dense.max_residual);
      rc.passed = false;
      rep.relations.push_back(std::move(rc));
    }
  }
  return rep;
}

}  // namespace ldpcq
