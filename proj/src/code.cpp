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

#include "ldpcq/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldpcq {

ClassicalCode::ClassicalCode(BinaryMatrix h) : h_(std::move(h)) {
  rank_ = ldpcq::rank(h_);
  symmetry_basis_ = kernel_basis(h_);
  redundancy_basis_ = kernel_basis(h_.transposed());
}

ClassicalCode ClassicalCode::from_matrix(BinaryMatrix h) { return ClassicalCode(std::move(h)); }

ClassicalCode transpose_code(const ClassicalCode& c) {
  return ClassicalCode::from_matrix(c.H().transposed());
}

ClassicalCode perp_code(const ClassicalCode& c) {
  return ClassicalCode::from_matrix(rows_to_matrix(c.symmetries(), c.n()));
}

ClassicalCode tensor_product(const ClassicalCode& c1, const ClassicalCode& c2) {
  const BinaryMatrix top = kron(BinaryMatrix::identity(c2.n()), c1.H());
  const BinaryMatrix bottom = kron(c2.H(), BinaryMatrix::identity(c1.n()));
  return ClassicalCode::from_matrix(vstack({top, bottom}));
}

ClassicalCode check_product(const ClassicalCode& c1, const ClassicalCode& c2) {
  return ClassicalCode::from_matrix(kron(c2.H(), c1.H()));
}

ClassicalCode product_code(const ClassicalCode& c1, const ClassicalCode& c2, ProductKind kind) {
  return kind == ProductKind::Tensor ? tensor_product(c1, c2) : check_product(c1, c2);
}

namespace {

// q-element subsets of {0..p-1} in ascending lexicographic order.
std::vector<std::vector<std::size_t>> subsets_lex(std::size_t p, std::size_t q) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(q);
  for (std::size_t i = 0; i < q; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    bool advanced = false;
    for (std::size_t i = q; i-- > 0;) {
      if (cur[i] < p - q + i) {
        ++cur[i];
        for (std::size_t j = i + 1; j < q; ++j) cur[j] = cur[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

}  // namespace

ClassicalCode pq_product(const std::vector<ClassicalCode>& codes, std::size_t q) {
  const std::size_t p = codes.size();
  if (q < 1 || q > p) throw std::invalid_argument("pq_product: require 1 <= q <= p");

  std::vector<BinaryMatrix> blocks;
  for (const auto& s : subsets_lex(p, q)) {
    // Factor for code index (p-1) is the Kronecker-outer one, matching the
    // global bit layout where later codes vary more slowly.
    BinaryMatrix block(1, 1);
    block.set(0, 0, true);
    for (std::size_t idx = p; idx-- > 0;) {
      const bool in_s = std::find(s.begin(), s.end(), idx) != s.end();
      const BinaryMatrix& factor =
          in_s ? codes[idx].H() : BinaryMatrix::identity(codes[idx].n());
      // running kron: earlier factors are outer, so chain as kron(block, factor)
      block = kron(block, factor);
    }
    blocks.push_back(std::move(block));
  }
  return ClassicalCode::from_matrix(vstack(blocks));
}

std::vector<BitVec> defect_dual_basis(const ClassicalCode& c) {
  const auto& reds = c.redundancies();
  const std::size_t kt = reds.size();
  const std::size_t m = c.m();
  std::vector<BitVec> out;
  if (kt == 0) return out;

  // Pairing matrix column for check a: (R_0(a), ..., R_{kt-1}(a)).
  // Singleton G_b = {a} works when that column is the unit vector e_b.
  std::vector<int32_t> singleton(kt, -1);
  std::vector<bool> taken(m, false);
  for (std::size_t b = 0; b < kt; ++b) {
    for (std::size_t a = 0; a < m; ++a) {
      if (taken[a]) continue;
      bool ok = true;
      for (std::size_t b2 = 0; b2 < kt && ok; ++b2)
        if (reds[b2].get(a) != (b2 == b)) ok = false;
      if (ok) {
        singleton[b] = static_cast<int32_t>(a);
        taken[a] = true;
        break;
      }
    }
  }
  if (std::all_of(singleton.begin(), singleton.end(), [](int32_t a) { return a >= 0; })) {
    for (std::size_t b = 0; b < kt; ++b)
      out.push_back(BitVec::from_support(m, {static_cast<uint32_t>(singleton[b])}));
    return out;
  }

  // General case: solve R * g = e_b over GF(2), free variables set to zero.
  const BinaryMatrix r = rows_to_matrix(reds, m);  // kt x m, full row rank
  // Augment with all kt unit columns at once: [R | I].
  BinaryMatrix aug(kt, m + kt);
  for (std::size_t i = 0; i < kt; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      if (r.get(i, j)) aug.set(i, j, true);
    aug.set(i, m + i, true);
  }
  RrefResult rr = rref_with_trace(aug);
  // Row i of the reduced system: pivot in some column < m (R has full row
  // rank, so every pivot lands in the R block).
  for (std::size_t b = 0; b < kt; ++b) {
    BitVec g(m);
    for (std::size_t i = 0; i < rr.rank; ++i) {
      if (rr.pivot_cols[i] >= m)
        throw std::logic_error("defect_dual_basis: redundancy basis not independent");
      if (rr.rref.get(i, m + b)) g.set(rr.pivot_cols[i], true);
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace ldpcq
