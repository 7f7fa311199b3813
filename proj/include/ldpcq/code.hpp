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

#ifndef LDPCQ_CODE_HPP
#define LDPCQ_CODE_HPP

#include <cstdint>
#include <vector>

#include "ldpcq/f2.hpp"

namespace ldpcq {

/// A classical linear code presented by its parity-check matrix H
/// (m checks x n bits), with the Tanner-graph queries and the cached
/// symmetry basis (ker H) and redundancy basis (ker H^T). Immutable after
/// construction.
class ClassicalCode {
 public:
  static ClassicalCode from_matrix(BinaryMatrix h);

  const BinaryMatrix& H() const { return h_; }
  std::size_t n() const { return h_.cols(); }  // bits
  std::size_t m() const { return h_.rows(); }  // checks
  std::size_t rank() const { return rank_; }
  std::size_t k() const { return n() - rank_; }        // symmetries
  std::size_t k_transpose() const { return m() - rank_; }  // redundancies

  /// Basis of ker(H): supports of the logical X operators.
  const std::vector<BitVec>& symmetries() const { return symmetry_basis_; }
  /// Basis of ker(H^T): check subsets whose operator product is the identity.
  const std::vector<BitVec>& redundancies() const { return redundancy_basis_; }

  /// Bits touched by check a.
  std::vector<uint32_t> check_support(std::size_t a) const { return h_.row_support(a); }
  /// Checks touching bit i.
  std::vector<uint32_t> bit_support(std::size_t i) const { return h_.col_support(i); }

  bool operator==(const ClassicalCode& o) const { return h_ == o.h_; }

 private:
  explicit ClassicalCode(BinaryMatrix h);

  BinaryMatrix h_;
  std::size_t rank_ = 0;
  std::vector<BitVec> symmetry_basis_;
  std::vector<BitVec> redundancy_basis_;
};

/// Bits and checks exchanged: parity-check H^T.
ClassicalCode transpose_code(const ClassicalCode& c);

/// Orthogonal complement: the canonical kernel basis of H becomes the rows of
/// the new parity-check matrix (k x n; 0 x n for full column rank H).
ClassicalCode perp_code(const ClassicalCode& c);

enum class ProductKind { Tensor, Check };

/// Tensor product: H = vstack(kron(I_{n2}, H1), kron(H2, I_{n1})).
/// Bit (i, j) of the product sits at column j*n1 + i (code-2 index outer).
ClassicalCode tensor_product(const ClassicalCode& c1, const ClassicalCode& c2);

/// Check product: H = kron(H2, H1) under the same column convention
/// j*n1 + i; row (a, b) sits at b*m1 + a and supports delta1(a) x delta2(b).
ClassicalCode check_product(const ClassicalCode& c1, const ClassicalCode& c2);

ClassicalCode product_code(const ClassicalCode& c1, const ClassicalCode& c2, ProductKind kind);

/// (p,q)-product: one Kronecker block per q-element subset S of the p codes
/// (H factors on S, identities elsewhere), blocks stacked in ascending
/// lexicographic order of S. (2,1) is the tensor product, (2,2) the check
/// product. Throws std::invalid_argument unless 1 <= q <= p.
ClassicalCode pq_product(const std::vector<ClassicalCode>& codes, std::size_t q);

/// Dual basis {G_b} to the cached redundancy basis {R_b} under the pairing
/// |G ∩ R| mod 2: returns k_transpose() check subsets with
/// |G_b ∩ R_b'| = delta_{bb'}. Prefers mutually disjoint singleton solutions
/// when they exist.
std::vector<BitVec> defect_dual_basis(const ClassicalCode& c);

}  // namespace ldpcq

#endif
