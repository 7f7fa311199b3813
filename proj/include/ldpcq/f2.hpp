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

#ifndef LDPCQ_F2_HPP
#define LDPCQ_F2_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ldpcq {

/// Bit vector over GF(2), packed into 64-bit words.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v) {
    const uint64_t m = uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

  void xor_with(const BitVec& o);
  std::size_t popcount() const;
  /// Inner product over GF(2).
  bool dot(const BitVec& o) const;
  bool any() const { return popcount() != 0; }

  std::vector<uint32_t> support() const;
  static BitVec from_support(std::size_t n, const std::vector<uint32_t>& idx);

  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }

  const uint64_t* words() const { return w_.data(); }
  uint64_t* words() { return w_.data(); }
  std::size_t word_count() const { return w_.size(); }

 private:
  std::size_t n_ = 0;
  std::vector<uint64_t> w_;
};

/// Dense matrix over GF(2). Rows are packed bit vectors; the contract is
/// entrywise semantics only.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

  static BinaryMatrix identity(std::size_t n);
  /// Rows given as 0/1 initializer data; all rows must share a length.
  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool v);

  /// row[target] ^= row[source]
  void add_row(std::size_t target, std::size_t source);

  BinaryMatrix transposed() const;
  BitVec row(std::size_t r) const;
  void set_row(std::size_t r, const BitVec& v);
  std::vector<uint32_t> row_support(std::size_t r) const;
  std::vector<uint32_t> col_support(std::size_t c) const;

  bool operator==(const BinaryMatrix& o) const;
  std::string to_string() const;

  const uint64_t* row_words(std::size_t r) const { return data_.data() + r * wpr_; }
  uint64_t* row_words(std::size_t r) { return data_.data() + r * wpr_; }
  std::size_t words_per_row() const { return wpr_; }

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<uint64_t> data_;
};

/// Record of one in-place Gaussian elimination: ordered row additions
/// (row[target] ^= row[source], never target == source) followed by a final
/// row reordering. Replaying the ops on the original matrix and then applying
/// the permutation reproduces the echelon result exactly.
struct RowOpTrace {
  struct Op {
    uint32_t target;
    uint32_t source;
    bool operator==(const Op&) const = default;
  };
  std::vector<Op> ops;
  /// Output row i of the canonical result is pre-permutation row
  /// row_permutation[i].
  std::vector<uint32_t> row_permutation;

  /// Applies ops only (no permutation).
  BinaryMatrix replay_ops(const BinaryMatrix& m) const;
  /// Applies ops, then the permutation.
  BinaryMatrix replay(const BinaryMatrix& m) const;
};

/// In-place elimination bookkeeping in original row positions (no row is
/// physically moved). pivot_col[r] is the pivot column of row r, or -1 for
/// rows that reduce to zero.
struct Elimination {
  std::vector<RowOpTrace::Op> ops;
  std::vector<int32_t> pivot_col;
  std::vector<uint32_t> pivot_cols_in_order;
  std::size_t rank = 0;
};

/// Pivot policy: scan columns left to right; within a column pick the
/// lowest-index row not yet used as a pivot; eliminate every other row with a
/// one in that column, rows below the pivot first, then rows above, each in
/// ascending order. Rows stay in place; sorting happens only through the
/// returned permutation.
Elimination eliminate_in_place(BinaryMatrix& m);

struct RrefResult {
  BinaryMatrix rref;             // canonical: pivot rows by column order, zero rows at the bottom
  RowOpTrace trace;
  std::vector<uint32_t> pivot_cols;  // ascending; pivot_cols[i] belongs to canonical row i
  std::size_t rank = 0;
};

RrefResult rref_with_trace(const BinaryMatrix& m);

std::size_t rank(const BinaryMatrix& m);

/// Canonical kernel basis from the reduced row echelon form: one vector per
/// free column, ordered by free-column index; the free coordinate is 1 and
/// pivot coordinates carry the column entries.
std::vector<BitVec> kernel_basis(const BinaryMatrix& m);

/// Kronecker product; row (a,b) -> a*rowsB + b, col (i,j) -> i*colsB + j.
BinaryMatrix kron(const BinaryMatrix& a, const BinaryMatrix& b);

/// Vertical concatenation. Throws std::invalid_argument on column mismatch.
BinaryMatrix vstack(const std::vector<BinaryMatrix>& blocks);

/// m * v over GF(2).
BitVec mul_vec(const BinaryMatrix& m, const BitVec& v);

/// True if the spans of the two row sets coincide (compared via canonical rref).
bool same_span(const std::vector<BitVec>& a, const std::vector<BitVec>& b, std::size_t n);

BinaryMatrix rows_to_matrix(const std::vector<BitVec>& rows, std::size_t cols);

}  // namespace ldpcq

#endif
