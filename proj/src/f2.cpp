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

#include "ldpcq/f2.hpp"

#include <algorithm>
#include <stdexcept>

#include "ldpcq/kernels.hpp"

namespace ldpcq {

void BitVec::xor_with(const BitVec& o) {
  if (o.n_ != n_) throw std::invalid_argument("BitVec::xor_with: size mismatch");
  kern::xor_words(w_.data(), o.w_.data(), w_.size());
}

std::size_t BitVec::popcount() const { return kern::popcount_words(w_.data(), w_.size()); }

bool BitVec::dot(const BitVec& o) const {
  if (o.n_ != n_) throw std::invalid_argument("BitVec::dot: size mismatch");
  return kern::popcount_and(w_.data(), o.w_.data(), w_.size()) & 1;
}

std::vector<uint32_t> BitVec::support() const {
  std::vector<uint32_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) out.push_back(static_cast<uint32_t>(i));
  return out;
}

BitVec BitVec::from_support(std::size_t n, const std::vector<uint32_t>& idx) {
  BitVec v(n);
  for (uint32_t i : idx) {
    if (i >= n) throw std::invalid_argument("BitVec::from_support: index out of range");
    v.set(i, true);
  }
  return v;
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  BinaryMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j] != 0);
  }
  return m;
}

bool BinaryMatrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BinaryMatrix::get");
  return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BinaryMatrix::set");
  const uint64_t m = uint64_t{1} << (c & 63);
  if (v)
    data_[r * wpr_ + (c >> 6)] |= m;
  else
    data_[r * wpr_ + (c >> 6)] &= ~m;
}

void BinaryMatrix::add_row(std::size_t target, std::size_t source) {
  if (target >= rows_ || source >= rows_) throw std::out_of_range("BinaryMatrix::add_row");
  kern::xor_words(row_words(target), row_words(source), wpr_);
}

BinaryMatrix BinaryMatrix::transposed() const {
  BinaryMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

BitVec BinaryMatrix::row(std::size_t r) const {
  BitVec v(cols_);
  std::copy(row_words(r), row_words(r) + wpr_, v.words());
  return v;
}

void BinaryMatrix::set_row(std::size_t r, const BitVec& v) {
  if (v.size() != cols_) throw std::invalid_argument("BinaryMatrix::set_row: size mismatch");
  std::copy(v.words(), v.words() + wpr_, row_words(r));
}

std::vector<uint32_t> BinaryMatrix::row_support(std::size_t r) const { return row(r).support(); }

std::vector<uint32_t> BinaryMatrix::col_support(std::size_t c) const {
  std::vector<uint32_t> out;
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) out.push_back(static_cast<uint32_t>(r));
  return out;
}

bool BinaryMatrix::operator==(const BinaryMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string BinaryMatrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
    s += '\n';
  }
  return s;
}

BinaryMatrix RowOpTrace::replay_ops(const BinaryMatrix& m) const {
  BinaryMatrix r = m;
  for (const Op& op : ops) r.add_row(op.target, op.source);
  return r;
}

BinaryMatrix RowOpTrace::replay(const BinaryMatrix& m) const {
  BinaryMatrix r = replay_ops(m);
  BinaryMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < row_permutation.size(); ++i)
    out.set_row(i, r.row(row_permutation[i]));
  return out;
}

Elimination eliminate_in_place(BinaryMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Elimination e;
  e.pivot_col.assign(rows, -1);
  std::vector<bool> used(rows, false);
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = 0; r < rows; ++r) {
      if (!used[r] && m.get(r, c)) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    used[pivot] = true;
    e.pivot_col[pivot] = static_cast<int32_t>(c);
    e.pivot_cols_in_order.push_back(static_cast<uint32_t>(c));
    ++e.rank;
    // below first, then above
    for (std::size_t r = pivot + 1; r < rows; ++r) {
      if (m.get(r, c)) {
        m.add_row(r, pivot);
        e.ops.push_back({static_cast<uint32_t>(r), static_cast<uint32_t>(pivot)});
      }
    }
    for (std::size_t r = 0; r < pivot; ++r) {
      if (m.get(r, c)) {
        m.add_row(r, pivot);
        e.ops.push_back({static_cast<uint32_t>(r), static_cast<uint32_t>(pivot)});
      }
    }
  }
  return e;
}

RrefResult rref_with_trace(const BinaryMatrix& m) {
  BinaryMatrix work = m;
  Elimination e = eliminate_in_place(work);

  RrefResult res;
  res.rank = e.rank;
  res.pivot_cols = e.pivot_cols_in_order;
  res.trace.ops = std::move(e.ops);

  // Pivot rows sorted by pivot column, zero rows after them in original order.
  std::vector<uint32_t> perm;
  perm.reserve(m.rows());
  std::vector<std::pair<int32_t, uint32_t>> pivots;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (e.pivot_col[r] >= 0) pivots.emplace_back(e.pivot_col[r], static_cast<uint32_t>(r));
  std::sort(pivots.begin(), pivots.end());
  for (auto& [c, r] : pivots) perm.push_back(r);
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (e.pivot_col[r] < 0) perm.push_back(static_cast<uint32_t>(r));
  res.trace.row_permutation = std::move(perm);

  BinaryMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    out.set_row(i, work.row(res.trace.row_permutation[i]));
  res.rref = std::move(out);
  return res;
}

std::size_t rank(const BinaryMatrix& m) {
  BinaryMatrix work = m;
  return eliminate_in_place(work).rank;
}

std::vector<BitVec> kernel_basis(const BinaryMatrix& m) {
  RrefResult r = rref_with_trace(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (uint32_t c : r.pivot_cols) is_pivot[c] = true;

  std::vector<BitVec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(n);
    v.set(f, true);
    for (std::size_t i = 0; i < r.rank; ++i)
      if (r.rref.get(i, f)) v.set(r.pivot_cols[i], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

BinaryMatrix kron(const BinaryMatrix& a, const BinaryMatrix& b) {
  BinaryMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    const auto acols = a.row_support(ar);
    if (acols.empty()) continue;
    for (std::size_t br = 0; br < b.rows(); ++br) {
      const auto bcols = b.row_support(br);
      const std::size_t orow = ar * b.rows() + br;
      for (uint32_t ac : acols)
        for (uint32_t bc : bcols) out.set(orow, std::size_t{ac} * b.cols() + bc, true);
    }
  }
  return out;
}

BinaryMatrix vstack(const std::vector<BinaryMatrix>& blocks) {
  if (blocks.empty()) return BinaryMatrix(0, 0);
  const std::size_t cols = blocks[0].cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack: column count mismatch");
    rows += b.rows();
  }
  BinaryMatrix out(rows, cols);
  std::size_t at = 0;
  for (const auto& b : blocks)
    for (std::size_t r = 0; r < b.rows(); ++r) out.set_row(at++, b.row(r));
  return out;
}

BitVec mul_vec(const BinaryMatrix& m, const BitVec& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("mul_vec: size mismatch");
  BitVec out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    out.set(r, kern::popcount_and(m.row_words(r), v.words(), m.words_per_row()) & 1);
  return out;
}

BinaryMatrix rows_to_matrix(const std::vector<BitVec>& rows, std::size_t cols) {
  BinaryMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

bool same_span(const std::vector<BitVec>& a, const std::vector<BitVec>& b, std::size_t n) {
  RrefResult ra = rref_with_trace(rows_to_matrix(a, n));
  RrefResult rb = rref_with_trace(rows_to_matrix(b, n));
  if (ra.rank != rb.rank) return false;
  for (std::size_t i = 0; i < ra.rank; ++i)
    if (!(ra.rref.row(i) == rb.rref.row(i))) return false;
  return true;
}

}  // namespace ldpcq
