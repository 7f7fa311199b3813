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

#include "ldpcq/alist.hpp"

#include <sstream>

#include "ldpcq/errors.hpp"

namespace ldpcq {

namespace {

struct LineReader {
  std::vector<std::string> lines;
  std::size_t at = 0;

  explicit LineReader(const std::string& text) {
    std::string cur;
    for (char ch : text) {
      if (ch == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }

  std::size_t line_no() const { return at; }  // 1-based number of the line just read

  std::vector<long> next_numbers(const char* what) {
    while (at < lines.size()) {
      const std::string& ln = lines[at++];
      std::istringstream is(ln);
      std::vector<long> out;
      long v;
      std::string tok;
      bool any = false;
      while (is >> tok) {
        any = true;
        try {
          std::size_t used = 0;
          v = std::stol(tok, &used);
          if (used != tok.size()) throw std::invalid_argument("");
        } catch (...) {
          throw parse_error(at, std::string("expected integers for ") + what + ", got '" + tok + "'");
        }
        out.push_back(v);
      }
      if (any) return out;
      // skip blank lines between sections
    }
    throw parse_error(lines.size() + 1, std::string("unexpected end of file, expected ") + what);
  }

  /// Same but a blank line is an acceptable empty list.
  std::vector<long> next_numbers_allow_empty(const char* what) {
    if (at < lines.size()) {
      const std::string& ln = lines[at];
      std::istringstream is(ln);
      std::string tok;
      if (!(is >> tok)) {
        ++at;
        return {};
      }
    } else {
      return {};
    }
    return next_numbers(what);
  }
};

}  // namespace

ClassicalCode parse_alist(const std::string& text) {
  LineReader rd(text);

  const auto header = rd.next_numbers("n m");
  if (header.size() != 2) throw parse_error(rd.line_no(), "expected 'n m'");
  const long n = header[0], m = header[1];
  if (n < 0 || m < 0) throw parse_error(rd.line_no(), "negative dimensions");

  const auto maxdeg = rd.next_numbers("max column/row degrees");
  if (maxdeg.size() != 2) throw parse_error(rd.line_no(), "expected two maximum degrees");

  auto read_degrees = [&](long count, const char* what) {
    std::vector<long> degs =
        count == 0 ? rd.next_numbers_allow_empty(what) : rd.next_numbers(what);
    if (static_cast<long>(degs.size()) != count)
      throw parse_error(rd.line_no(), std::string("expected ") + std::to_string(count) + " " + what);
    for (long d : degs)
      if (d < 0) throw parse_error(rd.line_no(), std::string("negative degree in ") + what);
    return degs;
  };
  const auto col_degs = read_degrees(n, "column degrees");
  const auto row_degs = read_degrees(m, "row degrees");

  BinaryMatrix h(static_cast<std::size_t>(m), static_cast<std::size_t>(n));

  // Column neighbor lists: checks containing each bit, 1-indexed, 0-padded.
  // A degree-0 code emits bare newlines here, so empty lines are legal.
  for (long i = 0; i < n; ++i) {
    const auto nums = rd.next_numbers_allow_empty("a column neighbor list");
    long seen = 0;
    for (long v : nums) {
      if (v == 0) continue;  // padding
      if (v < 1 || v > m)
        throw parse_error(rd.line_no(), "check index " + std::to_string(v) + " out of range [1," +
                                            std::to_string(m) + "]");
      h.set(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(i), true);
      ++seen;
    }
    if (seen != col_degs[i])
      throw parse_error(rd.line_no(), "column " + std::to_string(i + 1) + " lists " +
                                          std::to_string(seen) + " checks, degree says " +
                                          std::to_string(col_degs[i]));
  }

  // Row neighbor lists must describe the same matrix.
  for (long a = 0; a < m; ++a) {
    const auto nums = rd.next_numbers_allow_empty("a row neighbor list");
    long seen = 0;
    BitVec row(static_cast<std::size_t>(n));
    for (long v : nums) {
      if (v == 0) continue;
      if (v < 1 || v > n)
        throw parse_error(rd.line_no(), "bit index " + std::to_string(v) + " out of range [1," +
                                            std::to_string(n) + "]");
      row.set(static_cast<std::size_t>(v - 1), true);
      ++seen;
    }
    if (seen != row_degs[a])
      throw parse_error(rd.line_no(), "row " + std::to_string(a + 1) + " lists " +
                                          std::to_string(seen) + " bits, degree says " +
                                          std::to_string(row_degs[a]));
    if (!(row == h.row(static_cast<std::size_t>(a))))
      throw parse_error(rd.line_no(), "row " + std::to_string(a + 1) +
                                          " disagrees with the column lists");
  }

  long maxc = 0, maxr = 0;
  for (long d : col_degs) maxc = std::max(maxc, d);
  for (long d : row_degs) maxr = std::max(maxr, d);
  if (maxc != maxdeg[0] || maxr != maxdeg[1])
    throw parse_error(2, "declared maximum degrees do not match the degree lists");

  return ClassicalCode::from_matrix(std::move(h));
}

std::string emit_alist(const ClassicalCode& c) {
  const std::size_t n = c.n(), m = c.m();
  std::vector<std::vector<uint32_t>> cols(n), rows(m);
  std::size_t maxc = 0, maxr = 0;
  for (std::size_t i = 0; i < n; ++i) {
    cols[i] = c.bit_support(i);
    maxc = std::max(maxc, cols[i].size());
  }
  for (std::size_t a = 0; a < m; ++a) {
    rows[a] = c.check_support(a);
    maxr = std::max(maxr, rows[a].size());
  }

  std::ostringstream os;
  os << n << ' ' << m << '\n' << maxc << ' ' << maxr << '\n';
  auto emit_list = [&os](const std::vector<std::size_t>& v) {
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? " " : "") << v[k];
    os << '\n';
  };
  std::vector<std::size_t> degs(n);
  for (std::size_t i = 0; i < n; ++i) degs[i] = cols[i].size();
  emit_list(degs);
  degs.assign(m, 0);
  for (std::size_t a = 0; a < m; ++a) degs[a] = rows[a].size();
  emit_list(degs);
  auto emit_neighbors = [&os](const std::vector<uint32_t>& v, std::size_t pad) {
    std::size_t k = 0;
    for (; k < v.size(); ++k) os << (k ? " " : "") << (v[k] + 1);
    for (; k < pad; ++k) os << (k ? " " : "") << 0;
    os << '\n';
  };
  for (std::size_t i = 0; i < n; ++i) emit_neighbors(cols[i], maxc);
  for (std::size_t a = 0; a < m; ++a) emit_neighbors(rows[a], maxr);
  return os.str();
}

ClassicalCode parse_dense(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::istringstream is(text);
  std::string ln;
  std::size_t line_no = 0;
  while (std::getline(is, ln)) {
    ++line_no;
    std::vector<int> row;
    for (char ch : ln) {
      if (ch == '0')
        row.push_back(0);
      else if (ch == '1')
        row.push_back(1);
      else if (ch == ' ' || ch == '\t' || ch == '\r')
        continue;
      else
        throw parse_error(line_no, std::string("unexpected character '") + ch + "'");
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows[0].size())
      throw parse_error(line_no, "row length disagrees with the first row");
    rows.push_back(std::move(row));
  }
  return ClassicalCode::from_matrix(BinaryMatrix::from_rows(rows));
}

}  // namespace ldpcq
