// Shared helpers for the test suites: the named example codes, a seeded
// random-code corpus, and brute-force oracles kept independent of the
// library's elimination path.
#ifndef LDPCQ_TESTS_TESTUTIL_HPP
#define LDPCQ_TESTS_TESTUTIL_HPP

#include <random>
#include <vector>

#include "ldpcq/code.hpp"
#include "ldpcq/f2.hpp"

namespace ldpcq::testutil {

// Documented corpus seed; fixed so every suite sees the same codes.
inline constexpr uint64_t kCorpusSeed = 20260314;

inline BinaryMatrix ising3_matrix() {
  return BinaryMatrix::from_rows({{1, 0, 1}, {1, 1, 0}, {0, 1, 1}});
}

inline ClassicalCode ising3() { return ClassicalCode::from_matrix(ising3_matrix()); }

// Periodic one-dimensional chain: check a couples bits a and a+1 mod L.
inline ClassicalCode ising_ring(std::size_t length) {
  BinaryMatrix h(length, length);
  for (std::size_t a = 0; a < length; ++a) {
    h.set(a, a, true);
    h.set(a, (a + 1) % length, true);
  }
  return ClassicalCode::from_matrix(std::move(h));
}

inline ClassicalCode open_chain3() {
  return ClassicalCode::from_matrix(BinaryMatrix::from_rows({{1, 1, 0}, {0, 1, 1}}));
}

inline ClassicalCode single_bit_check() {
  return ClassicalCode::from_matrix(BinaryMatrix::from_rows({{1}}));
}

inline BinaryMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  BinaryMatrix m(rows, cols);
  std::bernoulli_distribution bit(0.5);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (bit(rng)) m.set(r, c, true);
  return m;
}

// The seeded verification corpus: 50 random codes with n, m in [1, 6].
inline std::vector<ClassicalCode> corpus() {
  std::mt19937_64 rng(kCorpusSeed);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  std::vector<ClassicalCode> out;
  for (int k = 0; k < 50; ++k) {
    const std::size_t m = dim(rng), n = dim(rng);
    out.push_back(ClassicalCode::from_matrix(random_matrix(rng, m, n)));
  }
  return out;
}

// All kernel vectors of m by exhaustive enumeration (independent oracle).
inline std::vector<BitVec> brute_force_kernel(const BinaryMatrix& m) {
  std::vector<BitVec> out;
  const std::size_t n = m.cols();
  for (uint64_t v = 0; v < (uint64_t{1} << n); ++v) {
    BitVec x(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((v >> i) & 1) x.set(i, true);
    if (!mul_vec(m, x).any()) out.push_back(x);
  }
  return out;
}

inline std::size_t brute_force_kernel_dim(const BinaryMatrix& m) {
  const std::size_t count = brute_force_kernel(m).size();
  std::size_t d = 0;
  while ((std::size_t{1} << d) < count) ++d;
  return d;
}

inline bool spans_match_brute_force(const std::vector<BitVec>& basis, const BinaryMatrix& m) {
  // every basis vector annihilated, independent, and counts match
  for (const auto& v : basis)
    if (mul_vec(m, v).any()) return false;
  if (rank(rows_to_matrix(basis, m.cols())) != basis.size()) return false;
  return (std::size_t{1} << basis.size()) == brute_force_kernel(m).size();
}

inline BinaryMatrix random_full_rank_square(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    BinaryMatrix m = random_matrix(rng, n, n);
    if (rank(m) == n) return m;
  }
}

}  // namespace ldpcq::testutil

#endif
