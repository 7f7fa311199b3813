#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ldpcq/code.hpp"
#include "testutil.hpp"

using namespace ldpcq;
using namespace ldpcq::testutil;

TEST_CASE("from_matrix caches dimensions and bases") {
  const ClassicalCode c = ising3();
  CHECK(c.n() == 3);
  CHECK(c.m() == 3);
  CHECK(c.k() == 1);
  CHECK(c.k_transpose() == 1);

  const ClassicalCode one = single_bit_check();
  CHECK(one.k() == 0);
  CHECK(one.k_transpose() == 0);

  const ClassicalCode chain = open_chain3();
  CHECK(chain.k() == brute_force_kernel_dim(chain.H()));
  CHECK(chain.k_transpose() == brute_force_kernel_dim(chain.H().transposed()));
  CHECK(chain.k() == 1);
  CHECK(chain.k_transpose() == 0);
}

TEST_CASE("symmetries") {
  CHECK(ising3().symmetries() == std::vector<BitVec>{BitVec::from_support(3, {0, 1, 2})});
  CHECK(single_bit_check().symmetries().empty());
  const ClassicalCode prod = tensor_product(ising3(), ising3());
  REQUIRE(prod.symmetries().size() == 1);
  CHECK(prod.symmetries()[0].popcount() == 9);  // the all-bits set
}

TEST_CASE("redundancies") {
  CHECK(ising3().redundancies() == std::vector<BitVec>{BitVec::from_support(3, {0, 1, 2})});
  CHECK(open_chain3().redundancies().empty());

  // Local redundancies of the tensor product: for every pair (a, b), the
  // layer-1 checks (a, j) for j in delta2(b) together with the layer-2
  // checks (i, b) for i in delta1(a) multiply to the identity.
  const ClassicalCode c1 = ising3(), c2 = ising3();
  const ClassicalCode prod = tensor_product(c1, c2);
  const std::size_t m1 = c1.m(), n1 = c1.n(), n2 = c2.n();
  for (std::size_t a = 0; a < c1.m(); ++a)
    for (std::size_t b = 0; b < c2.m(); ++b) {
      BitVec r(prod.m());
      for (uint32_t j : c2.check_support(b)) r.set(j * m1 + a, true);          // block 1 row (a, j)
      for (uint32_t i : c1.check_support(a)) r.set(m1 * n2 + b * n1 + i, true); // block 2 row (i, b)
      CHECK_FALSE(mul_vec(prod.H().transposed(), r).any());
      std::vector<BitVec> with = prod.redundancies();
      with.push_back(r);
      CHECK(rank(rows_to_matrix(with, prod.m())) == prod.redundancies().size());
    }
}

TEST_CASE("transpose_code") {
  const ClassicalCode t = transpose_code(ising3());
  CHECK(t.n() == 3);
  CHECK(t.k() == 1);
  CHECK(t.k_transpose() == 1);
  const ClassicalCode chain_t = transpose_code(open_chain3());
  CHECK(chain_t.n() == 2);
  CHECK(chain_t.m() == 3);
  std::mt19937_64 rng(kCorpusSeed + 10);
  for (int k = 0; k < 10; ++k) {
    const ClassicalCode c = ClassicalCode::from_matrix(random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5));
    CHECK(transpose_code(transpose_code(c)).H() == c.H());
  }
}

TEST_CASE("perp_code") {
  CHECK(perp_code(ising3()).H() == BinaryMatrix::from_rows({{1, 1, 1}}));
  std::mt19937_64 rng(kCorpusSeed + 11);
  const ClassicalCode full = ClassicalCode::from_matrix(random_full_rank_square(rng, 4));
  CHECK(perp_code(full).m() == 0);
  CHECK(perp_code(full).n() == 4);
  for (int k = 0; k < 15; ++k) {
    const ClassicalCode c = ClassicalCode::from_matrix(random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5));
    const ClassicalCode pp = perp_code(perp_code(c));
    CHECK(same_span(pp.symmetries(), c.symmetries(), c.n()));
  }
}

TEST_CASE("tensor_product") {
  const ClassicalCode prod = tensor_product(ising3(), ising3());
  CHECK(prod.m() == 18);
  CHECK(prod.n() == 9);
  CHECK(prod.H() == vstack({kron(BinaryMatrix::identity(3), ising3_matrix()),
                            kron(ising3_matrix(), BinaryMatrix::identity(3))}));

  // trivial second factor: one bit, no checks
  const ClassicalCode trivial = ClassicalCode::from_matrix(BinaryMatrix(0, 1));
  CHECK(tensor_product(ising3(), trivial).H() == ising3_matrix());

  // membership: w is a codeword iff every row is in C1 and every column in C2
  std::mt19937_64 rng(kCorpusSeed + 12);
  auto in_code = [](const ClassicalCode& c, const BitVec& w) { return !mul_vec(c.H(), w).any(); };
  for (int t = 0; t < 200; ++t) {
    const uint64_t w = rng() & 0x1ff;
    BitVec word(9);
    for (std::size_t b = 0; b < 9; ++b)
      if ((w >> b) & 1) word.set(b, true);
    bool rows_and_cols_ok = true;
    for (std::size_t j = 0; j < 3; ++j) {  // row j of the 3x3 arrangement: bits (i, j)
      BitVec row(3);
      for (std::size_t i = 0; i < 3; ++i) row.set(i, word.get(j * 3 + i));
      rows_and_cols_ok &= in_code(ising3(), row);
    }
    for (std::size_t i = 0; i < 3; ++i) {
      BitVec col(3);
      for (std::size_t j = 0; j < 3; ++j) col.set(j, word.get(j * 3 + i));
      rows_and_cols_ok &= in_code(ising3(), col);
    }
    CHECK(in_code(prod, word) == rows_and_cols_ok);
  }
}

TEST_CASE("check_product") {
  const ClassicalCode prod = check_product(ising3(), ising3());
  CHECK(prod.m() == 9);
  CHECK(prod.n() == 9);
  // row (a, b) supports delta1(a) x delta2(b) under the j*n1+i column layout
  const ClassicalCode c = ising3();
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      std::vector<uint32_t> want;
      for (uint32_t i : c.check_support(a))
        for (uint32_t j : c.check_support(b)) want.push_back(j * 3 + i);
      std::sort(want.begin(), want.end());
      CHECK(prod.H().row_support(b * 3 + a) == want);
    }

  // identity element
  const ClassicalCode unit = single_bit_check();
  CHECK(check_product(unit, ising3()).H() == ising3_matrix());
  CHECK(check_product(ising3(), unit).H() == ising3_matrix());
}

TEST_CASE("check product is the perp of the tensor of perps, at the kernel level") {
  std::mt19937_64 rng(kCorpusSeed + 13);
  for (int t = 0; t < 12; ++t) {
    const ClassicalCode c1 = ClassicalCode::from_matrix(random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3));
    const ClassicalCode c2 = ClassicalCode::from_matrix(random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3));
    const ClassicalCode lhs = check_product(c1, c2);
    const ClassicalCode rhs = perp_code(tensor_product(perp_code(c1), perp_code(c2)));
    CHECK(same_span(lhs.symmetries(), rhs.symmetries(), lhs.n()));
  }
}

TEST_CASE("pq_product special cases") {
  const ClassicalCode a = ising3(), b = ising3(), c = ising3();
  CHECK(pq_product({a, b}, 1).H() == tensor_product(a, b).H());
  CHECK(pq_product({a, b}, 2).H() == check_product(a, b).H());

  const ClassicalCode cubic = pq_product({a, b, c}, 2);
  CHECK(cubic.m() == 81);
  CHECK(cubic.n() == 27);
  // blocks in subset order {0,1}, {0,2}, {1,2}: I (x) H (x) H, H (x) I (x) H, H (x) H (x) I
  const BinaryMatrix h = ising3_matrix(), id = BinaryMatrix::identity(3);
  const BinaryMatrix want =
      vstack({kron(id, kron(h, h)), kron(h, kron(id, h)), kron(h, kron(h, id))});
  CHECK(cubic.H() == want);

  CHECK_THROWS_AS(pq_product({a, b}, 0), std::invalid_argument);
  CHECK_THROWS_AS(pq_product({a, b}, 3), std::invalid_argument);

  // four factors: q = p collapses to one Kronecker block, q = 1 stacks one
  // H-bearing block per factor
  const ClassicalCode u = single_bit_check();
  CHECK(pq_product({u, u, u, u}, 4).H() == BinaryMatrix::from_rows({{1}}));
  CHECK(pq_product({u, u, u, u}, 1).H() ==
        BinaryMatrix::from_rows({{1}, {1}, {1}, {1}}));
}

TEST_CASE("pq_product kernel is the intersection of the block kernels") {
  std::mt19937_64 rng(kCorpusSeed + 14);
  for (int t = 0; t < 6; ++t) {
    const ClassicalCode c1 = ClassicalCode::from_matrix(random_matrix(rng, 1 + rng() % 2, 2));
    const ClassicalCode c2 = ClassicalCode::from_matrix(random_matrix(rng, 1 + rng() % 2, 2));
    const ClassicalCode c3 = ClassicalCode::from_matrix(random_matrix(rng, 1 + rng() % 2, 2));
    for (std::size_t q = 1; q <= 3; ++q) {
      const ClassicalCode pq = pq_product({c1, c2, c3}, q);
      CHECK(spans_match_brute_force(pq.symmetries(), pq.H()));
    }
  }
}

TEST_CASE("defect_dual_basis") {
  const auto g = defect_dual_basis(ising3());
  REQUIRE(g.size() == 1);
  CHECK(g[0] == BitVec::from_support(3, {0}));  // the first check alone pairs odd

  CHECK(defect_dual_basis(open_chain3()).empty());

  std::mt19937_64 rng(kCorpusSeed + 15);
  for (int t = 0; t < 30; ++t) {
    const ClassicalCode c = ClassicalCode::from_matrix(random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6));
    const auto basis = defect_dual_basis(c);
    const auto& reds = c.redundancies();
    REQUIRE(basis.size() == reds.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < reds.size(); ++j) {
        BitVec overlap = basis[i];
        // |G_i ∩ R_j| mod 2 via the dot product
        CHECK(overlap.dot(reds[j]) == (i == j));
      }
  }
}

TEST_CASE("rank identities hold on the corpus") {
  for (const auto& c : corpus()) {
    CHECK(c.k() + c.rank() == c.n());
    CHECK(c.k_transpose() + c.rank() == c.m());
    for (const auto& s : c.symmetries()) CHECK_FALSE(mul_vec(c.H(), s).any());
    for (const auto& r : c.redundancies()) CHECK_FALSE(mul_vec(c.H().transposed(), r).any());
  }
}

TEST_CASE("tensor product rows support single-layer checks") {
  const ClassicalCode c1 = open_chain3(), c2 = ising3();
  const ClassicalCode prod = tensor_product(c1, c2);
  const std::size_t m1 = c1.m(), n1 = c1.n(), n2 = c2.n();
  for (std::size_t j = 0; j < n2; ++j)
    for (std::size_t a = 0; a < m1; ++a) {
      std::vector<uint32_t> want;
      for (uint32_t i : c1.check_support(a)) want.push_back(static_cast<uint32_t>(j * n1 + i));
      CHECK(prod.H().row_support(j * m1 + a) == want);
    }
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t b = 0; b < c2.m(); ++b) {
      std::vector<uint32_t> want;
      for (uint32_t jj : c2.check_support(b)) want.push_back(static_cast<uint32_t>(jj * n1 + i));
      CHECK(prod.H().row_support(m1 * n2 + b * n1 + i) == want);
    }
}
