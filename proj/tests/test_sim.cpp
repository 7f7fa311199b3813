#include <doctest.h>

#include <random>

#include "ldpcq/errors.hpp"
#include "ldpcq/sim.hpp"
#include "ldpcq/verify.hpp"
#include "ldpcq/zx.hpp"
#include "testutil.hpp"

using namespace ldpcq;
using namespace ldpcq::testutil;

namespace {

DenseState random_state(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d(0.0, 1.0);
  DenseState s(n);
  double norm = 0.0;
  for (auto& a : s.amplitudes()) {
    a = {d(rng), d(rng)};
    norm += std::norm(a);
  }
  s.scale(1.0 / std::sqrt(norm));
  return s;
}

}  // namespace

TEST_CASE("gate application matches the explicit formulas") {
  std::mt19937_64 rng(kCorpusSeed + 50);
  const double inv = 1.0 / std::sqrt(2.0);
  for (int t = 0; t < 10; ++t) {
    const DenseState s = random_state(rng, 3);

    for (uint32_t w = 0; w < 3; ++w) {
      DenseState h = s;
      h.apply_h(w);
      const uint64_t bit = uint64_t{1} << w;
      for (uint64_t b = 0; b < 8; ++b) {
        const cdouble want = (b & bit) ? (s.amplitude(b ^ bit) - s.amplitude(b)) * inv
                                       : (s.amplitude(b) + s.amplitude(b | bit)) * inv;
        CHECK(std::abs(h.amplitude(b) - want) < 1e-13);
      }
    }

    for (auto [ctrl, tgt] : {std::pair<uint32_t, uint32_t>{0, 2}, {2, 0}, {1, 2}, {2, 1}}) {
      DenseState c = s;
      c.apply_cnot(ctrl, tgt);
      for (uint64_t b = 0; b < 8; ++b) {
        const uint64_t src = ((b >> ctrl) & 1) ? b ^ (uint64_t{1} << tgt) : b;
        CHECK(std::abs(c.amplitude(b) - s.amplitude(src)) < 1e-15);
      }
    }
  }
}

TEST_CASE("state preparation hits the reference outputs") {
  const ClassicalCode c = ising3();

  const ApplyResult plus = prepare_state(c);
  CHECK(plus.probability == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(DenseState::fidelity_up_to_phase(plus.state, DenseState::basis(3, 0)) >=
        1.0 - 1e-12);

  ApplyOptions minus;
  minus.ancilla_overrides[0] = label_amplitudes(StateLabel::Minus);
  CHECK(DenseState::fidelity_up_to_phase(prepare_state(c, minus).state,
                                         DenseState::basis(3, 7)) >= 1.0 - 1e-12);

  // alpha |+> + beta |-> lands on alpha |000> + beta |111>
  ApplyOptions mix;
  const cdouble alpha{0.6, 0.0}, beta{0.0, 0.8};
  mix.ancilla_overrides[0] = {(alpha + beta) / std::sqrt(2.0), (alpha - beta) / std::sqrt(2.0)};
  const ApplyResult got = prepare_state(c, mix);
  DenseState want(3);
  want.amplitudes()[0] = alpha;
  want.amplitudes()[7] = beta;
  CHECK(DenseState::fidelity_up_to_phase(got.state, want) >= 1.0 - 1e-12);

  // physical |0> ancilla: the maximally symmetric superposition
  ApplyOptions sym;
  sym.ancilla_overrides[0] = label_amplitudes(StateLabel::Zero);
  const ApplyResult ghz = prepare_state(c, sym);
  DenseState ghz_want(3);
  ghz_want.amplitudes()[0] = 1.0 / std::sqrt(2.0);
  ghz_want.amplitudes()[7] = 1.0 / std::sqrt(2.0);
  CHECK(DenseState::fidelity_up_to_phase(ghz.state, ghz_want) >= 1.0 - 1e-12);
}

TEST_CASE("prepared states are stabilized") {
  for (const auto& c : corpus()) {
    const QuantumProcess p = extract_defect(c);
    if (p.total_wires > 12) continue;

    // reference preparation satisfies every check of the transpose code
    const ApplyResult r = prepare_state(c);
    if (r.annihilated) continue;
    for (std::size_t i = 0; i < c.n(); ++i) {
      const PauliOperator tau_check =
          PauliOperator::z_word(BitVec::from_support(c.m(), c.bit_support(i)));
      CHECK(std::abs(r.state.expectation(tau_check) - cdouble{1.0, 0.0}) < 1e-10);
    }

    // symmetric preparation (physical |0> ancillas) additionally satisfies
    // the symmetries of the transpose code
    ApplyOptions sym;
    for (std::size_t k = 0; k < p.ancillas.size(); ++k)
      sym.ancilla_overrides[k] = label_amplitudes(StateLabel::Zero);
    const ApplyResult s = prepare_state(c, sym);
    if (s.annihilated) continue;
    for (std::size_t i = 0; i < c.n(); ++i) {
      const PauliOperator tau_check =
          PauliOperator::z_word(BitVec::from_support(c.m(), c.bit_support(i)));
      CHECK(std::abs(s.state.expectation(tau_check) - cdouble{1.0, 0.0}) < 1e-10);
    }
    for (const auto& red : c.redundancies()) {
      const PauliOperator sym_op = PauliOperator::x_word(red);
      CHECK(std::abs(s.state.expectation(sym_op) - cdouble{1.0, 0.0}) < 1e-10);
    }
  }
}

TEST_CASE("apply_process agrees with the process matrix on random states") {
  std::mt19937_64 rng(kCorpusSeed + 51);
  const auto codes = corpus();
  for (std::size_t k = 0; k < codes.size(); k += 7) {
    const ClassicalCode& c = codes[k];
    for (const QuantumProcess& p : {extract_defect(c), extract_minimal_coupling(c)}) {
      if (p.total_wires > 12) continue;
      const Eigen::MatrixXcd m = process_matrix(p);
      const DenseState in = random_state(rng, p.n_in);
      ApplyOptions raw;
      raw.renormalize = false;
      const ApplyResult out = apply_process(p, in, raw);
      Eigen::VectorXcd v(std::size_t{1} << p.n_in);
      for (uint64_t b = 0; b < (uint64_t{1} << p.n_in); ++b) v(b) = in.amplitude(b);
      const Eigen::VectorXcd want = m * v;
      for (uint64_t b = 0; b < (uint64_t{1} << p.n_out); ++b)
        CHECK(std::abs(out.state.amplitude(b) - want(b)) < 1e-10);
    }
  }
}

TEST_CASE("raw application is linear on unnormalized branches") {
  std::mt19937_64 rng(kCorpusSeed + 52);
  const QuantumProcess p = extract_defect(ising3());
  const DenseState s1 = random_state(rng, 3), s2 = random_state(rng, 3);
  const cdouble a{0.3, -0.4}, b{0.8, 0.1};
  DenseState mix(3);
  for (std::size_t i = 0; i < 8; ++i)
    mix.amplitudes()[i] = a * s1.amplitude(i) + b * s2.amplitude(i);
  ApplyOptions raw;
  raw.renormalize = false;
  const auto r1 = apply_process(p, s1, raw), r2 = apply_process(p, s2, raw),
             rm = apply_process(p, mix, raw);
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(std::abs(rm.state.amplitude(i) - (a * r1.state.amplitude(i) + b * r2.state.amplitude(i))) <
          1e-12);
}

TEST_CASE("postselection annihilation is reported") {
  const QuantumProcess p =
      extract_product(single_bit_check(), single_bit_check(), ProductKind::Tensor);
  // alpha=0, beta=1 disagrees with the merge constraint
  const ApplyResult r = apply_process(p, DenseState::basis(2, 2));
  CHECK(r.annihilated);
  CHECK(r.probability < 1e-12);
}

TEST_CASE("process matrices of unitary codes are unitary") {
  std::mt19937_64 rng(kCorpusSeed + 53);
  for (int t = 0; t < 5; ++t) {
    const ClassicalCode c = ClassicalCode::from_matrix(random_full_rank_square(rng, 4));
    const Eigen::MatrixXcd u = process_matrix(extract_defect(c));
    CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("exact_spectrum") {
  HamiltonianSpec single;
  single.n_wires = 1;
  single.terms.push_back({-0.7, PauliOperator::x_at(1, 0)});
  const auto evs = exact_spectrum(single, 2);
  CHECK(evs[0] == doctest::Approx(-0.7).epsilon(1e-10));
  CHECK(evs[1] == doctest::Approx(0.7).epsilon(1e-10));

  // 3-site ring at h = 0: ground energy -3, twofold degenerate
  const auto ring = exact_spectrum(build_hamiltonian(ising3(), 1.0, 0.0), 3);
  CHECK(ring[0] == doctest::Approx(-3.0).epsilon(1e-10));
  CHECK(ring[1] == doctest::Approx(-3.0).epsilon(1e-10));
  CHECK(ring[2] > -3.0 + 1e-6);

  // iterative path agrees with the dense one, degeneracy included
  SpectrumOptions force_iter;
  force_iter.dense_wires = 2;
  const auto ring_iter = exact_spectrum(build_hamiltonian(ising3(), 1.0, 0.0), 3, force_iter);
  for (int i = 0; i < 3; ++i) CHECK(ring_iter[i] == doctest::Approx(ring[i]).epsilon(1e-8));

  const auto tf = exact_spectrum(build_hamiltonian(ising3(), 1.0, 0.7), 4);
  const auto tf_iter = exact_spectrum(build_hamiltonian(ising3(), 1.0, 0.7), 4, force_iter);
  for (int i = 0; i < 4; ++i) CHECK(tf_iter[i] == doctest::Approx(tf[i]).epsilon(1e-8));
}

TEST_CASE("strong coupling opens a gap above the constrained sector") {
  const ClassicalCode two = ising_ring(2);
  const HamiltonianSpec spec = build_coupled_layer(two, two, ProductKind::Tensor, 1.0, 1.0, 50.0);
  const auto evs = exact_spectrum(spec, 17);
  CHECK(evs[15] - evs[0] < 20.0);   // the 16-dimensional constrained sector
  CHECK(evs[16] - evs[15] > 50.0);  // separated by the coupling gap
}

TEST_CASE("effective block in the commuting limit is the projected check sum") {
  const ClassicalCode two = ising_ring(2);
  const double lambda = 1e6;
  const EffectiveBlock blk =
      effective_coupled_block(two, two, ProductKind::Tensor, 0.0, 0.0, lambda);
  REQUIRE(blk.labels.size() == 16);
  CHECK(blk.residual < 1e-8);
  // Diagonal in the matched-Z basis: -4*lambda from the coupling plus the
  // projected check sum; the ring has each bond doubled.
  for (uint64_t s = 0; s < 16; ++s) {
    auto bit = [&](std::size_t q) { return ((s >> q) & 1) ? -1.0 : 1.0; };
    double checks = 0.0;
    // layer 1 copies j = 0, 1: doubled bond on (0,1) within each row
    checks += 2.0 * (bit(0) * bit(1) + bit(2) * bit(3));
    // layer 2 copies i = 0, 1: doubled bond across rows
    checks += 2.0 * (bit(0) * bit(2) + bit(1) * bit(3));
    const double want = -4.0 * lambda - checks;
    CHECK(std::abs(blk.matrix(s, s).real() - want) < 1e-6);
  }
  for (uint64_t s = 0; s < 16; ++s)
    for (uint64_t t = 0; t < 16; ++t)
      if (s != t) CHECK(std::abs(blk.matrix(s, t)) < 1e-6);
}

TEST_CASE("effective block is Hermitian and spectrum preserving") {
  const ClassicalCode two = ising_ring(2);
  const EffectiveBlock blk = effective_coupled_block(two, two, ProductKind::Tensor, 1.0, 1.0, 40.0);
  CHECK((blk.matrix - blk.matrix.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(blk.matrix);
  const auto exact = exact_spectrum(build_coupled_layer(two, two, ProductKind::Tensor, 1.0, 1.0, 40.0), 16);
  for (int i = 0; i < 16; ++i)
    CHECK(es.eigenvalues()(i) == doctest::Approx(exact[i]).epsilon(1e-8));
}

TEST_CASE("second-order flip element of the tensor coupling") {
  const ClassicalCode two = ising_ring(2);
  const double h1 = 1.0, h2 = 1.0;
  for (double lambda : {100.0, 200.0}) {
    const EffectiveBlock blk =
        effective_coupled_block(two, two, ProductKind::Tensor, h1, h2, lambda);
    const double flip = blk.matrix(1, 0).real();  // single flip on site (0,0)
    const double tol = lambda >= 200.0 ? 0.01 : 0.02;
    CHECK(std::abs(-flip * lambda - h1 * h2) < tol * h1 * h2);
  }
}

TEST_CASE("plaquette amplitude of the minimal check-product instance") {
  // One weight-2 check per code: 4 sites, 8 wires. The exact block gives a
  // lambda^-3 law with constant 5/16; the flip element vanishes at h = 0.
  const ClassicalCode bond =
      ClassicalCode::from_matrix(BinaryMatrix::from_rows({{1, 1}}));
  std::vector<PowerLawSample> samples;
  for (double lambda : {20.0, 40.0, 80.0}) {
    const EffectiveBlock blk =
        effective_coupled_block(bond, bond, ProductKind::Check, 0.0, 0.0, lambda);
    REQUIRE(blk.labels.size() == 16);
    const cdouble plaq = blk.matrix(15, 0);  // flip all four sites
    samples.push_back({lambda, plaq.real()});
    CHECK(std::abs(blk.matrix(1, 0)) < 1e-9);
  }
  const PowerLawFit fit = fit_power_law(samples);
  CHECK(fit.exponent == doctest::Approx(-3.0).epsilon(0.01));
  CHECK(fit.constant == doctest::Approx(5.0 / 16.0).epsilon(0.02));
  CHECK(samples[2].value < 0.0);  // the plaquette term enters with a minus sign
}

TEST_CASE("disconnected low space raises degeneracy_error") {
  const ClassicalCode two = ising_ring(2);
  // Inverted coupling: the ground sector is the anti-matched one, orthogonal
  // to the matched-Z constrained basis.
  CHECK_THROWS_AS(effective_coupled_block(two, two, ProductKind::Tensor, 0.0, 0.0, -50.0),
                  degeneracy_error);
}

TEST_CASE("generic effective_block matches the coupled-layer wrapper") {
  const ClassicalCode bond = ClassicalCode::from_matrix(BinaryMatrix::from_rows({{1, 1}}));
  const HamiltonianSpec full = build_coupled_layer(bond, bond, ProductKind::Tensor, 0.5, 0.5, 30.0);
  const HamiltonianSpec h0 = coupled_layer_constraint(bond, bond, ProductKind::Tensor, 30.0);
  const EffectiveBlock generic = effective_block(full, h0, 16);
  const EffectiveBlock canonical =
      effective_coupled_block(bond, bond, ProductKind::Tensor, 0.5, 0.5, 30.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eg(generic.matrix), ec(canonical.matrix);
  for (int i = 0; i < 16; ++i)
    CHECK(eg.eigenvalues()(i) == doctest::Approx(ec.eigenvalues()(i)).epsilon(1e-8));

  HamiltonianSpec bad = h0;
  bad.terms.push_back({1.0, PauliOperator::x_at(h0.n_wires, 0)});
  CHECK_THROWS_AS(effective_block(full, bad, 16), std::invalid_argument);
}

TEST_CASE("fit_power_law") {
  const PowerLawFit fit =
      fit_power_law({{10.0, 1e-4}, {20.0, 6.25e-6}, {40.0, 3.90625e-7}});
  CHECK(fit.exponent == doctest::Approx(-4.0).epsilon(1e-9));
  CHECK(fit.constant == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(fit.max_rel_residual < 1e-9);

  const PowerLawFit inv = fit_power_law({{10.0, 0.1}, {100.0, 0.01}, {1000.0, 0.001}});
  CHECK(inv.exponent == doctest::Approx(-1.0).epsilon(1e-9));

  CHECK_THROWS_AS(fit_power_law({{10.0, 0.1}, {100.0, 0.01}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_power_law({{10.0, 0.1}, {20.0, 0.0}, {40.0, 0.1}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_power_law({{10.0, 0.1}, {9.0, 0.01}, {40.0, 0.1}}), std::invalid_argument);
}

TEST_CASE("resource caps") {
  HamiltonianSpec big;
  big.n_wires = 22;
  big.terms.push_back({1.0, PauliOperator::x_at(22, 0)});
  CHECK_THROWS_AS(exact_spectrum(big, 1), resource_error);

  const ClassicalCode c = ising3();
  const QuantumProcess p = extract_minimal_coupling(c);
  CHECK_THROWS_AS(process_matrix(p, 4), resource_error);
  ApplyOptions tight;
  tight.max_wires = 3;
  CHECK_THROWS_AS(apply_process(p, DenseState::uniform_plus(3), tight), resource_error);
}
