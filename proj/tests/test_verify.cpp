#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "fixtures.hpp"
#include "graysynth/graysynth.hpp"

using namespace graysynth;

TEST_CASE("simulate_classical basics") {
  Circuit c(2);
  c.append(Gate::cnot(1, 2));
  BasisOutcome out = simulate_classical(c, BitVec::from_string("10"));
  CHECK(out.bits == BitVec::from_string("11"));
  CHECK(out.phase.is_zero());

  BasisOutcome ccz = simulate_classical(fixtures::ccz_sequential(), BitVec::from_string("111"));
  CHECK(ccz.phase == Angle(1, 2));
  CHECK(ccz.bits == BitVec::from_string("111"));

  Circuit h(1);
  h.append(Gate::h(1));
  CHECK_THROWS_AS(simulate_classical(h, BitVec::from_string("0")), UnsupportedGate);
  CHECK_THROWS_AS(simulate_classical(c, BitVec::from_string("100")), ArityMismatch);
}

TEST_CASE("simulate_classical agrees with extract_sop on CNOT+Rz circuits") {
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 60; ++rep) {
    int n = 2 + static_cast<int>(rng() % 5);
    Circuit c = fixtures::random_cnot_rz_circuit(n, 20, rng);
    SumOverPaths sop = extract_sop(c);
    for (std::uint64_t xi = 0; xi < (std::uint64_t{1} << n); ++xi) {
      BitVec x = graysynth::detail::index_to_bitvec(n, xi);
      BasisOutcome out = simulate_classical(c, x);
      REQUIRE(out.bits == sop.transform * x);
      REQUIRE(out.phase == Angle(evaluate(sop.phase, x)));
    }
  }
}

TEST_CASE("simulate_classical agrees with the dense simulator on H-free circuits") {
  std::mt19937_64 rng(62);
  for (int rep = 0; rep < 30; ++rep) {
    int n = 2 + static_cast<int>(rng() % 3);
    Circuit c(n);
    for (int k = 0; k < 15; ++k) {
      switch (rng() % 4) {
        case 0: {
          int a = 1 + static_cast<int>(rng() % n), b = 1 + static_cast<int>(rng() % (n - 1));
          if (b >= a) ++b;
          c.append(Gate::cnot(a, b));
          break;
        }
        case 1:
          c.append(Gate::not_gate(1 + static_cast<int>(rng() % n)));
          break;
        default:
          c.append(Gate::rz(Angle(static_cast<std::int64_t>(rng() % 8), 8),
                            1 + static_cast<int>(rng() % n)));
      }
    }
    Unitary u = simulate_unitary(c);
    for (std::uint64_t xi = 0; xi < u.dim; ++xi) {
      BitVec x = BitVec(n);
      for (int i = 1; i <= n; ++i)
        if ((xi >> (n - i)) & 1) x.set(i);
      BasisOutcome out = simulate_classical(c, x);
      std::uint64_t row = 0;
      for (int i = 1; i <= n; ++i)
        if (out.bits.test(i)) row |= std::uint64_t{1} << (n - i);
      std::complex<double> expect =
          std::polar(1.0, 2 * 3.14159265358979323846 * out.phase.value().to_double());
      REQUIRE(std::abs(u.at(row, xi) - expect) < 1e-9);
      for (std::uint64_t r = 0; r < u.dim; ++r)
        if (r != row) REQUIRE(std::abs(u.at(r, xi)) < 1e-12);
    }
  }
}

TEST_CASE("simulate_unitary basics") {
  Circuit h(1);
  h.append(Gate::h(1));
  Unitary u = simulate_unitary(h);
  const double s = 0.7071067811865476;
  CHECK(std::abs(u.at(0, 0) - s) < 1e-12);
  CHECK(std::abs(u.at(0, 1) - s) < 1e-12);
  CHECK(std::abs(u.at(1, 0) - s) < 1e-12);
  CHECK(std::abs(u.at(1, 1) + s) < 1e-12);

  // decomposed Toffoli against the permutation it should implement
  Circuit tof(3);
  tof.append(Gate::toffoli(1, 2, 3));
  Unitary ref = simulate_unitary(tof);
  Unitary dec = simulate_unitary(decompose_toffoli(tof));
  for (std::uint64_t col = 0; col < ref.dim; ++col)
    for (std::uint64_t row = 0; row < ref.dim; ++row)
      REQUIRE(std::abs(ref.at(row, col) - dec.at(row, col)) < 1e-9);

  // the annotated CCZ circuit is diag(1,...,1,-1)
  Unitary ccz = simulate_unitary(fixtures::ccz_sequential());
  for (std::uint64_t col = 0; col < 8; ++col)
    for (std::uint64_t row = 0; row < 8; ++row) {
      std::complex<double> expect =
          row == col ? (row == 7 ? -1.0 : 1.0) : 0.0;
      REQUIRE(std::abs(ccz.at(row, col) - expect) < 1e-9);
    }

  CHECK_THROWS_AS(simulate_unitary(Circuit(13)), TooManyQubits);
}

TEST_CASE("CNOT circuits simulate to the permutation of their transform") {
  std::mt19937_64 rng(63);
  for (int rep = 0; rep < 20; ++rep) {
    int n = 2 + static_cast<int>(rng() % 3);
    Circuit c = fixtures::random_cnot_circuit(n, 12, rng);
    BitMatrix a = compose_cnot_transform(c);
    Unitary u = simulate_unitary(c);
    for (std::uint64_t xi = 0; xi < u.dim; ++xi) {
      BitVec x(n);
      for (int i = 1; i <= n; ++i)
        if ((xi >> (n - i)) & 1) x.set(i);
      BitVec y = a * x;
      std::uint64_t row = 0;
      for (int i = 1; i <= n; ++i)
        if (y.test(i)) row |= std::uint64_t{1} << (n - i);
      REQUIRE(std::abs(u.at(row, xi) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("equivalent_unitary") {
  std::mt19937_64 rng(64);
  Circuit c = fixtures::random_clifford_t(3, 20, rng);
  CHECK(equivalent_unitary(c, c));

  // global phase: X Rz(θ) X Rz(θ) applies e^{2πiθ} on every basis state
  Circuit shifted(3);
  shifted.append(Gate::not_gate(1));
  shifted.append(Gate::rz(Angle(1, 3), 1));
  shifted.append(Gate::not_gate(1));
  shifted.append(Gate::rz(Angle(1, 3), 1));
  shifted.append(c);
  CHECK(equivalent_unitary(c, shifted));

  Circuit t(1), s(1);
  t.append(Gate::rz(Angle(1, 8), 1));
  s.append(Gate::rz(Angle(1, 4), 1));
  CHECK_FALSE(equivalent_unitary(t, s, 1e-7));

  CHECK_THROWS_AS(equivalent_unitary(Circuit(2), Circuit(3)), ArityMismatch);
}
