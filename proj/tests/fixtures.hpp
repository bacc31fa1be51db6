#pragma once

// Shared circuit fixtures and random generators for the test suites.

#include <random>
#include <vector>

#include "graysynth/graysynth.hpp"

namespace fixtures {

using namespace graysynth;

/// The annotated doubly-controlled-Z circuit over {CNOT, Rz}: six CNOTs, seven
/// rotations with coefficients 1/8 on the singles and the triple and 3/8 on
/// the pairs, identity overall transformation.
inline Circuit ccz_sequential() {
  Circuit c(3);
  c.append(Gate::rz(Angle(1, 8), 1));
  c.append(Gate::rz(Angle(1, 8), 2));
  c.append(Gate::cnot(3, 1));
  c.append(Gate::cnot(2, 3));
  c.append(Gate::rz(Angle(3, 8), 1));
  c.append(Gate::rz(Angle(3, 8), 3));
  c.append(Gate::cnot(2, 1));
  c.append(Gate::cnot(2, 3));
  c.append(Gate::rz(Angle(1, 8), 1));
  c.append(Gate::cnot(3, 1));
  c.append(Gate::rz(Angle(3, 8), 1));
  c.append(Gate::rz(Angle(1, 8), 3));
  c.append(Gate::cnot(2, 1));
  return c;
}

/// The same circuit with all rotations removed.
inline Circuit ccz_skeleton() {
  Circuit c(3);
  for (const Gate& g : ccz_sequential().gates)
    if (g.kind == GateKind::Cnot) c.append(g);
  return c;
}

/// Fourier expansion of the doubly-controlled-Z phase function.
inline PhasePolynomial ccz_polynomial() {
  PhasePolynomial f(3);
  f.add(BitVec::from_string("100"), Angle(1, 8));
  f.add(BitVec::from_string("010"), Angle(1, 8));
  f.add(BitVec::from_string("001"), Angle(1, 8));
  f.add(BitVec::from_string("101"), Angle(3, 8));
  f.add(BitVec::from_string("011"), Angle(3, 8));
  f.add(BitVec::from_string("110"), Angle(3, 8));
  f.add(BitVec::from_string("111"), Angle(1, 8));
  return f;
}

/// k-controlled Toffoli on k+1 wires, ancillae not yet added.
inline Circuit lambda_k(int k) {
  Circuit c(k + 1);
  std::vector<int> controls;
  for (int i = 1; i <= k; ++i) controls.push_back(i);
  c.append(Gate::mcx(controls, k + 1));
  return c;
}

inline BitVec random_bitvec(int n, std::mt19937_64& rng, bool nonzero = true) {
  for (;;) {
    BitVec v(n);
    for (int i = 1; i <= n; ++i)
      if (rng() & 1) v.set(i);
    if (!nonzero || v.any()) return v;
  }
}

inline ParitySet random_parity_set(int n, int max_size, std::mt19937_64& rng) {
  ParitySet s(n);
  int want = 1 + static_cast<int>(rng() % max_size);
  if (n < 30) want = std::min(want, (1 << n) - 1);
  while (static_cast<int>(s.size()) < want) {
    BitVec v = random_bitvec(n, rng);
    if (!s.contains(v)) s.insert(v);
  }
  return s;
}

inline Circuit random_cnot_circuit(int n, int gates, std::mt19937_64& rng) {
  Circuit c(n);
  for (int k = 0; k < gates; ++k) {
    int a = 1 + static_cast<int>(rng() % n);
    int b = 1 + static_cast<int>(rng() % (n - 1));
    if (b >= a) ++b;
    c.append(Gate::cnot(a, b));
  }
  return c;
}

inline BitMatrix random_invertible(int n, std::mt19937_64& rng) {
  return compose_cnot_transform(random_cnot_circuit(n, 4 * n, rng));
}

/// Random circuit over CNOT and a few exact rotations.
inline Circuit random_cnot_rz_circuit(int n, int gates, std::mt19937_64& rng) {
  static const Angle angles[] = {Angle(1, 8), Angle(7, 8), Angle(1, 4),
                                 Angle(1, 2), Angle(1, 3), Angle(5, 6)};
  Circuit c(n);
  for (int k = 0; k < gates; ++k) {
    if (rng() % 3 == 0) {
      c.append(Gate::rz(angles[rng() % 6], 1 + static_cast<int>(rng() % n)));
    } else {
      int a = 1 + static_cast<int>(rng() % n);
      int b = 1 + static_cast<int>(rng() % (n - 1));
      if (b >= a) ++b;
      c.append(Gate::cnot(a, b));
    }
  }
  return c;
}

/// Random Clifford+T circuit over {CNOT, NOT, H, T, T*, S, Z}.
inline Circuit random_clifford_t(int n, int gates, std::mt19937_64& rng) {
  static const Angle angles[] = {Angle(1, 8), Angle(7, 8), Angle(1, 4), Angle(1, 2)};
  Circuit c(n);
  for (int k = 0; k < gates; ++k) {
    switch (rng() % 5) {
      case 0: {
        int a = 1 + static_cast<int>(rng() % n);
        int b = 1 + static_cast<int>(rng() % (n - 1));
        if (b >= a) ++b;
        c.append(Gate::cnot(a, b));
        break;
      }
      case 1:
        c.append(Gate::h(1 + static_cast<int>(rng() % n)));
        break;
      case 2:
        c.append(Gate::not_gate(1 + static_cast<int>(rng() % n)));
        break;
      default:
        c.append(Gate::rz(angles[rng() % 4], 1 + static_cast<int>(rng() % n)));
    }
  }
  return c;
}

inline PhasePolynomial random_phase_poly(int n, int max_terms, std::mt19937_64& rng) {
  static const Angle angles[] = {Angle(1, 8), Angle(7, 8), Angle(1, 4), Angle(3, 4),
                                 Angle(1, 2), Angle(1, 3), Angle(2, 3), Angle(1, 6)};
  PhasePolynomial f(n);
  int want = 1 + static_cast<int>(rng() % max_terms);
  for (int k = 0; k < want; ++k) f.add(random_bitvec(n, rng), angles[rng() % 8]);
  return f;
}

}  // namespace fixtures
