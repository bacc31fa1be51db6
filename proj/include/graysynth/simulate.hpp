#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "graysynth/angle.hpp"
#include "graysynth/bitvec.hpp"
#include "graysynth/circuit.hpp"
#include "graysynth/errors.hpp"

namespace graysynth {

/// Result of running an H-free circuit on a basis state: an exact phase in
/// turns (reduced mod 1) and the output bits.
struct BasisOutcome {
  Angle phase;
  BitVec bits;
};

/// Exact classical simulation; every gate except H maps basis states to basis
/// states with a phase.
inline BasisOutcome simulate_classical(const Circuit& c, const BitVec& x) {
  if (x.size() != c.n) throw ArityMismatch();
  BitVec b = x;
  Angle phase;
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::Cnot:
        if (b.test(g.control())) b.flip(g.target());
        break;
      case GateKind::Not:
        b.flip(g.target());
        break;
      case GateKind::Rz:
        if (b.test(g.target())) phase += g.angle;
        break;
      case GateKind::Toffoli:
      case GateKind::Mcx: {
        bool all = true;
        for (std::size_t i = 0; i + 1 < g.wires.size(); ++i) all = all && b.test(g.wires[i]);
        if (all) b.flip(g.target());
        break;
      }
      case GateKind::Ccz:
        if (b.test(g.wires[0]) && b.test(g.wires[1]) && b.test(g.wires[2])) phase += Angle(1, 2);
        break;
      case GateKind::H:
        throw UnsupportedGate("H is not classically simulable");
    }
  }
  return {phase, std::move(b)};
}

/// Dense unitary, stored column-major: column x is the state produced from
/// |x⟩. Basis index convention: wire 1 is the most significant bit.
struct Unitary {
  int n = 0;
  std::size_t dim = 0;
  std::vector<std::vector<std::complex<double>>> cols;

  const std::complex<double>& at(std::size_t row, std::size_t col) const {
    return cols[col][row];
  }
};

namespace detail {

constexpr double kTau = 6.283185307179586476925286766559;

inline void apply_gate(std::vector<std::complex<double>>& v, int n, const Gate& g) {
  const std::size_t dim = v.size();
  auto bit = [n](int wire) { return std::size_t{1} << (n - wire); };
  switch (g.kind) {
    case GateKind::H: {
      const std::size_t t = bit(g.target());
      const double invsqrt2 = 0.70710678118654752440;
      for (std::size_t i = 0; i < dim; ++i)
        if (!(i & t)) {
          auto a = v[i], b = v[i | t];
          v[i] = (a + b) * invsqrt2;
          v[i | t] = (a - b) * invsqrt2;
        }
      break;
    }
    case GateKind::Rz: {
      const std::size_t t = bit(g.target());
      const std::complex<double> w = std::polar(1.0, kTau * g.angle.value().to_double());
      for (std::size_t i = 0; i < dim; ++i)
        if (i & t) v[i] *= w;
      break;
    }
    case GateKind::Not: {
      const std::size_t t = bit(g.target());
      for (std::size_t i = 0; i < dim; ++i)
        if (!(i & t)) std::swap(v[i], v[i | t]);
      break;
    }
    case GateKind::Cnot:
    case GateKind::Toffoli:
    case GateKind::Mcx: {
      std::size_t cmask = 0;
      for (std::size_t k = 0; k + 1 < g.wires.size(); ++k) cmask |= bit(g.wires[k]);
      const std::size_t t = bit(g.target());
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & cmask) == cmask && !(i & t)) std::swap(v[i], v[i | t]);
      break;
    }
    case GateKind::Ccz: {
      const std::size_t m = bit(g.wires[0]) | bit(g.wires[1]) | bit(g.wires[2]);
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & m) == m) v[i] = -v[i];
      break;
    }
  }
}

}  // namespace detail

inline Unitary simulate_unitary(const Circuit& c) {
  if (c.n > 12) throw TooManyQubits();
  Unitary u;
  u.n = c.n;
  u.dim = std::size_t{1} << c.n;
  u.cols.assign(u.dim, {});
  for (std::size_t x = 0; x < u.dim; ++x) {
    auto& col = u.cols[x];
    col.assign(u.dim, {0.0, 0.0});
    col[x] = 1.0;
    for (const Gate& g : c.gates) detail::apply_gate(col, c.n, g);
  }
  return u;
}

/// Max-entry distance between u1 and λ·u2, with λ chosen to align the
/// largest-magnitude entry of u1.
inline bool equivalent_unitary(const Circuit& c1, const Circuit& c2, double tol = 1e-7) {
  if (c1.n != c2.n) throw ArityMismatch();
  Unitary u1 = simulate_unitary(c1);
  Unitary u2 = simulate_unitary(c2);
  std::size_t br = 0, bc = 0;
  double best = -1.0;
  for (std::size_t col = 0; col < u1.dim; ++col)
    for (std::size_t row = 0; row < u1.dim; ++row)
      if (std::abs(u1.at(row, col)) > best) {
        best = std::abs(u1.at(row, col));
        br = row;
        bc = col;
      }
  if (std::abs(u2.at(br, bc)) < 1e-12) return false;
  const std::complex<double> lambda = u1.at(br, bc) / u2.at(br, bc);
  for (std::size_t col = 0; col < u1.dim; ++col)
    for (std::size_t row = 0; row < u1.dim; ++row)
      if (std::abs(u1.at(row, col) - lambda * u2.at(row, col)) > tol) return false;
  return true;
}

}  // namespace graysynth
