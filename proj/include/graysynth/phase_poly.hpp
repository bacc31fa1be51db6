#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "graysynth/angle.hpp"
#include "graysynth/bitmatrix.hpp"
#include "graysynth/bitvec.hpp"
#include "graysynth/circuit.hpp"
#include "graysynth/errors.hpp"
#include "graysynth/linear_synth.hpp"

namespace graysynth {

/// Fourier expansion of a phase function: a finite map from nonzero parity
/// indicators to nonzero angles. Coefficients are kept mod 1; the constant
/// (y = 0) term is global phase and is dropped.
class PhasePolynomial {
 public:
  explicit PhasePolynomial(int n) : n_(n) {}

  int arity() const { return n_; }

  void add(const BitVec& y, const Angle& a) {
    assert(y.size() == n_);
    if (y.none() || a.is_zero()) return;
    auto [it, fresh] = terms_.emplace(y, a);
    if (!fresh) {
      it->second += a;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Angle coefficient(const BitVec& y) const {
    auto it = terms_.find(y);
    return it == terms_.end() ? Angle() : it->second;
  }

  const std::map<BitVec, Angle>& terms() const& { return terms_; }
  std::map<BitVec, Angle> terms() && { return std::move(terms_); }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::set<BitVec> support() const {
    std::set<BitVec> s;
    for (const auto& [y, a] : terms_) s.insert(y);
    return s;
  }

  friend bool operator==(const PhasePolynomial& a, const PhasePolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int n_;
  std::map<BitVec, Angle> terms_;
};

/// The pair (f, A): phase polynomial plus invertible basis transformation.
struct SumOverPaths {
  PhasePolynomial phase;
  BitMatrix transform;

  friend bool operator==(const SumOverPaths& a, const SumOverPaths& b) {
    return a.phase == b.phase && a.transform == b.transform;
  }
};

/// Integer multilinear polynomial Σ a_y x^y; the constant term (y = 0) is allowed.
struct MultilinearPoly {
  int n;
  std::map<BitVec, std::int64_t> terms;

  explicit MultilinearPoly(int n_) : n(n_) {}

  void add(const BitVec& y, std::int64_t coeff) {
    assert(y.size() == n);
    if (!coeff) return;
    auto [it, fresh] = terms.emplace(y, coeff);
    if (!fresh) {
      it->second += coeff;
      if (!it->second) terms.erase(it);
    }
  }

  std::int64_t evaluate(const BitVec& x) const {
    assert(x.size() == n);
    std::int64_t v = 0;
    for (const auto& [y, a] : terms)
      if (y.subset_of(x)) v += a;
    return v;
  }
};

namespace detail {

inline BitVec index_to_bitvec(int n, std::uint64_t idx) {
  BitVec x(n);
  for (int i = 1; i <= n; ++i)
    if ((idx >> (i - 1)) & 1) x.set(i);
  return x;
}

}  // namespace detail

/// Canonical sum-over-paths form of a {CNOT, Rz} circuit. Angles incident on
/// the same parity are summed mod 1; zero coefficients vanish.
inline SumOverPaths extract_sop(const Circuit& c) {
  std::vector<BitVec> wire(c.n + 1);
  for (int i = 1; i <= c.n; ++i) wire[i] = BitVec::unit(c.n, i);
  PhasePolynomial f(c.n);
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::Cnot:
        wire[g.target()] ^= wire[g.control()];
        break;
      case GateKind::Rz:
        f.add(wire[g.target()], g.angle);
        break;
      default:
        throw UnsupportedGate();
    }
  }
  BitMatrix a(c.n, c.n);
  for (int i = 1; i <= c.n; ++i) a.row(i) = wire[i];
  return {std::move(f), std::move(a)};
}

/// Σ_y f̂(y)·χ_y(x) as an exact rational, not reduced mod 1, so integer-valued
/// differences between equivalent expansions stay visible.
inline Rational evaluate(const PhasePolynomial& f, const BitVec& x) {
  if (x.size() != f.arity()) throw ArityMismatch();
  Rational v;
  for (const auto& [y, a] : f.terms())
    if (y.dot(x)) v += a.value();
  return v;
}

/// Two sum-over-paths forms describe the same unitary iff the transforms are
/// equal and the phase functions differ by an integer-valued function.
inline bool equivalent_sop(const SumOverPaths& s1, const SumOverPaths& s2) {
  if (s1.phase.arity() != s2.phase.arity()) throw ArityMismatch();
  const int n = s1.phase.arity();
  if (n > 20) throw ArityTooLarge();
  if (!(s1.transform == s2.transform)) return false;
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
    BitVec x = detail::index_to_bitvec(n, idx);
    if (!(evaluate(s1.phase, x) - evaluate(s2.phase, x)).is_integer()) return false;
  }
  return true;
}

/// Inclusion-exclusion expansion of the monomial x^y over the parity basis:
/// x^y = Σ_{0 ≠ y' ⊆ y} (-1)^{|y'|-1} / 2^{|y|-1} · χ_{y'}(x).
inline std::map<BitVec, Rational> monomial_fourier(const BitVec& y) {
  if (y.none()) throw ZeroIndicator();
  std::vector<int> pos;
  for (int i = 1; i <= y.size(); ++i)
    if (y.test(i)) pos.push_back(i);
  const int k = static_cast<int>(pos.size());
  const std::int64_t scale = std::int64_t{1} << (k - 1);
  std::map<BitVec, Rational> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    BitVec sub(y.size());
    int w = 0;
    for (int b = 0; b < k; ++b)
      if ((mask >> b) & 1) {
        sub.set(pos[b]);
        ++w;
      }
    out.emplace(std::move(sub), Rational((w % 2) ? 1 : -1, scale));
  }
  return out;
}

namespace detail {

/// Signed (pre mod-1) Fourier coefficients of an integer multilinear polynomial.
inline std::map<BitVec, Rational> multilinear_fourier_signed(const MultilinearPoly& k) {
  std::map<BitVec, Rational> acc;
  for (const auto& [y, a] : k.terms) {
    if (y.none()) continue;  // constant term: global phase
    for (const auto& [sub, coeff] : monomial_fourier(y)) {
      auto [it, fresh] = acc.emplace(sub, coeff * Rational(a));
      if (!fresh) it->second += coeff * Rational(a);
    }
  }
  return acc;
}

}  // namespace detail

/// Fourier coefficients of an integer-valued multilinear polynomial; all
/// coefficients are dyadic, stored mod 1.
inline PhasePolynomial multilinear_to_fourier(const MultilinearPoly& k) {
  PhasePolynomial f(k.n);
  for (const auto& [y, r] : detail::multilinear_fourier_signed(k)) f.add(y, Angle(r));
  return f;
}

/// Property harness for the minimal-support fact: when no coefficient of f is
/// dyadic, supp(f) survives adding any integer-valued function.
inline bool support_minimality_check(const PhasePolynomial& f, const MultilinearPoly& k) {
  for (const auto& [y, a] : f.terms())
    if (a.is_dyadic()) throw PreconditionViolated("phase polynomial has a dyadic coefficient");
  auto khat = detail::multilinear_fourier_signed(k);
  for (const auto& [y, a] : f.terms()) {
    Rational sum = a.value();
    auto it = khat.find(y);
    if (it != khat.end()) sum += it->second;
    if (Angle(sum).is_zero()) return false;
  }
  return true;
}

/// Coefficients over the {-1,1}-valued characters: the returned map g satisfies
/// Σ_y g(y)·(-1)^{χ_y(x)} = evaluate(f, x) for all x.
inline std::map<BitVec, Rational> to_multiplicative(const PhasePolynomial& f) {
  std::map<BitVec, Rational> out;
  Rational constant;
  for (const auto& [y, a] : f.terms()) {
    Rational half = a.value() * Rational(1, 2);
    constant += half;
    out.emplace(y, -half);
  }
  out.emplace(BitVec(f.arity()), constant);
  return out;
}

}  // namespace graysynth
