#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "graysynth/bitmatrix.hpp"
#include "graysynth/bitvec.hpp"
#include "graysynth/circuit.hpp"
#include "graysynth/errors.hpp"
#include "graysynth/linear_synth.hpp"
#include "graysynth/phase_poly.hpp"

namespace graysynth {

/// Set of distinct nonzero parity indicators over n variables.
class ParitySet {
 public:
  explicit ParitySet(int n) : n_(n) {}

  static ParitySet of(int n, std::initializer_list<const char*> strings) {
    ParitySet s(n);
    for (const char* str : strings) s.insert(BitVec::from_string(str));
    return s;
  }

  /// All nonzero vectors of F_2^n.
  static ParitySet full(int n) {
    ParitySet s(n);
    for (std::uint64_t idx = 1; idx < (std::uint64_t{1} << n); ++idx)
      s.insert(detail::index_to_bitvec(n, idx));
    return s;
  }

  void insert(const BitVec& y) {
    assert(y.size() == n_);
    if (y.none()) throw ZeroParity();
    if (!m_.insert(y).second) throw DuplicateParity();
  }

  int arity() const { return n_; }
  std::size_t size() const { return m_.size(); }
  bool contains(const BitVec& y) const { return m_.count(y) != 0; }
  const std::set<BitVec>& members() const& { return m_; }
  std::set<BitVec> members() && { return std::move(m_); }

 private:
  int n_;
  std::set<BitVec> m_;
};

/// Per-wire annotation history of a CNOT circuit, starting from the inputs e_i.
struct ParityTrace {
  std::vector<std::vector<BitVec>> wire;  // wire[i-1]: states of wire i in order
  std::set<BitVec> seen;                  // union over all wires and times
};

inline ParityTrace annotate(const Circuit& c, int n) {
  assert(c.n == n);
  ParityTrace t;
  t.wire.resize(n);
  std::vector<BitVec> cur(n + 1);
  for (int i = 1; i <= n; ++i) {
    cur[i] = BitVec::unit(n, i);
    t.wire[i - 1].push_back(cur[i]);
    t.seen.insert(cur[i]);
  }
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Rz) continue;  // does not change annotations
    if (g.kind != GateKind::Cnot) throw UnsupportedGate();
    cur[g.target()] ^= cur[g.control()];
    t.wire[g.target() - 1].push_back(cur[g.target()]);
    t.seen.insert(cur[g.target()]);
  }
  return t;
}

inline bool is_parity_network(const Circuit& c, const ParitySet& s) {
  ParityTrace t = annotate(c, s.arity());
  for (const BitVec& y : s.members())
    if (!t.seen.count(y)) return false;
  return true;
}

struct GraySynthResult {
  Circuit circuit;
  BitMatrix transform;
};

namespace detail {

struct GrayNode {
  // Pending parities: (expression over current wire states, original vector).
  // The second component only backs the invariant assertions.
  std::vector<std::pair<BitVec, BitVec>> vecs;
  std::vector<int> cand;  // unexamined indices, ascending
  int target = 0;         // 0 while no target wire is assigned
};

}  // namespace detail

/// Gray-code-inspired parity network synthesis. Splits the set on the index
/// whose cofactor is largest (ties to the smallest index), keeps a designated
/// target per 1-branch, and re-expresses every pending parity over the current
/// wire states after each CNOT instead of uncomputing. Deterministic.
inline GraySynthResult gray_synth(const ParitySet& s) {
  const int n = s.arity();
  Circuit c(n);
  BitMatrix a = BitMatrix::identity(n);

  std::vector<detail::GrayNode> stack;
  {
    detail::GrayNode root;
    for (const BitVec& y : s.members()) root.vecs.emplace_back(y, y);
    for (int i = 1; i <= n; ++i) root.cand.push_back(i);
    stack.push_back(std::move(root));
  }

#ifndef NDEBUG
  // A pending vector always denotes its original parity through the current
  // transform: XOR of the rows of a selected by it recovers the original.
  auto invariant = [&](const detail::GrayNode& node) {
    for (const auto& [cur, orig] : node.vecs) {
      BitVec acc(n);
      for (int i = 1; i <= n; ++i)
        if (cur.test(i)) acc ^= a.row(i);
      if (!(acc == orig)) return false;
    }
    return true;
  };
#endif

  while (!stack.empty()) {
    detail::GrayNode node = std::move(stack.back());
    stack.pop_back();
    if (node.vecs.empty()) continue;

    if (node.target != 0) {
      // Zero out rows that are 1 in every pending parity, one CNOT each.
      for (;;) {
        int ctrl = 0;
        for (int j = 1; j <= n && !ctrl; ++j) {
          if (j == node.target) continue;
          bool all = true;
          for (const auto& [cur, orig] : node.vecs)
            if (!cur.test(j)) {
              all = false;
              break;
            }
          if (all) ctrl = j;
        }
        if (!ctrl) break;
        c.append(Gate::cnot(ctrl, node.target));
        a.add_row(ctrl, node.target);
        auto update = [&](std::pair<BitVec, BitVec>& y) {
          if (y.first.test(node.target)) y.first.flip(ctrl);  // y ← E_{target,ctrl}·y
        };
        for (auto& y : node.vecs) update(y);
        for (detail::GrayNode& other : stack)
          for (auto& y : other.vecs) update(y);
#ifndef NDEBUG
        assert(invariant(node));
        for (const detail::GrayNode& other : stack) assert(invariant(other));
#endif
      }
    }

    if (node.cand.empty()) continue;

    // Index maximizing the larger cofactor; ties go to the smallest index.
    int best = node.cand.front();
    std::size_t best_count = 0;
    for (int j : node.cand) {
      std::size_t ones = 0;
      for (const auto& [cur, orig] : node.vecs) ones += cur.test(j);
      std::size_t count = std::max(ones, node.vecs.size() - ones);
      if (count > best_count) {
        best_count = count;
        best = j;
      }
    }

    detail::GrayNode zero, one;
    zero.target = node.target;
    one.target = node.target != 0 ? node.target : best;
    for (int j : node.cand)
      if (j != best) {
        zero.cand.push_back(j);
        one.cand.push_back(j);
      }
    for (auto& y : node.vecs)
      (y.first.test(best) ? one.vecs : zero.vecs).push_back(std::move(y));

    stack.push_back(std::move(one));
    stack.push_back(std::move(zero));  // 0-cofactor is processed first
  }

  return {std::move(c), std::move(a)};
}

/// Parity network for s whose overall transformation is exactly a_target:
/// gray_synth followed by Patel-Markov-Hayes on the residual.
inline Circuit synth_pointed(const ParitySet& s, const BitMatrix& a_target) {
  assert(a_target.rows() == s.arity() && a_target.cols() == s.arity());
  GraySynthResult gs = gray_synth(s);
  Circuit rest = pmh_synthesize(a_target * invert(gs.transform));
  gs.circuit.append(rest);
  return gs.circuit;
}

/// Circuit over {CNOT, Rz} with sum-over-paths form exactly (f, a_target).
/// Each support element receives one Rz at the first time its parity appears.
inline Circuit synth_phase_circuit(const PhasePolynomial& f, const BitMatrix& a_target) {
  const int n = f.arity();
  assert(a_target.rows() == n && a_target.cols() == n);
  ParitySet s(n);
  for (const auto& [y, angle] : f.terms()) s.insert(y);
  GraySynthResult gs = gray_synth(s);
  Circuit skeleton = std::move(gs.circuit);
  skeleton.append(pmh_synthesize(a_target * invert(gs.transform)));

  std::map<BitVec, Angle> remaining(f.terms().begin(), f.terms().end());
  Circuit out(n);
  std::vector<BitVec> wire(n + 1);
  auto place = [&](int w) {
    auto it = remaining.find(wire[w]);
    if (it != remaining.end()) {
      out.append(Gate::rz(it->second, w));
      remaining.erase(it);
    }
  };
  for (int i = 1; i <= n; ++i) {
    wire[i] = BitVec::unit(n, i);
    place(i);
  }
  for (const Gate& g : skeleton.gates) {
    out.append(g);
    wire[g.target()] ^= wire[g.control()];
    place(g.target());
  }
  assert(remaining.empty());
  return out;
}

namespace detail {

/// Solve eᵀ·w = y. Prefers a wire whose initial state already is y, otherwise
/// falls back to the generalized inverse of eᵀ (precomputed by the caller).
inline BitVec preimage(const BitMatrix& e, const BitMatrix& et, const BitMatrix& etg,
                       const BitVec& y) {
  for (int i = 1; i <= e.rows(); ++i)
    if (e.row(i) == y) return BitVec::unit(e.rows(), i);
  BitVec w = etg * y;
  if (!(et * w == y)) throw InfeasibleParity();
  return w;
}

}  // namespace detail

/// Some w with Eᵀw = y; throws InfeasibleParity when y is outside the column
/// space of Eᵀ. No weight minimization beyond recognizing an existing wire.
inline BitVec find_preimage(const BitMatrix& e, const BitVec& y) {
  if (y.size() != e.cols()) throw ArityMismatch();
  BitMatrix et = e.transposed();
  return detail::preimage(e, et, generalized_inverse(et), y);
}

/// Parity network over m wires for parities of n encoded variables: each
/// y ∈ s is realized through a preimage under eᵀ, then synthesized as usual.
inline Circuit synth_encoded(const ParitySet& s, const BitMatrix& e) {
  assert(e.cols() == s.arity());
  BitMatrix et = e.transposed();
  BitMatrix etg = generalized_inverse(et);
  ParitySet sw(e.rows());
  for (const BitVec& y : s.members()) sw.insert(detail::preimage(e, et, etg, y));
  return gray_synth(sw).circuit;
}

namespace detail {

inline std::vector<int> ruler_gray_flips(const std::vector<int>& coords) {
  // Reflected Gray cycle over the given coordinates, most significant first;
  // 2^m flips, ending back at the all-zeros vertex.
  const int m = static_cast<int>(coords.size());
  std::vector<int> flips;
  if (m == 0) return flips;
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << m); ++k) {
    int low = std::countr_zero(k);
    flips.push_back(coords[m - 1 - low]);
  }
  flips.push_back(coords[0]);
  return flips;
}

}  // namespace detail

/// Fixed-target synthesis: all CNOTs share one target wire. When the vertex
/// set is all of F_2^{n-1} the circuit is the full reflected Gray cycle;
/// otherwise a greedy nearest-Hamming-neighbor tour from 0 covers the set.
/// Throws NoCommonTarget when no coordinate is set in every parity.
inline Circuit fixed_target_synth(const ParitySet& s) {
  const int n = s.arity();
  int target = 0;
  for (int i = 1; i <= n && !target; ++i) {
    bool all = true;
    for (const BitVec& y : s.members())
      if (!y.test(i)) {
        all = false;
        break;
      }
    if (all) target = i;
  }
  if (!target) throw NoCommonTarget();

  // Tour vertices: parities with the target coordinate stripped.
  std::set<BitVec> vertices;
  for (BitVec y : s.members()) {
    y.set(target, false);
    vertices.insert(y);
  }

  Circuit c(n);
  std::vector<int> coords;
  for (int i = 1; i <= n; ++i)
    if (i != target) coords.push_back(i);

  const bool complete =
      coords.empty() ? true : vertices.size() == (std::uint64_t{1} << coords.size());
  if (complete) {
    for (int flip : detail::ruler_gray_flips(coords)) c.append(Gate::cnot(flip, target));
    return c;
  }

  auto lex_less = [n](const BitVec& a, const BitVec& b) {
    for (int i = 1; i <= n; ++i)
      if (a.test(i) != b.test(i)) return !a.test(i);
    return false;
  };
  BitVec cur(n);
  std::set<BitVec> todo = vertices;
  todo.erase(cur);
  while (!todo.empty()) {
    auto best = todo.end();
    int best_dist = n + 1;
    for (auto it = todo.begin(); it != todo.end(); ++it) {
      int d = (*it ^ cur).weight();
      if (d < best_dist || (d == best_dist && best != todo.end() && lex_less(*it, *best))) {
        best_dist = d;
        best = it;
      }
    }
    BitVec next = *best;
    todo.erase(best);
    BitVec diff = next ^ cur;
    for (int i = 1; i <= n; ++i)
      if (diff.test(i)) c.append(Gate::cnot(i, target));
    cur = next;
  }
  return c;
}

}  // namespace graysynth
