#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "graysynth/bitmatrix.hpp"
#include "graysynth/bitvec.hpp"
#include "graysynth/circuit.hpp"
#include "graysynth/errors.hpp"
#include "graysynth/linear_synth.hpp"
#include "graysynth/parity_net.hpp"

namespace graysynth {

enum class ToffoliTemplate {
  SevenCnot,  // T-depth-3 arrangement, 7 CNOTs
  SixCnot,    // sequential arrangement, 6 CNOTs
};

namespace detail {

/// Doubly-controlled Z on wires (a, b, t) as CNOTs and ±1/8 rotations on the
/// seven nonzero parities of the three wires. Overall transformation is the
/// identity for both arrangements.
inline void append_ccz(Circuit& c, int a, int b, int t, ToffoliTemplate tpl) {
  const Angle T(1, 8), Td(7, 8), S3(3, 8);
  if (tpl == ToffoliTemplate::SevenCnot) {
    c.append(Gate::rz(T, a));
    c.append(Gate::rz(T, b));
    c.append(Gate::rz(T, t));
    c.append(Gate::cnot(b, t));  // t: b⊕t
    c.append(Gate::cnot(a, b));  // b: a⊕b
    c.append(Gate::rz(Td, b));
    c.append(Gate::rz(Td, t));
    c.append(Gate::cnot(t, b));  // b: a⊕t
    c.append(Gate::cnot(a, t));  // t: a⊕b⊕t
    c.append(Gate::rz(Td, b));
    c.append(Gate::rz(T, t));
    c.append(Gate::cnot(t, b));  // b: b
    c.append(Gate::cnot(a, t));  // t: b⊕t
    c.append(Gate::cnot(b, t));  // t: t
  } else {
    // The six-CNOT arrangement walks the parities sequentially on two wires.
    c.append(Gate::rz(T, a));
    c.append(Gate::rz(T, b));
    c.append(Gate::cnot(t, a));  // a: a⊕t
    c.append(Gate::cnot(b, t));  // t: b⊕t
    c.append(Gate::rz(S3, a));
    c.append(Gate::rz(S3, t));
    c.append(Gate::cnot(b, a));  // a: a⊕b⊕t
    c.append(Gate::cnot(b, t));  // t: t
    c.append(Gate::rz(T, a));
    c.append(Gate::cnot(t, a));  // a: a⊕b
    c.append(Gate::rz(S3, a));
    c.append(Gate::rz(T, t));
    c.append(Gate::cnot(b, a));  // a: a
  }
}

}  // namespace detail

/// Replace every Toffoli (and stored CCZ) with a Clifford+T network; the
/// default template costs 7 CNOTs and 7 T-type rotations per Toffoli.
inline Circuit decompose_toffoli(const Circuit& c,
                                 ToffoliTemplate tpl = ToffoliTemplate::SevenCnot) {
  Circuit out(c.n);
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::Toffoli:
        out.append(Gate::h(g.target()));
        detail::append_ccz(out, g.wires[0], g.wires[1], g.target(), tpl);
        out.append(Gate::h(g.target()));
        break;
      case GateKind::Ccz:
        detail::append_ccz(out, g.wires[0], g.wires[1], g.wires[2], tpl);
        break;
      case GateKind::Mcx:
        if (g.wires.size() > 3) throw UnsupportedGate("decompose multiply-controlled gates first");
        if (g.wires.size() == 3) {
          out.append(Gate::h(g.target()));
          detail::append_ccz(out, g.wires[0], g.wires[1], g.target(), tpl);
          out.append(Gate::h(g.target()));
        } else {
          out.append(g.wires.size() == 2 ? Gate::cnot(g.wires[0], g.wires[1])
                                         : Gate::not_gate(g.target()));
        }
        break;
      default:
        out.append(g);
    }
  }
  return out;
}

/// Expand k-controlled Toffolis (k ≥ 3) into 2k-3 Toffolis using k-2 ancilla
/// wires appended to the circuit, computed and uncomputed in a chain.
inline Circuit decompose_mcx(const Circuit& c) {
  int extra = 0;
  for (const Gate& g : c.gates)
    if (g.kind == GateKind::Mcx)
      extra = std::max(extra, static_cast<int>(g.wires.size()) - 3);
  Circuit out(c.n + extra);
  for (const Gate& g : c.gates) {
    if (g.kind != GateKind::Mcx) {
      out.append(g);
      continue;
    }
    const int k = static_cast<int>(g.wires.size()) - 1;
    if (k == 1) {
      out.append(Gate::cnot(g.wires[0], g.target()));
      continue;
    }
    if (k == 2) {
      out.append(Gate::toffoli(g.wires[0], g.wires[1], g.target()));
      continue;
    }
    auto anc = [&](int i) { return c.n + i; };  // i in 1..k-2
    std::vector<Gate> compute;
    compute.push_back(Gate::toffoli(g.wires[0], g.wires[1], anc(1)));
    for (int i = 2; i <= k - 2; ++i)
      compute.push_back(Gate::toffoli(g.wires[i], anc(i - 1), anc(i)));
    for (const Gate& t : compute) out.append(t);
    out.append(Gate::toffoli(g.wires[k - 1], anc(k - 2), g.target()));
    for (auto it = compute.rbegin(); it != compute.rend(); ++it) out.append(*it);
  }
  return out;
}

namespace detail {

/// Incremental row-space membership over GF(2).
class RowSpace {
 public:
  void insert(BitVec v) {
    for (const BitVec& b : basis_) {
      int p = pivot_of(b);
      if (v.test(p)) v ^= b;
    }
    if (v.any()) basis_.push_back(std::move(v));
  }
  bool contains(BitVec v) const {
    for (const BitVec& b : basis_) {
      int p = pivot_of(b);
      if (v.test(p)) v ^= b;
    }
    return v.none();
  }

 private:
  static int pivot_of(const BitVec& b) {
    for (int i = 1; i <= b.size(); ++i)
      if (b.test(i)) return i;
    return 0;
  }
  std::vector<BitVec> basis_;
};

}  // namespace detail

/// Re-synthesize a {CNOT, NOT, H, Rz} circuit region by region. Rotations are
/// folded onto parities of the inputs and path variables; a parity is only
/// synthesized once no later region can still express it, so rotations merge
/// across Hadamards. The unitary is preserved up to global phase.
inline Circuit optimize(const Circuit& c) {
  const int n = c.n;
  const int vtot = n + c.count(GateKind::H);

  std::vector<BitVec> wire(n + 1), checkpoint(n + 1);
  for (int i = 1; i <= n; ++i) wire[i] = checkpoint[i] = BitVec::unit(vtot, i);
  std::vector<char> affine(n + 1, 0);
  std::map<BitVec, Angle> pending;
  Circuit out(n);
  int vars = n;

  auto add_pending = [&](const BitVec& y, const Angle& th) {
    if (th.is_zero()) return;
    auto [it, fresh] = pending.emplace(y, th);
    if (!fresh) {
      it->second += th;
      if (it->second.is_zero()) pending.erase(it);
    }
  };

  // Emit a CNOT segment taking the wires from `checkpoint` to `wire` while
  // passing through every parity in `terms`, each of which receives its
  // merged rotation at first occurrence.
  auto flush = [&](const std::vector<std::pair<BitVec, Angle>>& terms) {
    BitMatrix cp(n, vtot), tgt(n, vtot);
    for (int i = 1; i <= n; ++i) {
      cp.row(i) = checkpoint[i];
      tgt.row(i) = wire[i];
    }
    BitMatrix cpt = cp.transposed();
    BitMatrix cptg = generalized_inverse(cpt);
    ParitySet sw(n);
    for (const auto& [y, th] : terms) sw.insert(detail::preimage(cp, cpt, cptg, y));
    GraySynthResult gs = gray_synth(sw);
    BitMatrix residual = tgt * generalized_inverse(cp) * invert(gs.transform);
    Circuit skeleton = std::move(gs.circuit);
    skeleton.append(pmh_synthesize(residual));

    std::map<BitVec, Angle> remaining(terms.begin(), terms.end());
    std::vector<BitVec> state(checkpoint);
    auto place = [&](int w) {
      auto it = remaining.find(state[w]);
      if (it != remaining.end()) {
        out.append(Gate::rz(it->second, w));
        remaining.erase(it);
      }
    };
    for (int i = 1; i <= n; ++i) place(i);
    for (const Gate& g : skeleton.gates) {
      out.append(g);
      state[g.target()] ^= state[g.control()];
      place(g.target());
    }
    assert(remaining.empty());
  };

  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::Cnot:
        wire[g.target()] ^= wire[g.control()];
        affine[g.target()] ^= affine[g.control()];
        break;
      case GateKind::Not:
        affine[g.target()] ^= 1;
        break;
      case GateKind::Rz:
        // A rotation on χ⊕1 is -θ on χ plus a discarded global phase.
        add_pending(wire[g.target()], affine[g.target()] ? -g.angle : g.angle);
        break;
      case GateKind::H: {
        const int q = g.target();
        detail::RowSpace others;
        for (int i = 1; i <= n; ++i)
          if (i != q) others.insert(wire[i]);
        std::vector<std::pair<BitVec, Angle>> force;
        for (const auto& [y, th] : pending)
          if (!others.contains(y)) force.emplace_back(y, th);
        flush(force);
        for (const auto& [y, th] : force) pending.erase(y);
        if (affine[q]) {
          out.append(Gate::not_gate(q));
          affine[q] = 0;
        }
        out.append(Gate::h(q));
        wire[q] = BitVec::unit(vtot, ++vars);
        for (int i = 1; i <= n; ++i) checkpoint[i] = wire[i];
#ifndef NDEBUG
        detail::RowSpace all;
        for (int i = 1; i <= n; ++i) all.insert(wire[i]);
        for (const auto& [y, th] : pending) assert(all.contains(y));
#endif
        break;
      }
      default:
        throw UnsupportedGate("decompose Toffoli-family gates before optimizing");
    }
  }

  flush({pending.begin(), pending.end()});
  for (int i = 1; i <= n; ++i)
    if (affine[i]) out.append(Gate::not_gate(i));
  return out;
}

/// Gate counts plus greedy T-depth: walking in order, a T-type rotation joins
/// the earliest layer after its wires' last dependency.
struct CircuitStats {
  long cnot_count = 0;
  long t_count = 0;
  long t_depth = 0;
  long h_count = 0;
  long rz_count = 0;
  long total = 0;
};

inline CircuitStats stats(const Circuit& c) {
  CircuitStats st;
  std::vector<long> layer(c.n + 1, 0);
  for (const Gate& g : c.gates) {
    ++st.total;
    bool t_type = false;
    switch (g.kind) {
      case GateKind::Cnot:
        ++st.cnot_count;
        break;
      case GateKind::H:
        ++st.h_count;
        break;
      case GateKind::Rz:
        ++st.rz_count;
        t_type = g.angle.den() == 8;
        if (t_type) ++st.t_count;
        break;
      default:
        break;
    }
    long d = 0;
    for (int w : g.wires) d = std::max(d, layer[w]);
    if (t_type) ++d;
    for (int w : g.wires) layer[w] = d;
  }
  for (int i = 1; i <= c.n; ++i) st.t_depth = std::max(st.t_depth, layer[i]);
  return st;
}

}  // namespace graysynth
