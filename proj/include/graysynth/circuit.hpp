#pragma once

#include <cassert>
#include <initializer_list>
#include <vector>

#include "graysynth/angle.hpp"

namespace graysynth {

enum class GateKind { Cnot, Not, H, Rz, Toffoli, Mcx, Ccz };

/// One gate on 1-based wire indices. For multi-wire gates the target is the
/// last wire; all wires of a gate are distinct.
struct Gate {
  GateKind kind;
  std::vector<int> wires;
  Angle angle;  // Rz only

  static Gate cnot(int control, int target) { return {GateKind::Cnot, {control, target}, {}}; }
  static Gate not_gate(int target) { return {GateKind::Not, {target}, {}}; }
  static Gate h(int target) { return {GateKind::H, {target}, {}}; }
  static Gate rz(Angle a, int target) { return {GateKind::Rz, {target}, a}; }
  static Gate toffoli(int c1, int c2, int target) {
    return {GateKind::Toffoli, {c1, c2, target}, {}};
  }
  static Gate mcx(std::vector<int> controls, int target) {
    controls.push_back(target);
    return {GateKind::Mcx, std::move(controls), {}};
  }
  static Gate ccz(int a, int b, int c) { return {GateKind::Ccz, {a, b, c}, {}}; }

  int target() const { return wires.back(); }
  int control() const {
    assert(kind == GateKind::Cnot);
    return wires[0];
  }

  friend bool operator==(const Gate& a, const Gate& b) {
    return a.kind == b.kind && a.wires == b.wires && a.angle == b.angle;
  }
};

/// Ordered gate list on n wires.
struct Circuit {
  int n = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int n_) : n(n_) { assert(n_ >= 0); }

  void append(Gate g) {
#ifndef NDEBUG
    for (std::size_t i = 0; i < g.wires.size(); ++i) {
      assert(g.wires[i] >= 1 && g.wires[i] <= n);
      for (std::size_t j = i + 1; j < g.wires.size(); ++j) assert(g.wires[i] != g.wires[j]);
    }
#endif
    gates.push_back(std::move(g));
  }
  void append(const Circuit& c) {
    assert(c.n <= n);
    for (const Gate& g : c.gates) append(g);
  }

  std::size_t size() const { return gates.size(); }

  int count(GateKind k) const {
    int c = 0;
    for (const Gate& g : gates) c += (g.kind == k);
    return c;
  }

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.n == b.n && a.gates == b.gates;
  }
};

}  // namespace graysynth
