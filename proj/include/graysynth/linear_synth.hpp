#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "graysynth/bitmatrix.hpp"
#include "graysynth/circuit.hpp"
#include "graysynth/errors.hpp"

namespace graysynth {

/// Overall linear transformation of a CNOT-only circuit: A_k = E_{c_k,t_k} ... E_{c_1,t_1}.
inline BitMatrix compose_cnot_transform(const Circuit& c) {
  BitMatrix a = BitMatrix::identity(c.n);
  for (const Gate& g : c.gates) {
    if (g.kind != GateKind::Cnot) throw NonLinearGate();
    a.add_row(g.control(), g.target());
  }
  return a;
}

namespace detail {

// Eliminates everything below the diagonal section by section, recording row
// additions as (src, dst) pairs, i.e. row dst ^= row src.
inline std::vector<std::pair<int, int>> pmh_lower(BitMatrix& m, int width) {
  std::vector<std::pair<int, int>> ops;
  const int n = m.rows();
  auto patch = [&](const BitVec& row, int lo, int hi) {
    std::uint64_t p = 0;
    for (int c = lo; c <= hi; ++c) p = (p << 1) | row.test(c);
    return p;
  };
  for (int lo = 1; lo <= n; lo += width) {
    const int hi = std::min(n, lo + width - 1);
    // Fold duplicate sub-rows within the section.
    std::map<std::uint64_t, int> seen;
    for (int r = lo; r <= n; ++r) {
      std::uint64_t p = patch(m.row(r), lo, hi);
      if (!p) continue;
      auto [it, fresh] = seen.emplace(p, r);
      if (!fresh) {
        m.add_row(it->second, r);
        ops.emplace_back(it->second, r);
      }
    }
    for (int c = lo; c <= hi; ++c) {
      if (!m.at(c, c)) {
        int p = 0;
        for (int r = c + 1; r <= n; ++r)
          if (m.at(r, c)) {
            p = r;
            break;
          }
        if (!p) throw SingularMatrix();
        m.add_row(p, c);
        ops.emplace_back(p, c);
      }
      for (int r = c + 1; r <= n; ++r)
        if (m.at(r, c)) {
          m.add_row(c, r);
          ops.emplace_back(c, r);
        }
    }
  }
  return ops;
}

inline int pmh_default_width(int n) {
  int lg = 0;
  while ((1 << (lg + 1)) <= n) ++lg;
  return std::max(1, lg / 2);
}

}  // namespace detail

/// Patel-Markov-Hayes synthesis of an invertible linear transformation as a
/// CNOT circuit. Eliminates in sections of the given width (0 picks a default
/// that grows with log n); throws SingularMatrix if the matrix has no inverse.
inline Circuit pmh_synthesize(const BitMatrix& a, int section_width = 0) {
  assert(a.rows() == a.cols());
  const int n = a.rows();
  const int width = section_width > 0 ? section_width : detail::pmh_default_width(n);

  BitMatrix m = a;
  auto lower = detail::pmh_lower(m, width);  // G·A = U (upper triangular)
  BitMatrix mt = m.transposed();
  auto upper = detail::pmh_lower(mt, width);  // R·Uᵀ = I
  assert(mt.is_identity());

  // A = E_{lower[0]} ... E_{lower[k-1]} · E_{upper[j-1]}ᵀ ... E_{upper[0]}ᵀ,
  // so gates run: upper ops transposed in order, then lower ops reversed.
  Circuit c(n);
  for (auto [src, dst] : upper) c.append(Gate::cnot(dst, src));
  for (auto it = lower.rbegin(); it != lower.rend(); ++it) c.append(Gate::cnot(it->first, it->second));
  return c;
}

}  // namespace graysynth
