#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "graysynth/bitmatrix.hpp"
#include "graysynth/bitvec.hpp"
#include "graysynth/circuit.hpp"
#include "graysynth/errors.hpp"
#include "graysynth/parity_net.hpp"

namespace graysynth {

namespace detail {

// Search state: wire transform packed row-major (n bits per row) with the
// coverage mask of S appended above. Requires n*n + |S| <= 64 bits.
struct MinSearch {
  int n;
  std::vector<std::uint64_t> targets;  // packed members of S
  std::uint64_t row_mask;
  std::uint64_t full_cover;
  int cover_shift;

  explicit MinSearch(const ParitySet& s) : n(s.arity()) {
    assert(n >= 1 && n <= 7);
    for (const BitVec& y : s.members()) targets.push_back(y.low64());
    assert(n * n + static_cast<int>(targets.size()) <= 64);
    row_mask = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    cover_shift = n * n;
    full_cover = (std::uint64_t{1} << targets.size()) - 1;
  }

  std::uint64_t cover_bits(std::uint64_t row) const {
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < targets.size(); ++k)
      if (targets[k] == row) bits |= std::uint64_t{1} << k;
    return bits;
  }

  std::uint64_t initial() const {
    std::uint64_t key = 0;
    for (int i = 0; i < n; ++i) {
      std::uint64_t row = std::uint64_t{1} << i;
      key |= row << (i * n);
      key |= cover_bits(row) << cover_shift;
    }
    return key;
  }

  std::uint64_t row(std::uint64_t key, int i) const { return (key >> (i * n)) & row_mask; }

  std::uint64_t step(std::uint64_t key, int ctrl, int tgt) const {
    std::uint64_t nr = row(key, tgt) ^ row(key, ctrl);
    std::uint64_t next = key & ~(row_mask << (tgt * n));
    next |= nr << (tgt * n);
    next |= cover_bits(nr) << cover_shift;
    return next;
  }

  std::uint64_t pack_matrix(const BitMatrix& a) const {
    std::uint64_t m = 0;
    for (int i = 1; i <= n; ++i) m |= a.row(i).low64() << ((i - 1) * n);
    return m;
  }

  bool is_goal(std::uint64_t key, std::optional<std::uint64_t> pointed) const {
    if ((key >> cover_shift) != full_cover) return false;
    if (!pointed) return true;
    std::uint64_t mat = key & ((cover_shift == 64) ? ~std::uint64_t{0}
                                                   : ((std::uint64_t{1} << cover_shift) - 1));
    return mat == *pointed;
  }
};

template <bool TrackPath>
int min_parity_network_impl(const ParitySet& s, const std::optional<BitMatrix>& pointed,
                            int max_len, Circuit* out) {
  MinSearch ms(s);
  std::optional<std::uint64_t> goal_matrix;
  if (pointed) {
    assert(pointed->rows() == ms.n && pointed->cols() == ms.n);
    goal_matrix = ms.pack_matrix(*pointed);
  }

  const std::uint64_t start = ms.initial();
  std::unordered_set<std::uint64_t> visited{start};
  // parent and the (ctrl, tgt) edge that reached the state, for reconstruction
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint16_t>> parent;
  std::deque<std::uint64_t> queue{start};
  int depth = 0;
  std::size_t level = 1;

  auto reconstruct = [&](std::uint64_t key) {
    if (!TrackPath || !out) return;
    std::vector<std::pair<int, int>> edges;
    while (key != start) {
      auto [prev, edge] = parent.at(key);
      edges.emplace_back(edge >> 8, edge & 0xff);
      key = prev;
    }
    *out = Circuit(ms.n);
    for (auto it = edges.rbegin(); it != edges.rend(); ++it)
      out->append(Gate::cnot(it->first, it->second));
  };

  if (ms.is_goal(start, goal_matrix)) {
    reconstruct(start);
    return 0;
  }
  while (!queue.empty() && depth < max_len) {
    ++depth;
    std::size_t next_level = 0;
    for (std::size_t q = 0; q < level; ++q) {
      std::uint64_t key = queue.front();
      queue.pop_front();
      for (int ctrl = 1; ctrl <= ms.n; ++ctrl)
        for (int tgt = 1; tgt <= ms.n; ++tgt) {
          if (ctrl == tgt) continue;
          std::uint64_t next = ms.step(key, ctrl - 1, tgt - 1);
          if (!visited.insert(next).second) continue;
          if (TrackPath && out)
            parent.emplace(next, std::make_pair(key, static_cast<std::uint16_t>((ctrl << 8) | tgt)));
          if (ms.is_goal(next, goal_matrix)) {
            reconstruct(next);
            return depth;
          }
          queue.push_back(next);
          ++next_level;
        }
    }
    level = next_level;
  }
  throw SearchExhausted();
}

}  // namespace detail

struct MinNetworkResult {
  int length;
  Circuit circuit;
};

/// Shortest CNOT circuit covering s (and, when pointed, implementing the given
/// transform), by breadth-first search over (transform, coverage) states.
/// max_len <= 0 picks a safe upper bound.
inline MinNetworkResult min_parity_network(const ParitySet& s,
                                           const std::optional<BitMatrix>& pointed = std::nullopt,
                                           int max_len = 0) {
  if (max_len <= 0)
    max_len = (s.arity() - 1) * static_cast<int>(s.size()) + 2 * s.arity() * s.arity() + 1;
  MinNetworkResult r{0, Circuit(s.arity())};
  r.length = detail::min_parity_network_impl<true>(s, pointed, max_len, &r.circuit);
  return r;
}

inline int min_parity_network_length(const ParitySet& s,
                                     const std::optional<BitMatrix>& pointed = std::nullopt,
                                     int max_len = 0) {
  if (max_len <= 0)
    max_len = (s.arity() - 1) * static_cast<int>(s.size()) + 2 * s.arity() * s.arity() + 1;
  return detail::min_parity_network_impl<false>(s, pointed, max_len, nullptr);
}

struct GapRow {
  int size;
  double mean_graysynth;
  double mean_optimal;
  double ratio;
  int samples;
};

namespace detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// Mean gray-synth vs. exact-minimum CNOT counts over subsets of F_2^n \ {0}
/// of each requested size. Enumerates the whole population when it has at
/// most `samples` members, otherwise samples that many distinct subsets.
inline std::vector<GapRow> gap_experiment(int n, const std::vector<int>& sizes, int samples,
                                          std::uint64_t seed, int jobs = 1) {
  assert(n >= 1 && n <= 4);
  const int universe = (1 << n) - 1;
  std::vector<BitVec> elements;
  for (int idx = 1; idx <= universe; ++idx)
    elements.push_back(detail::index_to_bitvec(n, static_cast<std::uint64_t>(idx)));

  std::mt19937_64 rng(seed);
  struct Instance {
    int size_index;
    ParitySet set;
  };
  std::vector<Instance> instances;
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    const int size = sizes[si];
    assert(size >= 1 && size <= universe);
    if (detail::binomial(universe, size) <= static_cast<std::uint64_t>(samples)) {
      std::vector<int> pick(size);
      for (int i = 0; i < size; ++i) pick[i] = i;
      for (;;) {
        ParitySet s(n);
        for (int i : pick) s.insert(elements[i]);
        instances.push_back({static_cast<int>(si), std::move(s)});
        int j = size - 1;
        while (j >= 0 && pick[j] == universe - size + j) --j;
        if (j < 0) break;
        ++pick[j];
        for (int l = j + 1; l < size; ++l) pick[l] = pick[l - 1] + 1;
      }
    } else {
      std::set<std::vector<int>> chosen;
      while (static_cast<int>(chosen.size()) < samples) {
        std::vector<int> pool(universe);
        for (int i = 0; i < universe; ++i) pool[i] = i;
        for (int i = 0; i < size; ++i) {
          std::uniform_int_distribution<int> d(i, universe - 1);
          std::swap(pool[i], pool[d(rng)]);
        }
        std::vector<int> key(pool.begin(), pool.begin() + size);
        std::sort(key.begin(), key.end());
        if (!chosen.insert(key).second) continue;
        ParitySet s(n);
        for (int i : key) s.insert(elements[i]);
        instances.push_back({static_cast<int>(si), std::move(s)});
      }
    }
  }

  std::vector<std::pair<long, long>> counts(instances.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < instances.size(); i += stride) {
      long g = gray_synth(instances[i].set).circuit.count(GateKind::Cnot);
      long o = min_parity_network_length(instances[i].set);
      counts[i] = {g, o};
    }
  };
  if (jobs <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work, static_cast<std::size_t>(t), jobs);
    for (auto& t : pool) t.join();
  }

  std::vector<GapRow> rows;
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    double sum_g = 0, sum_o = 0;
    int k = 0;
    for (std::size_t i = 0; i < instances.size(); ++i)
      if (instances[i].size_index == static_cast<int>(si)) {
        sum_g += counts[i].first;
        sum_o += counts[i].second;
        ++k;
      }
    double mg = k ? sum_g / k : 0.0;
    double mo = k ? sum_o / k : 0.0;
    double ratio = mo > 0 ? mg / mo : 1.0;
    rows.push_back({sizes[si], mg, mo, ratio, k});
  }
  return rows;
}

// --- constructive reductions ---

struct HtspInstance {
  std::set<BitVec> s;  // hypercube vertices to visit, 0 origin implied
  int k;
};

struct MpnpFtInstance {
  std::set<BitVec> s;  // parities over n+1 wires, last coordinate always 1
  int k;
};

/// Pads every vertex with a trailing 1 so a fixed-target network on n+1 wires
/// exists: S' = { y‖1 : y ∈ S }, k' = k.
inline MpnpFtInstance htsp_to_mpnpft(const HtspInstance& inst) {
  MpnpFtInstance out{{}, inst.k};
  for (const BitVec& y : inst.s) {
    BitVec padded(y.size() + 1);
    for (int i = 1; i <= y.size(); ++i)
      if (y.test(i)) padded.set(i);
    padded.set(y.size() + 1);
    out.s.insert(padded);
  }
  return out;
}

/// A bit-flip tour becomes a fixed-target circuit: flip on i ↦ CNOT(i, target).
inline Circuit tour_to_circuit(const std::vector<int>& flips, int n, int target) {
  assert(target >= 1 && target <= n);
  Circuit c(n);
  for (int i : flips) {
    assert(i >= 1 && i <= n && i != target);
    c.append(Gate::cnot(i, target));
  }
  return c;
}

/// Inverse of tour_to_circuit; throws MixedTargets unless all CNOTs share one target.
inline std::vector<int> circuit_to_tour(const Circuit& c) {
  std::vector<int> flips;
  int target = 0;
  for (const Gate& g : c.gates) {
    if (g.kind != GateKind::Cnot) throw MixedTargets("non-CNOT gate in fixed-target circuit");
    if (target == 0) target = g.target();
    if (g.target() != target) throw MixedTargets();
    flips.push_back(g.control());
  }
  return flips;
}

struct MldpInstance {
  BitMatrix h;
  BitVec y;
  int k;
};

struct MpnpEInstance {
  ParitySet s;
  BitMatrix e;
  int k;
};

/// Decoding instance as an encoded-input synthesis instance: a weight-k
/// solution of Hw = y is a k-1 CNOT parity computation, and conversely.
/// S = {y}, E = Hᵀ, k' = k - 1.
inline MpnpEInstance mldp_to_mpnpe(const MldpInstance& inst) {
  assert(inst.k >= 1);
  ParitySet s(inst.y.size());
  s.insert(inst.y);
  return {std::move(s), inst.h.transposed(), inst.k - 1};
}

}  // namespace graysynth
