#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace graysynth {

/// Fixed-length vector over GF(2), bit-packed into 64-bit words.
/// Indexing is 1-based to match wire and variable numbering.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) { assert(n >= 0); }

  static BitVec unit(int n, int i) {
    BitVec v(n);
    v.set(i);
    return v;
  }

  /// Position 1 of the string is coordinate 1.
  static BitVec from_string(std::string_view s) {
    BitVec v(static_cast<int>(s.size()));
    for (int i = 1; i <= v.n_; ++i) {
      assert(s[i - 1] == '0' || s[i - 1] == '1');
      if (s[i - 1] == '1') v.set(i);
    }
    return v;
  }

  int size() const { return n_; }

  bool test(int i) const {
    assert(i >= 1 && i <= n_);
    return (w_[(i - 1) >> 6] >> ((i - 1) & 63)) & 1u;
  }
  void set(int i, bool value = true) {
    assert(i >= 1 && i <= n_);
    std::uint64_t mask = std::uint64_t{1} << ((i - 1) & 63);
    if (value)
      w_[(i - 1) >> 6] |= mask;
    else
      w_[(i - 1) >> 6] &= ~mask;
  }
  void flip(int i) {
    assert(i >= 1 && i <= n_);
    w_[(i - 1) >> 6] ^= std::uint64_t{1} << ((i - 1) & 63);
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int weight() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  BitVec& operator^=(const BitVec& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  BitVec& operator&=(const BitVec& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

  bool subset_of(const BitVec& o) const {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  /// χ_this(x): parity of the AND with x.
  bool dot(const BitVec& x) const {
    assert(n_ == x.n_);
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & x.w_[k];
    return std::popcount(acc) & 1;
  }

  /// Packed value; only valid for size() <= 64.
  std::uint64_t low64() const {
    assert(n_ <= 64);
    return w_.empty() ? 0 : w_[0];
  }

  std::string str() const {
    std::string s(n_, '0');
    for (int i = 1; i <= n_; ++i)
      if (test(i)) s[i - 1] = '1';
    return s;
  }

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (std::size_t k = 0; k < a.w_.size(); ++k)
      if (auto c = a.w_[k] <=> b.w_[k]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace graysynth
