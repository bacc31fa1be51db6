#pragma once

#include <cassert>
#include <vector>

#include "graysynth/bitvec.hpp"
#include "graysynth/errors.hpp"

namespace graysynth {

/// Dense matrix over GF(2); rows are BitVecs, indices 1-based.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), r_(rows, BitVec(cols)) {
    assert(rows >= 0 && cols >= 0);
  }

  static BitMatrix identity(int n) {
    BitMatrix m(n, n);
    for (int i = 1; i <= n; ++i) m.set(i, i, true);
    return m;
  }
  static BitMatrix zero(int rows, int cols) { return BitMatrix(rows, cols); }

  static BitMatrix from_rows(std::initializer_list<const char*> rows) {
    BitMatrix m;
    for (const char* r : rows) m.append_row(BitVec::from_string(r));
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const BitVec& row(int i) const {
    assert(i >= 1 && i <= rows_);
    return r_[i - 1];
  }
  BitVec& row(int i) {
    assert(i >= 1 && i <= rows_);
    return r_[i - 1];
  }

  bool at(int i, int j) const { return row(i).test(j); }
  void set(int i, int j, bool v) { row(i).set(j, v); }

  void append_row(const BitVec& v) {
    assert(rows_ == 0 || v.size() == cols_);
    cols_ = v.size();
    r_.push_back(v);
    ++rows_;
  }

  /// row dst ^= row src; left multiplication by the elementary matrix E_{src,dst}.
  void add_row(int src, int dst) {
    assert(src != dst);
    row(dst) ^= row(src);
  }

  /// Swap via three XORs so the operation stays a product of elementary additions.
  void swap_rows(int i, int j) {
    if (i == j) return;
    add_row(i, j);
    add_row(j, i);
    add_row(i, j);
  }

  /// col dst ^= col src; right multiplication by E_{dst,src}.
  void add_col(int src, int dst) {
    assert(src != dst);
    for (int i = 1; i <= rows_; ++i)
      if (at(i, src)) row(i).flip(dst);
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    add_col(i, j);
    add_col(j, i);
    add_col(i, j);
  }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (int i = 1; i <= rows_; ++i)
      for (int j = 1; j <= cols_; ++j)
        if (at(i, j)) t.set(j, i, true);
    return t;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 1; i <= rows_; ++i)
      if (row(i) != BitVec::unit(cols_, i)) return false;
    return true;
  }

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    assert(a.cols_ == b.rows_);
    BitMatrix c(a.rows_, b.cols_);
    for (int i = 1; i <= a.rows_; ++i)
      for (int k = 1; k <= a.cols_; ++k)
        if (a.at(i, k)) c.row(i) ^= b.row(k);
    return c;
  }
  friend BitVec operator*(const BitMatrix& a, const BitVec& x) {
    assert(a.cols_ == x.size());
    BitVec y(a.rows_);
    for (int i = 1; i <= a.rows_; ++i)
      if (a.row(i).dot(x)) y.set(i);
    return y;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.r_ == b.r_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BitVec> r_;
};

struct Echelon {
  BitMatrix r;  ///< row-echelon form of the input
  int rank = 0;
  BitMatrix p;  ///< invertible; p * input == r
};

/// Row echelon form with the lowest-index nonzero pivot in each column.
inline Echelon row_echelon(const BitMatrix& m) {
  Echelon e{m, 0, BitMatrix::identity(m.rows())};
  int next = 1;
  for (int c = 1; c <= m.cols() && next <= m.rows(); ++c) {
    int pivot = 0;
    for (int i = next; i <= m.rows(); ++i)
      if (e.r.at(i, c)) {
        pivot = i;
        break;
      }
    if (!pivot) continue;
    if (pivot != next) {
      e.r.swap_rows(pivot, next);
      e.p.swap_rows(pivot, next);
    }
    for (int i = next + 1; i <= m.rows(); ++i)
      if (e.r.at(i, c)) {
        e.r.add_row(next, i);
        e.p.add_row(next, i);
      }
    ++next;
  }
  e.rank = next - 1;
  return e;
}

inline int rank_of(const BitMatrix& m) { return row_echelon(m).rank; }

/// Inverse of a square invertible matrix; throws SingularMatrix otherwise.
inline BitMatrix invert(const BitMatrix& a) {
  assert(a.rows() == a.cols());
  int n = a.rows();
  BitMatrix m = a;
  BitMatrix p = BitMatrix::identity(n);
  for (int c = 1; c <= n; ++c) {
    int pivot = 0;
    for (int i = c; i <= n; ++i)
      if (m.at(i, c)) {
        pivot = i;
        break;
      }
    if (!pivot) throw SingularMatrix();
    if (pivot != c) {
      m.swap_rows(pivot, c);
      p.swap_rows(pivot, c);
    }
    for (int i = 1; i <= n; ++i)
      if (i != c && m.at(i, c)) {
        m.add_row(c, i);
        p.add_row(c, i);
      }
  }
  return p;
}

/// Generalized inverse: returns G with a * G * a == a. For invertible a this is
/// the inverse. Computed from invertible U, V with U*a*V in normal form.
inline BitMatrix generalized_inverse(const BitMatrix& a) {
  int m = a.rows(), n = a.cols();
  BitMatrix d = a;
  BitMatrix u = BitMatrix::identity(m);
  BitMatrix v = BitMatrix::identity(n);

  // Reduced row echelon, tracking u.
  int r = 0;
  std::vector<int> pivot_col;
  for (int c = 1; c <= n && r < m; ++c) {
    int pivot = 0;
    for (int i = r + 1; i <= m; ++i)
      if (d.at(i, c)) {
        pivot = i;
        break;
      }
    if (!pivot) continue;
    ++r;
    if (pivot != r) {
      d.swap_rows(pivot, r);
      u.swap_rows(pivot, r);
    }
    for (int i = 1; i <= m; ++i)
      if (i != r && d.at(i, c)) {
        d.add_row(r, i);
        u.add_row(r, i);
      }
    pivot_col.push_back(c);
  }

  // Clear non-pivot columns and move pivots to the front, tracking v.
  for (int i = 1; i <= r; ++i) {
    int pc = pivot_col[i - 1];
    for (int j = 1; j <= n; ++j)
      if (j != pc && d.at(i, j)) {
        d.add_col(pc, j);
        v.add_col(pc, j);
      }
  }
  for (int i = 1; i <= r; ++i) {
    int pc = pivot_col[i - 1];
    if (pc != i) {
      d.swap_cols(pc, i);
      v.swap_cols(pc, i);
      for (int k = i; k < r; ++k)
        if (pivot_col[k] == i) pivot_col[k] = pc;
    }
  }

  // Now u*a*v = [I_r 0; 0 0]; the generalized inverse is v * sel * u.
  BitMatrix sel(n, m);
  for (int i = 1; i <= r; ++i) sel.set(i, i, true);
  return v * sel * u;
}

}  // namespace graysynth
