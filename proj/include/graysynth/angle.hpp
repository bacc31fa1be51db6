#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>

namespace graysynth {

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    assert(den_ != 0);
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  /// True for a/2^b (integers included).
  bool is_dyadic() const { return (den_ & (den_ - 1)) == 0; }

  Rational& operator+=(const Rational& o) {
    std::int64_t g = std::gcd(den_, o.den_);
    std::int64_t scale = o.den_ / g;
    num_ = num_ * scale + o.num_ * (den_ / g);
    den_ = den_ * scale;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += Rational(-o.num_, o.den_); }
  Rational& operator*=(const Rational& o) {
    std::int64_t g1 = std::gcd(std::abs(num_), o.den_);
    std::int64_t g2 = std::gcd(std::abs(o.num_), den_);
    num_ = (num_ / g1) * (o.num_ / g2);
    den_ = (den_ / g2) * (o.den_ / g1);
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    std::int64_t g = std::gcd(std::abs(num_), den_);
    num_ /= g;
    den_ /= g;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Rotation angle in units of full turns, kept exact and normalized to [0, 1).
class Angle {
 public:
  constexpr Angle() = default;
  Angle(std::int64_t num, std::int64_t den) : Angle(Rational(num, den)) {}
  explicit Angle(Rational r) : r_(reduce_mod1(r)) {}

  const Rational& value() const { return r_; }
  std::int64_t num() const { return r_.num(); }
  std::int64_t den() const { return r_.den(); }

  bool is_zero() const { return r_.is_zero(); }
  bool is_dyadic() const { return r_.is_dyadic(); }

  Angle& operator+=(const Angle& o) {
    r_ = reduce_mod1(r_ + o.r_);
    return *this;
  }
  friend Angle operator+(Angle a, const Angle& b) { return a += b; }
  Angle operator-() const { return Angle(-r_); }

  friend bool operator==(const Angle& a, const Angle& b) { return a.r_ == b.r_; }
  friend bool operator!=(const Angle& a, const Angle& b) { return !(a == b); }
  friend bool operator<(const Angle& a, const Angle& b) { return a.r_ < b.r_; }

  std::string str() const { return r_.str(); }

 private:
  static Rational reduce_mod1(const Rational& r) {
    std::int64_t m = r.num() % r.den();
    if (m < 0) m += r.den();
    return Rational(m, r.den());
  }

  Rational r_;
};

}  // namespace graysynth
