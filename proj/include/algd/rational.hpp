#ifndef ALGD_RATIONAL_HPP
#define ALGD_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace algd {

// Exact rational with 64-bit numerator/denominator. Invariants: denominator
// positive, gcd(|num|, den) = 1, zero is 0/1. Arithmetic goes through 128-bit
// intermediates and throws OverflowError instead of wrapping; at the scale
// this engine targets that path never fires, but exactness must not fail
// silently if it ever does.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_negative() const { return num_ < 0; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  // Total order; exact because cross products use 128-bit width.
  friend bool operator<(const Rational& a, const Rational& b);

  Rational inverse() const;
  Rational pow(int e) const;  // e >= 0, or e < 0 on a nonzero value

  // "n" for integers, "n/d" otherwise.
  std::string to_string() const;

private:
  std::int64_t num_;
  std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace algd

#endif
