#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace sparsehs {

/// Arbitrary-precision rational number, always kept in canonical form
/// (reduced fraction, positive denominator). Thin wrapper over GMP's
/// mpq_class so that the rest of the library has a single, minimal
/// numeric vocabulary and a fixed textual format.
///
/// Textual format: "p/q" with q > 1, plain "p" when the value is an
/// integer. parse() additionally accepts an explicit "/1" suffix and
/// leading minus signs on the numerator.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}                        // NOLINT(google-explicit-constructor)
  Rational(int n) : value_(static_cast<long>(n)) {}      // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

  /// Parses "p" or "p/q". Throws InputError on malformed text or q == 0.
  static Rational parse(const std::string& text);

  std::string to_string() const;

  /// Closest double; used only where approximation is explicitly wanted.
  double to_double() const { return value_.get_d(); }

  bool is_integer() const { return value_.get_den() == 1; }
  long numerator_long() const { return value_.get_num().get_si(); }
  long denominator_long() const { return value_.get_den().get_si(); }

  const mpq_class& raw() const { return value_; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace sparsehs
