#ifndef SIGNFREE_SCALAR_HPP
#define SIGNFREE_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace signfree {

using BigInt = boost::multiprecision::cpp_int;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a sign-free vector would receive a negative component.
class NegativeValue : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Canonical fraction: denominator > 0, gcd(|num|, den) = 1.
class Rational {
 public:
  Rational() = default;
  Rational(long long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "n", "n/d" and decimals "d.ddd" (exact: 2.1 -> 21/10), optional
  // leading sign.
  static Rational parse(std::string_view text);
  // Nearest fraction with denominator 10^digits (ties away from zero).
  static Rational round_decimal(double value, unsigned digits);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_zero() const;
  int sign() const;
  double to_double() const;
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  boost::multiprecision::cpp_rational value_;
};

/// An element q + r*sqrt(3) of the field Q(sqrt 3).
///
/// Every constant of the sign-free algebras (including 1/3 and sqrt(3)/3)
/// is representable exactly, so identities are checked with `==`, never with
/// a tolerance. Values are immutable in spirit: all operators return fresh
/// values.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long long v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational rat) : rat_(std::move(rat)) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational rat, Rational root) : rat_(std::move(rat)), root_(std::move(root)) {}

  static ExactScalar sqrt3() { return {Rational(0), Rational(1)}; }
  static ExactScalar fraction(long long num, long long den) { return Rational(num, den); }

  const Rational& rational_part() const { return rat_; }
  const Rational& root_part() const { return root_; }

  bool is_zero() const { return rat_.is_zero() && root_.is_zero(); }

  /// Exact sign of q + r*sqrt3, decided by comparing q^2 with 3r^2.
  int sign() const;

  /// q - r*sqrt3; x * conjugate(x) is rational.
  ExactScalar conjugate() const { return {rat_, -root_}; }

  double to_double() const;

  /// Renders as `q`, `s*sqrt3`, `q+s*sqrt3` or `q-s*sqrt3`.
  std::string to_string() const;

  ExactScalar operator-() const { return {-rat_, -root_}; }
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  /// Throws DivisionByZero when `o` is zero.
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

  friend bool operator==(const ExactScalar&, const ExactScalar&) = default;
  friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b) {
    return (a - b).sign() <=> 0;
  }

 private:
  Rational rat_;
  Rational root_;
};

ExactScalar pow(ExactScalar base, unsigned exponent);
const ExactScalar& min(const ExactScalar& a, const ExactScalar& b);

}  // namespace signfree

#endif  // SIGNFREE_SCALAR_HPP
