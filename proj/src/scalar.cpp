#include "signfree/scalar.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

namespace signfree {

using boost::multiprecision::cpp_rational;

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  value_ = den < 0 ? cpp_rational(-num, -den) : cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t from) {
    std::size_t end = from;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    return end;
  };
  auto to_int = [](std::string_view d) {
    BigInt v = 0;
    for (char ch : d) v = v * 10 + (ch - '0');
    return v;
  };

  std::size_t int_end = digits(pos);
  if (int_end == pos) throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  BigInt num = to_int(text.substr(pos, int_end - pos));
  BigInt den = 1;
  if (int_end < text.size() && text[int_end] == '.') {
    std::size_t frac_end = digits(int_end + 1);
    if (frac_end == int_end + 1) {
      throw std::invalid_argument("malformed decimal literal '" + std::string(text) + "'");
    }
    for (std::size_t i = int_end + 1; i < frac_end; ++i) {
      num = num * 10 + (text[i] - '0');
      den *= 10;
    }
    int_end = frac_end;
  } else if (int_end < text.size() && text[int_end] == '/') {
    std::size_t den_end = digits(int_end + 1);
    if (den_end == int_end + 1) {
      throw std::invalid_argument("malformed fraction literal '" + std::string(text) + "'");
    }
    den = to_int(text.substr(int_end + 1, den_end - int_end - 1));
    int_end = den_end;
  }
  if (int_end != text.size()) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  Rational r(num, den);
  return negative ? -r : r;
}

Rational Rational::round_decimal(double value, unsigned digits) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value");
  BigInt scale = boost::multiprecision::pow(BigInt(10), digits);
  cpp_rational scaled = cpp_rational(value) * scale;
  BigInt num = boost::multiprecision::numerator(scaled);
  BigInt den = boost::multiprecision::denominator(scaled);
  BigInt twice = 2 * abs(num) + den;
  BigInt rounded = twice / (2 * den);
  if (num < 0) rounded = -rounded;
  return {rounded, scale};
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

bool Rational::is_zero() const { return value_ == 0; }
int Rational::sign() const { return value_.sign(); }
double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::to_string() const {
  BigInt den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  value_ /= o.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int ExactScalar::sign() const {
  const int sq = rat_.sign();
  const int sr = root_.sign();
  if (sr == 0) return sq;
  if (sq == 0) return sr;
  if (sq == sr) return sq;
  // Opposite signs: the term with the larger square wins.
  const Rational q2 = rat_ * rat_;
  const Rational r2 = root_ * root_ * Rational(3);
  if (q2 > r2) return sq;
  if (q2 < r2) return sr;
  return 0;  // unreachable for rational q, r (sqrt 3 is irrational)
}

double ExactScalar::to_double() const {
  // Subtracting nearly equal terms loses digits; rationalize in that case.
  const int sq = rat_.sign();
  const int sr = root_.sign();
  if (sq != 0 && sr != 0 && sq != sr) {
    const Rational norm = rat_ * rat_ - Rational(3) * root_ * root_;
    return norm.to_double() / (rat_.to_double() - root_.to_double() * std::numbers::sqrt3);
  }
  return rat_.to_double() + root_.to_double() * std::numbers::sqrt3;
}

std::string ExactScalar::to_string() const {
  if (root_.is_zero()) return rat_.to_string();
  std::string coeff = root_.to_string() + "*sqrt3";
  if (rat_.is_zero()) return coeff;
  if (root_.sign() > 0) return rat_.to_string() + "+" + coeff;
  return rat_.to_string() + coeff;  // coefficient carries its '-'
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  rat_ += o.rat_;
  root_ += o.root_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  rat_ -= o.rat_;
  root_ -= o.root_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  Rational q = rat_ * o.rat_ + Rational(3) * root_ * o.root_;
  Rational r = rat_ * o.root_ + o.rat_ * root_;
  rat_ = std::move(q);
  root_ = std::move(r);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  // x / y = x * conj(y) / (q^2 - 3 r^2)
  const Rational norm = o.rat_ * o.rat_ - Rational(3) * o.root_ * o.root_;
  *this *= o.conjugate();
  rat_ /= norm;
  root_ /= norm;
  return *this;
}

ExactScalar pow(ExactScalar base, unsigned exponent) {
  ExactScalar result(1);
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

const ExactScalar& min(const ExactScalar& a, const ExactScalar& b) { return (b < a) ? b : a; }

}  // namespace signfree
