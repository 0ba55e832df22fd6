#include "signfree/triple.hpp"

#include <cmath>

namespace signfree {

ExactComplex operator+(const ExactComplex& x, const ExactComplex& y) { return {x.re + y.re, x.im + y.im}; }

ExactComplex operator*(const ExactComplex& x, const ExactComplex& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

ExactComplex operator*(const ExactScalar& s, const ExactComplex& x) { return {s * x.re, s * x.im}; }

ExactComplex omega() { return {ExactScalar::fraction(-1, 2), ExactScalar(Rational(0), Rational(1, 2))}; }

Triple::Triple(ExactScalar a, ExactScalar b, ExactScalar c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.sign() < 0 || b_.sign() < 0 || c_.sign() < 0) {
    throw NegativeValue("(3)-vector component is negative");
  }
}

const ExactScalar& Triple::operator[](std::size_t i) const {
  switch (i) {
    case 0: return a_;
    case 1: return b_;
    case 2: return c_;
    default: throw std::out_of_range("triple index");
  }
}

std::string Triple::to_string() const {
  return "t{" + a_.to_string() + "," + b_.to_string() + "," + c_.to_string() + "}";
}

Triple operator+(const Triple& x, const Triple& y) { return {x.a() + y.a(), x.b() + y.b(), x.c() + y.c()}; }

Triple operator*(const Triple& x, const Triple& y) {
  return {
      x.a() * y.a() + x.b() * y.c() + y.b() * x.c(),
      x.a() * y.b() + y.a() * x.b() + x.c() * y.c(),
      x.a() * y.c() + y.a() * x.c() + x.b() * y.b(),
  };
}

Triple scale(const ExactScalar& s, const Triple& x) {
  if (s.sign() < 0) throw NegativeValue("cannot scale a (3)-vector by a negative scalar");
  return {s * x.a(), s * x.b(), s * x.c()};
}

Triple reduce(const Triple& x) {
  const ExactScalar m = x.min_component();
  return {x.a() - m, x.b() - m, x.c() - m};
}

bool equivalent(const Triple& x, const Triple& y) { return reduce(x) == reduce(y); }

ExactScalar norm_sq(const Triple& x) {
  const auto& [a, b, c] = std::tie(x.a(), x.b(), x.c());
  return a * a + b * b + c * c - a * b - a * c - b * c;
}

double norm(const Triple& x) { return std::sqrt(norm_sq(x).to_double()); }

Triple conj(const Triple& x) { return {x.a(), x.c(), x.b()}; }

ExactComplex to_exact_complex(const Triple& x) {
  const ExactScalar half = ExactScalar::fraction(1, 2);
  const ExactScalar half_root(Rational(0), Rational(1, 2));
  return {x.a() - half * (x.b() + x.c()), half_root * (x.b() - x.c())};
}

ComplexValue to_complex(const Triple& x) { return to_exact_complex(x).to_complex(); }

Triple complex_to_triple(const ExactComplex& z) {
  const ExactScalar zero(0);
  Triple real_part = z.re.sign() >= 0 ? Triple(z.re, zero, zero) : Triple(zero, -z.re, -z.re);
  // (sqrt3/3)(1 + 2 omega) = i and (sqrt3/3)(1 + 2 omega^2) = -i
  const ExactScalar unit(Rational(0), Rational(1, 3));
  Triple imag_part = z.im.sign() >= 0 ? scale(z.im * unit, Triple(1, 2, 0)) : scale(-z.im * unit, Triple(1, 0, 2));
  return reduce(real_part + imag_part);
}

Triple complex_to_triple(ComplexValue z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument("complex value is not finite");
  }
  constexpr unsigned kDigits = 12;
  return complex_to_triple(
      ExactComplex{Rational::round_decimal(z.real(), kDigits), Rational::round_decimal(z.imag(), kDigits)});
}

}  // namespace signfree
