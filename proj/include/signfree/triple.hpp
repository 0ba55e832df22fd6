#ifndef SIGNFREE_TRIPLE_HPP
#define SIGNFREE_TRIPLE_HPP

#include "signfree/scalar.hpp"

#include <complex>
#include <string>

namespace signfree {

using ComplexValue = std::complex<double>;

/// Complex number with both parts in Q(sqrt 3). Used where the complex
/// correspondence must stay exact (building matrices from characters).
struct ExactComplex {
  ExactScalar re;
  ExactScalar im;

  friend bool operator==(const ExactComplex&, const ExactComplex&) = default;
  ComplexValue to_complex() const { return {re.to_double(), im.to_double()}; }
};

ExactComplex operator+(const ExactComplex& x, const ExactComplex& y);
ExactComplex operator*(const ExactComplex& x, const ExactComplex& y);
ExactComplex operator*(const ExactScalar& s, const ExactComplex& x);

/// exp(2*pi*i/3) = -1/2 + (sqrt3/2) i, the image of basis element b.
ExactComplex omega();

/// A (3)-vector: three nonnegative components with cyclic multiplication
/// (b*b = c, b*c = a, c*c = b). Constant triples (t,t,t) are the zeros.
class Triple {
 public:
  Triple() = default;
  /// Throws NegativeValue if any component is negative.
  Triple(ExactScalar a, ExactScalar b, ExactScalar c);

  const ExactScalar& a() const { return a_; }
  const ExactScalar& b() const { return b_; }
  const ExactScalar& c() const { return c_; }
  /// Component by index 0, 1, 2 (a, b, c).
  const ExactScalar& operator[](std::size_t i) const;

  const ExactScalar& min_component() const { return min(min(a_, b_), c_); }
  bool is_reduced() const { return min_component().is_zero(); }
  bool is_constant() const { return a_ == b_ && b_ == c_; }

  /// `t{a,b,c}`
  std::string to_string() const;

  friend bool operator==(const Triple&, const Triple&) = default;

 private:
  ExactScalar a_;
  ExactScalar b_;
  ExactScalar c_;
};

Triple operator+(const Triple& x, const Triple& y);
Triple operator*(const Triple& x, const Triple& y);

/// Throws NegativeValue for s < 0: negation is structural, never a sign.
Triple scale(const ExactScalar& s, const Triple& x);

Triple reduce(const Triple& x);
bool equivalent(const Triple& x, const Triple& y);

/// a^2 + b^2 + c^2 - ab - ac - bc, exact.
ExactScalar norm_sq(const Triple& x);
double norm(const Triple& x);

/// (a, c, b)
Triple conj(const Triple& x);

/// a + b*omega + c*omega^2.
ComplexValue to_complex(const Triple& x);
ExactComplex to_exact_complex(const Triple& x);

/// Reduced representative of z. Components are first rounded to 12 decimal
/// digits. Throws std::invalid_argument for non-finite input.
Triple complex_to_triple(ComplexValue z);
/// Same construction without rounding.
Triple complex_to_triple(const ExactComplex& z);

}  // namespace signfree

#endif  // SIGNFREE_TRIPLE_HPP
