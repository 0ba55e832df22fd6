// Test-only reference computations. Nothing here calls into the library's
// arithmetic: products are computed as convolutions over the cyclic index
// groups, complex values by direct evaluation with std::polar.
#ifndef SIGNFREE_TESTS_ORACLE_HPP
#define SIGNFREE_TESTS_ORACLE_HPP

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace oracle {

using Vec3 = std::array<double, 3>;
// m[r][s]: row r in {a,b,c}, column s in {A,B,C}
using Grid = std::array<std::array<double, 3>, 3>;

// Basis element k of a (3)-vector is g^k for the generator g of Z3, so the
// product is a cyclic convolution.
inline Vec3 convolve(const Vec3& x, const Vec3& y) {
  Vec3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[(i + j) % 3] += x[i] * y[j];
  }
  return out;
}

// Rows and columns are both indexed by Z3; the matrix product is the
// convolution over Z3 x Z3.
inline Grid convolve(const Grid& x, const Grid& y) {
  Grid out{};
  for (int r1 = 0; r1 < 3; ++r1) {
    for (int s1 = 0; s1 < 3; ++s1) {
      for (int r2 = 0; r2 < 3; ++r2) {
        for (int s2 = 0; s2 < 3; ++s2) out[(r1 + r2) % 3][(s1 + s2) % 3] += x[r1][s1] * y[r2][s2];
      }
    }
  }
  return out;
}

inline std::complex<double> omega_pow(int k) { return std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0); }

inline std::complex<double> evaluate(const Vec3& x) {
  return x[0] + x[1] * omega_pow(1) + x[2] * omega_pow(2);
}

// Character q of the matrix: sum over entries of omega^(r) * omega^(q*s).
inline std::complex<double> character(const Grid& m, int q) {
  std::complex<double> acc = 0;
  for (int r = 0; r < 3; ++r) {
    for (int s = 0; s < 3; ++s) acc += m[r][s] * omega_pow(r) * omega_pow(q * s);
  }
  return acc;
}

inline double law_of_cosine_sq(const Vec3& x) {
  // |x| computed geometrically: three plane vectors at 0, 120 and 240 degrees.
  return std::norm(evaluate(x));
}

}  // namespace oracle

#endif  // SIGNFREE_TESTS_ORACLE_HPP
