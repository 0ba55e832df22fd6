#ifndef SIGNFREE_TESTS_HELPERS_HPP
#define SIGNFREE_TESTS_HELPERS_HPP

#include "oracle.hpp"
#include "signfree/matrix.hpp"

#include <initializer_list>

namespace signfree::testing {

inline ExactScalar root3(long long num, long long den = 1) { return {Rational(0), Rational(num, den)}; }
inline ExactScalar frac(long long num, long long den) { return ExactScalar::fraction(num, den); }

/// Integer matrix as printed, rows top to bottom.
inline Mat33 M(std::initializer_list<std::initializer_list<long long>> rows) {
  std::array<std::array<ExactScalar, 3>, 3> e{};
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t s = 0;
    for (long long v : row) e[r][s++] = ExactScalar(v);
    ++r;
  }
  return Mat33::from_rows(e);
}

inline oracle::Vec3 to_vec(const Triple& t) { return {t.a().to_double(), t.b().to_double(), t.c().to_double()}; }

inline oracle::Grid to_grid(const Mat33& m) {
  oracle::Grid g{};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t s = 0; s < 3; ++s) g[r][s] = m.entry(r, s).to_double();
  }
  return g;
}

}  // namespace signfree::testing

#endif  // SIGNFREE_TESTS_HELPERS_HPP
