#ifndef SIGNFREE_PROPERTIES_HPP
#define SIGNFREE_PROPERTIES_HPP

#include "signfree/matrix.hpp"
#include "signfree/pair.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace signfree {

/// Deterministic generator of small random algebra elements.
///
/// Bounded integers are drawn as `lo + rng() % span` rather than through
/// std::uniform_int_distribution so the stream is identical on every
/// standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long long integer(long long lo, long long hi);
  double real(double lo, double hi);

  /// n/d with n in [lo, hi], d in [1, max_den].
  Rational rational(long long lo = -99, long long hi = 99, long long max_den = 99);
  /// q + r*sqrt3 with small signed rational q, r.
  ExactScalar scalar();
  /// Nonnegative q + r*sqrt3; sometimes with q and r of opposite sign.
  ExactScalar nonneg_scalar();

  UPair pair();
  Triple triple();
  Mat33 matrix();
  Triple constant_triple();
  Mat33 absolute_zero();
  RowSelector selector();

 private:
  std::mt19937_64 rng_;
};

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

struct VerifyOptions {
  std::size_t samples = 1000;  // random cases per property
  std::uint64_t seed = 42;
};

/// Floating-point tolerance for the complex-number checks.
inline constexpr double kComplexTolerance = 1e-9;

/// Checks every algebraic law of the three number systems on random
/// samples: ring laws under quotient equality, homomorphisms, norm
/// multiplicativity, zero families, character separation and round trips.
/// Results are in a fixed order and depend only on the options.
std::vector<PropertyResult> run_properties(const VerifyOptions& options);

}  // namespace signfree

#endif  // SIGNFREE_PROPERTIES_HPP
