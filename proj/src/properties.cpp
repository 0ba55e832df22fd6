#include "signfree/properties.hpp"

#include "signfree/units.hpp"

#include <cmath>
#include <functional>
#include <optional>

namespace signfree {

long long Sampler::integer(long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(rng_() % span);
}

double Sampler::real(double lo, double hi) {
  const double unit = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

Rational Sampler::rational(long long lo, long long hi, long long max_den) {
  return {integer(lo, hi), integer(1, max_den)};
}

ExactScalar Sampler::scalar() {
  Rational q = rational();
  Rational r = integer(0, 2) == 0 ? Rational(0) : rational();
  return {q, r};
}

ExactScalar Sampler::nonneg_scalar() {
  switch (integer(0, 5)) {
    case 0:
      return ExactScalar(0);
    case 1:
    case 2:
      return ExactScalar(integer(0, 9));
    case 3:
      return ExactScalar(rational(0, 9, 6));
    case 4:
      return ExactScalar(rational(0, 9, 6), rational(0, 4, 6));
    default: {
      // q - r*sqrt3 with q > r*sqrt3 > 0
      const Rational r = rational(1, 4, 6);
      const Rational q = r * Rational(2) + rational(0, 9, 6);
      return {q, -r};
    }
  }
}

UPair Sampler::pair() { return {nonneg_scalar(), nonneg_scalar()}; }

Triple Sampler::triple() { return {nonneg_scalar(), nonneg_scalar(), nonneg_scalar()}; }

Mat33 Sampler::matrix() { return {triple(), triple(), triple()}; }

Triple Sampler::constant_triple() {
  const ExactScalar t = nonneg_scalar();
  return {t, t, t};
}

Mat33 Sampler::absolute_zero() { return signfree::absolute_zero(nonneg_scalar(), nonneg_scalar(), nonneg_scalar()); }

RowSelector Sampler::selector() {
  RowSelector sel;
  for (auto& c : sel.choice) c = static_cast<Col>(integer(0, 2));
  return sel;
}

namespace {

using Failure = std::optional<std::string>;
using Check = std::function<Failure(Sampler&)>;

struct Property {
  std::string name;
  Check check;
};

template <class... Ts>
std::string show(const Ts&... xs) {
  std::string out;
  ((out += (out.empty() ? "" : " ") + xs.to_string()), ...);
  return out;
}

Failure fail_if(bool bad, auto&& describe) {
  if (bad) return describe();
  return std::nullopt;
}

bool close(ComplexValue x, ComplexValue y) { return std::abs(x - y) < kComplexTolerance; }

bool chars_agree(const Characters& x, const Characters& y) {
  return close(x[0], y[0]) && close(x[1], y[1]) && close(x[2], y[2]);
}

// A second representative of x's class: add a random zero.
Triple shifted(Sampler& s, const Triple& x) { return x + s.constant_triple(); }
Mat33 shifted(Sampler& s, const Mat33& x) { return x + s.absolute_zero(); }

std::vector<Property> scalar_properties() {
  return {
      {"scalar: addition commutative and associative",
       [](Sampler& s) {
         auto x = s.scalar(), y = s.scalar(), z = s.scalar();
         return fail_if(x + y != y + x || (x + y) + z != x + (y + z), [&] { return show(x, y, z); });
       }},
      {"scalar: multiplication commutative and associative",
       [](Sampler& s) {
         auto x = s.scalar(), y = s.scalar(), z = s.scalar();
         return fail_if(x * y != y * x || (x * y) * z != x * (y * z), [&] { return show(x, y, z); });
       }},
      {"scalar: distributive",
       [](Sampler& s) {
         auto x = s.scalar(), y = s.scalar(), z = s.scalar();
         return fail_if(x * (y + z) != x * y + x * z, [&] { return show(x, y, z); });
       }},
      {"scalar: sign of square nonnegative, agrees with float",
       [](Sampler& s) {
         auto x = s.scalar();
         const double f = x.to_double();
         const bool float_disagrees = std::fabs(f) > 1e-9 && (f > 0 ? 1 : -1) != x.sign();
         return fail_if((x * x).sign() < 0 || float_disagrees, [&] { return show(x); });
       }},
      {"scalar: multiplicative inverse exact",
       [](Sampler& s) -> Failure {
         auto x = s.scalar();
         if (x.is_zero()) return std::nullopt;
         return fail_if(x * (ExactScalar(1) / x) != ExactScalar(1), [&] { return show(x); });
       }},
  };
}

std::vector<Property> pair_properties() {
  return {
      {"pair: to_signed is a ring homomorphism",
       [](Sampler& s) {
         auto x = s.pair(), y = s.pair();
         const bool ok = pair_to_signed(x * y) == pair_to_signed(x) * pair_to_signed(y) &&
                         pair_to_signed(x + y) == pair_to_signed(x) + pair_to_signed(y);
         return fail_if(!ok, [&] { return show(x, y); });
       }},
      {"pair: commutative and associative",
       [](Sampler& s) {
         auto x = s.pair(), y = s.pair(), z = s.pair();
         const bool ok = equivalent(x + y, y + x) && equivalent(x * y, y * x) &&
                         equivalent((x + y) + z, x + (y + z)) && equivalent((x * y) * z, x * (y * z));
         return fail_if(!ok, [&] { return show(x, y, z); });
       }},
      {"pair: distributive",
       [](Sampler& s) {
         auto x = s.pair(), y = s.pair(), z = s.pair();
         return fail_if(!equivalent(x * (y + z), x * y + x * z), [&] { return show(x, y, z); });
       }},
      {"pair: reduce idempotent, reduced, equivalent",
       [](Sampler& s) {
         auto x = s.pair();
         const UPair r = reduce(x);
         return fail_if(reduce(r) != r || !r.is_reduced() || !equivalent(x, r), [&] { return show(x); });
       }},
      {"pair: closure keeps components nonnegative",
       [](Sampler& s) {
         auto x = s.pair(), y = s.pair();
         const UPair p = x * y;
         const UPair q = x + y;
         const bool ok = p.plus().sign() >= 0 && p.minus().sign() >= 0 && q.plus().sign() >= 0 && q.minus().sign() >= 0;
         return fail_if(!ok, [&] { return show(x, y); });
       }},
      {"pair: from_signed/to_signed round trip",
       [](Sampler& s) {
         const ExactScalar v(s.rational());
         const UPair p = pair_from_signed(v);
         return fail_if(pair_to_signed(p) != v || !p.is_reduced(), [&] { return show(v); });
       }},
  };
}

std::vector<Property> triple_properties() {
  return {
      {"triple: commutative and associative",
       [](Sampler& s) {
         auto x = s.triple(), y = s.triple(), z = s.triple();
         const bool ok = equivalent(x + y, y + x) && equivalent(x * y, y * x) &&
                         equivalent((x + y) + z, x + (y + z)) && equivalent((x * y) * z, x * (y * z));
         return fail_if(!ok, [&] { return show(x, y, z); });
       }},
      {"triple: distributive",
       [](Sampler& s) {
         auto x = s.triple(), y = s.triple(), z = s.triple();
         return fail_if(!equivalent(x * (y + z), x * y + x * z), [&] { return show(x, y, z); });
       }},
      {"triple: product well defined on classes",
       [](Sampler& s) {
         auto x = s.triple(), y = s.triple();
         const Triple x2 = shifted(s, x);
         return fail_if(!equivalent(x * y, x2 * y), [&] { return show(x, x2, y); });
       }},
      {"triple: homomorphism to complex numbers",
       [](Sampler& s) {
         auto x = s.triple(), y = s.triple();
         const ComplexValue zx = to_complex(x), zy = to_complex(y);
         const bool ok = close(to_complex(x * y), zx * zy) && close(to_complex(x + y), zx + zy);
         return fail_if(!ok, [&] { return show(x, y); });
       }},
      {"triple: norm matches complex modulus",
       [](Sampler& s) {
         auto x = s.triple();
         const double n = norm(x);
         return fail_if(std::fabs(n * n - std::norm(to_complex(x))) >= kComplexTolerance, [&] { return show(x); });
       }},
      {"triple: norm_sq multiplicative (exact)",
       [](Sampler& s) {
         auto x = s.triple(), y = s.triple();
         return fail_if(norm_sq(x * y) != norm_sq(x) * norm_sq(y), [&] { return show(x, y); });
       }},
      {"triple: triangle inequality",
       [](Sampler& s) {
         auto x = s.triple(), y = s.triple();
         return fail_if(norm(x + y) > norm(x) + norm(y) + kComplexTolerance, [&] { return show(x, y); });
       }},
      {"triple: conjugate product is real",
       [](Sampler& s) {
         auto x = s.triple();
         const Triple real(norm_sq(x), ExactScalar(0), ExactScalar(0));
         return fail_if(!equivalent(x * conj(x), real), [&] { return show(x); });
       }},
      {"triple: reduce idempotent, zeros neutral",
       [](Sampler& s) {
         auto x = s.triple();
         const Triple r = reduce(x);
         return fail_if(reduce(r) != r || !r.is_reduced() || !equivalent(x + s.constant_triple(), x),
                        [&] { return show(x); });
       }},
      {"triple: complex round trip",
       [](Sampler& s) {
         const ComplexValue z(s.real(-100, 100), s.real(-100, 100));
         const Triple t = complex_to_triple(z);
         const bool ok = t.is_reduced() && close(to_complex(t), z);
         return fail_if(!ok, [&] { return t.to_string(); });
       }},
      {"triple: triple -> complex -> triple",
       [](Sampler& s) {
         auto x = s.triple();
         const Triple back = complex_to_triple(to_complex(x));
         return fail_if(!close(to_complex(back), to_complex(reduce(x))), [&] { return show(x, back); });
       }},
  };
}

std::vector<Property> matrix_properties() {
  return {
      {"matrix: commutative and associative",
       [](Sampler& s) {
         auto x = s.matrix(), y = s.matrix(), z = s.matrix();
         const bool ok = equivalent(x + y, y + x) && equivalent(x * y, y * x) &&
                         equivalent((x + y) + z, x + (y + z)) && equivalent((x * y) * z, x * (y * z));
         return fail_if(!ok, [&] { return show(x, y, z); });
       }},
      {"matrix: distributive",
       [](Sampler& s) {
         auto x = s.matrix(), y = s.matrix(), z = s.matrix();
         return fail_if(!equivalent(x * (y + z), x * y + x * z), [&] { return show(x, y, z); });
       }},
      {"matrix: product well defined on classes",
       [](Sampler& s) {
         auto x = s.matrix(), y = s.matrix();
         const Mat33 x2 = shifted(s, x);
         return fail_if(!equivalent(x * y, x2 * y), [&] { return show(x, x2, y); });
       }},
      {"matrix: row sums are a homomorphism",
       [](Sampler& s) {
         auto x = s.matrix(), y = s.matrix();
         const bool ok = equivalent(row_sums(x * y), row_sums(x) * row_sums(y)) &&
                         row_sums(x + y) == row_sums(x) + row_sums(y);
         return fail_if(!ok, [&] { return show(x, y); });
       }},
      {"matrix: norm_sq multiplicative (exact)",
       [](Sampler& s) {
         auto x = s.matrix(), y = s.matrix();
         return fail_if(norm_sq(x * y) != norm_sq(x) * norm_sq(y), [&] { return show(x, y); });
       }},
      {"matrix: rotation zeros annihilate the norm",
       [](Sampler& s) {
         auto m = s.matrix();
         const ExactScalar xi = s.integer(0, 1) == 0 ? ExactScalar(1) : ExactScalar::fraction(7, 3);
         const Mat33 z = rotation_zero(s.selector(), xi);
         const bool ok = norm_sq(z).is_zero() && norm_sq(m * z).is_zero() && norm_sq(m + z) == norm_sq(m);
         return fail_if(!ok, [&] { return show(m, z); });
       }},
      {"matrix: characters are homomorphisms",
       [](Sampler& s) {
         auto x = s.matrix(), y = s.matrix();
         const Characters cx = character_transform(x), cy = character_transform(y);
         const Characters prod = character_transform(x * y), sum = character_transform(x + y);
         bool ok = true;
         for (std::size_t q = 0; q < 3; ++q) ok = ok && close(prod[q], cx[q] * cy[q]) && close(sum[q], cx[q] + cy[q]);
         return fail_if(!ok, [&] { return show(x, y); });
       }},
      {"matrix: characters separate classes",
       [](Sampler& s) {
         auto x = s.matrix();
         const Mat33 y = s.integer(0, 1) == 0 ? shifted(s, x) : s.matrix();
         const bool by_chars = chars_agree(character_transform(x), character_transform(y));
         return fail_if(by_chars != equivalent(x, y), [&] { return show(x, y); });
       }},
  };
}

}  // namespace

std::vector<PropertyResult> run_properties(const VerifyOptions& options) {
  std::vector<Property> all;
  for (auto group : {scalar_properties(), pair_properties(), triple_properties(), matrix_properties()}) {
    for (auto& p : group) all.push_back(std::move(p));
  }

  std::vector<PropertyResult> results;
  results.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    // Independent stream per property so adding one does not shift the rest.
    Sampler sampler(options.seed ^ (0x9E3779B97F4A7C15ULL * (i + 1)));
    PropertyResult r{all[i].name, 0, 0, {}};
    for (std::size_t k = 0; k < options.samples; ++k) {
      ++r.cases;
      if (auto failure = all[i].check(sampler)) {
        if (r.failures++ == 0) r.first_failure = *failure;
      }
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace signfree
