#include "signfree/pair.hpp"

namespace signfree {

UPair::UPair(ExactScalar plus, ExactScalar minus) : plus_(std::move(plus)), minus_(std::move(minus)) {
  if (plus_.sign() < 0 || minus_.sign() < 0) {
    throw NegativeValue("unsigned pair component is negative");
  }
}

std::string UPair::to_string() const { return "p{" + plus_.to_string() + "," + minus_.to_string() + "}"; }

UPair operator+(const UPair& x, const UPair& y) { return {x.plus() + y.plus(), x.minus() + y.minus()}; }

UPair operator*(const UPair& x, const UPair& y) {
  return {x.plus() * y.plus() + x.minus() * y.minus(), x.plus() * y.minus() + y.plus() * x.minus()};
}

UPair scale(const ExactScalar& s, const UPair& x) {
  if (s.sign() < 0) throw NegativeValue("cannot scale an unsigned pair by a negative scalar");
  return {s * x.plus(), s * x.minus()};
}

UPair reduce(const UPair& x) {
  const ExactScalar& m = min(x.plus(), x.minus());
  return {x.plus() - m, x.minus() - m};
}

bool equivalent(const UPair& x, const UPair& y) { return reduce(x) == reduce(y); }

UPair pair_from_signed(const ExactScalar& v) {
  if (v.sign() < 0) return {ExactScalar(0), -v};
  return {v, ExactScalar(0)};
}

ExactScalar pair_to_signed(const UPair& x) { return x.plus() - x.minus(); }

}  // namespace signfree
