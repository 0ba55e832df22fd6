#ifndef SIGNFREE_PAIR_HPP
#define SIGNFREE_PAIR_HPP

#include "signfree/scalar.hpp"

#include <string>

namespace signfree {

/// A signed real written as an unsigned vector {plus, minus}.
///
/// Both components are nonnegative. Arithmetic never reduces on its own, so
/// the "prehistory" of a value (e.g. {18, 22} rather than {0, 4}) survives
/// until reduce() is called. Use equivalent() for value equality; `==` is
/// representation equality.
class UPair {
 public:
  UPair() = default;
  /// Throws NegativeValue if either component is negative.
  UPair(ExactScalar plus, ExactScalar minus);

  const ExactScalar& plus() const { return plus_; }
  const ExactScalar& minus() const { return minus_; }

  bool is_reduced() const { return plus_.is_zero() || minus_.is_zero(); }

  /// `p{plus,minus}`
  std::string to_string() const;

  friend bool operator==(const UPair&, const UPair&) = default;

 private:
  ExactScalar plus_;
  ExactScalar minus_;
};

UPair operator+(const UPair& x, const UPair& y);
UPair operator*(const UPair& x, const UPair& y);
/// Componentwise scaling; throws NegativeValue for s < 0.
UPair scale(const ExactScalar& s, const UPair& x);

UPair reduce(const UPair& x);
bool equivalent(const UPair& x, const UPair& y);

UPair pair_from_signed(const ExactScalar& v);
ExactScalar pair_to_signed(const UPair& x);

}  // namespace signfree

#endif  // SIGNFREE_PAIR_HPP
