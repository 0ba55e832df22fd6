#ifndef SIGNFREE_EXPR_HPP
#define SIGNFREE_EXPR_HPP

#include "signfree/matrix.hpp"
#include "signfree/pair.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace signfree::expr {

// Grammar (whitespace insignificant):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | factor
//   factor  := atom ('^' uint)?
//   atom    := number | name | call | literal | '(' expr ')'
//   literal := 'p{' expr ',' expr '}'
//            | 't{' expr ',' expr ',' expr '}'
//            | 'm{' row ';' row ';' row '}'      row := '[' expr ',' expr ',' expr ']'
//   call    := fn '(' expr ')'
//
// '-' and '/' apply to scalars only. Names are `sqrt3` and the unit tokens
// (ONE, NEG1, J, NJ, ..., I, NI, JJ, NJJ, ...).

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Kind mismatches (found before evaluation) and value errors such as a
// negative scaling factor (found during evaluation).
class EvalError : public std::runtime_error {
 public:
  EvalError(std::size_t position, const std::string& what);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class Kind { Scalar, Pair, Triple, Matrix, Real, Complex, Characters };
std::string_view kind_name(Kind k);

enum class Function { Reduce, Norm, NormSq, Conj, ToComplex, RowSums, Chars };

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Number {
  Rational value;
};
struct Name {
  std::string name;
};
struct Literal {
  Kind kind;  // Pair, Triple or Matrix
  std::vector<NodePtr> parts;  // 2, 3 or 9 (row-major) scalar expressions
};
struct Unary {
  NodePtr operand;
};
struct Binary {
  char op;
  NodePtr lhs;
  NodePtr rhs;
};
struct Power {
  NodePtr base;
  unsigned exponent;
};
struct Call {
  Function fn;
  NodePtr arg;
};

struct Node {
  std::size_t position = 0;
  std::variant<Number, Name, Literal, Unary, Binary, Power, Call> data;
};

struct Expression {
  NodePtr root;
  std::string source;
};

Expression parse(std::string_view text);

/// Static kind of the expression; throws EvalError on a mismatch.
Kind check(const Expression& e);

using Value = std::variant<ExactScalar, UPair, Triple, Mat33, double, ComplexValue, Characters>;
Kind kind_of(const Value& v);

/// Checks, then evaluates exactly.
Value evaluate(const Expression& e);

/// Renders a value in the textual formats of the algebra types; complex
/// numbers as `re+im*i` with 12 significant digits.
std::string format(const Value& v);
std::string format_complex(ComplexValue z);

/// parse + evaluate + format.
std::string evaluate_text(std::string_view text);

/// Mapping of grammar names to conventional unit labels, for help output.
std::string unit_help();

}  // namespace signfree::expr

#endif  // SIGNFREE_EXPR_HPP
