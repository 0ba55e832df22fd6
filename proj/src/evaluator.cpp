#include "signfree/expr.hpp"
#include "signfree/units.hpp"

#include <cmath>
#include <cstdio>

namespace signfree::expr {

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Scalar: return "scalar";
    case Kind::Pair: return "pair";
    case Kind::Triple: return "triple";
    case Kind::Matrix: return "matrix";
    case Kind::Real: return "real";
    case Kind::Complex: return "complex";
    case Kind::Characters: return "characters";
  }
  return "?";
}

namespace {

bool is_algebra(Kind k) { return k == Kind::Scalar || k == Kind::Pair || k == Kind::Triple || k == Kind::Matrix; }

std::string_view function_name(Function f) {
  switch (f) {
    case Function::Reduce: return "reduce";
    case Function::Norm: return "norm";
    case Function::NormSq: return "normsq";
    case Function::Conj: return "conj";
    case Function::ToComplex: return "tocomplex";
    case Function::RowSums: return "rowsums";
    case Function::Chars: return "chars";
  }
  return "?";
}

[[noreturn]] void mismatch(const Node& n, const std::string& what) { throw EvalError(n.position, what); }

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};

Kind check_node(const Node& n);

Kind check_call(const Node& n, const Call& c) {
  const Kind arg = check_node(*c.arg);
  auto bad = [&] {
    mismatch(n, std::string(function_name(c.fn)) + "() is not defined for a " + std::string(kind_name(arg)));
  };
  switch (c.fn) {
    case Function::Reduce:
      if (!is_algebra(arg)) bad();
      return arg;
    case Function::Norm:
      if (arg != Kind::Triple && arg != Kind::Matrix) bad();
      return Kind::Real;
    case Function::NormSq:
      if (arg != Kind::Triple && arg != Kind::Matrix) bad();
      return Kind::Scalar;
    case Function::Conj:
      if (arg != Kind::Triple) bad();
      return Kind::Triple;
    case Function::ToComplex:
      if (arg != Kind::Triple) bad();
      return Kind::Complex;
    case Function::RowSums:
      if (arg != Kind::Matrix) bad();
      return Kind::Triple;
    case Function::Chars:
      if (arg != Kind::Matrix) bad();
      return Kind::Characters;
  }
  bad();
  return arg;
}

Kind check_node(const Node& n) {
  return std::visit(
      Overloaded{
          [](const Number&) { return Kind::Scalar; },
          [&](const Name& nm) { return nm.name == "sqrt3" ? Kind::Scalar : Kind::Matrix; },
          [&](const Literal& lit) {
            for (const auto& part : lit.parts) {
              const Kind k = check_node(*part);
              if (k != Kind::Scalar) mismatch(*part, "component must be a scalar, not a " + std::string(kind_name(k)));
            }
            return lit.kind;
          },
          [&](const Unary& u) {
            const Kind k = check_node(*u.operand);
            if (k != Kind::Scalar) {
              mismatch(n, "cannot negate a " + std::string(kind_name(k)) + "; sign-free values have no sign");
            }
            return k;
          },
          [&](const Binary& b) {
            const Kind l = check_node(*b.lhs);
            const Kind r = check_node(*b.rhs);
            const std::string pair_desc = std::string(kind_name(l)) + " " + b.op + " " + std::string(kind_name(r));
            if (!is_algebra(l) || !is_algebra(r)) mismatch(n, "operator not defined for " + pair_desc);
            if (b.op == '-' || b.op == '/') {
              if (l != Kind::Scalar || r != Kind::Scalar) mismatch(n, "'" + std::string(1, b.op) + "' needs scalars: " + pair_desc);
              return Kind::Scalar;
            }
            if (l == r) return l;
            if (b.op == '*' && l == Kind::Scalar) return r;
            if (b.op == '*' && r == Kind::Scalar) return l;
            mismatch(n, "kind mismatch: " + pair_desc);
          },
          [&](const Power& p) {
            const Kind k = check_node(*p.base);
            if (!is_algebra(k)) mismatch(n, "cannot raise a " + std::string(kind_name(k)) + " to a power");
            return k;
          },
          [&](const Call& c) { return check_call(n, c); },
      },
      n.data);
}

template <class T>
T power(const T& base, unsigned n, T one) {
  T result = std::move(one);
  for (unsigned i = 0; i < n; ++i) result = result * base;
  return result;
}

Value eval_node(const Node& n);

ExactScalar eval_scalar(const Node& n) { return std::get<ExactScalar>(eval_node(n)); }

Value scale_value(const Node& n, const ExactScalar& s, const Value& v) {
  try {
    return std::visit(
        Overloaded{
            [&](const UPair& x) -> Value { return scale(s, x); },
            [&](const Triple& x) -> Value { return scale(s, x); },
            [&](const Mat33& x) -> Value { return scale(s, x); },
            [&](const auto&) -> Value { mismatch(n, "cannot scale this value"); },
        },
        v);
  } catch (const NegativeValue&) {
    throw EvalError(n.position, "negative scalar " + s.to_string() + " used to scale a sign-free value");
  }
}

Value eval_binary(const Node& n, const Binary& b) {
  const Value l = eval_node(*b.lhs);
  const Value r = eval_node(*b.rhs);
  if (b.op == '*') {
    if (kind_of(l) == Kind::Scalar && kind_of(r) != Kind::Scalar) return scale_value(n, std::get<ExactScalar>(l), r);
    if (kind_of(r) == Kind::Scalar && kind_of(l) != Kind::Scalar) return scale_value(n, std::get<ExactScalar>(r), l);
  }
  if (b.op == '-') return std::get<ExactScalar>(l) - std::get<ExactScalar>(r);
  if (b.op == '/') {
    try {
      return std::get<ExactScalar>(l) / std::get<ExactScalar>(r);
    } catch (const DivisionByZero&) {
      throw EvalError(n.position, "division by zero");
    }
  }
  return std::visit(
      [&](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ExactScalar> || std::is_same_v<T, UPair> || std::is_same_v<T, Triple> ||
                      std::is_same_v<T, Mat33>) {
          const T& y = std::get<T>(r);
          if (b.op == '+') return x + y;
          return x * y;
        } else {
          mismatch(n, "operator not defined");
        }
      },
      l);
}

Value eval_call(const Node& n, const Call& c) {
  const Value v = eval_node(*c.arg);
  switch (c.fn) {
    case Function::Reduce:
      return std::visit(
          [&](const auto& x) -> Value {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ExactScalar>) {
              return x;
            } else if constexpr (std::is_same_v<T, UPair> || std::is_same_v<T, Triple> || std::is_same_v<T, Mat33>) {
              return reduce(x);
            } else {
              mismatch(n, "reduce() not defined");
            }
          },
          v);
    case Function::Norm:
      if (const auto* t = std::get_if<Triple>(&v)) return norm(*t);
      return norm(std::get<Mat33>(v));
    case Function::NormSq:
      if (const auto* t = std::get_if<Triple>(&v)) return norm_sq(*t);
      return norm_sq(std::get<Mat33>(v));
    case Function::Conj:
      return conj(std::get<Triple>(v));
    case Function::ToComplex:
      return to_complex(std::get<Triple>(v));
    case Function::RowSums:
      return row_sums(std::get<Mat33>(v));
    case Function::Chars:
      return character_transform(std::get<Mat33>(v));
  }
  mismatch(n, "unknown function");
}

Value eval_node(const Node& n) {
  return std::visit(
      Overloaded{
          [](const Number& num) -> Value { return ExactScalar(num.value); },
          [](const Name& nm) -> Value {
            if (nm.name == "sqrt3") return ExactScalar::sqrt3();
            return unit_value(*unit_from_token(nm.name));
          },
          [&](const Literal& lit) -> Value {
            std::vector<ExactScalar> parts;
            parts.reserve(lit.parts.size());
            for (const auto& p : lit.parts) {
              parts.push_back(eval_scalar(*p));
              if (parts.back().sign() < 0) {
                throw EvalError(p->position, "component " + parts.back().to_string() + " is negative");
              }
            }
            switch (lit.kind) {
              case Kind::Pair: return UPair(parts[0], parts[1]);
              case Kind::Triple: return Triple(parts[0], parts[1], parts[2]);
              default:
                return Mat33::from_rows({{{parts[0], parts[1], parts[2]},
                                          {parts[3], parts[4], parts[5]},
                                          {parts[6], parts[7], parts[8]}}});
            }
          },
          [&](const Unary& u) -> Value { return -eval_scalar(*u.operand); },
          [&](const Binary& b) -> Value { return eval_binary(n, b); },
          [&](const Power& p) -> Value {
            const Value base = eval_node(*p.base);
            return std::visit(
                [&](const auto& x) -> Value {
                  using T = std::decay_t<decltype(x)>;
                  if constexpr (std::is_same_v<T, ExactScalar>) {
                    return signfree::pow(x, p.exponent);
                  } else if constexpr (std::is_same_v<T, UPair>) {
                    return power(x, p.exponent, UPair(1, 0));
                  } else if constexpr (std::is_same_v<T, Triple>) {
                    return power(x, p.exponent, Triple(1, 0, 0));
                  } else if constexpr (std::is_same_v<T, Mat33>) {
                    return signfree::pow(x, p.exponent);
                  } else {
                    mismatch(n, "cannot raise to a power");
                  }
                },
                base);
          },
          [&](const Call& c) -> Value { return eval_call(n, c); },
      },
      n.data);
}

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

Kind check(const Expression& e) { return check_node(*e.root); }

Kind kind_of(const Value& v) {
  return static_cast<Kind>(v.index());
}

Value evaluate(const Expression& e) {
  check(e);
  return eval_node(*e.root);
}

std::string format_complex(ComplexValue z) {
  double re = z.real();
  double im = z.imag();
  if (re == 0.0) re = 0.0;
  if (im == 0.0) im = 0.0;
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%c%.12g*i", re, std::signbit(im) ? '-' : '+', std::fabs(im));
  return buf;
}

std::string format(const Value& v) {
  return std::visit(
      Overloaded{
          [](const ExactScalar& x) { return x.to_string(); },
          [](const UPair& x) { return x.to_string(); },
          [](const Triple& x) { return x.to_string(); },
          [](const Mat33& x) { return x.to_string(); },
          [](double x) { return format_real(x); },
          [](const ComplexValue& z) { return format_complex(z); },
          [](const Characters& psi) {
            return "chars{" + format_complex(psi[0]) + "," + format_complex(psi[1]) + "," + format_complex(psi[2]) + "}";
          },
      },
      v);
}

std::string evaluate_text(std::string_view text) { return format(evaluate(parse(text))); }

std::string unit_help() {
  std::string out;
  for (UnitName u : all_units()) {
    out += "  " + std::string(token(u));
    out.append(6 - std::min<std::size_t>(5, token(u).size()), ' ');
    out += "= " + std::string(label(u)) + "\n";
  }
  return out;
}

}  // namespace signfree::expr
