#include "signfree/matrix.hpp"

#include <cmath>

namespace signfree {

namespace {

const char* col_name(Col s) {
  switch (s) {
    case Col::A: return "A";
    case Col::B: return "B";
    case Col::C: return "C";
  }
  return "?";
}

}  // namespace

Mat33 Mat33::from_rows(const std::array<std::array<ExactScalar, 3>, 3>& rows) {
  return {Triple(rows[0][0], rows[1][0], rows[2][0]), Triple(rows[0][1], rows[1][1], rows[2][1]),
          Triple(rows[0][2], rows[1][2], rows[2][2])};
}

bool Mat33::is_reduced() const {
  return cols_[0].is_reduced() && cols_[1].is_reduced() && cols_[2].is_reduced();
}

std::string Mat33::to_string() const {
  std::string out = "m{";
  for (std::size_t r = 0; r < 3; ++r) {
    if (r > 0) out += ";";
    out += "[";
    for (std::size_t s = 0; s < 3; ++s) {
      if (s > 0) out += ",";
      out += entry(r, s).to_string();
    }
    out += "]";
  }
  return out + "}";
}

Mat33 operator+(const Mat33& x, const Mat33& y) {
  return {x.column(Col::A) + y.column(Col::A), x.column(Col::B) + y.column(Col::B),
          x.column(Col::C) + y.column(Col::C)};
}

Mat33 operator*(const Mat33& x, const Mat33& y) {
  const Triple& a1 = x.column(Col::A);
  const Triple& b1 = x.column(Col::B);
  const Triple& c1 = x.column(Col::C);
  const Triple& a2 = y.column(Col::A);
  const Triple& b2 = y.column(Col::B);
  const Triple& c2 = y.column(Col::C);
  return {
      a1 * a2 + b1 * c2 + b2 * c1,
      a1 * b2 + a2 * b1 + c1 * c2,
      a1 * c2 + a2 * c1 + b1 * b2,
  };
}

Mat33 scale(const ExactScalar& s, const Mat33& x) {
  if (s.sign() < 0) throw NegativeValue("cannot scale a (3*3)-matrix by a negative scalar");
  return {scale(s, x.column(Col::A)), scale(s, x.column(Col::B)), scale(s, x.column(Col::C))};
}

Mat33 pow(const Mat33& x, unsigned n) {
  Mat33 result(Triple(1, 0, 0), Triple(), Triple());
  for (unsigned i = 0; i < n; ++i) result = result * x;
  return result;
}

Mat33 reduce(const Mat33& x) {
  return {reduce(x.column(Col::A)), reduce(x.column(Col::B)), reduce(x.column(Col::C))};
}

bool equivalent(const Mat33& x, const Mat33& y) { return reduce(x) == reduce(y); }

Triple row_sums(const Mat33& x) { return x.column(Col::A) + x.column(Col::B) + x.column(Col::C); }

ExactScalar norm_sq(const Mat33& x) { return norm_sq(row_sums(x)); }

double norm(const Mat33& x) { return norm(row_sums(x)); }

Mat33 absolute_zero(const ExactScalar& xi, const ExactScalar& zeta, const ExactScalar& eta) {
  return {Triple(xi, xi, xi), Triple(zeta, zeta, zeta), Triple(eta, eta, eta)};
}

std::vector<RowSelector> RowSelector::all() {
  std::vector<RowSelector> out;
  out.reserve(27);
  constexpr std::array cols{Col::A, Col::B, Col::C};
  for (Col ra : cols) {
    for (Col rb : cols) {
      for (Col rc : cols) out.push_back(RowSelector{{ra, rb, rc}});
    }
  }
  return out;
}

std::string RowSelector::to_string() const {
  return std::string("a->") + col_name(choice[0]) + ",b->" + col_name(choice[1]) + ",c->" + col_name(choice[2]);
}

Mat33 rotation_zero(const RowSelector& sel, const ExactScalar& xi) {
  if (xi.sign() <= 0) throw std::invalid_argument("rotation zero needs a positive entry");
  std::array<std::array<ExactScalar, 3>, 3> rows{};
  for (std::size_t r = 0; r < 3; ++r) rows[r][static_cast<std::size_t>(sel.choice[r])] = xi;
  return Mat33::from_rows(rows);
}

ExactCharacters exact_character_transform(const Mat33& x) {
  const ExactComplex w = omega();
  const ExactComplex w2 = w * w;
  const ExactComplex one{ExactScalar(1), ExactScalar(0)};
  const std::array<ExactComplex, 3> powers{one, w, w2};
  const ExactComplex pa = to_exact_complex(x.column(Col::A));
  const ExactComplex pb = to_exact_complex(x.column(Col::B));
  const ExactComplex pc = to_exact_complex(x.column(Col::C));
  ExactCharacters psi;
  for (std::size_t q = 0; q < 3; ++q) psi[q] = pa + powers[q] * pb + powers[(2 * q) % 3] * pc;
  return psi;
}

Characters character_transform(const Mat33& x) {
  const double h = std::sqrt(3.0) / 2.0;
  const std::array<ComplexValue, 3> powers{ComplexValue(1.0, 0.0), ComplexValue(-0.5, h), ComplexValue(-0.5, -h)};
  const ComplexValue pa = to_complex(x.column(Col::A));
  const ComplexValue pb = to_complex(x.column(Col::B));
  const ComplexValue pc = to_complex(x.column(Col::C));
  Characters psi;
  for (std::size_t q = 0; q < 3; ++q) psi[q] = pa + powers[q] * pb + powers[(2 * q) % 3] * pc;
  return psi;
}

Mat33 from_characters(const ExactCharacters& psi) {
  const ExactComplex w = omega();
  const ExactComplex w2 = w * w;
  const ExactScalar third = ExactScalar::fraction(1, 3);
  const ExactComplex phi_a = third * (psi[0] + psi[1] + psi[2]);
  const ExactComplex phi_b = third * (psi[0] + w2 * psi[1] + w * psi[2]);
  const ExactComplex phi_c = third * (psi[0] + w * psi[1] + w2 * psi[2]);
  return {complex_to_triple(phi_a), complex_to_triple(phi_b), complex_to_triple(phi_c)};
}

}  // namespace signfree
