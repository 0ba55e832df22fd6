#ifndef SIGNFREE_MATRIX_HPP
#define SIGNFREE_MATRIX_HPP

#include "signfree/triple.hpp"

#include <array>
#include <string>
#include <vector>

namespace signfree {

enum class Row { a = 0, b = 1, c = 2 };
enum class Col { A = 0, B = 1, C = 2 };

/// (3*3)-matrix hypercomplex number: three Triple columns A, B, C.
///
/// Columns multiply among themselves by the same cyclic rule as the
/// components of a Triple (B*B = C, B*C = A, C*C = B), with Triple
/// multiplication at the entry level. Rows are printed top to bottom as
/// a, b, c and columns left to right as A, B, C.
///
/// Equality of values is equality modulo the absolute zeros (matrices with
/// constant columns), decided by equivalent(). `==` compares
/// representations.
class Mat33 {
 public:
  Mat33() = default;
  Mat33(Triple col_a, Triple col_b, Triple col_c) : cols_{std::move(col_a), std::move(col_b), std::move(col_c)} {}

  /// Build from printed rows, rows[r][s] being the entry at row r, column s.
  static Mat33 from_rows(const std::array<std::array<ExactScalar, 3>, 3>& rows);

  const Triple& column(Col s) const { return cols_[static_cast<std::size_t>(s)]; }
  const Triple& column(std::size_t s) const { return cols_.at(s); }
  const ExactScalar& entry(Row r, Col s) const { return column(s)[static_cast<std::size_t>(r)]; }
  const ExactScalar& entry(std::size_t r, std::size_t s) const { return column(s)[r]; }

  bool is_reduced() const;

  /// `m{[aA,aB,aC];[bA,bB,bC];[cA,cB,cC]}`
  std::string to_string() const;

  friend bool operator==(const Mat33&, const Mat33&) = default;

 private:
  std::array<Triple, 3> cols_;
};

Mat33 operator+(const Mat33& x, const Mat33& y);
Mat33 operator*(const Mat33& x, const Mat33& y);

/// Throws NegativeValue for s < 0.
Mat33 scale(const ExactScalar& s, const Mat33& x);
/// n-fold product; pow(x, 0) is the unit [1 0 0; 0 0 0; 0 0 0].
Mat33 pow(const Mat33& x, unsigned n);

/// Each column reduced independently.
Mat33 reduce(const Mat33& x);
bool equivalent(const Mat33& x, const Mat33& y);

/// (a_A + a_B + a_C, b_A + b_B + b_C, c_A + c_B + c_C). An algebra
/// homomorphism onto Triples.
Triple row_sums(const Mat33& x);
ExactScalar norm_sq(const Mat33& x);
double norm(const Mat33& x);

/// Column A all xi, B all zeta, C all eta. Throws NegativeValue.
Mat33 absolute_zero(const ExactScalar& xi, const ExactScalar& zeta, const ExactScalar& eta);

/// Picks one column for each row.
struct RowSelector {
  std::array<Col, 3> choice{Col::A, Col::B, Col::C};

  /// All 27 selectors, row a varying slowest.
  static std::vector<RowSelector> all();
  std::string to_string() const;
  friend bool operator==(const RowSelector&, const RowSelector&) = default;
};

/// Entry xi at (r, sel(r)) for every row, zero elsewhere. Row sums are
/// (xi, xi, xi), so the norm vanishes, but the matrix is not an absolute
/// zero. Throws std::invalid_argument unless xi > 0.
Mat33 rotation_zero(const RowSelector& sel, const ExactScalar& xi);

/// psi_q = phi(A) + w^q phi(B) + w^2q phi(C), q = 0, 1, 2, with phi the
/// Triple -> complex map and w = exp(2 pi i / 3). Each psi_q is a ring
/// homomorphism that vanishes exactly on the absolute zeros.
using Characters = std::array<ComplexValue, 3>;
using ExactCharacters = std::array<ExactComplex, 3>;

Characters character_transform(const Mat33& x);
ExactCharacters exact_character_transform(const Mat33& x);
/// Inverse of the character transform; returns the reduced representative.
Mat33 from_characters(const ExactCharacters& psi);

}  // namespace signfree

#endif  // SIGNFREE_MATRIX_HPP
