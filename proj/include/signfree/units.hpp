#ifndef SIGNFREE_UNITS_HPP
#define SIGNFREE_UNITS_HPP

#include "signfree/matrix.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace signfree {

// The eight square roots of +1 come first, then the eight square roots of -1.
enum class UnitName {
  One, NegOne, J, NegJ, K, NegK, L, NegL,
  I, NegI, Jj, NegJj, Kk, NegKk, Ll, NegLl,
};

inline constexpr std::size_t kUnitCount = 16;
inline constexpr std::array<UnitName, 8> kRootsOfOne{UnitName::One, UnitName::NegOne, UnitName::J, UnitName::NegJ,
                                                     UnitName::K,   UnitName::NegK,   UnitName::L, UnitName::NegL};
inline constexpr std::array<UnitName, 8> kImaginaryUnits{UnitName::I,  UnitName::NegI,  UnitName::Jj, UnitName::NegJj,
                                                         UnitName::Kk, UnitName::NegKk, UnitName::Ll, UnitName::NegLl};

std::array<UnitName, kUnitCount> all_units();

/// Conventional label: "1", "-1", "J", ..., "i", "-i", "j", ..., "-l".
std::string_view label(UnitName u);
/// Expression-language token: ONE, NEG1, J, NJ, ..., I, NI, JJ, NJJ, ...
std::string_view token(UnitName u);
std::optional<UnitName> unit_from_label(std::string_view s);
std::optional<UnitName> unit_from_token(std::string_view s);

/// The exact constant for a named unit.
Mat33 unit_value(UnitName u);

/// Unit constants indexed by UnitName. Table checks take one of these so a
/// test can substitute a corrupted set.
using UnitSet = std::array<Mat33, kUnitCount>;
UnitSet standard_units();

enum class UnitTable { PlusOne, Imaginary, Mixed };

std::string_view table_id(UnitTable t);
std::array<UnitTable, 3> all_tables();

struct TableCell {
  UnitName row;
  UnitName col;
  UnitName expected;
  Mat33 computed;  // reduced product
  bool pass = false;
};

struct TableReport {
  UnitTable table;
  std::vector<TableCell> cells;  // row-major, 64 entries

  std::size_t passed() const;
  bool all_passed() const { return passed() == cells.size(); }
};

/// Row and column headers of a multiplication table.
std::array<UnitName, 8> table_rows(UnitTable t);
std::array<UnitName, 8> table_cols(UnitTable t);
/// Entry as printed: expected product of row and column unit.
UnitName table_entry(UnitTable t, std::size_t row, std::size_t col);

/// Multiplies every row unit by every column unit and compares the reduced
/// product with the tabulated entry, exactly.
TableReport verify_unit_table(UnitTable t, const UnitSet& units = standard_units());

/// Which unit, if any, the reduced form of x equals.
std::optional<UnitName> identify_unit(const Mat33& x, const UnitSet& units = standard_units());

/// Indices of the candidates whose square equals target modulo absolute zeros.
std::vector<std::size_t> find_square_roots(const Mat33& target, std::span<const Mat33> candidates);

/// The eight listed square roots of 9 and the eight listed square roots of
/// -27 (the unscaled imaginary units), as printed.
std::array<Mat33, 8> listed_roots_of_nine();
std::array<Mat33, 8> listed_roots_of_minus_27();

/// Matrices whose character triple is (s0, s1, s2) with every s in {+1, -1}
/// (or {+i, -i} when `imaginary`), built exactly by the inverse character
/// transform. Order: sign bits of (s0, s1, s2), all-plus first.
std::array<Mat33, 8> sign_pattern_candidates(bool imaginary);

}  // namespace signfree

#endif  // SIGNFREE_UNITS_HPP
