#include "signfree/units.hpp"

#include <stdexcept>

namespace signfree {

namespace {

using IntRows = std::array<std::array<int, 3>, 3>;

struct UnitSpec {
  std::string_view label;
  std::string_view token;
  ExactScalar factor;
  IntRows rows;
};

Mat33 scaled_rows(const ExactScalar& factor, const IntRows& rows) {
  std::array<std::array<ExactScalar, 3>, 3> entries;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t s = 0; s < 3; ++s) entries[r][s] = factor * ExactScalar(rows[r][s]);
  }
  return Mat33::from_rows(entries);
}

const std::array<UnitSpec, kUnitCount>& unit_specs() {
  static const std::array<UnitSpec, kUnitCount> specs = [] {
    const ExactScalar one(1);
    const ExactScalar third = ExactScalar::fraction(1, 3);
    const ExactScalar root_third(Rational(0), Rational(1, 3));
    const ExactScalar root_ninth(Rational(0), Rational(1, 9));
    return std::array<UnitSpec, kUnitCount>{{
        {"1", "ONE", one, {{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}}},
        {"-1", "NEG1", one, {{{0, 0, 0}, {1, 0, 0}, {1, 0, 0}}}},
        {"J", "J", third, {{{1, 2, 2}, {0, 2, 0}, {0, 0, 2}}}},
        {"-J", "NJ", third, {{{0, 0, 0}, {1, 0, 2}, {1, 2, 0}}}},
        {"K", "K", third, {{{1, 2, 2}, {0, 0, 2}, {0, 2, 0}}}},
        {"-K", "NK", third, {{{0, 0, 0}, {1, 2, 0}, {1, 0, 2}}}},
        {"L", "L", third, {{{1, 0, 0}, {0, 2, 2}, {0, 2, 2}}}},
        {"-L", "NL", third, {{{0, 2, 2}, {1, 0, 0}, {1, 0, 0}}}},
        {"i", "I", root_third, {{{1, 0, 0}, {2, 0, 0}, {0, 0, 0}}}},
        {"-i", "NI", root_third, {{{1, 0, 0}, {0, 0, 0}, {2, 0, 0}}}},
        {"j", "JJ", root_ninth, {{{1, 0, 4}, {2, 4, 2}, {0, 2, 0}}}},
        {"-j", "NJJ", root_ninth, {{{1, 4, 0}, {0, 0, 2}, {2, 2, 4}}}},
        {"k", "KK", root_ninth, {{{1, 4, 0}, {2, 2, 4}, {0, 0, 2}}}},
        {"-k", "NKK", root_ninth, {{{1, 0, 4}, {0, 2, 0}, {2, 4, 2}}}},
        {"l", "LL", root_ninth, {{{1, 2, 2}, {2, 0, 0}, {0, 4, 4}}}},
        {"-l", "NLL", root_ninth, {{{1, 2, 2}, {0, 4, 4}, {2, 0, 0}}}},
    }};
  }();
  return specs;
}

const UnitSpec& spec(UnitName u) { return unit_specs()[static_cast<std::size_t>(u)]; }

using LabelGrid = std::array<std::array<std::string_view, 8>, 8>;

// The three tables as printed (rows top to bottom, columns left to right).
constexpr LabelGrid kPlusOneTable{{
    {"1", "-1", "J", "-J", "K", "-K", "L", "-L"},
    {"-1", "1", "-J", "J", "-K", "K", "-L", "L"},
    {"J", "-J", "1", "-1", "-L", "L", "-K", "K"},
    {"-J", "J", "-1", "1", "L", "-L", "K", "-K"},
    {"K", "-K", "-L", "L", "1", "-1", "-J", "J"},
    {"-K", "K", "L", "-L", "-1", "1", "J", "-J"},
    {"L", "-L", "-K", "K", "-J", "J", "1", "-1"},
    {"-L", "L", "K", "-K", "J", "-J", "-1", "1"},
}};

constexpr LabelGrid kImaginaryTable{{
    {"-1", "1", "-J", "J", "-K", "K", "-L", "L"},
    {"1", "-1", "J", "-J", "K", "-K", "L", "-L"},
    {"-J", "J", "-1", "1", "L", "-L", "K", "-K"},
    {"J", "-J", "1", "-1", "-L", "L", "-K", "K"},
    {"-K", "K", "L", "-L", "-1", "1", "J", "-J"},
    {"K", "-K", "-L", "L", "1", "-1", "-J", "J"},
    {"-L", "L", "K", "-K", "J", "-J", "-1", "1"},
    {"L", "-L", "-K", "K", "-J", "J", "1", "-1"},
}};

// Rows are the roots of +1, columns the imaginary units. The printed table
// capitalizes two lowercase labels (the header "k" and the cell at (-J, k));
// they are lowercase here.
constexpr LabelGrid kMixedTable{{
    {"i", "-i", "j", "-j", "k", "-k", "l", "-l"},
    {"-i", "i", "-j", "j", "-k", "k", "-l", "l"},
    {"j", "-j", "i", "-i", "-l", "l", "-k", "k"},
    {"-j", "j", "-i", "i", "l", "-l", "k", "-k"},
    {"k", "-k", "-l", "l", "i", "-i", "-j", "j"},
    {"-k", "k", "l", "-l", "-i", "i", "j", "-j"},
    {"l", "-l", "-k", "k", "-j", "j", "i", "-i"},
    {"-l", "l", "k", "-k", "j", "-j", "-i", "i"},
}};

const LabelGrid& grid(UnitTable t) {
  switch (t) {
    case UnitTable::PlusOne: return kPlusOneTable;
    case UnitTable::Imaginary: return kImaginaryTable;
    case UnitTable::Mixed: return kMixedTable;
  }
  throw std::invalid_argument("unknown table");
}

Mat33 listed(const IntRows& rows) { return scaled_rows(ExactScalar(1), rows); }

}  // namespace

std::array<UnitName, kUnitCount> all_units() {
  std::array<UnitName, kUnitCount> out{};
  for (std::size_t i = 0; i < kUnitCount; ++i) out[i] = static_cast<UnitName>(i);
  return out;
}

std::string_view label(UnitName u) { return spec(u).label; }
std::string_view token(UnitName u) { return spec(u).token; }

std::optional<UnitName> unit_from_label(std::string_view s) {
  for (UnitName u : all_units()) {
    if (label(u) == s) return u;
  }
  return std::nullopt;
}

std::optional<UnitName> unit_from_token(std::string_view s) {
  for (UnitName u : all_units()) {
    if (token(u) == s) return u;
  }
  return std::nullopt;
}

Mat33 unit_value(UnitName u) { return scaled_rows(spec(u).factor, spec(u).rows); }

UnitSet standard_units() {
  static const UnitSet units = [] {
    UnitSet out;
    for (UnitName u : all_units()) out[static_cast<std::size_t>(u)] = unit_value(u);
    return out;
  }();
  return units;
}

std::string_view table_id(UnitTable t) {
  switch (t) {
    case UnitTable::PlusOne: return "plus-one";
    case UnitTable::Imaginary: return "imaginary";
    case UnitTable::Mixed: return "mixed";
  }
  return "?";
}

std::array<UnitTable, 3> all_tables() { return {UnitTable::PlusOne, UnitTable::Imaginary, UnitTable::Mixed}; }

std::size_t TableReport::passed() const {
  std::size_t n = 0;
  for (const auto& cell : cells) n += cell.pass ? 1 : 0;
  return n;
}

std::array<UnitName, 8> table_rows(UnitTable t) { return t == UnitTable::Imaginary ? kImaginaryUnits : kRootsOfOne; }

std::array<UnitName, 8> table_cols(UnitTable t) { return t == UnitTable::PlusOne ? kRootsOfOne : kImaginaryUnits; }

UnitName table_entry(UnitTable t, std::size_t row, std::size_t col) {
  auto u = unit_from_label(grid(t).at(row).at(col));
  if (!u) throw std::logic_error("bad table label");
  return *u;
}

TableReport verify_unit_table(UnitTable t, const UnitSet& units) {
  TableReport report{t, {}};
  report.cells.reserve(64);
  const auto rows = table_rows(t);
  const auto cols = table_cols(t);
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) {
      const UnitName expected = table_entry(t, r, c);
      Mat33 computed =
          reduce(units[static_cast<std::size_t>(rows[r])] * units[static_cast<std::size_t>(cols[c])]);
      const bool pass = computed == reduce(units[static_cast<std::size_t>(expected)]);
      report.cells.push_back({rows[r], cols[c], expected, std::move(computed), pass});
    }
  }
  return report;
}

std::optional<UnitName> identify_unit(const Mat33& x, const UnitSet& units) {
  const Mat33 rx = reduce(x);
  for (UnitName u : all_units()) {
    if (reduce(units[static_cast<std::size_t>(u)]) == rx) return u;
  }
  return std::nullopt;
}

std::vector<std::size_t> find_square_roots(const Mat33& target, std::span<const Mat33> candidates) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (equivalent(candidates[i] * candidates[i], target)) out.push_back(i);
  }
  return out;
}

std::array<Mat33, 8> listed_roots_of_nine() {
  return {
      listed({{{3, 0, 0}, {0, 0, 0}, {0, 0, 0}}}), listed({{{0, 0, 0}, {3, 0, 0}, {3, 0, 0}}}),
      listed({{{1, 2, 2}, {0, 2, 0}, {0, 0, 2}}}), listed({{{0, 0, 0}, {1, 0, 2}, {1, 2, 0}}}),
      listed({{{1, 2, 2}, {0, 0, 2}, {0, 2, 0}}}), listed({{{0, 0, 0}, {1, 2, 0}, {1, 0, 2}}}),
      listed({{{1, 0, 0}, {0, 2, 2}, {0, 2, 2}}}), listed({{{0, 2, 2}, {1, 0, 0}, {1, 0, 0}}}),
  };
}

std::array<Mat33, 8> listed_roots_of_minus_27() {
  return {
      listed({{{3, 0, 0}, {6, 0, 0}, {0, 0, 0}}}), listed({{{3, 0, 0}, {0, 0, 0}, {6, 0, 0}}}),
      listed({{{1, 0, 4}, {2, 4, 2}, {0, 2, 0}}}), listed({{{1, 4, 0}, {0, 0, 2}, {2, 2, 4}}}),
      listed({{{1, 4, 0}, {2, 2, 4}, {0, 0, 2}}}), listed({{{1, 0, 4}, {0, 2, 0}, {2, 4, 2}}}),
      listed({{{1, 2, 2}, {2, 0, 0}, {0, 4, 4}}}), listed({{{1, 2, 2}, {0, 4, 4}, {2, 0, 0}}}),
  };
}

std::array<Mat33, 8> sign_pattern_candidates(bool imaginary) {
  const ExactComplex plus = imaginary ? ExactComplex{ExactScalar(0), ExactScalar(1)}
                                      : ExactComplex{ExactScalar(1), ExactScalar(0)};
  const ExactComplex minus{-plus.re, -plus.im};
  std::array<Mat33, 8> out;
  for (unsigned bits = 0; bits < 8; ++bits) {
    ExactCharacters psi;
    for (unsigned q = 0; q < 3; ++q) psi[q] = (bits >> (2 - q)) & 1U ? minus : plus;
    out[bits] = from_characters(psi);
  }
  return out;
}

}  // namespace signfree
