#include "signfree/commands.hpp"

#include "signfree/expr.hpp"
#include "signfree/properties.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>
#include <string>

namespace signfree::commands {

int eval(std::string_view expression, std::ostream& out, std::ostream& err) {
  try {
    out << expr::evaluate_text(expression) << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 1;
  }
}

int eval_lines(std::istream& in, std::ostream& out, std::ostream& err, bool prompt) {
  int status = 0;
  std::string line;
  while (true) {
    if (prompt) out << "> " << std::flush;
    if (!std::getline(in, line)) break;
    if (std::all_of(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch); })) continue;
    if (prompt && (line == "quit" || line == "exit")) break;
    if (eval(line, out, err) != 0) status = 1;
  }
  if (prompt) out << '\n';
  return status;
}

namespace {

std::string cell_label(const TableCell& cell, const UnitSet& units) {
  auto u = identify_unit(cell.computed, units);
  std::string s = u ? std::string(label(*u)) : "?";
  if (!cell.pass) s += "!";
  return s;
}

void print_grid(std::ostream& out, const TableReport& report, const UnitSet& units) {
  out << "table " << table_id(report.table) << '\n';
  out << std::setw(5) << "x";
  for (UnitName c : table_cols(report.table)) out << std::setw(5) << label(c);
  out << '\n';
  const auto rows = table_rows(report.table);
  for (std::size_t r = 0; r < 8; ++r) {
    out << std::setw(5) << label(rows[r]);
    for (std::size_t c = 0; c < 8; ++c) out << std::setw(5) << cell_label(report.cells[r * 8 + c], units);
    out << '\n';
  }
  for (const auto& cell : report.cells) {
    if (!cell.pass) {
      out << "  FAIL " << label(cell.row) << " x " << label(cell.col) << ": expected " << label(cell.expected)
          << ", computed " << cell.computed.to_string() << '\n';
    }
  }
  out << table_id(report.table) << ": " << report.passed() << "/" << report.cells.size() << " cells pass\n\n";
}

}  // namespace

int tables(std::ostream& out, bool machine, const UnitSet& units) {
  std::size_t passed = 0;
  std::size_t total = 0;
  for (UnitTable t : all_tables()) {
    const TableReport report = verify_unit_table(t, units);
    passed += report.passed();
    total += report.cells.size();
    if (machine) {
      for (const auto& cell : report.cells) {
        out << table_id(t) << '\t' << label(cell.row) << '\t' << label(cell.col) << '\t' << label(cell.expected)
            << '\t' << cell.computed.to_string() << '\t' << (cell.pass ? "pass" : "fail") << '\n';
      }
    } else {
      print_grid(out, report, units);
    }
  }
  if (!machine) out << "total: " << passed << "/" << total << " cells pass\n";
  return passed == total ? 0 : 1;
}

int verify(std::ostream& out, std::size_t samples, std::uint64_t seed, bool machine) {
  if (samples == 0) {
    out << "error: --samples must be positive\n";
    return 2;
  }
  const auto results = run_properties({samples, seed});
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.passed()) ++failed;
    if (machine) {
      out << r.name << '\t' << r.cases << '\t' << r.failures << '\t' << (r.passed() ? "pass" : "fail") << '\n';
    } else {
      out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases";
      if (!r.passed()) out << ", " << r.failures << " failures; first: " << r.first_failure;
      out << ")\n";
    }
  }
  if (!machine) {
    out << "seed " << seed << ", " << samples << " samples: " << (results.size() - failed) << "/" << results.size()
        << " properties pass\n";
  }
  return failed == 0 ? 0 : 1;
}

namespace {

struct RootsPrinter {
  std::ostream& out;
  bool machine;
  bool ok = true;

  void candidate(std::string_view section, const Mat33& m, const Mat33& target, const std::string& name = {}) {
    const Mat33 square = reduce(m * m);
    const bool pass = square == reduce(target);
    ok = ok && pass;
    if (machine) {
      out << section << '\t' << (name.empty() ? m.to_string() : name) << '\t' << square.to_string() << '\t'
          << (pass ? "pass" : "fail") << '\n';
    } else {
      out << "  " << (pass ? "ok   " : "FAIL ");
      if (!name.empty()) out << name << " = ";
      out << m.to_string() << "  squared: " << square.to_string() << '\n';
    }
  }

  void summary(std::string_view what, bool pass, const std::string& detail) {
    ok = ok && pass;
    if (machine) {
      out << what << '\t' << detail << '\t' << (pass ? "pass" : "fail") << '\n';
    } else {
      out << what << ": " << detail << (pass ? "" : "  FAIL") << "\n\n";
    }
  }
};

std::string labels(const std::vector<UnitName>& us) {
  std::string s;
  for (UnitName u : us) s += (s.empty() ? "" : " ") + std::string(label(u));
  return s;
}

void listed_roots(RootsPrinter& p, std::string_view section, const std::array<Mat33, 8>& listed, const Mat33& target) {
  if (!p.machine) p.out << "square roots of " << target.to_string() << " (listed)\n";
  const auto found = find_square_roots(target, listed);
  for (const auto& m : listed) p.candidate(section, m, target);
  p.summary(section, found.size() == listed.size(), std::to_string(found.size()) + "/8 confirmed");
}

void unit_roots(RootsPrinter& p, std::string_view section, UnitName target, const std::array<UnitName, 8>& expected) {
  const UnitSet units = standard_units();
  const auto found = find_square_roots(unit_value(target), units);
  std::vector<UnitName> got;
  for (std::size_t i : found) got.push_back(static_cast<UnitName>(i));
  const bool pass = std::set<UnitName>(got.begin(), got.end()) == std::set<UnitName>(expected.begin(), expected.end());
  if (!p.machine) p.out << "square roots of " << label(target) << " among the 16 named units\n";
  for (UnitName u : got) p.candidate(section, units[static_cast<std::size_t>(u)], unit_value(target), std::string(label(u)));
  p.summary(section, pass, "{" + labels(got) + "}");
}

void pattern_roots(RootsPrinter& p, std::string_view section, bool imaginary) {
  const UnitName target = imaginary ? UnitName::NegOne : UnitName::One;
  const auto& family = imaginary ? kImaginaryUnits : kRootsOfOne;
  const auto candidates = sign_pattern_candidates(imaginary);
  if (!p.machine) {
    p.out << "square roots of " << label(target) << " from character sign patterns (" << (imaginary ? "+-i" : "+-1")
          << ")\n";
  }
  std::set<UnitName> matched;
  for (const auto& m : candidates) {
    auto u = identify_unit(m);
    if (u) matched.insert(*u);
    p.candidate(section, m, unit_value(target), u ? std::string(label(*u)) : std::string("?"));
  }
  const bool pass = matched == std::set<UnitName>(family.begin(), family.end());
  p.summary(section, pass, std::to_string(matched.size()) + "/8 match named units");
}

}  // namespace

int roots(std::ostream& out, bool machine) {
  RootsPrinter p{out, machine};
  listed_roots(p, "roots-of-9", listed_roots_of_nine(), Mat33::from_rows({{{9, 0, 0}, {0, 0, 0}, {0, 0, 0}}}));
  listed_roots(p, "roots-of-minus-27", listed_roots_of_minus_27(),
               Mat33::from_rows({{{0, 0, 0}, {27, 0, 0}, {27, 0, 0}}}));
  unit_roots(p, "roots-of-plus-one", UnitName::One, kRootsOfOne);
  unit_roots(p, "roots-of-minus-one", UnitName::NegOne, kImaginaryUnits);
  pattern_roots(p, "character-roots-of-plus-one", false);
  pattern_roots(p, "character-roots-of-minus-one", true);
  return p.ok ? 0 : 1;
}

}  // namespace signfree::commands
