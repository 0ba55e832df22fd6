#ifndef SIGNFREE_COMMANDS_HPP
#define SIGNFREE_COMMANDS_HPP

#include "signfree/units.hpp"

#include <cstdint>
#include <iosfwd>
#include <string_view>

namespace signfree::commands {

// Each command writes its report to `out` and returns the process exit
// status: 0 on full success, 1 on a failed check or evaluation error,
// 2 on a usage error.

int eval(std::string_view expression, std::ostream& out, std::ostream& err);

/// Evaluates one expression per line. Blank lines are skipped. With a
/// prompt, errors are reported and the loop continues; the exit status is
/// 1 if any line failed.
int eval_lines(std::istream& in, std::ostream& out, std::ostream& err, bool prompt);

/// Verifies the three unit multiplication tables (192 cells). Machine
/// output is one tab-separated record per cell:
/// table, row unit, column unit, expected, computed, pass|fail.
int tables(std::ostream& out, bool machine, const UnitSet& units = standard_units());

int verify(std::ostream& out, std::size_t samples, std::uint64_t seed, bool machine);

/// Listed roots of 9 and of -27, and the square roots of +1 and -1 among
/// the named units and among character sign-pattern candidates.
int roots(std::ostream& out, bool machine);

}  // namespace signfree::commands

#endif  // SIGNFREE_COMMANDS_HPP
