#include "signfree/commands.hpp"
#include "signfree/expr.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  CLI::App app{"Exact evaluator for unsigned pairs, (3)-vectors and (3*3)-matrix hypercomplex numbers"};
  app.require_subcommand(1);
  app.footer("Unit names:\n" + signfree::expr::unit_help());

  bool machine = false;

  std::string expression;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression (or one per line from standard input)");
  eval->add_option("expression", expression, "e.g. \"reduce(p{3,1} * p{4,6})\"");

  app.add_subcommand("repl", "Interactive evaluator");

  auto* tables = app.add_subcommand("tables", "Verify the three unit multiplication tables");
  tables->add_flag("--machine", machine, "One tab-separated record per cell");

  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  auto* verify = app.add_subcommand("verify", "Property-check the algebraic laws on random samples");
  verify->add_option("--samples", samples, "Random cases per property")->capture_default_str();
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify->add_flag("--machine", machine, "One tab-separated record per property");

  auto* roots = app.add_subcommand("roots", "Check the square roots of 9, -27, +1 and -1");
  roots->add_flag("--machine", machine, "One tab-separated record per candidate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  namespace cmd = signfree::commands;
  if (*eval) {
    if (eval->count("expression") > 0) return cmd::eval(expression, std::cout, std::cerr);
    return cmd::eval_lines(std::cin, std::cout, std::cerr, false);
  }
  if (app.got_subcommand("repl")) return cmd::eval_lines(std::cin, std::cout, std::cerr, true);
  if (*tables) return cmd::tables(std::cout, machine);
  if (*verify) {
    const int status = cmd::verify(std::cout, samples, seed, machine);
    if (status == 2) std::cerr << verify->help();
    return status;
  }
  if (*roots) return cmd::roots(std::cout, machine);
  return 2;
}
