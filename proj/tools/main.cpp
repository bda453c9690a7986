#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "hyper3/cli/fuzz.hpp"
#include "hyper3/cli/parse.hpp"
#include "hyper3/cli/report.hpp"

using namespace hyper3;

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitError = 1;
constexpr int kExitNotEquivalent = 2;
constexpr int kExitUnsupported = 3;

std::string read_source(const std::string& file, const std::string& equation) {
  if (!equation.empty()) return equation;
  if (file.empty() || file == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_code(SolveOutcome::Tag t) {
  switch (t) {
    case SolveOutcome::Tag::Solved:
      return kExitSolved;
    case SolveOutcome::Tag::NotEquivalent:
      return kExitNotEquivalent;
    case SolveOutcome::Tag::Unsupported:
      return kExitUnsupported;
  }
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide equivalence of third-order linear ODEs to the 3F2/2F2/1F2/0F2 equations and solve them"};
  app.require_subcommand(1);

  std::string file, equation, verify_mode = "both";
  bool json = false, trace = false;
  int series_order = 25;
  double tolerance = 1e-8;

  auto* solve_cmd = app.add_subcommand("solve", "Solve an equation (file, stdin or --equation)");
  solve_cmd->add_option("file", file, "Input file; '-' or omitted reads stdin");
  solve_cmd->add_option("-e,--equation", equation, "Equation text");
  solve_cmd->add_flag("--json", json, "JSON output");
  solve_cmd->add_flag("--trace", trace, "Include the decision trace");
  solve_cmd->add_option("--verify", verify_mode, "exact, numeric or both; the exact certificate is always computed")
      ->check(CLI::IsMember({"exact", "numeric", "both"}));
  solve_cmd->add_option("--series-order", series_order, "Series truncation order")->check(CLI::Range(4, 400));
  solve_cmd->add_option("--tolerance", tolerance, "Relative residual tolerance")->check(CLI::PositiveNumber);

  auto* inv_cmd = app.add_subcommand("invariants", "Print I, J, L and the singularity profile");
  inv_cmd->add_option("file", file, "Input file; '-' or omitted reads stdin");
  inv_cmd->add_option("-e,--equation", equation, "Equation text");
  inv_cmd->add_flag("--json", json, "JSON output");

  int cases = 200;
  std::uint64_t seed = 1;
  std::string family;
  bool include_degenerate = false;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Generate planted equations and solve them back");
  fuzz_cmd->add_option("--cases", cases, "Number of cases")->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--seed", seed, "Base random seed");
  fuzz_cmd->add_option("--family", family, "Restrict to one family")
      ->check(CLI::IsMember({"3F2", "2F2", "1F2", "0F2"}));
  fuzz_cmd->add_flag("--include-degenerate", include_degenerate, "Allow degenerate parameter sets");
  fuzz_cmd->add_flag("--json", json, "JSON lines output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fuzz_cmd->parsed()) {
      FuzzOptions fo;
      if (!family.empty()) fo.family = family_from_name(family);
      fo.include_degenerate = include_degenerate;
      int solved = 0;
      for (int i = 0; i < cases; ++i) {
        const FuzzResult r = run_fuzz_case(i, seed, fo, SolveOptions{});
        const bool ok = r.outcome.tag == SolveOutcome::Tag::Solved;
        solved += ok;
        if (json) {
          std::cout << "{\"case\": " << i << ", \"seed\": " << r.planted.rng_seed << ", \"planted\": \""
                    << to_string(r.planted.family) << "\", \"outcome\": \"" << tag_name(r.outcome.tag)
                    << "\", \"family_matches\": " << (r.family_matches ? "true" : "false") << "}\n";
        } else {
          std::cout << "case " << i << " seed " << r.planted.rng_seed << " " << to_string(r.planted.family) << " -> "
                    << tag_name(r.outcome.tag);
          if (r.outcome.solved) std::cout << " " << to_string(r.outcome.solved->family);
          std::cout << "\n";
        }
      }
      std::cerr << solved << "/" << cases << " solved\n";
      return solved == cases ? kExitSolved : kExitNotEquivalent;
    }

    const Ode3 ode = parse_ode(read_input_doc(read_source(file, equation)));
    if (inv_cmd->parsed()) {
      std::cout << (json ? invariants_json(ode) : invariants_text(ode));
      return kExitSolved;
    }
    SolveOptions so;
    so.verify.numeric = verify_mode != "exact";
    so.verify.series_order = series_order;
    so.tolerance = tolerance;
    const SolveOutcome out = solve(ode, so);
    const ReportOptions ro{trace, tolerance};
    std::cout << (json ? solve_json(ode, out, ro) : solve_text(ode, out, ro));
    return exit_code(out.tag);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
