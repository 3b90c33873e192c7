#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "bispec/cli/commands.hpp"

namespace {

using namespace bispec::cli;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and bispectral verifier for V'' = V'V"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output;
  Format format = Format::Json;
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"text", Format::Text}};
  app.add_option("--output", output, "Write the result here instead of stdout");
  app.add_option("--format", format, "json or text")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Laurent coefficients of the solution for a seed");
  solve_cmd->add_option("seed", solve.seed_file, "Seed JSON file")->required();
  solve_cmd->add_option("-K,--order", solve.order, "Truncation order (default 32)");
  solve_cmd->add_option("--eval", solve.eval, "Evaluation point, p/q or re,im");

  MembershipOptions membership;
  auto* member_cmd = app.add_subcommand("membership", "Decide whether theta lies in the bispectral algebra");
  member_cmd->add_option("theta", membership.theta_file, "Matrix polynomial JSON")->required();
  member_cmd->add_option("potential", membership.potential_file, "Potential JSON")->required();

  SynthesizeOptions synth;
  const std::map<std::string, VerifyMode> modes{
      {"residual", VerifyMode::Residual}, {"expand", VerifyMode::Expand}, {"both", VerifyMode::Both}};
  auto* synth_cmd = app.add_subcommand("synthesize", "Build and verify the spectral operator B");
  synth_cmd->add_option("theta", synth.theta_file, "Matrix polynomial JSON")->required();
  synth_cmd->add_option("potential", synth.potential_file, "Potential JSON")->required();
  synth_cmd->add_option("--verify", synth.verify, "residual, expand or both")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));

  FixturesOptions fixtures;
  std::string case_name;
  auto* fix_cmd = app.add_subcommand("fixtures", "Run the worked-example corpus");
  auto* case_opt = fix_cmd->add_option("--case", case_name, "n1, n2, n3, residue_full or scalar_tanh");
  auto* all_flag = fix_cmd->add_flag("--all", fixtures.all, "Run every case");
  case_opt->excludes(all_flag);

  // CLI11 usage errors are input errors.
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  if (!case_opt->empty()) fixtures.case_name = case_name;

  std::ostringstream buffer;
  int code = kOk;
  if (*solve_cmd) {
    code = cmd_solve(solve, format, buffer, std::cerr);
  } else if (*member_cmd) {
    code = cmd_membership(membership, format, buffer, std::cerr);
  } else if (*synth_cmd) {
    code = cmd_synthesize(synth, format, buffer, std::cerr);
  } else {
    code = cmd_fixtures(fixtures, format, buffer, std::cerr);
  }

  if (output.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "input error: cannot write \"" << output << "\"\n";
      return kInputError;
    }
    out << buffer.str();
  }
  return code;
}
