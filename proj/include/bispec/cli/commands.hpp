#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "bispec/algebra/gaussian_rational.hpp"

namespace bispec::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kMathError = 2, kNegativeVerdict = 3 };

enum class Format { Json, Text };
enum class VerifyMode { Residual, Expand, Both };

inline constexpr std::size_t kDefaultOrder = 32;
inline constexpr std::size_t kDefaultMaxDegree = 64;

struct SolveOptions {
  std::string seed_file;
  std::optional<std::size_t> order;  // wins over the seed file's "K"
  std::optional<std::string> eval;
};

struct MembershipOptions {
  std::string theta_file;
  std::string potential_file;
};

struct SynthesizeOptions {
  std::string theta_file;
  std::string potential_file;
  VerifyMode verify = VerifyMode::Both;
};

struct FixturesOptions {
  std::optional<std::string> case_name;
  bool all = false;
};

// Each command writes its result to `out`, diagnostics to `err`, and
// returns the process exit code.
int cmd_solve(const SolveOptions& opts, Format format, std::ostream& out, std::ostream& err);
int cmd_membership(const MembershipOptions& opts, Format format, std::ostream& out, std::ostream& err);
int cmd_synthesize(const SynthesizeOptions& opts, Format format, std::ostream& out, std::ostream& err);
int cmd_fixtures(const FixturesOptions& opts, Format format, std::ostream& out, std::ostream& err);

// "p/q" for a real point, "re,im" for a complex one.
algebra::GaussianRational parse_eval_point(std::string_view text);

// Cap on (deg theta + 1) N, from BISPECTRAL_MAX_DEGREE.
std::size_t max_degree_from_env();

}  // namespace bispec::cli
