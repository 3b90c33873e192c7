#pragma once

#include <cstddef>
#include <optional>

#include "bispec/algebra/json_io.hpp"
#include "bispec/autonomous/seed.hpp"
#include "bispec/spectral/membership.hpp"
#include "bispec/spectral/operator.hpp"
#include "bispec/verify/oracles.hpp"

namespace bispec::cli {

using algebra::Json;

// Seed file: {"residue", "V0", "V1"} in the caller's basis, "V212" in the
// canonical basis (or null) and an optional truncation order "K".
struct SeedFile {
  autonomous::SeedData seed;
  std::optional<std::size_t> K;
};

SeedFile seed_from_json(const Json& j);
Json to_json(const autonomous::SeedData& seed, std::optional<std::size_t> K);

// A potential is either a MatPolyX or, when it carries "residue", an exactly
// known Laurent series.
algebra::MatLaurent potential_from_json(const Json& j);

Json to_json(const spectral::MembershipCertificate& cert);
Json to_json(const spectral::DiffOpZ& op);
spectral::DiffOpZ diffop_from_json(const Json& j);
Json to_json(const verify::OracleReport& report);

}  // namespace bispec::cli
