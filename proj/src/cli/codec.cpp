#include "bispec/cli/codec.hpp"

#include "bispec/algebra/error.hpp"

namespace bispec::cli {

using algebra::MatC;

SeedFile seed_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("seed must be a JSON object");
  for (const char* key : {"residue", "V0", "V1"}) {
    if (!j.contains(key)) throw ParseError(std::string("seed is missing \"") + key + "\"");
  }
  std::optional<MatC> v212;
  if (j.contains("V212") && !j.at("V212").is_null()) v212 = algebra::mat_from_json(j.at("V212"));
  std::optional<std::size_t> K;
  if (j.contains("K") && !j.at("K").is_null()) {
    const Json& k = j.at("K");
    if (!k.is_number_integer() || k.get<long long>() < 0) throw ParseError("\"K\" must be a nonnegative integer");
    K = k.get<std::size_t>();
  }
  auto seed = autonomous::SeedData::from_original(algebra::mat_from_json(j.at("residue")),
                                                  algebra::mat_from_json(j.at("V0")),
                                                  algebra::mat_from_json(j.at("V1")), v212);
  return {std::move(seed), K};
}

Json to_json(const autonomous::SeedData& seed, std::optional<std::size_t> K) {
  const auto& form = seed.residue_form;
  Json j;
  j["residue"] = algebra::to_json(form.to_original(seed.residue()));
  j["V0"] = algebra::to_json(form.to_original(seed.V0));
  j["V1"] = algebra::to_json(form.to_original(seed.V1));
  j["V212"] = seed.V212.empty() ? Json(nullptr) : algebra::to_json(seed.V212);
  j["K"] = K ? Json(*K) : Json(nullptr);
  return j;
}

algebra::MatLaurent potential_from_json(const Json& j) {
  if (j.is_object() && j.contains("residue")) {
    algebra::MatLaurent v = algebra::laurent_from_json(j);
    return algebra::MatLaurent(v.residue(), v.coeffs(), true);
  }
  return algebra::MatLaurent::from_polynomial(algebra::matpoly_from_json(j));
}

Json to_json(const spectral::MembershipCertificate& cert) {
  Json j;
  j["member"] = cert.member;
  j["failed"] = cert.failed ? Json(spectral::to_string(*cert.failed)) : Json(nullptr);
  j["k"] = cert.k ? Json(*cert.k) : Json(nullptr);
  j["witness"] = cert.witness ? algebra::to_json(*cert.witness) : Json(nullptr);
  return j;
}

Json to_json(const spectral::DiffOpZ& op) {
  Json b = Json::array();
  for (const auto& bj : op.b) b.push_back(algebra::to_json(bj));
  Json j;
  j["order"] = op.order;
  j["b"] = std::move(b);
  return j;
}

spectral::DiffOpZ diffop_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("b")) throw ParseError("operator needs \"order\" and \"b\"");
  spectral::DiffOpZ op;
  op.order = j.at("order").get<std::size_t>();
  for (const auto& bj : j.at("b")) op.b.push_back(algebra::ratmat_from_json(bj));
  if (op.b.size() != op.order + 1) throw ParseError("operator must have order + 1 coefficients");
  return op;
}

Json to_json(const verify::OracleReport& report) {
  Json j;
  j["name"] = report.name;
  j["passed"] = report.passed;
  if (report.discrepancy) {
    Json d;
    d["location"] = report.discrepancy->location;
    d["expected"] = report.discrepancy->expected;
    d["got"] = report.discrepancy->got;
    j["discrepancy"] = std::move(d);
  } else {
    j["discrepancy"] = nullptr;
  }
  return j;
}

}  // namespace bispec::cli
