#include "bispec/algebra/json_io.hpp"

#include <string>

#include "bispec/algebra/error.hpp"

namespace bispec::algebra {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ParseError(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

Rational rational_from_json(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError("rational must be a string \"p/q\" or an integer");
}

}  // namespace

Json to_json(const GaussianRational& z) {
  Json j;
  j["re"] = format_rational(z.re());
  j["im"] = format_rational(z.im());
  return j;
}

Json to_json(const MatC& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = std::move(rows);
  return j;
}

Json to_json(const MatPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  Json j;
  j["dim"] = p.dim();
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json to_json(const ScalarPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  Json j;
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json to_json(const RatMatZ& f) {
  Json j;
  j["num"] = to_json(f.numerator());
  j["den"] = to_json(f.denominator());
  return j;
}

Json to_json(const MatLaurent& v) {
  Json coeffs = Json::array();
  for (const auto& c : v.coeffs()) coeffs.push_back(to_json(c));
  Json j;
  j["dim"] = v.dim();
  j["residue"] = to_json(v.residue());
  j["coeffs"] = std::move(coeffs);
  j["terminating"] = v.is_terminating();
  return j;
}

GaussianRational gaussian_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return GaussianRational(rational_from_json(j));
  Rational re = rational_from_json(field(j, "re"));
  Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
  return {std::move(re), std::move(im)};
}

MatC mat_from_json(const Json& j) {
  const std::size_t rows = size_field(j, "rows");
  const std::size_t cols = size_field(j, "cols");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows) throw ParseError("matrix \"entries\" must have \"rows\" rows");
  MatC m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = entries[r];
    if (!row.is_array() || row.size() != cols) {
      throw ParseError("matrix row " + std::to_string(r) + " must have \"cols\" entries");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = gaussian_from_json(row[c]);
  }
  return m;
}

MatPoly matpoly_from_json(const Json& j) {
  const std::size_t dim = size_field(j, "dim");
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) throw ParseError("\"coeffs\" must be an array");
  std::vector<MatC> cs;
  cs.reserve(coeffs.size());
  for (const auto& c : coeffs) cs.push_back(mat_from_json(c));
  for (const auto& c : cs) {
    if (c.rows() != dim || c.cols() != dim) throw DimensionMismatch("polynomial coefficient is not dim x dim");
  }
  return MatPoly(dim, std::move(cs));
}

ScalarPoly scalarpoly_from_json(const Json& j) {
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) throw ParseError("\"coeffs\" must be an array");
  std::vector<GaussianRational> cs;
  cs.reserve(coeffs.size());
  for (const auto& c : coeffs) cs.push_back(gaussian_from_json(c));
  return ScalarPoly(std::move(cs));
}

RatMatZ ratmat_from_json(const Json& j) {
  ScalarPoly den = scalarpoly_from_json(field(j, "den"));
  if (den.is_zero()) throw ParseError("rational function with zero denominator");
  return {matpoly_from_json(field(j, "num")), std::move(den)};
}

MatLaurent laurent_from_json(const Json& j) {
  const std::size_t dim = size_field(j, "dim");
  MatC residue = mat_from_json(field(j, "residue"));
  if (residue.rows() != dim || residue.cols() != dim) throw DimensionMismatch("residue is not dim x dim");
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) throw ParseError("\"coeffs\" must be an array");
  std::vector<MatC> cs;
  for (const auto& c : coeffs) cs.push_back(mat_from_json(c));
  const bool terminating = j.contains("terminating") && j.at("terminating").get<bool>();
  return MatLaurent(std::move(residue), std::move(cs), terminating);
}

}  // namespace bispec::algebra
