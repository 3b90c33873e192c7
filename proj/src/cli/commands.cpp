#include "bispec/cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "bispec/algebra/error.hpp"
#include "bispec/algebra/json_io.hpp"
#include "bispec/autonomous/checks.hpp"
#include "bispec/autonomous/recursion.hpp"
#include "bispec/cli/codec.hpp"
#include "bispec/cli/fixtures.hpp"
#include "bispec/spectral/membership.hpp"
#include "bispec/spectral/operator.hpp"
#include "bispec/verify/oracles.hpp"

namespace bispec::cli {

using algebra::GaussianRational;
using algebra::Json;
using algebra::MatC;
using algebra::MatLaurent;
using algebra::MatPolyX;
using algebra::Rational;

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// Maps the exception hierarchy onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const NotAMember& e) {
    err << "not a member: " << e.what() << '\n';
    return kNegativeVerdict;
  } catch (const Error& e) {
    err << "mathematical inconsistency: " << e.what() << '\n';
    return kMathError;
  }
}

void emit(std::ostream& out, Format format, const Json& j, const std::string& text) {
  if (format == Format::Json) {
    out << j.dump(2) << '\n';
  } else {
    out << text;
  }
}

void check_work_cap(const MatPolyX& theta, std::size_t n) {
  const std::size_t work = (spectral::theta_degree(theta) + 1) * n;
  const std::size_t cap = max_degree_from_env();
  if (work > cap) {
    throw InputError("(deg theta + 1) N = " + std::to_string(work) + " exceeds BISPECTRAL_MAX_DEGREE = " +
                     std::to_string(cap));
  }
}

std::string render_certificate(const spectral::MembershipCertificate& cert) {
  std::ostringstream os;
  if (cert.member) {
    os << "member: yes\n";
  } else {
    os << "member: no\nfailed: " << spectral::to_string(*cert.failed);
    if (cert.k) os << " (k = " << *cert.k << ")";
    os << "\nwitness: " << cert.witness->to_string() << '\n';
  }
  return os.str();
}

std::string render_report(const verify::OracleReport& r) {
  std::ostringstream os;
  os << (r.passed ? "  PASS " : "  FAIL ") << r.name;
  if (r.discrepancy) {
    os << " at " << r.discrepancy->location << ": expected " << r.discrepancy->expected << ", got "
       << r.discrepancy->got;
  }
  os << '\n';
  return os.str();
}

}  // namespace

algebra::GaussianRational parse_eval_point(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return GaussianRational(algebra::parse_rational(text));
  return GaussianRational::parse(text.substr(0, comma), text.substr(comma + 1));
}

std::size_t max_degree_from_env() {
  const char* raw = std::getenv("BISPECTRAL_MAX_DEGREE");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxDegree;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string_view(raw).size() || v == 0) throw std::invalid_argument(raw);
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw InputError(std::string("BISPECTRAL_MAX_DEGREE must be a positive integer, got \"") + raw + "\"");
  }
}

int cmd_solve(const SolveOptions& opts, Format format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SeedFile file = seed_from_json(read_json_file(opts.seed_file));
    const std::size_t K = opts.order ? *opts.order : file.K.value_or(kDefaultOrder);
    if (K < 3) throw InputError("truncation order must be at least 3");
    const auto& form = file.seed.residue_form;
    const MatLaurent canonical = autonomous::recurse_coefficients(file.seed, K);
    MatLaurent original = autonomous::to_original_basis(canonical, form);
    if (original.is_terminating()) {
      // Everything past the last nonzero coefficient is known to vanish.
      const auto keep = static_cast<std::size_t>(std::max(original.last_known_nonzero(), -1L) + 1);
      std::vector<MatC> coeffs(original.coeffs().begin(), original.coeffs().begin() + keep);
      original = MatLaurent(original.residue(), std::move(coeffs), true);
    }

    Json j;
    j["m"] = form.m;
    j["K"] = K;
    j["series"] = algebra::to_json(original);
    std::ostringstream text;
    text << "m = " << form.m << ", K = " << K << (canonical.is_terminating() ? ", exact" : "") << '\n';
    text << "V_-1 = " << original.residue().to_string() << '\n';
    for (std::size_t k = 0; k < original.coeffs().size(); ++k) {
      text << "V_" << k << " = " << original.coeffs()[k].to_string() << '\n';
    }

    if (opts.eval) {
      const GaussianRational x = parse_eval_point(*opts.eval);
      autonomous::SeriesValue value = autonomous::eval_series(canonical, x, K);
      std::optional<Rational> tail = value.tail_bound;
      // ||S A S^-1|| <= ||S|| ||A|| ||S^-1||; skipped when S is the identity.
      if (tail && !(form.similarity == MatC::identity(form.dim()))) {
        *tail *= algebra::sqrt_upper_bound(algebra::frobenius_norm_sq(form.similarity)) *
                 algebra::sqrt_upper_bound(algebra::frobenius_norm_sq(form.similarity_inverse));
      }
      const MatC v = form.to_original(value.value);
      Json e;
      e["x"] = algebra::to_json(x);
      e["value"] = algebra::to_json(v);
      e["tail_bound"] = tail ? Json(algebra::format_rational(*tail)) : Json(nullptr);
      j["evaluation"] = std::move(e);
      text << "V(" << x.to_string() << ") = " << v.to_string() << '\n';
      text << "tail bound: " << (tail ? algebra::format_rational(*tail) : std::string("unavailable")) << '\n';
    }
    emit(out, format, j, text.str());
    return kOk;
  });
}

int cmd_membership(const MembershipOptions& opts, Format format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const MatPolyX theta = algebra::matpoly_from_json(read_json_file(opts.theta_file));
    const MatLaurent v = potential_from_json(read_json_file(opts.potential_file));
    if (theta.dim() != v.dim()) throw DimensionMismatch("theta and the potential have different dimensions");
    check_work_cap(theta, v.dim());
    const auto cert = spectral::membership(theta, v);
    emit(out, format, to_json(cert), render_certificate(cert));
    return cert.member ? kOk : kNegativeVerdict;
  });
}

int cmd_synthesize(const SynthesizeOptions& opts, Format format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const MatPolyX theta = algebra::matpoly_from_json(read_json_file(opts.theta_file));
    const MatLaurent v = potential_from_json(read_json_file(opts.potential_file));
    if (theta.dim() != v.dim()) throw DimensionMismatch("theta and the potential have different dimensions");
    check_work_cap(theta, v.dim());
    const auto cert = spectral::membership(theta, v);
    if (!cert.member) {
      Json j;
      j["certificate"] = to_json(cert);
      j["operator"] = nullptr;
      emit(out, format, j, render_certificate(cert));
      return kNegativeVerdict;
    }
    const spectral::Synthesis syn = spectral::synthesize(theta, v);
    std::vector<verify::OracleReport> reports;
    if (opts.verify != VerifyMode::Expand) {
      verify::OracleReport r{"lambda_residual", true, std::nullopt};
      const auto residual = spectral::lambda_residual(theta, syn.op, v);
      for (std::size_t i = 0; i < residual.size(); ++i) {
        if (!residual[i].is_zero()) {
          r.fail("x^" + std::to_string(static_cast<long>(i) - 1), "0", residual[i].to_string());
          break;
        }
      }
      reports.push_back(std::move(r));
    }
    if (opts.verify != VerifyMode::Residual) reports.push_back(verify::expand_bispectral_identity(theta, syn.op, v, 0));

    Json checks = Json::array();
    std::string text;
    bool verified = true;
    for (const auto& r : reports) {
      verified = verified && r.passed;
      checks.push_back(to_json(r));
      text += render_report(r);
    }
    Json j;
    j["certificate"] = to_json(cert);
    j["sign"] = syn.sign > 0 ? "standard" : "opposite";
    j["verification"] = std::move(checks);
    if (!verified) {
      j["operator"] = nullptr;
      emit(out, format, j, "verification failed; operator withheld\n" + text);
      return kMathError;
    }
    j["operator"] = to_json(syn.op);
    std::ostringstream os;
    os << "B of order " << syn.op.order << '\n';
    for (std::size_t i = 0; i < syn.op.b.size(); ++i) os << "b_" << i << "(z) = " << syn.op.b[i].to_string() << '\n';
    emit(out, format, j, os.str() + text);
    return kOk;
  });
}

int cmd_fixtures(const FixturesOptions& opts, Format format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.case_name && opts.all) throw InputError("--case and --all are mutually exclusive");
    const std::vector<std::string> names = opts.case_name ? std::vector<std::string>{*opts.case_name} : fixture_names();
    const std::vector<FixtureReport> reports = run_fixtures(names);
    bool ok = true;
    Json all = Json::array();
    std::ostringstream text;
    for (const auto& r : reports) {
      if (!r.report_only) ok = ok && r.passed();
      all.push_back(to_json(r));
      text << r.name << (r.report_only ? " [report]" : (r.passed() ? " PASS" : " FAIL")) << '\n';
      for (const auto& c : r.checks) text << render_report(c);
      for (const auto& note : r.notes) text << "  note: " << note << '\n';
    }
    Json j;
    j["fixtures"] = std::move(all);
    j["passed"] = ok;
    emit(out, format, j, text.str());
    return ok ? kOk : kNegativeVerdict;
  });
}

}  // namespace bispec::cli
