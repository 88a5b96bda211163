#include "betamat/commands.hpp"

#include "betamat/identities.hpp"
#include "betamat/linalg.hpp"
#include "betamat/matrices.hpp"
#include "betamat/orthogonality.hpp"
#include "betamat/positivity.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

namespace betamat {

const std::vector<std::string>& gen_kinds() {
  static const std::vector<std::string> kinds{"beta", "beta-recip", "pascal-hinv", "k", "a",
                                              "b",    "d1",         "d2",          "generalized"};
  return kinds;
}

const std::vector<std::string>& verify_theorems() {
  static const std::vector<std::string> theorems{"det-formula", "inverse-formula", "lu",      "k-factorization",
                                                 "a-involution", "b-inverse",      "summation", "inertia",
                                                 "bj",          "pascal",          "tp",      "nonsingular"};
  return theorems;
}

Matrix generate(const std::string& kind, long n) {
  static const std::vector<std::pair<std::string, std::function<Matrix(long)>>> table{
      {"beta", beta_matrix}, {"beta-recip", beta_recip_matrix}, {"pascal-hinv", pascal_hadamard_inverse},
      {"k", k_matrix},       {"a", a_matrix},                   {"b", b_matrix},
      {"d1", d1_matrix},     {"d2", d2_matrix}};
  for (const auto& [name, make] : table) {
    if (name == kind) {
      if (n < 1) {
        throw UsageError("matrix order must be at least 1, got " + std::to_string(n));
      }
      return make(n);
    }
  }
  throw UsageError("unknown matrix kind '" + kind + "'");
}

namespace {

BetaParams params_from(const std::optional<std::string>& lambdas, const std::optional<std::string>& mus, long m) {
  if (!lambdas || !mus) {
    throw UsageError("--lambdas and --mus are both required");
  }
  BetaParams params;
  try {
    params.lambdas = parse_rational_list(*lambdas);
    params.mus = parse_rational_list(*mus);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  params.m = m;
  try {
    params.validate();
  } catch (const InvalidParameters& e) {
    throw UsageError(e.what());
  }
  return params;
}

json params_to_json(const BetaParams& params) {
  json lambdas = json::array();
  json mus = json::array();
  for (const auto& l : params.lambdas) {
    lambdas.push_back(l.str());
  }
  for (const auto& u : params.mus) {
    mus.push_back(u.str());
  }
  return json{{"lambdas", lambdas}, {"mus", mus}, {"m", params.m}};
}

json scales_to_json(const std::vector<GammaMonomial>& scales) {
  json out = json::array();
  for (const auto& g : scales) {
    out.push_back(g.describe());
  }
  return out;
}

json scaled_to_json(const ScaledMatrix& s) {
  json out{{"left_scale", scales_to_json(s.left_scale)},
           {"core", matrix_to_json(s.core)},
           {"right_scale", scales_to_json(s.right_scale)}};
  const auto full = s.exact_full();
  out["full"] = full ? matrix_to_json(*full) : json(nullptr);
  return out;
}

}  // namespace

CommandResult run_gen(const GenRequest& request) {
  CommandResult out;
  out.report.command = "gen";
  out.report.parameters["kind"] = request.kind;
  if (request.kind == "generalized") {
    const BetaParams params = params_from(request.lambdas, request.mus, request.m);
    out.report.parameters["lambdas"] = *request.lambdas;
    out.report.parameters["mus"] = *request.mus;
    out.report.parameters["m"] = request.m;
    out.report.results = scaled_to_json(generalized_beta_reduced(params));
    return out;
  }
  if (!request.n) {
    throw UsageError("--n is required for kind '" + request.kind + "'");
  }
  out.report.parameters["n"] = *request.n;
  out.report.results["matrix"] = matrix_to_json(generate(request.kind, *request.n));
  return out;
}

CommandResult run_analyze(std::optional<long> n, const std::optional<Matrix>& matrix, const std::string& source) {
  if (n.has_value() == matrix.has_value()) {
    throw UsageError("analyze needs exactly one of --n or --matrix");
  }
  CommandResult out;
  out.report.command = "analyze";
  Matrix a;
  if (n) {
    if (*n < 1) {
      throw UsageError("matrix order must be at least 1, got " + std::to_string(*n));
    }
    out.report.parameters["n"] = *n;
    out.report.parameters["kind"] = "beta";
    a = beta_matrix(*n);
  } else {
    out.report.parameters["matrix"] = source;
    a = *matrix;
  }
  if (!a.is_square()) {
    throw UsageError("analyze needs a square matrix");
  }
  auto& r = out.report.results;
  r["rows"] = a.rows();
  const Rational det = det_bareiss(a);
  r["det"] = det.str();
  r["symmetric"] = a.is_symmetric();
  r["inertia"] = a.is_symmetric() ? inertia_to_json(inertia_symmetric(a)) : json(nullptr);
  json poly = json::array();
  const Polynomial p = char_poly(a);
  for (const auto& c : p.coefficients()) {
    poly.push_back(c.str());
  }
  r["char_poly"] = poly;
  r["singular"] = det.is_zero();
  if (det.is_zero()) {
    r["inverse_is_integer"] = nullptr;
    r["inverse"] = nullptr;
  } else {
    const Matrix inv = inverse_exact(a);
    r["inverse_is_integer"] = inv.all_integer();
    r["inverse"] = matrix_to_json(inv);
  }
  return out;
}

namespace {

struct Range {
  long lo;
  long hi;
};

Range range_for(const VerifyRequest& request, long default_max) {
  if (request.n && request.n_max) {
    throw UsageError("use either --n or --n-max, not both");
  }
  if (request.n) {
    if (*request.n < 1) {
      throw UsageError("--n must be at least 1");
    }
    return {*request.n, *request.n};
  }
  const long hi = request.n_max.value_or(default_max);
  if (hi < 1) {
    throw UsageError("--n-max must be at least 1");
  }
  return {1, hi};
}

json instance(const VerificationReport& report) { return verification_to_json(report); }

VerificationReport check(const std::string& name, long n, bool holds, const Rational& lhs, const Rational& rhs,
                         std::string detail = {}) {
  VerificationReport report{name, n, holds, std::nullopt};
  if (!holds) {
    report.witness = Witness{0, 0, lhs, rhs, "==", std::move(detail)};
  }
  return report;
}

InertiaTriple expected_inertia(long n) {
  const auto size = static_cast<std::size_t>(n);
  if (n % 2 == 0) {
    return {size / 2, 0, size / 2};
  }
  return {(size + 1) / 2, 0, (size - 1) / 2};
}

json verify_inertia_of(const std::string& name, long n, const Matrix& a) {
  const InertiaTriple got = inertia_symmetric(a);
  const InertiaTriple want = expected_inertia(n);
  json j = instance(VerificationReport{name, n, got == want, std::nullopt});
  j["inertia"] = inertia_to_json(got);
  j["expected"] = inertia_to_json(want);
  return j;
}

json verify_bj_of(const std::string& name, long n, const Matrix& a) {
  const BJReport bj = bj_orthogonal_to_identity(a);
  const bool expected = n % 2 == 0;
  json j = instance(VerificationReport{name, n, bj.orthogonal == expected, std::nullopt});
  j["orthogonal"] = bj.orthogonal;
  j["inertia"] = inertia_to_json(bj.inertia);
  if (bj.violation) {
    const auto& v = *bj.violation;
    j["violation"] = json{{"t", v.t.str()},
                          {"norm_at_zero", {v.norm_at_zero.lo.str(), v.norm_at_zero.hi.str()}},
                          {"norm_at_t", {v.norm_at_t.lo.str(), v.norm_at_t.hi.str()}}};
  } else {
    j["violation"] = nullptr;
  }
  return j;
}

std::vector<BetaParams> sample_params(const VerifyRequest& request, std::size_t default_samples, Report& report) {
  if (request.lambdas || request.mus) {
    return {params_from(request.lambdas, request.mus, request.m)};
  }
  const std::size_t samples = request.samples.value_or(default_samples);
  report.seed = request.seed;
  report.parameters["samples"] = samples;
  std::mt19937_64 rng(request.seed);
  std::vector<BetaParams> out;
  out.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    out.push_back(random_beta_params(rng, 5, 3));
  }
  return out;
}

}  // namespace

CommandResult run_verify(const VerifyRequest& request) {
  const auto& known = verify_theorems();
  if (std::find(known.begin(), known.end(), request.theorem) == known.end()) {
    throw UsageError("unknown theorem label '" + request.theorem + "'");
  }
  CommandResult out;
  Report& report = out.report;
  report.command = "verify";
  report.parameters["theorem"] = request.theorem;
  json instances = json::array();
  const std::string& t = request.theorem;

  auto for_range = [&](long default_max, const std::function<void(long)>& body) {
    const Range range = range_for(request, default_max);
    report.parameters["n_min"] = range.lo;
    report.parameters["n_max"] = range.hi;
    for (long n = range.lo; n <= range.hi; ++n) {
      body(n);
    }
  };

  if (t == "det-formula") {
    for_range(12, [&](long n) {
      const Rational det = det_bareiss(beta_matrix(n));
      const Rational closed = closed_form_det(n);
      json j = instance(check("det-formula", n, det == closed, det, closed));
      j["det"] = det.str();
      // Consecutive determinants share a sign exactly when n is even.
      const int product_sign = det.sign() * det_bareiss(beta_matrix(n + 1)).sign();
      const int expected_sign = n % 2 == 0 ? 1 : -1;
      j["sign_law"] = det.sign() == beta_det_sign(n);
      j["consecutive_sign_law"] = product_sign == expected_sign;
      j["holds"] = j["holds"].get<bool>() && j["sign_law"].get<bool>() && j["consecutive_sign_law"].get<bool>();
      instances.push_back(std::move(j));
    });
  } else if (t == "inverse-formula") {
    for_range(10, [&](long n) {
      const Matrix inv = inverse_exact(beta_matrix(n));
      json j = instance(compare_matrices("inverse-formula", n, inv, closed_form_inverse(n)));
      j["integer"] = inv.all_integer();
      j["holds"] = j["holds"].get<bool>() && inv.all_integer();
      instances.push_back(std::move(j));
    });
  } else if (t == "lu") {
    for_range(10, [&](long n) {
      const LUFactors lu = closed_form_LU(n);
      json j = instance(compare_matrices("lu", n, lu.lower * lu.upper, inverse_exact(beta_matrix(n))));
      j["lower_triangular"] = is_lower_triangular(lu.lower);
      j["upper_triangular"] = is_upper_triangular(lu.upper);
      j["holds"] = j["holds"].get<bool>() && is_lower_triangular(lu.lower) && is_upper_triangular(lu.upper);
      instances.push_back(std::move(j));
    });
  } else if (t == "k-factorization") {
    for_range(10, [&](long n) { instances.push_back(instance(verify_K_factorization(n))); });
  } else if (t == "a-involution") {
    for_range(10, [&](long n) { instances.push_back(instance(verify_A_involution(n))); });
  } else if (t == "b-inverse") {
    for_range(10, [&](long n) { instances.push_back(instance(verify_B_inverse(n))); });
  } else if (t == "summation") {
    for_range(10, [&](long n) {
      for (long i = 1; i <= n; ++i) {
        for (long j = 1; j <= n; ++j) {
          json inst = instance(verify_summation_identity(n, i, j));
          inst["i"] = i;
          inst["j"] = j;
          instances.push_back(std::move(inst));
        }
      }
    });
  } else if (t == "inertia") {
    for_range(12, [&](long n) { instances.push_back(verify_inertia_of("inertia", n, beta_matrix(n))); });
  } else if (t == "bj") {
    for_range(12, [&](long n) { instances.push_back(verify_bj_of("bj", n, beta_matrix(n))); });
  } else if (t == "pascal") {
    for_range(10, [&](long n) {
      const Matrix p = pascal_hadamard_inverse(n);
      json j = instance(verify_pascal_det_sign(n));
      const json inertia = verify_inertia_of("pascal-inertia", n, p);
      const json bj = verify_bj_of("pascal-bj", n, p);
      j["inertia"] = inertia["inertia"];
      j["orthogonal"] = bj["orthogonal"];
      j["holds"] = j["holds"].get<bool>() && inertia["holds"].get<bool>() && bj["holds"].get<bool>();
      instances.push_back(std::move(j));
    });
  } else if (t == "tp" || t == "nonsingular") {
    const bool tp = t == "tp";
    for (const auto& params : sample_params(request, tp ? 50 : 200, report)) {
      json j = instance(tp ? verify_tp_hadamard_power(params) : verify_nonsingularity(params));
      j["params"] = params_to_json(params);
      if (tp && params.size() <= 4) {
        const Matrix core = reciprocal_beta_reduced(params).core;
        const bool agrees = is_totally_positive_exhaustive(core).holds == is_totally_positive(core).holds;
        j["exhaustive_agrees"] = agrees;
        j["holds"] = j["holds"].get<bool>() && agrees;
      }
      if (!tp) {
        j["beta_core_det"] = det_bareiss(generalized_beta_reduced(params).core).str();
      }
      instances.push_back(std::move(j));
    }
  }

  std::size_t passed = 0;
  for (const auto& inst : instances) {
    passed += inst["holds"].get<bool>() ? 1 : 0;
  }
  const bool all_pass = passed == instances.size();
  report.results["theorem"] = t;
  report.results["passed"] = passed;
  report.results["failed"] = instances.size() - passed;
  report.results["all_pass"] = all_pass;
  report.results["instances"] = std::move(instances);
  out.exit_code = all_pass ? kExitPass : kExitFailure;
  return out;
}

std::string report_to_csv(const Report& report) {
  const json& r = report.results;
  if (report.command == "gen" && r.contains("matrix")) {
    return matrix_to_csv(matrix_from_json(r["matrix"]));
  }
  if (report.command == "analyze") {
    std::ostringstream out;
    out << "field,value\n";
    out << "det," << r["det"].get<std::string>() << '\n';
    out << "symmetric," << (r["symmetric"].get<bool>() ? "true" : "false") << '\n';
    if (!r["inertia"].is_null()) {
      out << "inertia_positive," << r["inertia"]["positive"] << '\n';
      out << "inertia_zero," << r["inertia"]["zero"] << '\n';
      out << "inertia_negative," << r["inertia"]["negative"] << '\n';
    }
    out << "singular," << (r["singular"].get<bool>() ? "true" : "false") << '\n';
    out << "inverse_is_integer,"
        << (r["inverse_is_integer"].is_null() ? "" : (r["inverse_is_integer"].get<bool>() ? "true" : "false"))
        << '\n';
    return out.str();
  }
  throw UsageError("CSV output is only available for gen (matrix kinds) and analyze");
}

Matrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open matrix file '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  try {
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
      return matrix_from_csv(text);
    }
    const json j = json::parse(text);
    return matrix_from_json(j.is_object() ? j.at("matrix") : j);
  } catch (const std::exception& e) {
    throw UsageError("cannot parse matrix file '" + path + "': " + e.what());
  }
}

}  // namespace betamat
