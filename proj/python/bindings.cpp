// Python bindings. Rationals cross the boundary as fractions.Fraction,
// matrices as lists of rows; reports are returned as JSON text.

#include "betamat/commands.hpp"
#include "betamat/identities.hpp"
#include "betamat/linalg.hpp"
#include "betamat/matrices.hpp"
#include "betamat/orthogonality.hpp"
#include "betamat/polyroots.hpp"
#include "betamat/positivity.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace betamat;

namespace {

py::object fraction_type() {
  static py::object type = py::module_::import("fractions").attr("Fraction");
  return type;
}

py::object to_py(const Rational& r) { return fraction_type()(r.str()); }

// Accepts int, Fraction or "p/q" text; floats are rejected to keep inputs exact.
Rational from_py(const py::handle& obj) {
  if (py::isinstance<py::float_>(obj)) {
    throw py::type_error("floats are not accepted; pass int, Fraction or 'p/q'");
  }
  return Rational::parse(py::str(obj).cast<std::string>());
}

py::list to_py(const Matrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (const auto& e : m.row(i)) {
      row.append(to_py(e));
    }
    rows.append(row);
  }
  return rows;
}

Matrix matrix_from_py(const py::sequence& rows) {
  const std::size_t r = py::len(rows);
  if (r == 0) {
    throw py::value_error("matrix must have at least one row");
  }
  const std::size_t c = py::len(rows[0]);
  std::vector<Rational> entries;
  for (const auto& row : rows) {
    const auto seq = row.cast<py::sequence>();
    if (py::len(seq) != c) {
      throw py::value_error("matrix rows must have equal length");
    }
    for (const auto& cell : seq) {
      entries.push_back(from_py(cell));
    }
  }
  return Matrix(r, c, std::move(entries));
}

std::vector<Rational> list_from_py(const py::sequence& seq) {
  std::vector<Rational> out;
  for (const auto& x : seq) {
    out.push_back(from_py(x));
  }
  return out;
}

py::list to_py(std::span<const Rational> values) {
  py::list out;
  for (const auto& v : values) {
    out.append(to_py(v));
  }
  return out;
}

py::tuple to_py(const InertiaTriple& t) { return py::make_tuple(t.positive, t.zero, t.negative); }

py::dict to_py(const VerificationReport& r) {
  py::dict d;
  d["identity"] = r.identity_name;
  d["n"] = r.n;
  d["holds"] = r.holds;
  if (r.witness) {
    py::dict w;
    w["row"] = r.witness->row;
    w["col"] = r.witness->col;
    w["lhs"] = to_py(r.witness->lhs);
    w["rhs"] = to_py(r.witness->rhs);
    w["relation"] = r.witness->relation;
    w["detail"] = r.witness->detail;
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

py::tuple to_py(const Interval& iv) { return py::make_tuple(to_py(iv.lo), to_py(iv.hi)); }

BetaParams params_from_py(const py::sequence& lambdas, const py::sequence& mus, long m) {
  BetaParams p{list_from_py(lambdas), list_from_py(mus), m};
  p.validate();
  return p;
}

std::string dump(const CommandResult& r) { return to_json(r.report).dump(); }

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Exact beta-function matrices: construction, closed forms and verification";
  mod.attr("__version__") = kVersion;

  py::register_exception<InvalidParameters>(mod, "InvalidParameters", PyExc_ValueError);
  py::register_exception<SingularMatrix>(mod, "SingularMatrix", PyExc_ArithmeticError);
  py::register_exception<UsageError>(mod, "UsageError", PyExc_ValueError);

  mod.def("generate", [](const std::string& kind, long n) { return to_py(generate(kind, n)); },
          py::arg("kind"), py::arg("n"), "Matrix of the given kind (beta, beta-recip, pascal-hinv, k, a, b, d1, d2).");
  mod.def("beta_matrix", [](long n) { return to_py(beta_matrix(n)); }, py::arg("n"));
  mod.def("beta_recip_matrix", [](long n) { return to_py(beta_recip_matrix(n)); }, py::arg("n"));
  mod.def("pascal_hadamard_inverse", [](long n) { return to_py(pascal_hadamard_inverse(n)); }, py::arg("n"));

  mod.def("det", [](const py::sequence& a) { return to_py(det_bareiss(matrix_from_py(a))); }, py::arg("matrix"));
  mod.def("inverse", [](const py::sequence& a) { return to_py(inverse_exact(matrix_from_py(a))); }, py::arg("matrix"));
  mod.def("char_poly", [](const py::sequence& a) {
    const Polynomial p = char_poly(matrix_from_py(a));
    return to_py(p.coefficients());
  }, py::arg("matrix"), "Coefficients of det(xI - A), highest degree first.");
  mod.def("inertia", [](const py::sequence& a) { return to_py(inertia_symmetric(matrix_from_py(a))); },
          py::arg("matrix"), "(positive, zero, negative) eigenvalue counts of a symmetric matrix.");

  mod.def("closed_form_det", [](long n) { return to_py(closed_form_det(n)); }, py::arg("n"));
  mod.def("closed_form_inverse", [](long n) { return to_py(closed_form_inverse(n)); }, py::arg("n"));
  mod.def("closed_form_lu", [](long n) {
    const LUFactors lu = closed_form_LU(n);
    return py::make_tuple(to_py(lu.lower), to_py(lu.upper));
  }, py::arg("n"));
  mod.def("verify_summation", [](long n) { return to_py(verify_summation_grid(n)); }, py::arg("n"));

  mod.def("sign_changes", [](const py::sequence& c) { return sign_changes(Polynomial(list_from_py(c))); },
          py::arg("coefficients"));
  mod.def("positive_roots", [](const py::sequence& c) { return sturm_positive_roots(Polynomial(list_from_py(c))); },
          py::arg("coefficients"), "Positive real roots counted with multiplicity.");

  mod.def("is_totally_positive", [](const py::sequence& a) { return is_totally_positive(matrix_from_py(a)).holds; },
          py::arg("matrix"));
  mod.def("is_totally_nonnegative",
          [](const py::sequence& a) { return is_totally_nonnegative(matrix_from_py(a)).holds; }, py::arg("matrix"));
  mod.def("verify_nonsingularity", [](const py::sequence& lambdas, const py::sequence& mus, long m) {
    return to_py(verify_nonsingularity(params_from_py(lambdas, mus, m)));
  }, py::arg("lambdas"), py::arg("mus"), py::arg("m") = 1);
  mod.def("verify_tp", [](const py::sequence& lambdas, const py::sequence& mus, long m) {
    return to_py(verify_tp_hadamard_power(params_from_py(lambdas, mus, m)));
  }, py::arg("lambdas"), py::arg("mus"), py::arg("m") = 1);

  mod.def("trace_norm", [](const py::sequence& a, const py::handle& t, const py::handle& precision) {
    return to_py(trace_norm_at(matrix_from_py(a), from_py(t), from_py(precision)));
  }, py::arg("matrix"), py::arg("t"), py::arg("precision"), "Certified enclosure (lo, hi) of ||A + tI||_1.");
  mod.def("bj_orthogonal", [](const py::sequence& a) {
    const BJReport r = bj_orthogonal_to_identity(matrix_from_py(a));
    py::dict d;
    d["n"] = r.n;
    d["inertia"] = to_py(r.inertia);
    d["orthogonal"] = r.orthogonal;
    if (r.violation) {
      d["violation"] = py::dict(py::arg("t") = to_py(r.violation->t),
                                py::arg("norm_at_zero") = to_py(r.violation->norm_at_zero),
                                py::arg("norm_at_t") = to_py(r.violation->norm_at_t));
    } else {
      d["violation"] = py::none();
    }
    return d;
  }, py::arg("matrix"));

  mod.def("_run_gen", [](const std::string& kind, std::optional<long> n, std::optional<std::string> lambdas,
                         std::optional<std::string> mus, long m) {
    return dump(run_gen(GenRequest{kind, n, lambdas, mus, m}));
  }, py::arg("kind"), py::arg("n") = py::none(), py::arg("lambdas") = py::none(), py::arg("mus") = py::none(),
     py::arg("m") = 1);
  mod.def("_run_analyze", [](std::optional<long> n, std::optional<py::sequence> matrix) {
    std::optional<Matrix> m;
    if (matrix) {
      m = matrix_from_py(*matrix);
    }
    const CommandResult r = run_analyze(n, m, "python");
    return dump(r);
  }, py::arg("n") = py::none(), py::arg("matrix") = py::none());
  mod.def("_run_verify", [](const std::string& theorem, std::optional<long> n, std::optional<long> n_max,
                            std::uint64_t seed, std::optional<std::size_t> samples) {
    VerifyRequest req;
    req.theorem = theorem;
    req.n = n;
    req.n_max = n_max;
    req.seed = seed;
    req.samples = samples;
    const CommandResult r = run_verify(req);
    return py::make_tuple(dump(r), r.exit_code);
  }, py::arg("theorem"), py::arg("n") = py::none(), py::arg("n_max") = py::none(), py::arg("seed") = 42,
     py::arg("samples") = py::none());
}
