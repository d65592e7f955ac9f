// Python module exposing the main operations.  Rationals cross the boundary
// as fractions.Fraction (exact in both directions); big integers as ints.

#include "dowling/fps.hpp"
#include "dowling/identities.hpp"
#include "dowling/polynomials.hpp"
#include "dowling/rational.hpp"
#include "dowling/series_sum.hpp"
#include "dowling/triangles.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;

namespace pybind11::detail {

template <>
struct type_caster<dowling::Rational> {
 public:
  PYBIND11_TYPE_CASTER(dowling::Rational, const_name("Fraction"));

  bool load(handle src, bool) {
    if (src.is_none()) return false;
    try {
      // int, Fraction, str and exact decimal text all round-trip through
      // the canonical string form.
      value = dowling::parse_rational(py::str(src).cast<std::string>());
      return true;
    } catch (const std::invalid_argument&) {
      return false;
    }
  }

  static handle cast(const dowling::Rational& v, return_value_policy, handle) {
    object fraction = module_::import("fractions").attr("Fraction");
    return fraction(dowling::to_string(v)).release();
  }
};

template <>
struct type_caster<dowling::Integer> {
 public:
  PYBIND11_TYPE_CASTER(dowling::Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!isinstance<int_>(src)) return false;
    value = dowling::Integer(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const dowling::Integer& v, return_value_policy, handle) {
    return py::int_(py::str(v.str())).release();
  }
};

}  // namespace pybind11::detail

namespace {

using dowling::Polynomial;
using dowling::Rational;
namespace ident = dowling::identities;

std::vector<Rational> coefficients(const Polynomial& p) {
  if (p.is_zero()) return {Rational(0)};
  return p.coefficients();
}

ident::IdentityParams make_params(
    const std::optional<Rational>& m, const std::optional<Rational>& a,
    const std::optional<Rational>& a1, const std::optional<Rational>& a2,
    const std::optional<Rational>& x, const std::optional<Rational>& x1,
    const std::optional<Rational>& x2, const std::optional<Rational>& r,
    unsigned n) {
  ident::IdentityParams p;
  p.m = m;
  p.a = a;
  p.a1 = a1;
  p.a2 = a2;
  p.x = x;
  p.x1 = x1;
  p.x2 = x2;
  p.r = r;
  p.n = n;
  return p;
}

py::dict report_to_dict(const ident::IdentityReport& report) {
  py::dict d;
  d["id"] = report.id;
  d["variant"] = ident::to_string(report.variant);
  py::dict params;
  auto put = [&params](const char* name, const std::optional<Rational>& v) {
    if (v) params[name] = *v;
  };
  put("m", report.params.m);
  put("a", report.params.a);
  put("a1", report.params.a1);
  put("a2", report.params.a2);
  put("x", report.params.x);
  put("x1", report.params.x1);
  put("x2", report.params.x2);
  put("r", report.params.r);
  params["n"] = report.params.n;
  d["params"] = params;
  d["verdict"] = ident::to_string(report.verdict);
  d["skip_reason"] = report.skip_reason;
  if (report.verdict != ident::Verdict::skipped) {
    d["lhs"] = report.lhs;
    d["rhs"] = report.rhs;
  } else {
    d["lhs"] = py::none();
    d["rhs"] = py::none();
  }
  if (report.enclosure) {
    d["lo"] = report.enclosure->lo;
    d["hi"] = report.enclosure->hi;
    d["terms_used"] = report.enclosure->terms_used;
  }
  return d;
}

ident::Variant parse_variant(const std::string& text) {
  auto v = ident::variant_from_string(text);
  if (!v)
    throw std::invalid_argument("variant must be 'as-printed' or 'corrected'");
  return *v;
}

}  // namespace

PYBIND11_MODULE(dowling, mod) {
  mod.doc() =
      "Exact arithmetic for geometric, Whitney and Tanny-Dowling number "
      "families: memoized triangles, polynomial families, generating "
      "functions, identity verification and certified series enclosures.";

  // exact arithmetic
  mod.def("binomial", &dowling::binomial, py::arg("n"), py::arg("k"));
  mod.def("factorial", &dowling::factorial, py::arg("n"));
  mod.def("int_pow", &dowling::int_pow, py::arg("base"), py::arg("exponent"),
          "Exact power with the 0**0 == 1 convention.");

  // triangles
  mod.def("stirling2", &dowling::stirling2, py::arg("n"), py::arg("k"));
  mod.def("translated_whitney", &dowling::translated_whitney, py::arg("m"),
          py::arg("n"), py::arg("k"));
  mod.def("translated_whitney_explicit", &dowling::translated_whitney_explicit,
          py::arg("m"), py::arg("n"), py::arg("k"));
  mod.def("whitney", &dowling::whitney, py::arg("m"), py::arg("n"),
          py::arg("k"));
  mod.def("noncentral_whitney", &dowling::noncentral_whitney, py::arg("m"),
          py::arg("a"), py::arg("n"), py::arg("k"));
  mod.def("noncentral_whitney_sum", &dowling::noncentral_whitney_sum,
          py::arg("m"), py::arg("a"), py::arg("n"), py::arg("k"),
          "Independent binomial-Stirling route to the same numbers.");

  // polynomial families, as coefficient lists (index k = coefficient of x^k)
  mod.def(
      "geometric_polynomial",
      [](unsigned n) { return coefficients(dowling::geometric_polynomial(n)); },
      py::arg("n"));
  mod.def("geometric_number", &dowling::geometric_number, py::arg("n"));
  mod.def(
      "noncentral_td",
      [](const Rational& m, const Rational& a, unsigned n) {
        return coefficients(dowling::noncentral_td(m, a, n));
      },
      py::arg("m"), py::arg("a"), py::arg("n"));
  mod.def(
      "tanny_dowling",
      [](int variant, const Rational& m, unsigned n) {
        return coefficients(dowling::tanny_dowling(variant, m, n));
      },
      py::arg("variant"), py::arg("m"), py::arg("n"));
  mod.def(
      "geometric_two_variable",
      [](const Rational& r, unsigned n) {
        return coefficients(dowling::geometric_two_variable(r, n));
      },
      py::arg("r"), py::arg("n"));
  mod.def(
      "derivative_recurrence_step",
      [](const std::vector<Rational>& coeffs) {
        return coefficients(dowling::derivative_recurrence_step(
            Polynomial::from_coefficients(coeffs)));
      },
      py::arg("coeffs"));
  mod.def(
      "eval_poly",
      [](const std::vector<Rational>& coeffs, const Rational& x) {
        return Polynomial::from_coefficients(coeffs)(x);
      },
      py::arg("coeffs"), py::arg("x"), "Exact Horner evaluation.");

  // generating functions
  mod.def("ftilde_egf", &dowling::ftilde_egf, py::arg("m"), py::arg("a"),
          py::arg("x"), py::arg("order"),
          "EGF values of m e^{-az} / (m - x(e^{mz} - 1)) for n = 0..order.");

  // certified series
  py::class_<dowling::Enclosure>(mod, "Enclosure")
      .def_readonly("lo", &dowling::Enclosure::lo)
      .def_readonly("hi", &dowling::Enclosure::hi)
      .def_readonly("terms_used", &dowling::Enclosure::terms_used)
      .def("contains", &dowling::Enclosure::contains, py::arg("value"))
      .def("width", &dowling::Enclosure::width)
      .def("__repr__", [](const dowling::Enclosure& e) {
        return "Enclosure(lo=" + dowling::to_string(e.lo) +
               ", hi=" + dowling::to_string(e.hi) +
               ", terms_used=" + std::to_string(e.terms_used) + ")";
      });

  py::register_exception<dowling::UnconvergedError>(mod, "Unconverged");

  mod.def(
      "ftilde_series",
      [](const Rational& m, const Rational& a, unsigned n, const Rational& x,
         const Rational& eps, unsigned max_terms) {
        return dowling::ftilde_series(m, a, n, x, eps, max_terms);
      },
      py::arg("m"), py::arg("a"), py::arg("n"), py::arg("x"),
      py::arg("eps") = Rational(1) / dowling::int_pow(Rational(10), 20),
      py::arg("max_terms") = 10000);
  mod.def("geometric_series_value", &dowling::geometric_series_value,
          py::arg("n"), py::arg("x"), py::arg("eps"));

  // identity catalog
  mod.def("identity_tags", &ident::identity_tags);
  mod.def("identity_statement", [](const std::string& id) {
    const auto* info = ident::find_identity(id);
    if (info == nullptr)
      throw std::invalid_argument("unknown identity id: " + id);
    return info->statement;
  });
  mod.def(
      "check_identity",
      [](const std::string& id, const std::string& variant,
         const std::optional<Rational>& m, const std::optional<Rational>& a,
         const std::optional<Rational>& a1, const std::optional<Rational>& a2,
         const std::optional<Rational>& x, const std::optional<Rational>& x1,
         const std::optional<Rational>& x2, const std::optional<Rational>& r,
         unsigned n) {
        return report_to_dict(ident::check_identity(
            id, parse_variant(variant),
            make_params(m, a, a1, a2, x, x1, x2, r, n)));
      },
      py::arg("id"), py::arg("variant") = "as-printed", py::kw_only(),
      py::arg("m") = std::nullopt, py::arg("a") = std::nullopt,
      py::arg("a1") = std::nullopt, py::arg("a2") = std::nullopt,
      py::arg("x") = std::nullopt, py::arg("x1") = std::nullopt,
      py::arg("x2") = std::nullopt, py::arg("r") = std::nullopt,
      py::arg("n") = 0);
  mod.def(
      "run_suite",
      [](const std::vector<std::string>& ids,
         const std::vector<Rational>& m_set, const std::vector<Rational>& a_set,
         const std::vector<Rational>& x_set, unsigned n_max,
         const std::optional<std::string>& variant) {
        ident::ParameterGrid grid;
        grid.m_set = m_set;
        grid.a_set = a_set;
        grid.x_set = x_set;
        grid.n_max = n_max;
        std::optional<ident::Variant> only;
        if (variant) only = parse_variant(*variant);
        const auto summary = ident::run_suite(ids, grid, only);
        py::dict d;
        d["ok"] = summary.ok();
        d["unexpected"] = summary.unexpected;
        py::list reports;
        for (const auto& report : summary.reports)
          reports.append(report_to_dict(report));
        d["reports"] = reports;
        return d;
      },
      py::arg("ids"), py::kw_only(),
      py::arg("m_set") = std::vector<Rational>{Rational(1), Rational(2),
                                               Rational(3)},
      py::arg("a_set") = std::vector<Rational>{Rational(-2), Rational(-1),
                                               Rational(0), Rational(1),
                                               Rational(2)},
      py::arg("x_set") = std::vector<Rational>{Rational(-1, 2), Rational(1, 2),
                                               Rational(1), Rational(2),
                                               Rational(5, 3)},
      py::arg("n_max") = 10, py::arg("variant") = std::nullopt);
}
