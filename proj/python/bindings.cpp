// Python surface: rationals cross as fractions.Fraction, reports as plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "opdet/cli.hpp"
#include "opdet/dets.hpp"
#include "opdet/errors.hpp"
#include "opdet/measures.hpp"
#include "opdet/opoly.hpp"
#include "opdet/report_json.hpp"
#include "opdet/verify.hpp"

namespace py = pybind11;
using namespace opdet;

namespace {

py::object to_py(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.to_string());
}

// int, str ("p/q") or Fraction
Rational from_py(const py::handle& h) { return Rational::parse(py::str(h).cast<std::string>()); }

std::vector<Rational> from_py_list(const py::iterable& items) {
  std::vector<Rational> out;
  for (const auto& item : items) out.push_back(from_py(item));
  return out;
}

py::list to_py_list(const std::vector<Rational>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

py::list coeffs(const UniPoly& p) { return to_py_list(p.coefficients()); }

py::object json_to_py(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

NodeSet node_set(const py::iterable& nodes, const std::optional<std::vector<unsigned>>& mults) {
  const auto t = from_py_list(nodes);
  if (!mults) return NodeSet::simple(t);
  if (mults->size() != t.size()) throw std::invalid_argument("nodes and mults differ in length");
  std::vector<NodeEntry> entries;
  for (std::size_t i = 0; i < t.size(); ++i) entries.push_back({t[i], (*mults)[i]});
  return NodeSet(std::move(entries));
}

}  // namespace

PYBIND11_MODULE(_opdet, m) {
  m.doc() = "Exact Slater, Wronskian and Hankel determinant identities for orthogonal polynomials";

  py::register_exception<InsufficientMoments>(m, "InsufficientMoments", PyExc_IndexError);
  py::register_exception<DegenerateMeasure>(m, "DegenerateMeasure", PyExc_ArithmeticError);
  py::register_exception<InfeasiblePlan>(m, "InfeasiblePlan", PyExc_ValueError);

  py::class_<MeasureSpec>(m, "Measure")
      .def(py::init([](const std::string& text) { return parse_measure(text); }), py::arg("spec"))
      .def("moment", [](const MeasureSpec& s, std::size_t k) { return to_py(moment(s, k)); }, py::arg("k"))
      .def("hankel_det", [](const MeasureSpec& s, long n) { return to_py(hankel_det(s, n)); }, py::arg("n"))
      .def("__str__", &MeasureSpec::to_string)
      .def("__repr__", [](const MeasureSpec& s) { return "Measure('" + s.to_string() + "')"; });

  m.def("orth_poly", [](const MeasureSpec& s, std::size_t n) { return coeffs(orth_poly(s, n)); },
        py::arg("measure"), py::arg("n"), "p_n as ascending coefficients");
  m.def("q_poly", [](const MeasureSpec& s, std::size_t n) { return coeffs(q_poly(s, n)); }, py::arg("measure"),
        py::arg("n"));
  m.def("r_poly", [](const MeasureSpec& s, std::size_t mm, std::size_t n) { return coeffs(r_poly(s, mm, n)); },
        py::arg("measure"), py::arg("m"), py::arg("n"));

  m.def("slater",
        [](const MeasureSpec& s, std::size_t n, const py::iterable& nodes) {
          return to_py(slater(s, n, from_py_list(nodes)));
        },
        py::arg("measure"), py::arg("n"), py::arg("nodes"));
  m.def("slater_general",
        [](const MeasureSpec& s, std::size_t n, const py::iterable& nodes, std::vector<unsigned> mults) {
          const NodeSet set = node_set(nodes, mults);
          return to_py(slater_general(s, n, set, RowPlan::standard(set)));
        },
        py::arg("measure"), py::arg("n"), py::arg("nodes"), py::arg("mults"));
  m.def("symmetrized",
        [](const MeasureSpec& s, std::size_t n, const py::iterable& nodes,
           std::optional<std::vector<unsigned>> mults) { return to_py(symmetrized(s, n, node_set(nodes, mults))); },
        py::arg("measure"), py::arg("n"), py::arg("nodes"), py::arg("mults") = py::none());
  m.def("wronskian",
        [](const MeasureSpec& s, std::size_t n, std::size_t mm, const py::handle& x) {
          return to_py(wronskian(s, n, mm, from_py(x)));
        },
        py::arg("measure"), py::arg("n"), py::arg("m"), py::arg("x"));
  m.def("hankel_r_det",
        [](const MeasureSpec& s, std::size_t n, const py::iterable& nodes,
           std::optional<std::vector<unsigned>> mults) { return to_py(hankel_r_det(s, n, node_set(nodes, mults))); },
        py::arg("measure"), py::arg("n"), py::arg("nodes"), py::arg("mults") = py::none());
  m.def("selberg_integral",
        [](const MeasureSpec& s, std::size_t n, const py::iterable& nodes, std::optional<std::vector<unsigned>> mults,
           const py::object& x) {
          const std::optional<Rational> at = x.is_none() ? std::nullopt : std::optional(from_py(x));
          return to_py(selberg_integral(s, n, node_set(nodes, mults), at));
        },
        py::arg("measure"), py::arg("n"), py::arg("nodes"), py::arg("mults") = py::none(), py::arg("x") = py::none());

  m.def("identities", [] {
    std::vector<std::string> out;
    for (IdentityId id : all_identities()) out.emplace_back(identity_name(id));
    return out;
  });
  m.def("verify",
        [](const std::string& id, const MeasureSpec& s, unsigned n_max, unsigned m_max, std::uint64_t seed) {
          SamplePlan plan;
          plan.n_max = n_max;
          plan.m_max = m_max;
          plan.seed = seed;
          VerifyReport report;
          {
            py::gil_scoped_release release;
            report = verify_identity(parse_identity(id), s, plan);
          }
          return json_to_py(report_json(report));
        },
        py::arg("id"), py::arg("measure"), py::arg("n_max") = 3, py::arg("m_max") = 3,
        py::arg("seed") = SamplePlan::kDefaultSeed, "run one identity check; returns the JSON report as a dict");
  m.def("positivity_scan",
        [](const MeasureSpec& s, std::size_t n, std::vector<unsigned> mults, std::size_t trials, std::uint64_t seed) {
          return json_to_py(report_json(positivity_scan(s, n, mults, trials, seed)));
        },
        py::arg("measure"), py::arg("n"), py::arg("mults"), py::arg("trials") = 200,
        py::arg("seed") = SamplePlan::kDefaultSeed);
  m.def("jensen_convergence",
        [](const MeasureSpec& s, const py::handle& x, std::size_t m_max) {
          return json_to_py(table_json(jensen_convergence(s, from_py(x), m_max)));
        },
        py::arg("measure"), py::arg("x"), py::arg("m_max") = 64);

  m.def("cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::dispatch(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "run an opdet command line; returns (exit code, stdout, stderr)");
}
