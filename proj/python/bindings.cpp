#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mindist/approx.hpp"
#include "mindist/bounds.hpp"
#include "mindist/codetable.hpp"
#include "mindist/cli.hpp"

namespace py = pybind11;
using namespace mindist;

namespace {

BoundKind bound_kind(const std::string& family, bool asymptotic) {
    static const std::pair<const char*, BoundFamily> names[] = {
        {"gv", BoundFamily::GilbertVarshamov}, {"hamming", BoundFamily::Hamming}, {"plotkin", BoundFamily::Plotkin},
        {"mrrw", BoundFamily::Mrrw},           {"quadratic", BoundFamily::QuadraticModel}};
    for (const auto& [name, value] : names) {
        if (family == name) {
            return BoundKind::make(value, asymptotic ? Regime::Asymptotic : Regime::Finite);
        }
    }
    throw std::invalid_argument("unknown bound '" + family + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rate versus minimum distance bounds and the two-segment approximation for binary codes";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("binary_entropy", &binary_entropy, py::arg("q"));
    m.def("log2_binomial_sum", &log2_binomial_sum, py::arg("n"), py::arg("t"));
    m.def("gilbert_finite", [](int n, int d) { return gilbert_finite(n, d).value(); }, py::arg("n"), py::arg("d"));
    m.def("hamming_finite", [](int n, int d) { return hamming_finite(n, d).value(); }, py::arg("n"), py::arg("d"));
    m.def("plotkin_finite", [](int n, double delta) { return plotkin_finite(n, NormalizedDistance(delta)).value(); },
          py::arg("n"), py::arg("delta"));
    m.def("asymptotic_bound",
          [](const std::string& kind, double delta) {
              return asymptotic_bound(bound_kind(kind, true), NormalizedDistance(delta)).value();
          },
          py::arg("kind"), py::arg("delta"), "kind is one of gv, hamming, mrrw, quadratic");

    py::class_<QuadraticParams>(m, "QuadraticParams")
        .def_readonly("n", &QuadraticParams::n)
        .def_readonly("a", &QuadraticParams::a)
        .def_readonly("b", &QuadraticParams::b)
        .def_readonly("c", &QuadraticParams::c)
        .def_readonly("xi", &QuadraticParams::xi)
        .def_readonly("delta1", &QuadraticParams::delta1)
        .def_readonly("delta2", &QuadraticParams::delta2)
        .def_readonly("delta3", &QuadraticParams::delta3)
        .def_readonly("r1", &QuadraticParams::r1)
        .def_readonly("r2", &QuadraticParams::r2)
        .def_readonly("r3", &QuadraticParams::r3)
        .def("__call__", &QuadraticParams::evaluate, py::arg("delta"))
        .def("__repr__", [](const QuadraticParams& p) {
            std::ostringstream s;
            s << "QuadraticParams(n=" << p.n << ", a=" << p.a << ", b=" << p.b << ", c=" << p.c << ", xi=" << p.xi << ")";
            return s.str();
        });

    m.def("xi", py::overload_cast<int>(&xi), py::arg("n"));
    m.def("solve_params", py::overload_cast<int>(&solve_params), py::arg("n"));
    m.def("rate_from_delta", [](int n, double delta) { return rate_from_delta(n, NormalizedDistance(delta)).value(); },
          py::arg("n"), py::arg("delta"));
    m.def("rate_from_dmin", [](int n, int d) { return rate_from_dmin(n, d).value(); }, py::arg("n"), py::arg("d"));
    m.def("delta_from_rate", [](int n, double r) { return delta_from_rate(n, Rate(r)).value(); }, py::arg("n"),
          py::arg("r"));
    m.def("dmin", &dmin, py::arg("n"), py::arg("k"));
    m.def("asymptotic_delta_from_rate",
          [](double r, bool as_printed) {
              return asymptotic_delta_from_rate(Rate(r), as_printed ? InverseRoot::AsPrinted : InverseRoot::Decreasing);
          },
          py::arg("r"), py::arg("as_printed") = false);

    py::class_<CodeTableEntry>(m, "CodeTableEntry")
        .def(py::init([](int n, int k, int d_lower, std::optional<int> d_upper) {
                 CodeTableEntry e{n, k, d_lower, d_upper.value_or(d_lower)};
                 e.check();
                 return e;
             }),
             py::arg("n"), py::arg("k"), py::arg("d_lower"), py::arg("d_upper") = py::none())
        .def_readonly("n", &CodeTableEntry::n)
        .def_readonly("k", &CodeTableEntry::k)
        .def_readonly("d_lower", &CodeTableEntry::d_lower)
        .def_readonly("d_upper", &CodeTableEntry::d_upper)
        .def_property_readonly("is_exact", &CodeTableEntry::is_exact)
        .def("__eq__", [](const CodeTableEntry& a, const CodeTableEntry& b) { return a == b; });

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("entries_evaluated", &ValidationReport::entries_evaluated)
        .def_readonly("frac_within_1", &ValidationReport::frac_within_1)
        .def_readonly("frac_within_2", &ValidationReport::frac_within_2)
        .def_readonly("histogram", &ValidationReport::histogram)
        .def_property_readonly("errors",
                               [](const ValidationReport& r) {
                                   py::list out;
                                   for (const auto& e : r.errors) out.append(py::make_tuple(e.n, e.k, e.e));
                                   return out;
                               })
        .def("__str__", [](const ValidationReport& r) {
            std::ostringstream s;
            write_report(r, s);
            return s.str();
        });

    m.def("parse_table",
          [](const std::string& text) {
              std::istringstream in(text);
              return parse_table(in);
          },
          py::arg("text"));
    m.def("parse_table_file", &parse_table_file, py::arg("path"));
    m.def("approximation_error", &approximation_error, py::arg("entry"), py::arg("exact_required") = true);
    m.def("validate",
          [](const std::vector<CodeTableEntry>& entries, bool exact_only) { return validate(entries, exact_only); },
          py::arg("entries"), py::arg("exact_only") = true);
    m.def("brute_force_min_distance",
          [](const std::vector<std::string>& rows) {
              if (rows.empty()) throw std::invalid_argument("generator matrix needs at least one row");
              return brute_force_min_distance(GeneratorMatrix(static_cast<int>(rows[0].size()), rows));
          },
          py::arg("rows"), "Minimum distance of the code spanned by rows of '0'/'1' strings");
    m.def("generator_min_distance_file",
          [](const std::string& path) { return brute_force_min_distance(parse_generator_file(path)); }, py::arg("path"));

    m.def("curve_csv",
          [](const std::string& mode, std::optional<int> n, std::optional<double> rate,
             const std::vector<std::string>& series, int samples) {
              CurveRequest request;
              request.mode = parse_curve_mode(mode);
              request.n = n;
              request.rate = rate;
              request.sample_count = samples;
              for (const auto& s : series) request.series.push_back(parse_series(s));
              std::ostringstream out;
              write_curve(request, out);
              return out.str();
          },
          py::arg("mode"), py::arg("n") = py::none(), py::arg("rate") = py::none(),
          py::arg("series") = std::vector<std::string>{}, py::arg("samples") = 200);
}
