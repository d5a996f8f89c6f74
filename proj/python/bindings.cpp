#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bcft/bicomplex.hpp"
#include "bcft/errors.hpp"
#include "bcft/properties.hpp"
#include "bcft/roc.hpp"
#include "bcft/signals.hpp"
#include "bcft/transform.hpp"

namespace py = pybind11;
using namespace bcft;

namespace {

QuadratureConfig make_config(double abs_tol, double tail_tol) {
    QuadratureConfig cfg;
    cfg.abs_tol = abs_tol;
    cfg.tail_tol = tail_tol;
    return cfg;
}

py::dict report_dict(const CheckReport& r) {
    py::dict d;
    d["check"] = r.check;
    d["signal"] = r.signal;
    d["partner"] = r.partner;
    d["n"] = r.order;
    d["index"] = r.index;
    d["w"] = r.w;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["diff"] = r.diff;
    d["tol"] = r.tol;
    d["passed"] = r.pass;
    d["error"] = r.error;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bicomplex Fourier transform core";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", error.ptr());
    py::register_exception<ZeroDivisorError>(m, "ZeroDivisorError", error.ptr());
    py::register_exception<OutsideRegionError>(m, "OutsideRegionError", error.ptr());
    py::register_exception<SingularityError>(m, "SingularityError", error.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", error.ptr());

    py::class_<Bicomplex>(m, "Bicomplex")
        .def(py::init<>())
        .def(py::init<double>(), py::arg("x"))
        .def(py::init([](double a0, double a1, double a2, double a3) { return Bicomplex::from_units(a0, a1, a2, a3); }),
             py::arg("a0"), py::arg("a1"), py::arg("a2"), py::arg("a3"))
        .def_static("from_idempotent", py::overload_cast<Complex, Complex>(&Bicomplex::from_idempotent),
                    py::arg("w1"), py::arg("w2"))
        .def_static("e1", &Bicomplex::e1)
        .def_static("e2", &Bicomplex::e2)
        .def_static("i1", &Bicomplex::i1)
        .def_static("i2", &Bicomplex::i2)
        .def_static("j", &Bicomplex::j)
        .def_property_readonly("w1", &Bicomplex::w1)
        .def_property_readonly("w2", &Bicomplex::w2)
        .def_property_readonly("units", &Bicomplex::units)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(double() * py::self)
        .def(py::self * double())
        .def(py::self / double())
        .def(py::self == py::self)
        .def("__truediv__", [](const Bicomplex& a, const Bicomplex& b) { return a * invert(b); })
        .def("__abs__", &magnitude)
        .def("__repr__", [](const Bicomplex& w) {
            const auto a = w.units();
            return "Bicomplex(" + py::repr(py::float_(a[0])).cast<std::string>() + ", " +
                   py::repr(py::float_(a[1])).cast<std::string>() + ", " +
                   py::repr(py::float_(a[2])).cast<std::string>() + ", " +
                   py::repr(py::float_(a[3])).cast<std::string>() + ")";
        });

    m.def("invert", &invert, py::arg("w"), py::arg("tol") = kZeroDivisorTol);
    m.def("is_zero_divisor", &is_zero_divisor, py::arg("w"), py::arg("tol") = kZeroDivisorTol);

    py::class_<ConvergenceRegion>(m, "ConvergenceRegion")
        .def(py::init<double, double>(), py::arg("alpha"), py::arg("beta"))
        .def_property_readonly("alpha", &ConvergenceRegion::alpha)
        .def_property_readonly("beta", &ConvergenceRegion::beta)
        .def("contains_units", &ConvergenceRegion::contains_units)
        .def("contains_strips", &ConvergenceRegion::contains_strips)
        .def("margin", &ConvergenceRegion::margin)
        .def("cross_section_polygon", [](const ConvergenceRegion& r) {
            std::vector<std::pair<double, double>> out;
            for (const auto& p : r.cross_section_polygon()) out.emplace_back(p.a1, p.a2);
            return out;
        });

    py::class_<SignalSpec>(m, "Signal")
        .def_readonly("name", &SignalSpec::name)
        .def_property_readonly("parameters",
                               [](const SignalSpec& s) {
                                   py::dict d;
                                   for (const auto& [k, v] : s.parameters) d[py::str(k)] = v;
                                   return d;
                               })
        .def_readonly("region", &SignalSpec::region)
        .def("__call__", [](const SignalSpec& s, double t) { return s.eval(t); })
        .def("__repr__", [](const SignalSpec& s) { return "<Signal " + s.name + ">"; });

    m.def("catalog_names", &catalog_names);
    m.def("make_signal", &make_signal, py::arg("name"), py::arg("params") = ParameterMap{});
    m.def("closed_form_transform", &closed_form_transform, py::arg("signal"), py::arg("w"));

    m.def(
        "transform",
        [](const SignalSpec& s, const Bicomplex& w, double abs_tol, double tail_tol) {
            const auto r = transform(s, w, make_config(abs_tol, tail_tol));
            return py::make_tuple(r.value, r.est_error);
        },
        py::arg("signal"), py::arg("w"), py::arg("abs_tol") = QuadratureConfig{}.abs_tol,
        py::arg("tail_tol") = QuadratureConfig{}.tail_tol,
        "Returns (value, estimated error).");

    m.def(
        "transform_grid",
        [](const SignalSpec& s, const std::vector<Bicomplex>& grid, unsigned jobs) {
            std::vector<GridPoint> points;
            {
                py::gil_scoped_release release;
                points = transform_grid(s, grid, {}, jobs);
            }
            py::list out;
            for (const auto& p : points) {
                py::object value = py::none();
                if (p.result) value = py::cast(p.result->value);
                out.append(py::make_tuple(p.w, to_string(p.status), value));
            }
            return out;
        },
        py::arg("signal"), py::arg("grid"), py::arg("jobs") = 1,
        "Returns a list of (w, status, value or None) in input order.");

    m.def(
        "run_suite",
        [](const std::vector<std::string>& checks, const std::vector<std::string>& signals, std::size_t frequencies,
           std::uint64_t seed, unsigned jobs) {
            SuiteOptions opts;
            opts.checks = checks;
            opts.signals = signals;
            opts.frequencies = frequencies;
            opts.seed = seed;
            opts.jobs = jobs;
            std::vector<CheckReport> reports;
            {
                py::gil_scoped_release release;
                reports = run_suite(opts);
            }
            py::list out;
            for (const auto& r : reports) out.append(report_dict(r));
            return out;
        },
        py::arg("checks") = std::vector<std::string>{}, py::arg("signals") = std::vector<std::string>{},
        py::arg("frequencies") = 20, py::arg("seed") = kDefaultSeed, py::arg("jobs") = 1);
}
