#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chaoskit/asymptotics.hpp"
#include "chaoskit/clark_ocone.hpp"
#include "chaoskit/clt_lab.hpp"
#include "chaoskit/functionals.hpp"
#include "chaoskit/gaussian_space.hpp"
#include "chaoskit/hermite.hpp"
#include "chaoskit/io.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace chaoskit;

PYBIND11_MODULE(_chaoskit, m) {
    m.doc() = "Discrete Clark-Ocone formula over Gaussian random walks";
    m.attr("__version__") = kVersion;

    py::register_exception<FeasibilityError>(m, "FeasibilityError");

    m.def("hermite_eval", &hermite_eval, "n"_a, "x"_a);

    py::class_<QuadratureRule>(m, "QuadratureRule")
        .def_readonly("order", &QuadratureRule::order)
        .def_readonly("nodes", &QuadratureRule::nodes)
        .def_readonly("weights", &QuadratureRule::weights);
    m.def("gauss_hermite_rule", &gauss_hermite_rule, "order"_a);

    py::class_<TimeGrid>(m, "TimeGrid")
        .def(py::init<int, double>(), "N"_a, "T"_a)
        .def_readonly("N", &TimeGrid::N)
        .def_readonly("T", &TimeGrid::T)
        .def_property_readonly("dt", &TimeGrid::dt)
        .def("t", &TimeGrid::t, "k"_a);

    py::class_<MultiIndex>(m, "MultiIndex")
        .def(py::init<std::vector<int>>(), "entries"_a)
        .def_readonly("entries", &MultiIndex::k)
        .def_property_readonly("degree", &MultiIndex::degree)
        .def_property_readonly("trailing", &MultiIndex::trailing);

    py::class_<ChaosSpectrum>(m, "ChaosSpectrum")
        .def_property_readonly("grid", &ChaosSpectrum::grid)
        .def_property_readonly("n_max", &ChaosSpectrum::n_max)
        .def("__len__", &ChaosSpectrum::size)
        .def("get", [](const ChaosSpectrum& s, const std::vector<int>& k) {
            return s.get(MultiIndex(k));
        }, "k"_a)
        .def("items", [](const ChaosSpectrum& s) {
            std::vector<std::pair<std::vector<int>, double>> out;
            for (const auto& [k, c] : s.coeffs()) out.emplace_back(k.k, c);
            return out;
        })
        .def("l2_squared", &ChaosSpectrum::l2_squared)
        .def("variance", &ChaosSpectrum::variance)
        .def("mean", &ChaosSpectrum::mean)
        .def("to_csv", &ChaosSpectrum::to_csv);

    py::class_<Payoff>(m, "Payoff")
        .def("__call__", &Payoff::operator())
        .def("__repr__", &Payoff::str);
    m.def("parse_payoff", &parse_payoff, "text"_a);
    m.def("smoothed_coeff", &smoothed_coeff, "payoff"_a, "m"_a, "x"_a, "s"_a);

    py::class_<FunctionalSpec>(m, "FunctionalSpec")
        .def_static("terminal", &FunctionalSpec::terminal, "payoff"_a)
        .def_static("additive", &FunctionalSpec::additive, "integrand"_a)
        .def_static("occupation", &FunctionalSpec::occupation)
        .def_static("raw", &FunctionalSpec::raw, "fn"_a)
        .def("__call__", &FunctionalSpec::operator(), "grid"_a, "dw"_a);

    m.def("project_chaos", &project_chaos, "x"_a, "grid"_a, "n_max"_a, "quad_order"_a);
    m.def("evaluate", &evaluate, "x"_a, "point"_a);
    m.def("conditional_expectation", &conditional_expectation, "x"_a, "l"_a);
    m.def("derivative", &derivative, "x"_a, "l"_a);
    m.def("sobolev_norm", &sobolev_norm, "x"_a, "s"_a);
    m.def("tensor_expectation", &tensor_expectation, "x"_a, "grid"_a, "quad_order"_a);

    py::class_<OneDimCoeffs>(m, "OneDimCoeffs")
        .def_readonly("T", &OneDimCoeffs::T)
        .def_readonly("a", &OneDimCoeffs::a)
        .def_readonly("tail_sq_bound", &OneDimCoeffs::tail_sq_bound);
    py::class_<ErrorNorm1d>(m, "ErrorNorm1d")
        .def_readonly("value", &ErrorNorm1d::value)
        .def_readonly("tail_bound", &ErrorNorm1d::tail_bound)
        .def_readonly("certified", &ErrorNorm1d::certified);

    m.def("coeffs_1d", &coeffs_1d, "payoff"_a, "T"_a, "n_max"_a, "quad_order"_a = 0);
    m.def("coeffs_1d_quadrature", &coeffs_1d_quadrature, "payoff"_a, "T"_a, "n_max"_a,
          "quad_order"_a);
    m.def("terminal_spectrum",
          py::overload_cast<const Payoff&, const TimeGrid&, int>(&terminal_spectrum), "payoff"_a,
          "grid"_a, "n_max"_a);
    m.def("build_additive", &build_additive, "f"_a, "grid"_a, "n_max"_a, "quad_order"_a = 64);

    m.def("co_integrand", &co_integrand, "x"_a, "l"_a, "m"_a);
    m.def("partial_sum_eval", &partial_sum_eval, "x"_a, "n"_a, "point"_a);
    m.def("error_norm_from_spectrum", &error_norm_from_spectrum, "x"_a, "n"_a);
    m.def("error_weight", &error_weight, "n"_a, "N"_a);
    m.def("error_norm_1d", &error_norm_1d, "a"_a, "N"_a);
    m.def("heaviside_error_norm_1d", &heaviside_error_norm_1d, "N"_a, "tail_frac"_a,
          "n_start"_a = (1LL << 17), "n_cap"_a = (1LL << 24));

    m.def("z_nk", &z_nk, "N"_a, "k"_a, "T"_a);
    py::class_<OccupationError>(m, "OccupationError")
        .def_readonly("value", &OccupationError::value)
        .def_readonly("tail_bound", &OccupationError::tail_bound);
    m.def("occupation_error_norm", &occupation_error_norm, "N"_a, "T"_a, "k_max"_a);
    m.def("alpha_index", &alpha_index, "A"_a, "n"_a);
    m.def("occupation_A", &occupation_A, "N"_a, "n"_a);
    m.def("occupation_A_literal", &occupation_A_literal, "N"_a, "n"_a);

    py::class_<RatePoint>(m, "RatePoint")
        .def(py::init([](long long N, double err_sq, double tail) {
            return RatePoint{N, err_sq, tail};
        }), "N"_a, "err_sq"_a, "tail_bound"_a = 0.0)
        .def_readonly("N", &RatePoint::N)
        .def_readonly("err_sq", &RatePoint::err_sq)
        .def_readonly("tail_bound", &RatePoint::tail_bound);
    py::class_<ErrorReport>(m, "ErrorReport")
        .def_readonly("points", &ErrorReport::points)
        .def_readonly("slope", &ErrorReport::slope)
        .def_readonly("intercept", &ErrorReport::intercept)
        .def_readonly("max_residual", &ErrorReport::max_residual)
        .def_readonly("slope_full", &ErrorReport::slope_full)
        .def_readonly("intercept_full", &ErrorReport::intercept_full)
        .def_readonly("max_residual_full", &ErrorReport::max_residual_full);
    m.def("rate_fit", &rate_fit, "points"_a);

    m.def("normal_icdf", &normal_icdf, "p"_a);
    py::class_<SampleMatrix>(m, "SampleMatrix")
        .def_readonly("M", &SampleMatrix::M)
        .def_readonly("cols", &SampleMatrix::cols)
        .def_readonly("dt", &SampleMatrix::dt)
        .def_readonly("seed", &SampleMatrix::seed)
        .def("at", [](const SampleMatrix& s, long long i, int p) { return s.at(i, p); }, "row"_a,
             "col"_a);
    m.def("sample_errors", &sample_errors, "payoff"_a, "grid"_a, "p_max"_a, "M"_a, "seed"_a);
    m.def("sample_errors_from_spectrum", &sample_errors_from_spectrum, "x"_a, "p_max"_a, "M"_a,
          "seed"_a);

    py::class_<LimitVariance>(m, "LimitVariance")
        .def_readonly("value", &LimitVariance::value)
        .def_readonly("endpoint_tail", &LimitVariance::endpoint_tail)
        .def_readonly("divergent", &LimitVariance::divergent);
    m.def("limit_variance", &limit_variance, "payoff"_a, "T"_a, "p"_a, "grid_points"_a = 257,
          "quad_order"_a = 64);

    py::class_<CltLevel>(m, "CltLevel")
        .def_readonly("sample_var", &CltLevel::sample_var)
        .def_readonly("se", &CltLevel::se)
        .def_readonly("limit_var", &CltLevel::limit_var)
        .def_readonly("z", &CltLevel::z)
        .def_readonly("degenerate", &CltLevel::degenerate)
        .def_readonly("limit_divergent", &CltLevel::limit_divergent);
    py::class_<CltCross>(m, "CltCross")
        .def_readonly("p", &CltCross::p)
        .def_readonly("q", &CltCross::q)
        .def_readonly("cov", &CltCross::cov)
        .def_readonly("se", &CltCross::se)
        .def_readonly("z", &CltCross::z);
    py::class_<CltReport>(m, "CltReport")
        .def_readonly("M", &CltReport::M)
        .def_readonly("seed", &CltReport::seed)
        .def_readonly("dt", &CltReport::dt)
        .def_readonly("levels", &CltReport::levels)
        .def_readonly("cross", &CltReport::cross);
    m.def("clt_report", &clt_report, "samples"_a, "limits"_a);

    py::class_<WalkStats>(m, "WalkStats")
        .def_readonly("var", &WalkStats::var)
        .def_readonly("se", &WalkStats::se)
        .def_readonly("kurtosis", &WalkStats::kurtosis)
        .def_readonly("kurtosis_se", &WalkStats::kurtosis_se);
    m.def("scaled_walk_stats", &scaled_walk_stats, "grid"_a, "p"_a, "M"_a, "seed"_a);
}
