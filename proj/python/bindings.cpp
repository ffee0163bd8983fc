#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hcsir/asymptotics.hpp"
#include "hcsir/metadist.hpp"
#include "hcsir/models.hpp"
#include "hcsir/montecarlo.hpp"
#include "hcsir/pointproc.hpp"
#include "hcsir/specfun.hpp"
#include "hcsir/traces.hpp"

namespace py = pybind11;
using namespace hcsir;

PYBIND11_MODULE(_core, m) {
    m.doc() = "SIR outage and meta-distribution computation for 1-D hardcore vehicular lanes";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);
    py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_ArithmeticError);
    py::register_exception<InfeasibleMoments>(m, "InfeasibleMoments", PyExc_ValueError);
    py::register_exception<NoConvergence>(m, "NoConvergence", PyExc_ArithmeticError);

    py::class_<ScenarioParams>(m, "ScenarioParams")
        .def(py::init<double, double, double, double, double>(), py::arg("lambda_"),
             py::arg("c"), py::arg("eta"), py::arg("xi"), py::arg("q") = 0.02)
        .def_readonly("lambda_", &ScenarioParams::lambda)
        .def_readonly("c", &ScenarioParams::c)
        .def_readonly("eta", &ScenarioParams::eta)
        .def_readonly("xi", &ScenarioParams::xi)
        .def_readonly("q", &ScenarioParams::q)
        .def("mu", &ScenarioParams::mu)
        .def("__repr__", [](const ScenarioParams& p) {
            return "ScenarioParams(lambda=" + std::to_string(p.lambda) +
                   ", c=" + std::to_string(p.c) + ", eta=" + std::to_string(p.eta) +
                   ", xi=" + std::to_string(p.xi) + ", q=" + std::to_string(p.q) + ")";
        });

    // special functions
    py::class_<SpecFunResult>(m, "SpecFunResult")
        .def_readonly("value", &SpecFunResult::value)
        .def_readonly("est_abs_error", &SpecFunResult::est_abs_error);
    m.def("hyp2f1", &hyp2f1, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));
    m.def("upper_inc_gamma", &upper_inc_gamma, py::arg("a"), py::arg("x"));
    m.def("log_beta", &log_beta, py::arg("alpha"), py::arg("beta"));
    m.def("reg_inc_beta", &reg_inc_beta, py::arg("a"), py::arg("b"), py::arg("x"));

    // point process
    py::enum_<OriginKind>(m, "OriginKind")
        .value("conditioned_transmitter", OriginKind::conditioned_transmitter)
        .value("reference_receiver", OriginKind::reference_receiver);
    py::class_<LaneSnapshot>(m, "LaneSnapshot")
        .def_readonly("positions", &LaneSnapshot::positions)
        .def_readonly("origin_kind", &LaneSnapshot::origin_kind);
    m.def("pcf", &pcf, py::arg("params"), py::arg("r"));
    m.def("interval_occupancy", &interval_occupancy, py::arg("params"), py::arg("k"));
    m.def("interval_occupancy_approx", &interval_occupancy_approx, py::arg("params"));
    m.def("sample_hardcore", &sample_hardcore, py::arg("params"), py::arg("length"),
          py::arg("rng_seed"));
    m.def("sample_link_distance", &sample_link_distance, py::arg("params"), py::arg("rng_seed"));
    m.def("sample_ppp", &sample_ppp, py::arg("intensity"), py::arg("lo"), py::arg("hi"),
          py::arg("rng_seed"));

    // analytic models
    py::enum_<OccupancyMode>(m, "OccupancyMode")
        .value("exact_eq2", OccupancyMode::exact_eq2)
        .value("approx_lambda_c", OccupancyMode::approx_lambda_c);
    py::enum_<Model>(m, "Model")
        .value("discretization", Model::discretization)
        .value("m1", Model::m1)
        .value("m2", Model::m2)
        .value("m3", Model::m3)
        .value("m4", Model::m4);
    py::class_<DiscretizationConfig>(m, "DiscretizationConfig")
        .def_readonly("K", &DiscretizationConfig::K)
        .def_readonly("R", &DiscretizationConfig::R)
        .def_readonly("p", &DiscretizationConfig::p)
        .def_readonly("occupancy_mode", &DiscretizationConfig::occupancy_mode);
    py::class_<OutageResult>(m, "OutageResult")
        .def_readonly("theta", &OutageResult::theta)
        .def_readonly("p_out", &OutageResult::p_out)
        .def_readonly("model", &OutageResult::model);
    m.def("rmin", &rmin, py::arg("params"));
    m.def("choose_k", &choose_k, py::arg("params"),
          py::arg("mode") = OccupancyMode::exact_eq2);
    m.def("make_config", &make_config, py::arg("params"), py::arg("K"),
          py::arg("mode") = OccupancyMode::exact_eq2);
    m.def("mean_far_interference", &mean_far_interference, py::arg("params"), py::arg("R"));
    m.def("mean_interference_lower_bound", &mean_interference_lower_bound, py::arg("params"));
    m.def("outage_discretization", &outage_discretization, py::arg("params"),
          py::arg("config"), py::arg("theta"));
    m.def("outage_m1", &outage_m1, py::arg("params"), py::arg("theta"));
    m.def("outage_m2", &outage_m2, py::arg("params"), py::arg("theta"));
    m.def("outage_m3", &outage_m3, py::arg("params"), py::arg("theta"));
    m.def("outage_m4", &outage_m4, py::arg("params"), py::arg("theta"));

    // meta distribution
    py::class_<MetaMoments>(m, "MetaMoments")
        .def_readonly("theta", &MetaMoments::theta)
        .def_readonly("m_full", &MetaMoments::m_full)
        .def_readonly("mean", &MetaMoments::mean)
        .def_readonly("variance", &MetaMoments::variance)
        .def_readonly("cov", &MetaMoments::cov);
    m.def("make_meta_moments", &make_meta_moments, py::arg("theta"), py::arg("moments"));
    py::enum_<BetaKind>(m, "BetaKind")
        .value("beta2", BetaKind::beta2)
        .value("gen_beta2", BetaKind::gen_beta2)
        .value("gen_beta3", BetaKind::gen_beta3);
    py::class_<BetaFit>(m, "BetaFit")
        .def_readonly("kind", &BetaFit::kind)
        .def_readonly("alpha", &BetaFit::alpha)
        .def_readonly("beta", &BetaFit::beta)
        .def_readonly("epsilon", &BetaFit::epsilon)
        .def_readonly("matched_moments", &BetaFit::matched_moments);
    m.def("meta_moment_near", &meta_moment_near, py::arg("params"), py::arg("config"),
          py::arg("theta"), py::arg("d"), py::arg("b"));
    m.def("meta_moment_far", &meta_moment_far, py::arg("params"), py::arg("R"),
          py::arg("theta"), py::arg("d"), py::arg("b"));
    m.def("meta_moments", &meta_moments, py::arg("params"), py::arg("config"),
          py::arg("theta"), py::arg("B") = 2);
    m.def("meta_moments_m1", &meta_moments_m1, py::arg("params"), py::arg("theta"),
          py::arg("B") = 2);
    m.def("meta_moments_m2", &meta_moments_m2, py::arg("params"), py::arg("theta"),
          py::arg("B") = 2);
    m.def("fit_beta", &fit_beta, py::arg("moments"));
    m.def("fit_generalized_beta", &fit_generalized_beta, py::arg("moments"), py::arg("kind"));
    m.def("gen_beta_moment", &gen_beta_moment, py::arg("fit"), py::arg("b"));
    m.def("meta_ccdf", &meta_ccdf, py::arg("fit"), py::arg("u_grid"));

    py::class_<AnalyticLane>(m, "AnalyticLane")
        .def(py::init([](double lambda, double c, double r0, int K, bool discretized) {
                 return AnalyticLane{lambda, c, r0, K, discretized};
             }),
             py::arg("lambda_"), py::arg("c"), py::arg("r0"), py::arg("K") = 0,
             py::arg("discretized") = false)
        .def_readonly("lambda_", &AnalyticLane::lambda)
        .def_readonly("c", &AnalyticLane::c)
        .def_readonly("r0", &AnalyticLane::r0)
        .def_readonly("K", &AnalyticLane::K)
        .def_readonly("discretized", &AnalyticLane::discretized);
    m.def("meta_moments_multilane", &meta_moments_multilane, py::arg("own"),
          py::arg("own_config"), py::arg("lanes"), py::arg("theta"), py::arg("B") = 2);

    // asymptotic approximations
    py::enum_<Regime>(m, "Regime")
        .value("large_theta_T", Regime::large_theta_T)
        .value("small_theta_t", Regime::small_theta_t);
    py::class_<AsymptoticRegime>(m, "AsymptoticRegime")
        .def(py::init([](Regime r, double constant) {
                 return AsymptoticRegime{r, constant};
             }),
             py::arg("regime"), py::arg("constant"))
        .def_readonly("regime", &AsymptoticRegime::regime)
        .def_readonly("constant", &AsymptoticRegime::constant);
    m.def("lemma3_moments", &lemma3_moments, py::arg("params"), py::arg("xi"), py::arg("theta"));
    m.def("lemma3_limit", &lemma3_limit, py::arg("params"), py::arg("T"));
    m.def("lemma4_moments", &lemma4_moments, py::arg("params"), py::arg("xi"), py::arg("theta"));
    m.def("cov_limit", &cov_limit, py::arg("params"), py::arg("regime"));

    // Monte Carlo
    py::enum_<SimSource>(m, "SimSource")
        .value("hardcore", SimSource::hardcore)
        .value("empirical_headway_cdf", SimSource::empirical_headway_cdf);
    py::class_<EmpiricalCdf>(m, "EmpiricalCdf")
        .def(py::init([](std::vector<double> knots) {
                 EmpiricalCdf e;
                 e.knots = std::move(knots);
                 std::sort(e.knots.begin(), e.knots.end());
                 return e;
             }),
             py::arg("knots"))
        .def_readonly("knots", &EmpiricalCdf::knots)
        .def("quantile", &EmpiricalCdf::quantile, py::arg("u"))
        .def("cdf", &EmpiricalCdf::cdf, py::arg("x"));
    py::class_<SimulationPlan>(m, "SimulationPlan")
        .def(py::init<>())
        .def_readwrite("n_configs", &SimulationPlan::n_configs)
        .def_readwrite("n_fading", &SimulationPlan::n_fading)
        .def_readwrite("segment_length", &SimulationPlan::segment_length)
        .def_readwrite("master_seed", &SimulationPlan::master_seed)
        .def_readwrite("source", &SimulationPlan::source)
        .def_readwrite("headway_cdf", &SimulationPlan::headway_cdf)
        .def_readwrite("max_threads", &SimulationPlan::max_threads);
    py::class_<SimulationResult>(m, "SimulationResult")
        .def_readonly("theta_grid", &SimulationResult::theta_grid)
        .def_readonly("per_config_success", &SimulationResult::per_config_success)
        .def_readonly("p_out", &SimulationResult::p_out)
        .def_readonly("ci_halfwidth", &SimulationResult::ci_halfwidth)
        .def_readonly("moments", &SimulationResult::moments);
    py::class_<OtherLaneSpec>(m, "OtherLaneSpec")
        .def(py::init([](double lambda, double c, double offset) {
                 return OtherLaneSpec{lambda, c, offset};
             }),
             py::arg("lambda_"), py::arg("c"), py::arg("offset"))
        .def_readonly("lambda_", &OtherLaneSpec::lambda)
        .def_readonly("c", &OtherLaneSpec::c)
        .def_readonly("offset", &OtherLaneSpec::offset);
    m.def("simulate_outage", &simulate_outage, py::arg("params"), py::arg("plan"),
          py::arg("theta_grid"), py::call_guard<py::gil_scoped_release>());
    m.def("simulate_meta", &simulate_meta, py::arg("params"), py::arg("plan"),
          py::arg("theta_grid"), py::call_guard<py::gil_scoped_release>());
    m.def("simulate_multilane", &simulate_multilane, py::arg("own"), py::arg("others"),
          py::arg("plan"), py::arg("theta_grid"), py::call_guard<py::gil_scoped_release>());
    m.def("empirical_ccdf", &empirical_ccdf, py::arg("result"), py::arg("theta_index"),
          py::arg("u_grid"));

    // traces
    py::class_<TraceSnapshot>(m, "TraceSnapshot")
        .def_readonly("timestamp", &TraceSnapshot::timestamp)
        .def_readonly("lanes", &TraceSnapshot::lanes)
        .def_readonly("road_length", &TraceSnapshot::road_length);
    py::enum_<TraceFormat>(m, "TraceFormat").value("csv", TraceFormat::csv);
    py::class_<HeadwayFit>(m, "HeadwayFit")
        .def_readonly("lambda_hat", &HeadwayFit::lambda_hat)
        .def_readonly("c_hat", &HeadwayFit::c_hat)
        .def_readonly("n_gaps", &HeadwayFit::n_gaps)
        .def_readonly("empirical_cdf", &HeadwayFit::empirical_cdf);
    m.def(
        "parse_snapshot",
        [](const std::string& path, TraceFormat fmt) { return parse_snapshot(path, fmt); },
        py::arg("path"), py::arg("format") = TraceFormat::csv);
    m.def(
        "parse_snapshot_at",
        [](const std::string& path, std::int64_t t, TraceFormat fmt) {
            return parse_snapshot_at(path, fmt, t);
        },
        py::arg("path"), py::arg("timestamp"), py::arg("format") = TraceFormat::csv);
    m.def("fit_headways", &fit_headways, py::arg("snapshot"), py::arg("lane_id"));
    py::class_<MultilaneGeometry>(m, "MultilaneGeometry")
        .def_readonly("r0", &MultilaneGeometry::r0)
        .def_readonly("R_other", &MultilaneGeometry::R_other);
    m.def("multilane_geometry", &multilane_geometry, py::arg("beamwidth"),
          py::arg("lane_sep"), py::arg("q"), py::arg("eta"));

    m.def("db_to_linear", &db_to_linear, py::arg("db"));
    m.def("linear_to_db", &linear_to_db, py::arg("x"));
}
