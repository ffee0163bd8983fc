#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hcsir/montecarlo.hpp"
#include "hcsir/pointproc.hpp"
#include "hcsir/traces.hpp"
#include "oracles.hpp"

using namespace hcsir;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const auto dir = std::filesystem::temp_directory_path() / "hcsir_trace_tests";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / name).string();
    std::ofstream out(path);
    out << content;
    return path;
}

TraceSnapshot snapshot_from_lane(const std::vector<double>& positions, int lane = 0) {
    TraceSnapshot snap;
    LaneSnapshot ls;
    ls.positions = positions;
    ls.origin_kind = OriginKind::reference_receiver;
    snap.lanes.emplace(lane, std::move(ls));
    snap.road_length = positions.empty() ? 0.0 : positions.back();
    return snap;
}

}  // namespace

TEST_CASE("parse a minimal snapshot") {
    const std::string path = write_temp("mini.csv",
                                        "t,lane,pos_m\n"
                                        "5,1,12.5\n"
                                        "5,1,60\n"
                                        "5,1,97.25\n");
    ParseStats stats;
    const TraceSnapshot snap = parse_snapshot(path, TraceFormat::csv, &stats);
    CHECK(snap.timestamp == 5);
    REQUIRE(snap.lanes.count(1) == 1);
    CHECK(snap.lanes.at(1).positions == std::vector<double>{12.5, 60.0, 97.25});
    CHECK(snap.road_length == 97.25);
    CHECK(stats.rows == 3);
    CHECK(stats.unsorted_rows == 0);
}

TEST_CASE("unsorted rows are sorted and counted") {
    const std::string path = write_temp("unsorted.csv",
                                        "t,lane,pos_m\n"
                                        "1,0,50\n"
                                        "1,0,10\n"
                                        "1,0,30\n");
    ParseStats stats;
    const TraceSnapshot snap = parse_snapshot(path, TraceFormat::csv, &stats);
    CHECK(snap.lanes.at(0).positions == std::vector<double>{10.0, 30.0, 50.0});
    CHECK(stats.unsorted_rows == 1);  // one adjacent descent in arrival order
}

TEST_CASE("parse errors carry the line number") {
    const std::string path = write_temp("bad.csv",
                                        "t,lane,pos_m\n"
                                        "1,0,10\n"
                                        "1,zero,20\n");
    CHECK_THROWS_WITH_AS(parse_snapshot(path, TraceFormat::csv),
                         doctest::Contains("line 3"), ParseError);

    const std::string missing = write_temp("fields.csv", "t,lane,pos_m\n1,0\n");
    CHECK_THROWS_AS(parse_snapshot(missing, TraceFormat::csv), ParseError);
    CHECK_THROWS_AS(parse_snapshot("/nonexistent/trace.csv", TraceFormat::csv), ParseError);

    const std::string badheader = write_temp("hdr.csv", "time,lane,x\n1,0,10\n");
    CHECK_THROWS_AS(parse_snapshot(badheader, TraceFormat::csv), ParseError);
}

TEST_CASE("duplicate positions are rejected") {
    const std::string path = write_temp("dup.csv",
                                        "t,lane,pos_m\n"
                                        "1,0,10\n"
                                        "1,0,10\n");
    CHECK_THROWS_AS(parse_snapshot(path, TraceFormat::csv), ValidationError);
}

TEST_CASE("multi-timestamp files need explicit selection") {
    const std::string path = write_temp("multi.csv",
                                        "t,lane,pos_m\n"
                                        "1,0,10\n"
                                        "2,0,20\n"
                                        "2,0,55\n");
    CHECK_THROWS_AS(parse_snapshot(path, TraceFormat::csv), ParseError);
    const TraceSnapshot snap = parse_snapshot_at(path, TraceFormat::csv, 2);
    CHECK(snap.timestamp == 2);
    CHECK(snap.lanes.at(0).positions == std::vector<double>{20.0, 55.0});
    CHECK_THROWS_AS(parse_snapshot_at(path, TraceFormat::csv, 9), ParseError);
}

TEST_CASE("headway fit recovers synthetic parameters") {
    const ScenarioParams truth(0.0205, 14.82, 3.0, 0.5, 0.02);
    // ~1e4 gaps
    const LaneSnapshot lane = sample_hardcore(truth, 1e4 / truth.lambda, 1234);
    const TraceSnapshot snap = snapshot_from_lane(lane.positions);
    const HeadwayFit fit = fit_headways(snap, 0);
    CHECK(std::abs(fit.lambda_hat / truth.lambda - 1.0) <= 0.02);
    CHECK(std::abs(fit.c_hat / truth.c - 1.0) <= 0.05);
    CHECK(fit.n_gaps == static_cast<int>(lane.positions.size()) - 1);
}

TEST_CASE("headway fit on a lattice") {
    std::vector<double> positions;
    for (int i = 0; i < 64; ++i) positions.push_back(25.0 * i);
    const HeadwayFit fit = fit_headways(snapshot_from_lane(positions), 0);
    CHECK(fit.lambda_hat == doctest::Approx(1.0 / 25.0).epsilon(1e-12));
    CHECK(fit.c_hat == doctest::Approx(25.0 - 0.25).epsilon(1e-12));
}

TEST_CASE("headway fit needs enough vehicles") {
    std::vector<double> positions;
    for (int i = 0; i < 29; ++i) positions.push_back(40.0 * i + 0.1 * i * i);
    CHECK_THROWS_AS(fit_headways(snapshot_from_lane(positions), 0), InsufficientData);
    CHECK_THROWS_AS(fit_headways(snapshot_from_lane(positions), 7), InsufficientData);
}

TEST_CASE("fitted law resamples the lane") {
    const ScenarioParams truth(0.025, 16.0, 3.0, 0.5, 0.02);
    const LaneSnapshot lane = sample_hardcore(truth, 4.0e5, 5678);
    const HeadwayFit fit = fit_headways(snapshot_from_lane(lane.positions), 0);

    // draw the same number of gaps from the fitted shifted exponential
    const ScenarioParams fitted(fit.lambda_hat, fit.c_hat, 3.0, 0.5, 0.02);
    const LaneSnapshot resampled = sample_hardcore(fitted, 4.0e5, 8765);
    std::vector<double> g1 = fit.empirical_cdf.knots;  // already sorted
    std::vector<double> g2;
    g2.push_back(resampled.positions.front());
    for (std::size_t i = 1; i < resampled.positions.size(); ++i)
        g2.push_back(resampled.positions[i] - resampled.positions[i - 1]);
    std::sort(g2.begin(), g2.end());
    const double d = oracle::ks_two_sample(g1, g2);
    CHECK(d < oracle::ks_two_sample_critical_1pct(g1.size(), g2.size()));
}

TEST_CASE("empirical cdf accessors") {
    EmpiricalCdf ecdf;
    ecdf.knots = {1.0, 2.0, 3.0, 4.0};
    CHECK(ecdf.quantile(1.0) == 4.0);
    CHECK(ecdf.quantile(0.24) == 1.0);
    CHECK(ecdf.quantile(0.26) == 2.0);
    CHECK(ecdf.cdf(0.5) == 0.0);
    CHECK(ecdf.cdf(2.0) == 0.5);
    CHECK(ecdf.cdf(9.0) == 1.0);
    CHECK_THROWS_AS(ecdf.quantile(0.0), DomainError);
    CHECK_THROWS_AS(EmpiricalCdf{}.quantile(0.5), DomainError);
}

TEST_CASE("headway fit json round trip") {
    HeadwayFit fit;
    fit.lambda_hat = 0.021;
    fit.c_hat = 13.5;
    fit.n_gaps = 3;
    fit.empirical_cdf.knots = {14.0, 20.0, 31.5};
    const HeadwayFit back = headway_fit_from_json(headway_fit_to_json(fit));
    CHECK(back.lambda_hat == fit.lambda_hat);
    CHECK(back.c_hat == fit.c_hat);
    CHECK(back.n_gaps == fit.n_gaps);
    CHECK(back.empirical_cdf.knots == fit.empirical_cdf.knots);
}

TEST_CASE("multilane geometry") {
    const MultilaneGeometry g = multilane_geometry(M_PI / 20.0, 4.0, 0.02, 4.0);
    CHECK(std::abs(g.r0 - 50.0) <= 1.0);
    CHECK(g.R_other == doctest::Approx(std::pow(50.0, 1.0 / 3.0) * g.r0).epsilon(1e-12));

    // doubling the separation doubles the shadow radius
    const MultilaneGeometry g2 = multilane_geometry(M_PI / 20.0, 8.0, 0.02, 4.0);
    CHECK(g2.r0 == doctest::Approx(2.0 * g.r0).epsilon(1e-12));

    // beam chosen so r0 = 50 exactly
    const double beam = 2.0 * std::atan(4.0 / 50.0);
    const MultilaneGeometry ge = multilane_geometry(beam, 4.0, 0.02, 4.0);
    CHECK(ge.r0 == doctest::Approx(50.0).epsilon(1e-12));
    CHECK(ge.R_other == doctest::Approx(184.2015749320193).epsilon(1e-12));

    CHECK_THROWS_AS(multilane_geometry(0.0, 4.0, 0.02, 4.0), DomainError);
    CHECK_THROWS_AS(multilane_geometry(M_PI, 4.0, 0.02, 4.0), DomainError);
    CHECK_THROWS_AS(multilane_geometry(0.1, -1.0, 0.02, 4.0), DomainError);
}

TEST_CASE("far-field share equality at the other-lane threshold") {
    // int_R^inf r^-eta dr = q int_r0^inf r^-eta dr holds exactly at R_other
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> uq(0.005, 0.5), ue(2.2, 6.0), ur(5.0, 200.0);
    for (int i = 0; i < 50; ++i) {
        const double q = uq(gen), eta = ue(gen), r0 = ur(gen);
        const double beam = 2.0 * std::atan(1.0);  // r0 = lane_sep below
        const MultilaneGeometry g = multilane_geometry(beam, r0, q, eta);
        CHECK(g.r0 == doctest::Approx(r0).epsilon(1e-12));
        const double lhs = std::pow(g.R_other, 1.0 - eta) / (eta - 1.0);
        const double rhs = q * std::pow(g.r0, 1.0 - eta) / (eta - 1.0);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}
