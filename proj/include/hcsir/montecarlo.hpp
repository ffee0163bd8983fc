#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcsir/metadist.hpp"
#include "hcsir/params.hpp"
#include "hcsir/traces.hpp"

#include "json.hpp"

namespace hcsir {

enum class SimSource { hardcore, empirical_headway_cdf };

struct SimulationPlan {
    int n_configs = 1000;
    // Fading/activity realizations per configuration; 0 selects the exact
    // conditional expectation over fading and ALOHA (variance-reduced, same
    // semantics).
    int n_fading = 0;
    double segment_length = 25000.0;  // m, behind the transmitter
    std::uint64_t master_seed = 1;
    SimSource source = SimSource::hardcore;
    std::optional<EmpiricalCdf> headway_cdf;  // required for the empirical source
    int max_threads = 0;  // 0: HARDCORE_SIR_THREADS env or hardware concurrency
};

struct SimulationResult {
    std::vector<double> theta_grid;  // linear thresholds
    // per_config_success[i][t]: conditional success probability of
    // configuration i at theta_grid[t]
    std::vector<std::vector<double>> per_config_success;
    std::vector<double> p_out;          // 1 - mean success per theta
    std::vector<double> ci_halfwidth;   // 95% normal CI on the mean
    std::vector<MetaMoments> moments;   // per theta
};

// One interfering lane besides the own lane: an unconditioned stationary
// hardcore process (c = 0 gives a PPP) whose vehicles contribute only from
// `offset` metres behind the receiver. lambda = 0 disables the lane.
struct OtherLaneSpec {
    double lambda;
    double c;
    double offset;
};

// Outage estimation: spatial configurations (positions + link distance) with
// the conditional success probability evaluated per configuration.
SimulationResult simulate_outage(const ScenarioParams& params, const SimulationPlan& plan,
                                 const std::vector<double>& theta_grid);

// Meta-distribution estimation from the same estimator; the per-configuration
// matrix is the sample of conditional success probabilities.
SimulationResult simulate_meta(const ScenarioParams& params, const SimulationPlan& plan,
                               const std::vector<double>& theta_grid);

// Own lane plus other-lane interference aggregated per configuration.
SimulationResult simulate_multilane(const ScenarioParams& own,
                                    const std::vector<OtherLaneSpec>& others,
                                    const SimulationPlan& plan,
                                    const std::vector<double>& theta_grid);

// Empirical P(P_s > u) of a simulated column on a grid of u values.
std::vector<double> empirical_ccdf(const SimulationResult& result, std::size_t theta_index,
                                   const std::vector<double>& u_grid);

// CSV emission: theta_db, p_out, ci, m1, m2, cov (17 significant digits).
std::string simulation_to_csv(const SimulationResult& result);

// JSON emission of the same values; the per-configuration matrix is included
// only when requested.
nlohmann::json simulation_to_json(const SimulationResult& result,
                                  bool include_matrix = false);

}  // namespace hcsir
