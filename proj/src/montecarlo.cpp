#include "hcsir/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "hcsir/pointproc.hpp"
#include "hcsir/rng.hpp"

namespace hcsir {

namespace {

int worker_count(const SimulationPlan& plan) {
    int n = plan.max_threads;
    if (n <= 0) {
        if (const char* env = std::getenv("HARDCORE_SIR_THREADS")) {
            n = std::atoi(env);
        }
    }
    if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    return std::min(n, plan.n_configs);
}

void validate_plan(const SimulationPlan& plan) {
    if (plan.n_configs < 1) throw DomainError("SimulationPlan: n_configs must be >= 1");
    if (plan.n_fading < 0) throw DomainError("SimulationPlan: n_fading must be >= 0");
    if (!(plan.segment_length > 0.0))
        throw DomainError("SimulationPlan: segment_length must be positive");
    if (plan.source == SimSource::empirical_headway_cdf &&
        (!plan.headway_cdf || plan.headway_cdf->knots.empty()))
        throw DomainError("SimulationPlan: empirical source requires a headway CDF");
}

// Draw order per configuration: link distance first, then interferer
// positions, then (sampling mode only) fading and activity marks. Drawing d
// first keeps the gap sequence aligned across runs that differ only in
// segment length. Every distance in `dist` is interferer-to-receiver.
void fill_config_row(const ScenarioParams& params,
                     const std::vector<OtherLaneSpec>& others,
                     const SimulationPlan& plan,
                     const std::vector<double>& theta_grid,
                     std::uint64_t config_seed, std::vector<double>& row) {
    Rng rng(config_seed);
    std::vector<double> own;
    double d;
    if (plan.source == SimSource::hardcore) {
        d = params.c + rng.exponential(params.mu());
        append_hardcore(rng, params.c, params.mu(), plan.segment_length, own);
    } else {
        const EmpiricalCdf& ecdf = *plan.headway_cdf;
        d = ecdf.quantile(rng.uniform());
        double pos = 0.0;
        for (;;) {
            pos += ecdf.quantile(rng.uniform());
            if (pos > plan.segment_length) break;
            own.push_back(pos);
        }
    }

    std::vector<double> dist;
    dist.reserve(own.size() + 64 * others.size());
    for (double x : own) dist.push_back(x + d);
    for (std::size_t l = 0; l < others.size(); ++l) {
        const OtherLaneSpec& lane = others[l];
        if (lane.lambda <= 0.0) continue;
        Rng lane_rng(derive_seed(config_seed, l + 1));
        append_hardcore_stationary(lane_rng, lane.lambda, lane.c, lane.offset,
                                   plan.segment_length, dist);
    }

    const double eta = params.eta;
    const double xi = params.xi;
    const std::size_t n_theta = theta_grid.size();
    row.assign(n_theta, 1.0);

    if (plan.n_fading == 0) {
        // exact conditional expectation over fading and ALOHA
        for (std::size_t t = 0; t < n_theta; ++t) {
            const double s = theta_grid[t] * std::pow(d, eta);
            double prod = 1.0;
            for (double x : dist) prod *= 1.0 - xi + xi / (1.0 + s * std::pow(x, -eta));
            row[t] = prod;
        }
        return;
    }

    // per-realization sampling of fading and activity
    std::vector<double> pathloss(dist.size());
    for (std::size_t i = 0; i < dist.size(); ++i) pathloss[i] = std::pow(dist[i], -eta);
    const double d_loss = std::pow(d, -eta);
    std::vector<int> success(n_theta, 0);
    for (int rep = 0; rep < plan.n_fading; ++rep) {
        const double signal = rng.exponential(1.0) * d_loss;
        double interference = 0.0;
        for (std::size_t i = 0; i < dist.size(); ++i) {
            const double h = rng.exponential(1.0);
            const bool active = rng.bernoulli(xi);
            if (active) interference += h * pathloss[i];
        }
        for (std::size_t t = 0; t < n_theta; ++t) {
            if (signal > theta_grid[t] * interference) ++success[t];
        }
    }
    for (std::size_t t = 0; t < n_theta; ++t)
        row[t] = static_cast<double>(success[t]) / plan.n_fading;
}

SimulationResult run_simulation(const ScenarioParams& params,
                                const std::vector<OtherLaneSpec>& others,
                                const SimulationPlan& plan,
                                const std::vector<double>& theta_grid) {
    validate_plan(plan);
    for (double theta : theta_grid)
        if (!(theta > 0.0)) throw DomainError("simulate: thresholds must be positive");

    SimulationResult result;
    result.theta_grid = theta_grid;
    result.per_config_success.assign(plan.n_configs, {});

    const int threads = worker_count(plan);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int idx = next.fetch_add(1);
            if (idx >= plan.n_configs) break;
            fill_config_row(params, others, plan, theta_grid,
                            derive_seed(plan.master_seed, idx),
                            result.per_config_success[idx]);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    const std::size_t n_theta = theta_grid.size();
    const double n = plan.n_configs;
    result.p_out.resize(n_theta);
    result.ci_halfwidth.resize(n_theta);
    result.moments.reserve(n_theta);
    for (std::size_t t = 0; t < n_theta; ++t) {
        double sum = 0.0, sum2 = 0.0;
        for (int i = 0; i < plan.n_configs; ++i) {
            const double p = result.per_config_success[i][t];
            sum += p;
            sum2 += p * p;
        }
        const double m1 = sum / n;
        const double m2 = sum2 / n;
        result.p_out[t] = 1.0 - m1;
        const double sd = std::sqrt(std::max(0.0, m2 - m1 * m1));
        result.ci_halfwidth[t] = 1.96 * sd / std::sqrt(n);
        result.moments.push_back(make_meta_moments(theta_grid[t], {m1, m2}));
    }
    return result;
}

}  // namespace

SimulationResult simulate_outage(const ScenarioParams& params, const SimulationPlan& plan,
                                 const std::vector<double>& theta_grid) {
    return run_simulation(params, {}, plan, theta_grid);
}

SimulationResult simulate_meta(const ScenarioParams& params, const SimulationPlan& plan,
                               const std::vector<double>& theta_grid) {
    return run_simulation(params, {}, plan, theta_grid);
}

SimulationResult simulate_multilane(const ScenarioParams& own,
                                    const std::vector<OtherLaneSpec>& others,
                                    const SimulationPlan& plan,
                                    const std::vector<double>& theta_grid) {
    for (const OtherLaneSpec& lane : others) {
        if (lane.lambda > 0.0 && !(lane.lambda * lane.c < 1.0))
            throw DomainError("simulate_multilane: lane lambda*c must be < 1");
        if (lane.offset < 0.0)
            throw DomainError("simulate_multilane: lane offset must be >= 0");
    }
    return run_simulation(own, others, plan, theta_grid);
}

std::vector<double> empirical_ccdf(const SimulationResult& result, std::size_t theta_index,
                                   const std::vector<double>& u_grid) {
    if (theta_index >= result.theta_grid.size())
        throw DomainError("empirical_ccdf: theta index out of range");
    std::vector<double> out;
    out.reserve(u_grid.size());
    const double n = static_cast<double>(result.per_config_success.size());
    for (double u : u_grid) {
        int count = 0;
        for (const auto& row : result.per_config_success)
            if (row[theta_index] > u) ++count;
        out.push_back(count / n);
    }
    return out;
}

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string simulation_to_csv(const SimulationResult& result) {
    std::string out = "theta_db,p_out,ci,m1,m2,cov\n";
    for (std::size_t t = 0; t < result.theta_grid.size(); ++t) {
        out += fmt17(linear_to_db(result.theta_grid[t]));
        out += ',';
        out += fmt17(result.p_out[t]);
        out += ',';
        out += fmt17(result.ci_halfwidth[t]);
        out += ',';
        out += fmt17(result.moments[t].mean);
        out += ',';
        out += fmt17(result.moments[t].m_full[1]);
        out += ',';
        out += fmt17(result.moments[t].cov);
        out += '\n';
    }
    return out;
}

nlohmann::json simulation_to_json(const SimulationResult& result, bool include_matrix) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t t = 0; t < result.theta_grid.size(); ++t) {
        rows.push_back({{"theta_db", linear_to_db(result.theta_grid[t])},
                        {"p_out", result.p_out[t]},
                        {"ci", result.ci_halfwidth[t]},
                        {"m1", result.moments[t].mean},
                        {"m2", result.moments[t].m_full[1]},
                        {"cov", result.moments[t].cov}});
    }
    nlohmann::json j{{"rows", rows}};
    if (include_matrix) j["per_config_success"] = result.per_config_success;
    return j;
}

}  // namespace hcsir
