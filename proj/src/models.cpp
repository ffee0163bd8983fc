#include "hcsir/models.hpp"

#include <cmath>

#include "hcsir/detail/pgfl.hpp"
#include "hcsir/pointproc.hpp"
#include "hcsir/quadrature.hpp"
#include "hcsir/specfun.hpp"

namespace hcsir {

namespace {

// Averages f(d) over the shifted-exponential link distance d = c + U/mu,
// U ~ Exp(1), truncated at U = 40 (tail mass e^-40).
template <class F>
double average_over_link(const ScenarioParams& params, F&& f) {
    const double mu = params.mu();
    auto g = [&](double u) { return f(params.c + u / mu) * std::exp(-u); };
    return integrate(g, 0.0, 40.0, 1e-10, 1e-13).value;
}

}  // namespace

double rmin(const ScenarioParams& params) {
    const double mu = params.mu();
    const double g = upper_inc_gamma(2.0 - params.eta, 2.0 * mu * params.c).value;
    const double base = params.q / (1.0 - params.lambda * params.c) * g;
    return std::pow(base, 1.0 / (1.0 - params.eta)) / mu;
}

namespace detail {
int k_from_rmin(double rmin_value, double c) {
    const int k = static_cast<int>(std::ceil(rmin_value / c));
    return k < 2 ? 2 : k;
}
}  // namespace detail

DiscretizationConfig make_config(const ScenarioParams& params, int K,
                                 OccupancyMode mode) {
    if (params.c <= 0.0)
        throw DomainError("discretization requires a positive hardcore distance c");
    if (K < 2) K = 2;
    DiscretizationConfig cfg;
    cfg.K = K;
    cfg.R = K * params.c;
    cfg.occupancy_mode = mode;
    cfg.p.resize(K - 1);
    for (int k = 1; k < K; ++k) {
        cfg.p[k - 1] = (mode == OccupancyMode::exact_eq2)
                           ? interval_occupancy(params, k)
                           : interval_occupancy_approx(params);
    }
    return cfg;
}

DiscretizationConfig choose_k(const ScenarioParams& params, OccupancyMode mode) {
    if (params.c <= 0.0)
        throw DomainError("discretization requires a positive hardcore distance c");
    return make_config(params, detail::k_from_rmin(rmin(params), params.c), mode);
}

double mean_far_interference(const ScenarioParams& params, double R) {
    if (!(R > 0.0)) throw DomainError("mean_far_interference: R must be positive");
    const double mu = params.mu();
    const double scaled = expx_upper_inc_gamma(2.0 - params.eta, mu * (params.c + R));
    return params.lambda * params.xi * std::pow(mu, params.eta - 1.0) /
           (params.eta - 1.0) * scaled;
}

double mean_interference_lower_bound(const ScenarioParams& params) {
    if (!(params.c > 0.0))
        throw DomainError("mean_interference_lower_bound: requires c > 0");
    const double mu = params.mu();
    // e^(mu c) Gamma(2-eta, 2 mu c) = e^(-mu c) * [e^(2 mu c) Gamma(2-eta, 2 mu c)]
    const double scaled =
        std::exp(-mu * params.c) * expx_upper_inc_gamma(2.0 - params.eta, 2.0 * mu * params.c);
    return params.xi * std::pow(mu, params.eta) / (params.eta - 1.0) * scaled;
}

double near_field_success_factor(const ScenarioParams& params,
                                 const DiscretizationConfig& config, double theta,
                                 double d) {
    const double s = theta * std::pow(d, params.eta);
    double prod = 1.0;
    for (int k = 1; k < config.K; ++k) {
        const double mean =
            detail::interval_mean_success(params.eta, s, d + params.c * k, params.c);
        prod *= 1.0 - params.xi * config.p[k - 1] * (1.0 - mean);
    }
    return prod;
}

double far_field_success_factor(const ScenarioParams& params, double R,
                                double theta, double d) {
    const double s = theta * std::pow(d, params.eta);
    return std::exp(
        detail::log_ppp_power_factor(params.lambda, params.xi, params.eta, s, R + d, 1));
}

OutageResult outage_discretization(const ScenarioParams& params,
                                   const DiscretizationConfig& config, double theta) {
    if (!(theta > 0.0)) throw DomainError("outage: theta must be positive");
    const double mean = average_over_link(params, [&](double d) {
        return near_field_success_factor(params, config, theta, d) *
               far_field_success_factor(params, config.R, theta, d);
    });
    return {theta, 1.0 - mean, Model::discretization};
}

OutageResult outage_m1(const ScenarioParams& params, double theta) {
    if (!(theta > 0.0)) throw DomainError("outage: theta must be positive");
    const double mean = average_over_link(params, [&](double d) {
        return far_field_success_factor(params, params.c, theta, d);
    });
    return {theta, 1.0 - mean, Model::m1};
}

OutageResult outage_m2(const ScenarioParams& params, double theta) {
    if (!(theta > 0.0)) throw DomainError("outage: theta must be positive");
    const double e = params.eta;
    const double b = hyp2f1(1.0, 1.0 - 1.0 / e, 2.0 - 1.0 / e, -theta).value *
                     params.xi * theta / (e - 1.0);
    return {theta, b / (b + 1.0), Model::m2};
}

OutageResult outage_m3_with_pcf(const ScenarioParams& params, double theta,
                                const std::function<double(double)>& rho2) {
    if (!(theta > 0.0)) throw DomainError("outage: theta must be positive");
    const double c = params.c;
    const double eta = params.eta;
    const double xi = params.xi;

    auto exponent = [&](double r) {
        const double s = theta * std::pow(r, eta);
        double total = 0.0;
        // separations up to 4c use the supplied pair-correlation intensity
        for (int k = 1; k <= 3; ++k) {
            auto f = [&](double x) { return xi * s * rho2(x - r) / (s + std::pow(x, eta)); };
            total += integrate(f, r + k * c, r + (k + 1) * c, 1e-10, 1e-14).value;
        }
        // flat intensity lambda beyond separation 4c
        total -= detail::log_ppp_power_factor(params.lambda, xi, eta, s, r + 4.0 * c, 1);
        return total;
    };
    const double mean =
        average_over_link(params, [&](double r) { return std::exp(-exponent(r)); });
    return {theta, 1.0 - mean, Model::m3};
}

OutageResult outage_m3(const ScenarioParams& params, double theta) {
    return outage_m3_with_pcf(params, theta,
                              [&](double sep) { return pcf(params, sep); });
}

OutageResult outage_m4(const ScenarioParams& params, double theta) {
    if (!(theta > 0.0)) throw DomainError("outage: theta must be positive");
    const double e = params.eta;
    const double mu_c = params.mu() * params.c;
    const double b = hyp2f1(1.0, 1.0 - 1.0 / e, 2.0 - 1.0 / e, -theta).value *
                     params.xi * theta / ((1.0 + mu_c) * (e - 1.0));
    return {theta, 1.0 - std::exp(-b * mu_c) / (b + 1.0), Model::m4};
}

}  // namespace hcsir
