#include "hcsir/asymptotics.hpp"

#include <cmath>

namespace hcsir {

namespace {

double large_theta_slope(double eta) { return (eta * eta + 1.0) / (eta * eta - 1.0); }

double small_theta_nu(const ScenarioParams& params, double t) {
    return (params.eta + 1.0) * params.lambda * t /
           (std::pow(2.0, params.eta) * (params.eta - 1.0));
}

}  // namespace

MetaMoments lemma3_moments(const ScenarioParams& params, double xi, double theta) {
    const double mu = params.mu();
    const double lam = params.lambda;
    const double c = params.c;
    const double eta = params.eta;
    const double th = std::pow(theta, 1.0 / eta);

    const double nu1 = lam * xi * (large_theta_slope(eta) * th - 1.0);
    const double m1 = std::exp(lam * c * xi) * mu * std::exp(-nu1 * c) / (mu + nu1);

    const double nu2 = 2.0 * nu1 -
                       lam * xi * xi *
                           ((4.0 * eta * eta * eta + 3.0 * eta + 1.0) /
                                ((eta + 1.0) * (4.0 * eta * eta - 1.0)) * th -
                            1.0);
    const double m2 = std::exp(2.0 * lam * c * xi - lam * xi * xi * c) * mu *
                      std::exp(-nu2 * c) / (mu + nu2);
    return make_meta_moments(theta, {m1, m2});
}

MetaMoments lemma3_limit(const ScenarioParams& params, double T) {
    if (!(T > 0.0)) throw DomainError("lemma3_limit: T must be positive");
    const double mu = params.mu();
    const double nu = params.lambda * T * large_theta_slope(params.eta);
    const double c = params.c;
    const double m1 = mu * std::exp(-nu * c) / (mu + nu);
    const double m2 = mu * std::exp(-2.0 * nu * c) / (mu + 2.0 * nu);
    MetaMoments m = make_meta_moments(std::pow(T / params.xi, params.eta), {m1, m2});
    // the CoV of these limit moments collapses to a closed form
    m.cov = nu / std::sqrt(mu * (mu + 2.0 * nu));
    return m;
}

MetaMoments lemma4_moments(const ScenarioParams& params, double xi, double theta) {
    const double mu = params.mu();
    const double lam = params.lambda;
    const double c = params.c;
    const double eta = params.eta;
    const double t = xi * theta;  // the moments depend on xi, theta only via t
    const double nu = small_theta_nu(params, t);
    const double p2 = std::pow(2.0, eta);

    const double m1 = std::exp(lam * c * t / p2) * mu * std::exp(-nu * c) / (mu + nu);
    const double m2 = std::exp(lam * c * t / (p2 / 2.0)) * mu *
                      std::exp(-2.0 * nu * c) / (mu + 2.0 * nu);
    return make_meta_moments(theta, {m1, m2});
}

double cov_limit(const ScenarioParams& params, const AsymptoticRegime& regime) {
    if (!(regime.constant > 0.0))
        throw DomainError("cov_limit: regime constant must be positive");
    const double mu = params.mu();
    const double nu = (regime.regime == Regime::large_theta_T)
                          ? params.lambda * regime.constant * large_theta_slope(params.eta)
                          : small_theta_nu(params, regime.constant);
    return nu / std::sqrt(mu * (mu + 2.0 * nu));
}

}  // namespace hcsir
