#include "hcsir/metadist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hcsir/detail/pgfl.hpp"
#include "hcsir/quadrature.hpp"
#include "hcsir/specfun.hpp"

namespace hcsir {

MetaMoments make_meta_moments(double theta, std::vector<double> moments) {
    MetaMoments m;
    m.theta = theta;
    m.m_full = std::move(moments);
    m.mean = m.m_full.empty() ? std::numeric_limits<double>::quiet_NaN() : m.m_full[0];
    if (m.m_full.size() >= 2) {
        m.variance = m.m_full[1] - m.mean * m.mean;
        m.cov = std::sqrt(std::max(0.0, m.m_full[1] / (m.mean * m.mean) - 1.0));
    } else {
        m.variance = std::numeric_limits<double>::quiet_NaN();
        m.cov = std::numeric_limits<double>::quiet_NaN();
    }
    return m;
}

double meta_moment_near(const ScenarioParams& params, const DiscretizationConfig& config,
                        double theta, double d, int b) {
    if (b < 1) throw DomainError("meta_moment_near: b must be >= 1");
    if (d < params.c) throw DomainError("meta_moment_near: d must be >= c");
    const double s = theta * std::pow(d, params.eta);
    double prod = 1.0;
    for (int k = 1; k < config.K; ++k) {
        const double mean = detail::interval_mean_power(params.xi, params.eta, s,
                                                        d + params.c * k, params.c, b);
        prod *= 1.0 - config.p[k - 1] + config.p[k - 1] * mean;
    }
    return prod;
}

double meta_moment_far(const ScenarioParams& params, double R, double theta,
                       double d, int b) {
    if (b < 1) throw DomainError("meta_moment_far: b must be >= 1");
    const double s = theta * std::pow(d, params.eta);
    return std::exp(
        detail::log_ppp_power_factor(params.lambda, params.xi, params.eta, s, R + d, b));
}

namespace {

void check_moment_order(int B) {
    if (B < 1 || B > 3)
        throw DomainError("meta moments: B must be in {1, 2, 3}, got " + std::to_string(B));
}

// E[f(d)] with d = c + U/mu, U ~ Exp(1) truncated at 40.
template <class F>
double shifted_exp_average(const ScenarioParams& params, F&& f) {
    const double mu = params.mu();
    auto g = [&](double u) { return f(params.c + u / mu) * std::exp(-u); };
    return integrate(g, 0.0, 40.0, 1e-10, 1e-13).value;
}

}  // namespace

MetaMoments meta_moments(const ScenarioParams& params, const DiscretizationConfig& config,
                         double theta, int B) {
    check_moment_order(B);
    std::vector<double> m(B);
    for (int b = 1; b <= B; ++b) {
        m[b - 1] = shifted_exp_average(params, [&](double d) {
            return meta_moment_near(params, config, theta, d, b) *
                   meta_moment_far(params, config.R, theta, d, b);
        });
    }
    return make_meta_moments(theta, std::move(m));
}

MetaMoments meta_moments_m1(const ScenarioParams& params, double theta, int B) {
    check_moment_order(B);
    std::vector<double> m(B);
    for (int b = 1; b <= B; ++b) {
        m[b - 1] = shifted_exp_average(
            params, [&](double d) { return meta_moment_far(params, params.c, theta, d, b); });
    }
    return make_meta_moments(theta, std::move(m));
}

MetaMoments meta_moments_m2(const ScenarioParams& params, double theta, int B) {
    check_moment_order(B);
    std::vector<double> m(B);
    for (int b = 1; b <= B; ++b) {
        // exponential link of rate lambda, far field from the receiver itself
        auto f = [&](double u) {
            const double d = u / params.lambda;
            const double s = theta * std::pow(d, params.eta);
            return std::exp(detail::log_ppp_power_factor(params.lambda, params.xi,
                                                         params.eta, s, d, b)) *
                   std::exp(-u);
        };
        m[b - 1] = integrate(f, 0.0, 40.0, 1e-10, 1e-13).value;
    }
    return make_meta_moments(theta, std::move(m));
}

namespace {

void check_beta_feasible(const MetaMoments& m) {
    const double m1 = m.mean;
    const double var = m.variance;
    if (!(var > 0.0) || !(var < m1 * (1.0 - m1)))
        throw InfeasibleMoments("moment pair (mean " + std::to_string(m1) + ", variance " +
                                std::to_string(var) +
                                ") is not realizable by a Beta law on [0,1]");
}

}  // namespace

BetaFit fit_beta(const MetaMoments& m) {
    check_beta_feasible(m);
    const double m1 = m.mean;
    const double var = m.variance;
    BetaFit fit;
    fit.kind = BetaKind::beta2;
    fit.alpha = m1 * (m1 * (1.0 - m1) - var) / var;
    fit.beta = m1 - 1.0 + m1 * (1.0 - m1) * (1.0 - m1) / var;
    fit.epsilon = 1.0;
    fit.matched_moments = 2;
    return fit;
}

double gen_beta_moment(const BetaFit& fit, int b) {
    switch (fit.kind) {
        case BetaKind::beta2: {
            // E[Z^b] = prod_{i=0}^{b-1} (alpha+i)/(alpha+beta+i)
            double v = 1.0;
            for (int i = 0; i < b; ++i) v *= (fit.alpha + i) / (fit.alpha + fit.beta + i);
            return v;
        }
        case BetaKind::gen_beta2:
            return fit.beta * std::exp(log_beta(1.0 + b / fit.alpha, fit.beta));
        case BetaKind::gen_beta3:
            return std::exp(log_beta(fit.epsilon + b / fit.alpha, fit.beta) -
                            log_beta(fit.epsilon, fit.beta));
    }
    throw DomainError("gen_beta_moment: unknown kind");
}

namespace {

// Damped Newton on log-parameters for the moment equations E[Z^b] = M_b.
BetaFit solve_gen_beta(const MetaMoments& m, BetaKind kind,
                       std::vector<double> log_params) {
    const int n = static_cast<int>(log_params.size());
    constexpr double kResidualTol = 1e-10;
    constexpr int kMaxIter = 200;

    auto unpack = [&](const std::vector<double>& lp) {
        BetaFit f;
        f.kind = kind;
        f.alpha = std::exp(lp[0]);
        f.beta = std::exp(lp[1]);
        f.epsilon = (n == 3) ? std::exp(lp[2]) : 1.0;
        f.matched_moments = n;
        return f;
    };
    auto residual = [&](const std::vector<double>& lp) {
        const BetaFit f = unpack(lp);
        std::vector<double> r(n);
        for (int b = 1; b <= n; ++b) r[b - 1] = gen_beta_moment(f, b) - m.m_full[b - 1];
        return r;
    };
    auto norm2 = [](const std::vector<double>& r) {
        double s = 0.0;
        for (double v : r) s += v * v;
        return s;
    };

    std::vector<double> r = residual(log_params);
    for (int iter = 0; iter < kMaxIter; ++iter) {
        if (std::sqrt(norm2(r)) <= kResidualTol) return unpack(log_params);

        // forward-difference Jacobian
        std::vector<std::vector<double>> J(n, std::vector<double>(n));
        const double fd = 1e-7;
        for (int j = 0; j < n; ++j) {
            std::vector<double> lp = log_params;
            lp[j] += fd;
            const std::vector<double> rj = residual(lp);
            for (int i = 0; i < n; ++i) J[i][j] = (rj[i] - r[i]) / fd;
        }
        // solve J step = -r by Gaussian elimination with partial pivoting
        std::vector<double> rhs(n);
        for (int i = 0; i < n; ++i) rhs[i] = -r[i];
        for (int col = 0; col < n; ++col) {
            int piv = col;
            for (int i = col + 1; i < n; ++i)
                if (std::abs(J[i][col]) > std::abs(J[piv][col])) piv = i;
            std::swap(J[col], J[piv]);
            std::swap(rhs[col], rhs[piv]);
            if (std::abs(J[col][col]) < 1e-300)
                throw NoConvergence("generalized Beta fit: singular Jacobian");
            for (int i = col + 1; i < n; ++i) {
                const double f = J[i][col] / J[col][col];
                for (int j = col; j < n; ++j) J[i][j] -= f * J[col][j];
                rhs[i] -= f * rhs[col];
            }
        }
        std::vector<double> step(n);
        for (int i = n - 1; i >= 0; --i) {
            double s = rhs[i];
            for (int j = i + 1; j < n; ++j) s -= J[i][j] * step[j];
            step[i] = s / J[i][i];
        }
        // backtracking line search on the squared residual
        const double base = norm2(r);
        double t = 1.0;
        for (;;) {
            std::vector<double> lp = log_params;
            for (int i = 0; i < n; ++i) lp[i] += t * step[i];
            const std::vector<double> rt = residual(lp);
            if (norm2(rt) < base || t < 1e-8) {
                log_params = lp;
                r = rt;
                break;
            }
            t *= 0.5;
        }
    }
    if (std::sqrt(norm2(r)) <= 1e-8) return unpack(log_params);
    throw NoConvergence("generalized Beta fit: no convergence after budget");
}

}  // namespace

BetaFit fit_generalized_beta(const MetaMoments& m, BetaKind kind) {
    if (kind == BetaKind::beta2) return fit_beta(m);
    check_beta_feasible(m);
    const BetaFit plain = fit_beta(m);
    if (kind == BetaKind::gen_beta2) {
        // starts: power-law exponent 1 with mean-matched beta, then the
        // plain-Beta shape pair
        const double beta0 = std::max(1.0 / m.mean - 1.0, 1e-6);
        const std::vector<std::vector<double>> starts = {
            {0.0, std::log(beta0)},
            {std::log(std::max(plain.alpha, 1e-3)), std::log(std::max(plain.beta, 1e-3))},
            {std::log(2.0), std::log(2.0)}};
        for (std::size_t i = 0; i < starts.size(); ++i) {
            try {
                return solve_gen_beta(m, kind, starts[i]);
            } catch (const NoConvergence&) {
                if (i + 1 == starts.size()) throw;
            }
        }
    }
    if (m.m_full.size() < 3)
        throw DomainError("fit_generalized_beta: gen_beta3 requires the third moment");
    // alpha = 1 makes the law an ordinary Beta(epsilon, beta): exact nesting
    const std::vector<std::vector<double>> starts = {
        {0.0, std::log(std::max(plain.beta, 1e-3)), std::log(std::max(plain.alpha, 1e-3))},
        {std::log(2.0), std::log(2.0), 0.0}};
    for (std::size_t i = 0; i < starts.size(); ++i) {
        try {
            return solve_gen_beta(m, BetaKind::gen_beta3, starts[i]);
        } catch (const NoConvergence&) {
            if (i + 1 == starts.size()) throw;
        }
    }
    throw NoConvergence("fit_generalized_beta: unreachable");
}

std::vector<double> meta_ccdf(const BetaFit& fit, const std::vector<double>& u_grid) {
    std::vector<double> out;
    out.reserve(u_grid.size());
    double prev = 0.0;
    bool first = true;
    for (double u : u_grid) {
        if (u < 0.0 || u > 1.0) throw DomainError("meta_ccdf: grid values must lie in [0,1]");
        if (!first && u < prev) throw DomainError("meta_ccdf: grid must be sorted");
        prev = u;
        first = false;
        double cdf;
        if (u <= 0.0) {
            cdf = 0.0;
        } else if (u >= 1.0) {
            cdf = 1.0;
        } else {
            switch (fit.kind) {
                case BetaKind::beta2:
                    cdf = reg_inc_beta(fit.alpha, fit.beta, u);
                    break;
                case BetaKind::gen_beta2:
                    cdf = 1.0 - std::pow(1.0 - std::pow(u, fit.alpha), fit.beta);
                    break;
                case BetaKind::gen_beta3:
                    cdf = reg_inc_beta(fit.epsilon, fit.beta, std::pow(u, fit.alpha));
                    break;
                default:
                    throw DomainError("meta_ccdf: unknown kind");
            }
        }
        out.push_back(1.0 - cdf);
    }
    return out;
}

MetaMoments meta_moments_multilane(const ScenarioParams& own,
                                   const DiscretizationConfig& own_config,
                                   const std::vector<AnalyticLane>& lanes,
                                   double theta, int B) {
    check_moment_order(B);
    const double xi = own.xi;
    const double eta = own.eta;
    std::vector<double> m(B);
    for (int b = 1; b <= B; ++b) {
        m[b - 1] = shifted_exp_average(own, [&](double d) {
            const double s = theta * std::pow(d, eta);
            double v = meta_moment_near(own, own_config, theta, d, b) *
                       meta_moment_far(own, own_config.R, theta, d, b);
            for (const AnalyticLane& lane : lanes) {
                if (lane.lambda <= 0.0) continue;
                double far_from = lane.r0;
                if (lane.discretized) {
                    const double p = lane.lambda * lane.c;  // stationary occupancy
                    for (int k = 0; k < lane.K; ++k) {
                        const double mean = detail::interval_mean_power(
                            xi, eta, s, lane.r0 + k * lane.c, lane.c, b);
                        v *= 1.0 - p + p * mean;
                    }
                    far_from = lane.r0 + lane.K * lane.c;
                }
                v *= std::exp(detail::log_ppp_power_factor(lane.lambda, xi, eta, s,
                                                           far_from, b));
            }
            return v;
        });
    }
    return make_meta_moments(theta, std::move(m));
}

}  // namespace hcsir
