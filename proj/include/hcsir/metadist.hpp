#pragma once

#include <vector>

#include "hcsir/models.hpp"
#include "hcsir/params.hpp"

namespace hcsir {

// Moments of the conditional success probability P_s(theta) across spatial
// realizations, plus the derived coefficient of variation.
struct MetaMoments {
    double theta;
    std::vector<double> m_full;  // m_full[b-1] = b-th raw moment
    double mean;                 // = M_1
    double variance;             // = M_2 - M_1^2 (NaN when only M_1 known)
    double cov;                  // = sqrt(M_2/M_1^2 - 1)
};

MetaMoments make_meta_moments(double theta, std::vector<double> moments);

enum class BetaKind { beta2, gen_beta2, gen_beta3 };

// Parameters of the (generalized) Beta law fitted to meta moments.
//   beta2:     g(z) = z^(a-1) (1-z)^(b-1) / B(a, b)
//   gen_beta2: g(z) = a b z^(a-1) (1 - z^a)^(b-1)
//   gen_beta3: g(z) = a / B(e, b) z^(a e - 1) (1 - z^a)^(b-1)
struct BetaFit {
    BetaKind kind;
    double alpha;
    double beta;
    double epsilon;  // gen_beta3 only; 1 otherwise
    int matched_moments;
};

// Near-field contribution to the b-th moment at link distance d: product of
// per-interval means of the retention kernel raised to b.
double meta_moment_near(const ScenarioParams& params, const DiscretizationConfig& config,
                        double theta, double d, int b);

// Far-field contribution: PPP of intensity lambda beyond R + d.
double meta_moment_far(const ScenarioParams& params, double R, double theta,
                       double d, int b);

// Moments of the discretization model: near x far averaged over the
// shifted-exponential link distance. B in {1, 2, 3}.
MetaMoments meta_moments(const ScenarioParams& params, const DiscretizationConfig& config,
                         double theta, int B);

// Moments of model M1 (far field from separation c, no near-field product).
MetaMoments meta_moments_m1(const ScenarioParams& params, double theta, int B);

// Moments of model M2 (far field from 0, exponential link of rate lambda).
MetaMoments meta_moments_m2(const ScenarioParams& params, double theta, int B);

// Two-parameter Beta fit matching mean and variance.
BetaFit fit_beta(const MetaMoments& m);

// Iterative fit of the generalized Beta laws; gen_beta3 also matches the
// third raw moment.
BetaFit fit_generalized_beta(const MetaMoments& m, BetaKind kind);

// Raw moment E[Z^b] of a fitted law.
double gen_beta_moment(const BetaFit& fit, int b);

// P(Z > u) of the fitted law on a sorted grid in [0, 1].
std::vector<double> meta_ccdf(const BetaFit& fit, const std::vector<double>& u_grid);

// One interfering lane referenced to the receiver: vehicles contribute only
// beyond r0. Either fully PPP from r0, or discretized into K intervals of
// width c on [r0, r0 + K c] with a PPP beyond.
struct AnalyticLane {
    double lambda;
    double c;
    double r0;
    int K = 0;
    bool discretized = false;
};

// Moments with interference aggregated over the own lane plus other lanes.
MetaMoments meta_moments_multilane(const ScenarioParams& own,
                                   const DiscretizationConfig& own_config,
                                   const std::vector<AnalyticLane>& lanes,
                                   double theta, int B);

}  // namespace hcsir
