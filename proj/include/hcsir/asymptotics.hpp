#pragma once

#include "hcsir/metadist.hpp"
#include "hcsir/params.hpp"

namespace hcsir {

enum class Regime { large_theta_T, small_theta_t };

// Scaling regime of the closed-form moment approximations: either
// T = xi * theta^(1/eta) held constant (large theta), or t = xi * theta held
// constant (small theta).
struct AsymptoticRegime {
    Regime regime;
    double constant;  // T or t, > 0
};

// Closed-form large-theta approximations of M1, M2 (valid roughly for
// theta > 10; computed regardless, callers judge the regime).
MetaMoments lemma3_moments(const ScenarioParams& params, double xi, double theta);

// Limits of the large-theta moments as xi -> 0 at fixed T = xi theta^(1/eta).
MetaMoments lemma3_limit(const ScenarioParams& params, double T);

// Closed-form small-theta approximations of M1, M2; depend on xi and theta
// only through t = xi * theta (valid roughly for theta < 0.5).
MetaMoments lemma4_moments(const ScenarioParams& params, double xi, double theta);

// Limit coefficient of variation nu / sqrt(mu (mu + 2 nu)) for either regime.
double cov_limit(const ScenarioParams& params, const AsymptoticRegime& regime);

// Validity windows used for CLI annotations.
inline bool lemma3_in_validity(double theta) { return theta > 10.0; }
inline bool lemma4_in_validity(double theta) { return theta < 0.5; }

}  // namespace hcsir
