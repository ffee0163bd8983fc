#pragma once

#include <functional>
#include <vector>

#include "hcsir/params.hpp"

namespace hcsir {

enum class OccupancyMode { exact_eq2, approx_lambda_c };

// Near-field discretization of [c, R] into K intervals of width c, each
// holding at most one vehicle (interval k occupied with probability p[k-1]).
struct DiscretizationConfig {
    int K;
    double R;  // = K * c
    std::vector<double> p;  // K-1 occupancy probabilities
    OccupancyMode occupancy_mode;
};

enum class Model { discretization, m1, m2, m3, m4 };

struct OutageResult {
    double theta;  // SIR threshold, linear
    double p_out;
    Model model;
};

// Smallest near/far separation radius R such that the mean far-field
// interference is at most fraction q of a lower bound on the total:
// R_min = (1/mu) [ q/(1-lambda c) Gamma(2-eta, 2 mu c) ]^(1/(1-eta)).
double rmin(const ScenarioParams& params);

// K = max(2, ceil(rmin/c)); occupancies filled according to mode.
DiscretizationConfig choose_k(const ScenarioParams& params,
                              OccupancyMode mode = OccupancyMode::exact_eq2);

// Discretization with an explicitly chosen K (still floored at 2).
DiscretizationConfig make_config(const ScenarioParams& params, int K,
                                 OccupancyMode mode = OccupancyMode::exact_eq2);

namespace detail {
int k_from_rmin(double rmin_value, double c);
}

// Mean interference from vehicles beyond R (PPP far-field approximation,
// averaged over the link distance). The e^x Gamma(., x) product is evaluated
// as one scaled quantity.
double mean_far_interference(const ScenarioParams& params, double R);

// Lower bound on the total mean interference; requires c > 0.
double mean_interference_lower_bound(const ScenarioParams& params);

// Outage under the discretization model: near-field interval product times
// the far-field PPP factor, averaged over the shifted-exponential link
// distance.
OutageResult outage_discretization(const ScenarioParams& params,
                                   const DiscretizationConfig& config, double theta);

// Near-field success factor of the discretization model at link distance d
// (the quantity whose product with the far-field factor is averaged).
double near_field_success_factor(const ScenarioParams& params,
                                 const DiscretizationConfig& config, double theta,
                                 double d);

// Far-field success factor: PPP of intensity lambda beyond R + d.
double far_field_success_factor(const ScenarioParams& params, double R,
                                double theta, double d);

// M1: PPP of intensity lambda on (c, inf), shifted-exponential link distance.
OutageResult outage_m1(const ScenarioParams& params, double theta);

// M2: exponential inter-vehicle distances; closed form, intensity-free.
OutageResult outage_m2(const ScenarioParams& params, double theta);

// M3: non-homogeneous PPP with the pair correlation function as intensity
// (exact PCF up to separation 4c, flat lambda beyond).
OutageResult outage_m3(const ScenarioParams& params, double theta);

// M3 with a caller-supplied intensity rho2(separation) on [c, 4c].
OutageResult outage_m3_with_pcf(const ScenarioParams& params, double theta,
                                const std::function<double(double)>& rho2);

// M4: PPP of intensity lambda on (0, inf), shifted-exponential link; closed form.
OutageResult outage_m4(const ScenarioParams& params, double theta);

}  // namespace hcsir
