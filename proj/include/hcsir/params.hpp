#pragma once

#include <cmath>

#include "hcsir/errors.hpp"

namespace hcsir {

// Scenario parameters of a single lane. Inter-vehicle gaps are c + Exp(mu)
// with mu = lambda / (1 - lambda*c), so the intensity is exactly lambda.
struct ScenarioParams {
    double lambda;  // vehicle intensity, 1/m
    double c;       // hardcore distance, m
    double eta;     // pathloss exponent, > 2
    double xi;      // ALOHA activity probability
    double q;       // admissible far-field share of the mean interference

    ScenarioParams(double lambda_, double c_, double eta_, double xi_, double q_ = 0.02)
        : lambda(lambda_), c(c_), eta(eta_), xi(xi_), q(q_) {
        validate();
    }

    double mu() const { return lambda / (1.0 - lambda * c); }

    void validate() const;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

}  // namespace hcsir
