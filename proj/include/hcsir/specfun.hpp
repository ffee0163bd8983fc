#pragma once

#include "hcsir/errors.hpp"

namespace hcsir {

struct SpecFunResult {
    double value;
    double est_abs_error;
};

// Gauss hypergeometric 2F1(a, b; c; z) for real parameters and z < 1.
// Evaluation: defining series for |z| <= 0.5, Pfaff transformation for
// moderate negative z, and the z -> 1/z linear transformation for large
// negative z where the Pfaff series would need too many terms.
// Throws DomainError when c is a non-positive integer or z >= 1,
// ConvergenceError when no strategy reaches tolerance within the budget.
SpecFunResult hyp2f1(double a, double b, double c, double z);

// Upper incomplete gamma Gamma(a, x) = int_x^inf t^(a-1) e^(-t) dt, x > 0.
// a may be zero or negative; non-positive a is reached by the downward
// recurrence Gamma(a, x) = (Gamma(a+1, x) - x^a e^(-x)) / a.
SpecFunResult upper_inc_gamma(double a, double x);

// Regularized Q(a, x) = Gamma(a, x) / Gamma(a) for a > 0. Stable for large a
// where Gamma(a, x) itself would overflow.
double upper_inc_gamma_regularized(double a, double x);

// e^x * Gamma(a, x) evaluated as one scaled quantity; stays finite for large
// x where the two factors would under/overflow separately.
double expx_upper_inc_gamma(double a, double x);

// Exponential integral E1(x) = Gamma(0, x), x > 0.
double exp_int_e1(double x);

// ln B(alpha, beta) for positive arguments.
double log_beta(double alpha, double beta);

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double reg_inc_beta(double a, double b, double x);

}  // namespace hcsir
