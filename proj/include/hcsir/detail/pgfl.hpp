#pragma once

#include <cmath>

#include "hcsir/specfun.hpp"

// Building blocks shared by the analytic outage and meta-moment paths: the
// PPP generating-functional factor raised to integer powers and the mean of
// the per-interval retention kernel over one discretization interval.
namespace hcsir::detail {

inline double binom(int n, int k) {
    double v = 1.0;
    for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
}

// log E prod (1 - xi + xi/(1 + s x^-eta))^b over a PPP of intensity lam on
// [y, inf):  lam * sum_{j=1}^{b} C(b,j) (-xi)^j s^j F_j  with
// F_j = y^(1-j eta)/(j eta - 1) * 2F1(j - 1/eta, j; j - 1/eta + 1; -s y^-eta).
// Terms are grouped as (s y^-eta)^j * y so nothing overflows for small y.
inline double log_ppp_power_factor(double lam, double xi, double eta, double s,
                                   double y, int b) {
    if (s <= 0.0 || lam <= 0.0) return 0.0;
    const double tau = s * std::pow(y, -eta);
    double sum = 0.0;
    double xj = 1.0;
    for (int j = 1; j <= b; ++j) {
        xj *= -xi * tau;
        const double f = hyp2f1(j - 1.0 / eta, j, j - 1.0 / eta + 1.0, -tau).value;
        sum += binom(b, j) * xj * y / (j * eta - 1.0) * f;
    }
    return lam * sum;
}

// (1/width) int_0^width (1 + s (x+A)^-eta)^-1 dx via the antiderivative
// a^(eta+1) 2F1(1, (eta+1)/eta; (2 eta+1)/eta; -a^eta/s) / (s (eta+1)),
// checked by differentiating the series: the coefficient of the n-th term
// must equal (eta+1)/(eta+1+n eta), which pins the third parameter.
inline double interval_mean_success(double eta, double s, double A, double width) {
    auto f = [&](double a) {
        const double z = -std::pow(a, eta) / s;
        return std::pow(a, eta + 1.0) *
               hyp2f1(1.0, (eta + 1.0) / eta, 2.0 + 1.0 / eta, z).value;
    };
    return (f(A + width) - f(A)) / (width * s * (eta + 1.0));
}

// (1/width) int_0^width (1 - xi s/(s + (x+A)^eta))^b dx via the binomial
// expansion; the j-th antiderivative is a 2F1(j, 1/eta; 1 + 1/eta; -a^eta/s).
inline double interval_mean_power(double xi, double eta, double s, double A,
                                  double width, int b) {
    auto h = [&](double a, int j) {
        const double z = -std::pow(a, eta) / s;
        return a / width * hyp2f1(j, 1.0 / eta, (eta + 1.0) / eta, z).value;
    };
    double sum = 1.0;  // j = 0 term is exactly 1
    double xj = 1.0;
    for (int j = 1; j <= b; ++j) {
        xj *= -xi;
        sum += binom(b, j) * xj * (h(A + width, j) - h(A, j));
    }
    return sum;
}

}  // namespace hcsir::detail
