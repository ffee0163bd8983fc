#include "hcsir/pointproc.hpp"

#include <algorithm>
#include <cmath>

#include "hcsir/specfun.hpp"

namespace hcsir {

double pcf(const ScenarioParams& params, double r) {
    const double c = params.c;
    if (r < c) return 0.0;
    const double mu = params.mu();
    if (c == 0.0) return params.lambda;  // degenerate PPP: renewal density is flat

    // Only the k-th convolution block overlaps r, k = floor(r/c); within it
    // the j-th gamma density contributes for j <= k.
    const int k = std::min(static_cast<int>(r / c), 1000000);
    const double ln_mu = std::log(mu);
    double sum = 0.0;
    for (int j = 1; j <= k; ++j) {
        const double u = r - j * c;
        if (u < 0.0) break;
        double ln_term;
        if (u == 0.0) {
            if (j > 1) continue;  // (r - jc)^(j-1) vanishes except for j = 1
            ln_term = ln_mu;
        } else {
            ln_term = j * ln_mu + (j - 1) * std::log(u) - std::lgamma(j) - mu * u;
        }
        sum += std::exp(ln_term);
    }
    return sum;
}

double interval_occupancy(const ScenarioParams& params, int k) {
    if (k < 1) throw DomainError("interval_occupancy: k must be >= 1");
    const double cmu = params.c * params.mu();
    if (cmu == 0.0) return 0.0;
    // sum_j Q(j, cmu(k-j)) - Q(j, cmu(k+1-j)) with Q(j, 0) = 1
    auto Q = [&](int j, double x) {
        return x <= 0.0 ? 1.0 : upper_inc_gamma_regularized(j, x);
    };
    double sum = 0.0;
    for (int j = 1; j <= k; ++j) {
        sum += Q(j, cmu * (k - j)) - Q(j, cmu * (k + 1 - j));
    }
    return std::clamp(sum, 0.0, 1.0);
}

double interval_occupancy_approx(const ScenarioParams& params) {
    return params.lambda * params.c;
}

void append_hardcore(Rng& rng, double c, double mu, double length,
                     std::vector<double>& out) {
    double pos = 0.0;
    for (;;) {
        pos += c + rng.exponential(mu);
        if (pos > length) break;
        out.push_back(pos);
    }
}

LaneSnapshot sample_hardcore(const ScenarioParams& params, double length,
                             std::uint64_t rng_seed) {
    if (!(length > 0.0)) throw DomainError("sample_hardcore: length must be positive");
    Rng rng(rng_seed);
    LaneSnapshot snap;
    snap.origin_kind = OriginKind::conditioned_transmitter;
    snap.positions.reserve(static_cast<std::size_t>(length * params.lambda * 1.2) + 16);
    append_hardcore(rng, params.c, params.mu(), length, snap.positions);
    return snap;
}

double sample_link_distance(const ScenarioParams& params, std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    return params.c + rng.exponential(params.mu());
}

LaneSnapshot sample_ppp(double intensity, double lo, double hi,
                        std::uint64_t rng_seed) {
    if (!(intensity > 0.0)) throw DomainError("sample_ppp: intensity must be positive");
    LaneSnapshot snap;
    snap.origin_kind = OriginKind::reference_receiver;
    if (!(hi > lo)) return snap;  // empty interval
    Rng rng(rng_seed);
    double pos = lo;
    for (;;) {
        pos += rng.exponential(intensity);
        if (pos >= hi) break;
        snap.positions.push_back(pos);
    }
    return snap;
}

void append_hardcore_stationary(Rng& rng, double lambda, double c, double offset,
                                double length, std::vector<double>& out) {
    if (lambda <= 0.0) return;
    const double mu = lambda / (1.0 - lambda * c);
    // forward recurrence distance: density lambda on [0, c),
    // lambda e^(-mu(v-c)) beyond
    const double u = rng.uniform();
    double v;
    if (u < lambda * c) {
        v = u / lambda;
    } else {
        v = c - std::log((1.0 - u) / (1.0 - lambda * c)) / mu;
    }
    double pos = offset + v;
    const double end = offset + length;
    while (pos < end) {
        out.push_back(pos);
        pos += c + rng.exponential(mu);
    }
}

LaneSnapshot sample_hardcore_stationary(double lambda, double c, double offset,
                                        double length, std::uint64_t rng_seed) {
    if (lambda > 0.0 && !(lambda * c < 1.0))
        throw DomainError("sample_hardcore_stationary: lambda*c must be < 1");
    Rng rng(rng_seed);
    LaneSnapshot snap;
    snap.origin_kind = OriginKind::reference_receiver;
    append_hardcore_stationary(rng, lambda, c, offset, length, snap.positions);
    return snap;
}

}  // namespace hcsir
