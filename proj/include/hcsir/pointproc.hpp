#pragma once

#include <cstdint>
#include <vector>

#include "hcsir/params.hpp"
#include "hcsir/rng.hpp"

namespace hcsir {

enum class OriginKind {
    conditioned_transmitter,  // positions measured from a point of the process
    reference_receiver,       // positions measured from an added reference point
};

struct LaneSnapshot {
    std::vector<double> positions;  // strictly increasing, m
    OriginKind origin_kind = OriginKind::conditioned_transmitter;
};

// Pair correlation function rho2(r) of the hardcore renewal process: the sum
// of the k-fold convolutions of the c + Exp(mu) gap density. Zero for r < c.
double pcf(const ScenarioParams& params, double r);

// Probability that the interval [kc, (k+1)c] contains a vehicle, obtained by
// integrating the PCF over the interval; evaluated with regularized gamma
// functions so large k does not overflow.
double interval_occupancy(const ScenarioParams& params, int k);

// Large-k limit of interval_occupancy.
double interval_occupancy_approx(const ScenarioParams& params);

// Vehicles behind a transmitter conditioned at the origin: cumulative sums of
// i.i.d. gaps c + Exp(mu), truncated at `length`. Deterministic per seed.
LaneSnapshot sample_hardcore(const ScenarioParams& params, double length,
                             std::uint64_t rng_seed);
void append_hardcore(Rng& rng, double c, double mu, double length,
                     std::vector<double>& out);

// Link distance to the nearest vehicle ahead: c + Exp(mu).
double sample_link_distance(const ScenarioParams& params, std::uint64_t rng_seed);

// Homogeneous PPP on [lo, hi): Poisson count, uniform positions, sorted.
LaneSnapshot sample_ppp(double intensity, double lo, double hi,
                        std::uint64_t rng_seed);

// Stationary (unconditioned) hardcore process restricted to
// [offset, offset + length): first point at offset plus the forward
// recurrence distance, then i.i.d. hardcore gaps. c = 0 reduces to a PPP.
LaneSnapshot sample_hardcore_stationary(double lambda, double c, double offset,
                                        double length, std::uint64_t rng_seed);
void append_hardcore_stationary(Rng& rng, double lambda, double c, double offset,
                                double length, std::vector<double>& out);

}  // namespace hcsir
