#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hcsir/pointproc.hpp"

#include "json.hpp"

namespace hcsir {

// Step-function CDF over observed gap values; supports inverse sampling.
struct EmpiricalCdf {
    std::vector<double> knots;  // sorted ascending

    // Inverse CDF at u in (0, 1].
    double quantile(double u) const;
    // Fraction of knots <= x.
    double cdf(double x) const;
};

// One road snapshot: per-lane ordered vehicle positions at a fixed second.
struct TraceSnapshot {
    std::int64_t timestamp = 0;
    std::map<int, LaneSnapshot> lanes;
    double road_length = 0.0;
};

enum class TraceFormat { csv };

struct ParseStats {
    int rows = 0;
    int unsorted_rows = 0;  // rows that arrived out of order and were sorted
};

// Reads a `t,lane,pos_m` CSV holding exactly one timestamp. Unsorted rows are
// sorted (counted in stats); exact duplicates within a lane are rejected.
TraceSnapshot parse_snapshot(const std::string& path, TraceFormat format,
                             ParseStats* stats = nullptr);

// Same, selecting one timestamp out of a multi-second file.
TraceSnapshot parse_snapshot_at(const std::string& path, TraceFormat format,
                                std::int64_t timestamp, ParseStats* stats = nullptr);

// Shifted-exponential headway fit of one lane: lambda from the mean gap, c
// from the minimum gap minus a 1% guard margin.
struct HeadwayFit {
    double lambda_hat;
    double c_hat;
    int n_gaps;
    EmpiricalCdf empirical_cdf;
};

HeadwayFit fit_headways(const TraceSnapshot& snapshot, int lane_id);

nlohmann::json headway_fit_to_json(const HeadwayFit& fit);
HeadwayFit headway_fit_from_json(const nlohmann::json& j);

// Geometry of other-lane interference under a directional beam: vehicles
// closer than r0 = lane_sep / tan(beamwidth/2) fall outside the beam, and the
// far-field PPP threshold is R_other = (1/q)^(1/(eta-1)) * r0.
struct MultilaneGeometry {
    double r0;
    double R_other;
};

MultilaneGeometry multilane_geometry(double beamwidth, double lane_sep, double q,
                                     double eta);

}  // namespace hcsir
