#include "hcsir/traces.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace hcsir {

double EmpiricalCdf::quantile(double u) const {
    if (knots.empty()) throw DomainError("EmpiricalCdf: no knots");
    if (u <= 0.0 || u > 1.0) throw DomainError("EmpiricalCdf: u must be in (0, 1]");
    const std::size_t n = knots.size();
    std::size_t idx = static_cast<std::size_t>(u * n);
    if (idx >= n) idx = n - 1;
    return knots[idx];
}

double EmpiricalCdf::cdf(double x) const {
    if (knots.empty()) throw DomainError("EmpiricalCdf: no knots");
    const auto it = std::upper_bound(knots.begin(), knots.end(), x);
    return static_cast<double>(it - knots.begin()) / knots.size();
}

namespace {

struct Row {
    std::int64_t t;
    int lane;
    double pos;
};

std::vector<Row> read_rows(const std::string& path, ParseStats* stats) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open trace file: " + path);

    std::vector<Row> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // strip trailing CR from windows line endings
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1 &&
            std::any_of(line.begin(), line.end(), [](unsigned char ch) { return std::isalpha(ch); })) {
            std::string stripped;
            for (char ch : line)
                if (!std::isspace(static_cast<unsigned char>(ch))) stripped += ch;
            if (stripped != "t,lane,pos_m")
                throw ParseError(path + ": line 1: expected header 't,lane,pos_m', got '" +
                                 line + "'");
            continue;
        }
        std::istringstream ss(line);
        std::string f1, f2, f3, extra;
        if (!std::getline(ss, f1, ',') || !std::getline(ss, f2, ',') ||
            !std::getline(ss, f3, ','))
            throw ParseError(path + ": line " + std::to_string(line_no) +
                             ": expected 3 comma-separated fields");
        if (std::getline(ss, extra, ','))
            throw ParseError(path + ": line " + std::to_string(line_no) +
                             ": too many fields");
        Row r;
        try {
            std::size_t used;
            r.t = std::stoll(f1, &used);
            if (used != f1.size()) throw std::invalid_argument(f1);
            r.lane = std::stoi(f2, &used);
            if (used != f2.size()) throw std::invalid_argument(f2);
            r.pos = std::stod(f3, &used);
            if (used != f3.size()) throw std::invalid_argument(f3);
        } catch (const std::exception&) {
            throw ParseError(path + ": line " + std::to_string(line_no) +
                             ": malformed row '" + line + "'");
        }
        rows.push_back(r);
        if (stats) ++stats->rows;
    }
    return rows;
}

TraceSnapshot build_snapshot(const std::string& path, std::vector<Row> rows,
                             ParseStats* stats) {
    TraceSnapshot snap;
    if (rows.empty()) return snap;
    snap.timestamp = rows.front().t;

    std::map<int, std::vector<double>> per_lane;
    for (const Row& r : rows) per_lane[r.lane].push_back(r.pos);

    for (auto& [lane, positions] : per_lane) {
        for (std::size_t i = 1; i < positions.size(); ++i) {
            if (positions[i] < positions[i - 1] && stats) ++stats->unsorted_rows;
        }
        std::sort(positions.begin(), positions.end());
        for (std::size_t i = 1; i < positions.size(); ++i) {
            if (positions[i] == positions[i - 1])
                throw ValidationError(path + ": lane " + std::to_string(lane) +
                                      ": duplicate position " +
                                      std::to_string(positions[i]));
        }
        snap.road_length = std::max(snap.road_length, positions.back());
        LaneSnapshot ls;
        ls.positions = std::move(positions);
        ls.origin_kind = OriginKind::reference_receiver;
        snap.lanes.emplace(lane, std::move(ls));
    }
    return snap;
}

}  // namespace

TraceSnapshot parse_snapshot(const std::string& path, TraceFormat format,
                             ParseStats* stats) {
    if (format != TraceFormat::csv) throw ParseError("unsupported trace format");
    std::vector<Row> rows = read_rows(path, stats);
    std::set<std::int64_t> stamps;
    for (const Row& r : rows) stamps.insert(r.t);
    if (stamps.size() > 1)
        throw ParseError(path + ": contains " + std::to_string(stamps.size()) +
                         " timestamps; select one with parse_snapshot_at");
    return build_snapshot(path, std::move(rows), stats);
}

TraceSnapshot parse_snapshot_at(const std::string& path, TraceFormat format,
                                std::int64_t timestamp, ParseStats* stats) {
    if (format != TraceFormat::csv) throw ParseError("unsupported trace format");
    std::vector<Row> rows = read_rows(path, stats);
    std::erase_if(rows, [&](const Row& r) { return r.t != timestamp; });
    if (rows.empty())
        throw ParseError(path + ": no rows at timestamp " + std::to_string(timestamp));
    TraceSnapshot snap = build_snapshot(path, std::move(rows), stats);
    snap.timestamp = timestamp;
    return snap;
}

HeadwayFit fit_headways(const TraceSnapshot& snapshot, int lane_id) {
    const auto it = snapshot.lanes.find(lane_id);
    const std::size_t n_vehicles = (it == snapshot.lanes.end())
                                       ? 0
                                       : it->second.positions.size();
    if (n_vehicles < 30)
        throw InsufficientData("fit_headways: lane " + std::to_string(lane_id) + " has " +
                               std::to_string(n_vehicles) + " vehicles, need >= 30");

    const std::vector<double>& pos = it->second.positions;
    std::vector<double> gaps(pos.size() - 1);
    for (std::size_t i = 1; i < pos.size(); ++i) gaps[i - 1] = pos[i] - pos[i - 1];
    std::sort(gaps.begin(), gaps.end());

    const double mean = std::accumulate(gaps.begin(), gaps.end(), 0.0) / gaps.size();
    const double delta = 0.01 * mean;  // guard margin below the smallest gap

    HeadwayFit fit;
    fit.lambda_hat = 1.0 / mean;
    fit.c_hat = std::max(0.0, gaps.front() - delta);
    fit.n_gaps = static_cast<int>(gaps.size());
    fit.empirical_cdf.knots = std::move(gaps);
    return fit;
}

nlohmann::json headway_fit_to_json(const HeadwayFit& fit) {
    return nlohmann::json{{"lambda_hat", fit.lambda_hat},
                          {"c_hat", fit.c_hat},
                          {"n_gaps", fit.n_gaps},
                          {"ecdf_knots", fit.empirical_cdf.knots}};
}

HeadwayFit headway_fit_from_json(const nlohmann::json& j) {
    HeadwayFit fit;
    fit.lambda_hat = j.at("lambda_hat").get<double>();
    fit.c_hat = j.at("c_hat").get<double>();
    fit.n_gaps = j.at("n_gaps").get<int>();
    fit.empirical_cdf.knots = j.at("ecdf_knots").get<std::vector<double>>();
    return fit;
}

MultilaneGeometry multilane_geometry(double beamwidth, double lane_sep, double q,
                                     double eta) {
    if (!(beamwidth > 0.0 && beamwidth < M_PI))
        throw DomainError("multilane_geometry: beamwidth must be in (0, pi)");
    if (!(lane_sep > 0.0)) throw DomainError("multilane_geometry: lane_sep must be positive");
    if (!(q > 0.0 && q < 1.0)) throw DomainError("multilane_geometry: q must be in (0, 1)");
    if (!(eta > 1.0)) throw DomainError("multilane_geometry: eta must exceed 1");
    MultilaneGeometry g;
    g.r0 = lane_sep / std::tan(0.5 * beamwidth);
    g.R_other = std::pow(1.0 / q, 1.0 / (eta - 1.0)) * g.r0;
    return g;
}

}  // namespace hcsir
