// hcsir: batch front-end for outage / meta-distribution computation,
// Monte Carlo campaigns and trace fitting on 1-D hardcore vehicular lanes.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hcsir/asymptotics.hpp"
#include "hcsir/metadist.hpp"
#include "hcsir/models.hpp"
#include "hcsir/montecarlo.hpp"
#include "hcsir/traces.hpp"

namespace {

using hcsir::ScenarioParams;

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- tables

struct Table {
    std::vector<std::string> columns;
    using Cell = std::variant<double, std::string>;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }

    std::string to_csv() const {
        std::string out;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out += ',';
            out += columns[i];
        }
        out += '\n';
        char buf[64];
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ',';
                if (std::holds_alternative<double>(row[i])) {
                    std::snprintf(buf, sizeof(buf), "%.17g", std::get<double>(row[i]));
                    out += buf;
                } else {
                    out += std::get<std::string>(row[i]);
                }
            }
            out += '\n';
        }
        return out;
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json obj;
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (std::holds_alternative<double>(row[i]))
                    obj[columns[i]] = std::get<double>(row[i]);
                else
                    obj[columns[i]] = std::get<std::string>(row[i]);
            }
            arr.push_back(std::move(obj));
        }
        return arr;
    }
};

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw hcsir::Error("cannot write output file: " + out_path);
    out << text;
}

// ---------------------------------------------------------------- scenario

struct Scenario {
    double lambda = 0.025;
    double c = 16.0;
    double eta = 3.0;
    double xi = 0.5;
    double q = 0.02;
    std::optional<int> K;
    std::vector<double> theta_db{0.0};
    std::optional<std::string> models;
    std::uint64_t seed = 1;
    int configs = 1000;
    int fading = 0;  // 0 = exact conditional products
    double segment = 25000.0;
    std::vector<hcsir::OtherLaneSpec> other_lanes;

    ScenarioParams params() const { return ScenarioParams(lambda, c, eta, xi, q); }
};

std::vector<double> parse_grid(const std::string& spec) {
    if (spec.find(':') != std::string::npos) {
        double a, b, step;
        char colon1, colon2;
        std::istringstream ss(spec);
        if (!(ss >> a >> colon1 >> b >> colon2 >> step) || colon1 != ':' || colon2 != ':' ||
            step <= 0.0 || b < a)
            throw UsageError("bad grid spec '" + spec + "', expected a:b:step");
        std::vector<double> grid;
        const int n = static_cast<int>((b - a) / step + 1e-9);
        for (int i = 0; i <= n; ++i) grid.push_back(a + i * step);
        return grid;
    }
    std::vector<double> grid;
    std::istringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used;
            grid.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad grid value '" + item + "'");
        }
    }
    if (grid.empty()) throw UsageError("empty grid spec");
    return grid;
}

std::vector<hcsir::OtherLaneSpec> parse_other_lanes(const std::string& spec) {
    // lambda:c:offset per lane, lanes separated by ';' or ','
    std::vector<hcsir::OtherLaneSpec> lanes;
    std::istringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        hcsir::OtherLaneSpec lane{};
        char c1, c2;
        std::istringstream ls(item);
        if (!(ls >> lane.lambda >> c1 >> lane.c >> c2 >> lane.offset) || c1 != ':' || c2 != ':')
            throw UsageError("bad other_lanes entry '" + item + "', expected lambda:c:offset");
        lanes.push_back(lane);
    }
    return lanes;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

void load_scenario_file(const std::string& path, Scenario& sc) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open scenario file: " + path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "lambda") sc.lambda = std::stod(value);
            else if (key == "c") sc.c = std::stod(value);
            else if (key == "eta") sc.eta = std::stod(value);
            else if (key == "xi") sc.xi = std::stod(value);
            else if (key == "q") sc.q = std::stod(value);
            else if (key == "K") sc.K = std::stoi(value);
            else if (key == "theta_db") sc.theta_db = parse_grid(value);
            else if (key == "models") sc.models = value;
            else if (key == "seed") sc.seed = std::stoull(value);
            else if (key == "configs") sc.configs = std::stoi(value);
            else if (key == "fading") sc.fading = (value == "exact") ? 0 : std::stoi(value);
            else if (key == "segment") sc.segment = std::stod(value);
            else if (key == "other_lanes") sc.other_lanes = parse_other_lanes(value);
            else
                throw UsageError(path + ":" + std::to_string(line_no) + ": unknown key '" +
                                 key + "'");
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError(path + ":" + std::to_string(line_no) + ": bad value for '" +
                             key + "'");
        }
    }
}

std::vector<std::string> split_models(const std::string& spec) {
    std::vector<std::string> out;
    std::istringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

hcsir::DiscretizationConfig disc_config(const Scenario& sc, const ScenarioParams& p) {
    return sc.K ? hcsir::make_config(p, *sc.K) : hcsir::choose_k(p);
}

std::vector<hcsir::AnalyticLane> analytic_lanes(const Scenario& sc, bool discretized) {
    std::vector<hcsir::AnalyticLane> lanes;
    for (const auto& o : sc.other_lanes) {
        hcsir::AnalyticLane lane;
        lane.lambda = o.lambda;
        lane.c = o.c;
        lane.r0 = o.offset;
        lane.discretized = discretized && o.c > 0.0;
        if (lane.discretized) {
            const double r_other = std::pow(1.0 / sc.q, 1.0 / (sc.eta - 1.0)) * o.offset;
            lane.K = std::max(1, static_cast<int>(std::ceil((r_other - o.offset) / o.c)));
        }
        lanes.push_back(lane);
    }
    return lanes;
}

// ----------------------------------------------------------------- output

struct OutputOpts {
    std::string format = "csv";
    std::string out_path;
};

void emit(const Table& table, const OutputOpts& opts) {
    if (opts.format == "json") {
        write_output(nlohmann::json{{"rows", table.to_json()}}.dump(2) + "\n", opts.out_path);
    } else {
        write_output(table.to_csv(), opts.out_path);
    }
}

// ------------------------------------------------------------ subcommands

int cmd_rmin(const Scenario& sc, const OutputOpts& opts) {
    const ScenarioParams p = sc.params();
    const double r = hcsir::rmin(p);
    const auto cfg = hcsir::choose_k(p);
    Table t;
    t.columns = {"lambda", "c", "eta", "q", "rmin_m", "K", "R_m"};
    t.add_row({p.lambda, p.c, p.eta, p.q, r, static_cast<double>(cfg.K), cfg.R});
    emit(t, opts);
    return 0;
}

int cmd_outage(const Scenario& sc, const std::vector<std::string>& models,
               const OutputOpts& opts) {
    if (models.empty()) throw UsageError("outage: no models selected");
    const ScenarioParams p = sc.params();
    std::optional<hcsir::DiscretizationConfig> cfg;

    Table t;
    t.columns = {"theta_db", "model", "p_out", "note"};
    for (double th_db : sc.theta_db) {
        const double theta = hcsir::db_to_linear(th_db);
        for (const std::string& model : models) {
            double p_out;
            std::string note;
            if (model == "disc") {
                if (!cfg) cfg = disc_config(sc, p);
                p_out = hcsir::outage_discretization(p, *cfg, theta).p_out;
            } else if (model == "m1") {
                p_out = hcsir::outage_m1(p, theta).p_out;
            } else if (model == "m2") {
                p_out = hcsir::outage_m2(p, theta).p_out;
            } else if (model == "m3") {
                p_out = hcsir::outage_m3(p, theta).p_out;
            } else if (model == "m4") {
                p_out = hcsir::outage_m4(p, theta).p_out;
            } else if (model == "lemma3") {
                p_out = 1.0 - hcsir::lemma3_moments(p, p.xi, theta).mean;
                if (!hcsir::lemma3_in_validity(theta)) note = "out_of_regime";
            } else if (model == "lemma4") {
                p_out = 1.0 - hcsir::lemma4_moments(p, p.xi, theta).mean;
                if (!hcsir::lemma4_in_validity(theta)) note = "out_of_regime";
            } else {
                throw UsageError("outage: unknown model '" + model + "'");
            }
            t.add_row({th_db, model, p_out, note});
        }
    }
    emit(t, opts);
    return 0;
}

int cmd_meta(const Scenario& sc, const std::vector<std::string>& models,
             const std::string& fit_kind, int u_points, bool multilane,
             const OutputOpts& opts, const std::string& ccdf_out) {
    if (models.empty()) throw UsageError("meta: no models selected");
    const ScenarioParams p = sc.params();
    std::optional<hcsir::DiscretizationConfig> cfg;
    const int B = (fit_kind == "gen_beta3") ? 3 : 2;
    const hcsir::BetaKind kind = (fit_kind == "beta2")       ? hcsir::BetaKind::beta2
                                 : (fit_kind == "gen_beta2") ? hcsir::BetaKind::gen_beta2
                                 : (fit_kind == "gen_beta3")
                                     ? hcsir::BetaKind::gen_beta3
                                     : throw UsageError("meta: unknown fit '" + fit_kind + "'");

    std::vector<double> u_grid(u_points);
    for (int i = 0; i < u_points; ++i) u_grid[i] = static_cast<double>(i) / (u_points - 1);

    Table t, tc;
    t.columns = {"theta_db", "model", "m1", "m2", "cov", "alpha", "beta", "epsilon", "note"};
    tc.columns = {"theta_db", "model", "u", "ccdf"};
    bool any_infeasible = false;

    for (double th_db : sc.theta_db) {
        const double theta = hcsir::db_to_linear(th_db);
        for (const std::string& model : models) {
            hcsir::MetaMoments m;
            if (model == "disc") {
                if (!cfg) cfg = disc_config(sc, p);
                m = multilane ? hcsir::meta_moments_multilane(p, *cfg, analytic_lanes(sc, true),
                                                              theta, B)
                              : hcsir::meta_moments(p, *cfg, theta, B);
            } else if (model == "m1") {
                if (multilane)
                    throw UsageError("meta: --multilane supports the disc model only");
                m = hcsir::meta_moments_m1(p, theta, B);
            } else if (model == "m2") {
                if (multilane)
                    throw UsageError("meta: --multilane supports the disc model only");
                m = hcsir::meta_moments_m2(p, theta, B);
            } else if (model == "lemma3") {
                m = hcsir::lemma3_moments(p, p.xi, theta);
            } else if (model == "lemma4") {
                m = hcsir::lemma4_moments(p, p.xi, theta);
            } else {
                throw UsageError("meta: unknown model '" + model + "'");
            }

            std::string note;
            if ((model == "lemma3" && !hcsir::lemma3_in_validity(theta)) ||
                (model == "lemma4" && !hcsir::lemma4_in_validity(theta)))
                note = "out_of_regime";

            try {
                const hcsir::BetaFit fit =
                    (kind == hcsir::BetaKind::beta2) ? hcsir::fit_beta(m)
                                                     : hcsir::fit_generalized_beta(m, kind);
                t.add_row({th_db, model, m.mean, m.m_full[1], m.cov, fit.alpha, fit.beta,
                           fit.epsilon, note});
                const auto ccdf = hcsir::meta_ccdf(fit, u_grid);
                for (int i = 0; i < u_points; ++i)
                    tc.add_row({th_db, model, u_grid[i], ccdf[i]});
            } catch (const hcsir::InfeasibleMoments& e) {
                any_infeasible = true;
                std::cerr << "warning: theta_db " << th_db << " model " << model << ": "
                          << e.what() << "\n";
                t.add_row({th_db, model, m.mean, m.m_full[1], m.cov, std::string("nan"),
                           std::string("nan"), std::string("nan"),
                           std::string("infeasible_beta")});
            }
        }
    }

    if (opts.format == "json") {
        nlohmann::json j{{"rows", t.to_json()}, {"ccdf", tc.to_json()}};
        write_output(j.dump(2) + "\n", opts.out_path);
    } else {
        write_output(t.to_csv(), opts.out_path);
        std::string cc = ccdf_out;
        if (cc.empty() && !opts.out_path.empty()) {
            std::filesystem::path base(opts.out_path);
            cc = (base.parent_path() / (base.stem().string() + "_ccdf" +
                                        base.extension().string()))
                     .string();
        }
        if (!cc.empty()) write_output(tc.to_csv(), cc);
    }
    if (any_infeasible)
        std::cerr << "warning: some rows had Beta-infeasible moments (flagged)\n";
    return 0;
}

int cmd_simulate(const Scenario& sc, bool multilane, bool full,
                 const std::string& headways_path, const OutputOpts& opts) {
    const ScenarioParams p = sc.params();
    hcsir::SimulationPlan plan;
    plan.n_configs = sc.configs;
    plan.n_fading = sc.fading;
    plan.segment_length = sc.segment;
    plan.master_seed = sc.seed;
    if (!headways_path.empty()) {
        std::ifstream in(headways_path);
        if (!in) throw UsageError("cannot open headways file: " + headways_path);
        nlohmann::json j;
        in >> j;
        plan.source = hcsir::SimSource::empirical_headway_cdf;
        plan.headway_cdf = hcsir::headway_fit_from_json(j).empirical_cdf;
    }

    std::vector<double> grid;
    for (double db : sc.theta_db) grid.push_back(hcsir::db_to_linear(db));

    const hcsir::SimulationResult result =
        multilane ? hcsir::simulate_multilane(p, sc.other_lanes, plan, grid)
                  : hcsir::simulate_meta(p, plan, grid);

    if (opts.format == "json") {
        write_output(hcsir::simulation_to_json(result, full).dump(2) + "\n", opts.out_path);
    } else {
        write_output(hcsir::simulation_to_csv(result), opts.out_path);
    }
    return 0;
}

int cmd_fit_trace(const std::string& input, int lane, std::optional<std::int64_t> t,
                  const OutputOpts& opts) {
    if (!std::filesystem::exists(input)) {
        std::cerr << "error: input file not found: " << input << "\n";
        return kExitUsage;
    }
    hcsir::ParseStats stats;
    const hcsir::TraceSnapshot snap =
        t ? hcsir::parse_snapshot_at(input, hcsir::TraceFormat::csv, *t, &stats)
          : hcsir::parse_snapshot(input, hcsir::TraceFormat::csv, &stats);
    if (stats.unsorted_rows > 0)
        std::cerr << "warning: " << stats.unsorted_rows << " rows were out of order\n";
    const hcsir::HeadwayFit fit = hcsir::fit_headways(snap, lane);
    write_output(hcsir::headway_fit_to_json(fit).dump(2) + "\n", opts.out_path);
    return 0;
}

int cmd_sweep(const Scenario& sc, const std::string& param, const std::string& values,
              const std::vector<std::string>& models, std::optional<double> fixed_T,
              const OutputOpts& opts) {
    const std::vector<double> grid = parse_grid(values);
    Table t;
    t.columns = {"param", "value", "model", "m1", "m2", "cov"};

    auto add_models = [&](const Scenario& point, double value, double theta) {
        const ScenarioParams p = point.params();
        for (const std::string& model : models) {
            hcsir::MetaMoments m;
            if (model == "disc") {
                m = hcsir::meta_moments(p, disc_config(point, p), theta, 2);
            } else if (model == "m1") {
                m = hcsir::meta_moments_m1(p, theta, 2);
            } else if (model == "m2") {
                m = hcsir::meta_moments_m2(p, theta, 2);
            } else if (model == "lemma3") {
                m = hcsir::lemma3_moments(p, p.xi, theta);
            } else if (model == "lemma4") {
                m = hcsir::lemma4_moments(p, p.xi, theta);
            } else {
                throw UsageError("sweep: unknown model '" + model + "'");
            }
            t.add_row({param, value, model, m.mean, m.m_full[1], m.cov});
        }
    };

    if (param == "xi" || param == "c") {
        if (sc.theta_db.size() != 1 && !fixed_T)
            throw UsageError("sweep over " + param + " needs a single --theta-db (or --fixed-T)");
        for (double v : grid) {
            Scenario point = sc;
            if (param == "xi") point.xi = v;
            else point.c = v;
            double theta = hcsir::db_to_linear(point.theta_db[0]);
            if (fixed_T) theta = std::pow(*fixed_T / point.xi, point.eta);
            add_models(point, v, theta);
        }
    } else if (param == "T" || param == "t") {
        const ScenarioParams p = sc.params();
        for (double v : grid) {
            if (param == "T") {
                hcsir::MetaMoments m = hcsir::lemma3_limit(p, v);
                t.add_row({param, v, std::string("lemma3_limit"), m.mean, m.m_full[1], m.cov});
            } else {
                const double cov = hcsir::cov_limit(
                    p, {hcsir::Regime::small_theta_t, v});
                t.add_row({param, v, std::string("lemma4_cov_limit"), std::string("nan"),
                           std::string("nan"), cov});
            }
        }
    } else {
        throw UsageError("sweep: unknown param '" + param + "' (xi, c, T, t)");
    }
    emit(t, opts);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SIR outage and meta-distribution toolkit for 1-D hardcore vehicular lanes"};
    app.require_subcommand(1);

    // shared state filled by flags
    std::string scenario_path, theta_spec, models_spec, format = "csv", out_path;
    std::string ccdf_out, headways_path, fit_kind = "beta2", sweep_param, sweep_values;
    std::string trace_input;
    std::optional<double> q_override, c_override, lambda_override, xi_override, fixed_T;
    std::optional<std::uint64_t> seed_override;
    std::optional<int> configs_override, K_override;
    std::optional<std::string> fading_override;
    std::optional<double> segment_override;
    int u_points = 201, trace_lane = 0;
    std::optional<std::int64_t> trace_t;
    bool multilane = false, full_matrix = false;

    auto add_common = [&](CLI::App* cmd, bool with_models) {
        cmd->add_option("--scenario", scenario_path, "scenario key=value file");
        cmd->add_option("--theta-db", theta_spec, "threshold grid in dB: a:b:step or list");
        if (with_models) cmd->add_option("--models", models_spec, "comma-separated model list");
        cmd->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out_path, "output path (stdout if omitted)");
        cmd->add_option("--q", q_override, "far-field mean-interference fraction");
        cmd->add_option("--override-c", c_override, "hardcore distance override, m");
        cmd->add_option("--override-lambda", lambda_override, "intensity override, 1/m");
        cmd->add_option("--xi", xi_override, "activity probability override");
        cmd->add_option("--seed", seed_override, "master RNG seed");
        cmd->add_option("--K", K_override, "number of near-field intervals");
    };

    CLI::App* rmin_cmd = app.add_subcommand("rmin", "near/far separation threshold");
    add_common(rmin_cmd, false);

    CLI::App* outage_cmd = app.add_subcommand("outage", "outage probability sweep");
    add_common(outage_cmd, true);

    CLI::App* meta_cmd = app.add_subcommand("meta", "meta-distribution moments and CCDF");
    add_common(meta_cmd, true);
    meta_cmd->add_option("--fit", fit_kind, "beta2, gen_beta2 or gen_beta3");
    meta_cmd->add_option("--u-points", u_points, "CCDF grid size")->check(CLI::Range(2, 100000));
    meta_cmd->add_option("--ccdf-out", ccdf_out, "CCDF table path (csv mode)");
    meta_cmd->add_flag("--multilane", multilane, "include scenario other_lanes");

    CLI::App* sim_cmd = app.add_subcommand("simulate", "Monte Carlo campaign");
    add_common(sim_cmd, false);
    sim_cmd->add_option("--configs", configs_override, "number of spatial configurations");
    sim_cmd->add_option("--fading", fading_override,
                        "fading realizations per configuration, or 'exact'");
    sim_cmd->add_option("--segment", segment_override, "segment length behind transmitter, m");
    sim_cmd->add_option("--headways", headways_path, "headway-fit JSON (empirical source)");
    sim_cmd->add_flag("--multilane", multilane, "include scenario other_lanes");
    sim_cmd->add_flag("--full", full_matrix, "include per-config matrix in JSON output");

    CLI::App* fit_cmd = app.add_subcommand("fit-trace", "fit headways of one trace lane");
    fit_cmd->add_option("--input", trace_input, "trace CSV (t,lane,pos_m)")->required();
    fit_cmd->add_option("--lane", trace_lane, "lane id")->required();
    fit_cmd->add_option("--t", trace_t, "timestamp to select");
    fit_cmd->add_option("--format", format, "csv or json");
    fit_cmd->add_option("--out", out_path, "output path");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "moments along a parameter grid");
    add_common(sweep_cmd, true);
    sweep_cmd->add_option("--param", sweep_param, "xi, c, T or t")->required();
    sweep_cmd->add_option("--values", sweep_values, "grid a:b:step or list")->required();
    sweep_cmd->add_option("--fixed-T", fixed_T, "hold T = xi theta^(1/eta) while sweeping xi");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        Scenario sc;
        if (!scenario_path.empty()) load_scenario_file(scenario_path, sc);
        if (!theta_spec.empty()) sc.theta_db = parse_grid(theta_spec);
        if (q_override) sc.q = *q_override;
        if (c_override) sc.c = *c_override;
        if (lambda_override) sc.lambda = *lambda_override;
        if (xi_override) sc.xi = *xi_override;
        if (seed_override) sc.seed = *seed_override;
        if (configs_override) sc.configs = *configs_override;
        if (K_override) sc.K = *K_override;
        if (segment_override) sc.segment = *segment_override;
        if (fading_override)
            sc.fading = (*fading_override == "exact") ? 0 : std::stoi(*fading_override);

        std::string models_str = models_spec;
        bool models_given = false;
        for (CLI::App* cmd : {outage_cmd, meta_cmd, sweep_cmd})
            if (app.got_subcommand(cmd) && cmd->count("--models") > 0) models_given = true;
        if (!models_given && sc.models) {
            models_str = *sc.models;
            models_given = true;
        }

        OutputOpts opts{format, out_path};
        if (app.got_subcommand(rmin_cmd)) return cmd_rmin(sc, opts);
        if (app.got_subcommand(outage_cmd)) {
            if (!models_given) models_str = "disc,m1,m2";
            const auto models = split_models(models_str);
            if (models.empty()) throw UsageError("outage: empty model set");
            return cmd_outage(sc, models, opts);
        }
        if (app.got_subcommand(meta_cmd)) {
            if (!models_given) models_str = "disc,m1,m2";
            const auto models = split_models(models_str);
            if (models.empty()) throw UsageError("meta: empty model set");
            return cmd_meta(sc, models, fit_kind, u_points, multilane, opts, ccdf_out);
        }
        if (app.got_subcommand(sim_cmd))
            return cmd_simulate(sc, multilane, full_matrix, headways_path, opts);
        if (app.got_subcommand(fit_cmd)) return cmd_fit_trace(trace_input, trace_lane, trace_t, opts);
        if (app.got_subcommand(sweep_cmd)) {
            const auto models = split_models(models_str.empty() ? "m1" : models_str);
            return cmd_sweep(sc, sweep_param, sweep_values, models, fixed_T, opts);
        }
        throw UsageError("no subcommand");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hcsir::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return 0;
}
