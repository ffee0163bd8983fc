// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hcsir/asymptotics.hpp"
#include "hcsir/metadist.hpp"
#include "hcsir/models.hpp"
#include "hcsir/montecarlo.hpp"
#include "hcsir/pointproc.hpp"
#include "hcsir/traces.hpp"
#include "oracles.hpp"

using namespace hcsir;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail;
    try {
        ok = body();
    } catch (const std::exception& e) {
        detail = std::string(" (") + e.what() + ")";
    }
    std::printf("[%s] criterion %d: %s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool close(double value, double target, double tol, const char* label) {
    const bool ok = std::abs(value - target) <= tol;
    if (!ok)
        std::printf("       %s: got %.6f, want %.6f +- %.2g\n", label, value, target, tol);
    return ok;
}

const ScenarioParams kTable(0.025, 16.0, 3.0, 0.01, 0.02);

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    criterion(1, "moment table reproduction within 5e-4 in under 10 s", [] {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        const auto cfg = choose_k(kTable);
        const MetaMoments disc = meta_moments(kTable, cfg, 1000.0, 2);
        ok &= close(disc.mean, 0.89968, 5e-4, "disc M1");
        ok &= close(disc.m_full[1], 0.81293, 5e-4, "disc M2");
        ok &= close(disc.cov, 0.06580, 5e-4, "disc CoV");
        const MetaMoments m1 = meta_moments_m1(kTable, 1000.0, 2);
        ok &= close(m1.mean, 0.90050, 5e-4, "M1 M1");
        ok &= close(m1.m_full[1], 0.81456, 5e-4, "M1 M2");
        ok &= close(m1.cov, 0.06729, 5e-4, "M1 CoV");
        const MetaMoments lem = lemma3_moments(kTable, 0.01, 1000.0);
        ok &= close(lem.mean, 0.89698, 5e-4, "lemma3 M1");
        ok &= close(lem.m_full[1], 0.80846, 5e-4, "lemma3 M2");
        ok &= close(lem.cov, 0.06954, 5e-4, "lemma3 CoV");
        const MetaMoments m2 = meta_moments_m2(kTable, 1000.0, 2);
        ok &= close(m2.mean, 0.90015, 5e-4, "M2 M1");
        ok &= close(m2.m_full[1], 0.81891, 5e-4, "M2 M2");
        ok &= close(m2.cov, 0.10322, 5e-4, "M2 CoV");
        const double dt = seconds_since(t0);
        if (dt >= 10.0) {
            std::printf("       runtime %.2f s exceeds 10 s\n", dt);
            ok = false;
        }
        return ok;
    });

    criterion(2, "desk-scale simulation within 3 CI of the reference in under 60 s", [] {
        const auto t0 = std::chrono::steady_clock::now();
        SimulationPlan plan;
        plan.n_configs = 1000;
        plan.n_fading = 0;  // exact conditional products
        plan.segment_length = 25000.0;
        plan.master_seed = 20250810;
        const auto sim = simulate_meta(kTable, plan, {1000.0});
        bool ok = true;
        const double ci = sim.ci_halfwidth[0];
        ok &= close(sim.moments[0].mean, 0.89811, 3.0 * ci, "sim M1");
        // second-moment CI from the sample of squares
        double s = 0.0, s2 = 0.0;
        for (const auto& row : sim.per_config_success) {
            s += row[0] * row[0];
            s2 += row[0] * row[0] * row[0] * row[0];
        }
        const double n = plan.n_configs;
        const double sd2 = std::sqrt(std::max(0.0, s2 / n - (s / n) * (s / n)));
        ok &= close(sim.moments[0].m_full[1], 0.81010, 3.0 * 1.96 * sd2 / std::sqrt(n),
                    "sim M2");
        const double dt = seconds_since(t0);
        if (dt >= 60.0) {
            std::printf("       runtime %.2f s exceeds 60 s\n", dt);
            ok = false;
        }
        return ok;
    });

    criterion(3, "near/far separation radii within 2 m", [] {
        bool ok = close(rmin(kTable), 500.0, 2.0, "rmin (lambda c = 0.4)");
        const ScenarioParams fitted(0.0205, 14.82, 3.0, 0.5, 0.02);
        ok &= close(rmin(fitted), 442.0, 2.0, "rmin (fitted lane)");
        const auto cfg = choose_k(fitted);
        ok &= cfg.K == 30;
        if (cfg.K != 30) std::printf("       K: got %d, want 30\n", cfg.K);
        ok &= close(cfg.R, 445.0, 1.0, "R = K c");
        return ok;
    });

    criterion(4, "scheduled-link fractions at 0 dB, u = 0.8", [] {
        const ScenarioParams p(0.025, 16.0, 3.0, 0.5, 0.02);
        const BetaFit disc = fit_beta(meta_moments(p, choose_k(p), 1.0, 2));
        bool ok = close(meta_ccdf(disc, {0.8})[0], 0.83, 0.02, "discretization");
        const BetaFit m2 = fit_beta(meta_moments_m2(p, 1.0, 2));
        ok &= close(meta_ccdf(m2, {0.8})[0], 0.70, 0.02, "M2");
        return ok;
    });

    criterion(5, "low-activity convergence of the near field", [] {
        const ScenarioParams p(0.025, 16.0, 3.0, 1e-3, 0.02);
        const auto cfg = choose_k(p);
        double sup = 0.0;
        for (int db = -10; db <= 30; ++db) {
            const double theta = db_to_linear(db);
            sup = std::max(sup, std::abs(outage_discretization(p, cfg, theta).p_out -
                                         outage_m1(p, theta).p_out));
        }
        bool ok = sup <= 2e-3;
        if (!ok) std::printf("       sup |disc - M1| = %.2e > 2e-3\n", sup);

        double sup2 = 0.0;
        for (int db = -10; db <= 30; db += 5) {
            const double theta = db_to_linear(db);
            for (double d : {16.0, 40.0, 100.0}) {
                const double s = theta * std::pow(d, p.eta);
                const double integral = oracle::integrate(
                    [&](double x) {
                        const double w = p.xi * s / (s + std::pow(x, p.eta));
                        return 1.0 - (1.0 - w) * (1.0 - w);
                    },
                    p.c + d, cfg.R + d, 1e-12);
                sup2 = std::max(sup2, std::abs(meta_moment_near(p, cfg, theta, d, 2) -
                                               std::exp(-p.lambda * integral)));
            }
        }
        if (sup2 > 1e-3) {
            std::printf("       sup |M2n - exponential form| = %.2e > 1e-3\n", sup2);
            ok = false;
        }
        return ok;
    });

    criterion(6, "limit coefficients of variation", [] {
        bool ok = close(lemma3_limit(kTable, 0.1).cov, 0.070, 1e-3, "hardcore CoV");
        const ScenarioParams ppp(0.025, 0.0, 3.0, 0.01, 0.02);
        ok &= close(lemma3_limit(ppp, 0.1).cov, 0.112, 1e-3, "c = 0 CoV");
        return ok;
    });

    criterion(7, "invariance suites", [] {
        bool ok = true;
        std::mt19937_64 gen(123457);
        std::uniform_real_distribution<double> ul(0.005, 0.03), uc(0.0, 0.9), ue(2.2, 5.0),
            ux(0.005, 1.0), ut(-10.0, 30.0), uu(0.05, 0.95);

        // (a) moment ordering across a random scenario grid
        for (int i = 0; i < 100; ++i) {
            const double lambda = ul(gen);
            const ScenarioParams p(lambda, uc(gen) * 0.5 / lambda, ue(gen), ux(gen), 0.02);
            const MetaMoments m = meta_moments_m1(p, db_to_linear(ut(gen)), 2);
            if (!(m.m_full[1] <= m.mean * (1.0 + 1e-12)) ||
                !(m.mean * m.mean <= m.m_full[1] * (1.0 + 1e-12)) || !(m.mean <= 1.0)) {
                std::printf("       ordering violated at sample %d\n", i);
                ok = false;
            }
        }

        // (b) small-theta moments depend on (xi, theta) only through t
        for (int i = 0; i < 20; ++i) {
            const double t = uu(gen) * 0.2;
            const double x1 = 0.05 + uu(gen) * 0.9, x2 = 0.05 + uu(gen) * 0.9;
            const MetaMoments a = lemma4_moments(kTable, x1, t / x1);
            const MetaMoments b = lemma4_moments(kTable, x2, t / x2);
            if (std::abs(a.mean - b.mean) > 1e-13 * a.mean ||
                std::abs(a.m_full[1] - b.m_full[1]) > 1e-13 * a.m_full[1]) {
                std::printf("       t-invariance violated at sample %d\n", i);
                ok = false;
            }
        }

        // (c) outage monotone in theta and xi
        {
            const ScenarioParams p(0.025, 16.0, 3.0, 0.3, 0.02);
            const auto cfg = choose_k(p);
            double prev = -1.0;
            for (double db = -10.0; db <= 30.0; db += 2.5) {
                const double v = outage_discretization(p, cfg, db_to_linear(db)).p_out;
                if (v + 1e-12 < prev) {
                    std::printf("       theta monotonicity violated at %.1f dB\n", db);
                    ok = false;
                }
                prev = v;
            }
            prev = -1.0;
            for (double xi : {0.02, 0.1, 0.3, 0.6, 1.0}) {
                const ScenarioParams px(0.025, 16.0, 3.0, xi, 0.02);
                const double v = outage_discretization(px, cfg, 10.0).p_out;
                if (v + 1e-12 < prev) {
                    std::printf("       xi monotonicity violated at xi=%.2f\n", xi);
                    ok = false;
                }
                prev = v;
            }
        }

        // (d) Beta fit round-trip identities
        for (int i = 0; i < 100; ++i) {
            const double m1 = uu(gen);
            const double var = uu(gen) * m1 * (1.0 - m1);
            const BetaFit f = fit_beta(make_meta_moments(1.0, {m1, var + m1 * m1}));
            const double mean_rt = f.alpha / (f.alpha + f.beta);
            const double var_rt = f.alpha * f.beta /
                                  ((f.alpha + f.beta) * (f.alpha + f.beta) *
                                   (f.alpha + f.beta + 1.0));
            if (std::abs(mean_rt - m1) > 1e-10 || std::abs(var_rt - var) > 1e-10) {
                std::printf("       beta round trip violated at sample %d\n", i);
                ok = false;
            }
        }

        // (e) sampler hardcore gap and excess-law checks
        {
            const LaneSnapshot snap = sample_hardcore(kTable, 4.2e6, 8080);
            std::vector<double> excess;
            excess.push_back(snap.positions.front() - kTable.c);
            for (std::size_t i = 1; i < snap.positions.size(); ++i) {
                const double gap = snap.positions[i] - snap.positions[i - 1];
                if (gap < kTable.c) {
                    std::printf("       hardcore gap below c\n");
                    ok = false;
                    break;
                }
                excess.push_back(gap - kTable.c);
            }
            std::sort(excess.begin(), excess.end());
            const double mu = kTable.mu();
            const double d = oracle::ks_statistic(
                excess, [&](double x) { return 1.0 - std::exp(-mu * x); });
            if (d >= oracle::ks_critical_1pct(excess.size())) {
                std::printf("       KS statistic %.4f above the 1%% critical value\n", d);
                ok = false;
            }
        }
        return ok;
    });

    criterion(8, "closed forms match their integral definitions", [] {
        bool ok = true;
        std::mt19937_64 gen(424243);
        std::uniform_real_distribution<double> ul(0.005, 0.03), uc(0.0, 0.8), ue(2.3, 5.0),
            ux(0.02, 1.0), ut(-10.0, 30.0);

        // exponential-lane and guarded-PPP closed forms on 50 random scenarios
        for (int i = 0; i < 50; ++i) {
            const double lambda = ul(gen);
            const ScenarioParams p(lambda, uc(gen) * 0.5 / lambda, ue(gen), ux(gen), 0.02);
            const double theta = db_to_linear(ut(gen));

            auto far = [&](double r, double from) {
                const double s = theta * std::pow(r, p.eta);
                return oracle::integrate_to_inf(
                    [&](double x) { return s / (s + std::pow(x, p.eta)); }, from, 1e-12);
            };
            const double m2quad = 1.0 - oracle::integrate_to_inf(
                [&](double r) {
                    return std::exp(-p.lambda * p.xi * far(r, r)) * p.lambda *
                           std::exp(-p.lambda * r);
                },
                0.0, 1e-11);
            if (std::abs(outage_m2(p, theta).p_out - m2quad) > 1e-8) {
                std::printf("       M2 mismatch %.2e at sample %d\n",
                            std::abs(outage_m2(p, theta).p_out - m2quad), i);
                ok = false;
            }

            const double mu = p.mu();
            const double m4quad = 1.0 - oracle::integrate_to_inf(
                [&](double r) {
                    return std::exp(-p.lambda * p.xi * far(r, r)) * mu *
                           std::exp(-mu * (r - p.c));
                },
                p.c, 1e-11);
            if (std::abs(outage_m4(p, theta).p_out - m4quad) > 1e-8) {
                std::printf("       M4 mismatch %.2e at sample %d\n",
                            std::abs(outage_m4(p, theta).p_out - m4quad), i);
                ok = false;
            }
        }

        // near/far moment kernels vs their integral first lines, b in {1,2,3}
        const ScenarioParams p(0.025, 16.0, 3.0, 0.5, 0.02);
        const auto cfg = choose_k(p);
        for (int i = 0; i < 10; ++i) {
            const double theta = db_to_linear(ut(gen));
            const double d = p.c + i * 13.7;
            const double s = theta * std::pow(d, p.eta);
            for (int b = 1; b <= 3; ++b) {
                double near_quad = 1.0;
                for (int k = 1; k < cfg.K; ++k) {
                    const double mean =
                        oracle::integrate(
                            [&](double x) {
                                const double w =
                                    p.xi * s / (s + std::pow(x + d + p.c * k, p.eta));
                                return std::pow(1.0 - w, b);
                            },
                            0.0, p.c, 1e-13) /
                        p.c;
                    near_quad *= 1.0 - cfg.p[k - 1] + cfg.p[k - 1] * mean;
                }
                if (std::abs(meta_moment_near(p, cfg, theta, d, b) - near_quad) > 1e-8) {
                    std::printf("       near-field mismatch at b=%d\n", b);
                    ok = false;
                }
                const double far_quad = std::exp(
                    -p.lambda *
                    oracle::integrate_to_inf(
                        [&](double x) {
                            const double w = p.xi * s / (s + std::pow(x, p.eta));
                            return 1.0 - std::pow(1.0 - w, b);
                        },
                        cfg.R + d, 1e-13));
                if (std::abs(meta_moment_far(p, cfg.R, theta, d, b) - far_quad) > 1e-8) {
                    std::printf("       far-field mismatch at b=%d\n", b);
                    ok = false;
                }
            }
        }
        return ok;
    });

    criterion(9, "synthetic-trace fit self-consistency (full campaigns out of scope)", [] {
        const ScenarioParams truth(0.0205, 14.82, 3.0, 0.5, 0.02);
        const LaneSnapshot lane = sample_hardcore(truth, 1e4 / truth.lambda, 314159);
        TraceSnapshot snap;
        LaneSnapshot ls;
        ls.positions = lane.positions;
        ls.origin_kind = OriginKind::reference_receiver;
        snap.lanes.emplace(0, std::move(ls));
        snap.road_length = lane.positions.back();
        const HeadwayFit fit = fit_headways(snap, 0);
        bool ok = std::abs(fit.lambda_hat / truth.lambda - 1.0) <= 0.02;
        if (!ok) std::printf("       lambda_hat off by %.3f%%\n",
                             100.0 * std::abs(fit.lambda_hat / truth.lambda - 1.0));
        if (std::abs(fit.c_hat / truth.c - 1.0) > 0.05) {
            std::printf("       c_hat off by %.3f%%\n",
                        100.0 * std::abs(fit.c_hat / truth.c - 1.0));
            ok = false;
        }
        std::printf(
            "       note: the 1e6-run and 1e4x1e4 campaigns and the real motorway\n"
            "       trace fits are not reproduced here; desk-scale equivalents are\n"
            "       covered by criteria 2, 5 and 7.\n");
        return ok;
    });

    std::printf("%d of 9 criteria passed\n", 9 - failures);
    return failures;
}
