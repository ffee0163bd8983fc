"""Smoke tests of the python bindings against known values."""

import math

import pytest

import hcsir


@pytest.fixture
def table_params():
    return hcsir.ScenarioParams(0.025, 16.0, 3.0, 0.01, 0.02)


def test_params_validation():
    with pytest.raises(ValueError):
        hcsir.ScenarioParams(0.07, 16.0, 3.0, 0.5)
    p = hcsir.ScenarioParams(0.025, 16.0, 3.0, 0.5)
    assert p.mu() == pytest.approx(0.025 / 0.6)


def test_specfun():
    assert hcsir.hyp2f1(1.0, 1.0, 2.0, -1.0).value == pytest.approx(math.log(2.0), abs=1e-12)
    assert hcsir.upper_inc_gamma(1.0, 2.0).value == pytest.approx(math.exp(-2.0), abs=1e-12)
    assert hcsir.log_beta(2.0, 3.0) == pytest.approx(math.log(1.0 / 12.0), abs=1e-12)
    with pytest.raises(ValueError):
        hcsir.hyp2f1(1.0, 1.0, 2.0, 1.5)


def test_rmin_and_config(table_params):
    assert hcsir.rmin(table_params) == pytest.approx(500.313, abs=0.01)
    cfg = hcsir.choose_k(table_params)
    assert cfg.K == 32
    assert cfg.R == pytest.approx(512.0)
    assert len(cfg.p) == 31


def test_moment_table(table_params):
    cfg = hcsir.choose_k(table_params)
    m = hcsir.meta_moments(table_params, cfg, 1000.0, 2)
    assert m.mean == pytest.approx(0.89968, abs=5e-4)
    assert m.m_full[1] == pytest.approx(0.81293, abs=5e-4)
    assert m.cov == pytest.approx(0.06580, abs=5e-4)
    m2 = hcsir.meta_moments_m2(table_params, 1000.0, 2)
    assert m2.cov == pytest.approx(0.10322, abs=5e-4)


def test_outage_models(table_params):
    assert hcsir.outage_m1(table_params, 1000.0).p_out == pytest.approx(0.0995, abs=5e-4)
    assert hcsir.outage_m2(table_params, 1000.0).p_out == pytest.approx(0.09985, abs=5e-4)


def test_beta_fit_roundtrip(table_params):
    cfg = hcsir.choose_k(table_params)
    m = hcsir.meta_moments(table_params, cfg, 1000.0, 2)
    fit = hcsir.fit_beta(m)
    assert fit.alpha / (fit.alpha + fit.beta) == pytest.approx(m.mean, abs=1e-10)
    ccdf = hcsir.meta_ccdf(fit, [0.0, 0.5, 1.0])
    assert ccdf[0] == 1.0
    assert ccdf[2] == 0.0
    with pytest.raises(ValueError):
        hcsir.fit_beta(hcsir.make_meta_moments(1.0, [0.9, 0.9 * 0.9 + 0.1]))


def test_asymptotics(table_params):
    lim = hcsir.lemma3_limit(table_params, 0.1)
    assert lim.cov == pytest.approx(0.070, abs=1e-3)
    reg = hcsir.AsymptoticRegime(hcsir.Regime.large_theta_T, 0.1)
    assert hcsir.cov_limit(table_params, reg) == pytest.approx(lim.cov, abs=1e-12)


def test_simulation(table_params):
    plan = hcsir.SimulationPlan()
    plan.n_configs = 300
    plan.master_seed = 42
    sim = hcsir.simulate_meta(table_params, plan, [1000.0])
    assert sim.p_out[0] == pytest.approx(1.0 - sim.moments[0].mean, abs=1e-12)
    assert abs(sim.moments[0].mean - 0.898) <= 0.02
    rerun = hcsir.simulate_meta(table_params, plan, [1000.0])
    assert rerun.per_config_success == sim.per_config_success


def test_sampler_determinism(table_params):
    a = hcsir.sample_hardcore(table_params, 25000.0, 7)
    b = hcsir.sample_hardcore(table_params, 25000.0, 7)
    assert a.positions == b.positions
    assert min(a.positions[0], *(y - x for x, y in zip(a.positions, a.positions[1:]))) >= 16.0


def test_trace_fit(tmp_path, table_params):
    lane = hcsir.sample_hardcore(table_params, 2.0e5, 11)
    trace = tmp_path / "lane.csv"
    lines = ["t,lane,pos_m"] + [f"3,0,{x!r}" for x in lane.positions]
    trace.write_text("\n".join(lines) + "\n")
    snap = hcsir.parse_snapshot(str(trace))
    assert snap.timestamp == 3
    fit = hcsir.fit_headways(snap, 0)
    assert fit.lambda_hat == pytest.approx(0.025, rel=0.05)
    assert fit.c_hat == pytest.approx(16.0, rel=0.1)


def test_multilane_geometry():
    g = hcsir.multilane_geometry(math.pi / 20.0, 4.0, 0.02, 4.0)
    assert g.r0 == pytest.approx(50.0, abs=1.0)
    assert g.R_other == pytest.approx(g.r0 * 50.0 ** (1.0 / 3.0), rel=1e-12)
