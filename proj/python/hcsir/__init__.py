"""SIR outage and meta-distribution toolkit for 1-D hardcore vehicular lanes.

The heavy lifting lives in the C++ extension ``hcsir._core``; this package
re-exports its public surface.
"""

from ._core import (  # noqa: F401
    AnalyticLane,
    AsymptoticRegime,
    BetaFit,
    BetaKind,
    ConvergenceError,
    DiscretizationConfig,
    DomainError,
    EmpiricalCdf,
    HeadwayFit,
    InfeasibleMoments,
    LaneSnapshot,
    MetaMoments,
    Model,
    MultilaneGeometry,
    NoConvergence,
    OccupancyMode,
    OriginKind,
    OtherLaneSpec,
    OutageResult,
    QuadratureError,
    Regime,
    ScenarioParams,
    SimSource,
    SimulationPlan,
    SimulationResult,
    SpecFunResult,
    TraceFormat,
    TraceSnapshot,
    choose_k,
    cov_limit,
    db_to_linear,
    empirical_ccdf,
    fit_beta,
    fit_generalized_beta,
    fit_headways,
    gen_beta_moment,
    hyp2f1,
    interval_occupancy,
    interval_occupancy_approx,
    lemma3_limit,
    lemma3_moments,
    lemma4_moments,
    linear_to_db,
    log_beta,
    make_config,
    make_meta_moments,
    mean_far_interference,
    mean_interference_lower_bound,
    meta_ccdf,
    meta_moment_far,
    meta_moment_near,
    meta_moments,
    meta_moments_m1,
    meta_moments_m2,
    meta_moments_multilane,
    multilane_geometry,
    outage_discretization,
    outage_m1,
    outage_m2,
    outage_m3,
    outage_m4,
    parse_snapshot,
    parse_snapshot_at,
    pcf,
    reg_inc_beta,
    rmin,
    sample_hardcore,
    sample_link_distance,
    sample_ppp,
    simulate_meta,
    simulate_multilane,
    simulate_outage,
    upper_inc_gamma,
)

__version__ = "0.1.0"
