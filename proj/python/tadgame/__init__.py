"""Analytical LQ target-attacker-defender game on elliptic reference orbits."""

from ._tadgame import (
    AnomalyError,
    ConfigError,
    Ellipsoid,
    GameConfig,
    InitialStateError,
    NumericalBlowup,
    Outcome,
    ReferenceOrbit,
    SingularBlock,
    SingularFactor,
    TadError,
    Trajectory,
    WeightSet,
    WinVerdict,
    attacker_wins,
    c_hat,
    classify_outcome,
    d_matrix,
    eccentric_to_true,
    ellipsoid_at,
    format_scenario,
    g1,
    g2,
    load_scenario,
    parse_scenario,
    phi,
    phi_inv,
    propagate_analytical,
    reference_config,
    riccati_p,
    simulate_numerical,
    true_to_eccentric,
    winning_set_membership,
)

__all__ = [name for name in dir() if not name.startswith("_")]
