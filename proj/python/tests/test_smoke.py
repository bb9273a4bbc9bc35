import math

import numpy as np
import pytest

import tadgame


@pytest.fixture(scope="module")
def config():
    return tadgame.reference_config()


@pytest.fixture(scope="module")
def analytical(config):
    return tadgame.propagate_analytical(config)


def test_reference_config(config):
    assert config.steps() == 1000
    assert config.orbit.e == pytest.approx(0.1)
    assert config.hovering()
    assert np.allclose(config.xa0, [0, 20, 0, 0, 0, 0])


def test_phi_inverse():
    orbit = tadgame.ReferenceOrbit(398603.0, 10000.0, 0.3)
    for f in np.linspace(-2 * math.pi, 4 * math.pi, 13):
        prod = tadgame.phi(orbit, f) @ tadgame.phi_inv(orbit, f)
        assert np.abs(prod - np.eye(6)).max() < 1e-10


def test_anomaly_round_trip():
    orbit = tadgame.ReferenceOrbit(398603.0, 10000.0, 0.5)
    for f in (-7.0, 0.3, 3.0, 11.0):
        E = tadgame.true_to_eccentric(orbit, f)
        assert tadgame.eccentric_to_true(orbit, E) == pytest.approx(f, abs=1e-12)


def test_riccati_terminal(config):
    p = tadgame.riccati_p(config.orbit, config.weights, config.ff, config.ff)
    assert np.array_equal(p, config.weights.terminal())


def test_analytical_terminal_values(analytical):
    dist = analytical.distances
    assert len(analytical) == 1001
    assert dist.shape == (1001, 2)
    assert analytical.states.shape == (1001, 12)
    assert analytical.controls.shape == (1001, 6)
    assert dist[-1, 0] == pytest.approx(3.2018e-3, rel=1e-3)
    assert dist[-1, 1] == pytest.approx(0.50914, rel=1e-3)
    assert analytical.cost == pytest.approx(-2.4361e-3, rel=1e-3)


def test_numerical_agrees(config, analytical):
    num = tadgame.simulate_numerical(config)
    assert num.distances[-1, 0] == pytest.approx(analytical.distances[-1, 0], rel=3e-4)
    assert num.cost == pytest.approx(analytical.cost, rel=1e-4)


def test_outcome_and_verdict(config, analytical):
    outcome = tadgame.classify_outcome(config, analytical)
    assert outcome.tag == "attacker_wins"
    verdict = tadgame.attacker_wins(config)
    assert verdict.attacker_wins
    assert verdict.index == 984
    assert outcome.f_capture == pytest.approx(verdict.f_a)


def test_ellipsoid_matches_g(config):
    f = config.anomaly(984)
    rd0 = np.array([-2.0, 0.0, 0.0])
    el = tadgame.ellipsoid_at(config, f, "S1")
    assert el.G.shape == (3, 3)
    g = tadgame.g1(config, f, rd0)
    assert el.contains(rd0) == (g <= 0)
    with pytest.raises(ValueError):
        tadgame.ellipsoid_at(config, f, "S3")


def test_scenario_round_trip(config):
    text = tadgame.format_scenario(config)
    back = tadgame.parse_scenario(text)
    assert back.h_f == config.h_f
    assert np.array_equal(back.xda0, config.xda0)


def test_errors_map_to_exceptions(config):
    with pytest.raises(tadgame.ConfigError):
        tadgame.ReferenceOrbit(398603.0, 10000.0, 0.9)
    with pytest.raises(tadgame.ConfigError):
        tadgame.parse_scenario("mu = 1\n")
    with pytest.raises(tadgame.InitialStateError):
        tadgame.winning_set_membership(config, np.array([0.0, 20.001, 0.0]))
    singular = tadgame.reference_config()
    singular.weights = tadgame.WeightSet(100, 100, 1, 1, 0, 0)
    with pytest.raises(tadgame.AnomalyError):
        tadgame.propagate_analytical(singular)
    assert issubclass(tadgame.SingularFactor, tadgame.TadError)
