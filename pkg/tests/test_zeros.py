import math

import numpy as np
import pytest

from helpers import generic_weights, random_graph
from pfgm import (
    all_ones,
    build_graph,
    compute_beta,
    constants,
    interpolate,
    polydisc_scan,
    root_margin,
    uniform_weights,
    validate_multiplicities,
)
from pfgm.errors import InstanceTooLargeError, PfgmError
from pfgm.zeros import ALPHA, ALPHA_ROUNDED

EDGE = build_graph(2, [(0, 1)])
TRI = build_graph(3, [(0, 1), (1, 2), (0, 2)])


class TestConstants:
    def test_published_values(self):
        c = constants()
        assert c.alpha == ALPHA == 0.1074337498
        assert c.alpha_rounded == ALPHA_ROUNDED == 0.107
        assert c.gamma_default == 0.1
        assert c.epsilon_proof == 0.76
        assert c.theta == pytest.approx(1.101463960, abs=1e-9)
        assert c.tau == pytest.approx(0.8521416971, abs=1e-9)

    def test_alpha_formula(self):
        c = constants()
        assert abs(c.alpha - c.xi_cap * c.tau / (4 + c.xi_cap * c.tau)) <= 1e-9

    def test_theta_fixed_point(self):
        c = constants()
        assert abs(c.theta - math.asin(c.epsilon_proof / math.cos(c.theta / 2))) <= 1e-8

    def test_tau_definition(self):
        c = constants()
        assert abs(c.tau - math.cos(c.theta / 2)) <= 1e-9

    def test_as_dict_round_trip(self):
        d = constants().as_dict()
        assert d["alpha"] == ALPHA
        assert set(d) == {"alpha", "alpha_rounded", "gamma_default",
                          "epsilon_proof", "theta", "tau", "xi_cap"}


class TestComputeBeta:
    def test_quoted_ratio(self):
        # deviation 0.1/max_degree gives 1.07 at the rounded constant
        w = uniform_weights(TRI, 2, [[1.0, 1.05], [1.05, 1.0]])
        assert compute_beta(TRI, w, alpha=ALPHA_ROUNDED) == pytest.approx(1.07)
        assert compute_beta(TRI, w) == pytest.approx(ALPHA / 0.1, rel=1e-12)

    def test_degree_one(self):
        w = uniform_weights(EDGE, 2, [[1.0, 1.05], [1.05, 1.0]])
        assert compute_beta(EDGE, w, alpha=ALPHA_ROUNDED) == pytest.approx(2.14)

    def test_all_ones_unbounded(self):
        assert compute_beta(TRI, all_ones(TRI, 2)) == math.inf

    def test_scales_inversely_with_deviation(self):
        rng = np.random.default_rng(3)
        g = random_graph(rng, min_v=4, max_v=6)
        w = generic_weights(rng, g, 2, 0.3)
        base = compute_beta(g, w)
        for t in (0.1, 0.5, 1.0):
            assert compute_beta(g, interpolate(w, t)) == pytest.approx(
                base / t, rel=1e-12)


class TestRootMargin:
    def test_single_edge_closed_form(self):
        w = uniform_weights(EDGE, 2, [[1.0, 1.05], [1.05, 1.0]])
        m = validate_multiplicities(EDGE, [1, 1])
        # g(z) = 2(1 + 0.05 z) vanishes at z = -20
        assert root_margin(EDGE, m, w) == pytest.approx(20.0, rel=1e-9)

    def test_all_ones_unbounded(self):
        m = validate_multiplicities(TRI, [1, 1, 1])
        assert root_margin(TRI, m, all_ones(TRI, 3)) == math.inf

    def test_margin_at_least_beta_inside_region(self):
        rng = np.random.default_rng(8)
        for _ in range(5):
            g = random_graph(rng, min_v=4, max_v=6)
            k = 2
            n = g.vertex_count
            m = validate_multiplicities(g, [n // 2, n - n // 2])
            from pfgm.graph import max_degree
            w = generic_weights(rng, g, k, 0.9 * ALPHA / max_degree(g))
            assert root_margin(g, m, w) >= compute_beta(g, w) - 1e-6

    def test_respects_cap(self):
        g = build_graph(8, [(i, i + 1) for i in range(7)])
        m = validate_multiplicities(g, [4, 4])
        w = uniform_weights(g, 2, [[1.0, 1.1], [1.1, 1.0]])
        with pytest.raises(InstanceTooLargeError):
            root_margin(g, m, w, cap=10)


class TestPolydiscScan:
    def test_zero_radius_samples_all_ones(self):
        m = validate_multiplicities(TRI, [1, 1, 1])
        report = polydisc_scan(TRI, m, 0.0, 5, seed=42)
        assert report.trials == 5
        assert report.delta == 0.0
        assert report.min_abs_ratio == 1.0
        assert report.zero_count == 0
        assert report.seed == 42

    def test_deterministic_replay(self):
        m = validate_multiplicities(TRI, [2, 1])
        a = polydisc_scan(TRI, m, 0.05, 20, seed=7)
        b = polydisc_scan(TRI, m, 0.05, 20, seed=7)
        assert a == b
        c = polydisc_scan(TRI, m, 0.05, 20, seed=8)
        assert c.min_abs_ratio != a.min_abs_ratio

    def test_no_zeros_inside_certified_region(self):
        from pfgm.graph import max_degree
        m = validate_multiplicities(TRI, [1, 1, 1])
        report = polydisc_scan(TRI, m, ALPHA / max_degree(TRI), 100, seed=11)
        assert report.zero_count == 0
        assert report.min_abs_ratio > 0.0

    def test_large_radius_report_is_well_formed(self):
        # far outside the certified region: zeros are possible, not an error
        star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
        m = validate_multiplicities(star, [2, 2])
        report = polydisc_scan(star, m, 0.9, 50, seed=5)
        assert 0 <= report.zero_count <= 50
        assert report.min_abs_ratio >= 0.0

    def test_as_dict_field_order(self):
        m = validate_multiplicities(TRI, [2, 1])
        d = polydisc_scan(TRI, m, 0.0, 1, seed=1).as_dict()
        assert list(d) == ["trials", "delta", "min_abs_ratio", "zero_count", "seed"]

    def test_rejects_bad_arguments(self):
        m = validate_multiplicities(TRI, [2, 1])
        with pytest.raises(ValueError):
            polydisc_scan(TRI, m, -0.1, 5, seed=1)
        with pytest.raises(ValueError):
            polydisc_scan(TRI, m, 0.1, 0, seed=1)
        with pytest.raises(PfgmError):
            polydisc_scan(TRI, validate_multiplicities(EDGE, [1, 1]), 0.1, 5, seed=1)
