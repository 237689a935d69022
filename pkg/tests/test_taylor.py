import cmath
import math

import numpy as np
import pytest

from helpers import taylor_test_instance
from pfgm import (
    NoCertificateError,
    WorkCapExceededError,
    all_ones,
    approximate_log_partition,
    build_graph,
    error_bound,
    exact_partition,
    log_derivatives,
    log_multinomial,
    normalized_derivative,
    select_order,
    uniform_weights,
    validate_multiplicities,
)
from pfgm.taylor import MAX_ORDER, extension_count_ratio
from pfgm.zeros import ALPHA

EDGE = build_graph(2, [(0, 1)])
M11 = validate_multiplicities(EDGE, [1, 1])


def w_edge(b12):
    return uniform_weights(EDGE, 2, [[1.0, b12], [b12, 1.0]])


class TestExtensionCountRatio:
    def test_examples(self):
        assert extension_count_ratio(M11, [1, 1], 2) == 0.5
        assert extension_count_ratio(M11, [0, 0], 0) == 1.0
        tri_m = validate_multiplicities(build_graph(3, [(0, 1)]), [2, 1])
        assert extension_count_ratio(tri_m, [1, 0], 1) == pytest.approx(2 / 3)

    def test_is_a_probability(self):
        m = validate_multiplicities(build_graph(5, [(0, 1)]), [2, 2, 1])
        for nu in ([1, 1, 0], [2, 0, 1], [0, 2, 1], [2, 2, 1]):
            r = extension_count_ratio(m, nu, sum(nu))
            assert 0.0 < r <= 1.0

    def test_rejects_bad_usage(self):
        with pytest.raises(ValueError):
            extension_count_ratio(M11, [2, 0], 2)  # nu_1 > mu_1
        with pytest.raises(ValueError):
            extension_count_ratio(M11, [1, 1], 1)  # sum mismatch
        with pytest.raises(ValueError):
            extension_count_ratio(M11, [1], 1)  # k mismatch
        m = validate_multiplicities(build_graph(2, [(0, 1)]), [1, 1])
        with pytest.raises(ValueError):
            extension_count_ratio(m, [1, 1, 1], 3)


class TestNormalizedDerivative:
    def test_single_edge_first_derivative(self):
        c = 0.05 + 0.02j
        assert normalized_derivative(EDGE, M11, w_edge(1 + c), 1) == pytest.approx(c)

    def test_all_ones_gives_zero(self):
        g = build_graph(3, [(0, 1), (1, 2)])
        m = validate_multiplicities(g, [2, 1])
        for j in (1, 2):
            assert normalized_derivative(g, m, all_ones(g, 2), j) == 0.0

    def test_order_past_support_is_exact_zero(self):
        assert normalized_derivative(EDGE, M11, w_edge(1.3), 2) == 0.0

    def test_order_must_be_positive(self):
        with pytest.raises(ValueError):
            normalized_derivative(EDGE, M11, w_edge(1.3), 0)


class TestLogDerivatives:
    def test_empty_and_first_order(self):
        assert log_derivatives([]) == []
        c = 0.3 - 0.7j
        assert log_derivatives([c]) == [c]

    def test_second_order(self):
        h1, h2 = 0.4 + 0.1j, -0.2j
        f = log_derivatives([h1, h2])
        assert f[0] == h1
        assert f[1] == h2 - h1 * h1

    def test_exponential_series_flattens(self):
        a = 0.3 + 0.1j
        f = log_derivatives([a, a**2, a**3, a**4, a**5])
        assert f[0] == pytest.approx(a)
        for fj in f[1:]:
            assert abs(fj) < 1e-15

    def test_single_support_edge_closed_form(self):
        # g(t) = c0 (1 + h1 t) means f_j = (-1)^(j+1) (j-1)! h1^j
        h1 = 0.05 + 0.01j
        f = log_derivatives([h1, 0, 0, 0, 0])
        for j, fj in enumerate(f, start=1):
            want = (-1) ** (j + 1) * math.factorial(j - 1) * h1**j
            assert fj == pytest.approx(want, rel=1e-12)


class TestErrorBound:
    def test_quoted_values(self):
        assert error_bound(3, 1.07, 2) == pytest.approx(12.477, abs=5e-3)
        assert error_bound(1, 2.14, 1) == pytest.approx(0.20495, abs=5e-6)

    def test_monotone_in_order_and_radius(self):
        bounds = [error_bound(4, 1.3, n) for n in range(8)]
        assert all(a > b for a, b in zip(bounds, bounds[1:]))
        radii = [error_bound(4, b, 3) for b in (1.1, 1.5, 2.0, 4.0)]
        assert all(a > b for a, b in zip(radii, radii[1:]))

    def test_edgeless_is_zero(self):
        assert error_bound(0, 1.5, 2) == 0.0
        assert error_bound(0, 0.5, 0) == 0.0

    def test_no_certificate_below_one(self):
        with pytest.raises(NoCertificateError):
            error_bound(2, 1.0, 3)
        with pytest.raises(NoCertificateError):
            error_bound(2, 0.9, 0)

    def test_rejects_negative_arguments(self):
        with pytest.raises(ValueError):
            error_bound(-1, 2.0, 1)
        with pytest.raises(ValueError):
            error_bound(1, 2.0, -1)


class TestSelectOrder:
    def test_quoted_values(self):
        assert select_order(3, 1.07, 0.1) == 37
        assert select_order(1, 2.14, 0.21) == 1

    def test_infinite_epsilon_sentinel(self):
        assert select_order(5, 1.0001, math.inf) == 0
        assert select_order(5, 0.2, math.inf) == 0  # sentinel wins over beta

    def test_edgeless(self):
        assert select_order(0, 5.0, 1e-9) == 0

    def test_no_certificate(self):
        with pytest.raises(NoCertificateError):
            select_order(3, 1.0, 0.1)

    def test_rejects_bad_epsilon(self):
        with pytest.raises(ValueError):
            select_order(3, 2.0, 0.0)
        with pytest.raises(ValueError):
            select_order(3, 2.0, -1.0)

    def test_returns_minimal_order(self):
        for ec, beta, eps in ((3, 1.07, 0.1), (7, 1.3, 0.05), (2, 5.0, 1e-6),
                              (10, 1.01, 0.5)):
            n = select_order(ec, beta, eps)
            assert error_bound(ec, beta, n) <= eps
            if n > 0:
                assert error_bound(ec, beta, n - 1) > eps


class TestApproximateLogPartition:
    def test_single_edge_order_one(self):
        res = approximate_log_partition(EDGE, M11, w_edge(1.05), order=1)
        assert res.log_value == pytest.approx(math.log(2) + 0.05, abs=1e-13)
        assert res.order == 1
        assert res.support_count == 1
        assert res.log_at_ones == pytest.approx(math.log(2), rel=1e-15)
        assert res.beta == pytest.approx(ALPHA / 0.05, rel=1e-12)
        truth = math.log(2) + math.log(1.05)
        err = abs(res.log_value - truth)
        assert err == pytest.approx(0.00121, abs=1e-5)
        assert err <= res.error_bound <= 0.20495

    def test_all_ones_is_exact_at_any_order(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        m = validate_multiplicities(g, [2, 2])
        for kwargs in ({"order": 0}, {"order": 3}, {"epsilon": 1e-6}):
            res = approximate_log_partition(g, m, all_ones(g, 2), **kwargs)
            assert res.log_value == complex(log_multinomial([2, 2]))
            assert res.error_bound == 0.0
            assert res.beta == math.inf
            assert res.support_count == 0

    def test_epsilon_mode_meets_target(self):
        rng = np.random.default_rng(41)
        g, m, w = taylor_test_instance(rng)
        res = approximate_log_partition(g, m, w, epsilon=0.05)
        assert res.error_bound <= 0.05
        assert res.order == select_order(res.support_count, res.beta, 0.05)
        truth = cmath.log(exact_partition(g, m, w))
        assert abs(res.log_value - truth) <= res.error_bound

    def test_epsilon_mode_needs_certificate(self):
        with pytest.raises(NoCertificateError):
            approximate_log_partition(EDGE, M11, w_edge(1.5), epsilon=0.1)

    def test_fixed_order_runs_without_certificate(self):
        res = approximate_log_partition(EDGE, M11, w_edge(1.5), order=3)
        assert res.error_bound == math.inf
        assert res.beta < 1.0
        # the series itself is still correct: ln 2 + sum of ln(1+0.5) terms
        truth = cmath.log(exact_partition(EDGE, M11, w_edge(1.5)))
        series = math.log(2) + 0.5 - 0.5**2 / 2 + 0.5**3 / 3
        assert res.log_value == pytest.approx(series, rel=1e-12)
        assert abs(res.log_value - truth) < 0.05

    def test_mode_selection_is_exclusive(self):
        with pytest.raises(ValueError):
            approximate_log_partition(EDGE, M11, w_edge(1.05))
        with pytest.raises(ValueError):
            approximate_log_partition(EDGE, M11, w_edge(1.05), order=1, epsilon=0.1)
        with pytest.raises(ValueError):
            approximate_log_partition(EDGE, M11, w_edge(1.05), order=-1)

    def test_work_cap_refusal_reports_achievable(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)])
        m = validate_multiplicities(g, [2, 2])
        w = uniform_weights(g, 2, [[1.02, 0.98], [0.98, 1.02]])
        with pytest.raises(WorkCapExceededError) as ei:
            approximate_log_partition(g, m, w, order=4, work_budget=200)
        # cumulative subset-map cost: order 1 is 6*4 = 24, order 2 adds 15*16
        assert ei.value.achievable_order == 1

    def test_order_hard_limit(self):
        with pytest.raises(WorkCapExceededError):
            approximate_log_partition(EDGE, M11, w_edge(1.01), order=MAX_ORDER + 1)

    def test_truncation_error_within_bound_small_orders(self):
        rng = np.random.default_rng(43)
        for _ in range(3):
            g, m, w = taylor_test_instance(rng)
            truth = cmath.log(exact_partition(g, m, w))
            for n in range(5):
                res = approximate_log_partition(g, m, w, order=n)
                assert abs(res.log_value - truth) <= res.error_bound

    def test_color_relabeling_invariance(self):
        from pfgm import EdgeWeights
        rng = np.random.default_rng(47)
        g, m, w = taylor_test_instance(rng)
        res = approximate_log_partition(g, m, w, order=3)
        perm = list(reversed(range(m.k)))
        m_p = validate_multiplicities(g, [m.counts[perm[i]] for i in range(m.k)])
        w_p = EdgeWeights(m.k, np.ascontiguousarray(w.blocks[:, perm][:, :, perm]))
        res_p = approximate_log_partition(g, m_p, w_p, order=3)
        assert res_p.log_value == pytest.approx(res.log_value, rel=1e-12)
        assert res_p.error_bound == res.error_bound
