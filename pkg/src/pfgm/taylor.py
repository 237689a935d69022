"""Certified series approximation of the log partition value.

Write g(t) for the partition sum at the interpolated weights 1 + t(B - J)
and f = ln g. The engine computes the derivatives of f at 0 through the
normalized derivatives h_j = g^(j)(0)/g(0) (an enumeration over subsets of
support edges), solves the triangular system relating h to f, and returns
the degree-n Taylor value of f at t = 1. When the instance deviation is
small enough that g is zero-free on a disc of radius beta > 1, the
truncation error is at most |E'|/((n+1) beta^n (beta-1)) with |E'| the
support edge count, and that bound is attached to the result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .errors import NoCertificateError, WorkCapExceededError
from .exact import _check_instance, log_multinomial
from .graph import Graph, MultiplicityVector, max_degree
from .weights import EdgeWeights, deviation, support_edges
from .zeros import ALPHA, compute_beta

DEFAULT_WORK_BUDGET = 10**9

# Above this order the triangular solve itself (exact binomials included)
# stops being desk-scale, independently of the enumeration budget.
MAX_ORDER = 10_000


def extension_count_ratio(m: MultiplicityVector, nu: Sequence[int], s: int) -> float:
    """Fraction of constrained maps extending a partial assignment.

    nu[i] counts how often a partial map on s vertices uses color i; the
    returned value is prod_i falling_factorial(mu_i, nu_i) divided by
    falling_factorial(|V|, s), which is the number of full maps extending
    the partial one divided by the total number of maps. Always in [0, 1].
    """
    if len(nu) != m.k:
        raise ValueError(f"nu has {len(nu)} entries, expected k = {m.k}")
    if sum(nu) != s:
        raise ValueError(f"nu sums to {sum(nu)}, expected s = {s}")
    if s > m.total:
        raise ValueError(f"s = {s} exceeds the vertex count {m.total}")
    numerator = 1
    for mu_i, nu_i in zip(m.counts, nu):
        if nu_i < 0 or nu_i > mu_i:
            raise ValueError(f"usage {nu_i} outside [0, {mu_i}]")
        numerator *= math.perm(mu_i, nu_i)
    return numerator / math.perm(m.total, s)


def normalized_derivative(g: Graph, m: MultiplicityVector, w: EdgeWeights,
                          j: int) -> complex:
    """h_j = g^(j)(0)/g(0) for g(t) = partition sum at 1 + t(w - 1).

    j! times the sum over unordered j-subsets S of support edges and over
    color maps on the endpoints of S (respecting the multiplicities) of the
    extension-count ratio times prod_{e in S} (b_e - 1). Exactly 0 when j
    exceeds the support size, since g has degree at most that.
    """
    if j < 1:
        raise ValueError(f"derivative order must be >= 1, got {j}")
    _check_instance(g, m, w)
    sup = support_edges(w)
    if j > len(sup):
        return complex(0.0)
    sub_u = np.asarray([g.edges[e][0] for e in sup], dtype=np.int64)
    sub_v = np.asarray([g.edges[e][1] for e in sup], dtype=np.int64)
    bm1 = np.ascontiguousarray(w.blocks[sup] - 1.0)
    mu = np.asarray(m.counts, dtype=np.int64)
    raw = kernels.derivative_subset_sum(j, g.vertex_count, w.k,
                                        sub_u, sub_v, bm1, mu)
    return float(math.factorial(j)) * complex(raw)


def log_derivatives(h: Sequence[complex]) -> list[complex]:
    """Derivatives f_1..f_n of f = ln(g/g(0)) from h_1..h_n.

    Inverts h_j = sum_{i=0}^{j-1} C(j-1, i) h_i f_{j-i} (with h_0 = 1) by
    forward substitution; binomials come from the Pascal recurrence in
    exact integers.
    """
    h = [complex(x) for x in h]
    f: list[complex] = []
    row = [1]  # C(j-1, .) at the start of iteration j
    for j in range(1, len(h) + 1):
        val = h[j - 1]
        for i in range(1, j):
            val -= row[i] * h[i - 1] * f[j - i - 1]
        f.append(val)
        row = [1] + [row[t] + row[t + 1] for t in range(len(row) - 1)] + [1]
    return f


def error_bound(edge_count: int, beta: float, n: int) -> float:
    """Truncation bound edge_count/((n+1) beta^n (beta-1)) of the degree-n
    Taylor value, valid when g is zero-free for |t| <= beta.

    edge_count is the support edge count |E'|. beta = inf gives 0.0; an
    edgeless pencil is constant so the bound is 0 regardless of beta.
    """
    if edge_count < 0:
        raise ValueError(f"edge_count must be >= 0, got {edge_count}")
    if n < 0:
        raise ValueError(f"order must be >= 0, got {n}")
    if edge_count == 0:
        return 0.0
    if beta <= 1.0:
        raise NoCertificateError(
            f"zero-free radius beta = {beta} does not exceed 1; no error bound exists")
    return edge_count / ((n + 1) * beta**n * (beta - 1.0))


def select_order(edge_count: int, beta: float, epsilon: float) -> int:
    """Smallest n >= 0 with error_bound(edge_count, beta, n) <= epsilon.

    epsilon = math.inf is an explicit "no accuracy demanded" sentinel and
    returns 0. Raises NoCertificateError when beta <= 1 (no n works).
    """
    if not epsilon > 0:
        raise ValueError(f"epsilon must be > 0, got {epsilon}")
    if math.isinf(epsilon):
        return 0
    if edge_count == 0:
        return 0
    if beta <= 1.0:
        raise NoCertificateError(
            f"zero-free radius beta = {beta} does not exceed 1; no order suffices")
    if error_bound(edge_count, beta, 0) <= epsilon:
        return 0
    hi = 1
    while error_bound(edge_count, beta, hi) > epsilon:
        hi *= 2
    lo = hi // 2 if hi > 1 else 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if error_bound(edge_count, beta, mid) <= epsilon:
            hi = mid
        else:
            lo = mid
    return hi


@dataclass(frozen=True)
class ApproximationResult:
    """Degree-n series value of the log partition sum with its certificate.

    log_value uses the branch that is real at the all-ones array.
    error_bound is math.inf when no certificate exists (beta <= 1 in
    fixed-order mode); beta is math.inf when the deviation is 0.
    """

    log_value: complex
    order: int
    error_bound: float
    beta: float
    log_at_ones: float
    support_count: int


def _enumeration_cost(support_count: int, k: int, upto: int) -> int:
    total = 0
    for j in range(1, upto + 1):
        total += math.comb(support_count, j) * k ** (2 * j)
    return total


def _check_work(support_count: int, k: int, n: int, budget: float) -> None:
    n_enum = min(n, support_count)
    if n > MAX_ORDER:
        raise WorkCapExceededError(
            f"order {n} exceeds the hard order limit {MAX_ORDER}", MAX_ORDER)
    if _enumeration_cost(support_count, k, n_enum) <= budget:
        return
    achievable = 0
    while (achievable < n_enum
           and _enumeration_cost(support_count, k, achievable + 1) <= budget):
        achievable += 1
    raise WorkCapExceededError(
        f"order {n} needs ~{_enumeration_cost(support_count, k, n_enum):.3g} "
        f"subset-map operations, over the work budget {budget:.3g}; "
        f"achievable order is {achievable}", achievable)


def approximate_log_partition(g: Graph, m: MultiplicityVector, w: EdgeWeights,
                              *, order: int | None = None,
                              epsilon: float | None = None,
                              work_budget: float = DEFAULT_WORK_BUDGET) -> ApproximationResult:
    """Series approximation of ln of the constrained partition sum.

    Exactly one of order (fixed degree) or epsilon (target additive error
    on the log; the degree is then chosen by select_order) must be given.
    Target-epsilon mode requires deviation(w) < alpha/max_degree(g)
    strictly, so a certificate exists; fixed-order mode always runs but
    reports error_bound = math.inf when it cannot certify. Refuses with
    WorkCapExceededError when the subset enumeration would exceed
    work_budget, reporting the achievable order.
    """
    _check_instance(g, m, w)
    if (order is None) == (epsilon is None):
        raise ValueError("exactly one of order= and epsilon= must be given")
    sup = support_edges(w)
    support_count = len(sup)
    beta = compute_beta(g, w)
    if epsilon is not None:
        if support_count > 0 and beta <= 1.0:
            raise NoCertificateError(
                f"deviation {deviation(w)} is not below alpha/max_degree = "
                f"{ALPHA / max_degree(g)}; no certified approximation exists")
        n = select_order(support_count, beta, epsilon)
    else:
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        n = order
    _check_work(support_count, w.k, n, work_budget)

    h: list[complex] = []
    if min(n, support_count) >= 1:
        sub_u = np.asarray([g.edges[e][0] for e in sup], dtype=np.int64)
        sub_v = np.asarray([g.edges[e][1] for e in sup], dtype=np.int64)
        bm1 = np.ascontiguousarray(w.blocks[sup] - 1.0)
        mu = np.asarray(m.counts, dtype=np.int64)
        for j in range(1, min(n, support_count) + 1):
            raw = kernels.derivative_subset_sum(j, g.vertex_count, w.k,
                                                sub_u, sub_v, bm1, mu)
            h.append(float(math.factorial(j)) * complex(raw))
    h.extend([complex(0.0)] * (n - len(h)))
    f = log_derivatives(h)

    log_at_ones = log_multinomial(m.counts)
    log_value = complex(log_at_ones)
    for j in range(1, n + 1):
        log_value += f[j - 1] / float(math.factorial(j))

    if support_count == 0:
        err = 0.0
    elif beta <= 1.0:
        err = math.inf
    else:
        err = error_bound(support_count, beta, n)
    return ApproximationResult(log_value, n, err, beta, log_at_ones, support_count)
