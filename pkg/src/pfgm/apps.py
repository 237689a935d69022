"""Reductions of classical counting problems to constrained partition sums.

Each adapter builds a (graph, multiplicities, weights) instance whose
partition sum equals the target quantity up to an explicit normalizer, then
evaluates it exactly (enumeration) or approximately (series engine with a
certified log error). Hard 0/1 weight variants count structures exactly;
soft variants perturb the weights by gamma/max_degree so the zero-free
certificate applies, at the price of counting with structure-dependent
weights in (0, 1] instead of 0/1.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import InvalidWeightsError, NoCertificateError
from .exact import DEFAULT_ENUMERATION_CAP, exact_partition
from .graph import (
    Graph,
    MultiplicityVector,
    build_graph,
    max_degree,
    validate_multiplicities,
)
from .taylor import DEFAULT_WORK_BUDGET, approximate_log_partition
from .weights import EdgeWeights, uniform_weights
from .zeros import ALPHA, GAMMA_DEFAULT


@dataclass(frozen=True)
class ApplicationInstance:
    """A reduction target: evaluate the partition sum, divide the normalizer.

    The target quantity is Q * exp(-normalizer_log); normalizer_log is 0
    for hard reductions whose Q is already the count.
    """

    graph: Graph
    mult: MultiplicityVector
    weights: EdgeWeights
    normalizer_log: float
    description: str


@dataclass(frozen=True)
class CertifiedValue:
    """Approximated quantity with its log-space error certificate.

    value = exp(log_value); error_bound is additive on log_value, so the
    value itself is certified within the relative factor exp(error_bound).
    """

    value: complex
    log_value: complex
    error_bound: float
    order: int
    beta: float


def evaluate_instance(inst: ApplicationInstance, *, epsilon: float | None = None,
                      cap: float = DEFAULT_ENUMERATION_CAP,
                      work_budget: float = DEFAULT_WORK_BUDGET):
    """Evaluate an ApplicationInstance's target quantity.

    epsilon=None enumerates exactly and returns a complex value; otherwise
    the series engine runs with the given log-error target and a
    CertifiedValue is returned.
    """
    if epsilon is None:
        q = exact_partition(inst.graph, inst.mult, inst.weights, cap=cap)
        if inst.normalizer_log == 0.0:
            return q
        return q * math.exp(-inst.normalizer_log)
    res = approximate_log_partition(inst.graph, inst.mult, inst.weights,
                                    epsilon=epsilon, work_budget=work_budget)
    logv = res.log_value - inst.normalizer_log
    return CertifiedValue(cmath.exp(logv), logv, res.error_bound, res.order, res.beta)


def _warn_uncertified(gamma: float, what: str) -> None:
    if gamma >= ALPHA:
        warnings.warn(
            f"{what}: gamma = {gamma} is not below alpha = {ALPHA}; "
            "certified error bounds are unavailable at this softening",
            stacklevel=3)


def independent_set_instance(g: Graph, s: int, mode: str = "hard",
                             gamma: float = GAMMA_DEFAULT) -> ApplicationInstance:
    """Two-color instance whose partition sum counts (or weights) s-subsets.

    Color 0 marks membership in the subset, color 1 the complement, so m =
    (s, |V|-s). Hard mode zeroes the weight of any edge inside the subset:
    Q counts independent s-sets exactly. Soft mode uses 1 - gamma/max_degree
    inside the subset and 1 + gamma/max_degree elsewhere; then
    Q * exp(-normalizer_log) sums, over all s-subsets S, the weight
    ((1-gamma/D)/(1+gamma/D))^(edges inside S), which is 1 exactly when S
    is independent.
    """
    if not 1 <= s <= g.vertex_count - 1:
        raise ValueError(
            f"subset size must be in [1, {g.vertex_count - 1}] so both color "
            f"classes are non-empty, got {s}")
    m = validate_multiplicities(g, [s, g.vertex_count - s])
    if mode == "hard":
        a = [[0.0, 1.0], [1.0, 1.0]]
        return ApplicationInstance(g, m, uniform_weights(g, 2, a), 0.0,
                                   "independent-set-hard")
    if mode == "soft":
        if gamma <= 0:
            raise ValueError(f"gamma must be > 0, got {gamma}")
        _warn_uncertified(gamma, "independent_set_instance")
        gd = gamma / max_degree(g)
        a = [[1.0 - gd, 1.0 + gd], [1.0 + gd, 1.0 + gd]]
        normalizer_log = g.edge_count * math.log1p(gd)
        return ApplicationInstance(g, m, uniform_weights(g, 2, a), normalizer_log,
                                   "independent-set-soft")
    raise ValueError(f'mode must be "hard" or "soft", got {mode!r}')


@dataclass(frozen=True)
class IndependenceVerdict:
    """Outcome of the independence discrimination test.

    weighted_sum is the certified approximation of N, the soft-weighted
    count of s-subsets; threshold is T = C(|V|, s) * exp(-2*gamma*x/D).
    sparse_subset_exists: N > T e^{rel_err}, impossible if every s-subset
    spans at least x edges. few_independent: N < 2T e^{-rel_err},
    impossible if independent s-subsets have density >= 2 exp(-2 gamma x/D)
    among all s-subsets. Both can hold in the overlap band; neither holding
    is a genuinely inconclusive outcome.
    """

    weighted_sum: float
    threshold: float
    sparse_subset_exists: bool
    few_independent: bool
    gamma: float
    rel_err: float
    order: int
    error_bound: float


def distinguish_independent(g: Graph, s: int, x: float,
                            gamma: float = GAMMA_DEFAULT, rel_err: float = 0.1,
                            work_budget: float = DEFAULT_WORK_BUDGET) -> IndependenceVerdict:
    """Certified test separating sparse-subset-exists from few-independent."""
    if x < 0:
        raise ValueError(f"edge threshold x must be >= 0, got {x}")
    if not rel_err > 0:
        raise ValueError(f"rel_err must be > 0, got {rel_err}")
    if gamma >= ALPHA:
        raise NoCertificateError(
            f"gamma = {gamma} is not below alpha = {ALPHA}; the discrimination "
            "procedure needs a certified approximation")
    inst = independent_set_instance(g, s, mode="soft", gamma=gamma)
    res = approximate_log_partition(inst.graph, inst.mult, inst.weights,
                                    epsilon=rel_err, work_budget=work_budget)
    n_value = math.exp(res.log_value.real - inst.normalizer_log)
    t_value = math.comb(g.vertex_count, s) * math.exp(
        -2.0 * gamma * x / max_degree(g))
    sparse = n_value > t_value * math.exp(rel_err)
    few = n_value < 2.0 * t_value * math.exp(-rel_err)
    return IndependenceVerdict(n_value, t_value, sparse, few, gamma, rel_err,
                               res.order, res.error_bound)


def _symmetric_matrix(a, what: str) -> np.ndarray:
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InvalidWeightsError(f"{what}: expected a square matrix, got shape {arr.shape}")
    if not np.array_equal(arr, arr.T):
        raise InvalidWeightsError(f"{what}: matrix is not symmetric")
    return arr


def hafnian(a, *, epsilon: float | None = None,
            cap: float = DEFAULT_ENUMERATION_CAP,
            work_budget: float = DEFAULT_WORK_BUDGET):
    """Hafnian of an even-dimensional symmetric matrix.

    Realized as the partition sum on n disjoint edges with 2n colors, all
    multiplicities 1, divided by 2^n n!. For a 0/1 adjacency input this is
    the perfect matching count. Approx mode (epsilon given) requires the
    entries within alpha of 1 and returns a CertifiedValue.
    """
    arr = _symmetric_matrix(a, "hafnian matrix")
    dim = arr.shape[0]
    if dim == 0 or dim % 2 != 0:
        raise InvalidWeightsError(
            f"hafnian needs a positive even dimension, got {dim}")
    n = dim // 2
    g = build_graph(dim, [(2 * l, 2 * l + 1) for l in range(n)])
    m = validate_multiplicities(g, [1] * dim)
    w = uniform_weights(g, dim, arr)
    divisor = 2**n * math.factorial(n)
    if epsilon is None:
        return exact_partition(g, m, w, cap=cap) / divisor
    res = approximate_log_partition(g, m, w, epsilon=epsilon,
                                    work_budget=work_budget)
    logv = res.log_value - math.log(divisor)
    return CertifiedValue(cmath.exp(logv), logv, res.error_bound, res.order, res.beta)


def _hamiltonian_sum(a, cycles: bool, epsilon, cap, work_budget):
    arr = _symmetric_matrix(a, "matrix")
    dim = arr.shape[0]
    if dim < 3:
        raise InvalidWeightsError(
            f"single-cycle sums need dimension >= 3, got {dim}")
    g = build_graph(dim, [(i, (i + 1) % dim) for i in range(dim)])
    m = validate_multiplicities(g, [1] * dim)
    w = uniform_weights(g, dim, arr)
    divisor = 2 * dim if cycles else dim
    if epsilon is None:
        return exact_partition(g, m, w, cap=cap) / divisor
    res = approximate_log_partition(g, m, w, epsilon=epsilon,
                                    work_budget=work_budget)
    logv = res.log_value - math.log(divisor)
    return CertifiedValue(cmath.exp(logv), logv, res.error_bound, res.order, res.beta)


def hamiltonian_permanent(a, *, epsilon: float | None = None,
                          cap: float = DEFAULT_ENUMERATION_CAP,
                          work_budget: float = DEFAULT_WORK_BUDGET):
    """Sum over single-cycle permutations sigma of prod_i a[i, sigma(i)].

    Partition sum on a cycle graph with n colors and unit multiplicities,
    divided by n. Approx mode needs entries within alpha/2 of 1 (the cycle
    has max degree 2).
    """
    return _hamiltonian_sum(a, False, epsilon, cap, work_budget)


def hamiltonian_cycle_count(a, *, epsilon: float | None = None,
                            cap: float = DEFAULT_ENUMERATION_CAP,
                            work_budget: float = DEFAULT_WORK_BUDGET):
    """Hamiltonian cycle count of a 0/1 adjacency matrix: divisor 2n.

    Each undirected cycle is counted once (the single-cycle permutation sum
    counts it 2n times, once per starting point and direction).
    """
    return _hamiltonian_sum(a, True, epsilon, cap, work_budget)


def clique_density_sum(host: Graph, n: int, *, gamma: float | None = None,
                       epsilon: float | None = None,
                       cap: float = DEFAULT_ENUMERATION_CAP,
                       work_budget: float = DEFAULT_WORK_BUDGET):
    """Clique count (gamma=None) or soft clique-density sum of a host graph.

    The instance is a clique on n vertices plus k-n isolated vertices,
    k = |V(host)|, colored bijectively by host vertices; weights read off
    host adjacency. Hard variant: Q/(n! (k-n)!) is the number of n-cliques.
    Soft variant (edge 1+gamma/(n-1), non-edge 1-gamma/(n-1)): dividing
    further by (1+gamma/(n-1))^C(n,2) gives the sum over n-subsets S of
    ((1-g')/(1+g'))^t(S) with t(S) the non-adjacent pairs inside S, which
    is 1 exactly when S is a clique.
    """
    k = host.vertex_count
    if not 3 <= n <= k:
        raise ValueError(f"clique size must be in [3, {k}], got {n}")
    ghat = build_graph(k, [(i, j) for i in range(n) for j in range(i + 1, n)])
    m = validate_multiplicities(ghat, [1] * k)
    adjacent = set(host.edges)
    matrix = np.zeros((k, k), dtype=np.complex128)
    if gamma is None:
        for (u, v) in adjacent:
            matrix[u, v] = 1.0
            matrix[v, u] = 1.0
        normalizer_extra_log = 0.0
    else:
        if gamma <= 0:
            raise ValueError(f"gamma must be > 0, got {gamma}")
        _warn_uncertified(gamma, "clique_density_sum")
        gp = gamma / (n - 1)
        for i in range(k):
            for j in range(k):
                if i == j:
                    matrix[i, j] = 1.0  # never read: colors are all distinct
                elif (min(i, j), max(i, j)) in adjacent:
                    matrix[i, j] = 1.0 + gp
                else:
                    matrix[i, j] = 1.0 - gp
        normalizer_extra_log = math.comb(n, 2) * math.log1p(gp)
    w = uniform_weights(ghat, k, matrix)
    divisor = math.factorial(n) * math.factorial(k - n)
    if epsilon is None:
        q = exact_partition(ghat, m, w, cap=cap)
        value = q.real / divisor
        if gamma is not None:
            value /= (1.0 + gamma / (n - 1)) ** math.comb(n, 2)
        return value
    res = approximate_log_partition(ghat, m, w, epsilon=epsilon,
                                    work_budget=work_budget)
    logv = res.log_value - math.log(divisor) - normalizer_extra_log
    return CertifiedValue(cmath.exp(logv), logv, res.error_bound, res.order, res.beta)


def coloring_partition(g: Graph, m: MultiplicityVector, *,
                       gamma: float | None = None,
                       epsilon: float | None = None,
                       cap: float = DEFAULT_ENUMERATION_CAP,
                       work_budget: float = DEFAULT_WORK_BUDGET):
    """Count (gamma=None) or softly weight colorings with class sizes m.

    Hard weights vanish on the diagonal, so Q counts proper colorings using
    color i exactly m[i] times. Soft weights (diagonal 1-gamma/D,
    off-diagonal 1+gamma/D, D the max degree) give, after dividing by
    (1+gamma/D)^|E|, the sum over all class-size-m colorings of
    ((1-gamma/D)/(1+gamma/D))^(miscolored edges), 1 exactly for proper
    colorings.
    """
    k = m.k
    if gamma is None:
        matrix = np.ones((k, k), dtype=np.complex128) - np.eye(k, dtype=np.complex128)
        normalizer_log = 0.0
    else:
        if gamma <= 0:
            raise ValueError(f"gamma must be > 0, got {gamma}")
        _warn_uncertified(gamma, "coloring_partition")
        gd = gamma / max_degree(g)
        matrix = np.full((k, k), 1.0 + gd, dtype=np.complex128)
        np.fill_diagonal(matrix, 1.0 - gd)
        normalizer_log = g.edge_count * math.log1p(gd)
    w = uniform_weights(g, k, matrix)
    if epsilon is None:
        q = exact_partition(g, m, w, cap=cap)
        if normalizer_log == 0.0:
            return q.real
        return q.real / math.exp(normalizer_log)
    res = approximate_log_partition(g, m, w, epsilon=epsilon,
                                    work_budget=work_budget)
    logv = res.log_value - normalizer_log
    return CertifiedValue(cmath.exp(logv), logv, res.error_bound, res.order, res.beta)
