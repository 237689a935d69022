"""Zero-free-region constants and empirical zero checks.

The certified radius for the series expansion comes from a fixed constant
alpha: for weight arrays within deviation alpha/max_degree of all-ones, the
constrained partition sum is provably nonzero, and the interpolation pencil
1 + z(B - J) stays zero-free for |z| up to beta = alpha/(max_degree *
deviation). The remaining constants here are the ones the underlying proof
fixes; they are kept (with their defining identities as tests) so the
provenance of alpha stays checkable.

root_margin and polydisc_scan are empirical companions: the first measures
the actual smallest root modulus of the interpolation polynomial on
oracle-sized instances, the second samples weight arrays from a polydisc
and looks for vanishing partition sums.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import PfgmError
from .exact import (
    DEFAULT_ENUMERATION_CAP,
    exact_partition,
    g_polynomial,
    multinomial_exact,
)
from .graph import Graph, MultiplicityVector, max_degree
from .weights import EdgeWeights, deviation

# Full-precision certified radius coefficient; alpha_rounded is the
# two-page version quoted in summaries and reproduced in a few doctests.
ALPHA = 0.1074337498
ALPHA_ROUNDED = 0.107
GAMMA_DEFAULT = 0.1


@dataclass(frozen=True)
class ZeroRegionConstants:
    """Named constants of the zero-freeness proof.

    alpha = xi_cap*tau/(4 + xi_cap*tau), where tau = cos(theta/2) and theta
    solves theta = arcsin(epsilon_proof/cos(theta/2)). These identities are
    enforced by tests, not recomputed at runtime.
    """

    alpha: float = ALPHA
    alpha_rounded: float = ALPHA_ROUNDED
    gamma_default: float = GAMMA_DEFAULT
    epsilon_proof: float = 0.76
    theta: float = 1.101463960
    tau: float = 0.8521416971
    xi_cap: float = 0.565

    def as_dict(self) -> dict:
        return asdict(self)


_CONSTANTS = ZeroRegionConstants()


def constants() -> ZeroRegionConstants:
    return _CONSTANTS


def compute_beta(g: Graph, w: EdgeWeights, alpha: float = ALPHA) -> float:
    """Certified zero-free radius of t -> Q(1 + t(w-1)) around 0.

    beta = alpha/(max_degree(g) * deviation(w)); math.inf when the weights
    are exactly all-ones (the pencil is constant). The alpha override
    exists for reproducing calculations quoted at the rounded value.
    """
    dev = deviation(w)
    if dev == 0.0:
        return math.inf
    return alpha / (max_degree(g) * dev)


def _polish_root(coeffs: np.ndarray, z: complex) -> complex:
    # Newton steps; coeffs is ascending, derivative coefficients i*c_i.
    deriv = coeffs[1:] * np.arange(1, len(coeffs))
    for _ in range(50):
        val = np.polyval(coeffs[::-1], z)
        dval = np.polyval(deriv[::-1], z)
        if dval == 0:
            break
        step = val / dval
        z = z - step
        if abs(step) <= 1e-15 * max(1.0, abs(z)):
            break
    return z


def root_margin(g: Graph, m: MultiplicityVector, w: EdgeWeights,
                cap: float = DEFAULT_ENUMERATION_CAP) -> float:
    """Smallest root modulus of the interpolation polynomial.

    Reconstructs the polynomial through the exact oracle, finds its roots,
    and validates each root by its relative residual |g(root)|/|c_0| <=
    1e-8 (polishing by Newton iteration first if the eigenvalue-based root
    is too loose). Returns math.inf when the polynomial is constant, i.e.
    the weights are all-ones.
    """
    coeffs = g_polynomial(g, m, w, cap=cap)
    # Trailing coefficients that are pure interpolation noise would inject
    # spurious huge roots; the polynomial's scale is set by |c_0| >= 1.
    scale = float(np.abs(coeffs).max())
    degree = len(coeffs) - 1
    while degree > 0 and abs(coeffs[degree]) <= 1e-12 * scale:
        degree -= 1
    coeffs = coeffs[:degree + 1]
    if degree == 0:
        return math.inf
    roots = np.roots(coeffs[::-1])
    c0 = abs(coeffs[0])
    margin = math.inf
    for z in roots:
        z = complex(z)
        residual = abs(np.polyval(coeffs[::-1], z)) / c0
        if residual > 1e-8:
            z = _polish_root(coeffs, z)
            residual = abs(np.polyval(coeffs[::-1], z)) / c0
            if residual > 1e-8:
                raise PfgmError(
                    f"root finder failed residual validation: |g(z)|/|c_0| = {residual}")
        margin = min(margin, abs(z))
    return margin


@dataclass(frozen=True)
class ScanReport:
    """Outcome of a polydisc sampling run, in wire-format field order."""

    trials: int
    delta: float
    min_abs_ratio: float
    zero_count: int
    seed: int

    def as_dict(self) -> dict:
        return {"trials": self.trials, "delta": self.delta,
                "min_abs_ratio": self.min_abs_ratio,
                "zero_count": self.zero_count, "seed": self.seed}


def polydisc_scan(g: Graph, m: MultiplicityVector, delta: float, trials: int,
                  seed: int, cap: float = DEFAULT_ENUMERATION_CAP) -> ScanReport:
    """Sample weight arrays from the polydisc and look for vanishing sums.

    Each trial draws every entry independently as 1 + r*exp(i*phi) with r
    uniform on [0, delta] and phi uniform on [0, 2*pi): uniform in radius
    rather than in area, so moderate radii are sampled more densely than
    area-uniform would. Per-trial generator streams are spawned from
    (seed, trial), making reports reproducible and independent of any
    batching. A sample counts as a zero when |Q| < 1e-12 * Q(J).

    Entry draw order within a trial: all radii first, then all angles, each
    laid out edge-major over the upper-triangle color pairs (i <= j) in row
    order.
    """
    if delta < 0:
        raise ValueError(f"delta must be >= 0, got {delta}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if m.total != g.vertex_count:
        raise PfgmError(
            f"multiplicities sum to {m.total}, expected |V| = {g.vertex_count}")
    k = m.k
    pairs = [(i, j) for i in range(k) for j in range(i, k)]
    baseline = float(multinomial_exact(m.counts))
    min_ratio = math.inf
    zero_count = 0
    for trial in range(trials):
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(trial,)))
        radii = rng.uniform(0.0, delta, size=(g.edge_count, len(pairs)))
        angles = rng.uniform(0.0, 2.0 * np.pi, size=(g.edge_count, len(pairs)))
        blocks = np.empty((g.edge_count, k, k), dtype=np.complex128)
        for e in range(g.edge_count):
            for p, (i, j) in enumerate(pairs):
                entry = 1.0 + radii[e, p] * np.exp(1j * angles[e, p])
                blocks[e, i, j] = entry
                blocks[e, j, i] = entry
        q = exact_partition(g, m, EdgeWeights(k, blocks), cap=cap)
        ratio = abs(q) / baseline
        min_ratio = min(min_ratio, ratio)
        if abs(q) < 1e-12 * baseline:
            zero_count += 1
    return ScanReport(trials, float(delta), min_ratio, zero_count, seed)
