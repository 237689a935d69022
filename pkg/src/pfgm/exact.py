"""Brute-force evaluation of constrained homomorphism sums.

Ground truth for everything else in the package: the series engine, the
root-margin and sampling checks, and the application adapters are all
tested against these enumerations. Costs are exponential, so every entry
point guards the instance size against a configurable cap before starting.
"""

from __future__ import annotations

import cmath
import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .errors import (
    InadmissiblePrefixError,
    InstanceTooLargeError,
    InvalidMultiplicityError,
    InvalidWeightsError,
)
from .graph import Graph, MultiplicityVector
from .weights import EdgeWeights, interpolate, support_edges

DEFAULT_ENUMERATION_CAP = 10**8


def multinomial_exact(counts: Sequence[int]) -> int:
    """multinomial(sum(counts); counts) in exact integer arithmetic."""
    result = math.factorial(sum(counts))
    for c in counts:
        result //= math.factorial(c)
    return result


def log_multinomial(counts: Sequence[int]) -> float:
    """ln of the multinomial coefficient, as a sum of logs of integers.

    Never materializes a factorial, so it stays finite (and accurate to
    float rounding) for vertex counts far beyond what enumeration allows.
    """
    out = 0.0
    for j in range(2, sum(counts) + 1):
        out += math.log(j)
    for c in counts:
        for j in range(2, c + 1):
            out -= math.log(j)
    return out


@dataclass(frozen=True)
class RestrictedPrefix:
    """Pinned assignment prefix: vertices W get colors I positionwise.

    Admissibility (distinct vertices, per-color usage within the
    multiplicities) is checked against a concrete graph and multiplicity
    vector by exact_restricted, not at construction.
    """

    vertices: tuple[int, ...]
    colors: tuple[int, ...]


EMPTY_PREFIX = RestrictedPrefix((), ())


def _check_instance(g: Graph, m: MultiplicityVector | None, w: EdgeWeights) -> None:
    if m is not None and m.total != g.vertex_count:
        raise InvalidMultiplicityError(
            f"multiplicities sum to {m.total}, expected |V| = {g.vertex_count}")
    if m is not None and m.k != w.k:
        raise InvalidWeightsError(
            f"mismatched color count: multiplicities have k={m.k}, weights have k={w.k}")
    if w.edge_count != g.edge_count:
        raise InvalidWeightsError(
            f"weights cover {w.edge_count} edges, graph has {g.edge_count}")


def check_prefix(g: Graph, m: MultiplicityVector, p: RestrictedPrefix) -> None:
    """Raise InadmissiblePrefixError unless p is admissible for (g, m)."""
    if len(p.vertices) != len(p.colors):
        raise InadmissiblePrefixError(
            f"prefix pins {len(p.vertices)} vertices but lists {len(p.colors)} colors")
    seen: set[int] = set()
    for v in p.vertices:
        if not (0 <= v < g.vertex_count):
            raise InadmissiblePrefixError(f"prefix vertex {v} out of range")
        if v in seen:
            raise InadmissiblePrefixError(f"prefix vertex {v} repeated")
        seen.add(v)
    usage: Counter[int] = Counter()
    for i in p.colors:
        if not (0 <= i < m.k):
            raise InadmissiblePrefixError(f"prefix color {i} out of range for k={m.k}")
        usage[i] += 1
        if usage[i] > m.counts[i]:
            raise InadmissiblePrefixError(
                f"prefix uses color {i} {usage[i]} times, multiplicity is {m.counts[i]}")


def earlier_neighbor_csr(g: Graph):
    """CSR arrays (ptr, neighbor, edge) of each vertex's lower neighbors.

    Lists, for vertex v in increasing v, the neighbors u < v in increasing
    u together with the canonical index of edge (u, v). This fixes the
    enumeration kernels' multiplication order.
    """
    edge_index = {e: i for i, e in enumerate(g.edges)}
    ptr = [0]
    nbr: list[int] = []
    eidx: list[int] = []
    for v in range(g.vertex_count):
        for u in g.adjacency[v]:
            if u < v:
                nbr.append(u)
                eidx.append(edge_index[(u, v)])
        ptr.append(len(nbr))
    return (np.asarray(ptr, dtype=np.int64),
            np.asarray(nbr, dtype=np.int64),
            np.asarray(eidx, dtype=np.int64))


def _map_sum(g: Graph, counts: Sequence[int], w: EdgeWeights,
             pinned: np.ndarray) -> complex:
    ptr, nbr, eidx = earlier_neighbor_csr(g)
    blocks = np.ascontiguousarray(w.blocks, dtype=np.complex128)
    return complex(kernels.constrained_map_sum(
        g.vertex_count, w.k,
        np.asarray(counts, dtype=np.int64), pinned,
        ptr, nbr, eidx, blocks))


def _guard(size: int, cap: float, what: str) -> None:
    if size > cap:
        raise InstanceTooLargeError(
            f"{size} {what} exceed the enumeration cap {cap}")


def exact_partition(g: Graph, m: MultiplicityVector, w: EdgeWeights,
                    cap: float = DEFAULT_ENUMERATION_CAP) -> complex:
    """Sum over maps using color i exactly m[i] times of the edge products.

    Enumerates the constrained assignments directly (the multiplicity
    constraint prunes the search as soon as a color class fills up), so the
    cost is the multinomial count of maps, which is checked against cap.
    """
    _check_instance(g, m, w)
    _guard(multinomial_exact(m.counts), cap, "constrained maps")
    pinned = np.full(g.vertex_count, -1, dtype=np.int64)
    return _map_sum(g, m.counts, w, pinned)


def exact_partition_unrestricted(g: Graph, w: EdgeWeights,
                                 cap: float = DEFAULT_ENUMERATION_CAP) -> complex:
    """Sum over all k^|V| maps of the edge products."""
    _check_instance(g, None, w)
    _guard(w.k ** g.vertex_count, cap, "maps")
    counts = [g.vertex_count] * w.k
    pinned = np.full(g.vertex_count, -1, dtype=np.int64)
    return _map_sum(g, counts, w, pinned)


def exact_restricted(g: Graph, m: MultiplicityVector, w: EdgeWeights,
                     p: RestrictedPrefix,
                     cap: float = DEFAULT_ENUMERATION_CAP) -> complex:
    """exact_partition restricted to maps agreeing with the pinned prefix."""
    _check_instance(g, m, w)
    check_prefix(g, m, p)
    _guard(multinomial_exact(m.counts), cap, "constrained maps")
    pinned = np.full(g.vertex_count, -1, dtype=np.int64)
    for v, i in zip(p.vertices, p.colors):
        pinned[v] = i
    return _map_sum(g, m.counts, w, pinned)


def g_polynomial(g: Graph, m: MultiplicityVector, w: EdgeWeights,
                 cap: float = DEFAULT_ENUMERATION_CAP) -> np.ndarray:
    """Coefficients c_0..c_d of t -> exact_partition(g, m, 1 + t(w - 1)).

    d is the number of support edges (blocks differing from all-ones);
    edges at the all-ones value are constant in t and add no degree. The
    polynomial is recovered from values at the (d+1)-st roots of unity by a
    discrete Fourier sum; c_0 is then overwritten with its exactly known
    value, the multinomial count of maps.
    """
    _check_instance(g, m, w)
    c0 = multinomial_exact(m.counts)
    d = len(support_edges(w))
    if d == 0:
        return np.array([complex(c0)])
    samples = np.empty(d + 1, dtype=np.complex128)
    for l in range(d + 1):
        node = cmath.exp(2j * cmath.pi * l / (d + 1))
        samples[l] = exact_partition(g, m, interpolate(w, node), cap=cap)
    coeffs = np.fft.fft(samples) / (d + 1)
    coeffs[0] = c0
    return coeffs
