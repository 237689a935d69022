"""Per-edge color weight arrays.

Every edge of a graph carries a k x k complex block, symmetric in the two
color indices. The all-ones array J is the reference point: ``deviation``
measures the largest modulus distance of any entry from 1, and
``interpolate`` produces the pencil J + t(B - J) used by the series
expansion of the log partition value.

Storage is the full k x k block per edge (the (i, j) = (j, i) symmetry is
enforced at construction) so the innermost enumeration loop gets O(1)
lookups.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidWeightsError
from .graph import Graph


@dataclass(frozen=True)
class EdgeWeights:
    """Complex weight blocks, one k x k block per canonical edge index.

    ``blocks`` has shape (edge_count, k, k), dtype complex128, and is
    treated as immutable after construction.
    """

    k: int
    blocks: np.ndarray = field(repr=False)

    @property
    def edge_count(self) -> int:
        return len(self.blocks)

    def block(self, e: int) -> np.ndarray:
        return self.blocks[e]


def _as_block(matrix, k: int, what: str) -> np.ndarray:
    b = np.asarray(matrix, dtype=np.complex128)
    if b.shape != (k, k):
        raise InvalidWeightsError(f"{what}: expected a {k}x{k} matrix, got shape {b.shape}")
    if not np.array_equal(b, b.T):
        raise InvalidWeightsError(f"{what}: matrix is not symmetric")
    return b


def uniform_weights(g: Graph, k: int, matrix) -> EdgeWeights:
    """Broadcast one symmetric k x k matrix to every edge.

    Symmetry must hold exactly on the stored values (tolerance 0).
    """
    if k < 1:
        raise InvalidWeightsError(f"k must be >= 1, got {k}")
    b = _as_block(matrix, k, "uniform weight matrix")
    blocks = np.tile(b, (g.edge_count, 1, 1))
    return EdgeWeights(k, blocks)


def all_ones(g: Graph, k: int) -> EdgeWeights:
    """The reference array J: every entry of every block is 1."""
    if k < 1:
        raise InvalidWeightsError(f"k must be >= 1, got {k}")
    return EdgeWeights(k, np.ones((g.edge_count, k, k), dtype=np.complex128))


def per_edge_weights(g: Graph, k: int, blocks) -> EdgeWeights:
    """Build from one block per canonical edge index."""
    if k < 1:
        raise InvalidWeightsError(f"k must be >= 1, got {k}")
    blocks = list(blocks)
    if len(blocks) != g.edge_count:
        raise InvalidWeightsError(
            f"expected {g.edge_count} per-edge blocks, got {len(blocks)}")
    arr = np.empty((g.edge_count, k, k), dtype=np.complex128)
    for e, blk in enumerate(blocks):
        arr[e] = _as_block(blk, k, f"per_edge[{e}]")
    return EdgeWeights(k, arr)


def deviation(w: EdgeWeights) -> float:
    """Largest |b - 1| over all edges and color pairs."""
    if w.blocks.size == 0:
        return 0.0
    return float(np.abs(w.blocks - 1.0).max())


def in_polydisc(w: EdgeWeights, delta: float) -> bool:
    """True iff every entry lies within the closed disc |b - 1| <= delta."""
    if delta < 0:
        raise ValueError(f"delta must be >= 0, got {delta}")
    return deviation(w) <= delta


def interpolate(w: EdgeWeights, t: complex) -> EdgeWeights:
    """Entrywise 1 + t*(b - 1); t=0 gives J, t=1 gives back the input."""
    return EdgeWeights(w.k, 1.0 + t * (w.blocks - 1.0))


def support_edges(w: EdgeWeights) -> list[int]:
    """Canonical indices of edges whose block differs from all-ones.

    Only these edges contribute to derivatives of the interpolation pencil,
    so enumeration and error bounds can be restricted to them. The
    comparison is exact: an edge is excluded only when every entry is
    exactly 1.
    """
    return [e for e in range(w.edge_count) if not np.all(w.blocks[e] == 1.0)]


def _entry_from_json(x, where: str) -> complex:
    if isinstance(x, (int, float)):
        return complex(x, 0.0)
    if isinstance(x, dict) and set(x) <= {"re", "im"}:
        re = x.get("re", 0.0)
        im = x.get("im", 0.0)
        if isinstance(re, (int, float)) and isinstance(im, (int, float)):
            return complex(re, im)
    raise InvalidWeightsError(f'{where}: expected a number or {{"re", "im"}} object, got {x!r}')


def _matrix_from_json(rows, k: int, where: str) -> list[list[complex]]:
    if not isinstance(rows, list) or len(rows) != k:
        raise InvalidWeightsError(f"{where}: expected {k} rows")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != k:
            raise InvalidWeightsError(f"{where}[{i}]: expected {k} entries")
        out.append([_entry_from_json(x, f"{where}[{i}][{j}]") for j, x in enumerate(row)])
    return out


def weights_from_json(g: Graph, data: dict) -> EdgeWeights:
    """Parse either of the two wire shapes.

    {"k": k, "uniform": [[...], ...]} broadcasts one matrix, while
    {"k": k, "per_edge": [block_0, ...]} lists blocks in canonical edge
    order. Plain numbers are read as real values.
    """
    if not isinstance(data, dict):
        raise InvalidWeightsError(f"weights document must be an object, got {type(data).__name__}")
    k = data.get("k")
    if not isinstance(k, int) or k < 1:
        raise InvalidWeightsError(f'"k": expected a positive integer, got {k!r}')
    has_uniform = "uniform" in data
    has_per_edge = "per_edge" in data
    if has_uniform == has_per_edge:
        raise InvalidWeightsError('weights document needs exactly one of "uniform" or "per_edge"')
    if has_uniform:
        return uniform_weights(g, k, _matrix_from_json(data["uniform"], k, "uniform"))
    raw = data["per_edge"]
    if not isinstance(raw, list) or len(raw) != g.edge_count:
        raise InvalidWeightsError(
            f'"per_edge": expected {g.edge_count} blocks, got '
            f"{len(raw) if isinstance(raw, list) else type(raw).__name__}")
    blocks = [_matrix_from_json(blk, k, f"per_edge[{e}]") for e, blk in enumerate(raw)]
    return per_edge_weights(g, k, blocks)
