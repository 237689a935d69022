"""Timing comparison of the compiled and pure-Python enumeration kernels.

Runs the two hot kernels on the same inputs with both backends and prints
per-call times and the speedup. The outputs are also compared bit for bit,
so this doubles as a parity check on a larger instance than the test suite
uses.

Usage: python3 benchmarks/bench_kernels.py [--vertices N] [--colors K]
                                           [--order J] [--repeat R]
"""

import argparse
import sys
import timeit

import numpy as np

from pfgm import _kernels_py
from pfgm.exact import earlier_neighbor_csr
from pfgm.graph import build_graph
from pfgm.weights import support_edges, uniform_weights

try:
    from pfgm import _core
except ImportError:
    _core = None


def build_instance(n, k):
    # a cycle with a few chords: enough edges to make subsets interesting
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, (i + n // 2) % n) for i in range(0, n, 3)
              if i < (i + n // 2) % n]
    g = build_graph(n, sorted(set(edges)))
    counts = [n // k] * k
    counts[0] += n - sum(counts)
    rng = np.random.default_rng(0)
    base = 1.0 + 0.05 * (rng.uniform(0.5, 1.0, (k, k)) +
                         0.2j * rng.uniform(-1.0, 1.0, (k, k)))
    base = (base + base.T) / 2
    w = uniform_weights(g, k, base)
    return g, counts, w


def time_call(fn, args, repeat):
    best = min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--vertices", type=int, default=12)
    ap.add_argument("--colors", type=int, default=3)
    ap.add_argument("--order", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    if _core is None:
        print("compiled extension not available; nothing to compare")
        return 1

    g, counts, w = build_instance(args.vertices, args.colors)
    ptr, nbr, eidx = earlier_neighbor_csr(g)
    pinned = np.full(g.vertex_count, -1, dtype=np.int64)
    cms_args = (g.vertex_count, w.k, np.asarray(counts, dtype=np.int64),
                pinned, ptr, nbr, eidx, np.ascontiguousarray(w.blocks))

    sup = support_edges(w)
    sub_u = np.asarray([g.edges[e][0] for e in sup], dtype=np.int64)
    sub_v = np.asarray([g.edges[e][1] for e in sup], dtype=np.int64)
    bm1 = np.ascontiguousarray(w.blocks[sup] - 1.0)
    mu = np.asarray(counts, dtype=np.int64)
    dds_args = (args.order, g.vertex_count, w.k, sub_u, sub_v, bm1, mu)

    print(f"instance: |V|={g.vertex_count}, |E|={g.edge_count}, "
          f"k={w.k}, m={tuple(counts)}, derivative order {args.order}")
    header = f"{'kernel':<24}{'pure (s)':>12}{'compiled (s)':>14}{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for name, py_fn, c_fn, call_args in (
            ("constrained_map_sum", _kernels_py.constrained_map_sum,
             _core.constrained_map_sum, cms_args),
            ("derivative_subset_sum", _kernels_py.derivative_subset_sum,
             _core.derivative_subset_sum, dds_args)):
        ref = py_fn(*call_args)
        got = c_fn(*call_args)
        if ref != got:
            print(f"{name}: BACKEND MISMATCH {ref!r} vs {got!r}")
            return 1
        t_py = time_call(py_fn, call_args, args.repeat)
        t_c = time_call(c_fn, call_args, args.repeat)
        print(f"{name:<24}{t_py:>12.4f}{t_c:>14.4f}{t_py / t_c:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
