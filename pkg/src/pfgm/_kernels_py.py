"""Pure-Python enumeration kernels.

Fallback for the compiled core in ``pfgm._core``. Both backends must stay
bit-identical: same depth-first orders, same accumulation chains (a single
running total updated at each leaf), and the same scalar operations, so a
result never depends on which backend happened to be importable.

Conventions shared with the compiled core:
  * vertices are visited in index order 0..n-1, colors tried in ascending
    order;
  * edge subsets are enumerated in lexicographic order;
  * within a subset, endpoint vertices are numbered by first appearance
    (scanning the subset's edges in order, lower endpoint first) and an
    edge's weight factor is multiplied in at the moment its later endpoint
    receives a color.
"""

from __future__ import annotations

from itertools import combinations


def constrained_map_sum(n, k, counts, pinned, nbr_ptr, nbr_w, nbr_e, blocks):
    """Sum of per-edge weight products over color assignments.

    Enumerates maps of the n vertices to k colors, using color c at most
    counts[c] times in total (callers encode "exactly" by making counts sum
    to n, or "unconstrained" by passing counts of n everywhere). pinned[v]
    fixes the color of vertex v (-1 leaves it free). nbr_ptr/nbr_w/nbr_e is
    a CSR listing, per vertex, of its already-visited neighbors and the
    connecting edge index; blocks[e][c1][c2] is the weight of edge e under
    endpoint colors (c1, c2).
    """
    counts = [int(c) for c in counts]
    pinned = [int(p) for p in pinned]
    nbr_ptr = [int(x) for x in nbr_ptr]
    nbr_w = [int(x) for x in nbr_w]
    nbr_e = [int(x) for x in nbr_e]
    blk = blocks.tolist() if hasattr(blocks, "tolist") else blocks
    color = [-1] * n
    total = complex(0.0)

    def go(v, prod):
        nonlocal total
        if v == n:
            total += prod
            return
        pv = pinned[v]
        lo = nbr_ptr[v]
        hi = nbr_ptr[v + 1]
        for c in ((pv,) if pv >= 0 else range(k)):
            if counts[c] == 0:
                continue
            p = prod
            for idx in range(lo, hi):
                p = p * blk[nbr_e[idx]][c][color[nbr_w[idx]]]
            counts[c] -= 1
            color[v] = c
            go(v + 1, p)
            counts[c] += 1

    go(0, complex(1.0))
    return total


def derivative_subset_sum(j, n, k, sub_u, sub_v, bm1, mu):
    """Inner sum of the j-th normalized interpolation derivative.

    Enumerates unordered j-subsets of the given edges and, per subset,
    color assignments of the subset's endpoints that never use color c more
    than mu[c] times. Each leaf contributes

        (product of falling factors (mu[c] - uses so far)) / (n)_s
        * product over subset edges of bm1[e][color(u)][color(v)]

    where s is the number of distinct endpoints. The caller multiplies the
    returned total by j! to obtain the normalized derivative.
    """
    num_edges = len(sub_u)
    if j > num_edges:
        return complex(0.0)
    sub_u = [int(x) for x in sub_u]
    sub_v = [int(x) for x in sub_v]
    mu = [int(x) for x in mu]
    blk = bm1.tolist() if hasattr(bm1, "tolist") else bm1

    local_of = [-1] * n
    verts = [0] * (2 * j)
    ea = [0] * j
    eb = [0] * j
    comp = [0] * j
    color = [0] * (2 * j)
    used = [0] * k
    total = complex(0.0)

    def assign(t, s, wff, prod, subset):
        nonlocal total
        if t == s:
            total += prod * complex(wff)
            return
        for c in range(k):
            if used[c] == mu[c]:
                continue
            factor = float(mu[c] - used[c])
            color[t] = c
            p = prod
            for l in range(j):
                if comp[l] == t:
                    p = p * blk[subset[l]][color[ea[l]]][color[eb[l]]]
            used[c] += 1
            assign(t + 1, s, wff * factor, p, subset)
            used[c] -= 1

    for subset in combinations(range(num_edges), j):
        s = 0
        for l in range(j):
            e = subset[l]
            for w in (sub_u[e], sub_v[e]):
                if local_of[w] < 0:
                    local_of[w] = s
                    verts[s] = w
                    s += 1
            ea[l] = local_of[sub_u[e]]
            eb[l] = local_of[sub_v[e]]
            comp[l] = ea[l] if ea[l] > eb[l] else eb[l]
        denom = 1.0
        for r in range(s):
            denom *= float(n - r)
        assign(0, s, 1.0 / denom, complex(1.0), subset)
        for t in range(s):
            local_of[verts[t]] = -1

    return total
