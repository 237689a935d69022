"""Shared test utilities: instance generators and direct enumerators.

The enumerators here are deliberately independent of the package's kernels
(filter-based loops over itertools products), so they can serve as oracles.
"""

import itertools

import numpy as np

from pfgm import EdgeWeights
from pfgm.graph import build_graph, max_degree, validate_multiplicities


def random_graph(rng, min_v=3, max_v=8, p=0.5):
    while True:
        n = int(rng.integers(min_v, max_v + 1))
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        chosen = [pair for pair in pairs if rng.random() < p]
        if chosen:
            return build_graph(n, chosen)


def random_path_cycle_graph(rng, min_edges=5):
    """Union of vertex-disjoint paths and cycles (max degree <= 2)."""
    while True:
        n = int(rng.integers(6, 8))
        order = rng.permutation(n).tolist()
        edges = []
        i = 0
        while i < n:
            seg = int(rng.integers(3, n - i + 1)) if n - i >= 3 else n - i
            part = order[i:i + seg]
            i += seg
            if len(part) < 2:
                continue
            edges += [(part[t], part[t + 1]) for t in range(len(part) - 1)]
            if len(part) >= 3 and rng.random() < 0.5:
                edges.append((part[0], part[-1]))
        if len(edges) >= min_edges:
            return build_graph(n, edges)


def random_positive_counts(rng, total, k):
    cuts = sorted(rng.choice(np.arange(1, total), size=k - 1, replace=False).tolist())
    fences = [0] + cuts + [total]
    return [fences[i + 1] - fences[i] for i in range(k)]


def random_counts_with_zeros(rng, total, k):
    counts = [0] * k
    for _ in range(total):
        counts[int(rng.integers(k))] += 1
    return counts


def generic_weights(rng, g, k, target_dev):
    """Symmetric complex blocks with uniform phases, rescaled to target_dev."""
    raw = (rng.uniform(-1, 1, (g.edge_count, k, k))
           + 1j * rng.uniform(-1, 1, (g.edge_count, k, k)))
    raw = (raw + raw.transpose(0, 2, 1)) / 2
    scale = np.abs(raw).max()
    return EdgeWeights(k, np.ascontiguousarray(1.0 + (target_dev / scale) * raw))


def coherent_weights(rng, g, k, target_dev):
    """Perturbations with phases within ~10 degrees of the positive axis.

    Products of up to four entries then stay well away from cancellation,
    which keeps high interpolation coefficients far above the double
    precision noise floor. Used where tests compare tiny coefficients at
    tight relative tolerances.
    """
    phi = rng.uniform(0, 2 * np.pi, (g.edge_count, k, k))
    mag = rng.uniform(0.9, 1.0, (g.edge_count, k, k))
    raw = mag * (0.85 + 0.15 * np.exp(1j * phi))
    raw = (raw + raw.transpose(0, 2, 1)) / 2
    scale = np.abs(raw).max()
    return EdgeWeights(k, np.ascontiguousarray(1.0 + (target_dev / scale) * raw))


def taylor_test_instance(rng):
    """Max-degree <= 2 instance with deviation in [0.85, 1] x 0.1/max_degree."""
    g = random_path_cycle_graph(rng)
    k = int(rng.integers(2, 4))
    m = validate_multiplicities(g, random_positive_counts(rng, g.vertex_count, k))
    dev = float(rng.uniform(0.85, 1.0)) * 0.1 / max_degree(g)
    return g, m, coherent_weights(rng, g, k, dev)


def compositions(total, k):
    """All k-tuples of non-negative ints summing to total (stars and bars)."""
    for bars in itertools.combinations(range(total + k - 1), k - 1):
        fences = (-1,) + bars + (total + k - 1,)
        yield tuple(fences[i + 1] - fences[i] - 1 for i in range(k))


def direct_partition(g, counts, w):
    """Filter-based oracle: loop all k^n maps, keep matching multiplicities."""
    n, k = g.vertex_count, w.k
    counts = list(counts)
    total = 0j
    for phi in itertools.product(range(k), repeat=n):
        used = [0] * k
        for c in phi:
            used[c] += 1
        if used != counts:
            continue
        p = 1 + 0j
        for e, (u, v) in enumerate(g.edges):
            p *= complex(w.blocks[e, phi[u], phi[v]])
        total += p
    return total


def direct_unrestricted(g, w):
    n, k = g.vertex_count, w.k
    total = 0j
    for phi in itertools.product(range(k), repeat=n):
        p = 1 + 0j
        for e, (u, v) in enumerate(g.edges):
            p *= complex(w.blocks[e, phi[u], phi[v]])
        total += p
    return total


def count_independent_sets(g, s):
    edges = set(g.edges)
    count = 0
    for sub in itertools.combinations(range(g.vertex_count), s):
        if not any((sub[i], sub[j]) in edges
                   for i in range(len(sub)) for j in range(i + 1, len(sub))):
            count += 1
    return count


def soft_subset_sum(g, s, ratio):
    """sum over s-subsets S of ratio^(edges inside S)."""
    edges = set(g.edges)
    total = 0.0
    for sub in itertools.combinations(range(g.vertex_count), s):
        inside = sum(1 for i in range(len(sub)) for j in range(i + 1, len(sub))
                     if (sub[i], sub[j]) in edges)
        total += ratio**inside
    return total


def hafnian_direct(a):
    a = np.asarray(a)
    idx = list(range(a.shape[0]))

    def go(rest):
        if not rest:
            return 1 + 0j
        first, tail = rest[0], rest[1:]
        total = 0j
        for pos, partner in enumerate(tail):
            total += complex(a[first, partner]) * go(tail[:pos] + tail[pos + 1:])
        return total

    return go(idx)


def single_cycle_permanent_direct(a):
    """sum over single-n-cycle permutations of prod_i a[i, sigma(i)]."""
    a = np.asarray(a)
    n = a.shape[0]
    total = 0j
    for perm in itertools.permutations(range(n)):
        seen = 1
        pos = perm[0]
        while pos != 0:
            pos = perm[pos]
            seen += 1
        if seen != n:
            continue
        p = 1 + 0j
        for i in range(n):
            p *= complex(a[i, perm[i]])
        total += p
    return total


def hamiltonian_cycles_direct(a):
    """Count undirected Hamiltonian cycles of a 0/1 adjacency matrix."""
    a = np.asarray(a)
    n = a.shape[0]
    count = 0
    for perm in itertools.permutations(range(1, n)):
        if perm[0] > perm[-1]:
            continue  # one representative per direction
        walk = (0,) + perm
        if all(a[walk[i], walk[i + 1]] for i in range(n - 1)) and a[walk[-1], 0]:
            count += 1
    return count


def count_cliques(host, n):
    edges = set(host.edges)
    count = 0
    for sub in itertools.combinations(range(host.vertex_count), n):
        if all((sub[i], sub[j]) in edges
               for i in range(len(sub)) for j in range(i + 1, len(sub))):
            count += 1
    return count


def soft_clique_sum(host, n, ratio):
    """sum over n-subsets S of ratio^(non-adjacent pairs inside S)."""
    edges = set(host.edges)
    total = 0.0
    for sub in itertools.combinations(range(host.vertex_count), n):
        missing = sum(1 for i in range(len(sub)) for j in range(i + 1, len(sub))
                      if (sub[i], sub[j]) not in edges)
        total += ratio**missing
    return total


def count_proper_colorings(g, counts):
    k = len(counts)
    counts = list(counts)
    count = 0
    for phi in itertools.product(range(k), repeat=g.vertex_count):
        used = [0] * k
        for c in phi:
            used[c] += 1
        if used != counts:
            continue
        if all(phi[u] != phi[v] for u, v in g.edges):
            count += 1
    return count


def soft_coloring_sum(g, counts, ratio):
    """sum over colorings with class sizes counts of ratio^(miscolored edges)."""
    k = len(counts)
    counts = list(counts)
    total = 0.0
    for phi in itertools.product(range(k), repeat=g.vertex_count):
        used = [0] * k
        for c in phi:
            used[c] += 1
        if used != counts:
            continue
        bad = sum(1 for u, v in g.edges if phi[u] == phi[v])
        total += ratio**bad
    return total
