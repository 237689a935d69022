# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled enumeration kernels.

Mirrors pfgm._kernels_py operation for operation: same visit orders, same
accumulation chains, same scalar arithmetic. Scalars that are real in the
recursion (falling-factorial weights) are cast to double complex before
multiplying so the complex product uses the full two-by-two formula exactly
as CPython's complex type does. Any change here must be made in the pure
backend as well, and vice versa.
"""

from libc.stdlib cimport malloc, free


cdef void _cms(long long v, long long n, long long k,
               double complex prod,
               long long* counts, long long* pinned, long long* color,
               long long* nptr, long long* nw, long long* ne,
               double complex* blocks, long long kk,
               double complex* total) noexcept:
    cdef long long c, idx, lo, hi, pv, c_first, c_last
    cdef double complex p
    if v == n:
        total[0] = total[0] + prod
        return
    pv = pinned[v]
    lo = nptr[v]
    hi = nptr[v + 1]
    if pv >= 0:
        c_first = pv
        c_last = pv + 1
    else:
        c_first = 0
        c_last = k
    for c in range(c_first, c_last):
        if counts[c] == 0:
            continue
        p = prod
        for idx in range(lo, hi):
            p = p * blocks[ne[idx] * kk + c * k + color[nw[idx]]]
        counts[c] -= 1
        color[v] = c
        _cms(v + 1, n, k, p, counts, pinned, color, nptr, nw, ne,
             blocks, kk, total)
        counts[c] += 1


def constrained_map_sum(long long n, long long k,
                        long long[::1] counts, long long[::1] pinned,
                        long long[::1] nbr_ptr, long long[::1] nbr_w,
                        long long[::1] nbr_e,
                        double complex[:, :, ::1] blocks):
    """Sum of per-edge weight products over color assignments.

    Same contract as the pure backend: counts[c] caps the uses of color c,
    pinned[v] >= 0 fixes vertex v, the CSR triple lists already-visited
    neighbors, blocks[e, c1, c2] is the edge weight under those endpoint
    colors.
    """
    cdef double complex total = 0
    if n == 0:
        return complex(1.0)
    cdef long long* cnt = <long long*> malloc(k * sizeof(long long))
    cdef long long* col = <long long*> malloc(n * sizeof(long long))
    if cnt == NULL or col == NULL:
        free(cnt)
        free(col)
        raise MemoryError()
    cdef long long i
    for i in range(k):
        cnt[i] = counts[i]
    for i in range(n):
        col[i] = -1
    cdef long long* nwp = NULL
    cdef long long* nep = NULL
    cdef double complex* bp = NULL
    if nbr_w.shape[0] > 0:
        nwp = &nbr_w[0]
        nep = &nbr_e[0]
    if blocks.shape[0] > 0:
        bp = &blocks[0, 0, 0]
    try:
        _cms(0, n, k, 1.0 + 0j, cnt, &pinned[0], col,
             &nbr_ptr[0], nwp, nep, bp, k * k, &total)
    finally:
        free(cnt)
        free(col)
    return total


cdef void _dds(long long t, long long s, long long j, long long k,
               double wff, double complex prod,
               long long* used, long long* mu, long long* color,
               long long* ea, long long* eb, long long* comp,
               long long* subset,
               double complex* bm1, long long kk,
               double complex* total) noexcept:
    cdef long long c, l
    cdef double complex p
    cdef double factor
    if t == s:
        total[0] = total[0] + prod * (<double complex> wff)
        return
    for c in range(k):
        if used[c] == mu[c]:
            continue
        factor = <double> (mu[c] - used[c])
        color[t] = c
        p = prod
        for l in range(j):
            if comp[l] == t:
                p = p * bm1[subset[l] * kk + color[ea[l]] * k + color[eb[l]]]
        used[c] += 1
        _dds(t + 1, s, j, k, wff * factor, p, used, mu, color,
             ea, eb, comp, subset, bm1, kk, total)
        used[c] -= 1


def derivative_subset_sum(long long j, long long n, long long k,
                          long long[::1] sub_u, long long[::1] sub_v,
                          double complex[:, :, ::1] bm1,
                          long long[::1] mu):
    """Inner sum of the j-th normalized interpolation derivative.

    Same contract as the pure backend: lexicographic j-subsets of the given
    edges, endpoint colorings bounded by mu, leaf weight is the running
    falling-factorial ratio times the product of bm1 factors.
    """
    cdef long long num_edges = sub_u.shape[0]
    if j < 0:
        raise ValueError("j must be nonnegative")
    if j == 0:
        return complex(1.0)
    if j > num_edges:
        return complex(0.0)
    cdef double complex total = 0
    cdef long long* subset = <long long*> malloc(j * sizeof(long long))
    cdef long long* ea = <long long*> malloc(j * sizeof(long long))
    cdef long long* eb = <long long*> malloc(j * sizeof(long long))
    cdef long long* comp = <long long*> malloc(j * sizeof(long long))
    cdef long long* verts = <long long*> malloc(2 * j * sizeof(long long))
    cdef long long* color = <long long*> malloc(2 * j * sizeof(long long))
    cdef long long* used = <long long*> malloc(k * sizeof(long long))
    cdef long long* local_of = <long long*> malloc(n * sizeof(long long))
    if (subset == NULL or ea == NULL or eb == NULL or comp == NULL or
            verts == NULL or color == NULL or used == NULL or
            local_of == NULL):
        free(subset); free(ea); free(eb); free(comp)
        free(verts); free(color); free(used); free(local_of)
        raise MemoryError()
    cdef long long l, i, e, w, s, t, r
    cdef double denom
    cdef double complex* bp = &bm1[0, 0, 0]
    cdef long long kk = k * k
    for i in range(k):
        used[i] = 0
    for i in range(n):
        local_of[i] = -1
    for l in range(j):
        subset[l] = l
    try:
        while True:
            s = 0
            for l in range(j):
                e = subset[l]
                w = sub_u[e]
                if local_of[w] < 0:
                    local_of[w] = s
                    verts[s] = w
                    s += 1
                w = sub_v[e]
                if local_of[w] < 0:
                    local_of[w] = s
                    verts[s] = w
                    s += 1
                ea[l] = local_of[sub_u[e]]
                eb[l] = local_of[sub_v[e]]
                comp[l] = ea[l] if ea[l] > eb[l] else eb[l]
            denom = 1.0
            for r in range(s):
                denom *= <double> (n - r)
            _dds(0, s, j, k, 1.0 / denom, 1.0 + 0j, used, &mu[0], color,
                 ea, eb, comp, subset, bp, kk, &total)
            for t in range(s):
                local_of[verts[t]] = -1
            i = j - 1
            while i >= 0 and subset[i] == num_edges - j + i:
                i -= 1
            if i < 0:
                break
            subset[i] += 1
            for l in range(i + 1, j):
                subset[l] = subset[l - 1] + 1
    finally:
        free(subset); free(ea); free(eb); free(comp)
        free(verts); free(color); free(used); free(local_of)
    return total
