# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled twins of the pure-Python kernels.

Must match `pure` bit for bit: same traversal orders, same tie-breaking,
same witnesses. Any behavioral divergence is a bug; the parity tests
compare both backends on random inputs.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


def edge_connectivity(int n, indptr_obj, indices_obj, rev_obj, int s, int t):
    """Unit-capacity max flow by BFS augmentation; see pure.edge_connectivity."""
    cdef const int[:] indptr = indptr_obj
    cdef const int[:] indices = indices_obj
    cdef const int[:] rev = rev_obj
    cdef int narcs = indices.shape[0]
    cdef unsigned char *res = <unsigned char *> malloc(narcs if narcs else 1)
    cdef int *parent_arc = <int *> malloc(n * sizeof(int))
    cdef int *queue = <int *> malloc(n * sizeof(int))
    cdef unsigned char *reach = <unsigned char *> malloc(n if n else 1)
    if res == NULL or parent_arc == NULL or queue == NULL or reach == NULL:
        free(res); free(parent_arc); free(queue); free(reach)
        raise MemoryError()
    cdef int value = 0
    cdef int head, tail, v, u, p
    cdef bint found
    try:
        memset(res, 1, narcs)
        while True:
            for v in range(n):
                parent_arc[v] = -1
            memset(reach, 0, n)
            reach[s] = 1
            queue[0] = s
            head, tail = 0, 1
            found = False
            while head < tail:
                v = queue[head]
                head += 1
                if v == t:
                    found = True
                    break
                for p in range(indptr[v], indptr[v + 1]):
                    if res[p]:
                        u = indices[p]
                        if not reach[u]:
                            reach[u] = 1
                            parent_arc[u] = p
                            queue[tail] = u
                            tail += 1
            if not found:
                out = bytearray(n)
                for v in range(n):
                    out[v] = reach[v]
                return value, out
            v = t
            while v != s:
                p = parent_arc[v]
                res[p] -= 1
                res[rev[p]] += 1
                v = indices[rev[p]]
            value += 1
    finally:
        free(res); free(parent_arc); free(queue); free(reach)


cdef unsigned long long _low_bits(int count) nogil:
    if count >= 64:
        return <unsigned long long> 0xFFFFFFFFFFFFFFFFULL
    return (<unsigned long long> 1 << count) - 1


cdef bint _solve(int colored, int used, int n, int k,
                 unsigned long long *masks, int *degrees, int *colors,
                 unsigned long long *forb, unsigned char *cnt) nogil:
    cdef int v, best, c, u, idx
    cdef int best_sat, best_deg, sat
    cdef unsigned long long avail, low, bit, mk
    if colored == n:
        return True
    best = -1
    best_sat = -1
    best_deg = -1
    for v in range(n):
        if colors[v] == 0:
            sat = __builtin_popcountll(forb[v])
            if (sat > best_sat
                    or (sat == best_sat and degrees[v] > best_deg)
                    or (sat == best_sat and degrees[v] == best_deg and best != -1 and v < best)):
                best = v
                best_sat = sat
                best_deg = degrees[v]
    v = best
    avail = ~forb[v] & _low_bits(used + 1 if used < k else k)
    while avail:
        low = avail & (~avail + 1)
        c = __builtin_popcountll(low - 1) + 1
        colors[v] = c
        bit = low
        mk = masks[v]
        while mk:
            u = __builtin_popcountll((mk & (~mk + 1)) - 1)
            if colors[u] == 0:
                idx = u * k + c - 1
                cnt[idx] += 1
                if cnt[idx] == 1:
                    forb[u] |= bit
            mk &= mk - 1
        if _solve(colored + 1, c if c > used else used, n, k,
                  masks, degrees, colors, forb, cnt):
            return True
        colors[v] = 0
        mk = masks[v]
        while mk:
            u = __builtin_popcountll((mk & (~mk + 1)) - 1)
            if colors[u] == 0:
                idx = u * k + c - 1
                cnt[idx] -= 1
                if cnt[idx] == 0:
                    forb[u] &= ~bit
            mk &= mk - 1
        avail ^= low
    return False


def k_coloring(int n, masks_obj, degrees_obj, int k):
    """DSATUR branch and bound for n, k <= 64; see pure.k_coloring."""
    if n == 0:
        return []
    if k <= 0:
        return None
    if n > 64 or k > 64:
        raise ValueError("compiled kernel supports at most 64 vertices/colors")
    cdef unsigned long long *masks = <unsigned long long *> malloc(n * sizeof(unsigned long long))
    cdef int *degrees = <int *> malloc(n * sizeof(int))
    cdef int *colors = <int *> malloc(n * sizeof(int))
    cdef unsigned long long *forb = <unsigned long long *> malloc(n * sizeof(unsigned long long))
    cdef unsigned char *cnt = <unsigned char *> malloc(n * k)
    if masks == NULL or degrees == NULL or colors == NULL or forb == NULL or cnt == NULL:
        free(masks); free(degrees); free(colors); free(forb); free(cnt)
        raise MemoryError()
    cdef int i
    cdef bint ok
    try:
        for i in range(n):
            masks[i] = masks_obj[i]
            degrees[i] = degrees_obj[i]
            colors[i] = 0
            forb[i] = 0
        memset(cnt, 0, n * k)
        ok = _solve(0, 0, n, k, masks, degrees, colors, forb, cnt)
        if not ok:
            return None
        return [colors[i] for i in range(n)]
    finally:
        free(masks); free(degrees); free(colors); free(forb); free(cnt)
