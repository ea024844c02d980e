"""Pure-Python kernels for the two hot inner loops.

Both kernels are mirrored bit-for-bit by the optional Cython extension
(`_speedups`): identical traversal orders, identical tie-breaking, identical
witnesses. Parity is enforced by tests, so results never depend on which
backend got selected at import.
"""

from __future__ import annotations

from collections import deque


def edge_connectivity(n, indptr, indices, rev, s, t):
    """Max number of edge-disjoint s-t paths, plus the residual source side.

    Each undirected edge is modeled as two unit-capacity arcs. BFS
    augmentation (Edmonds-Karp); arcs are scanned in CSR order so the result
    and the returned reachability vector are canonical. Returns
    (value, reach) where reach[v] == 1 iff v is reachable from s in the
    final residual graph; the crossing edges of that side form a minimum cut.
    """
    res = bytearray([1]) * len(indices)
    parent_arc = [-1] * n
    value = 0
    while True:
        for i in range(n):
            parent_arc[i] = -1
        reach = bytearray(n)
        reach[s] = 1
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if v == t:
                break
            for p in range(indptr[v], indptr[v + 1]):
                if res[p]:
                    u = indices[p]
                    if not reach[u]:
                        reach[u] = 1
                        parent_arc[u] = p
                        queue.append(u)
        if not reach[t]:
            return value, reach
        v = t
        while v != s:
            p = parent_arc[v]
            res[p] -= 1
            res[rev[p]] += 1
            v = indices[rev[p]]
        value += 1


def k_coloring(n, masks, degrees, k):
    """Decide k-colorability; returns a coloring (colors 1..k) or None.

    DSATUR branch and bound: always branch on the uncolored vertex with the
    most distinctly-colored neighbors, ties by degree then smallest id.
    Color symmetry is broken by allowing at most one brand-new color per
    branch node. `masks` are neighbor bitmasks, so this kernel is usable at
    any n; the compiled twin takes over for n <= 64.
    """
    if n == 0:
        return []
    if k <= 0:
        return None
    colors = [0] * n
    # forb[v]: bitmask of palette bits (bit c-1) used by colored neighbors
    forb = [0] * n
    # cnt[v*k + (c-1)]: how many colored neighbors of v hold color c
    cnt = bytearray(n * k)

    def pick():
        best = -1
        best_key = None
        for v in range(n):
            if colors[v] == 0:
                key = (forb[v].bit_count(), degrees[v], -v)
                if best_key is None or key > best_key:
                    best, best_key = v, key
        return best

    def assign(v, c):
        colors[v] = c
        bit = 1 << (c - 1)
        mk = masks[v]
        u = 0
        while mk:
            low = mk & -mk
            u = low.bit_length() - 1
            if colors[u] == 0:
                idx = u * k + c - 1
                cnt[idx] += 1
                if cnt[idx] == 1:
                    forb[u] |= bit
            mk ^= low

    def unassign(v, c):
        colors[v] = 0
        bit = 1 << (c - 1)
        mk = masks[v]
        while mk:
            low = mk & -mk
            u = low.bit_length() - 1
            if colors[u] == 0:
                idx = u * k + c - 1
                cnt[idx] -= 1
                if cnt[idx] == 0:
                    forb[u] &= ~bit
            mk ^= low

    def solve(colored, used):
        if colored == n:
            return True
        v = pick()
        limit = used + 1 if used < k else k
        avail = ~forb[v] & ((1 << limit) - 1)
        while avail:
            low = avail & -avail
            c = low.bit_length()
            assign(v, c)
            if solve(colored + 1, max(used, c)):
                return True
            unassign(v, c)
            avail ^= low
        return False

    if solve(0, 0):
        return colors
    return None
