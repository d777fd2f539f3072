# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of skein._core_py; behaviour must match it bit for bit.

canon_key follows the same individualization-refinement scheme with typed
refinement loops; state_circle_counts runs the 2^c union-find sweep on C
arrays.
"""

from libc.stdlib cimport free, malloc


def _dense_ranks(signatures):
    order = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
    return [order[s] for s in signatures]


def _refine(colors, nbr):
    cdef Py_ssize_t n = len(colors)
    cdef Py_ssize_t v
    while True:
        sigs = [
            (colors[v], tuple(sorted([colors[u] for u in nbr[v]])))
            for v in range(n)
        ]
        new = _dense_ranks(sigs)
        if new == colors:
            return colors
        colors = new


def canon_key(int n, edges):
    """Canonical byte encoding of the multigraph on vertices 0..n-1."""
    if n > 255:
        raise ValueError("canon_key supports at most 255 vertices")
    if n == 0:
        return bytes([0, len(edges) & 0xFF])
    cdef int u, v
    loops = [0] * n
    nbr = [[] for _ in range(n)]
    for u, v in edges:
        if u == v:
            loops[u] += 2
        else:
            nbr[u].append(v)
            nbr[v].append(u)
    init = [(len(nbr[w]) + loops[w], loops[w]) for w in range(n)]
    colors = _refine(_dense_ranks(init), nbr)

    best = [None]

    def encode(perm_color):
        pairs = sorted(
            (
                (perm_color[a], perm_color[b])
                if perm_color[a] <= perm_color[b]
                else (perm_color[b], perm_color[a])
            )
            for a, b in edges
        )
        out = bytearray([n, len(pairs)])
        for a, b in pairs:
            out.append(a)
            out.append(b)
        return bytes(out)

    def twin_reps(cell):
        # vertices swapped by an automorphism fixing everything else yield
        # identical subtrees; branch on one representative per twin group
        reps = []
        out = []
        for w in cell:
            matched = False
            for r in reps:
                if loops[r] != loops[w]:
                    continue
                a = sorted([x for x in nbr[r] if x != w])
                b = sorted([x for x in nbr[w] if x != r])
                if a == b:
                    matched = True
                    break
            if not matched:
                reps.append(w)
                out.append(w)
        return out

    def search(colors):
        counts = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = -1
        for c in sorted(counts):
            if counts[c] > 1:
                target = c
                break
        if target < 0:
            enc = encode(colors)
            if best[0] is None or enc < best[0]:
                best[0] = enc
            return
        cell = [w for w in range(n) if colors[w] == target]
        for w in twin_reps(cell):
            sigs = [(0 if u == w else 1, colors[u]) for u in range(n)]
            search(_refine(_dense_ranks(sigs), nbr))

    search(colors)
    return best[0]


def state_circle_counts(int n_arcs, crossings):
    """Circle counts for every smoothing state of a vertexless diagram."""
    cdef int c = len(crossings)
    cdef int n_ends = 2 * n_arcs
    cdef long n_states = 1 << c
    cdef int *parent = <int *> malloc(n_ends * sizeof(int))
    cdef int *xend = <int *> malloc(4 * c * sizeof(int))
    if parent == NULL or xend == NULL:
        if parent != NULL:
            free(parent)
        if xend != NULL:
            free(xend)
        raise MemoryError()
    cdef int i, j, a, comps, x, y, rx, ry
    cdef long mask
    for i in range(c):
        e0, e1, e2, e3 = crossings[i]
        xend[4 * i + 0] = e0
        xend[4 * i + 1] = e1
        xend[4 * i + 2] = e2
        xend[4 * i + 3] = e3
    counts = []
    try:
        for mask in range(n_states):
            for i in range(n_ends):
                parent[i] = i
            comps = n_ends
            for a in range(n_arcs):
                x = 2 * a
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                y = 2 * a + 1
                while parent[y] != y:
                    parent[y] = parent[parent[y]]
                    y = parent[y]
                if x != y:
                    parent[x] = y
                    comps -= 1
            for i in range(c):
                for j in range(2):
                    if (mask >> i) & 1:
                        x = xend[4 * i] if j == 0 else xend[4 * i + 1]
                        y = xend[4 * i + 3] if j == 0 else xend[4 * i + 2]
                    else:
                        x = xend[4 * i] if j == 0 else xend[4 * i + 2]
                        y = xend[4 * i + 1] if j == 0 else xend[4 * i + 3]
                    while parent[x] != x:
                        parent[x] = parent[parent[x]]
                        x = parent[x]
                    while parent[y] != y:
                        parent[y] = parent[parent[y]]
                        y = parent[y]
                    if x != y:
                        parent[x] = y
                        comps -= 1
            counts.append(comps)
    finally:
        free(parent)
        free(xend)
    return counts
