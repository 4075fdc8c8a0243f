"""Pure-Python search core: BFS over edge-contraction quotients.

States are vertex partitions of a connected graph, canonically encoded as
restricted-growth label strings packed into a single integer (vertex 0 in
the most significant field, so integer order equals lexicographic label
order). Level L of the search holds exactly the partitions reachable by L
contractions; the first level containing a target quotient gives the
minimum contraction count.

The compiled twin in ``_speedups`` implements the same contract for
n <= 16; this module handles any n up to 64 and is the fallback selected
at import time by :mod:`graphcontract.oracle`.
"""

from __future__ import annotations

MAX_N = 64

PATH = 0
CYCLE = 1
ANCHORED_PATH = 2


def _width(n: int) -> int:
    return 4 if n <= 16 else 6


def contraction_search(n, adj, target, anchor_a=-1, anchor_b=-1,
                       max_level=None, collect=0):
    """Breadth-first search for the nearest target quotient.

    n          -- vertex count (graph must be connected)
    adj        -- sequence of n neighbour bitmasks
    target     -- PATH, CYCLE, or ANCHORED_PATH
    anchor_a/b -- vertex indices for ANCHORED_PATH (end blocks must hold them)
    max_level  -- deepest contraction count explored, inclusive
    collect    -- 0: no states, 1: canonically smallest hit, 2: all hits

    Returns (found_level, explored, hits). found_level is -1 when no target
    quotient exists within max_level; explored counts distinct states over
    all scanned levels; hits are partitions given as tuples of block
    bitmasks sorted ascending.
    """
    if n < 1 or n > MAX_N:
        raise ValueError(f"vertex count {n} outside supported range 1..{MAX_N}")
    if max_level is None:
        max_level = n - 1
    if max_level < 0:
        return -1, 0, []

    w = _width(n)
    shifts = [(n - 1 - v) * w for v in range(n)]
    mask_w = (1 << w) - 1
    adj = list(adj)

    key0 = 0  # identity partition: label[v] = v
    for v in range(n):
        key0 |= v << shifts[v]
    level = [key0]
    explored = 0
    depth = 0

    while True:
        explored += len(level)
        hits = []
        for key in level:
            labels = [(key >> s) & mask_w for s in shifts]
            p = n - depth
            masks = [0] * p
            nbr = [0] * p
            for v in range(n):
                b = labels[v]
                masks[b] |= 1 << v
                nbr[b] |= adj[v]
            if _is_hit(target, p, masks, nbr, anchor_a, anchor_b):
                hits.append((key, masks))
        if hits:
            if collect == 0:
                payload = []
            elif collect == 1:
                payload = [tuple(sorted(min(hits)[1]))]
            else:
                payload = [tuple(sorted(m)) for _, m in sorted(hits)]
            return depth, explored, payload
        if depth == max_level:
            return -1, explored, []

        nxt = set()
        for key in level:
            labels = [(key >> s) & mask_w for s in shifts]
            p = n - depth
            masks = [0] * p
            nbr = [0] * p
            for v in range(n):
                b = labels[v]
                masks[b] |= 1 << v
                nbr[b] |= adj[v]
            for b1 in range(p):
                nb1 = nbr[b1]
                for b2 in range(b1 + 1, p):
                    if nb1 & masks[b2]:
                        child = 0
                        for v in range(n):
                            l = labels[v]
                            if l == b2:
                                l = b1
                            elif l > b2:
                                l -= 1
                            child |= l << shifts[v]
                        nxt.add(child)
        if not nxt:
            return -1, explored, []
        level = sorted(nxt)
        depth += 1


def _is_hit(target, p, masks, nbr, anchor_a, anchor_b):
    if target == CYCLE:
        if p < 3:
            return False
        for b in range(p):
            deg = 0
            nb = nbr[b]
            for c in range(p):
                if c != b and nb & masks[c]:
                    deg += 1
                    if deg > 2:
                        return False
            if deg != 2:
                return False
        return True

    # path-shaped quotient: connected (always true for contractions of a
    # connected graph), at most degree 2, and exactly p - 1 edges
    if p == 1:
        if target == PATH:
            return True
        return True  # single block holds every vertex, anchors included
    edges = 0
    ends = []
    for b in range(p):
        deg = 0
        nb = nbr[b]
        for c in range(p):
            if c != b and nb & masks[c]:
                deg += 1
        if deg > 2:
            return False
        if deg <= 1:
            ends.append(b)
        edges += deg
    if edges != 2 * (p - 1) or len(ends) != 2:
        return False
    if target == PATH:
        return True
    e1, e2 = ends
    bit_a = 1 << anchor_a
    bit_b = 1 << anchor_b
    return ((masks[e1] & bit_a and masks[e2] & bit_b)
            or (masks[e1] & bit_b and masks[e2] & bit_a))
