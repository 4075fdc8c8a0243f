# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled search core: BFS over edge-contraction quotients (n <= 16).

Mirrors the contract of ``graphcontract._pysearch.contraction_search``
exactly; see that module for the state encoding and result format.
"""

from libc.stdint cimport uint32_t, uint64_t
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector

MAX_N = 16

PATH = 0
CYCLE = 1
ANCHORED_PATH = 2

DEF WIDTH = 4


cdef inline bint _is_hit(int target, int p, uint32_t* masks, uint32_t* nbr,
                         uint32_t bit_a, uint32_t bit_b) nogil:
    cdef int b, c, deg, edges, nends
    cdef int e1 = -1, e2 = -1
    cdef uint32_t nb
    if target == CYCLE:
        if p < 3:
            return False
        for b in range(p):
            deg = 0
            nb = nbr[b]
            for c in range(p):
                if c != b and (nb & masks[c]):
                    deg += 1
                    if deg > 2:
                        return False
            if deg != 2:
                return False
        return True
    if p == 1:
        return True
    edges = 0
    nends = 0
    for b in range(p):
        deg = 0
        nb = nbr[b]
        for c in range(p):
            if c != b and (nb & masks[c]):
                deg += 1
        if deg > 2:
            return False
        if deg <= 1:
            if nends == 0:
                e1 = b
            elif nends == 1:
                e2 = b
            nends += 1
        edges += deg
    if edges != 2 * (p - 1) or nends != 2:
        return False
    if target == PATH:
        return True
    return ((masks[e1] & bit_a and masks[e2] & bit_b)
            or (masks[e1] & bit_b and masks[e2] & bit_a))


def contraction_search(int n, adj, int target, int anchor_a=-1,
                       int anchor_b=-1, max_level=None, int collect=0):
    """Compiled equivalent of ``_pysearch.contraction_search`` (n <= 16)."""
    cdef int lim
    if n < 1 or n > 16:
        raise ValueError(f"vertex count {n} outside supported range 1..16")
    lim = n - 1 if max_level is None else <int> max_level
    if lim < 0:
        return -1, 0, []

    cdef uint32_t cadj[16]
    cdef int v, b, c, depth, p, b1, b2, l
    for v in range(n):
        cadj[v] = <uint32_t> adj[v]

    cdef int shifts[16]
    for v in range(n):
        shifts[v] = (n - 1 - v) * WIDTH

    cdef uint32_t bit_a = 0, bit_b = 0
    if anchor_a >= 0:
        bit_a = <uint32_t> 1 << anchor_a
    if anchor_b >= 0:
        bit_b = <uint32_t> 1 << anchor_b

    cdef vector[uint64_t] level
    cdef vector[uint64_t] hit_keys
    cdef unordered_set[uint64_t] seen
    cdef vector[uint64_t] nxt
    cdef uint64_t key0 = 0, key, child, best
    cdef int labels[16]
    cdef uint32_t masks[16]
    cdef uint32_t nbr[16]
    cdef uint32_t nb1
    cdef long explored = 0
    cdef size_t i
    cdef bint found

    for v in range(n):
        key0 |= (<uint64_t> v) << shifts[v]
    level.push_back(key0)
    depth = 0

    while True:
        explored += <long> level.size()
        hit_keys.clear()
        p = n - depth
        for i in range(level.size()):
            key = level[i]
            for b in range(p):
                masks[b] = 0
                nbr[b] = 0
            for v in range(n):
                b = <int> ((key >> shifts[v]) & 15)
                labels[v] = b
                masks[b] |= <uint32_t> 1 << v
                nbr[b] |= cadj[v]
            if _is_hit(target, p, masks, nbr, bit_a, bit_b):
                hit_keys.push_back(key)
        if hit_keys.size() > 0:
            if collect == 0:
                return depth, explored, []
            if collect == 1:
                best = hit_keys[0]
                for i in range(1, hit_keys.size()):
                    if hit_keys[i] < best:
                        best = hit_keys[i]
                return depth, explored, [_decode(n, p, best, shifts)]
            keys = sorted([hit_keys[i] for i in range(hit_keys.size())])
            return depth, explored, [_decode(n, p, k, shifts) for k in keys]
        if depth == lim:
            return -1, explored, []

        seen.clear()
        nxt.clear()
        for i in range(level.size()):
            key = level[i]
            for b in range(p):
                masks[b] = 0
                nbr[b] = 0
            for v in range(n):
                b = <int> ((key >> shifts[v]) & 15)
                labels[v] = b
                masks[b] |= <uint32_t> 1 << v
                nbr[b] |= cadj[v]
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
                            child |= (<uint64_t> l) << shifts[v]
                        if seen.insert(child).second:
                            nxt.push_back(child)
        if nxt.size() == 0:
            return -1, explored, []
        level.swap(nxt)
        depth += 1


cdef _decode(int n, int p, uint64_t key, int* shifts):
    cdef int v, b
    cdef uint32_t masks[16]
    for b in range(p):
        masks[b] = 0
    for v in range(n):
        b = <int> ((key >> shifts[v]) & 15)
        masks[b] |= <uint32_t> 1 << v
    return tuple(sorted([masks[b] for b in range(p)]))
