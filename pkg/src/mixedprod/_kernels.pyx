# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels: minimal hitting sets and exact integer rank.

Same semantics as mixedprod._kernels_py; masks are limited to 64 bits
(the package caps vertex counts well below that).
"""

cdef extern from *:
    int __builtin_popcountll(unsigned long long)

BACKEND = "cython"


cdef tuple _bit_tuple(unsigned long long mask):
    cdef list out = []
    cdef int i = 0
    while mask:
        if mask & 1ULL:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


cdef void _search(list sets, unsigned long long chosen,
                  unsigned long long banned, list out):
    cdef unsigned long long t, best, avail, v, b
    cdef int pc, bestpc
    cdef list rest
    if not sets:
        out.append(chosen)
        return
    bestpc = 65
    best = 0
    for t in sets:
        pc = __builtin_popcountll(t)
        if pc < bestpc:
            bestpc = pc
            best = t
    avail = best & ~banned
    b = banned
    while avail:
        v = avail & (~avail + 1ULL)
        avail ^= v
        rest = []
        for t in sets:
            if not (t & v):
                rest.append(t)
        _search(rest, chosen | v, b, out)
        b |= v


def minimal_hitting_sets(masks, int nbits):
    """All minimal transversals of a family of bitmask sets."""
    cdef list sets = list(masks)
    cdef unsigned long long t, c, k
    for t in sets:
        if t == 0:
            return []
    if not sets:
        return [0]
    cdef list cand = []
    _search(sets, 0, 0, cand)
    cand.sort(key=lambda x: __builtin_popcountll(x))
    cdef list minimal = []
    cdef bint dominated
    for c in cand:
        dominated = False
        for k in minimal:
            if k & c == k:
                dominated = True
                break
        if not dominated:
            minimal.append(c)
    minimal.sort(key=_bit_tuple)
    return minimal


def rank_int(rows):
    """Exact rank via fraction-free (Bareiss) elimination.

    Entries stay Python ints: intermediate values are minors of the
    input and may exceed 64 bits.
    """
    cdef list m = [list(row) for row in rows]
    cdef Py_ssize_t nr = len(m)
    cdef Py_ssize_t nc = len(m[0]) if nr else 0
    cdef Py_ssize_t pr = 0, pc, r, c, piv
    cdef int rank = 0
    prev = 1
    cdef list mr, mp
    for pc in range(nc):
        piv = -1
        for r in range(pr, nr):
            if m[r][pc]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != pr:
            m[pr], m[piv] = m[piv], m[pr]
        mp = m[pr]
        pivval = mp[pc]
        for r in range(pr + 1, nr):
            mr = m[r]
            frv = mr[pc]
            for c in range(pc + 1, nc):
                mr[c] = (mr[c] * pivval - frv * mp[c]) // prev
            mr[pc] = 0
        prev = pivval
        pr += 1
        rank += 1
        if pr == nr:
            break
    return rank
