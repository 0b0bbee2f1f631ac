# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled search kernel for minimum 2-secure dominating set enumeration.

Same contract as `_pykernel`; limited to graphs with at most 64 vertices
(masks are uint64).  The import-time selector in `kernel.py` routes larger
inputs to the pure-Python fallback.
"""

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64


cdef inline bint _dominates(u64* nbr, int n, u64 members, u64 full) noexcept nogil:
    cdef u64 covered = 0
    cdef int v
    for v in range(n):
        if (members >> v) & 1:
            covered |= nbr[v]
    return (covered & full) == full


cdef bint _is_2sds(u64* nbr, int n, u64 smask, u64 full) noexcept nogil:
    cdef int u1, u2, v1, v2
    cdef u64 cand1, cand2, attack, swapped
    cdef bint ok
    for u1 in range(n):
        cand1 = nbr[u1] & smask
        if cand1 == 0:
            return False
        for u2 in range(u1 + 1, n):
            cand2 = nbr[u2] & smask
            if cand2 == 0:
                return False
            attack = ((<u64>1) << u1) | ((<u64>1) << u2)
            ok = False
            for v1 in range(n):
                if not (cand1 >> v1) & 1:
                    continue
                for v2 in range(n):
                    if v2 == v1 or not (cand2 >> v2) & 1:
                        continue
                    swapped = (smask & ~(((<u64>1) << v1) | ((<u64>1) << v2))) | attack
                    if _dominates(nbr, n, swapped, full):
                        ok = True
                        break
                if ok:
                    break
            if not ok:
                return False
    return True


def is_2sds(masks, int n, smask):
    """Pair-defense check for a dominating set given as a bitmask."""
    cdef u64* nbr = <u64*>malloc(n * sizeof(u64))
    cdef int i
    cdef u64 full = ((<u64>1) << n) - 1 if n < 64 else <u64>0xFFFFFFFFFFFFFFFF
    cdef bint result
    if nbr == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            nbr[i] = <u64>masks[i]
        result = _is_2sds(nbr, n, <u64>smask, full)
    finally:
        free(nbr)
    return bool(result)


def solve_level(masks, int k):
    """Scan all k-subsets in lexicographic order for a 2-secure dominating set.

    Returns (first valid subset or None, subsets examined).
    """
    cdef int n = len(masks)
    cdef u64 full = ((<u64>1) << n) - 1 if n < 64 else <u64>0xFFFFFFFFFFFFFFFF
    cdef u64* nbr = <u64*>malloc(n * sizeof(u64))
    cdef int* c = <int*>malloc(k * sizeof(int))
    cdef int i, j
    cdef long long examined = 0
    cdef u64 smask, covered
    cdef bint found = False
    if nbr == NULL or c == NULL:
        free(nbr)
        free(c)
        raise MemoryError()
    try:
        for i in range(n):
            nbr[i] = <u64>masks[i]
        if k > n or k <= 0:
            return None, 0
        for i in range(k):
            c[i] = i
        while True:
            examined += 1
            smask = 0
            covered = 0
            for i in range(k):
                smask |= (<u64>1) << c[i]
                covered |= nbr[c[i]]
            if (covered & full) == full and _is_2sds(nbr, n, smask, full):
                found = True
                break
            # next k-combination in lexicographic order
            j = k - 1
            while j >= 0 and c[j] == n - k + j:
                j -= 1
            if j < 0:
                break
            c[j] += 1
            for i in range(j + 1, k):
                c[i] = c[i - 1] + 1
        if found:
            return tuple(c[i] for i in range(k)), examined
        return None, examined
    finally:
        free(nbr)
        free(c)
