# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled complete-labelling search over 64-bit argument masks.

Same algorithm and output order as ``_labelling_py``; limited to 64 arguments.
"""

from libc.stdint cimport uint64_t

cdef enum:
    MAXN = 64


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef int _propagate(const uint64_t* att, int n, uint64_t full,
                    uint64_t* lab_in, uint64_t* lab_out, uint64_t* lab_und) nogil:
    cdef uint64_t li = lab_in[0], lo = lab_out[0], lu = lab_und[0]
    cdef uint64_t must_out, m, low, free_, bit, a
    cdef int x, changed
    while True:
        changed = 0
        must_out = 0
        m = li
        while m:
            low = m & (~m + 1)
            must_out |= att[__builtin_ctzll(m)]
            m ^= low
        if must_out & (li | lu):
            return 0
        if must_out & ~lo:
            lo |= must_out
            changed = 1
        free_ = full & ~(li | lo | lu)
        for x in range(n):
            bit = (<uint64_t>1) << x
            a = att[x]
            if bit & li:
                continue
            if bit & lo:
                if not (a & li) and not (a & free_):
                    return 0
            elif bit & lu:
                if (a & li) or not (a & ~lo):
                    return 0
            elif a & li:
                lo |= bit
                free_ &= ~bit
                changed = 1
            elif not (a & ~lo):
                li |= bit
                free_ &= ~bit
                changed = 1
        if not changed:
            lab_in[0] = li
            lab_out[0] = lo
            lab_und[0] = lu
            return 1


cdef void _search(const uint64_t* att, int n, uint64_t full,
                  uint64_t li, uint64_t lo, uint64_t lu, list found):
    if not _propagate(att, n, full, &li, &lo, &lu):
        return
    cdef uint64_t free_ = full & ~(li | lo | lu)
    if not free_:
        found.append((li, lo))
        return
    cdef uint64_t bit = free_ & (~free_ + 1)
    _search(att, n, full, li | bit, lo, lu, found)
    _search(att, n, full, li, lo | bit, lu, found)
    _search(att, n, full, li, lo, lu | bit, found)


def complete_labellings(int n, attackers):
    if n > MAXN:
        raise ValueError(f"compiled kernel supports at most {MAXN} arguments")
    cdef uint64_t att[MAXN]
    cdef int i
    for i in range(n):
        att[i] = <uint64_t>attackers[i]
    cdef uint64_t full = ((<uint64_t>1) << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    found = []
    _search(att, n, full, 0, 0, 0, found)
    return found
