# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the functions in ``_purekernels.py`` (same signatures)."""

from libc.stdlib cimport malloc, calloc, free


cdef int _next_atom(int k, char* done, int* lefts, int* rights, int* highest) noexcept:
    cdef int a, first = -1
    for a in range(k):
        if done[a]:
            continue
        if first < 0:
            first = a
        if highest[lefts[a]] or highest[rights[a]]:
            return a
    return first


cdef class _Atoms:
    cdef int k, nvars
    cdef int* kinds
    cdef int* lefts
    cdef int* rights

    def __cinit__(self, kinds, lefts, rights, int nvars):
        cdef int a
        self.k = len(kinds)
        self.nvars = nvars
        self.kinds = <int*>malloc(max(self.k, 1) * sizeof(int))
        self.lefts = <int*>malloc(max(self.k, 1) * sizeof(int))
        self.rights = <int*>malloc(max(self.k, 1) * sizeof(int))
        if not self.kinds or not self.lefts or not self.rights:
            raise MemoryError()
        for a in range(self.k):
            self.kinds[a] = kinds[a]
            self.lefts[a] = lefts[a]
            self.rights[a] = rights[a]

    def __dealloc__(self):
        free(self.kinds)
        free(self.lefts)
        free(self.rights)


def canonical_indices(kinds, lefts, rights, int nvars):
    cdef _Atoms at = _Atoms(kinds, lefts, rights, nvars)
    cdef int k = at.k, a, it, lv, rv, li, ri, start = 2 * at.k
    cdef int* highest = <int*>calloc(max(nvars, 1), sizeof(int))
    cdef char* done = <char*>calloc(max(k, 1), sizeof(char))
    out = [0] * (2 * k)
    try:
        for it in range(k):
            a = _next_atom(k, done, at.lefts, at.rights, highest)
            lv = at.lefts[a]
            rv = at.rights[a]
            if highest[lv]:
                li = highest[lv]
                ri = li + at.kinds[a]
            elif highest[rv]:
                ri = highest[rv]
                li = ri - at.kinds[a]
            else:
                li = start
                ri = li + at.kinds[a]
            out[2 * a] = li
            out[2 * a + 1] = ri
            if li > highest[lv]:
                highest[lv] = li
            if ri > highest[rv]:
                highest[rv] = ri
            done[a] = 1
    finally:
        free(highest)
        free(done)
    return out


def acyclic_indices(kinds, lefts, rights, int nvars):
    cdef _Atoms at = _Atoms(kinds, lefts, rights, nvars)
    cdef int k = at.k, a, it, lv, rv, li, ri, hl, hr
    cdef int* highest = <int*>calloc(max(nvars, 1), sizeof(int))
    cdef char* done = <char*>calloc(max(k, 1), sizeof(char))
    out = [0] * (2 * k)
    try:
        for it in range(k):
            a = _next_atom(k, done, at.lefts, at.rights, highest)
            lv = at.lefts[a]
            rv = at.rights[a]
            hl = highest[lv]
            hr = highest[rv]
            if hl == 0 and hr == 0:
                li = 1
                ri = 2
            elif hl >= hr:
                li = hl
                ri = hl + 1
            else:
                ri = hr
                li = hr + 1
            out[2 * a] = li
            out[2 * a + 1] = ri
            if li > highest[lv]:
                highest[lv] = li
            if ri > highest[rv]:
                highest[rv] = ri
            done[a] = 1
    finally:
        free(highest)
        free(done)
    return out


def rng_total(lefts, rights, indices, int nvars):
    seen = [set() for _ in range(nvars)]
    cdef Py_ssize_t a
    for a in range(len(lefts)):
        seen[lefts[a]].add(indices[2 * a])
        seen[rights[a]].add(indices[2 * a + 1])
    return sum([len(s) for s in seen])


cdef extern from *:
    int __builtin_popcountll(unsigned long long) noexcept


cdef inline int _popcount(unsigned long long m) noexcept:
    return __builtin_popcountll(m)


def min_rng_bruteforce(kinds, lefts, rights, int nvars, int bound):
    if bound + 1 >= 64:
        raise ValueError("compiled brute force needs bound < 63")
    cdef _Atoms at = _Atoms(kinds, lefts, rights, nvars)
    cdef int k = at.k, a, v, total, best = -1
    cdef int* base = <int*>calloc(max(k, 1), sizeof(int))
    cdef int* top = <int*>calloc(max(k, 1), sizeof(int))
    cdef unsigned long long* masks = <unsigned long long*>calloc(max(nvars, 1), sizeof(unsigned long long))
    try:
        for a in range(k):
            top[a] = bound - 1 if at.kinds[a] else bound
            if top[a] < 0:
                return None
        while True:
            for v in range(nvars):
                masks[v] = 0
            for a in range(k):
                masks[at.lefts[a]] |= 1ULL << base[a]
                masks[at.rights[a]] |= 1ULL << (base[a] + at.kinds[a])
            total = 0
            for v in range(nvars):
                total += _popcount(masks[v])
            if best < 0 or total < best:
                best = total
            # odometer step
            a = k - 1
            while a >= 0 and base[a] == top[a]:
                base[a] = 0
                a -= 1
            if a < 0:
                break
            base[a] += 1
    finally:
        free(base)
        free(top)
        free(masks)
    return best
