# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled statistic kernels.  Semantics match ``pure`` exactly; the census
iterates permutations with an in-place lexicographic successor so the whole
sweep stays in C."""

from . import pure as _pure

DEF MAXN = 64


def stat_tuple(values):
    cdef Py_ssize_t n = len(values)
    if n > MAXN:
        return _pure.stat_tuple(values)
    cdef int v[MAXN]
    cdef unsigned char seen[MAXN]
    cdef Py_ssize_t i, j
    cdef int x
    cdef long fixed = 0, exc = 0, dexc = 0, inv = 0, cyc = 0
    for i in range(n):
        v[i] = values[i]
        seen[i] = 0
    for i in range(n):
        x = v[i]
        if x == i + 1:
            fixed += 1
        elif x > i + 1:
            exc += 1
            if v[x - 1] > x:
                dexc += 1
        for j in range(i + 1, n):
            if x > v[j]:
                inv += 1
    for i in range(n):
        if not seen[i]:
            cyc += 1
            j = i
            while not seen[j]:
                seen[j] = 1
                j = v[j] - 1
    return (fixed, exc, dexc, cyc, inv)


def census_stats(n):
    if n > MAXN:
        return _pure.census_stats(n)
    cdef int v[MAXN]
    cdef unsigned char seen[MAXN]
    cdef Py_ssize_t nn = n, i, j, k
    cdef int x, tmp
    cdef long fixed, exc, dexc, inv, cyc
    cdef dict counts = {}
    for i in range(nn):
        v[i] = i + 1
    while True:
        fixed = exc = dexc = inv = cyc = 0
        for i in range(nn):
            seen[i] = 0
        for i in range(nn):
            x = v[i]
            if x == i + 1:
                fixed += 1
            elif x > i + 1:
                exc += 1
                if v[x - 1] > x:
                    dexc += 1
            for j in range(i + 1, nn):
                if x > v[j]:
                    inv += 1
        for i in range(nn):
            if not seen[i]:
                cyc += 1
                j = i
                while not seen[j]:
                    seen[j] = 1
                    j = v[j] - 1
        key = (fixed, exc, dexc, cyc, inv)
        if key in counts:
            counts[key] += 1
        else:
            counts[key] = 1
        # lexicographic successor
        i = nn - 2
        while i >= 0 and v[i] >= v[i + 1]:
            i -= 1
        if i < 0:
            break
        k = nn - 1
        while v[k] <= v[i]:
            k -= 1
        tmp = v[i]; v[i] = v[k]; v[k] = tmp
        j = i + 1
        k = nn - 1
        while j < k:
            tmp = v[j]; v[j] = v[k]; v[k] = tmp
            j += 1
            k -= 1
    return counts
