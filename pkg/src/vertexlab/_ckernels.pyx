# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled enumeration kernels; same contract as ``_pykernels``."""

from libc.stdlib cimport malloc, free


cdef struct Grid6:
    int R
    int C
    int *h      # R x (C+1)
    int *v      # (R+1) x C
    int *east
    int *south


cdef long long _rec6(Grid6 *g, int cell, list out):
    cdef int R = g.R, C = g.C
    cdef int i, j, W, N, E, S, k
    cdef long long total = 0
    if cell == R * C:
        if out is not None:
            out.append(tuple([g.h[k] for k in range(R * (C + 1))])
                       + tuple([g.v[k] for k in range((R + 1) * C)]))
        return 1
    i = cell // C
    j = cell % C
    W = g.h[i * (C + 1) + j]
    N = g.v[i * C + j]
    for E in (1, -1):
        if j == C - 1 and E != g.east[i]:
            continue
        S = E + N - W
        if S != 1 and S != -1:
            continue
        if i == R - 1 and S != g.south[j]:
            continue
        if j < C - 1:
            g.h[i * (C + 1) + j + 1] = E
        if i < R - 1:
            g.v[(i + 1) * C + j] = S
        total += _rec6(g, cell + 1, out)
    return total


cdef object _region6(west, east, north, south, bint collect):
    cdef int R = len(west), C = len(north)
    cdef Grid6 g
    cdef int i, j
    cdef list out = [] if collect else None
    cdef long long total
    if R == 0 or C == 0:
        if R == 0 and list(north) == list(south):
            return [tuple(north)] if collect else 1
        if C == 0 and list(west) == list(east):
            return [tuple(west)] if collect else 1
        return [] if collect else 0
    g.R = R
    g.C = C
    g.h = <int *> malloc(R * (C + 1) * sizeof(int))
    g.v = <int *> malloc((R + 1) * C * sizeof(int))
    g.east = <int *> malloc(R * sizeof(int))
    g.south = <int *> malloc(C * sizeof(int))
    try:
        for i in range(R * (C + 1)):
            g.h[i] = 0
        for i in range((R + 1) * C):
            g.v[i] = 0
        for i in range(R):
            g.h[i * (C + 1)] = west[i]
            g.h[i * (C + 1) + C] = east[i]
            g.east[i] = east[i]
        for j in range(C):
            g.v[j] = north[j]
            g.v[R * C + j] = south[j]
            g.south[j] = south[j]
        total = _rec6(&g, 0, out)
    finally:
        free(g.h)
        free(g.v)
        free(g.east)
        free(g.south)
    return out if collect else total


def enum_region_6v(west, east, north, south):
    """All ice configurations of a rectangular region with fixed boundary."""
    return _region6(west, east, north, south, True)


def count_region_6v(west, east, north, south):
    return _region6(west, east, north, south, False)


cdef struct Grid20:
    int n
    int m
    int *h      # m x (n+1)
    int *v      # (m+1) x n
    int *d      # (m+1) x (n+1)


cdef long long _rec20(Grid20 *g, int cell, list out):
    cdef int n = g.n, m = g.m
    cdef int x, y, flux, E, N, NE, k
    cdef bint lastx, lasty
    cdef long long total = 0
    if cell == n * m:
        if out is not None:
            out.append(tuple([g.h[k] for k in range(m * (n + 1))])
                       + tuple([g.v[k] for k in range((m + 1) * n)])
                       + tuple([g.d[k] for k in range((m + 1) * (n + 1))]))
        return 1
    y = cell // n
    x = cell % n
    flux = g.h[y * (n + 1) + x] + g.v[y * n + x] + g.d[y * (n + 1) + x]
    lastx = x == n - 1
    lasty = y == m - 1
    for E in (1, -1):
        if lastx and E != g.h[y * (n + 1) + n]:
            continue
        for N in (1, -1):
            if lasty and N != g.v[m * n + x]:
                continue
            NE = flux - E - N
            if NE != 1 and NE != -1:
                continue
            if (lastx or lasty) and NE != g.d[(y + 1) * (n + 1) + x + 1]:
                continue
            if not lastx:
                g.h[y * (n + 1) + x + 1] = E
            if not lasty:
                g.v[(y + 1) * n + x] = N
            if not (lastx or lasty):
                g.d[(y + 1) * (n + 1) + x + 1] = NE
            total += _rec20(g, cell + 1, out)
    return total


cdef object _search20(int n, bint collect):
    cdef int m = 2 * n - 1
    cdef Grid20 g
    cdef int x, y, i
    cdef list out = [] if collect else None
    cdef long long total
    g.n = n
    g.m = m
    g.h = <int *> malloc(m * (n + 1) * sizeof(int))
    g.v = <int *> malloc((m + 1) * n * sizeof(int))
    g.d = <int *> malloc((m + 1) * (n + 1) * sizeof(int))
    try:
        for i in range(m * (n + 1)):
            g.h[i] = 0
        for i in range((m + 1) * n):
            g.v[i] = 0
        for i in range((m + 1) * (n + 1)):
            g.d[i] = 0
        for y in range(m):
            g.h[y * (n + 1)] = 1
            g.h[y * (n + 1) + n] = -1
        for x in range(n):
            g.v[x] = -1
            g.v[m * n + x] = 1
        for y in range(m):
            for x in range(n):
                if x == 0:
                    g.d[y * (n + 1) + x] = 1
                elif y == 0:
                    g.d[y * (n + 1) + x] = -1
                if x == n - 1 or y == m - 1:
                    g.d[(y + 1) * (n + 1) + x + 1] = 1
        total = _rec20(&g, 0, out)
    finally:
        free(g.h)
        free(g.v)
        free(g.d)
    return out if collect else total


def enum_dwbc_20v(int n):
    """All twenty-vertex DWBC configurations on n columns by 2n-1 rows."""
    return _search20(n, True)


def count_dwbc_20v(int n):
    return _search20(n, False)
