"""Pure-Python enumeration kernels.

These mirror ``_ckernels.pyx`` function for function.  Arrows are stored as
+1/-1 along the positive axis of each edge family (right, up, north-east).

Six-vertex region layout (R rows top to bottom, C columns left to right):
  h[i][j], j in 0..C  horizontal edge left of vertex (i, j)
  v[i][j], i in 0..R  vertical edge above vertex (i, j)
Ice rule at a vertex: W + S == E + N.

Twenty-vertex layout (n columns, m rows, row 0 at the bottom):
  h[y][x], x in 0..n      edge left of vertex (x, y)
  v[y][x], y in 0..m      edge below vertex (x, y)
  d[y][x], both in 0..n/m edge whose north-east end is (x, y); 0 if absent
Ice rule: W + S + SW == E + N + NE.
"""


def _region6_search(west, east, north, south, collect):
    R = len(west)
    C = len(north)
    h = [[0] * (C + 1) for _ in range(R)]
    v = [[0] * C for _ in range(R + 1)]
    for i in range(R):
        h[i][0] = west[i]
        h[i][C] = east[i]
    for j in range(C):
        v[0][j] = north[j]
        v[R][j] = south[j]
    out = []
    count = 0

    def rec(cell):
        nonlocal count
        if cell == R * C:
            count += 1
            if collect:
                out.append(tuple(x for row in h for x in row) + tuple(x for row in v for x in row))
            return
        i, j = divmod(cell, C)
        W = h[i][j]
        N = v[i][j]
        for E in (1, -1):
            if j == C - 1 and E != east[i]:
                continue
            S = E + N - W
            if S != 1 and S != -1:
                continue
            if i == R - 1 and S != south[j]:
                continue
            if j < C - 1:
                h[i][j + 1] = E
            if i < R - 1:
                v[i + 1][j] = S
            rec(cell + 1)

    if R == 0 or C == 0:
        # empty region: consistent only if nothing needs matching
        if R == 0 and list(north) == list(south):
            return [tuple(north)] if collect else 1
        if C == 0 and list(west) == list(east):
            return [tuple(west)] if collect else 1
        return [] if collect else 0
    rec(0)
    return out if collect else count


def enum_region_6v(west, east, north, south):
    """All ice configurations of a rectangular region with fixed boundary."""
    return _region6_search(list(west), list(east), list(north), list(south), True)


def count_region_6v(west, east, north, south):
    return _region6_search(list(west), list(east), list(north), list(south), False)


def _boundary_20v(n, m):
    h = [[0] * (n + 1) for _ in range(m)]
    v = [[0] * n for _ in range(m + 1)]
    d = [[0] * (n + 1) for _ in range(m + 1)]
    for y in range(m):
        h[y][0] = 1
        h[y][n] = -1
    for x in range(n):
        v[0][x] = -1
        v[m][x] = 1
    for y in range(m):
        for x in range(n):
            if x == 0:
                d[y][x] = 1
            elif y == 0:
                d[y][x] = -1
            if x == n - 1 or y == m - 1:
                d[y + 1][x + 1] = 1
    return h, v, d


def _search_20v(n, collect):
    m = 2 * n - 1
    h, v, d = _boundary_20v(n, m)
    out = []
    count = 0

    def rec(cell):
        nonlocal count
        if cell == n * m:
            count += 1
            if collect:
                out.append(
                    tuple(x for row in h for x in row)
                    + tuple(x for row in v for x in row)
                    + tuple(x for row in d for x in row)
                )
            return
        y, x = divmod(cell, n)
        flux = h[y][x] + v[y][x] + d[y][x]
        lastx = x == n - 1
        lasty = y == m - 1
        for E in (1, -1):
            if lastx and E != h[y][n]:
                continue
            for N in (1, -1):
                if lasty and N != v[m][x]:
                    continue
                NE = flux - E - N
                if NE != 1 and NE != -1:
                    continue
                if (lastx or lasty) and NE != d[y + 1][x + 1]:
                    continue
                if not lastx:
                    h[y][x + 1] = E
                if not lasty:
                    v[y + 1][x] = N
                if not (lastx or lasty):
                    d[y + 1][x + 1] = NE
                rec(cell + 1)

    rec(0)
    return out if collect else count


def enum_dwbc_20v(n):
    """All twenty-vertex DWBC configurations on n columns by 2n-1 rows."""
    return _search_20v(n, True)


def count_dwbc_20v(n):
    return _search_20v(n, False)
