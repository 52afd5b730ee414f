"""Counting oracles that share no code with the package's enumerators."""

import itertools
from collections import Counter
from functools import lru_cache


@lru_cache(maxsize=None)
def _triangles_above(row):
    # monotone triangles whose bottom row is ``row``
    if len(row) == 1:
        return 1
    choices = [range(row[i], row[i + 1] + 1) for i in range(len(row) - 1)]
    total = 0
    for up in itertools.product(*choices):
        if all(a < b for a, b in zip(up, up[1:])):
            total += _triangles_above(up)
    return total


def asm_count(n):
    """Alternating sign matrices of size n via monotone triangles with bottom row 1..n."""
    return _triangles_above(tuple(range(1, n + 1)))


def twentyv_count(n):
    """Domain-wall twenty-vertex configurations by a row transfer over (vertical, diagonal) states.

    Ice rule W + S + SW == E + N + NE with +1 meaning right / up / north-east.
    """
    m = 2 * n - 1
    states = Counter({((-1,) * n, (1,) + (-1,) * (n - 1)): 1})
    for y in range(m):
        nxt = Counter()
        for (v, dsw), mult in states.items():
            stack = [(0, 1, (), ())]
            while stack:
                x, h, ups, nes = stack.pop()
                if x == n:
                    if h == -1:
                        nxt[(ups, (1,) + nes[:-1])] += mult
                    continue
                flux = h + v[x] + dsw[x]
                for E, N, NE in itertools.product((1, -1), repeat=3):
                    if E + N + NE != flux:
                        continue
                    if (x == n - 1 or y == m - 1) and NE != 1:
                        continue
                    stack.append((x + 1, E, ups + (N,), nes + (NE,)))
        states = nxt
    return sum(c for (v, _), c in states.items() if v == (1,) * n)


@lru_cache(maxsize=None)
def _tops_above(row):
    # Counter of apex values over monotone triangles with bottom row ``row``
    if len(row) == 1:
        return Counter({row[0]: 1})
    choices = [range(row[i], row[i + 1] + 1) for i in range(len(row) - 1)]
    out = Counter()
    for up in itertools.product(*choices):
        if all(a < b for a, b in zip(up, up[1:])):
            out.update(_tops_above(up))
    return out


def refined_asm(n):
    """Number of n x n ASMs whose first-row 1 sits in column k, for k = 1..n."""
    tops = _tops_above(tuple(range(1, n + 1)))
    return [tops[k] for k in range(1, n + 1)]
