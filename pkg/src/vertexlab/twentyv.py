"""Twenty-vertex configurations on a triangular-lattice volume with domain walls.

The volume has n columns and 2n-1 rows of vertices; each vertex (x, y) is
joined to (x+1, y), (x, y+1) and (x+1, y+1).  Row 0 is the bottom row.  See
``_pykernels`` for the edge-array layout and ``conventions`` for the boundary.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import kernels
from .conventions import TWENTY_VERTEX_EFP_OUT, caps
from .errors import CapExceeded, DegenerateMeasure, IceRuleViolation, RegionOutOfBounds
from .numeric import fmt_number, is_exact, to_number, total

# star order: west, east, south, north, south-west, north-east
_INWARD_SIGN = (1, -1, 1, -1, 1, -1)


def _admissible_stars():
    out = []
    for star in itertools.product((1, -1), repeat=6):
        if sum(1 for a, sg in zip(star, _INWARD_SIGN) if a == sg) == 3:
            out.append(star)
    return tuple(out)


ADMISSIBLE_STARS = _admissible_stars()
_STAR_INDEX = {s: i for i, s in enumerate(ADMISSIBLE_STARS)}


def composite_group(star):
    """Composite weight index 0..6 of an admissible star.

    A line goes straight through when its two arrows agree.  Either all three
    lines go straight or exactly two reverse.  Straight stars are grouped by
    which line (if any) disagrees with the other two; reversing stars by the
    pair of reversing lines.
    """
    W, E, S, N, SW, NE = star
    straight = (W == E, S == N, SW == NE)
    if all(straight):
        h, v, d = W, S, SW
        if h == v == d:
            return 0
        if v == d:
            return 1
        if h == d:
            return 6
        return 3
    flips = tuple(not s for s in straight)
    return {(True, True, False): 4, (False, True, True): 5, (True, False, True): 2}[flips]


STAR_GROUP = tuple(composite_group(s) for s in ADMISSIBLE_STARS)


def classify_vertex_20v(star):
    """Class index 0..19 of a six-arrow star (W, E, S, N, SW, NE)."""
    star = tuple(int(a) for a in star)
    if len(star) != 6 or any(a not in (1, -1) for a in star):
        raise ValueError("a star is six arrows, each +1 or -1")
    k = _STAR_INDEX.get(star)
    if k is None:
        n_in = sum(1 for a, sg in zip(star, _INWARD_SIGN) if a == sg)
        raise IceRuleViolation(f"star {star} has {n_in} inward arrows")
    return k


@dataclass(frozen=True)
class Weights20V:
    a1: object = 1
    a2: object = 1
    a3: object = 1
    b1: object = 1
    b2: object = 1
    b3: object = 1
    c1: object = 1
    c2: object = 1
    c3: object = 1

    def __post_init__(self):
        vals = self.as_tuple()
        if any(v < 0 for v in vals):
            raise ValueError("twenty-vertex weights must be nonnegative")
        if all(v == 0 for v in vals):
            raise ValueError("twenty-vertex weights must not all vanish")

    def as_tuple(self):
        return (self.a1, self.a2, self.a3, self.b1, self.b2, self.b3, self.c1, self.c2, self.c3)

    def scaled(self, kappa):
        return Weights20V(*(kappa * v for v in self.as_tuple()))

    def to_json(self):
        names = ("a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3")
        return {k: str(fmt_number(v)) for k, v in zip(names, self.as_tuple())}


@dataclass(frozen=True)
class CompositeWeights20V:
    w0: object = 1
    w1: object = 1
    w2: object = 1
    w3: object = 1
    w4: object = 1
    w5: object = 1
    w6: object = 1

    def as_tuple(self):
        return (self.w0, self.w1, self.w2, self.w3, self.w4, self.w5, self.w6)

    def __getitem__(self, k):
        return self.as_tuple()[k]

    def to_json(self):
        return {f"w{k}": str(fmt_number(v)) for k, v in enumerate(self.as_tuple())}

    @classmethod
    def from_json(cls, data):
        return cls(*(to_number(data[f"w{k}"]) for k in range(7)))


def composite_weights(w):
    return CompositeWeights20V(
        w.a1 * w.a2 * w.a3,
        w.b1 * w.a2 * w.b3,
        w.b1 * w.a2 * w.c3,
        w.a1 * w.b2 * w.b3 + w.c1 * w.c2 * w.c3,
        w.c1 * w.a2 * w.a3,
        w.b1 * w.c2 * w.a3,
        w.b1 * w.b2 * w.a3,
    )


# The composite weights all equal to 1: the specialization whose partition
# function counts the configurations and equals the series determinant.
UNIT_COMPOSITE = CompositeWeights20V(1, 1, 1, 1, 1, 1, 1)


@dataclass(frozen=True)
class TriangularBasis:
    up: tuple = (math.sqrt(3) / 2, 0.5, 0.0)
    right: tuple = (math.sqrt(3) / 2, -0.5, 0.0)
    down: tuple = (0.0, 0.0, 1.0)


@dataclass(frozen=True)
class Configuration20V:
    n: int
    h_edges: tuple  # m rows of n+1
    v_edges: tuple  # m+1 rows of n
    d_edges: tuple  # m+1 rows of n+1, 0 where no edge exists

    @property
    def m(self):
        return 2 * self.n - 1

    def star(self, x, y):
        h, v, d = self.h_edges, self.v_edges, self.d_edges
        return (h[y][x], h[y][x + 1], v[y][x], v[y + 1][x], d[y][x], d[y + 1][x + 1])

    @cached_property
    def classes(self):
        return tuple(
            tuple(classify_vertex_20v(self.star(x, y)) for x in range(self.n)) for y in range(self.m)
        )

    @cached_property
    def group_counts(self):
        cnt = [0] * 7
        for row in self.classes:
            for k in row:
                cnt[STAR_GROUP[k]] += 1
        return tuple(cnt)

    def to_json(self):
        return {
            "n": self.n,
            "h_edges": [list(r) for r in self.h_edges],
            "v_edges": [list(r) for r in self.v_edges],
            "d_edges": [list(r) for r in self.d_edges],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            int(data["n"]),
            tuple(tuple(r) for r in data["h_edges"]),
            tuple(tuple(r) for r in data["v_edges"]),
            tuple(tuple(r) for r in data["d_edges"]),
        )


def _unflatten_20v(flat, n):
    m = 2 * n - 1
    hs, vs = m * (n + 1), (m + 1) * n
    h = tuple(tuple(flat[y * (n + 1):(y + 1) * (n + 1)]) for y in range(m))
    v = tuple(tuple(flat[hs + y * n:hs + (y + 1) * n]) for y in range(m + 1))
    d = tuple(tuple(flat[hs + vs + y * (n + 1):hs + vs + (y + 1) * (n + 1)]) for y in range(m + 1))
    return h, v, d


def _check_cap(n, cap):
    limit = caps()["twentyv"] if cap is None else cap
    if n < 1:
        raise ValueError("volume size must be >= 1")
    if n > limit:
        raise CapExceeded(f"n={n} above the twenty-vertex enumeration cap {limit}")


def enumerate_dwbc_20v(n, cap=None):
    _check_cap(n, cap)
    for flat in kernels.enum_dwbc_20v(n):
        yield Configuration20V(n, *_unflatten_20v(flat, n))


def count_dwbc_20v(n, cap=None):
    _check_cap(n, cap)
    return kernels.count_dwbc_20v(n)


def _as_composite(w):
    if isinstance(w, CompositeWeights20V):
        return w
    if isinstance(w, Weights20V):
        return composite_weights(w)
    raise TypeError("expected Weights20V or CompositeWeights20V")


def weight_20v(config, w):
    cw = _as_composite(w)
    out = 1
    for k, e in enumerate(config.group_counts):
        if e:
            out = out * cw[k] ** e
    return out


def partition_brute_20v(n, w, cap=None):
    return total(weight_20v(c, w) for c in enumerate_dwbc_20v(n, cap))


def probability_20v(config, w, Z=None):
    if Z is None:
        Z = partition_brute_20v(config.n, w)
    if Z == 0:
        raise DegenerateMeasure("partition function vanishes")
    wt = weight_20v(config, w)
    if is_exact(wt) and is_exact(Z):
        return Fraction(wt) / Fraction(Z)
    return wt / Z


def efp_edges_20v(n, r, s):
    """Edges tested by the emptiness event.

    ``r`` selects the horizontal edges between vertical lines r and r+1
    (lines counted from 1 on the left, 0 meaning the west boundary); ``s``
    selects the diagonal edges between horizontal lines s and s+1 (lines
    counted from 1 at the top, 0 meaning the top boundary).  ``None`` omits a
    family.
    """
    m = 2 * n - 1
    hs, ds = [], []
    if r is not None:
        if not 0 <= r <= n:
            raise RegionOutOfBounds(f"r={r} outside 0..{n}")
        hs = [(y, r) for y in range(m)]
    if s is not None:
        if not 0 <= s <= m:
            raise RegionOutOfBounds(f"s={s} outside 0..{m}")
        y = m - s
        for x in range(n + 1):
            sw_in = 0 <= x - 1 < n and 0 <= y - 1 < m
            ne_in = x < n and y < m
            if sw_in or ne_in:
                ds.append((y, x))
    return hs, ds


def efp_region_20v(config, r, s):
    """True when every selected horizontal arrow points right and every
    selected diagonal arrow points out (north-east)."""
    hs, ds = efp_edges_20v(config.n, r, s)
    return all(config.h_edges[y][x] == 1 for y, x in hs) and all(
        config.d_edges[y][x] == TWENTY_VERTEX_EFP_OUT for y, x in ds
    )
