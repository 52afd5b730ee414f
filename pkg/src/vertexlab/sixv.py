"""Six-vertex configurations on an N x N square under domain-wall boundaries.

Rows are indexed top to bottom and columns left to right.  ``h_edges[i][j]``
is the horizontal edge to the left of vertex (i, j) (so each of the N rows
holds N+1 edges) and ``v_edges[i][j]`` is the vertical edge above vertex
(i, j) (N+1 edge rows of N edges each).  Arrows are +1 for right/up and -1
for left/down.
"""

import enum
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import kernels
from .conventions import SIX_VERTEX_KINDS, SIX_VERTEX_TYPES, caps, dwbc_boundary_6v
from .errors import CapExceeded, DegenerateMeasure, IceRuleViolation
from .numeric import fmt_number, is_exact, to_number, total


class Arrow(enum.IntEnum):
    NEG = -1
    POS = 1

    def flip(self):
        return Arrow(-int(self))


class VertexType6V(str, enum.Enum):
    a1 = "a1"
    a2 = "a2"
    b1 = "b1"
    b2 = "b2"
    c1 = "c1"
    c2 = "c2"


_INWARD_SIGN = (1, -1, 1, -1)  # west, east, south, north


def inward_count(star):
    return sum(1 for arrow, sg in zip(star, _INWARD_SIGN) if arrow == sg)


def star_from_sense(west, east, south, north):
    """Build a (west, east, south, north) star from 'in'/'out' labels."""
    out = []
    for label, sg in zip((west, east, south, north), _INWARD_SIGN):
        if label not in ("in", "out"):
            raise ValueError(f"expected 'in' or 'out', got {label!r}")
        out.append(sg if label == "in" else -sg)
    return tuple(out)


def classify_vertex(star):
    """Vertex type of a (west, east, south, north) arrow star."""
    star = tuple(int(a) for a in star)
    if len(star) != 4 or any(a not in (1, -1) for a in star):
        raise ValueError("a star is four arrows, each +1 or -1")
    if inward_count(star) != 2:
        raise IceRuleViolation(f"star {star} has {inward_count(star)} inward arrows")
    return VertexType6V(SIX_VERTEX_TYPES[star])


@dataclass(frozen=True)
class Weights6V:
    a1: object = 1
    a2: object = 1
    b1: object = 1
    b2: object = 1
    c1: object = 1
    c2: object = 1

    def __post_init__(self):
        vals = self.as_tuple()
        if any(isinstance(v, complex) for v in vals):
            return
        if any(v < 0 for v in vals):
            raise ValueError("six-vertex weights must be nonnegative")
        if all(v == 0 for v in vals):
            raise ValueError("six-vertex weights must not all vanish")

    @classmethod
    def isotropic_weights(cls, a, b, c):
        return cls(a, a, b, b, c, c)

    @classmethod
    def signed(cls, a1, a2, b1, b2, c1, c2):
        """Bundle that skips the sign check (trigonometric inhomogeneous weights)."""
        obj = object.__new__(cls)
        for k, v in zip(SIX_VERTEX_KINDS, (a1, a2, b1, b2, c1, c2)):
            object.__setattr__(obj, k, v)
        return obj

    def as_tuple(self):
        return (self.a1, self.a2, self.b1, self.b2, self.c1, self.c2)

    def __getitem__(self, kind):
        return getattr(self, str(getattr(kind, "value", kind)))

    @property
    def isotropic(self):
        return self.a1 == self.a2 and self.b1 == self.b2 and self.c1 == self.c2

    def _iso(self, name):
        if not self.isotropic:
            raise ValueError("weights are not isotropic")
        return getattr(self, name + "1")

    @property
    def a(self):
        return self._iso("a")

    @property
    def b(self):
        return self._iso("b")

    @property
    def c(self):
        return self._iso("c")

    @property
    def delta(self):
        a, b, c = self.a, self.b, self.c
        num = a * a + b * b - c * c
        den = 2 * a * b
        return Fraction(num, den) if is_exact(num) and is_exact(den) else num / den

    @property
    def t(self):
        a, b = self.a, self.b
        return Fraction(b, a) if is_exact(a) and is_exact(b) else b / a

    def scaled(self, kappa):
        return Weights6V(*(kappa * v for v in self.as_tuple()))

    def to_json(self):
        return {k: str(fmt_number(v)) for k, v in zip(SIX_VERTEX_KINDS, self.as_tuple())}

    @classmethod
    def from_json(cls, data):
        return cls(*(to_number(data[k]) for k in SIX_VERTEX_KINDS))


@dataclass(frozen=True)
class FieldParams:
    a: object
    c: object
    H: float = 0.0
    V: float = 0.0
    lambda_c: object = 1

    def __post_init__(self):
        if self.lambda_c < 1:
            raise ValueError("lambda_c must be >= 1")


def field_weights(p, b=None):
    """Weights of the field parametrization.

    The b weights are exp(H - V) and exp(V - H) with no b prefactor unless
    ``b`` is given, in which case both are multiplied by it.
    """
    bb = 1 if b is None else b
    return Weights6V(
        p.a * math.exp(p.H + p.V),
        p.a * math.exp(-p.H - p.V),
        bb * math.exp(p.H - p.V),
        bb * math.exp(-p.H + p.V),
        p.c * p.lambda_c,
        Fraction(p.c) / p.lambda_c if is_exact(p.c) and is_exact(p.lambda_c) else p.c / p.lambda_c,
    )


@dataclass(frozen=True, eq=True)
class Configuration6V:
    n: int
    h_edges: tuple
    v_edges: tuple
    dwbc: bool = True

    def star(self, i, j):
        h, v = self.h_edges, self.v_edges
        return (h[i][j], h[i][j + 1], v[i + 1][j], v[i][j])

    @property
    def rows(self):
        return len(self.h_edges)

    @property
    def cols(self):
        return len(self.v_edges[0]) if self.v_edges else 0

    @cached_property
    def vertex_types(self):
        return tuple(
            tuple(classify_vertex(self.star(i, j)) for j in range(self.cols)) for i in range(self.rows)
        )

    @cached_property
    def type_counts(self):
        cnt = Counter(t for row in self.vertex_types for t in row)
        return tuple(cnt.get(VertexType6V(k), 0) for k in SIX_VERTEX_KINDS)

    def validate(self, variant="standard"):
        self.vertex_types  # raises on any ice-rule violation
        if self.dwbc:
            west, east, north, south = dwbc_boundary_6v(self.n, variant)
            h, v = self.h_edges, self.v_edges
            if [r[0] for r in h] != west or [r[-1] for r in h] != east:
                raise IceRuleViolation("horizontal boundary arrows break the DWBC convention")
            if list(v[0]) != north or list(v[-1]) != south:
                raise IceRuleViolation("vertical boundary arrows break the DWBC convention")
        return True

    def to_json(self):
        return {"n": self.n, "h_edges": [list(r) for r in self.h_edges], "v_edges": [list(r) for r in self.v_edges]}

    @classmethod
    def from_json(cls, data, dwbc=True):
        return cls(
            int(data["n"]),
            tuple(tuple(r) for r in data["h_edges"]),
            tuple(tuple(r) for r in data["v_edges"]),
            dwbc,
        )


def _unflatten_6v(flat, R, C):
    hs = R * (C + 1)
    h = tuple(tuple(flat[i * (C + 1):(i + 1) * (C + 1)]) for i in range(R))
    v = tuple(tuple(flat[hs + i * C:hs + (i + 1) * C]) for i in range(R + 1))
    return h, v


def enumerate_region(west, east, north, south, n=None):
    """Every ice configuration of a rectangle with the given boundary arrows.

    ``west``/``east`` list the arrows on the outer horizontal edges top to
    bottom; ``north``/``south`` list the outer vertical edges left to right.
    """
    R, C = len(west), len(north)
    for flat in kernels.enum_region_6v(list(west), list(east), list(north), list(south)):
        h, v = _unflatten_6v(flat, R, C)
        yield Configuration6V(n if n is not None else max(R, C), h, v, dwbc=False)


def _check_cap(n, cap):
    limit = caps()["sixv"] if cap is None else cap
    if n < 1:
        raise ValueError("lattice size must be >= 1")
    if n > limit:
        raise CapExceeded(f"n={n} above the six-vertex enumeration cap {limit}")


def enumerate_dwbc(n, variant="standard", cap=None):
    """Yield each DWBC configuration of the n x n square once, in row-major DFS order."""
    _check_cap(n, cap)
    west, east, north, south = dwbc_boundary_6v(n, variant)
    for flat in kernels.enum_region_6v(west, east, north, south):
        h, v = _unflatten_6v(flat, n, n)
        yield Configuration6V(n, h, v, True)


def count_dwbc(n, variant="standard", cap=None):
    _check_cap(n, cap)
    return kernels.count_region_6v(*dwbc_boundary_6v(n, variant))


def weight(config, w):
    """Product of vertex weights; ``w`` is a bundle or a callable (i, j) -> bundle."""
    if callable(w) and not isinstance(w, Weights6V):
        out = 1
        for i, row in enumerate(config.vertex_types):
            for j, t in enumerate(row):
                out = out * w(i, j)[t]
        return out
    out = 1
    for k, e in zip(SIX_VERTEX_KINDS, config.type_counts):
        if e:
            out = out * w[k] ** e
    return out


def partition_brute(n, w, variant="standard", cap=None):
    """Sum of weights over every DWBC configuration."""
    return total(weight(c, w) for c in enumerate_dwbc(n, variant, cap))


def type_count_table(n, variant="standard", cap=None):
    """Multiplicity of each (a-count, b-count, c-count) triple."""
    cnt = Counter()
    for conf in enumerate_dwbc(n, variant, cap):
        k = conf.type_counts
        cnt[(k[0] + k[1], k[2] + k[3], k[4] + k[5])] += 1
    return dict(cnt)


def partition_isotropic(n, a, b, c, variant="standard", cap=None):
    """Isotropic partition function from the (a, b, c) count table."""
    table = type_count_table(n, variant, cap)
    return total(m * a**na * b**nb * c**nc for (na, nb, nc), m in sorted(table.items()))


def probability(config, w, Z=None, variant="standard"):
    if Z is None:
        Z = partition_brute(config.n, w, variant)
    if Z == 0:
        raise DegenerateMeasure("partition function vanishes")
    wt = weight(config, w)
    if is_exact(wt) and is_exact(Z):
        return Fraction(wt) / Fraction(Z)
    return wt / Z
