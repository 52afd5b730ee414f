"""Nonlocal correlations: emptiness probabilities, restricted partition
functions, the boundary one-point function and contour-integral forms.

Six-vertex conventions used here (see also ``sixv``):

* rows are counted from the top, and the position r of a column is counted
  from the right edge (r = 1 is the last column);
* ``Top(rs)`` is the top s rows with the domain-wall arrows on west, east and
  north, and a south cut whose arrows point down exactly at positions rs;
* ``Bottom(rs)`` is the remaining N - s rows below the same cut;
* ``Side(rps)`` is the first s' columns with west, north and south domain-wall
  arrows and an east cut whose arrows point left exactly at rows rps.

Contour integrals are evaluated by trapezoidal quadrature on circles, which
converges geometrically for integrands analytic in an annulus around the
circle.
"""

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .conventions import caps
from .errors import (
    CapExceeded,
    ConfluentPoints,
    DegenerateMeasure,
    DegenerateParams,
    Divergent,
    PoleOnContour,
    RegionOutOfBounds,
)
from .numeric import is_exact, total
from .sixv import Weights6V, enumerate_dwbc, enumerate_region, partition_brute, weight
from .twentyv import efp_region_20v, enumerate_dwbc_20v, weight_20v

CONVENTIONS = {
    "dwbc_variant": "standard",
    "delta_def": "(a^2 + b^2 - c^2) / (2ab)",
    "t_def": "b / a",
    "h_def": "h_N(z) = sum_r H_N^(r) z^(r-1), H_N^(r) = P(top-row c vertex at position r from the right)",
    "positions": "rows from the top, columns from the right",
}


# ---- regions ---------------------------------------------------------------


@dataclass(frozen=True)
class RegionSpec:
    rs: tuple
    rps: tuple = None
    s: int = None
    sp: int = None

    def __post_init__(self):
        object.__setattr__(self, "rs", tuple(self.rs))
        if self.rps is not None:
            object.__setattr__(self, "rps", tuple(self.rps))
        if self.s is None:
            object.__setattr__(self, "s", len(self.rs))
        if self.sp is None:
            object.__setattr__(self, "sp", len(self.rps) if self.rps is not None else 0)
        for lst in (self.rs, self.rps or ()):
            if any(b <= a for a, b in zip(lst, lst[1:])):
                raise RegionOutOfBounds(f"positions {lst} are not strictly increasing")

    def check(self, N):
        for lst in (self.rs, self.rps or ()):
            if any(not 1 <= r <= N for r in lst):
                raise RegionOutOfBounds(f"positions {lst} outside 1..{N}")
        if not 0 <= self.s <= N or not 0 <= self.sp <= N:
            raise RegionOutOfBounds("region depth outside 0..N")
        return self


def _cut(N, positions, from_right=True):
    out = [1] * N
    for r in positions:
        out[N - r if from_right else r - 1] = -1
    return out


def _region_sum(boundary, w):
    return total(weight(c, w) for c in enumerate_region(*boundary))


def top_boundary(N, rs, s=None):
    s = len(rs) if s is None else s
    return [1] * s, [-1] * s, [1] * N, _cut(N, rs)


def bottom_boundary(N, rs, s=None):
    s = len(rs) if s is None else s
    return [1] * (N - s), [-1] * (N - s), _cut(N, rs), [-1] * N


def side_boundary(N, rps, sp=None):
    sp = len(rps) if sp is None else sp
    return [1] * N, _cut(N, rps, from_right=False), [1] * sp, [-1] * sp


def _check_cap(N):
    limit = caps()["sixv"]
    if N > limit:
        raise CapExceeded(f"N={N} above the six-vertex enumeration cap {limit}")


def restricted_partition_brute(N, w, kind, region=None):
    """Weighted sum over a restricted region; ``kind`` is Top, Bottom, Side or Full."""
    _check_cap(N)
    if kind == "Full":
        return partition_brute(N, w)
    region.check(N)
    if kind == "Top":
        return _region_sum(top_boundary(N, region.rs, region.s), w)
    if kind == "Bottom":
        return _region_sum(bottom_boundary(N, region.rs, region.s), w)
    if kind == "Side":
        if region.rps is None:
            raise RegionOutOfBounds("Side needs rps")
        return _region_sum(side_boundary(N, region.rps, region.sp), w)
    raise ValueError(f"unknown constraint {kind!r}")


def _ratio(num, den):
    if den == 0:
        raise DegenerateMeasure("partition function vanishes")
    if is_exact(num) and is_exact(den):
        return Fraction(num) / Fraction(den)
    return num / den


def h_ratio(N, w, region):
    """Z^Bottom Z^Top Z^Side / Z_N from brute-force restricted sums."""
    Z = partition_brute(N, w)
    num = (
        restricted_partition_brute(N, w, "Top", region)
        * restricted_partition_brute(N, w, "Bottom", region)
        * restricted_partition_brute(N, w, "Side", region)
    )
    return _ratio(num, Z)


def boundary_one_point(N, w):
    """H_N^(r), r = 1..N: probability that the top-row c vertex sits at position r from the right."""
    _check_cap(N)
    acc = [[] for _ in range(N)]
    for conf in enumerate_dwbc(N):
        row = conf.v_edges[1]
        j = row.index(-1)
        acc[N - 1 - j].append(weight(conf, w))
    sums = [total(a) for a in acc]
    Z = total(sums)
    return [_ratio(x, Z) for x in sums]


def efp_6v_brute(N, w, r, s):
    """Probability that the horizontal arrows between columns r and r+1 point right in rows 1..s.

    r = 0 is the west boundary (forced) and s = 0 is the empty event.
    """
    _check_cap(N)
    if not 0 <= r <= N or not 0 <= s <= N:
        raise RegionOutOfBounds(f"(r, s) = ({r}, {s}) outside 0..{N}")
    hit, all_ = [], []
    for conf in enumerate_dwbc(N):
        wt = weight(conf, w)
        all_.append(wt)
        if all(conf.h_edges[i][r] == 1 for i in range(s)):
            hit.append(wt)
    return _ratio(total(hit), total(all_))


def efp_20v_brute(n, w, region):
    """Probability of the right/out event for ``region = (r, s)`` (either may be None)."""
    r, s = region
    hit, all_ = [], []
    for conf in enumerate_dwbc_20v(n):
        wt = weight_20v(conf, w)
        all_.append(wt)
        if efp_region_20v(conf, r, s):
            hit.append(wt)
    return _ratio(total(hit), total(all_))


# ---- h functions -----------------------------------------------------------


def _params(w):
    if not isinstance(w, Weights6V) or not w.isotropic:
        raise DegenerateParams("contour forms need isotropic six-vertex weights")
    a, b, c = (complex(x) if isinstance(x, complex) else float(x) for x in (w.a, w.b, w.c))
    if a == 0 or b == 0 or c == 0:
        raise DegenerateParams("a, b, c must be nonzero")
    return a, b, c, float(w.delta), float(w.t)


@dataclass
class HFunction:
    """Boundary one-point data for one weight bundle, cached per lattice size."""

    w: Weights6V
    _cache: dict = field(default_factory=dict, repr=False)

    def vector(self, N):
        if N not in self._cache:
            self._cache[N] = boundary_one_point(N, self.w)
        return self._cache[N]

    def coeffs(self, N):
        return np.array([complex(x) for x in self.vector(N)])

    def h(self, N, z):
        """h_N(z) = sum_r H_N^(r) z^(r-1), vectorized over z."""
        return np.polynomial.polynomial.polyval(np.asarray(z, dtype=complex), self.coeffs(N))

    def column_poly(self, N, s, j):
        """Entry polynomial z^(s-j) (z-1)^(j-1) h_{N-s+j}(z), ascending coefficients."""
        P = np.polynomial.polynomial
        out = P.polymul(np.eye(1, s - j + 1, s - j)[0], self.coeffs(N - s + j))
        for _ in range(j - 1):
            out = P.polymul(out, [-1, 1])
        return out

    def det_numerator(self, N, s, zs):
        """det{z_k^(s-j) (z_k - 1)^(j-1) h_{N-s+j}(z_k)} for stacked points zs[k]."""
        if s > N:
            raise RegionOutOfBounds("s must not exceed N")
        zs = [np.asarray(z, dtype=complex) for z in zs]
        shape = np.broadcast(*zs).shape
        M = np.empty(shape + (s, s), dtype=complex)
        for j in range(1, s + 1):
            poly = self.column_poly(N, s, j)
            for k, z in enumerate(zs):
                M[..., j - 1, k] = np.polynomial.polynomial.polyval(z, poly)
        return np.linalg.det(M) if s > 1 else M[..., 0, 0]

    def h_multi(self, N, zs, confluent=False, tol=1e-9):
        """h_{N,s}(z_1..z_s); coincident points use the derivative rule when ``confluent``."""
        zs = [complex(z) for z in zs]
        s = len(zs)
        if s == 0:
            return 1.0
        clusters = []
        for z in zs:
            for cl in clusters:
                if abs(cl[0] - z) <= tol:
                    cl[1] += 1
                    break
            else:
                clusters.append([z, 1])
        if len(clusters) == s:
            vander = 1
            for j, k in itertools.combinations(range(s), 2):
                vander *= zs[k] - zs[j]
            return complex(self.det_numerator(N, s, zs)) / vander
        if not confluent:
            raise ConfluentPoints("coincident points; pass confluent=True for the derivative limit")
        P = np.polynomial.polynomial
        M = np.empty((s, s), dtype=complex)
        col = 0
        for zeta, m in clusters:
            for d in range(m):
                for j in range(1, s + 1):
                    poly = P.polyder(self.column_poly(N, s, j), d) if d else self.column_poly(N, s, j)
                    M[j - 1, col] = P.polyval(zeta, poly) / math.factorial(d)
                col += 1
        vander = 1
        for (za, ma), (zb, mb) in itertools.combinations(clusters, 2):
            vander *= (zb - za) ** (ma * mb)
        return complex(np.linalg.det(M)) / vander


def h_multi(N, w, zs, confluent=False):
    return HFunction(w).h_multi(N, zs, confluent)


# ---- quadrature -----------------------------------------------------------


@dataclass(frozen=True)
class ContourSpec:
    center: complex = 0j
    radius: float = 0.5
    nodes: int = 128
    mode: str = "circle-quadrature"

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        if self.nodes < 1 or self.nodes & (self.nodes - 1):
            raise ValueError("node count must be a power of two")
        if self.mode not in ("circle-quadrature", "residue-at-center"):
            raise ValueError(f"unknown contour mode {self.mode!r}")

    def points(self):
        th = 2 * np.pi * np.arange(self.nodes) / self.nodes
        dz = self.radius * np.exp(1j * th)
        return self.center + dz, dz / self.nodes

    def scan(self, poles, rel=1e-6):
        """Raise PoleOnContour if any pole lies on the circle."""
        for p in poles:
            if abs(abs(complex(p) - self.center) - self.radius) <= rel * self.radius:
                raise PoleOnContour(f"pole {p} on contour |z - {self.center}| = {self.radius}")

    def doubled(self):
        return ContourSpec(self.center, self.radius, 2 * self.nodes, self.mode)


def iterated_quadrature(fn, specs):
    """(1/2 pi i)^s times the iterated contour integral of fn over circles.

    ``fn`` receives one broadcastable array per variable.
    """
    pts, wts = zip(*(sp.points() for sp in specs))
    grids = np.meshgrid(*pts, indexing="ij")
    wgrid = np.ones(grids[0].shape, dtype=complex) if grids else np.ones(())
    for g in np.meshgrid(*wts, indexing="ij"):
        wgrid = wgrid * g
    return complex(np.sum(fn(*grids) * wgrid))


def _plain(z, tol=1e-13):
    z = complex(z)
    return z.real if abs(z.imag) <= tol * max(1.0, abs(z)) else z


def contour_onepoint(f, N, w, spec=None):
    """(1/2 pi i) contour integral of (z-1)^(N-1) / z^N h_N(z) f(z) around 0."""
    spec = spec or ContourSpec(0j, 0.5, 256)
    spec.scan([1.0])
    H = HFunction(w)

    def g(z):
        return (z - 1) ** (N - 1) / z**N * H.h(N, z) * f(z)

    return _plain(iterated_quadrature(g, [spec]))


_QUAD_NODES = {1: 256, 2: 64, 3: 32}


def _kernel_radius(delta, t, start=0.5):
    """Largest radius in a halving sequence keeping every kernel pole outside twice the circle."""
    rho = start
    for _ in range(40):
        near = 1.0 / (2 * abs(delta) * t + t * t * rho)  # |1/(2 Delta t - t^2 z_k)| lower bound
        far = (1 - 2 * abs(delta) * t * rho) / (t * t * rho) if 2 * abs(delta) * t * rho < 1 else 0
        if near > 2 * rho and far > 2 * rho:
            return rho
        rho /= 2
    raise PoleOnContour("no radius separates the origin from the kernel poles")


def bottom_contour_6v(N, s, w, rs, nodes=None, radius=None):
    """Contour form of Z^Bottom: prefactor Z_N prod t^(j - r_j) / (a^(s(N-1)) c^s) times
    the iterated integral of prod z_j^-r_j prod_{j<k} (z_k - z_j)/(t^2 z_j z_k - 2 Delta t z_j + 1) h_{N,s}.
    """
    if s > 3:
        raise CapExceeded("multivariate quadrature is capped at s = 3")
    rs = tuple(rs)
    if len(rs) != s:
        raise ValueError("need one position per row")
    a, b, c, delta, t = _params(w)
    H = HFunction(w)
    rho = radius or _kernel_radius(delta, t)
    M = nodes or _QUAD_NODES[s]
    specs = [ContourSpec(0j, rho, M)] * s

    # the Vandermonde of h_{N,s} cancels the (z_k - z_j) factors, so use the determinant directly
    def g(*zs):
        out = H.det_numerator(N, s, zs)
        for z, r in zip(zs, rs):
            out = out / z**r
        for j, k in itertools.combinations(range(s), 2):
            out = out / (t * t * zs[j] * zs[k] - 2 * delta * t * zs[j] + 1)
        return out

    integral = iterated_quadrature(g, specs)
    Z = complex(partition_brute(N, w))
    pre = Z / (a ** (s * (N - 1)) * c**s)
    for j, r in enumerate(rs, start=1):
        pre *= t ** (j - r)
    return _plain(pre * integral)


def top6v_contour(N, s, w, rs, nodes=None, radius=0.25):
    """Top partition function in the contour form c^s a^(s(N-1)) prod t^r_j times the iterated
    integral around 1 of prod w_j^(r_j - 1)/(w_j - 1)^s prod_{j<k} (w_j - w_k)(t^2 w_j w_k - 2 Delta t w_j + 1).
    """
    if s > 3:
        raise CapExceeded("multivariate quadrature is capped at s = 3")
    rs = tuple(rs)
    if s == 0:
        return 1.0
    a, b, c, delta, t = _params(w)
    M = nodes or _QUAD_NODES[s]
    specs = [ContourSpec(1 + 0j, radius, M)] * s
    specs[0].scan([0.0])

    def g(*ws):
        out = 1
        for x, r in zip(ws, rs):
            out = out * x ** (r - 1) / (x - 1) ** s
        for j, k in itertools.combinations(range(s), 2):
            out = out * (ws[j] - ws[k]) * (t * t * ws[j] * ws[k] - 2 * delta * t * ws[j] + 1)
        return out

    pre = c**s * a ** (s * (N - 1))
    for r in rs:
        pre *= t**r
    return _plain(pre * iterated_quadrature(g, specs))


def top20v_contour(N, s, sp, w, rs, rps, nodes=None, radius=0.25, wp=None):
    """Double-family top form with prefactor c^(s+s') a^((s+s')(2N-2)) prod t^r_j prod t'^r'_k.

    ``wp`` supplies the primed family's weights (default: the same bundle, so t' = t).
    """
    if s > 2 or sp > 2:
        raise CapExceeded("top20v_contour is capped at s, s' <= 2")
    rs, rps = tuple(rs), tuple(rps)
    if sp == 0:
        return top6v_contour(2 * N - 1, s, w, rs, nodes, radius)
    if s == 0:
        return top6v_contour(2 * N - 1, sp, wp or w, rps, nodes, radius)
    a, b, c, delta, t = _params(w)
    _, _, _, dp, tp = _params(wp or w)
    M = nodes or {2: 128, 3: 48, 4: 24}[s + sp]
    specs = [ContourSpec(1 + 0j, radius, M)] * (s + sp)

    def fam(ws, rr, n, dd, tt):
        out = 1
        for x, r in zip(ws, rr):
            out = out * x ** (r - 1) / (x - 1) ** n
        for j, k in itertools.combinations(range(n), 2):
            out = out * (ws[j] - ws[k]) * (tt * tt * ws[j] * ws[k] - 2 * dd * tt * ws[j] + 1)
        return out

    def g(*ws):
        return fam(ws[:s], rs, s, delta, t) * fam(ws[s:], rps, sp, dp, tp)

    pre = c ** (s + sp) * a ** ((s + sp) * (2 * N - 2))
    for r in rs:
        pre *= t**r
    for r in rps:
        pre *= tp**r
    return _plain(pre * iterated_quadrature(g, specs))


# ---- omega functions, antisymmetrization, geometric sums -------------------


@dataclass(frozen=True)
class OmegaFns:
    lam: float
    eta: float
    a: float = None
    b: float = None
    c: float = None

    def __post_init__(self):
        if self.a is None:
            object.__setattr__(self, "a", math.sin(self.lam + self.eta))
            object.__setattr__(self, "b", math.sin(self.lam - self.eta))
            object.__setattr__(self, "c", math.sin(2 * self.eta))

    def omega(self, eps):
        return (self.a / self.b) * math.sin(eps) / math.sin(eps - 2 * self.eta)

    def omega_tilde(self, eps):
        return (self.b / self.a) * math.sin(eps) / math.sin(eps + 2 * self.eta)

    def lhs(self, eps):
        return (self.b / self.c) * math.sin(eps - 2 * self.eta) / math.sin(eps + self.lam - self.eta)

    def rhs(self, eps):
        return 1.0 / (self.omega(eps) - 1)


def omega_identity_check(lam, eta, eps, weights=None):
    """|LHS - RHS| / max(1, |LHS|, |RHS|) of (b/c) sin(e - 2eta)/sin(e + lam - eta) = 1/(omega(e) - 1).

    Near the pole of omega (e -> 2 eta) both sides vanish; the right side is
    then taken in the cleared form b sin(e - 2eta) / (a sin e - b sin(e - 2eta)).
    ``weights=(a, b, c)`` replaces the trigonometric triple (negative control).
    """
    om = OmegaFns(lam, eta, *(weights or (None, None, None)))
    for x in (om.a, om.b, om.c, math.sin(eps + lam - eta)):
        if abs(x) < 1e-14:
            raise DegenerateParams("sine zero in the identity")
    L = om.lhs(eps)
    if abs(math.sin(eps - 2 * eta)) < 1e-6:
        sm = math.sin(eps - 2 * eta)
        den = om.a * math.sin(eps) - om.b * sm
        if abs(den) < 1e-14:
            raise DegenerateParams("cleared denominator vanishes")
        R = om.b * sm / den
    else:
        if abs(om.omega(eps) - 1) < 1e-14:
            raise DegenerateParams("omega equals 1")
        R = om.rhs(eps)
    return abs(L - R) / max(1.0, abs(L), abs(R))


def _perm_sign(p):
    sign, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def antisymmetrize(fn, points):
    """(1/s!) sum over permutations sigma of sgn(sigma) fn(z_sigma(1), ..., z_sigma(s))."""
    s = len(points)
    if s > 6:
        raise CapExceeded("antisymmetrization is capped at s = 6")
    acc = []
    for p in itertools.permutations(range(s)):
        acc.append(_perm_sign(p) * fn(*(points[i] for i in p)))
    out = total(acc)
    return Fraction(out) / math.factorial(s) if is_exact(out) else out / math.factorial(s)


def geom_multi_sum(X, r, K):
    """Truncated sum over r_1 < ... < r_s <= r of prod X_j^-r_j, each gap taking 0..K."""
    s = len(X)
    acc = []
    for gaps in itertools.product(range(K + 1), repeat=s):
        rj = [0] * s
        rj[-1] = r - gaps[-1]
        for j in range(s - 2, -1, -1):
            rj[j] = rj[j + 1] - 1 - gaps[j]
        term = 1
        for x, e in zip(X, rj):
            term *= x ** (-e)
        acc.append(term)
    return total(acc)


def geom_multi_closed(X, r):
    """prod_j 1 / (X_j^(r-s+j) (1 - prod_{l<=j} X_l))."""
    s = len(X)
    out, pref = 1, 1
    for j, x in enumerate(X, start=1):
        pref *= x
        if abs(pref) >= 1:
            raise Divergent(f"|X_1...X_{j}| = {abs(pref)} >= 1")
        out /= x ** (r - s + j) * (1 - pref)
    return out


def geom_multi_sum_check(X, r, K):
    if K < 1:
        raise ValueError("truncation must be positive")
    rhs = geom_multi_closed(X, r)
    if len(X) > 3 and K > 60:
        raise CapExceeded("truncated multi-sum is capped at s = 3 for K > 60")
    return abs(geom_multi_sum(X, r, K) - rhs)


def u_transform(z, t, delta):
    """u(z) = (z - 1) / ((t^2 - 2 Delta t) z + 1)."""
    den = (t * t - 2 * delta * t) * z + 1
    if den == 0:
        raise DegenerateParams("u has a pole here")
    return (z - 1) / den


# ---- prefactors of the candidate top representation ------------------------


def prefactor_P(a, b, c, N, s, sp, rs, rps, Z20):
    """Z20 / (a^(s(2N-s+1)/2 + s'(2N-s'+1)/2) b^(s(s-3)/2 + s'(s'-3)/2) c^(s+s')) (a/b)^(sum r + sum r')."""
    ea = s * (2 * N - s + 1) // 2 + sp * (2 * N - sp + 1) // 2
    eb = s * (s - 3) // 2 + sp * (sp - 3) // 2
    exact = all(is_exact(x) for x in (a, b, c, Z20))
    ratio = Fraction(a) / Fraction(b) if exact else a / b
    den = (Fraction(a) if exact else a) ** ea * (Fraction(b) if exact else b) ** eb * c ** (s + sp)
    return Z20 / den * ratio ** (sum(rs) + sum(rps))


def prefactor_P1(z, zp, rs, rps):
    """prod_{i, j} 1/(z_{r_i} z'_{r'_j}), with z and z' indexed from 1 by position."""
    out = 1
    for ri in rs:
        for rj in rps:
            if not (1 <= ri <= len(z) and 1 <= rj <= len(zp)):
                raise RegionOutOfBounds("position outside the supplied coordinates")
            out = out / (z[ri - 1] * zp[rj - 1])
    return out


def prefactor_P2(z, zp, t, delta):
    """Pair kernels prod_{j<k} (z_j - z_k)/(t^2 z_j z_k - 2 Delta t z_j + 1) for both families."""
    out = 1
    for fam in (z, zp):
        for j, k in itertools.combinations(range(len(fam)), 2):
            out = out * (fam[j] - fam[k]) / (t * t * fam[j] * fam[k] - 2 * delta * t * fam[j] + 1)
    return out


# ---- final double-family EFP form ------------------------------------------


def _efp_family(N, s, r, H, t, delta, wspec, zspec):
    if s == 0:
        return 1.0

    def g(*vs):
        ws, zs = vs[:s], vs[s:]
        out = H.det_numerator(N, s, zs) if s > 1 else H.h(N, zs[0])
        pref = 1
        for j in range(s):
            pref = pref * (ws[j] - zs[j])
            out = out * ws[j] ** r / ((ws[j] - 1) ** s * zs[j] ** (r - s + j + 1) * pref)
        for j, k in itertools.combinations(range(s), 2):
            # (z_k - z_j) cancels against the Vandermonde inside h_{N,s}
            out = out * (ws[j] - ws[k]) * (t * t * ws[j] * ws[k] - 2 * delta * t * ws[j] + 1)
            out = out / (t * t * zs[j] * zs[k] - 2 * delta * t * zs[j] + 1)
        return out

    return iterated_quadrature(g, [wspec] * s + [zspec] * s)


def efp20v_contour(N, s, sp, w, r, rp, nodes=None, w_radius=0.25, z_radius=0.25):
    """Final double-family contour form of the twenty-vertex emptiness probability, as printed.

    Returns (value, provenance).  No prefactor multiplies the integrals.
    """
    if s > 2 or sp > 2:
        raise CapExceeded("efp20v_contour is capped at s, s' <= 2")
    a, b, c, delta, t = _params(w)
    H = HFunction(w)
    M = nodes or (64 if max(s, sp) == 1 else 16)
    wspec = ContourSpec(1 + 0j, w_radius, M)
    zspec = ContourSpec(0j, z_radius, M)
    wspec.scan([z_radius, 0.0])
    val = _efp_family(N, s, r, H, t, delta, wspec, zspec) * _efp_family(N, sp, rp, H, t, delta, wspec, zspec)
    provenance = dict(CONVENTIONS)
    provenance.update(
        {
            "families": "independent s and s' families, each with its own (w, z) variables",
            "primed_exponent": "primed family uses r' where the printed form repeats r",
            "h_factor": "h_{N,s}(z) for the unprimed family and h_{N,s'}(z') for the primed one",
            "z_power": "z_j^(r-s+j), j counted from 1",
            "contours": {"w": [1.0, w_radius], "z": [0.0, z_radius]},
            "nodes": M,
            "prefactor": "none",
        }
    )
    return _plain(val), provenance
