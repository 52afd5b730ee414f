"""Determinant representations of domain-wall partition functions.

Covers the inhomogeneous Izergin-Korepin form, its homogeneous derivative
limit, the U-turn matrix and the series-coefficient determinant whose value
equals the twenty-vertex DWBC partition function at unit composite weights.
"""

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .errors import DegenerateParams, KernelSingular
from .sixv import Weights6V
from .numeric import fmt_number

TOL = 1e-12


def sin(x):
    if isinstance(x, (mpmath.mpf, mpmath.mpc)):
        return mpmath.sin(x)
    if isinstance(x, complex):
        return cmath.sin(x)
    return math.sin(x)


def det(matrix):
    """Determinant by Gaussian elimination with partial pivoting.

    Works for any field-like entries (Fraction, float, complex, mpmath).
    """
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    sign = 1
    out = 1
    for k in range(n):
        p = max(range(k, n), key=lambda i: abs(a[i][k]))
        if a[p][k] == 0:
            return 0 * a[0][0]
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        piv = a[k][k]
        out = out * piv
        for i in range(k + 1, n):
            f = a[i][k] / piv
            if f != 0:
                row_i, row_k = a[i], a[k]
                for j in range(k + 1, n):
                    row_i[j] = row_i[j] - f * row_k[j]
    return sign * out


@dataclass(frozen=True)
class SpectralParams:
    lambdas: tuple
    nus: tuple
    eta: object

    def __post_init__(self):
        object.__setattr__(self, "lambdas", tuple(self.lambdas))
        object.__setattr__(self, "nus", tuple(self.nus))
        if len(self.lambdas) != len(self.nus) or not self.lambdas:
            raise ValueError("need equally many lambdas and nus, at least one")

    @property
    def N(self):
        return len(self.lambdas)

    def check(self, fns=None, tol=TOL):
        """Raise DegenerateParams when any denominator of the IK formula vanishes."""
        fns = fns or TrigWeightFns(self.eta)
        for lam in self.lambdas:
            for nu in self.nus:
                if abs(fns.a(lam, nu)) < tol or abs(fns.b(lam, nu)) < tol:
                    raise DegenerateParams(f"a or b vanishes at ({lam}, {nu})")
        for group in (self.lambdas, self.nus):
            for i in range(len(group)):
                for j in range(i + 1, len(group)):
                    if abs(fns.d(group[i], group[j])) < tol:
                        raise DegenerateParams("coincident spectral parameters")
        return self


@dataclass(frozen=True)
class TrigWeightFns:
    """a = sin(lam - nu + eta), b = sin(lam - nu - eta), c = sin(2 eta), d = sin(lam - mu)."""

    eta: object
    a_fn: object = field(default=None, compare=False)
    b_fn: object = field(default=None, compare=False)
    c_val: object = field(default=None, compare=False)
    d_fn: object = field(default=None, compare=False)

    def a(self, lam, nu):
        return self.a_fn(lam, nu) if self.a_fn else sin(lam - nu + self.eta)

    def b(self, lam, nu):
        return self.b_fn(lam, nu) if self.b_fn else sin(lam - nu - self.eta)

    @property
    def c(self):
        return self.c_val if self.c_val is not None else sin(2 * self.eta)

    def d(self, lam, mu):
        return self.d_fn(lam, mu) if self.d_fn else sin(lam - mu)


def ik_matrix(p, fns=None):
    fns = fns or TrigWeightFns(p.eta)
    p.check(fns)
    c = fns.c
    return [[c / (fns.a(lam, nu) * fns.b(lam, nu)) for nu in p.nus] for lam in p.lambdas]


def ik_prefactor(p, fns=None):
    fns = fns or TrigWeightFns(p.eta)
    num = 1
    for lam in p.lambdas:
        for nu in p.nus:
            num = num * fns.a(lam, nu) * fns.b(lam, nu)
    den = 1
    lams, nus = p.lambdas, p.nus
    # product over beta < alpha of d(lam_alpha, lam_beta); the reverse
    # orientation differs from the enumerated sum by (-1)^(N(N-1)/2)
    for alpha in range(len(lams)):
        for beta in range(alpha):
            den = den * fns.d(lams[alpha], lams[beta])
    for k in range(len(nus)):
        for j in range(k):
            den = den * fns.d(nus[j], nus[k])
    return num / den


def ik_partition(p, fns=None):
    """Izergin-Korepin determinant for the inhomogeneous DWBC partition function."""
    fns = fns or TrigWeightFns(p.eta)
    m = ik_matrix(p, fns)
    return ik_prefactor(p, fns) * det(m)


def inhomogeneous_weights(p, fns=None):
    """Vertex-weight callable (row i, column j) -> bundle at (lambda_i, nu_j)."""
    fns = fns or TrigWeightFns(p.eta)
    c = fns.c

    def w(i, j):
        a = fns.a(p.lambdas[i], p.nus[j])
        b = fns.b(p.lambdas[i], p.nus[j])
        return Weights6V.signed(a, a, b, b, c, c)

    return w


def _homogeneous_parts(lam, nu, eta, kernel, prefactor):
    if kernel == "ik":
        x = lam - nu

        def phi(y):
            return mpmath.sin(2 * eta) / (mpmath.sin(y + eta) * mpmath.sin(y - eta))

        def pref(N):
            return (mpmath.sin(x + eta) * mpmath.sin(x - eta)) ** (N * N)

        return phi, x, pref, [x + eta, x - eta]
    if kernel == "printed":

        def phi(y):
            return mpmath.sin(2 * eta) / (mpmath.sin(y - eta) * mpmath.sin(y + nu))

        def pref(N):
            return (mpmath.sin(lam - nu) * mpmath.sin(lam + nu)) ** (N * N)

        return phi, lam, pref, [lam - eta, lam + nu]
    if callable(kernel):
        if prefactor is None:
            raise ValueError("a custom kernel needs an explicit prefactor callable")
        return kernel, lam, (lambda N: prefactor(lam, nu, eta, N)), []
    raise ValueError(f"unknown kernel {kernel!r}")


def homogeneous_partition(lam, nu, eta, N, kernel="ik", scheme="quad", step=None, dps=30, prefactor=None):
    """Homogeneous limit of the IK determinant.

    Z = prefactor / prod_{n<N} (n!)^2 * det[phi^(i+k)(x)], where
    ``kernel="ik"`` uses phi = sin 2eta / (sin(x+eta) sin(x-eta)) at x = lam - nu
    and ``kernel="printed"`` uses sin 2eta / (sin(lam-eta) sin(lam+nu)) with
    prefactor [sin(lam-nu) sin(lam+nu)]^(N^2).  ``scheme`` selects mpmath's
    contour-integral ("quad") or finite-difference ("step") derivatives;
    ``step`` is the contour radius or difference step.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if scheme not in ("quad", "step"):
        raise ValueError("scheme must be 'quad' or 'step'")
    with mpmath.workdps(dps):
        lam_m, nu_m, eta_m = (mpmath.mpmathify(v) for v in (lam, nu, eta))
        phi, x0, pref, zeros = _homogeneous_parts(lam_m, nu_m, eta_m, kernel, prefactor)
        for z in zeros:
            if abs(mpmath.sin(z)) < 1e-8:
                raise KernelSingular(f"kernel has a pole at the evaluation point ({z})")
        opts = {}
        if scheme == "quad":
            opts["method"] = "quad"
            if step is not None:
                opts["radius"] = step
            else:
                # stay well inside the nearest pole of phi
                dist = min([abs(mpmath.sin(z)) for z in zeros] or [mpmath.mpf(1)])
                opts["radius"] = min(mpmath.mpf("0.25"), dist / 4)
        elif step is not None:
            opts["h"] = step
        derivs = [mpmath.diff(phi, x0, k, **opts) for k in range(2 * N - 1)]
        M = [[derivs[i + k] for k in range(N)] for i in range(N)]
        fact = mpmath.mpf(1)
        for k in range(N):
            fact *= mpmath.factorial(k) ** 2
        val = pref(N) / fact * det(M)
        return _plain(val)


def _plain(v):
    if isinstance(v, mpmath.mpc):
        # contour derivatives leave round-off sized imaginary parts
        if abs(v.imag) <= mpmath.mpf(10) ** (-mpmath.mp.dps // 2) * max(1, abs(v.real)):
            return float(v.real)
        return complex(v)
    return float(v)


def richardson_homogeneous_limit(lam, nu, eta, N, eps=(1e-2, 5e-3, 2.5e-3), offsets=None, dps=60):
    """Homogeneous limit of ik_partition by Richardson extrapolation in eps^2.

    The spectral parameters are lam + eps*d_alpha and nu + eps*d'_k with
    offsets symmetric about 0, so Z(eps) is even in eps.
    """
    if offsets is None:
        base = [k - (N - 1) / 2 for k in range(N)]
        offsets = (base, [0.37 * b for b in reversed(base)])
    with mpmath.workdps(dps):
        vals = []
        for e in eps:
            e = mpmath.mpf(e)
            p = SpectralParams(
                [mpmath.mpf(lam) + e * mpmath.mpf(d) for d in offsets[0]],
                [mpmath.mpf(nu) + e * mpmath.mpf(d) for d in offsets[1]],
                mpmath.mpf(eta),
            )
            vals.append(ik_partition(p))
        # Neville tableau in h = eps^2, evaluated at h = 0
        hs = [mpmath.mpf(e) ** 2 for e in eps]
        tab = list(vals)
        for k in range(1, len(tab)):
            for i in range(len(tab) - k):
                tab[i] = (hs[i + k] * tab[i] - hs[i] * tab[i + 1]) / (hs[i + k] - hs[i])
        return _plain(tab[0])


def uturn_matrix(z, w, fns=None, q=1, eta=0.3):
    """Entries 1/(a b)(z_i, w_j) - 1/(a b)(1, z_i w_j) with (a, b)(z, w) = (A, B)(q z, w / q)."""
    fns = fns or TrigWeightFns(eta)

    def ab(x, y):
        xs, ys = q * x, y / q
        val = fns.a(xs, ys) * fns.b(xs, ys)
        if abs(val) < TOL:
            raise DegenerateParams(f"a*b vanishes at ({x}, {y})")
        return val

    if len(z) != len(w):
        raise ValueError("z and w must have equal length")
    return [[1 / ab(zi, wj) - 1 / ab(1, zi * wj) for wj in w] for zi in z]


# ---- series-coefficient determinant --------------------------------------------


def _poly_mul(p, q, n):
    out = [[Fraction(0)] * n for _ in range(n)]
    for i, row in enumerate(p):
        for j, c in enumerate(row):
            if c == 0:
                continue
            for k in range(n - i):
                qrow = q[k] if k < len(q) else ()
                for l in range(min(len(qrow), n - j)):
                    if qrow[l]:
                        out[i + k][j + l] += c * qrow[l]
    return out


def _series_div(num, den, n):
    if den[0][0] != 1:
        raise ValueError("denominator must have constant term 1")
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = num[i][j] if i < len(num) and j < len(num[i]) else Fraction(0)
            for k in range(i + 1):
                drow = den[k] if k < len(den) else ()
                for l in range(min(j + 1, len(drow))):
                    if (k or l) and drow[l]:
                        acc -= drow[l] * g[i - k][j - l]
            g[i][j] = acc
    return g


def _poly(coeffs):
    """Bivariate polynomial from {(i, j): c}."""
    di = max(i for i, _ in coeffs) + 1
    dj = max(j for _, j in coeffs) + 1
    out = [[Fraction(0)] * dj for _ in range(di)]
    for (i, j), c in coeffs.items():
        out[i][j] = Fraction(c)
    return out


# F(u, v) = (1 + u^2)(1 + 2u - u^2) / ((1 - u^2 v)[(1 - u)^2 - v(1 + u)^2])
SERIES_NUMERATOR = {(0, 0): 1, (1, 0): 2, (3, 0): 2, (4, 0): -1}
SERIES_DENOMINATOR = {
    # (1 - u^2 v)(1 - 2u + u^2 - v - 2uv - u^2 v)
    (0, 0): 1, (1, 0): -2, (2, 0): 1,
    (0, 1): -1, (1, 1): -2, (2, 1): -2, (3, 1): 2, (4, 1): -1,
    (2, 2): 1, (3, 2): 2, (4, 2): 1,
}


@dataclass(frozen=True)
class SeriesCoeffTable:
    n: int
    coeffs: tuple

    def to_json(self):
        return {"n": self.n, "coeffs": [[str(fmt_number(c)) for c in row] for row in self.coeffs]}


def series_coeffs(n, order=None):
    """Exact coefficients c_ij = [u^i v^j] F(u, v) for 0 <= i, j < n.

    ``order`` (>= n) sets the truncation order of the underlying series.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    order = n if order is None else order
    if order < n:
        raise ValueError("truncation order must be >= n")
    g = _series_div(_poly(SERIES_NUMERATOR), _poly(SERIES_DENOMINATOR), order)
    return SeriesCoeffTable(n, tuple(tuple(g[i][j] for j in range(n)) for i in range(n)))


def difrancesco_partition(n):
    """det of the n x n series-coefficient table, exact."""
    val = det(series_coeffs(n).coeffs)
    return Fraction(val)
