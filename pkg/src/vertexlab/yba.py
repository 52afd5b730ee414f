"""Dense L-operators, monodromy blocks and Yang-Baxter exchange checks.

Two-dimensional operators act on (C^2)^N with site 1 as the leftmost tensor
factor; basis index 0 is spin up (sigma^z = +1).  The three-dimensional
operators act on two truncated q-oscillators per site.
"""

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .conventions import caps
from .errors import CapExceeded, DegenerateParams, TruncationTooSmall

SIGMA_MINUS = np.array([[0, 0], [1, 0]], dtype=complex)  # up -> down
SIGMA_PLUS = np.array([[0, 1], [0, 0]], dtype=complex)
ID2 = np.eye(2, dtype=complex)


def _sin(x):
    return cmath.sin(x) if isinstance(x, complex) else math.sin(x)


@dataclass(frozen=True)
class DenseOperator:
    dims: tuple
    mat: np.ndarray = field(compare=False)

    def __post_init__(self):
        d = int(np.prod(self.dims)) if self.dims else 1
        if self.mat.shape != (d, d):
            raise ValueError(f"matrix shape {self.mat.shape} does not match dims {self.dims}")

    @property
    def dim(self):
        return self.mat.shape[0]

    def _check(self, other):
        if tuple(self.dims) != tuple(other.dims):
            raise ValueError(f"dimension mismatch {self.dims} vs {other.dims}")

    def __add__(self, other):
        self._check(other)
        return DenseOperator(self.dims, self.mat + other.mat)

    def __sub__(self, other):
        self._check(other)
        return DenseOperator(self.dims, self.mat - other.mat)

    def __matmul__(self, other):
        self._check(other)
        return DenseOperator(self.dims, self.mat @ other.mat)

    def __mul__(self, scalar):
        return DenseOperator(self.dims, scalar * self.mat)

    __rmul__ = __mul__

    def norm(self):
        return float(np.linalg.norm(self.mat))

    @classmethod
    def zero(cls, dims):
        d = int(np.prod(dims))
        return cls(tuple(dims), np.zeros((d, d), dtype=complex))


def embed(local, site, dims):
    """Operator acting as ``local`` on tensor factor ``site`` (0-based)."""
    out = np.ones((1, 1), dtype=complex)
    for k, d in enumerate(dims):
        out = np.kron(out, local if k == site else np.eye(d, dtype=complex))
    return DenseOperator(tuple(dims), out)


def block_product(X, Y):
    """Product of two square block matrices with operator entries."""
    n = len(X)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = X[i][0] @ Y[0][j]
            for k in range(1, n):
                acc = acc + X[i][k] @ Y[k][j]
            row.append(acc)
        out.append(row)
    return out


def _dense_cap(N):
    limit = caps()["dense_sites"]
    if N > limit:
        raise CapExceeded(f"{N} sites above the dense cap {limit}")


# ---- two dimensions --------------------------------------------------------


def build_l2d(lam, v_k, eta, k, N):
    """L-operator at site k (1-based): [[sin(l - v + eta sz), sin2eta s-], [sin2eta s+, sin(l - v - eta sz)]]."""
    if not 1 <= k <= N:
        raise ValueError("site index out of range")
    dims = (2,) * N
    x = lam - v_k
    c = _sin(2 * eta)
    plus = np.diag([_sin(x + eta), _sin(x - eta)]).astype(complex)
    minus = np.diag([_sin(x - eta), _sin(x + eta)]).astype(complex)
    return [
        [embed(plus, k - 1, dims), embed(c * SIGMA_MINUS, k - 1, dims)],
        [embed(c * SIGMA_PLUS, k - 1, dims), embed(minus, k - 1, dims)],
    ]


@dataclass(frozen=True)
class BlockMonodromy2D:
    A: DenseOperator
    B: DenseOperator
    C: DenseOperator
    D: DenseOperator
    lam: object
    vs: tuple
    eta: object

    def transfer(self):
        return self.A + self.D


def monodromy2d(lam, vs, eta, N=None):
    """T = L_N ... L_1, the product taken in descending site order."""
    vs = tuple(vs)
    N = len(vs) if N is None else N
    if len(vs) != N:
        raise ValueError("need one inhomogeneity per site")
    _dense_cap(N)
    T = build_l2d(lam, vs[N - 1], eta, N, N)
    for k in range(N - 1, 0, -1):
        T = block_product(T, build_l2d(lam, vs[k - 1], eta, k, N))
    return BlockMonodromy2D(T[0][0], T[0][1], T[1][0], T[1][1], lam, vs, eta)


def all_up(N):
    v = np.zeros(2**N, dtype=complex)
    v[0] = 1
    return v


def all_down(N):
    v = np.zeros(2**N, dtype=complex)
    v[-1] = 1
    return v


def dwbc_amplitude(lambdas, vs, eta):
    """<all down| B(lambda_1) ... B(lambda_N) |all up>."""
    N = len(vs)
    state = all_up(N)
    for lam in reversed(list(lambdas)):
        state = monodromy2d(lam, vs, eta).B.mat @ state
    val = all_down(N) @ state
    return val.real if abs(val.imag) <= 1e-14 * max(1.0, abs(val)) else val


@dataclass(frozen=True)
class ExchangeFns:
    """Structure functions of the two- and three-parameter exchange relations.

    ``variant="printed"`` uses sin(x + eta)/sin x for f2; ``"standard"`` uses
    sin(x + 2 eta)/sin x, the function for which the exchange relations of
    this L-operator hold.  x = lam_r - lam_alpha throughout.
    """

    eta: object
    variant: str = "standard"

    def _shift(self):
        if self.variant == "printed":
            return self.eta
        if self.variant == "standard":
            return 2 * self.eta
        raise ValueError(f"unknown variant {self.variant!r}")

    def f2(self, la, lr):
        x = lr - la
        if abs(_sin(x)) < 1e-14:
            raise DegenerateParams("f2 pole at coincident arguments")
        return _sin(x + self._shift()) / _sin(x)

    def g2(self, la, lr):
        x = lr - la
        if abs(_sin(x)) < 1e-14:
            raise DegenerateParams("g2 pole at coincident arguments")
        return _sin(2 * self.eta) / _sin(x)

    def g2_over_f2(self, la, lr):
        """Finite at la == lr."""
        return _sin(2 * self.eta) / _sin(lr - la + self._shift())

    def f3(self, la, lr, lrp):
        x = lrp - lr - la
        if abs(_sin(x)) < 1e-14:
            raise DegenerateParams("f3 pole")
        return _sin(x + 2 * self.eta) / _sin(x)

    def g3(self, la, lr, lrp):
        x = lrp - lr - la
        if abs(_sin(x)) < 1e-14:
            raise DegenerateParams("g3 pole")
        return _sin(2 * self.eta) / _sin(x)


def _residual(lhs, rhs):
    d = np.linalg.norm(lhs - rhs)
    s = np.linalg.norm(lhs)
    return float(d / s) if s > 0 else float(d)


def check_exchange_ab(lam, lamp, eta, N=None, vs=None):
    """Residual of A(l) B(l') = f2(l, l') B(l') A(l) + g2(l', l) B(l) A(l')."""
    if vs is None:
        vs = tuple(0.1 * k for k in range(N))
    if abs(_sin(lamp - lam)) < 1e-12:
        raise DegenerateParams("exchange relation pole at lam == lam'")
    fx = ExchangeFns(eta)
    T, Tp = monodromy2d(lam, vs, eta), monodromy2d(lamp, vs, eta)
    lhs = T.A.mat @ Tp.B.mat
    rhs = fx.f2(lam, lamp) * (Tp.B.mat @ T.A.mat) + fx.g2(lamp, lam) * (T.B.mat @ Tp.A.mat)
    return _residual(lhs, rhs)


def check_commuting_family(op, lam, lamp, eta, N=None, vs=None):
    """Normalized norm of [X(l), X(l')] for X in {B, C}."""
    if op not in ("B", "C"):
        raise ValueError("op must be 'B' or 'C'")
    if vs is None:
        vs = tuple(0.1 * k for k in range(N))
    X = getattr(monodromy2d(lam, vs, eta), op).mat
    Y = getattr(monodromy2d(lamp, vs, eta), op).mat
    return _residual(X @ Y, Y @ X)


def check_transfer_commute(lam, mu, eta, N=None, vs=None):
    if vs is None:
        vs = tuple(0.1 * k for k in range(N))
    t1 = monodromy2d(lam, vs, eta).transfer().mat
    t2 = monodromy2d(mu, vs, eta).transfer().mat
    return _residual(t1 @ t2, t2 @ t1)


def check_fundamental_identity(r, lambdas, eta, vs=None, variant="printed"):
    """Residual of A(l_r) prod_{b<r} B(l_b) = sum_{a<=r} (g/f)(l_a, l_r)
    prod_{b<=r, b!=a} f(l_a, l_b) prod_{b<=r, b!=a} B(l_b) A(l_a).

    ``variant="printed"`` takes f = sin(x + eta)/sin x as printed;
    ``"standard"`` uses sin(x + 2 eta)/sin x, for which the identity holds.
    """
    lambdas = list(lambdas)
    N = len(lambdas) if vs is None else len(vs)
    if vs is None:
        vs = tuple(0.1 * k for k in range(N))
    if not 1 <= r <= len(lambdas):
        raise ValueError("r out of range")
    fx = ExchangeFns(eta, variant)
    mons = [monodromy2d(l, vs, eta) for l in lambdas[:r]]
    dim = 2**N
    lhs = mons[r - 1].A.mat.copy()
    for b in range(r - 1):
        lhs = lhs @ mons[b].B.mat
    rhs = np.zeros((dim, dim), dtype=complex)
    for a in range(r):
        coef = fx.g2_over_f2(lambdas[a], lambdas[r - 1])
        for b in range(r):
            if b != a:
                coef *= fx.f2(lambdas[a], lambdas[b])
        term = np.eye(dim, dtype=complex)
        for b in range(r):
            if b != a:
                term = term @ mons[b].B.mat
        rhs += coef * (term @ mons[a].A.mat)
    return _residual(lhs, rhs)


# ---- three dimensions ------------------------------------------------------


def q_number(n, q):
    return n if q == 1 else (1 - q ** (2 * n)) / (1 - q**2)


def q_oscillator(d, q):
    """Truncated q-oscillator (a, a_dag, N) on levels 0..d-1.

    a|n> = [n]|n-1>, a_dag|n> = |n+1>, so a a_dag - q^2 a_dag a = 1 below the
    top level.
    """
    if d < 2:
        raise TruncationTooSmall("truncation level must be >= 2")
    a = np.zeros((d, d), dtype=complex)
    ad = np.zeros((d, d), dtype=complex)
    for n in range(1, d):
        a[n - 1, n] = q_number(n, q)
        ad[n, n - 1] = 1
    num = np.diag(np.arange(d)).astype(complex)
    return a, ad, num


def _qpow(q, num_diag, scale):
    return np.diag(np.asarray(q, dtype=complex) ** (scale * num_diag))


def build_l3d(q, xi, d_trunc, variant=1, s=1.0, s1=0.5, s2=0.5, prefactor=None):
    """3 x 3 local L-operator on two oscillators, a dense d^2 x d^2 matrix per entry.

    xi^s, xi^s1, xi^s2 are plain scalar powers; the exponential prefactor is a
    scalar callable of (q, xi, s) defaulting to 1.
    """
    a, ad, num = q_oscillator(d_trunc, q)
    I = np.eye(d_trunc, dtype=complex)
    n = np.arange(d_trunc)
    a1, ad1 = np.kron(a, I), np.kron(ad, I)
    a2, ad2 = np.kron(I, a), np.kron(I, ad)
    n1 = np.kron(n, np.ones(d_trunc))
    n2 = np.kron(np.ones(d_trunc), n)

    def qd(c1, c2):
        return np.diag(np.asarray(q, dtype=complex) ** (c1 * n1 + c2 * n2))

    xs, x1, x2 = xi**s, xi**s1, xi**s2
    pre = 1.0 if prefactor is None else prefactor(q, xi, s)
    Z = np.zeros_like(a1)
    if variant == 1:
        m = [
            [qd(1, 0), q**-2 * a1 @ qd(-1, -1) * xi ** (s - s1), a1 @ a2 @ qd(-1, -3) * xi ** (s - s1 - s2)],
            [ad1 @ qd(1, 0) * x1, qd(-1, 1) - q**-2 * qd(1, -1) * xs, -a2 @ qd(1, -3) * xi ** (s - s2)],
            [Z, ad2 @ qd(0, 1) * x2, qd(0, -1)],
        ]
    elif variant == 2:
        if abs(1 - xs) < 1e-14:
            raise DegenerateParams("variant 2 needs xi^s != 1")
        pre = pre / (1 - xs)
        m = [
            [q**2 * qd(1, 0) - qd(-1, 0) * xs, a1 @ qd(1, 0) * x1, q**-1 * a1 @ a2 * xi ** (s1 + s2)],
            [ad1 @ qd(-1, -1) * xi ** (s - s1), -qd(1, -1) * xs, -a2 @ qd(0, -1) * x2],
            [-ad1 @ ad2 @ qd(-1, -1) * xi ** (s - s1 - s2), ad2 @ qd(1, -1) * xi ** (s - s2), qd(0, -1) - qd(0, 1) * xs],
        ]
    else:
        raise ValueError("variant must be 1 or 2")
    return [[pre * e for e in row] for row in m]


BLOCK_NAMES_3D = (("A", "D", "G"), ("B", "E", "H"), ("C", "F", "I"))


@dataclass(frozen=True)
class BlockMonodromy3D:
    blocks: dict
    params: dict

    def __getitem__(self, name):
        return self.blocks[name]


def monodromy3d(q, xis, d_trunc, variant=1, s=1.0, s1=0.5, s2=0.5, prefactor=None):
    """Ordered product L_N ... L_1 of 3 x 3 operator-valued L-matrices, one site per xi."""
    xis = tuple(xis)
    N = len(xis)
    if N < 1:
        raise ValueError("need at least one site")
    if N * 2 * math.log(d_trunc) > math.log(4096) + 1e-9:
        raise CapExceeded("state space above the dense cap (4096)")
    dims = (d_trunc * d_trunc,) * N
    locals_ = [build_l3d(q, x, d_trunc, variant, s, s1, s2, prefactor) for x in xis]

    def lifted(k):
        return [[embed(e, k, dims) for e in row] for row in locals_[k]]

    T = lifted(N - 1)
    for k in range(N - 2, -1, -1):
        T = block_product(T, lifted(k))
    blocks = {BLOCK_NAMES_3D[i][j]: T[i][j] for i in range(3) for j in range(3)}
    params = {"q": q, "xis": list(xis), "d_trunc": d_trunc, "variant": variant, "s": s, "s1": s1, "s2": s2}
    return BlockMonodromy3D(blocks, params)


RELATIONS_3D = ("GEC", "IHG", "ADG", "AEI")

# Each relation: LHS names, then four (coefficient, [(name, which-u)...]) terms,
# transcribed from the displayed relations.  u indices: 0 = u, 1 = u', 2 = u''.
_RELATION_TERMS = {
    "GEC": (
        (("G", 0), ("E", 1), ("C", 2)),
        (
            ("ff", (("C", 2), ("E", 1), ("G", 0))),
            ("fg", (("C", 1), ("E", 2), ("G", 0))),
            ("gf", (("C", 1), ("E", 0), ("G", 2))),
            ("gg", (("C", 0), ("E", 1), ("G", 2))),
        ),
    ),
    "IHG": (
        (("I", 0), ("H", 1), ("G", 2)),
        (
            ("ff", (("G", 2), ("H", 1), ("I", 0))),
            ("fg", (("G", 1), ("H", 2), ("I", 0))),
            ("gf", (("G", 2), ("H", 1), ("I", 1))),
            ("gg", (("G", 1), ("H", 2), ("I", 1))),
        ),
    ),
    "ADG": (
        (("A", 0), ("D", 1), ("G", 2)),
        (
            ("ff", (("G", 2), ("D", 1), ("A", 0))),
            ("fg", (("G", 1), ("D", 2), ("A", 0))),
            ("gf", (("G", 0), ("D", 2), ("A", 0))),
            # printed "G(u'' D(u)" read as G(u'') D(u)
            ("gg", (("G", 2), ("D", 0), ("A", 0))),
        ),
    ),
    "AEI": (
        (("A", 0), ("E", 1), ("I", 2)),
        (
            ("ff", (("I", 2), ("E", 1), ("A", 0))),
            ("fg", (("I", 1), ("E", 2), ("A", 0))),
            ("gf", (("I", 0), ("E", 2), ("A", 1))),
            ("gg", (("I", 2), ("E", 0), ("A", 1))),
        ),
    ),
}


def relation_coefficients(thetas, eta, f2_variant="printed"):
    """The four products f3 f2, f3 g2, g3 f2, g3 g2 of a 3D relation.

    f3, g3 take (lam_alpha, lam_r, lam_r') = (theta, theta', theta''); the
    two-parameter factors are f(lam, lam') and g(lam', lam) at
    (lam, lam') = (theta', theta'').
    """
    th, thp, thpp = thetas
    fx = ExchangeFns(eta, f2_variant)
    f3 = fx.f3(th, thp, thpp)
    g3 = fx.g3(th, thp, thpp)
    f2 = fx.f2(thp, thpp)
    g2 = fx.g2(thpp, thp)
    return {"ff": f3 * f2, "fg": f3 * g2, "gf": g3 * f2, "gg": g3 * g2}


def check_3d_relation(which, q=0.7, thetas=(0.31, 0.77, 1.43), eta=0.27, d_trunc=2, sites=(0.0,),
                      variant=1, s=1.0, s1=0.5, s2=0.5, f2_variant="printed", coefficients=None):
    """Normalized residual of one displayed 3D relation (report only).

    The monodromy at spectral angle theta uses xi_k = exp(theta - zeta_k) at
    site k.  ``coefficients`` overrides the four products (used for the
    degenerate g3 = 0 check).
    """
    if which not in _RELATION_TERMS:
        raise ValueError(f"unknown 3D relation {which!r}")
    mons = [
        monodromy3d(q, [math.exp(th - z) for z in sites], d_trunc, variant, s, s1, s2) for th in thetas
    ]
    coef = coefficients or relation_coefficients(thetas, eta, f2_variant)
    lhs_names, terms = _RELATION_TERMS[which]

    def prod(seq):
        out = None
        for name, u in seq:
            m = mons[u][name].mat
            out = m if out is None else out @ m
        return out

    lhs = prod(lhs_names)
    rhs = sum(coef[key] * prod(seq) for key, seq in terms)
    return {
        "relation": which,
        "residual": _residual(lhs, rhs),
        "lhs_norm": float(np.linalg.norm(lhs)),
        "rhs_norm": float(np.linalg.norm(rhs)),
        "coefficients": {k: complex(v) for k, v in sorted(coef.items())},
        "params": {
            "q": q, "thetas": list(thetas), "eta": eta, "d_trunc": d_trunc, "sites": list(sites),
            "variant": variant, "s": s, "s1": s1, "s2": s2, "f2_variant": f2_variant,
        },
    }
