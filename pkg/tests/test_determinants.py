import math
from fractions import Fraction

import numpy as np
import pytest

from vertexlab import determinants as d
from vertexlab import sixv
from vertexlab.errors import DegenerateParams, KernelSingular


def _draw(rng, N):
    while True:
        p = d.SpectralParams(list(rng.uniform(0, 1.5, N)), list(rng.uniform(-0.5, 0.5, N)), rng.uniform(0.15, 0.7))
        try:
            return p.check(tol=0.08)
        except DegenerateParams:
            continue


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_ik_matches_enumeration(N):
    rng = np.random.default_rng(N)
    for _ in range(5):
        p = _draw(rng, N)
        brute = sixv.partition_brute(N, d.inhomogeneous_weights(p))
        assert d.ik_partition(p) == pytest.approx(brute, rel=1e-10)


def test_ik_symmetric_in_lambdas():
    p = d.SpectralParams([0.3, 0.9, 1.2], [0.0, 0.1, -0.2], 0.4)
    q = d.SpectralParams([1.2, 0.3, 0.9], [0.1, -0.2, 0.0], 0.4)
    assert d.ik_partition(p) == pytest.approx(d.ik_partition(q), rel=1e-12)


def test_degenerate_params_raise():
    with pytest.raises(DegenerateParams):
        d.ik_partition(d.SpectralParams([0.3, 0.3], [0.0, 0.1], 0.4))


@pytest.mark.parametrize("N", [1, 2, 3])
def test_homogeneous_matches_richardson_and_brute(N):
    lam, nu, eta = 0.9, 0.1, 0.3
    h = d.homogeneous_partition(lam, nu, eta, N)
    r = d.richardson_homogeneous_limit(lam, nu, eta, N)
    a, b, c = math.sin(lam - nu + eta), math.sin(lam - nu - eta), math.sin(2 * eta)
    brute = sixv.partition_brute(N, sixv.Weights6V.signed(a, a, b, b, c, c))
    assert float(h) == pytest.approx(float(r), rel=1e-9)
    assert float(h) == pytest.approx(brute, rel=1e-9)


def test_homogeneous_schemes_agree():
    q = d.homogeneous_partition(0.9, 0.1, 0.3, 3, scheme="quad")
    s = d.homogeneous_partition(0.9, 0.1, 0.3, 3, scheme="step")
    assert float(q) == pytest.approx(float(s), rel=1e-8)


def test_homogeneous_kernel_singular():
    with pytest.raises(KernelSingular):
        d.homogeneous_partition(0.3, 0.0, 0.3, 2)


def test_series_rows():
    c = d.series_coeffs(3).coeffs
    assert [list(r) for r in c] == [[1, 1, 1], [4, 8, 12], [7, 32, 72]]


def test_difrancesco_values_exact():
    vals = [d.difrancesco_partition(n) for n in range(1, 5)]
    assert vals == [1, 4, 60, 3328]
    assert all(isinstance(v, Fraction) for v in vals)


def test_det_generic():
    assert d.det([[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]) == 5
    assert d.det([[0.0, 1.0], [1.0, 0.0]]) == -1.0
