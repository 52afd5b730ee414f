import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from oracles import refined_asm
from vertexlab import correlations as corr
from vertexlab import sixv
from vertexlab.errors import ConfluentPoints, Divergent, PoleOnContour, RegionOutOfBounds

W = sixv.Weights6V.isotropic_weights(1.3, 0.6, 1.1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_one_point_matches_refined_asm(n):
    counts = refined_asm(n)
    H = corr.boundary_one_point(n, sixv.Weights6V())
    assert H == [Fraction(k, sum(counts)) for k in counts]


@pytest.mark.parametrize("N,s", [(3, 1), (3, 2), (4, 2)])
def test_top_times_bottom_sums_to_z(N, s):
    w = sixv.Weights6V(Fraction(3, 2), Fraction(3, 2), Fraction(1, 2), Fraction(1, 2), 2, 2)
    acc = 0
    for rs in itertools.combinations(range(1, N + 1), s):
        reg = corr.RegionSpec(rs)
        acc += corr.restricted_partition_brute(N, w, "Top", reg) * corr.restricted_partition_brute(N, w, "Bottom", reg)
    assert acc == sixv.partition_brute(N, w)


def test_side_with_full_width_is_z():
    # all columns with every east arrow cut is the whole DWBC lattice
    w = sixv.Weights6V(2, 2, 1, 1, 3, 3)
    side = corr.restricted_partition_brute(3, w, "Side", corr.RegionSpec((1,), rps=(1, 2, 3)))
    assert side == sixv.partition_brute(3, w)


def test_region_validation():
    with pytest.raises(RegionOutOfBounds):
        corr.RegionSpec((2, 1))
    with pytest.raises(RegionOutOfBounds):
        corr.RegionSpec((1, 4)).check(3)
    with pytest.raises(RegionOutOfBounds):
        corr.restricted_partition_brute(3, W, "Side", corr.RegionSpec((1,)))


def test_h_ratio_scales_with_side_width():
    reg = corr.RegionSpec((1, 3), rps=(2,))
    base = corr.h_ratio(3, sixv.Weights6V(2, 2, 1, 1, 3, 3), reg)
    scaled = corr.h_ratio(3, sixv.Weights6V(4, 4, 2, 2, 6, 6), reg)
    assert scaled == base * 2 ** (3 * reg.sp)


@pytest.mark.parametrize("N,rs", [(3, (1,)), (3, (2,)), (3, (1, 3)), (4, (2, 3)), (4, (1, 2, 4))])
def test_bottom_contour_matches_brute(N, rs):
    brute = corr.restricted_partition_brute(N, W, "Bottom", corr.RegionSpec(rs))
    assert corr.bottom_contour_6v(N, len(rs), W, rs) == pytest.approx(brute, rel=1e-10)


@pytest.mark.parametrize("N,rs", [(3, (1,)), (3, (1, 3)), (4, (1, 2, 4))])
def test_top_contour_off_by_power_of_t(N, rs):
    s = len(rs)
    brute = corr.restricted_partition_brute(N, W, "Top", corr.RegionSpec(rs))
    ratio = corr.top6v_contour(N, s, W, rs) / brute
    assert ratio == pytest.approx(W.t ** (s * (s + 1) / 2), rel=1e-10)


def test_contour_onepoint_is_a_series_coefficient():
    N = 4
    f = np.array([0.3, -1.2, 0.5, 2.0])
    val = corr.contour_onepoint(lambda z: np.polynomial.polynomial.polyval(z, f), N, W)
    P = np.polynomial.polynomial
    poly = P.polymul(P.polymul(P.polypow([-1, 1], N - 1), corr.HFunction(W).coeffs(N)), f)
    assert val == pytest.approx(poly[N - 1], abs=1e-12)


def test_h_is_generating_function_of_one_point():
    H = corr.HFunction(W)
    probs = corr.boundary_one_point(4, W)
    assert H.h(4, 1.0) == pytest.approx(1.0)
    assert H.h(4, 0.5) == pytest.approx(sum(p * 0.5**k for k, p in enumerate(probs)))


def test_h_multi_reduces_and_is_symmetric():
    H = corr.HFunction(W)
    assert H.h_multi(4, [0.3]) == pytest.approx(H.h(4, 0.3))
    a = H.h_multi(4, [0.2, 0.5, -0.4])
    b = H.h_multi(4, [-0.4, 0.2, 0.5])
    assert a == pytest.approx(b, rel=1e-12)


def test_h_multi_confluent_limit():
    H = corr.HFunction(W)
    with pytest.raises(ConfluentPoints):
        H.h_multi(4, [0.3, 0.3])
    exact = H.h_multi(4, [0.3, 0.3], confluent=True)
    near = H.h_multi(4, [0.3, 0.3 + 1e-6])
    assert exact == pytest.approx(near, rel=1e-5)


def test_pole_scan():
    with pytest.raises(PoleOnContour):
        corr.ContourSpec(1 + 0j, 0.5, 64).scan([0.5])
    corr.ContourSpec(1 + 0j, 0.25, 64).scan([0.0])


def test_quadrature_residue():
    spec = corr.ContourSpec(0j, 0.5, 64)
    assert corr.iterated_quadrature(lambda z: (2 + z) / z, [spec]) == pytest.approx(2)


def test_antisymmetrize():
    assert corr.antisymmetrize(lambda x, y: x, [1.0, 3.0]) == pytest.approx(-1.0)
    assert corr.antisymmetrize(lambda x, y: x * y, [1.0, 3.0]) == pytest.approx(0.0)


@pytest.mark.parametrize("eps", [0.11, 0.4, 0.9])
def test_omega_identity(eps):
    assert corr.omega_identity_check(0.8, 0.3, eps) < 1e-12


def test_omega_identity_at_pole():
    assert corr.omega_identity_check(0.8, 0.3, 0.6) < 1e-12


def test_geometric_sums():
    X = [0.5, 0.6]
    assert corr.geom_multi_sum_check(X, 4, 80) < 1e-12
    with pytest.raises(Divergent):
        corr.geom_multi_closed([0.5, 2.5], 3)
    assert corr.geom_multi_closed([0.5], 1) == pytest.approx(sum(0.5 ** (k - 1) for k in range(200)))


def test_u_transform_fixed_points():
    assert corr.u_transform(1, W.t, float(W.delta)) == 0
    assert corr.u_transform(0, W.t, float(W.delta)) == -1


def test_prefactor_golden():
    val = corr.prefactor_P(1, Fraction(1, 2), 1, 2, 1, 1, [1], [2], 4)
    assert val == 8


def test_prefactor_pieces():
    assert corr.prefactor_P1([2.0, 4.0], [1.0, 5.0], [2], [2]) == pytest.approx(1 / 20)
    assert corr.prefactor_P2([0.5], [0.2], 0.7, 0.1) == 1
    with pytest.raises(RegionOutOfBounds):
        corr.prefactor_P1([1.0], [1.0], [2], [1])


def test_efp_6v_trivial_cases():
    w = sixv.Weights6V()
    assert corr.efp_6v_brute(3, w, 0, 3) == 1
    assert corr.efp_6v_brute(3, w, 2, 0) == 1
    assert corr.efp_6v_brute(2, w, 1, 1) == Fraction(1, 2)


def test_efp20v_contour_provenance():
    val, prov = corr.efp20v_contour(2, 1, 0, sixv.Weights6V.isotropic_weights(1, 1, 1), 1, 0)
    assert math.isfinite(val.real if isinstance(val, complex) else val)
    assert "families" in prov and "contours" in prov
