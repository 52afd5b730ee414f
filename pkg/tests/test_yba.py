import numpy as np
import pytest

from vertexlab import determinants, yba
from vertexlab.errors import CapExceeded, DegenerateParams, TruncationTooSmall

LAMS = [0.31, 0.77, 1.13, 1.52]
VS = [0.05, 0.21, 0.4, 0.6]
ETA = 0.27


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_exchange_and_commuting(N):
    vs = VS[:N]
    assert yba.check_exchange_ab(0.3, 0.9, ETA, vs=vs) < 1e-11
    assert yba.check_commuting_family("B", 0.3, 0.9, ETA, vs=vs) < 1e-11
    assert yba.check_commuting_family("C", 0.3, 0.9, ETA, vs=vs) < 1e-11
    assert yba.check_transfer_commute(0.3, 0.9, ETA, vs=vs) < 1e-11


def test_exchange_pole():
    with pytest.raises(DegenerateParams):
        yba.check_exchange_ab(0.3, 0.3, ETA, N=2)


@pytest.mark.parametrize("N", [1, 2, 3])
def test_dwbc_bridge(N):
    p = determinants.SpectralParams(LAMS[:N], VS[:N], ETA)
    assert yba.dwbc_amplitude(p.lambdas, p.nus, ETA) == pytest.approx(determinants.ik_partition(p), rel=1e-9)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_fundamental_identity_standard(r):
    assert yba.check_fundamental_identity(r, LAMS, ETA, VS, "standard") < 1e-10


def test_fundamental_identity_printed_shift_fails():
    # with the eta shift the r = 1 case already reads A = 2 cos(eta) A
    res = yba.check_fundamental_identity(1, LAMS, ETA, VS, "printed")
    assert res == pytest.approx(abs(2 * np.cos(ETA) - 1) / 1, rel=1e-12)


def test_q_oscillator_relation():
    q = 0.7
    a, ad, _ = yba.q_oscillator(5, q)
    rel = a @ ad - q**2 * ad @ a
    assert np.allclose(rel[:4, :4], np.eye(4))
    with pytest.raises(TruncationTooSmall):
        yba.q_oscillator(1, q)


def test_q_one_is_ordinary_oscillator_ladder():
    a, ad, num = yba.q_oscillator(4, 1)
    assert np.allclose(np.diag(ad @ a), np.diag(num))


def test_l3d_shapes_and_variant_guard():
    L = yba.build_l3d(0.7, 1.3, 3, variant=1)
    assert len(L) == 3 and all(len(row) == 3 for row in L)
    assert all(e.shape == (9, 9) for row in L for e in row)
    assert not L[2][0].any()
    with pytest.raises(DegenerateParams):
        yba.build_l3d(0.7, 1.0, 2, variant=2)


def test_3d_relation_record_is_report_only():
    out = yba.check_3d_relation("GEC", d_trunc=2)
    assert set(out) >= {"relation", "residual", "lhs_norm", "rhs_norm", "params"}
    with pytest.raises(ValueError):
        yba.check_3d_relation("XYZ")


def test_dense_cap(monkeypatch):
    monkeypatch.setenv("VERTEXLAB_CAPS", "dense_sites=2")
    with pytest.raises(CapExceeded):
        yba.monodromy2d(0.3, [0.0, 0.1, 0.2], ETA)


def test_dense_operator_dimension_check():
    A = yba.DenseOperator.zero((2, 2))
    B = yba.DenseOperator.zero((2,))
    with pytest.raises(ValueError):
        A @ B
