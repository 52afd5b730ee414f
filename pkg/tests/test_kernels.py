import os
import subprocess
import sys

import pytest

from vertexlab import _pykernels, kernels
from vertexlab.conventions import dwbc_boundary_6v

ck = pytest.importorskip("vertexlab._ckernels")


@pytest.mark.parametrize("n", range(1, 6))
def test_6v_backends_agree(n):
    b = dwbc_boundary_6v(n)
    assert ck.enum_region_6v(*b) == _pykernels.enum_region_6v(*b)
    assert ck.count_region_6v(*b) == _pykernels.count_region_6v(*b)


@pytest.mark.parametrize("n", range(1, 4))
def test_20v_backends_agree(n):
    assert ck.enum_dwbc_20v(n) == _pykernels.enum_dwbc_20v(n)
    assert ck.count_dwbc_20v(n) == _pykernels.count_dwbc_20v(n)


def test_region_with_no_rows():
    assert _pykernels.enum_region_6v([], [], [1, -1], [1, -1]) == [(1, -1)]
    assert _pykernels.enum_region_6v([], [], [1, -1], [-1, 1]) == []
    assert ck.enum_region_6v([], [], [1, -1], [1, -1]) == [(1, -1)]


def test_pure_backend_selected_by_env():
    env = dict(os.environ, VERTEXLAB_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "from vertexlab import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND in ("cython", "python")
