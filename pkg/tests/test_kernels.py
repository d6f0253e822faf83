from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crabmeet import _kernels
from crabmeet.continuous import solve_bisection, solve_linear_scan
from crabmeet.core import make_position_set
from crabmeet.oracle import oracle_continuous_exact


def test_env_flag_selects_backend(monkeypatch):
    monkeypatch.setenv("CRABMEET_BACKEND", "numpy")
    assert _kernels.default_backend() == "numpy"
    monkeypatch.setenv("CRABMEET_BACKEND", "numba")
    assert _kernels.default_backend() == "numba"
    monkeypatch.delenv("CRABMEET_BACKEND")
    assert _kernels.default_backend() == "numba"


def test_env_flag_rejects_unknown(monkeypatch):
    monkeypatch.setenv("CRABMEET_BACKEND", "cuda")
    with pytest.raises(ValueError):
        _kernels.default_backend()


def test_missing_numba_falls_back(monkeypatch):
    monkeypatch.setattr(_kernels, "NUMBA_AVAILABLE", False)
    monkeypatch.setenv("CRABMEET_BACKEND", "numba")
    assert _kernels.default_backend() == "numpy"


def test_unknown_backend_argument():
    with pytest.raises(ValueError):
        _kernels.scan(np.array([0, 1], dtype=np.int64), 1, 1, "gpu")


@given(st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=200), st.integers(1, 12))
@settings(deadline=None)
def test_raw_kernels_agree(nums, denom):
    p = np.sort(np.array(nums, dtype=np.int64))
    total = int(p.sum())
    assert _kernels.scan(p, denom, total, "numba") == _kernels.scan(p, denom, total, "numpy")


@pytest.mark.parametrize("backend", ["numba", "numpy"])
def test_scaled_result_decodes(backend):
    # [0, 1, 1] -> x* = 5/6 = X / (2*N*D) with N=3, D=1
    kind, i, x = _kernels.scan(np.array([0, 1, 1], dtype=np.int64), 1, 2, backend)
    assert (kind, i) == (_kernels.IN_GAP, 0)
    assert F(x, 6) == F(5, 6)


def test_overflow_guard_uses_fraction_loop():
    big = 10**18
    ps = make_position_set([big, big + 1, big + 1, -big])
    assert ps.scaled_array is not None
    assert not _kernels.fits_int64(ps.n, big + 1, ps.denominator)
    rep = solve_linear_scan(ps, "numba")
    assert rep.x_star == oracle_continuous_exact(ps).x_star == solve_bisection(ps).x_star


def test_beyond_int64_entirely():
    ps = make_position_set([10**40, 3 * 10**40, F(1, 3)])
    assert ps.scaled_array is None
    assert solve_linear_scan(ps).x_star == oracle_continuous_exact(ps).x_star


@pytest.mark.parametrize("backend", ["numba", "numpy", "fraction"])
def test_each_backend_on_rational_input(backend):
    ps = make_position_set([0, F(1, 3), F(1, 2)])
    assert solve_linear_scan(ps, backend).x_star == F(1, 3)
