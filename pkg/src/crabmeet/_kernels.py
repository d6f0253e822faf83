"""Integer kernels for the linear scan.

Positions arrive as int64 numerators ``p`` over a common denominator ``D``
with ``S = sum(p)``. Multiplying every quantity of the scan by ``2*N*D`` keeps
it integral: the running imbalance ``d`` becomes ``d2 = 2*N*d`` (one unit per
half step), the mean becomes ``2*S`` and a candidate meeting point ``x`` is
returned as ``X = 2*N*D*x``.

The backend is picked by the ``CRABMEET_BACKEND`` environment variable
(``numba`` or ``numpy``); numba is the default when it imports.
"""
from __future__ import annotations

import os

import numpy as np

LEFT_OF_ALL = 0
AT_POINT = 1
IN_GAP = 2
RIGHT_OF_ALL = 3
NOT_FOUND = -1

try:
    import numba

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    NUMBA_AVAILABLE = False

BACKENDS = ("numba", "numpy")


def default_backend() -> str:
    name = os.environ.get("CRABMEET_BACKEND", "numba").strip().lower()
    if name not in BACKENDS:
        raise ValueError(f"CRABMEET_BACKEND must be one of {BACKENDS}, got {name!r}")
    if name == "numba" and not NUMBA_AVAILABLE:
        return "numpy"
    return name


def fits_int64(n: int, max_abs_numerator: int, denominator: int) -> bool:
    """True when every intermediate of the scaled scan stays inside int64."""
    return 4 * n * (max_abs_numerator + denominator) + 4 < 2**62


def _scan_loop(p, denom, total):
    n = p.shape[0]
    two_n = 2 * n
    two_s = 2 * total
    d2 = -n
    x = two_s - d2 * denom
    # unreachable: the mean is never below the smallest position
    if x < two_n * p[0]:
        return LEFT_OF_ALL, -1, x
    for i in range(n):
        d2 += 1
        v = two_n * p[i] - two_s + d2 * denom
        if -denom <= v <= denom:
            return AT_POINT, i, two_n * p[i]
        d2 += 1
        x = two_s - d2 * denom
        if two_n * p[i] <= x:
            if i == n - 1:
                return RIGHT_OF_ALL, i, x
            if x <= two_n * p[i + 1]:
                return IN_GAP, i, x
    return NOT_FOUND, -1, 0


if NUMBA_AVAILABLE:
    _scan_numba = numba.njit(nogil=True)(_scan_loop)
else:  # pragma: no cover
    _scan_numba = None


def _scan_numpy(p, denom, total):
    n = p.shape[0]
    two_n = 2 * n
    two_s = 2 * total
    x0 = two_s + n * denom
    if x0 < two_n * int(p[0]):
        return LEFT_OF_ALL, -1, x0
    idx = np.arange(n, dtype=np.int64)
    tp = two_n * p
    v = tp - two_s + (2 * idx + 1 - n) * denom
    cond = np.abs(v) <= denom
    xs = two_s - (2 * idx + 2 - n) * denom
    gap = tp <= xs
    gap[:-1] &= xs[:-1] <= tp[1:]
    ic = int(np.argmax(cond)) if cond.any() else n
    ig = int(np.argmax(gap)) if gap.any() else n
    if ic == n and ig == n:
        return NOT_FOUND, -1, 0
    # event order within the scan: condition at i comes before gap after i
    if 2 * ic < 2 * ig + 1:
        return AT_POINT, ic, int(tp[ic])
    kind = RIGHT_OF_ALL if ig == n - 1 else IN_GAP
    return kind, ig, int(xs[ig])


def scan(p: np.ndarray, denom: int, total: int, backend: str | None = None) -> tuple[int, int, int]:
    """Run the first-certificate scan on scaled sorted positions.

    Returns ``(kind, index, X)`` with a 0-based index and the meeting point
    scaled by ``2*N*D``. The caller is responsible for the int64 bound check.
    """
    backend = backend or default_backend()
    if backend == "numba":
        if _scan_numba is None:  # pragma: no cover
            raise RuntimeError("numba backend requested but numba is not installed")
        kind, index, x = _scan_numba(p, denom, total)
        return int(kind), int(index), int(x)
    if backend == "numpy":
        return _scan_numpy(p, denom, total)
    raise ValueError(f"unknown backend {backend!r}")


def warm_up() -> None:
    """Trigger JIT compilation so timings exclude it."""
    if _scan_numba is not None:
        _scan_numba(np.array([0, 1], dtype=np.int64), 1, 1)
