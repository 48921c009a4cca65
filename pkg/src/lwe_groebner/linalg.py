"""Dense linear algebra over F_p: reduced row echelon form and rank.

Two interchangeable kernels compute the same (unique) RREF:

* ``_rref_numba`` -- explicit loops compiled with numba;
* ``_rref_numpy`` -- vectorised numpy row operations.

The numba kernel is used unless numba is missing or ``LWE_GROEBNER_NO_NUMBA``
is set. Entries are int64 in [0, p) with p < 2**31, so products stay below
2**62 and never overflow.
"""
import numpy as np

from . import _accel
from ._accel import optional_njit

_backend = "numba" if _accel.USE_NUMBA else "numpy"


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not _accel.NUMBA_INSTALLED:
        raise RuntimeError("numba is not installed")
    _backend = name


@optional_njit(cache=True)
def _inv_mod(a, p):
    t, new_t = 0, 1
    r, new_r = p, a
    while new_r != 0:
        quo = r // new_r
        t, new_t = new_t, t - quo * new_t
        r, new_r = new_r, r - quo * new_r
    if t < 0:
        t += p
    return t


@optional_njit(cache=True)
def _rref_numba(M, p):
    rows, cols = M.shape
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                tmp = M[r, j]
                M[r, j] = M[piv, j]
                M[piv, j] = tmp
        inv = _inv_mod(M[r, c], p)
        if inv != 1:
            for j in range(c, cols):
                M[r, j] = M[r, j] * inv % p
        for i in range(rows):
            if i == r:
                continue
            f = M[i, c]
            if f == 0:
                continue
            g = p - f
            for j in range(c, cols):
                M[i, j] = (M[i, j] + g * M[r, j]) % p
        pivots[r] = c
        r += 1
    return r, pivots[:r].copy()


def _rref_numpy(M, p):
    rows, cols = M.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv], c:] = M[[piv, r], c:]
        inv = pow(int(M[r, c]), -1, p)
        if inv != 1:
            M[r, c:] = M[r, c:] * inv % p
        col = M[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            M[hit, c:] = (M[hit, c:] + (p - col[hit])[:, None] * M[r, c:]) % p
        pivots.append(c)
        r += 1
    return r, np.asarray(pivots, dtype=np.int64)


def rref(M, p: int, backend: str = None):
    """Reduce ``M`` (copied) to RREF modulo p.

    Returns ``(R, rank, pivot_columns)``; the first ``rank`` rows of R are
    the nonzero rows.
    """
    R = np.array(M, dtype=np.int64, copy=True) % p
    if R.ndim != 2:
        raise ValueError("rref expects a 2-d matrix")
    if R.size == 0:
        return R, 0, np.empty(0, dtype=np.int64)
    kernel = _rref_numba if (backend or _backend) == "numba" else _rref_numpy
    rank, pivots = kernel(R, p)
    return R, int(rank), pivots


def rank_mod_p(M, p: int) -> int:
    return rref(M, p)[1]


def solve_mod_p(A, b, p: int):
    """Solve the square system A x = b over F_p; returns None if singular."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    aug = np.concatenate([A % p, (np.asarray(b, dtype=np.int64) % p).reshape(n, 1)], axis=1)
    R, rank, piv = rref(aug, p)
    if rank < n or (rank and piv[n - 1] != n - 1):
        return None
    return [int(v) for v in R[:n, n]]


def inverse_mod_p(A, p: int):
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    aug = np.concatenate([A % p, np.eye(n, dtype=np.int64)], axis=1)
    R, rank, piv = rref(aug, p)
    if rank < n or piv[n - 1] != n - 1:
        return None
    return R[:n, n:].copy()
