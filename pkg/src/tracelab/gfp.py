"""Dense linear algebra over the prime field GF(p).

All matrices are ``numpy.int64`` arrays with entries in ``[0, p)``. The row
reduction kernel comes from the compiled ``_gfp`` extension when it was built,
otherwise from the numpy implementation below. ``set_backend`` switches at
runtime (used by the benchmark and the backend-agreement tests).
"""

from __future__ import annotations

import numpy as np

try:
    from . import _gfp as _compiled
except ImportError:  # extension not built
    _compiled = None

# keeps n * (p - 1)**2 inside int64 for the matmul-based reductions
MAX_PRIME = 2**20

_backend = "compiled" if _compiled is not None else "python"


def available_backends() -> list[str]:
    return ["compiled", "python"] if _compiled is not None else ["python"]


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in ("compiled", "python"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "compiled" and _compiled is None:
        raise RuntimeError("compiled kernel is not available; build the extension first")
    _backend = name


def _rref_python(a: np.ndarray, p: int) -> list[int]:
    nrows, ncols = a.shape
    row = 0
    pivots = []
    for col in range(ncols):
        if row >= nrows:
            break
        nz = np.flatnonzero(a[row:, col])
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            a[[row, piv], col:] = a[[piv, row], col:]
        inv = pow(int(a[row, col]), -1, p)
        if inv != 1:
            a[row, col:] = a[row, col:] * inv % p
        f = a[:, col].copy()
        f[row] = 0
        hit = np.flatnonzero(f)
        if hit.size:
            a[hit, col:] = (a[hit, col:] - np.outer(f[hit], a[row, col:])) % p
        pivots.append(col)
        row += 1
    return pivots


def rref(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``a`` mod ``p`` and its pivot columns."""
    if not 2 <= p < MAX_PRIME:
        raise ValueError(f"modulus {p} out of range")
    out = np.ascontiguousarray(np.asarray(a, dtype=np.int64) % p)
    if out.ndim != 2:
        raise ValueError("expected a matrix")
    if out.size == 0:
        return out, []
    if _backend == "compiled":
        pivots = list(_compiled.rref_inplace(out, p))
    else:
        pivots = _rref_python(out, p)
    return out, pivots


def rank(a, p: int) -> int:
    return len(rref(a, p)[1])


def nullspace(a, p: int) -> np.ndarray:
    """Basis of ``{v : a v = 0}`` as the columns of the returned matrix."""
    a = np.asarray(a, dtype=np.int64)
    ncols = a.shape[1]
    r, pivots = rref(a, p)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = np.zeros((ncols, len(free)), dtype=np.int64)
    if free:
        basis[free, np.arange(len(free))] = 1
        if pivots:
            basis[np.ix_(pivots, range(len(free)))] = (-r[: len(pivots)][:, free]) % p
    return basis


def row_basis(rows, p: int, width: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Canonical basis (reduced rows) of the span of ``rows``."""
    rows = np.asarray(rows, dtype=np.int64)
    if rows.ndim == 1:
        rows = rows.reshape(1, -1) if rows.size else np.zeros((0, width or 0), dtype=np.int64)
    if rows.shape[0] == 0:
        return np.zeros((0, rows.shape[1] if width is None else width), dtype=np.int64), []
    r, pivots = rref(rows, p)
    return r[: len(pivots)].copy(), pivots


def reduce_rows(vectors: np.ndarray, basis: np.ndarray, pivots: list[int], p: int) -> np.ndarray:
    """Remainders of ``vectors`` (as rows) modulo a canonical row basis."""
    vectors = np.asarray(vectors, dtype=np.int64) % p
    if not pivots:
        return vectors
    return (vectors - vectors[:, pivots] @ basis) % p


def in_span(vectors, basis: np.ndarray, pivots: list[int], p: int) -> bool:
    vectors = np.atleast_2d(np.asarray(vectors, dtype=np.int64))
    if vectors.shape[0] == 0:
        return True
    return not reduce_rows(vectors, basis, pivots, p).any()


def inverse(a: int, p: int) -> int:
    return pow(int(a) % p, -1, p)
