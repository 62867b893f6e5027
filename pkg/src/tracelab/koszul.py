"""The Koszul complex on ``n`` variables, symbolically.

``K_i`` has a basis of ``i``-subsets of ``{0, ..., n-1}`` in colex order, and

    d(e_T) = sum_{j in T} (-1)^pos(j, T) x_j e_{T minus j}

where ``pos`` is the 0-based position of ``j`` in sorted ``T``. Entries of the
differentials are stored as signed variable numbers: ``+(j+1)`` for ``x_j``,
``-(j+1)`` for ``-x_j``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .artinian import ArtinianAlgebra
from .errors import GuardError

MAX_N = 10


def colex_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    return sorted(combinations(range(n), k), key=lambda t: t[::-1])


@dataclass(frozen=True)
class KoszulComplex:
    n: int
    # differentials[i - 1] is d_i : K_i -> K_{i-1}, as {(row, col): signed var}
    differentials: tuple[dict, ...]

    def ranks(self) -> list[int]:
        return [comb(self.n, i) for i in range(self.n + 1)]

    def differential(self, i: int) -> dict:
        return self.differentials[i - 1]

    def dense(self, i: int) -> np.ndarray:
        """``d_i`` as an integer matrix of signed variable numbers."""
        out = np.zeros((comb(self.n, i - 1), comb(self.n, i)), dtype=np.int64)
        for (r, c), v in self.differential(i).items():
            out[r, c] = v
        return out

    def format(self, i: int) -> list[list[str]]:
        rows = self.dense(i)
        return [[_fmt_entry(v) for v in row] for row in rows]


def _fmt_entry(v: int) -> str:
    if v == 0:
        return "0"
    return ("-" if v < 0 else "") + f"x{abs(v)}"


def build(n: int) -> KoszulComplex:
    if not 1 <= n <= MAX_N:
        raise GuardError(f"n must lie in [1, {MAX_N}]")
    diffs = []
    for i in range(1, n + 1):
        rows = {t: r for r, t in enumerate(colex_subsets(n, i - 1))}
        d = {}
        for c, t in enumerate(colex_subsets(n, i)):
            for pos, j in enumerate(t):
                face = t[:pos] + t[pos + 1 :]
                d[(rows[face], c)] = (-1) ** pos * (j + 1)
        diffs.append(d)
    return KoszulComplex(n, tuple(diffs))


def compose(a: dict, b: dict) -> dict:
    """Symbolic product of two differentials: ``{(row, col): Counter(monomial -> coeff)}``."""
    by_row: dict[int, list] = {}
    for (r, k), v in a.items():
        by_row.setdefault(k, []).append((r, v))
    out: dict = {}
    for (k, c), w in b.items():
        for r, v in by_row.get(k, []):
            mono = tuple(sorted((abs(v), abs(w))))
            sign = (1 if v > 0 else -1) * (1 if w > 0 else -1)
            out.setdefault((r, c), Counter())[mono] += sign
    return out


def verify_complex(K: KoszulComplex) -> bool:
    """Whether ``d_i d_{i+1} = 0`` holds symbolically for every ``i``."""
    for i in range(1, K.n):
        prod = compose(K.differential(i), K.differential(i + 1))
        if any(c != 0 for entry in prod.values() for c in entry.values()):
            return False
    return True


def variable_ideal(K: KoszulComplex, i: int) -> set[int]:
    """0-based indices of the variables occurring in ``d_i``."""
    if not 1 <= i <= K.n:
        raise ValueError(f"i must lie in [1, {K.n}]")
    return {abs(v) - 1 for v in K.differential(i).values()}


def specialize(K: KoszulComplex, algebra: ArtinianAlgebra, images) -> list[np.ndarray]:
    """Substitute one algebra element per variable; returns ``d_1, ..., d_n`` over the algebra."""
    images = [np.asarray(x, dtype=np.int64) % algebra.p for x in images]
    if len(images) != K.n:
        raise ValueError(f"need {K.n} images, got {len(images)}")
    out = []
    for i in range(1, K.n + 1):
        mat = np.zeros((comb(K.n, i - 1), comb(K.n, i), algebra.length), dtype=np.int64)
        for (r, c), v in K.differential(i).items():
            x = images[abs(v) - 1]
            mat[r, c] = x if v > 0 else (-x) % algebra.p
        out.append(mat)
    return out
