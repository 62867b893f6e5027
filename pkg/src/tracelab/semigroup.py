"""Numerical semigroups given by generators.

Membership is stored as a bitmask over ``[0, F + 2e]``; everything past the
Frobenius number is a member.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce

from .errors import GuardError

MAX_ENUM_FROBENIUS = 30


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]
    frobenius: int
    gaps: tuple[int, ...]
    _bits: int = field(default=0, repr=False, compare=False)

    @classmethod
    def from_generators(cls, gens) -> "NumericalSemigroup":
        gens = sorted({int(g) for g in gens})
        if not gens:
            raise ValueError("empty input")
        if gens[0] <= 0:
            raise ValueError("generators must be positive")
        if reduce(math.gcd, gens) != 1:
            raise ValueError("not cofinite")
        ap = _apery_dijkstra(gens)
        m = gens[0]
        frob = max(ap) - m
        return cls._from_membership(frob, lambda n: n >= ap[n % m])

    @classmethod
    def from_gaps(cls, gaps) -> "NumericalSemigroup":
        """Build from an explicit gap set; its complement must be closed."""
        gaps = frozenset(int(g) for g in gaps)
        if any(g <= 0 for g in gaps):
            raise ValueError("gaps must be positive")
        frob = max(gaps, default=-1)
        top = 2 * frob + 4
        bits = ((1 << (top + 1)) - 1) & ~sum(1 << g for g in gaps)
        low = bits & ((1 << (frob + 1)) - 1)
        if _pair_sums(low, frob) & ~bits & ((1 << (frob + 1)) - 1):
            raise ValueError("gap set not closed under addition")
        return cls._from_bits(frob, bits)

    @classmethod
    def _from_membership(cls, frob: int, member) -> "NumericalSemigroup":
        top = 2 * frob + 4
        bits = sum(1 << n for n in range(top + 1) if member(n))
        return cls._from_bits(frob, bits)

    @classmethod
    def _from_bits(cls, frob: int, bits: int) -> "NumericalSemigroup":
        # bits must be exact on [0, 2F + 4]; minimal generators are <= F + e <= 2F + 2
        top = 2 * frob + 4
        bits &= (1 << (top + 1)) - 1
        gens = _minimal_generators(bits, top)
        gaps = tuple(n for n in range(1, frob + 1) if not bits >> n & 1)
        window = frob + 2 * gens[0] + 1
        return cls(tuple(gens), frob, gaps, bits & ((1 << window) - 1))

    # -- basic invariants -------------------------------------------------
    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @property
    def window(self) -> int:
        """Upper end (inclusive) of the stored membership window."""
        return self.frobenius + 2 * self.multiplicity

    def is_regular(self) -> bool:
        return self.generators == (1,)

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self.frobenius:
            return True
        return bool(self._bits >> n & 1)

    __contains__ = contains

    def members_upto(self, n: int) -> list[int]:
        return [k for k in range(n + 1) if self.contains(k)]

    def apery_set(self, n: int) -> list[int]:
        """Least member in each residue class mod ``n``, indexed by residue."""
        if n <= 0 or not self.contains(n):
            raise ValueError("invalid Apéry base")
        out = [-1] * n
        found = 0
        k = 0
        while found < n:
            if out[k % n] < 0 and self.contains(k):
                out[k % n] = k
                found += 1
            k += 1
        return out

    # -- classification ---------------------------------------------------
    def has_minimal_multiplicity(self) -> bool:
        return self.multiplicity == self.embedding_dimension

    def is_symmetric(self) -> bool:
        f = self.frobenius
        return all(self.contains(x) != self.contains(f - x) for x in range(f + 1))

    def is_arf(self) -> bool:
        """Every tail ``{t - s : t in S, t >= s}`` with ``s`` in S is closed under addition."""
        f = self.frobenius
        bits = self._bits
        for s in range(f + self.multiplicity + 1):
            if not bits >> s & 1:
                continue
            width = f - s + 1
            if width <= 0:
                continue
            tail = (bits >> s) & ((1 << width) - 1)
            if _pair_sums(tail, width - 1) & ~tail & ((1 << width) - 1):
                return False
        return True

    def flags(self) -> dict:
        return {
            "minimal_multiplicity": self.has_minimal_multiplicity(),
            "symmetric": self.is_symmetric(),
            "arf": self.is_arf(),
            "regular": self.is_regular(),
        }

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"


def _apery_dijkstra(gens: list[int]) -> list[int]:
    """Apéry set w.r.t. the smallest generator by shortest paths on residues."""
    import heapq

    m = gens[0]
    dist = [math.inf] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d > dist[r]:
            continue
        for g in gens[1:]:
            nd, nr = d + g, (r + g) % m
            if nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return [int(d) for d in dist]


def from_generators(gens) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(gens)


def enumerate_semigroups(max_frobenius: int) -> list[NumericalSemigroup]:
    """All numerical semigroups with Frobenius number at most ``max_frobenius``.

    Walks the semigroup tree downward: the children of S are ``S \\ {g}`` for
    the minimal generators ``g > F(S)``, and each child has Frobenius number
    ``g``, so the walk prunes at the bound. Sorted by gap list.
    """
    if max_frobenius > MAX_ENUM_FROBENIUS:
        raise GuardError("enumeration bound")
    top = 2 * max(max_frobenius, 0) + 4
    full = (1 << (top + 1)) - 1
    found: list[tuple[int, int]] = []
    stack = [(-1, full)]
    while stack:
        frob, bits = stack.pop()
        found.append((frob, bits))
        for g in _minimal_generators(bits, top):
            if frob < g <= max_frobenius:
                stack.append((g, bits & ~(1 << g)))
    out = [NumericalSemigroup._from_bits(f, b) for f, b in found]
    out.sort(key=lambda s: s.gaps)
    return out


def _pair_sums(bits: int, limit: int) -> int:
    """Bitmask of ``a + b`` for nonzero members ``a, b`` of ``bits``, up to ``limit``."""
    nz = bits & ~1
    out = 0
    a = nz
    while a:
        low = a & -a
        shift = low.bit_length() - 1
        if shift > limit:
            break
        out |= nz << shift
        a ^= low
    return out & ((1 << (limit + 1)) - 1)


def _minimal_generators(bits: int, top: int) -> list[int]:
    nz = bits & ~1
    gens = nz & ~_pair_sums(bits, top)
    return [n for n in range(1, top + 1) if gens >> n & 1]
