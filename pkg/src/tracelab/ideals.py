"""Fractional monomial ideals of a numerical semigroup ring, by value sets.

A value set is a bounded-below set of integers that is closed under adding
semigroup elements and contains every integer from its conductor on. It is
stored as ``start`` (its minimum), ``conductor`` and a bitmask of the members
in ``[start, conductor)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import GuardError
from .semigroup import NumericalSemigroup

MAX_GAPS = 20


def _ones(n: int) -> int:
    return (1 << n) - 1 if n > 0 else 0


class ValueIdeal:
    __slots__ = ("semigroup", "start", "conductor", "bits", "__dict__")

    def __init__(self, semigroup: NumericalSemigroup, start: int, conductor: int, bits: int):
        # canonical form is produced by _normalize; callers use the constructors below
        self.semigroup = semigroup
        self.start = start
        self.conductor = conductor
        self.bits = bits

    # -- constructors -----------------------------------------------------
    @classmethod
    def _normalize(cls, sg: NumericalSemigroup, lo: int, hi: int, bits: int) -> "ValueIdeal":
        """Members: bits over [lo, hi) relative to lo, plus everything >= hi."""
        bits &= _ones(hi - lo)
        while hi > lo and bits >> (hi - 1 - lo) & 1:
            hi -= 1
        bits &= _ones(hi - lo)
        if bits == 0:
            return cls(sg, hi, hi, 0)
        shift = (bits & -bits).bit_length() - 1
        return cls(sg, lo + shift, hi, bits >> shift)

    @classmethod
    def ring(cls, sg: NumericalSemigroup) -> "ValueIdeal":
        c = sg.conductor
        return cls._normalize(sg, 0, c, sum(1 << n for n in range(c) if sg.contains(n)))

    @classmethod
    def generated(cls, sg: NumericalSemigroup, values) -> "ValueIdeal":
        """Smallest value ideal containing ``values``: the union of ``v + S``."""
        values = sorted(set(int(v) for v in values))
        if not values:
            raise ValueError("an ideal needs at least one value")
        ring = cls.ring(sg)
        out = ring.shift(values[0])
        for v in values[1:]:
            out = out.add(ring.shift(v))
        return out

    @classmethod
    def from_members(cls, sg: NumericalSemigroup, members, conductor: int) -> "ValueIdeal":
        """From an explicit member list below ``conductor``; checks closure."""
        members = sorted(set(int(v) for v in members if v < conductor))
        lo = min(members, default=conductor)
        bits = sum(1 << (v - lo) for v in members)
        out = cls._normalize(sg, lo, conductor, bits)
        if not out.is_closed():
            raise ValueError("value set is not closed under the semigroup")
        return out

    # -- membership -------------------------------------------------------
    @property
    def min(self) -> int:
        return self.start

    @property
    def sporadic(self) -> tuple[int, ...]:
        return tuple(self.start + i for i in range(self.conductor - self.start) if self.bits >> i & 1)

    def contains(self, x: int) -> bool:
        if x >= self.conductor:
            return True
        if x < self.start:
            return False
        return bool(self.bits >> (x - self.start) & 1)

    __contains__ = contains

    def window(self, lo: int, hi: int) -> int:
        """Members in ``[lo, hi)`` as a bitmask relative to ``lo``."""
        if hi <= lo:
            return 0
        full = self.bits | (_ones(hi - self.conductor) << (self.conductor - self.start))
        if self.start >= lo:
            full <<= self.start - lo
        else:
            full >>= lo - self.start
        return full & _ones(hi - lo)

    def members(self, upto: int) -> list[int]:
        return [x for x in range(self.start, upto + 1) if self.contains(x)]

    def is_closed(self) -> bool:
        sg = self.semigroup
        hi = self.conductor + sg.multiplicity
        w = self.window(self.start, hi)
        span = hi - self.start
        for g in sg.generators:
            if (w << g) & _ones(span) & ~w:
                return False
        return True

    # -- comparisons ------------------------------------------------------
    def _key(self):
        return (self.start, self.conductor, self.bits)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ValueIdeal)
            and self._key() == other._key()
            and self.semigroup.generators == other.semigroup.generators
        )

    def __hash__(self) -> int:
        return hash((self._key(), self.semigroup.generators))

    def same_values(self, other: "ValueIdeal") -> bool:
        """Equality of value sets, ignoring which semigroup acts."""
        return self._key() == other._key()

    def issubset(self, other: "ValueIdeal") -> bool:
        if self.start < other.start:
            return False
        hi = max(self.conductor, other.conductor)
        mine = self.window(self.start, hi)
        return not (mine & ~other.window(self.start, hi))

    __le__ = issubset

    def _check_same(self, other: "ValueIdeal") -> None:
        if self.semigroup.generators != other.semigroup.generators:
            raise ValueError("semigroup mismatch")

    # -- arithmetic -------------------------------------------------------
    def shift(self, a: int) -> "ValueIdeal":
        return ValueIdeal(self.semigroup, self.start + a, self.conductor + a, self.bits)

    def add(self, other: "ValueIdeal") -> "ValueIdeal":
        self._check_same(other)
        lo = min(self.start, other.start)
        hi = max(self.conductor, other.conductor)
        return ValueIdeal._normalize(self.semigroup, lo, hi, self.window(lo, hi) | other.window(lo, hi))

    __or__ = add

    def intersect(self, other: "ValueIdeal") -> "ValueIdeal":
        self._check_same(other)
        lo = max(self.start, other.start)
        hi = max(self.conductor, other.conductor)
        return ValueIdeal._normalize(self.semigroup, lo, hi, self.window(lo, hi) & other.window(lo, hi))

    __and__ = intersect

    def multiply(self, other: "ValueIdeal") -> "ValueIdeal":
        """Product ideal: generated by the pairwise sums of minimal generators."""
        self._check_same(other)
        gens = other.minimal_generators()
        out = self.shift(gens[0])
        for g in gens[1:]:
            out = out.add(self.shift(g))
        return out

    __mul__ = multiply

    def colon(self, other: "ValueIdeal") -> "ValueIdeal":
        """``{x : x + other in self}``, the intersection of ``self - g`` over generators of ``other``."""
        self._check_same(other)
        gens = other.minimal_generators()
        out = self.shift(-gens[0])
        for g in gens[1:]:
            out = out.intersect(self.shift(-g))
        return out

    def trace(self) -> "ValueIdeal":
        return self.multiply(ValueIdeal.ring(self.semigroup).colon(self))

    # -- generators and predicates ---------------------------------------
    def minimal_generators(self) -> tuple[int, ...]:
        return self._mingens

    @cached_property
    def _mingens(self) -> tuple[int, ...]:
        sg = self.semigroup
        hi = self.conductor + sg.multiplicity
        span = hi - self.start
        w = self.window(self.start, hi)
        hit = 0
        for g in sg.generators:
            hit |= w << g
        gens = w & ~hit & _ones(span)
        return tuple(self.start + i for i in range(span) if gens >> i & 1)

    def mu(self) -> int:
        return len(self.minimal_generators())

    def is_ulrich(self) -> bool:
        return self.mu() == self.semigroup.multiplicity

    def is_full_trace(self) -> bool:
        return self.trace() == maximal_ideal(self.semigroup)

    def is_integral(self) -> bool:
        return self.issubset(ValueIdeal.ring(self.semigroup))

    def is_principal(self) -> bool:
        return self.mu() == 1

    def normalized(self) -> "ValueIdeal":
        return self.shift(-self.start)

    def rebase(self, sg: NumericalSemigroup) -> "ValueIdeal":
        """The same value set viewed over another semigroup (it must be closed there)."""
        out = ValueIdeal(sg, self.start, self.conductor, self.bits)
        if not out.is_closed():
            raise ValueError("value set is not a module over the target semigroup")
        return out

    # -- display ----------------------------------------------------------
    def format(self, tail: int = 3) -> str:
        shown = list(self.sporadic) + [self.conductor + i for i in range(tail)]
        return "{" + ",".join(map(str, shown)) + ",...}"

    def to_dict(self) -> dict:
        return {
            "semigroup": {"generators": list(self.semigroup.generators)},
            "values": list(self.minimal_generators()),
            "min": self.start,
            "sporadic": list(self.sporadic),
            "conductor": self.conductor,
        }

    def __repr__(self) -> str:
        return f"ValueIdeal({self.format()} over {self.semigroup})"


def maximal_ideal(sg: NumericalSemigroup) -> ValueIdeal:
    ring = ValueIdeal.ring(sg)
    return ValueIdeal._normalize(sg, 1, ring.conductor if ring.conductor > 1 else 1, ring.window(1, ring.conductor))


def ring_ideal(sg: NumericalSemigroup) -> ValueIdeal:
    return ValueIdeal.ring(sg)


def m_power(sg: NumericalSemigroup, n: int) -> ValueIdeal:
    if n < 1:
        raise ValueError("power must be positive")
    m = maximal_ideal(sg)
    out = m
    for _ in range(n - 1):
        out = out.multiply(m)
    return out


def isomorphic(a: ValueIdeal, b: ValueIdeal) -> int | None:
    """The shift ``s`` with ``b = s + a``, or None."""
    s = b.start - a.start
    return s if a.shift(s) == b else None


def canonical_ideal(sg: NumericalSemigroup) -> ValueIdeal:
    f = sg.frobenius
    members = [x for x in range(0, f + 1) if not sg.contains(f - x)]
    return ValueIdeal.from_members(sg, members, f + 1)


def is_nearly_gorenstein(sg: NumericalSemigroup) -> bool:
    return maximal_ideal(sg).issubset(canonical_ideal(sg).trace())


def endomorphism_ring(sg: NumericalSemigroup) -> NumericalSemigroup:
    """Value semigroup of ``(m : m)``; it contains 0 and is closed under addition."""
    m = maximal_ideal(sg)
    e = m.colon(m)
    assert e.start == 0, "not a ring"
    f = e.conductor - 1
    gaps = [x for x in range(1, f + 1) if not e.contains(x)]
    try:
        return NumericalSemigroup.from_gaps(gaps)
    except ValueError as exc:  # pragma: no cover - would contradict (m:m) being a ring
        raise AssertionError("not a ring") from exc


def enumerate_normalized_ideals(sg: NumericalSemigroup) -> list[ValueIdeal]:
    """Every value ideal with minimum 0, one per isomorphism class.

    Such an ideal is ``S`` together with a subset of the gaps, closed under
    adding generators; all subsets are tried.
    """
    gaps = sg.gaps
    if len(gaps) > MAX_GAPS:
        raise GuardError("gap bound")
    f = sg.frobenius
    if f < 0:
        return [ValueIdeal.ring(sg)]
    width = f + 1
    base = sum(1 << n for n in range(width) if sg.contains(n))
    small = [g for g in sg.generators if g <= f]
    out = []
    for mask in range(1 << len(gaps)):
        bits = base
        for i, g in enumerate(gaps):
            if mask >> i & 1:
                bits |= 1 << g
        if any((bits << g) & ~bits & _ones(width) for g in small):
            continue
        out.append(ValueIdeal._normalize(sg, 0, width, bits))
    out.sort(key=lambda I: (I.conductor, I.sporadic))
    return out


@dataclass(frozen=True)
class ModuleSum:
    """Finite direct sum of value ideals over one semigroup."""

    summands: tuple[ValueIdeal, ...]

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(self.summands))
        if not self.summands:
            raise ValueError("a module sum needs at least one summand")
        gens = {s.semigroup.generators for s in self.summands}
        if len(gens) != 1:
            raise ValueError("semigroup mismatch")

    @property
    def semigroup(self) -> NumericalSemigroup:
        return self.summands[0].semigroup

    @property
    def rank(self) -> int:
        return len(self.summands)

    def trace(self) -> ValueIdeal:
        out = self.summands[0].trace()
        for s in self.summands[1:]:
            out = out.add(s.trace())
        return out

    def mu(self) -> int:
        return sum(s.mu() for s in self.summands)

    def is_ulrich(self) -> bool:
        return all(s.is_ulrich() for s in self.summands)

    def is_full_trace(self) -> bool:
        return self.trace() == maximal_ideal(self.semigroup)

    def has_free_summand(self) -> bool:
        return any(s.is_principal() for s in self.summands)

    def split_maximal_ideal(self) -> tuple[int, tuple[ValueIdeal, ...]] | None:
        """Index of a summand isomorphic to ``m`` and the remaining summands."""
        m = maximal_ideal(self.semigroup)
        for i, s in enumerate(self.summands):
            if isomorphic(m, s) is not None:
                return i, self.summands[:i] + self.summands[i + 1 :]
        return None

    def to_dict(self) -> dict:
        return {"summands": [s.to_dict() for s in self.summands]}


def trace_over_endomorphisms(module: ModuleSum | ValueIdeal) -> ValueIdeal:
    """Trace of an Ulrich module viewed as a module over ``E = (m : m)``.

    Requires minimal multiplicity; the result is a value set over E's semigroup.
    """
    if isinstance(module, ValueIdeal):
        module = ModuleSum((module,))
    sg = module.semigroup
    if not sg.has_minimal_multiplicity():
        raise ValueError("minimal multiplicity required")
    if not module.is_ulrich():
        raise ValueError("Ulrich module required")
    endo = endomorphism_ring(sg)
    traces = [s.rebase(endo).trace() for s in module.summands]
    out = traces[0]
    for t in traces[1:]:
        out = out.add(t)
    return out
