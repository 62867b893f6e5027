"""Brute-force reference computations, independent of the fast paths.

Nothing here uses the bitmask arithmetic of ``ideals`` or the minimal
generators of value ideals; it only asks the semigroup for membership.
"""

from __future__ import annotations

from .ideals import ValueIdeal


def coin_members(gens, upto: int) -> set[int]:
    """Nonnegative integer combinations of ``gens`` up to ``upto``."""
    reach = [False] * (upto + 1)
    reach[0] = True
    for n in range(1, upto + 1):
        reach[n] = any(n >= g and reach[n - g] for g in gens)
    return {n for n, ok in enumerate(reach) if ok}


def trace_window_scan(ideal: ValueIdeal) -> ValueIdeal:
    """Trace of a value ideal by scanning multipliers.

    ``D = {d : d + I in S}`` and the trace is ``D + I``; membership of every
    ``x`` in a window is decided directly, and the window is shown to end in
    a run of ``e`` members before the tail is declared full.
    """
    sg = ideal.semigroup
    e = sg.multiplicity
    f = max(sg.frobenius, 0)
    lo = ideal.min
    c = ideal.conductor
    # beyond this every element of I lands past F after any admissible shift d >= -lo
    v_top = c + f + 2 * e + 1
    values = [v for v in range(lo, v_top + 1) if ideal.contains(v)]

    def in_colon(d: int) -> bool:
        return all(sg.contains(d + v) for v in values)

    top = f + 1 + (c - lo) + 2 * e
    members = []
    for x in range(0, top + e):
        if any(in_colon(x - v) for v in values if x - v >= -lo):
            members.append(x)
    tail = set(range(top, top + e))
    assert tail <= set(members), "window too small for the trace scan"
    return ValueIdeal.from_members(sg, [x for x in members if x < top], top)
