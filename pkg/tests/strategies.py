"""Shared hypothesis strategies."""

from math import gcd
from functools import reduce

from hypothesis import strategies as st

from tracelab.semigroup import NumericalSemigroup


@st.composite
def semigroups(draw, max_gen=12, max_count=4):
    gens = draw(st.lists(st.integers(1, max_gen), min_size=1, max_size=max_count))
    if reduce(gcd, gens) != 1:
        gens = gens + [draw(st.integers(1, max_gen))] + [1 + max(gens)]
    return NumericalSemigroup.from_generators(gens)


@st.composite
def value_sets(draw, sg=None):
    """A semigroup together with a finite list of ideal generators."""
    sg = sg if sg is not None else draw(semigroups())
    vals = draw(st.lists(st.integers(-6, sg.frobenius + 6), min_size=1, max_size=4))
    return sg, vals
