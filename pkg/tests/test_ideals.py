import pytest
from hypothesis import given, strategies as st

from tracelab.errors import GuardError
from tracelab.ideals import (
    ModuleSum,
    ValueIdeal,
    canonical_ideal,
    endomorphism_ring,
    enumerate_normalized_ideals,
    is_nearly_gorenstein,
    isomorphic,
    m_power,
    maximal_ideal,
    ring_ideal,
    trace_over_endomorphisms,
)
from tracelab.oracles import coin_members, trace_window_scan
from tracelab.semigroup import NumericalSemigroup, enumerate_semigroups

from strategies import semigroups, value_sets

S = NumericalSemigroup.from_generators
HORIZON = 80


def brute(sg, vals, lo=-20, hi=HORIZON):
    """Members of the ideal generated by ``vals`` inside [lo, hi], by coin search."""
    mem = coin_members(sg.generators, hi - lo + 20)
    return {x for x in range(lo, hi + 1) if any(x - v in mem for v in vals)}


def as_set(ideal, lo=-20, hi=HORIZON):
    return {x for x in range(lo, hi + 1) if ideal.contains(x)}


# -- examples ------------------------------------------------------------------
def test_maximal_ideal():
    assert maximal_ideal(S([2, 3])).format() == "{2,3,4,...}"
    assert maximal_ideal(S([3, 4, 5])).format() == "{3,4,5,...}"
    assert maximal_ideal(S([1])).format() == "{1,2,3,...}"


def test_colon_and_product_examples():
    sg = S([3, 4, 5])
    R, m = ring_ideal(sg), maximal_ideal(sg)
    assert R.colon(m).format() == "{0,1,2,...}"
    assert maximal_ideal(S([2, 3])).multiply(maximal_ideal(S([2, 3]))).format() == "{4,5,6,...}"
    I = ValueIdeal.generated(sg, [0, 1])
    assert I.colon(I).contains(0)


def test_semigroup_mismatch():
    with pytest.raises(ValueError, match="semigroup mismatch"):
        maximal_ideal(S([2, 3])).add(maximal_ideal(S([3, 4, 5])))


def test_trace_examples():
    sg = S([3, 4, 5])
    m = maximal_ideal(sg)
    assert m.trace() == m
    assert ValueIdeal.generated(sg, [7]).trace() == ring_ideal(sg)
    dvr = S([1])
    assert maximal_ideal(dvr).trace() == ring_ideal(dvr)


# values frozen from trace_window_scan, which only asks the semigroup for membership
@pytest.mark.parametrize(
    "gens, vals, expected",
    [
        ([3, 7], [0, 1], "{6,7,9,10,12,13,14,...}"),
        ([4, 5, 6], [0, 2], "{4,6,8,9,10,...}"),
        ([5, 7, 9], [0, 3, 4], "{12,14,15,16,...}"),
        ([3, 4, 5], [0, 1], "{3,4,5,...}"),
    ],
)
def test_trace_frozen(gens, vals, expected):
    assert ValueIdeal.generated(S(gens), vals).trace().format() == expected


def test_minimal_generators():
    sg = S([3, 4, 5])
    assert maximal_ideal(sg).minimal_generators() == (3, 4, 5)
    assert maximal_ideal(sg).mu() == 3
    assert ring_ideal(sg).minimal_generators() == (0,)
    assert ValueIdeal.generated(sg, [0, 1]).minimal_generators() == (0, 1)


def test_ulrich():
    assert maximal_ideal(S([3, 4, 5])).is_ulrich()
    assert not maximal_ideal(S([3, 7])).is_ulrich()
    assert not ring_ideal(S([2, 3])).is_ulrich()


def test_full_trace():
    for gens in ([2, 3], [3, 4, 5], [4, 6, 9, 11], [3, 7]):
        sg = S(gens)
        assert maximal_ideal(sg).is_full_trace()
        assert not ValueIdeal.generated(sg, [5]).is_full_trace()
    sg = S([3, 4, 5])
    assert ModuleSum((maximal_ideal(sg), m_power(sg, 2))).is_full_trace()


def test_m_power_isomorphism():
    sg = S([3, 4, 5])
    assert isomorphic(maximal_ideal(sg), m_power(sg, 2)) == 3
    # <2,5>: m^2 = {4,6,7,...} = 2 + m
    sg = S([2, 5])
    assert m_power(sg, 2).format() == "{4,6,7,8,...}"
    assert isomorphic(maximal_ideal(sg), m_power(sg, 2)) == 2
    # <4,5,6>: m^2 = {8,9,10,...} is not a shift of m
    sg = S([4, 5, 6])
    assert isomorphic(maximal_ideal(sg), m_power(sg, 2)) is None
    I = ValueIdeal.generated(sg, [0, 3])
    assert isomorphic(I, I) == 0


def test_canonical():
    sg = S([2, 3])
    assert canonical_ideal(sg).trace() == ring_ideal(sg)
    assert is_nearly_gorenstein(sg)
    sg = S([3, 4, 5])
    assert canonical_ideal(sg).trace() == maximal_ideal(sg)
    assert is_nearly_gorenstein(sg)
    # frozen from the window scan
    assert canonical_ideal(S([3, 7])).format() == "{0,3,6,7,9,10,12,13,14,...}"
    assert canonical_ideal(S([4, 5, 6])).format() == "{0,4,5,6,8,9,10,...}"
    assert canonical_ideal(S([5, 6, 7, 8, 9])).trace().format() == "{5,6,7,...}"


def test_endomorphism_ring():
    assert endomorphism_ring(S([3, 4, 5])).generators == (1,)
    assert endomorphism_ring(S([2, 3])).generators == (1,)
    assert endomorphism_ring(S([4, 6, 9, 11])).generators == (2, 5)
    sg = S([3, 4, 5])
    m = maximal_ideal(sg)
    assert m.trace().same_values(trace_over_endomorphisms(m).shift(3))


def test_normalized_ideal_counts():
    assert [I.format() for I in enumerate_normalized_ideals(S([1]))] == ["{0,1,2,...}"]
    assert len(enumerate_normalized_ideals(S([2, 3]))) == 2
    assert len(enumerate_normalized_ideals(S([3, 4, 5]))) == 4
    assert len(enumerate_normalized_ideals(S([3, 5, 7]))) == 6
    assert len(enumerate_normalized_ideals(S([4, 5, 6, 7]))) == 8
    assert len(enumerate_normalized_ideals(S([3, 7]))) == 12
    assert len(enumerate_normalized_ideals(S([4, 6, 9, 11]))) == 16


def test_normalized_enumeration_is_complete():
    # brute force over all subsets of the gaps closed under the semigroup
    from itertools import combinations

    sg = S([4, 6, 9, 11])
    mem = set(sg.members_upto(40))
    found = set()
    for r in range(len(sg.gaps) + 1):
        for extra in combinations(sg.gaps, r):
            E = mem | set(extra)
            if all(x + g in E for x in E for g in sg.generators if x + g <= 40):
                found.add(frozenset(E))
    got = {frozenset(x for x in range(41) if I.contains(x)) for I in enumerate_normalized_ideals(sg)}
    assert got == found


def test_gap_guard():
    sg = S([11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21])
    assert sg.genus == 10
    big = S([22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43])
    with pytest.raises(GuardError, match="gap bound"):
        enumerate_normalized_ideals(big)


def test_module_sum():
    sg = S([3, 4, 5])
    m = maximal_ideal(sg)
    mod = ModuleSum((m, ValueIdeal.generated(sg, [0])))
    assert mod.rank == 2
    assert mod.has_free_summand()
    assert mod.trace() == ring_ideal(sg)
    assert ModuleSum((m, m.shift(4))).split_maximal_ideal() == (0, (m.shift(4),))
    with pytest.raises(ValueError, match="semigroup mismatch"):
        ModuleSum((m, maximal_ideal(S([2, 3]))))


def test_to_dict_roundtrip():
    from tracelab.formats import load_ideal

    sg = S([4, 6, 9, 11])
    for I in enumerate_normalized_ideals(sg):
        assert load_ideal(I.shift(-2).to_dict()) == I.shift(-2)


# -- properties against the brute-force set model -------------------------------
@given(value_sets())
def test_generated_matches_brute(sv):
    sg, vals = sv
    I = ValueIdeal.generated(sg, vals)
    assert as_set(I) == brute(sg, vals)
    assert I.is_closed()
    assert set(I.minimal_generators()) <= set(vals)


@given(semigroups(max_gen=8), st.data())
def test_sum_product_colon_match_brute(sg, data):
    a = data.draw(st.lists(st.integers(-4, 10), min_size=1, max_size=3))
    b = data.draw(st.lists(st.integers(-4, 10), min_size=1, max_size=3))
    I, J = ValueIdeal.generated(sg, a), ValueIdeal.generated(sg, b)
    assert as_set(I.add(J)) == brute(sg, a + b)
    assert as_set(I.multiply(J)) == brute(sg, [x + y for x in a for y in b])
    # x in (I : J) iff x + b in I for every generator b of J
    ival = as_set(I, -60, 200)
    col = {x for x in range(-40, 60) if all(x + y in ival for y in b)}
    assert {x for x in range(-40, 60) if I.colon(J).contains(x)} == col


@given(value_sets())
def test_trace_matches_window_scan(sv):
    sg, vals = sv
    I = ValueIdeal.generated(sg, vals)
    assert I.trace() == trace_window_scan(I)


@given(value_sets())
def test_trace_laws(sv):
    sg, vals = sv
    I = ValueIdeal.generated(sg, vals)
    tr = I.trace()
    assert tr.is_integral()
    assert tr.trace() == tr
    assert I.shift(5).trace() == tr
    integral = I.shift(ring_ideal(sg).colon(I).min)
    assert integral.issubset(integral.trace())
    assert (tr == ring_ideal(sg)) == I.is_principal()


@given(value_sets())
def test_mingens_generate(sv):
    sg, vals = sv
    I = ValueIdeal.generated(sg, vals)
    assert ValueIdeal.generated(sg, I.minimal_generators()) == I
    assert I.mu() <= sg.multiplicity


def test_minimal_multiplicity_powers():
    for sg in enumerate_semigroups(10):
        if not sg.has_minimal_multiplicity() or sg.is_regular():
            continue
        m = maximal_ideal(sg)
        for n in range(1, 7):
            assert isomorphic(m, m_power(sg, n)) is not None
        assert m_power(sg, sg.multiplicity - 1).mu() == sg.multiplicity
