import pytest
from hypothesis import given, strategies as st

from tracelab.errors import GuardError
from tracelab.oracles import coin_members
from tracelab.semigroup import NumericalSemigroup, enumerate_semigroups

from strategies import semigroups

S = NumericalSemigroup.from_generators


def test_full_monoid():
    one = S([1])
    assert one.generators == (1,)
    assert one.frobenius == -1
    assert one.gaps == ()
    assert one.is_regular()
    assert one.has_minimal_multiplicity() and one.is_symmetric() and one.is_arf()


@pytest.mark.parametrize(
    "gens, frob, gaps",
    [
        ([3, 4, 5], 2, (1, 2)),
        ([2, 3], 1, (1,)),
        ([3, 7], 11, (1, 2, 4, 5, 8, 11)),
        ([4, 6, 9, 11], 7, (1, 2, 3, 5, 7)),
        ([5, 7, 9], 13, (1, 2, 3, 4, 6, 8, 11, 13)),
    ],
)
def test_frobenius_and_gaps(gens, frob, gaps):
    sg = S(gens)
    assert sg.frobenius == frob
    assert sg.gaps == gaps


def test_mcnugget():
    sg = S([6, 9, 20])
    assert sg.frobenius == 43
    assert set(sg.members_upto(120)) == coin_members([6, 9, 20], 120)


def test_generators_are_minimalized():
    assert S([3, 4, 5, 6, 7, 8, 9]).generators == (3, 4, 5)
    assert S([4, 2, 3]).generators == (2, 3)


@pytest.mark.parametrize("bad, msg", [([], "empty input"), ([4, 6], "not cofinite"), ([0], "positive")])
def test_from_generators_errors(bad, msg):
    with pytest.raises(ValueError, match=msg):
        S(bad)


def test_contains():
    sg = S([3, 4, 5])
    assert not sg.contains(2)
    assert sg.contains(0)
    assert 7 in S([2, 3])
    assert not sg.contains(-3)


def test_apery():
    assert S([2, 3]).apery_set(2) == [0, 3]
    assert S([1]).apery_set(1) == [0]
    assert S([3, 4, 5]).apery_set(3) == [0, 4, 5]
    for bad in (0, -1, 2):
        with pytest.raises(ValueError, match="invalid Apéry base"):
            S([3, 4, 5]).apery_set(bad)


def test_predicates():
    assert S([3, 4, 5]).has_minimal_multiplicity()
    assert not S([4, 5, 6]).has_minimal_multiplicity()
    assert S([2, 3]).is_symmetric()
    assert not S([3, 4, 5]).is_symmetric()
    assert S([3, 4, 5]).is_arf()
    assert not S([4, 5, 6]).is_arf()
    # multiplicity two: every tail is a semigroup
    assert S([2, 5]).is_arf()


def test_from_gaps_roundtrip():
    sg = S([5, 7, 9])
    assert NumericalSemigroup.from_gaps(sg.gaps) == sg
    with pytest.raises(ValueError):
        NumericalSemigroup.from_gaps([2])


def test_enumeration_small():
    gens = lambda b: [s.generators for s in enumerate_semigroups(b)]
    assert gens(0) == [(1,)]
    assert gens(1) == [(1,), (2, 3)]
    assert gens(2) == [(1,), (2, 3), (3, 4, 5)]
    assert (2, 5) in gens(3)


def test_enumeration_counts():
    # semigroups by Frobenius number 1..12, plus the full monoid
    by_f = [1, 1, 2, 2, 5, 4, 11, 10, 21, 22, 51, 40]
    sgs = enumerate_semigroups(12)
    assert len(sgs) == 1 + sum(by_f)
    for f, n in enumerate(by_f, start=1):
        assert sum(s.frobenius == f for s in sgs) == n
    assert len({s.gaps for s in sgs}) == len(sgs)
    assert [s.gaps for s in sgs] == sorted(s.gaps for s in sgs)


def test_enumeration_guard():
    with pytest.raises(GuardError, match="enumeration bound"):
        enumerate_semigroups(31)


def test_arf_implies_minimal_multiplicity():
    for sg in enumerate_semigroups(25):
        if sg.is_arf():
            assert sg.has_minimal_multiplicity(), sg


@given(semigroups())
def test_membership_matches_coin_search(sg):
    top = sg.frobenius + 2 * sg.multiplicity
    assert set(sg.members_upto(top)) == coin_members(sg.generators, top)
    assert all(g <= sg.frobenius for g in sg.gaps)


@given(semigroups())
def test_apery_properties(sg):
    e = sg.multiplicity
    ap = sg.apery_set(e)
    assert len(ap) == e
    assert sorted(a % e for a in ap) == list(range(e))
    assert all(sg.contains(a) and not sg.contains(a - e) for a in ap)
    nonzero = set(ap) - {0}
    assert sg.has_minimal_multiplicity() == (nonzero <= set(sg.generators))


@given(semigroups())
def test_symmetric_gap_count(sg):
    assert sg.is_symmetric() == (2 * sg.genus == sg.frobenius + 1)


@given(semigroups(), st.integers(0, 40))
def test_generators_minimal(sg, n):
    for g in sg.generators:
        others = [h for h in sg.generators if h != g]
        assert not others or g not in coin_members(others, g)
