import numpy as np
import pytest
from hypothesis import given, strategies as st

from tracelab import artinian as art
from tracelab import koszul
from tracelab.errors import GuardError
from tracelab.polyparse import parse_poly


def test_small_complexes():
    assert koszul.build(1).format(1) == [["x1"]]
    K = koszul.build(2)
    assert K.format(1) == [["x1", "x2"]]
    assert K.format(2) == [["-x2"], ["x1"]]
    assert K.ranks() == [1, 2, 1]


def test_three_variables():
    K = koszul.build(3)
    d2 = K.dense(2)
    assert d2.shape == (3, 3)
    assert {abs(v) for v in d2.flat if v} == {1, 2, 3}


def test_colex_order():
    assert koszul.colex_subsets(3, 2) == [(0, 1), (0, 2), (1, 2)]
    assert koszul.colex_subsets(4, 2) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


@pytest.mark.parametrize("n", range(1, 7))
def test_certificates(n):
    K = koszul.build(n)
    assert koszul.verify_complex(K)
    for i in range(1, n + 1):
        assert koszul.variable_ideal(K, i) == set(range(n))


def test_variable_ideal_examples():
    assert koszul.variable_ideal(koszul.build(4), 2) == {0, 1, 2, 3}
    assert koszul.variable_ideal(koszul.build(1), 1) == {0}
    with pytest.raises(ValueError):
        koszul.variable_ideal(koszul.build(2), 3)


def test_guards():
    for n in (0, 11):
        with pytest.raises(GuardError):
            koszul.build(n)


def test_broken_signs_are_detected():
    K = koszul.build(3)
    d = dict(K.differentials[1])
    key = next(iter(d))
    d[key] = -d[key]
    bad = koszul.KoszulComplex(3, (K.differentials[0], d, K.differentials[2]))
    assert not koszul.verify_complex(bad)


def test_specialize():
    alg = art.monomial_quotient(101, ["x", "y"], ["x^2", "x*y", "y^2"])
    K = koszul.build(2)
    d1, d2 = koszul.specialize(K, alg, [alg.var(0), alg.var(1)])
    assert not art.matmul(alg, d1, d2).any()
    zero = koszul.specialize(K, alg, [alg.zero(), alg.zero()])
    assert not any(z.any() for z in zero)
    with pytest.raises(ValueError):
        koszul.specialize(K, alg, [alg.zero()])


def test_specialize_lemma():
    alg = art.monomial_quotient(101, ["x", "y"], ["x^2", "y^2"])
    images = [parse_poly(t, alg) for t in ("x", "y", "x*y")]
    for d in koszul.specialize(koszul.build(3), alg, images):
        assert art.check_lemma_matrix_trace(alg, d)


@given(st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_specialized_complex(n, seed):
    rng = np.random.default_rng(seed)
    alg = art.monomial_quotient(3, ["x", "y"], ["x^3", "y^2"])
    images = [art.random_element(alg, rng) for _ in range(n)]
    mats = koszul.specialize(koszul.build(n), alg, images)
    for a, b in zip(mats, mats[1:]):
        assert not art.matmul(alg, a, b).any()
