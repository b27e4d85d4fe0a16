import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from centralpoly.errors import CharacteristicMismatch, TruncationMismatch, UnitInNonunitary, ZeroPolynomial
from centralpoly.exterior import DenseGrassmann, GrassmannElement, random_element, random_even_odd
from centralpoly.field import QQ, Field
from centralpoly.freealg import (
    FreePoly, commutator, essential_split, evaluate, evaluate_dense, is_essential,
    multihomogeneous_components, substitute, word_type, words_of_type, x,
)
from centralpoly.tspace import w_poly
from centralpoly.verify import random_poly


def test_commutators_expand():
    assert commutator(x(1), x(2)) == FreePoly({(1, 2): 1, (2, 1): -1})
    c3 = commutator(x(1), x(2), x(3))
    assert c3 == FreePoly({(1, 2, 3): 1, (2, 1, 3): -1, (3, 1, 2): -1, (3, 2, 1): 1})
    assert str(c3) == "x1*x2*x3 - x2*x1*x3 - x3*x1*x2 + x3*x2*x1"


@given(st.integers(0, 10**6))
def test_self_commutator_vanishes(seed):
    f = random_poly(random.Random(seed), Field(5))
    assert not commutator(f, f)


def test_substitution():
    assert substitute(x(1) * x(2), {1: x(2)}) == x(2) ** 2
    one = FreePoly.const(1)
    assert not substitute(commutator(x(1, unitary=True), x(2, unitary=True)), {2: one})
    with pytest.raises(UnitInNonunitary):
        substitute(x(1) * x(2), {2: one})


def test_evaluation_examples():
    e1, e2 = GrassmannElement.generator(1), GrassmannElement.generator(2)
    assert evaluate(commutator(x(1), x(2)), {1: e1, 2: e2}) == (e1 * e2).scale(2)
    F3 = Field(3)
    rng = random.Random(3)
    for _ in range(20):
        g = random_element(rng, 4, F3)
        assert not evaluate(x(1, F3) ** 3, {1: g})


def test_w1_evaluates_to_even_times_odd_product():
    F3 = Field(3)
    rng = random.Random(7)
    for _ in range(10):
        c1, h1 = random_even_odd(rng, 8, F3, nterms=3)
        c2, h2 = random_even_odd(rng, 8, F3, nterms=3)
        got = evaluate(w_poly(1, 3), {1: c1 + h1, 2: c2 + h2})
        assert got == (c1 ** 2 * c2 ** 2 * h1 * h2).scale(F3(2))


def test_evaluation_errors():
    a = GrassmannElement.generator(1, truncation=3)
    b = GrassmannElement.generator(2, truncation=4)
    with pytest.raises(TruncationMismatch):
        evaluate(x(1) * x(2), {1: a, 2: b})
    with pytest.raises(CharacteristicMismatch):
        evaluate(x(1, Field(3)), {1: GrassmannElement.generator(1, Field(5))})


def test_multidegree():
    f = x(1) * x(2) * x(1)
    assert f.multidegree() == {1: 2, 2: 1}
    assert f.type_vector() == (2, 1)
    assert not (x(1) + x(1) * x(2)).is_multihomogeneous()
    assert w_poly(2, 3).type_vector() == (3, 3, 3, 3)
    with pytest.raises(ZeroPolynomial):
        FreePoly.zero().multidegree()


def test_multihomogeneous_components():
    assert multihomogeneous_components(x(1) + x(1) * x(2)) == [x(1), x(1) * x(2)]
    f = (x(1) + x(2)) ** 2
    assert multihomogeneous_components(f) == [x(1) ** 2, x(1) * x(2) + x(2) * x(1), x(2) ** 2]
    g = commutator(x(1), x(2))
    assert multihomogeneous_components(g) == [g]


def test_essential_split():
    comps, ess = essential_split(x(1) + x(1) * x(2))
    assert sorted(map(str, comps)) == ["x1", "x1*x2"] and not ess
    g = commutator(x(1), x(2))
    assert essential_split(g) == ([g], True)
    comps, _ = essential_split(x(1) + x(2) + x(1) * x(2))
    assert sorted(map(str, comps)) == ["x1", "x1*x2", "x2"]
    assert is_essential(g)


def test_words_of_type():
    ws = words_of_type((2, 1))
    assert ws == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert all(word_type(w, 2) == (2, 1) for w in ws)
    assert len(words_of_type((2, 2, 1, 1))) == 180


@pytest.mark.parametrize("p,unitary", [(0, False), (3, False), (5, True)])
def test_dense_evaluation_matches_sparse(p, unitary):
    F = Field(p)
    rng = random.Random(p)
    eng = DenseGrassmann(5, unitary, p)
    nrng = np.random.default_rng(p)
    for _ in range(10):
        f = random_poly(rng, F, unitary)
        vals = {i: eng.random(nrng, 4) for i in range(1, 5)}
        dense = evaluate_dense(f, eng, vals)
        for k in range(4):
            sparse = evaluate(f, {i: eng.to_element(v[k], F) for i, v in vals.items()})
            assert eng.to_element(dense[k] % p if p else dense[k], F) == sparse


@given(st.integers(0, 10**6))
def test_substitution_is_an_algebra_map(seed):
    rng = random.Random(seed)
    F = Field(3)
    f, g = random_poly(rng, F, max_degree=3), random_poly(rng, F, max_degree=3)
    sub = {i: random_poly(rng, F, max_degree=2) for i in range(1, 5)}
    assert substitute(f * g, sub) == substitute(f, sub) * substitute(g, sub)
    assert substitute(f + g, sub) == substitute(f, sub) + substitute(g, sub)
