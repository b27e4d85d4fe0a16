import random

import pytest
from hypothesis import given, strategies as st

from centralpoly.canon import (
    R, R1, S1_WITNESS, S_WITNESS, T3, T3_PLUS_XP, SSElement, classify, normalize,
    normal_form_of_word, sort_descending, ss_to_freepoly, venkova_compare, venkova_key,
)
from centralpoly.errors import UnitInNonunitary
from centralpoly.field import QQ, Field
from centralpoly.freealg import FreePoly, commutator, x
from centralpoly.verify import random_poly


def ss(beginning=(), end=()):
    return SSElement(tuple(beginning), tuple(end))


def test_invariants_rejected():
    with pytest.raises(ValueError):
        ss([(2, 1), (1, 1)])
    with pytest.raises(ValueError):
        ss([(1, 1)], [(1, 2, 0, 0)])
    with pytest.raises(ValueError):
        ss()
    with pytest.raises(ValueError):
        ss([(1, 0)])


def test_ss_to_freepoly_examples():
    assert ss_to_freepoly(ss([(1, 2)])) == x(1) ** 2
    assert ss_to_freepoly(ss(end=[(1, 2, 0, 0)])) == commutator(x(1), x(2))
    u = ss([(3, 1)], [(1, 2, 1, 1)])
    assert ss_to_freepoly(u) == x(3) * commutator(x(1), x(2)) * x(1) * x(2)
    assert str(u) == "x3*[x1,x2]*x1*x2"
    assert (u.lbeg, u.lend, u.degree) == (1, 1, 5)


def test_normalize_examples():
    nf = normalize(x(2) * x(1))
    assert nf.terms == {ss([(1, 1), (2, 1)]): 1, ss(end=[(1, 2, 0, 0)]): -1}
    assert str(nf) == "x1*x2 - [x1,x2]"
    nf = normalize(commutator(x(1), x(2) * x(3)))
    assert nf.terms == {ss([(3, 1)], [(1, 2, 0, 0)]): 1, ss([(2, 1)], [(1, 3, 0, 0)]): 1}
    F3 = Field(3)
    assert not normalize(x(1, F3) ** 3, T3_PLUS_XP)
    assert normalize(x(1, F3) ** 3, T3).terms == {ss([(1, 3)]): 1}
    with pytest.raises(UnitInNonunitary):
        normalize(FreePoly.const(1) + x(1, unitary=True), unitary=False)


def test_triple_commutator_normalizes_to_zero():
    assert not normalize(commutator(x(1), x(2), x(3)))
    assert not normalize(commutator(x(1), x(2)) * commutator(x(1), x(3)))


def test_unitary_constant_is_split_off():
    f = FreePoly.const(2) + x(2, unitary=True) * x(1, unitary=True)
    nf = normalize(f)
    assert nf.constant == 2 and str(nf) == "2 + x1*x2 - [x1,x2]"
    assert nf.to_freepoly() == f


def test_classify_examples():
    assert classify(ss([(1, 2)], [(3, 4, 0, 0)]), 5) == R
    assert classify(ss([(1, 2)], [(3, 4, 0, 0)]), 5, unitary=True) == R1
    assert classify(ss(end=[(1, 2, 1, 1)]), 3) == S_WITNESS
    assert classify(ss([(1, 3)], [(2, 3, 2, 2)]), 3, unitary=True) == S1_WITNESS
    assert classify(ss([(1, 3)]), 0, unitary=True) == R1


def test_order_examples():
    small, big = ss([(1, 3)]), ss([(1, 5)])
    assert venkova_compare(small, big) == 1
    a = ss([(1, 1), (2, 1), (3, 1)], [(4, 5, 0, 0)])
    b = ss([(1, 1)], [(2, 3, 0, 0), (4, 5, 0, 0)])
    assert venkova_compare(a, b) == 1
    # x2 at the end of u and the beginning of v: u wins, and a later variable
    # sits in the beginning of u and the end of v
    u = ss([(1, 1), (3, 1)], [(2, 4, 0, 0)])
    v = ss([(1, 1), (2, 1)], [(3, 4, 0, 0)])
    assert venkova_compare(u, v) == 1 and venkova_compare(v, u) == -1
    assert u.placement(3) == "b" and v.placement(3) == "e"
    assert venkova_compare(u, u) == 0


ss_elements = st.builds(
    lambda degs, nend: _make(degs, nend),
    st.lists(st.integers(1, 3), min_size=1, max_size=5),
    st.integers(0, 2),
)


def _make(degs, nend):
    n = len(degs)
    nend = min(nend, n // 2)
    J = list(range(n - 2 * nend + 1, n + 1))
    beginning = [(i, degs[i - 1]) for i in range(1, n - 2 * nend + 1)]
    end = [(J[k], J[k + 1], degs[J[k] - 1] - 1, degs[J[k + 1] - 1] - 1) for k in range(0, len(J), 2)]
    return SSElement(tuple(beginning), tuple(end))


@given(ss_elements, ss_elements, ss_elements)
def test_order_is_a_total_order(u, v, w):
    assert venkova_compare(u, v) == -venkova_compare(v, u)
    if venkova_compare(u, v) > 0 and venkova_compare(v, w) > 0:
        assert venkova_compare(u, w) > 0
    n = 5
    if u != v:
        assert (venkova_compare(u, v) > 0) == (venkova_key(u, n) > venkova_key(v, n))


@given(ss_elements)
def test_ss_elements_are_their_own_normal_form(u):
    assert normalize(ss_to_freepoly(u)).terms == {u: 1}


@given(st.integers(0, 10**6), st.sampled_from([0, 3, 5]))
def test_normal_form_is_idempotent(seed, p):
    f = random_poly(random.Random(seed), Field(p))
    nf = normalize(f)
    assert normalize(nf.to_freepoly()) == nf


def _random_word(rng, nv, lo=0, hi=2):
    return FreePoly.word(tuple(rng.randint(1, nv) for _ in range(rng.randint(lo, hi)))) if hi else None


@given(st.integers(0, 10**6))
def test_normal_form_ignores_added_triple_commutators(seed):
    rng = random.Random(seed)
    F = Field(rng.choice([0, 3, 5]))
    f = random_poly(rng, F)
    g = f
    for _ in range(3):
        a, b, c = (random_poly(rng, F, max_vars=4, max_degree=2, max_terms=2) for _ in range(3))
        t = commutator(a, b, c)
        left = tuple(rng.randint(1, 4) for _ in range(rng.randint(0, 2)))
        right = tuple(rng.randint(1, 4) for _ in range(rng.randint(0, 2)))
        if left:
            t = FreePoly.word(left, 1, F) * t
        if right:
            t = t * FreePoly.word(right, 1, F)
        g = g + t.scale(F(rng.randint(1, 4)))
    assert normalize(g) == normalize(f)


@given(st.integers(0, 10**6))
def test_modulo_powers_ignores_added_pth_powers(seed):
    rng = random.Random(seed)
    F = Field(3)
    f = random_poly(rng, F)
    h = random_poly(rng, F, max_vars=3, max_degree=2, max_terms=2)
    t = h ** 3
    if rng.random() < 0.5:
        t = FreePoly.word((rng.randint(1, 3),), 1, F) * t
    assert normalize(f + t, T3_PLUS_XP) == normalize(f, T3_PLUS_XP)


def test_distinct_reduced_elements_stay_independent():
    # sorting the same letters with different commutator sets gives different elements
    nf = normal_form_of_word((3, 2, 1))
    assert len(nf) == 4
    assert all(c in (1, -1) for c in nf.values())


def test_descending_sort():
    els = [ss([(1, 2)]), ss([(1, 1)]), ss(end=[(1, 2, 0, 0)]), ss([(1, 1), (2, 1)])]
    out = sort_descending(els)
    assert out[0] == ss([(1, 1)])
    assert out.index(ss([(1, 1), (2, 1)])) < out.index(ss(end=[(1, 2, 0, 0)]))
