import random

import pytest

from centralpoly.canon import SSElement, venkova_compare
from centralpoly.errors import NotInM, NotInMPrime, ResourceLimit
from centralpoly.exterior import GrassmannElement, blade, random_element
from centralpoly.field import QQ, Field
from centralpoly.witness import (
    build_v, build_w, check_m, enumerate_m, enumerate_mprime, in_m, m_fact_witness,
    mprime_expected_odd_part, mprime_witness,
)


def ss(beginning=(), end=()):
    return SSElement(tuple(beginning), tuple(end))


def test_w_and_v_examples():
    w = build_w(0, 2)
    assert w == GrassmannElement({blade(1, 2): 1, blade(3, 4): 1})
    assert w ** 2 == GrassmannElement({blade(1, 2, 3, 4): 2})
    v = build_v(0, 1)
    assert v ** 2 == GrassmannElement({blade(1, 2, 3): 2})
    assert not build_w(0, 3, Field(3)) ** 3
    w = build_w(3, 2)
    assert (w ** 2).support() == w.support() == {7, 8, 9, 10}


def test_m_witness_example():
    F3 = Field(3)
    u = ss([(1, 1)], [(2, 3, 0, 0)])
    wit = m_fact_witness(u, 1, 3, 3)
    # z = 2 (deg - lend) - 1 = 2 * 2 - 1
    assert wit.generators == 3
    assert set(wit.value.terms) == {blade(1, 2, 3)}
    rng = random.Random(0)
    gm = wit.assignment[1]
    for _ in range(50):
        g = random_element(rng, 7, F3, nterms=5)
        assert not gm.commutator(g) * gm ** 2
    fam = enumerate_m(1, 3, 3)
    k = fam.index(u)
    for v in fam[k + 1:]:
        assert not wit.evaluate(v)


def test_m_membership():
    assert in_m(ss([(1, 1)], [(2, 3, 2, 2)]), 1, 3, 3)
    with pytest.raises(NotInM):
        check_m(ss([(1, 1)], [(2, 3, 3, 0)]), 1, 3, 3)
    with pytest.raises(NotInM):
        check_m(ss([(2, 1)], [(1, 3, 0, 0)]), 1, 3, 3)
    with pytest.raises(NotInM):
        check_m(ss([(1, 1), (3, 1)]), 1, 3, 3)


def test_m_enumeration():
    fam = enumerate_m(2, 2, 3, max_degree=2)
    assert fam == [ss([(1, 1), (2, 1)])]
    assert all(2 in u.beginning_vars() for u in enumerate_m(2, 2, 3))
    assert enumerate_m(3, 2, 3) == []
    with pytest.raises(ResourceLimit):
        enumerate_m(1, 3, 0)
    fam = enumerate_m(1, 3, 3)
    for a, b in zip(fam, fam[1:]):
        assert venkova_compare(a, b) == 1


def test_mprime_example():
    u = ss([(1, 1)], [(2, 3, 0, 0)])
    wit = mprime_witness(u, 1, 3, (1, 1, 1), 0)
    one = GrassmannElement.one()
    e = [GrassmannElement.generator(i, unitary=True) for i in (1, 2, 3)]
    assert wit.value == (one + e[0]) * (e[1] * e[2]).scale(2)
    assert wit.value.odd_part() == GrassmannElement({blade(1, 2, 3): 2}, QQ, True)
    assert wit.value.odd_part() == mprime_expected_odd_part(u, 1, (1, 1, 1), 0)
    with pytest.raises(NotInMPrime):
        mprime_witness(ss([(1, 3)], [(2, 3, 0, 0)]), 1, 3, (3, 1, 1), 3)


def test_mprime_family_and_vanishing():
    fam = enumerate_mprime(1, 3, (1, 1, 1), 0)
    assert set(fam) == {ss([(1, 1), (2, 1), (3, 1)]), ss([(1, 1)], [(2, 3, 0, 0)])}
    top, low = fam
    wit = mprime_witness(top, 1, 3, (1, 1, 1), 0)
    # x2 sits in the beginning of the top element, so it is sent to 1
    assert wit.assignment[2] == GrassmannElement.one()
    assert not wit.evaluate(low)
