import itertools
import random

import pytest
from hypothesis import given, strategies as st

from centralpoly.errors import ResourceLimit
from centralpoly.exterior import GrassmannElement, random_element
from centralpoly.field import QQ, Field
from centralpoly.freealg import FreePoly, commutator, evaluate, x
from centralpoly.generic import (
    CENTRAL, IDENTITY, NEITHER, find_certificate, generic_image, literal_generic_image,
    literal_verdict, odd_kernels, verdict,
)
from centralpoly.tspace import w_poly
from centralpoly.verify import random_poly


def oracle_kernels(word):
    """Expand prod (y_v + h_v) directly: choose a set of positions holding h's
    (one per variable at most, since h_v^2 = 0) and sort them."""
    out = {}
    n = len(word)
    for k in range(n + 1):
        for pos in itertools.combinations(range(n), k):
            vs = [word[i] for i in pos]
            if len(set(vs)) < len(vs):
                continue
            inversions = sum(1 for a, b in itertools.combinations(vs, 2) if a > b)
            mask = sum(1 << (v - 1) for v in vs)
            out[mask] = out.get(mask, 0) + (-1) ** inversions
    return {m: c for m, c in out.items() if c}


@given(st.lists(st.integers(1, 4), min_size=1, max_size=7))
def test_odd_kernels_match_direct_expansion(word):
    assert odd_kernels(tuple(word)) == oracle_kernels(word)


def test_documented_verdicts():
    F3 = Field(3)
    assert verdict(commutator(x(1), x(2))) == CENTRAL
    assert verdict(commutator(x(1), x(2), x(3))) == IDENTITY
    assert verdict(x(1) * x(2)) == NEITHER
    assert verdict(x(1, F3) ** 3) == IDENTITY
    assert verdict(x(1, F3, True) ** 3) == CENTRAL
    assert verdict(x(2, F3) * x(1, F3) ** 3) == IDENTITY
    assert verdict(x(1) ** 3) == NEITHER
    assert verdict(w_poly(1, 3)) == CENTRAL
    assert verdict(commutator(x(1), x(2)) * commutator(x(3), x(4))) == CENTRAL


def test_w1_image_is_even():
    assert str(generic_image(w_poly(1, 3))) == "-c1^2*c2^2*h1*h2"


def test_certificate_for_non_central_product():
    cert = find_certificate(x(1) * x(2))
    assert cert.value.odd_part()
    assert cert.commutator
    assert str(cert.value) == "e1*e2*e3"
    assert find_certificate(commutator(x(1), x(2))) is None


def _random_assignment(rng, f, n, unitary):
    return {i: random_element(rng, n, f.field, unitary=unitary, nterms=5) for i in f.variables()}


@pytest.mark.parametrize("p", [0, 3, 5])
@pytest.mark.parametrize("unitary", [False, True])
def test_verdicts_sound_against_random_evaluation(p, unitary):
    """Verdicts are checked against random evaluations, and every non-central
    or non-identity verdict must come with a working certificate."""
    F = Field(p)
    rng = random.Random(100 + p + 7 * unitary)
    polys = [random_poly(rng, F, unitary, max_vars=3, max_degree=4, max_terms=3) for _ in range(25)]
    polys += [commutator(x(1, F, unitary), x(2, F, unitary)) * x(1, F, unitary) ** 2,
              x(1, F, unitary) * x(2, F, unitary) - x(2, F, unitary) * x(1, F, unitary)]
    for f in polys:
        img = generic_image(f)
        for _ in range(8):
            val = evaluate(f, _random_assignment(rng, f, 9, unitary))
            if img.is_identity:
                assert not val
            if img.is_central:
                assert not val.odd_part()
        if not img.is_identity:
            cert = find_certificate(f, central=False, image=img)
            assert cert is not None and cert.value
        if not img.is_central:
            cert = find_certificate(f, central=True, image=img)
            assert cert is not None and cert.commutator
            probe = GrassmannElement.generator(cert.probe, F, cert.value.unitary)
            assert cert.value * probe != probe * cert.value


@given(st.integers(0, 10**6), st.booleans())
def test_literal_truncation_agrees_at_low_degree(seed, unitary):
    rng = random.Random(seed)
    F = Field(rng.choice([0, 3]))
    f = random_poly(rng, F, unitary, max_vars=2, max_degree=2, max_terms=3)
    assert literal_verdict(f, 4) == verdict(f)


def test_literal_image_is_symbolic():
    img = literal_generic_image(commutator(x(1), x(2)), 2)
    assert img and not img.odd_part()


def test_literal_budget():
    with pytest.raises(ResourceLimit):
        literal_generic_image(w_poly(1, 3), 8)
