import pytest
from hypothesis import given, strategies as st

from centralpoly.errors import ParseError, UnitInNonunitary
from centralpoly.field import QQ, Field
from centralpoly.freealg import commutator, x
from centralpoly.parse import parse_grassmann, parse_poly
from centralpoly.exterior import GrassmannElement


def test_parses_commutators_and_powers():
    f = parse_poly("[x1,x2]*x1^2*x2^2")
    assert f == commutator(x(1), x(2)) * x(1) ** 2 * x(2) ** 2
    assert parse_poly("[x1,x2,x3]") == commutator(x(1), x(2), x(3))
    assert parse_poly("2*x1 - x1*3/2") == x(1).scale(QQ("1/2"))


def test_unit_needs_unitary_mode():
    with pytest.raises(UnitInNonunitary):
        parse_poly("1 + x1")
    assert parse_poly("1 + x1", unitary=True).constant_term() == 1


def test_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_poly("x1 + ")
    assert err.value.position == 5 or "position" in str(err.value)
    for bad in ("x0", "[x1]", "x1 ** 2", "e1", "x1 / x2", "(x1"):
        with pytest.raises(ParseError):
            parse_poly(bad)


def test_grassmann_text():
    g = parse_grassmann("1 + e1*e2 - 2*e3", Field(3), unitary=True)
    assert str(g) == "1 + e3 + e1*e2"
    assert parse_grassmann("e2*e1") == -GrassmannElement.from_blade((1, 2))


canonical = st.lists(
    st.tuples(st.integers(-4, 4).filter(bool), st.lists(st.integers(1, 3), min_size=1, max_size=4)),
    min_size=1, max_size=4,
)


@given(canonical, st.sampled_from([0, 3, 5]))
def test_print_parse_round_trip(terms, p):
    F = Field(p)
    f = sum((x(1, F).scale(0) + _word(w, F).scale(F(c)) for c, w in terms), x(1, F).scale(0))
    text = str(f)
    g = parse_poly(text, F)
    assert g == f
    assert str(g) == text


def _word(w, F):
    out = x(w[0], F)
    for v in w[1:]:
        out = out * x(v, F)
    return out
