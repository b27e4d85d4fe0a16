from fractions import Fraction

from hypothesis import given, strategies as st
from sympy import GF, QQ as SQQ, Matrix
from sympy.polys.matrices import DomainMatrix

from centralpoly.linalg import nullspace, rref, transpose

matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=1, max_size=7)
)


def sympy_rref(rows, p):
    ncols = len(rows[0])
    if p:
        dm = DomainMatrix([[GF(p)(v) for v in r] for r in rows], (len(rows), ncols), GF(p))
        red, piv = dm.rref()
        out = [tuple(int(red.rep.to_ddm()[i][j]) % p for j in range(ncols)) for i in range(len(piv))]
        return out, list(piv)
    red, piv = Matrix(rows).rref()
    return [tuple(Fraction(int(v.p), int(v.q)) for v in red.row(i)) for i in range(len(piv))], list(piv)


@given(matrices, st.sampled_from([0, 3, 5, 7]))
def test_rref_matches_sympy(rows, p):
    ech = rref(rows, len(rows[0]), p)
    want_rows, want_piv = sympy_rref(rows, p)
    assert ech.pivots == want_piv
    assert [tuple(r) for r in ech.rows] == want_rows


@given(matrices, st.sampled_from([0, 3, 5]))
def test_origin_rows_span_the_row_space(rows, p):
    n = len(rows[0])
    ech = rref(rows, n, p)
    again = rref([rows[i] for i in ech.origin], n, p)
    assert again == ech


@given(matrices, st.sampled_from([0, 3, 5]))
def test_nullspace_is_annihilated(rows, p):
    n = len(rows[0])
    ns = nullspace(rows, n, p)
    ech = rref(rows, n, p)
    assert len(ns) + ech.rank == n
    for v in ns:
        for r in rows:
            s = sum(a * b for a, b in zip(r, v))
            assert (s % p == 0) if p else s == 0


def test_membership_and_coordinates():
    ech = rref([(1, 1, 0), (0, 1, 1)], 3, 0)
    assert ech.contains((1, 2, 1))
    assert not ech.contains((1, 0, 0))
    c = ech.coordinates((1, 2, 1))
    assert [sum(ci * r[j] for ci, r in zip(c, ech.rows)) for j in range(3)] == [1, 2, 1]
    assert transpose([(1, 2), (3, 4)], 2) == [(1, 3), (2, 4)]
