"""Free associative algebras k0<X> (nonunitary) and k1<X> (unitary).

A word is a tuple of variable indices (``(1, 2, 1)`` is x1*x2*x1); the empty
tuple is the unit word and only occurs in unitary polynomials. Iterated
commutators are left-normed: ``[a, b, c] = [[a, b], c]``.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import groupby

import numpy as np

from .errors import CharacteristicMismatch, TruncationMismatch, UnitInNonunitary, ZeroPolynomial
from .exterior import DenseGrassmann, GrassmannElement
from .field import QQ, Field, ModP

Word = tuple
UNIT_WORD: Word = ()


def word_str(w: Word) -> str:
    if not w:
        return "1"
    parts = []
    for v, run in groupby(w):
        k = len(list(run))
        parts.append(f"x{v}" + (f"^{k}" if k > 1 else ""))
    return "*".join(parts)


def word_degrees(w: Word) -> dict:
    d = defaultdict(int)
    for v in w:
        d[v] += 1
    return dict(d)


def word_type(w: Word, nvars: int) -> tuple:
    t = [0] * nvars
    for v in w:
        t[v - 1] += 1
    return tuple(t)


class FreePoly:
    """Sparse linear combination of words with coefficients in a prime field."""

    __slots__ = ("terms", "field", "unitary")

    def __init__(self, terms=None, field: Field = QQ, unitary=False):
        self.field = field
        self.unitary = unitary
        self.terms = {}
        if terms:
            for w, c in terms.items():
                w = tuple(w)
                if any(v < 1 for v in w):
                    raise ValueError(f"variable indices must be >= 1: {w}")
                c = field(c)
                if c:
                    s = self.terms.get(w)
                    s = c if s is None else s + c
                    if s:
                        self.terms[w] = s
                    else:
                        del self.terms[w]
        if not unitary and UNIT_WORD in self.terms:
            raise UnitInNonunitary("a nonunitary polynomial cannot contain the unit word")

    @classmethod
    def var(cls, i, field=QQ, unitary=False):
        return cls({(i,): 1}, field, unitary)

    @classmethod
    def const(cls, c, field=QQ):
        return cls({UNIT_WORD: c}, field, True)

    @classmethod
    def zero(cls, field=QQ, unitary=False):
        return cls(field=field, unitary=unitary)

    @classmethod
    def word(cls, w, coeff=1, field=QQ, unitary=False):
        return cls({tuple(w): coeff}, field, unitary)

    def _new(self, terms, unitary=None):
        r = FreePoly.__new__(FreePoly)
        r.terms = terms
        r.field = self.field
        r.unitary = self.unitary if unitary is None else unitary
        return r

    def _coerce(self, other):
        if isinstance(other, FreePoly):
            if other.field != self.field:
                raise CharacteristicMismatch(f"polynomials over {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction, ModP)):
            if not other:
                return self._new({})
            if not self.unitary:
                raise UnitInNonunitary("adding a nonzero constant to a nonunitary polynomial")
            return self._new({UNIT_WORD: self.field(other)})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for w, c in o.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return self._new(out, self.unitary or o.unitary)

    __radd__ = __add__

    def __neg__(self):
        return self._new({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c):
        c = self.field(c)
        if not c:
            return self._new({})
        return self._new({w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ModP)):
            return self.scale(other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in o.terms.items():
                w = w1 + w2
                c = c1 * c2
                s = out.get(w)
                s = c if s is None else s + c
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return self._new(out, self.unitary or o.unitary)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, ModP)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, m: int):
        if m < 0:
            raise ValueError("negative powers are not defined")
        if m == 0:
            if not self.unitary:
                raise UnitInNonunitary("f^0 needs the unit")
            return FreePoly.const(1, self.field)
        result = self
        for _ in range(m - 1):
            result = result * self
        return result

    def commutator(self, other):
        return self * other - other * self

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, FreePoly):
            return self.field == other.field and self.terms == other.terms
        if isinstance(other, (int, Fraction, ModP)):
            return self.terms == ({UNIT_WORD: self.field(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # structure
    def variables(self) -> set:
        return {v for w in self.terms for v in w}

    def nvars(self) -> int:
        return max(self.variables(), default=0)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def constant_term(self):
        return self.terms.get(UNIT_WORD, self.field.zero)

    def without_constant(self):
        return self._new({w: c for w, c in self.terms.items() if w})

    def monomial_count(self) -> int:
        return len(self.terms)

    def multidegree(self) -> dict:
        """Per-variable degree of a multihomogeneous polynomial.

        Raises :class:`ValueError` if the monomials disagree; use
        :meth:`is_multihomogeneous` to test first.
        """
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no multidegree")
        degs = {tuple(sorted(word_degrees(w).items())) for w in self.terms}
        if len(degs) != 1:
            raise ValueError("polynomial is not multihomogeneous")
        return dict(degs.pop())

    def is_multihomogeneous(self) -> bool:
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no multidegree")
        return len({tuple(sorted(word_degrees(w).items())) for w in self.terms}) == 1

    def type_vector(self, nvars=None) -> tuple:
        d = self.multidegree()
        n = nvars if nvars is not None else max(d, default=0)
        if d and max(d) > n:
            raise ValueError(f"variable x{max(d)} exceeds the requested type length {n}")
        return tuple(d.get(i, 0) for i in range(1, n + 1))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for w, c in self.sorted_terms():
            s = self.field.fmt(c)
            neg = s.startswith("-")
            mag = s[1:] if neg else s
            if w:
                body = word_str(w) if mag == "1" else f"{mag}*{word_str(w)}"
            else:
                body = mag
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"FreePoly({self})"


# constructors ------------------------------------------------------------

def x(i, field=QQ, unitary=False) -> FreePoly:
    return FreePoly.var(i, field, unitary)


def fp_add(f, g):
    return f + g


def fp_mul(f, g):
    return f * g


def fp_commutator(f, g):
    return f.commutator(g)


def commutator(*args) -> FreePoly:
    """Left-normed commutator ``[a1, a2, ..., ak] = [[a1, a2], ..., ak]``."""
    if len(args) < 2:
        raise ValueError("a commutator needs at least two entries")
    r = args[0]
    for a in args[1:]:
        r = r.commutator(a)
    return r


# substitution and evaluation --------------------------------------------

def substitute(f: FreePoly, assignment: dict) -> FreePoly:
    """Apply the endomorphism extending ``x_i -> assignment[i]``.

    Unassigned variables are left alone.
    """
    unitary = f.unitary
    for i, g in assignment.items():
        if not isinstance(g, FreePoly):
            raise TypeError(f"value for x{i} must be a FreePoly")
        if g.field != f.field:
            raise CharacteristicMismatch("substituted value over a different field")
        if UNIT_WORD in g.terms and not f.unitary:
            raise UnitInNonunitary(f"x{i} -> polynomial with a constant term in nonunitary mode")
        unitary = unitary or g.unitary
    cache = {}

    def image(v):
        g = cache.get(v)
        if g is None:
            g = assignment.get(v)
            if g is None:
                g = FreePoly.var(v, f.field, unitary)
            cache[v] = g
        return g

    out = FreePoly.zero(f.field, unitary)
    prefixes = {(): FreePoly.const(1, f.field)}
    for w, c in f.sorted_terms():
        acc = _prefix_product(w, prefixes, image, lambda a, b: a * b)
        out = out + acc.scale(c)
    out.unitary = unitary
    if not unitary and UNIT_WORD in out.terms:
        raise UnitInNonunitary("substitution produced a constant in nonunitary mode")
    return out


def _prefix_product(w, cache, image, mul):
    k = len(w)
    while w[:k] not in cache:
        k -= 1
    acc = cache[w[:k]]
    for j in range(k, len(w)):
        acc = mul(acc, image(w[j]))
        cache[w[:j + 1]] = acc
    return acc


def evaluate(f: FreePoly, assignment: dict) -> GrassmannElement:
    """Homomorphic image of ``f`` under ``x_i -> assignment[i]`` in G(n) or G0(n)."""
    missing = f.variables() - set(assignment)
    if missing:
        raise KeyError(f"no value for variables {sorted(missing)}")
    values = [assignment[i] for i in sorted(f.variables())]
    truncs = {g.truncation for g in values if g.truncation}
    if len(truncs) > 1:
        raise TruncationMismatch(f"assigned values live in different truncations {sorted(truncs)}")
    trunc = truncs.pop() if truncs else 0
    unitary = f.unitary or any(g.unitary for g in values)
    for g in values:
        if g.field != f.field:
            raise CharacteristicMismatch("assigned Grassmann value over a different field")
    one = GrassmannElement.one(f.field, trunc) if unitary else None
    total = GrassmannElement.zero(f.field, unitary, trunc)
    cache = {}
    for w, c in f.sorted_terms():
        if not w:
            total = total + one.scale(c)
            continue
        if w[:1] not in cache:
            cache[w[:1]] = assignment[w[0]]
        acc = _prefix_product(w, cache, assignment.__getitem__, lambda a, b: a * b)
        total = total + acc.scale(c)
    return total


def integer_coefficients(f: FreePoly) -> dict:
    """Coefficients as Python ints (residues stay residues; rationals must be integral)."""
    out = {}
    for w, c in f.terms.items():
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError("dense evaluation needs integral coefficients; scale the polynomial first")
            out[w] = c.numerator
        else:
            out[w] = int(c)
    return out


def evaluate_dense(f: FreePoly, engine: DenseGrassmann, values: dict):
    """Evaluate ``f`` on a whole batch of dense assignments at once.

    ``values[i]`` is an array of shape ``(batch, 2**n)``. Shared word prefixes
    are multiplied once.
    """
    coeffs = integer_coefficients(f)
    batch = next(iter(values.values())).shape[0]
    total = engine.zeros(batch)
    cache = {}
    for w in sorted(coeffs, key=lambda w: (w, len(w))):
        c = coeffs[w]
        if not w:
            total = engine.add(total, engine.constant(c, batch))
            continue
        if w[:1] not in cache:
            cache[w[:1]] = values[w[0]]
        acc = _prefix_product(w, cache, values.__getitem__, engine.mul)
        total = engine.add(total, engine.scale(acc, c))
    return total


def dense_is_zero(arr, p: int) -> bool:
    if p:
        return not np.any(arr % p)
    return not np.any(arr != 0)


# decompositions --------------------------------------------------------

def multihomogeneous_components(f: FreePoly) -> list:
    groups = defaultdict(dict)
    for w, c in f.terms.items():
        key = tuple(sorted(word_degrees(w).items()))
        groups[key][w] = c
    n = f.nvars()

    def order(k):
        d = dict(k)
        return (sum(d.values()), tuple(-d.get(i, 0) for i in range(1, n + 1)))

    return [f._new(groups[k]) for k in sorted(groups, key=order)]


def essential_split(f: FreePoly):
    """Split ``f`` into components essential in their variables.

    Each split sets a partially occurring variable to zero, so every
    component lies in any T-space containing ``f``. Returns
    ``(components, essential)`` where ``essential`` says whether ``f`` itself
    was already essential.
    """
    if not f.terms:
        return [], True
    comps = []
    _split(f, comps)
    return comps, len(comps) == 1


def _split(f: FreePoly, out: list):
    words = list(f.terms)
    sets = [set(w) for w in words]
    everywhere = set.intersection(*sets)
    partial = sorted(set.union(*sets) - everywhere)
    if not partial:
        out.append(f)
        return
    v = partial[0]
    without = f._new({w: c for w, c in f.terms.items() if v not in w})
    with_v = f._new({w: c for w, c in f.terms.items() if v in w})
    _split(without, out)
    _split(with_v, out)


def is_essential(f: FreePoly) -> bool:
    if not f.terms:
        return True
    sets = [set(w) for w in f.terms]
    return set.intersection(*sets) == set.union(*sets)


def words_of_type(type_vec) -> list:
    """All words with ``type_vec[i-1]`` occurrences of x_i, in lex order."""
    out = []

    def rec(prefix, remaining):
        if not any(remaining.values()):
            out.append(tuple(prefix))
            return
        for v in sorted(remaining):
            if remaining[v]:
                remaining[v] -= 1
                prefix.append(v)
                rec(prefix, remaining)
                prefix.pop()
                remaining[v] += 1

    rec([], {i: r for i, r in enumerate(type_vec, start=1) if r})
    return out
