"""Exact scalars: rationals, residues modulo an odd prime, and commuting
polynomials over either (used as generic coefficients).

Rationals are plain :class:`fractions.Fraction` values. Residues are
:class:`ModP`. :class:`SymPoly` holds a sparse polynomial in commuting
indeterminates whose coefficients are base scalars of one characteristic.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from sympy import isprime

from .errors import CharacteristicMismatch, DivisionByZero, NotInvertible


def check_characteristic(p) -> int:
    p = int(p)
    if p == 0:
        return 0
    if p == 2:
        raise CharacteristicMismatch("characteristic 2 is not supported (G is commutative there)")
    if p < 0 or not isprime(p):
        raise CharacteristicMismatch(f"characteristic must be 0 or an odd prime, got {p}")
    return p


class ModP:
    """Residue class modulo an odd prime ``p``."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = int(v) % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise CharacteristicMismatch(f"cannot mix F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise CharacteristicMismatch(f"cannot mix F_{self.p} with a rational")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return ModP(pow(self.v, e, self.p), self.p)

    def inverse(self):
        if self.v == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.p}")
        return ModP(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * ModP(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(o, self.p) * self.inverse()

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __int__(self):
        return self.v

    def signed(self) -> int:
        """Representative in the symmetric range around 0."""
        return self.v - self.p if self.v > self.p // 2 else self.v

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    def __str__(self):
        return str(self.signed())


def _char_of(x):
    if isinstance(x, ModP):
        return x.p
    if isinstance(x, SymPoly):
        return x.field.p
    if isinstance(x, Fraction):
        return 0
    return None  # plain int: fits any characteristic


class Field:
    """The prime field of characteristic ``p`` (``p == 0`` means Q)."""

    __slots__ = ("p",)

    def __init__(self, p=0):
        self.p = check_characteristic(p)

    def __call__(self, x):
        if isinstance(x, ModP):
            if x.p != self.p:
                raise CharacteristicMismatch(f"F_{x.p} value in a field of characteristic {self.p}")
            return x
        if isinstance(x, Fraction):
            if self.p == 0:
                return x
            if x.denominator % self.p == 0:
                raise DivisionByZero(f"denominator {x.denominator} vanishes mod {self.p}")
            return ModP(x.numerator, self.p) / x.denominator
        if isinstance(x, SymPoly):
            if x.field != self:
                raise CharacteristicMismatch("SymPoly over a different characteristic")
            return x
        if isinstance(x, str):
            return self(Fraction(x))
        if self.p == 0:
            return Fraction(x)
        return ModP(x, self.p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    def random(self, rng, lo=-3, hi=3):
        return self(rng.randint(lo, hi))

    def fmt(self, c) -> str:
        if isinstance(c, ModP):
            return str(c.signed())
        return str(c)


QQ = Field(0)


def as_field_of(a, b) -> Field:
    """The field shared by two scalars, raising on mismatch."""
    ca, cb = _char_of(a), _char_of(b)
    if ca is not None and cb is not None and ca != cb:
        raise CharacteristicMismatch(f"characteristics {ca} and {cb} differ")
    c = ca if ca is not None else cb
    return Field(c or 0)


class SymPoly:
    """Sparse polynomial in commuting indeterminates over a prime field.

    A monomial is a tuple of ``(indeterminate, exponent)`` pairs sorted by
    indeterminate. Indeterminates must be hashable and mutually orderable;
    generic Grassmann substitutions use ``(variable index, blade)`` pairs.
    """

    __slots__ = ("terms", "field")

    def __init__(self, terms=None, field=QQ):
        self.field = field
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                c = field(c)
                if c:
                    self.terms[mono] = c

    @classmethod
    def var(cls, name, field=QQ):
        return cls({((name, 1),): 1}, field)

    @classmethod
    def const(cls, c, field=QQ):
        return cls({(): c}, field)

    def _lift(self, other):
        if isinstance(other, SymPoly):
            if other.field != self.field:
                raise CharacteristicMismatch("SymPoly operands over different characteristics")
            return other
        if isinstance(other, (int, Fraction, ModP)):
            return SymPoly({(): self.field(other)}, self.field)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        r = SymPoly(field=self.field)
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = SymPoly(field=self.field)
        r.terms = {m: -c for m, c in self.terms.items()}
        return r

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m)
                prod = c1 * c2
                s = prod if s is None else s + prod
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        r = SymPoly(field=self.field)
        r.terms = out
        return r

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = SymPoly.const(1, self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def degree(self) -> int:
        return max((sum(k for _, k in m) for m in self.terms), default=-1)

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def constant_term(self):
        return self.terms.get((), self.field.zero)

    def inverse(self):
        if not self.terms:
            raise DivisionByZero("zero polynomial has no inverse")
        if not self.is_constant():
            raise NotInvertible("a polynomial of positive degree is not invertible")
        return SymPoly.const(scalar_inv(self.terms[()]), self.field)

    def indeterminates(self):
        return {v for m in self.terms for v, _ in m}

    def evaluate(self, values):
        """Substitute base scalars for every indeterminate."""
        total = self.field.zero
        for m, c in self.terms.items():
            t = c
            for v, k in m:
                t = t * self.field(values[v]) ** k
            total = total + t
        return total

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._lift(other) if not isinstance(other, SymPoly) else other
        if o is None:
            return NotImplemented
        return self.field == o.field and self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda t: repr(t[0])):
            mono = "*".join(f"c{v}" + (f"^{k}" if k > 1 else "") for v, k in m)
            parts.append(f"{self.field.fmt(c)}*{mono}" if mono else self.field.fmt(c))
        return " + ".join(parts)


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, k in m2:
        d[v] = d.get(v, 0) + k
    return tuple(sorted(d.items()))


def scalar_add(a, b):
    as_field_of(a, b)
    return a + b


def scalar_mul(a, b):
    as_field_of(a, b)
    return a * b


def scalar_neg(a):
    return -a


def scalar_inv(a):
    if isinstance(a, SymPoly):
        return a.inverse()
    if isinstance(a, ModP):
        return a.inverse()
    if not a:
        raise DivisionByZero("0 has no inverse")
    return 1 / Fraction(a)


def factorial_in_field(n: int, field: Field):
    """``n!`` reduced into ``field``; zero in F_p once ``n >= p``."""
    return field(factorial(n))
