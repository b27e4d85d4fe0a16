"""Truncated Grassmann algebras G(n) and G0(n).

A blade ``e_{i1} ... e_{im}`` (i1 < ... < im) is stored as the integer bit
mask with bit ``i - 1`` set for each index, so indices are unbounded and the
unit blade is ``0``. :class:`GrassmannElement` is a sparse blade -> scalar map.
:class:`DenseGrassmann` is a numpy engine that multiplies whole batches of
dense elements at once; it is what the randomized identity checks run on.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import CharacteristicMismatch, TruncationMismatch, UnitInNonunitary
from .field import QQ, Field, ModP, SymPoly

Blade = int
UNIT = 0


def blade(*indices: int) -> Blade:
    mask = 0
    for i in indices:
        if i < 1:
            raise ValueError(f"generator index must be >= 1, got {i}")
        bit = 1 << (i - 1)
        if mask & bit:
            raise ValueError(f"repeated generator e{i} in a blade")
        mask |= bit
    return mask


def blade_indices(b: Blade) -> tuple:
    out = []
    i = 1
    while b:
        if b & 1:
            out.append(i)
        b >>= 1
        i += 1
    return tuple(out)


def blade_len(b: Blade) -> int:
    return b.bit_count()


def _swaps(a: Blade, b: Blade) -> int:
    # transpositions needed to move each generator of b left past larger ones of a
    n = 0
    while b:
        low = b & -b
        n += (a & ~((low << 1) - 1)).bit_count()
        b ^= low
    return n


def blade_mul(a: Blade, b: Blade):
    """Return ``(sign, product)``; sign is 0 when the blades share a generator."""
    if a & b:
        return 0, None
    return (-1 if _swaps(a, b) & 1 else 1), a | b


def blade_str(b: Blade) -> str:
    if b == UNIT:
        return "1"
    return "*".join(f"e{i}" for i in blade_indices(b))


class GrassmannElement:
    """Sparse element of G(n) (``unitary=True``) or G0(n).

    ``truncation`` is the generator bound ``n``; 0 leaves it open.
    """

    __slots__ = ("terms", "field", "unitary", "truncation")

    def __init__(self, terms=None, field: Field = QQ, unitary=False, truncation=0):
        self.field = field
        self.unitary = unitary
        self.truncation = truncation
        self.terms = {}
        if terms:
            for b, c in terms.items():
                c = c if _is_symbolic(c) else field(c)
                if c:
                    self.terms[b] = c
        if not unitary and UNIT in self.terms:
            raise UnitInNonunitary("the unit blade appears in a nonunitary element")
        if truncation:
            top = max(self.terms, default=0)
            if top >> truncation:
                raise TruncationMismatch(f"blade index exceeds truncation {truncation}")

    # construction helpers
    @classmethod
    def zero(cls, field=QQ, unitary=False, truncation=0):
        return cls(field=field, unitary=unitary, truncation=truncation)

    @classmethod
    def one(cls, field=QQ, truncation=0):
        return cls({UNIT: 1}, field, True, truncation)

    @classmethod
    def generator(cls, i, field=QQ, unitary=False, truncation=0):
        return cls({blade(i): 1}, field, unitary, truncation)

    @classmethod
    def from_blade(cls, indices, coeff=1, field=QQ, unitary=False, truncation=0):
        return cls({blade(*indices): coeff}, field, unitary, truncation)

    def _new(self, terms, unitary, truncation):
        r = GrassmannElement.__new__(GrassmannElement)
        r.terms = terms
        r.field = self.field
        r.unitary = unitary
        r.truncation = truncation
        return r

    def _joint(self, other):
        if other.field != self.field:
            raise CharacteristicMismatch("Grassmann elements over different fields")
        t1, t2 = self.truncation, other.truncation
        if t1 and t2 and t1 != t2:
            raise TruncationMismatch(f"truncations {t1} and {t2} differ")
        return self.unitary or other.unitary, (t1 or t2)

    def _coerce(self, other):
        if isinstance(other, GrassmannElement):
            return other
        if _is_scalar(other):
            if other and not self.unitary:
                raise UnitInNonunitary("adding a nonzero scalar needs the unit")
            return GrassmannElement({UNIT: other} if other else {}, self.field,
                                    self.unitary, self.truncation)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        unitary, trunc = self._joint(o)
        out = dict(self.terms)
        for b, c in o.terms.items():
            s = out.get(b)
            s = c if s is None else s + c
            if s:
                out[b] = s
            else:
                out.pop(b, None)
        return self._new(out, unitary, trunc)

    __radd__ = __add__

    def __neg__(self):
        return self._new({b: -c for b, c in self.terms.items()}, self.unitary, self.truncation)

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
        if not c:
            return self._new({}, self.unitary, self.truncation)
        out = {}
        for b, v in self.terms.items():
            s = v * c
            if s:
                out[b] = s
        return self._new(out, self.unitary, self.truncation)

    def __mul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        unitary, trunc = self._joint(other)
        out = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                if a & b:
                    continue
                c = ca * cb
                if _swaps(a, b) & 1:
                    c = -c
                k = a | b
                s = out.get(k)
                s = c if s is None else s + c
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return self._new(out, unitary, trunc)

    def __rmul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, m: int):
        if m < 0:
            raise ValueError("negative powers are not defined")
        if m == 0:
            if not self.unitary:
                raise UnitInNonunitary("x^0 needs the unit")
            return GrassmannElement.one(self.field, self.truncation)
        result = self
        for _ in range(m - 1):
            result = result * self
        return result

    def commutator(self, other):
        return self * other - other * self

    def even_part(self):
        return self._new({b: c for b, c in self.terms.items() if not b.bit_count() & 1},
                         self.unitary, self.truncation)

    def odd_part(self):
        return self._new({b: c for b, c in self.terms.items() if b.bit_count() & 1},
                         self.unitary, self.truncation)

    def support(self) -> set:
        mask = 0
        for b in self.terms:
            mask |= b
        return set(blade_indices(mask))

    def scalar_part(self):
        return self.terms.get(UNIT, self.field.zero)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, GrassmannElement):
            return self.terms == other.terms
        if _is_scalar(other):
            return self.terms == ({UNIT: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, indices):
        return self.terms.get(blade(*indices), self.field.zero)

    def __repr__(self):
        return f"GrassmannElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: (t[0].bit_count(), blade_indices(t[0])))
        parts = []
        for b, c in items:
            coeff = self.field.fmt(c) if not _is_symbolic(c) else f"({c})"
            body = blade_str(b)
            if b == UNIT:
                parts.append(coeff)
            elif coeff == "1":
                parts.append(body)
            elif coeff == "-1":
                parts.append("-" + body)
            else:
                parts.append(f"{coeff}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


def _is_scalar(x):
    return isinstance(x, (int, Fraction, ModP, SymPoly))


def _is_symbolic(x):
    return isinstance(x, SymPoly)


def g_mul(x, y):
    return x * y


def g_add(x, y):
    return x + y


def g_scale(x, c):
    return x.scale(c)


def g_commutator(x, y):
    return x.commutator(y)


def g_pow(x, m):
    return x ** m


def even_part(x):
    return x.even_part()


def odd_part(x):
    return x.odd_part()


def support(x):
    return x.support()


def is_central_in_truncation(x: GrassmannElement, n: int) -> bool:
    """True iff ``x`` commutes with every generator e_1..e_n."""
    if x.truncation and x.truncation > n:
        raise TruncationMismatch(f"element lives in G({x.truncation}), larger than {n}")
    for i in range(1, n + 1):
        e = GrassmannElement.generator(i, x.field, x.unitary, 0)
        if x * e != e * x:
            return False
    return True


def random_element(rng, n, field=QQ, unitary=False, nterms=None, lo=-3, hi=3):
    """Random element of G(n)/G0(n); dense unless ``nterms`` is given."""
    blades = range(0 if unitary else 1, 1 << n)
    if nterms is not None:
        blades = rng.sample(list(blades), min(nterms, len(blades)))
    terms = {b: rng.randint(lo, hi) for b in blades}
    return GrassmannElement(terms, field, unitary, n)


def random_even_odd(rng, n, field=QQ, nterms=4):
    """Random (even, odd) pair of G0(n) elements."""
    evens = [b for b in range(1, 1 << n) if not b.bit_count() & 1]
    odds = [b for b in range(1, 1 << n) if b.bit_count() & 1]
    c = {b: rng.randint(-3, 3) for b in rng.sample(evens, min(nterms, len(evens)))}
    h = {b: rng.randint(-3, 3) for b in rng.sample(odds, min(nterms, len(odds)))}
    return GrassmannElement(c, field, False, n), GrassmannElement(h, field, False, n)


_INT64_SAFE = 1 << 62


def _as_int(c) -> int:
    if isinstance(c, Fraction):
        if c.denominator != 1:
            raise ValueError("dense engine needs integer coefficients in characteristic 0")
        return c.numerator
    return int(c)


class DenseGrassmann:
    """Batched dense arithmetic in G(n) or G0(n).

    An element batch is an array of shape ``(batch, 2**n)`` indexed by blade
    mask. Arithmetic is exact: residues for ``p > 0``; for ``p == 0`` int64 is
    used while an a priori bound guarantees no overflow, otherwise Python
    integers in object arrays.
    """

    def __init__(self, n: int, unitary: bool, p: int = 0):
        self.n = n
        self.size = 1 << n
        self.unitary = unitary
        self.p = p
        lo = 0 if unitary else 1
        a_idx, b_idx, signs = [], [], []
        for a in range(lo, self.size):
            for b in range(lo, self.size):
                if a & b:
                    continue
                a_idx.append(a)
                b_idx.append(b)
                signs.append(-1 if _swaps(a, b) & 1 else 1)
        a_idx = np.array(a_idx, dtype=np.int64)
        b_idx = np.array(b_idx, dtype=np.int64)
        signs = np.array(signs, dtype=np.int64)
        out = a_idx | b_idx
        order = np.argsort(out, kind="stable")
        self._a = a_idx[order]
        self._b = b_idx[order]
        self._s = signs[order]
        out = out[order]
        self._targets, self._starts = np.unique(out, return_index=True)
        self._sign_obj = self._s.astype(object)

    def zeros(self, batch):
        return np.zeros((batch, self.size), dtype=np.int64)

    def random(self, rng: np.random.Generator, batch: int, lo=-2, hi=2):
        if self.p:
            x = rng.integers(0, self.p, size=(batch, self.size), dtype=np.int64)
        else:
            x = rng.integers(lo, hi + 1, size=(batch, self.size), dtype=np.int64)
        if not self.unitary:
            x[:, 0] = 0
        return x

    def constant(self, value, batch):
        x = self.zeros(batch)
        x[:, 0] = value % self.p if self.p else value
        return x

    def from_element(self, g: GrassmannElement, batch=1):
        x = self.zeros(batch)
        for b, c in g.terms.items():
            if b >= self.size:
                raise TruncationMismatch(f"element does not fit in G({self.n})")
            x[:, b] = int(c) % self.p if self.p else _as_int(c)
        return x

    def to_element(self, row, field: Field):
        return GrassmannElement({b: int(c) for b, c in enumerate(row) if c},
                                field, self.unitary, self.n)

    def _bound(self, x):
        if x.dtype == object:
            return None
        return int(np.abs(x).max(initial=0))

    def mul(self, x, y):
        prod_x = x[:, self._a]
        prod_y = y[:, self._b]
        if self.p:
            terms = (prod_x * prod_y) % self.p * self._s
            z = self.zeros(x.shape[0])
            z[:, self._targets] = np.add.reduceat(terms, self._starts, axis=1) % self.p
            return z
        bx, by = self._bound(x), self._bound(y)
        if bx is None or by is None or bx * by * self.size >= _INT64_SAFE:
            prod_x = prod_x.astype(object)
            prod_y = prod_y.astype(object)
            terms = prod_x * prod_y * self._sign_obj
            z = np.zeros((x.shape[0], self.size), dtype=object)
        else:
            terms = prod_x * prod_y * self._s
            z = self.zeros(x.shape[0])
        z[:, self._targets] = np.add.reduceat(terms, self._starts, axis=1)
        return z

    def add(self, x, y):
        if self.p:
            return (x + y) % self.p
        if x.dtype != object and y.dtype != object:
            bx, by = self._bound(x), self._bound(y)
            if bx + by < _INT64_SAFE:
                return x + y
        return x.astype(object) + y.astype(object)

    def scale(self, x, c: int):
        if self.p:
            return (x * (c % self.p)) % self.p
        if x.dtype != object and abs(c) * (self._bound(x) or 0) < _INT64_SAFE:
            return x * c
        return x.astype(object) * c

    def odd_mask(self):
        return np.array([bin(b).count("1") & 1 for b in range(self.size)], dtype=bool)
