"""Normal forms modulo T^(3) and Venkova's order.

Modulo the T-ideal T^(3) generated by ``[[x1, x2], x3]`` every commutator
``[a, b]`` is central, and a product of commutators of variables is
alternating in all of its entries (so it vanishes when a variable repeats).
A monomial times a commutator product is therefore stored as a pair
``(word, J)`` meaning ``word * [x_j1, x_j2] [x_j3, x_j4] ...`` with ``J``
sorted. Sorting the word with ``ba = ab - [a, b]`` reaches the normal form:
a sorted word with commutator set J is exactly the SS element whose
beginning holds the letters outside J and whose end pairs up J in order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key, lru_cache

from .errors import Incomparable, UnitInNonunitary
from .field import QQ, Field
from .freealg import FreePoly, commutator, word_degrees

T3 = "T3"
T3_PLUS_XP = "T3+x^p"

R, S_WITNESS, R1, S1_WITNESS, UNCERTIFIED = "R", "S", "R1", "S1", "uncertified"


@dataclass(frozen=True, order=False)
class SSElement:
    """``x_{i1}^{a1} ... x_{it}^{at} * prod [x_j, x_j'] x_j^b x_j'^b'``.

    ``beginning`` is a tuple of ``(i, alpha)`` with increasing ``i``; ``end``
    is a tuple of blocks ``(j1, j2, beta1, beta2)`` with all ``j`` increasing.
    """

    beginning: tuple = ()
    end: tuple = ()

    def __post_init__(self):
        idx = [i for i, _ in self.beginning]
        if any(a < 1 for _, a in self.beginning):
            raise ValueError("beginning exponents must be >= 1")
        if idx != sorted(set(idx)):
            raise ValueError("beginning indices must be strictly increasing")
        js = [j for blk in self.end for j in blk[:2]]
        if js != sorted(set(js)):
            raise ValueError("end indices must be strictly increasing")
        if any(b < 0 for blk in self.end for b in blk[2:]):
            raise ValueError("end exponents must be >= 0")
        if set(idx) & set(js):
            raise ValueError("beginning and end variables must be disjoint")
        if not idx and not js:
            raise ValueError("an SS element needs a beginning or an end")
        if any(i < 1 for i in idx + js):
            raise ValueError("variable indices start at 1")

    @classmethod
    def from_word(cls, word, J=()):
        """The element ``sorted(word) * prod of commutators over J``."""
        degs = word_degrees(word)
        Js = set(J)
        beginning = tuple((i, degs[i]) for i in sorted(degs) if i not in Js)
        J = sorted(J)
        end = tuple((J[k], J[k + 1], degs.get(J[k], 0), degs.get(J[k + 1], 0))
                    for k in range(0, len(J), 2))
        return cls(beginning, end)

    @property
    def lbeg(self) -> int:
        return len(self.beginning)

    @property
    def lend(self) -> int:
        return len(self.end)

    def degrees(self) -> dict:
        d = {i: a for i, a in self.beginning}
        for j1, j2, b1, b2 in self.end:
            d[j1] = b1 + 1
            d[j2] = b2 + 1
        return d

    @property
    def degree(self) -> int:
        return sum(self.degrees().values())

    def type_vector(self, nvars=None) -> tuple:
        d = self.degrees()
        n = nvars if nvars is not None else max(d)
        return tuple(d.get(i, 0) for i in range(1, n + 1))

    def beginning_vars(self) -> set:
        return {i for i, _ in self.beginning}

    def end_vars(self) -> set:
        return {j for blk in self.end for j in blk[:2]}

    def end_exponents(self) -> dict:
        out = {}
        for j1, j2, b1, b2 in self.end:
            out[j1] = b1
            out[j2] = b2
        return out

    def placement(self, i):
        if i in self.beginning_vars():
            return "b"
        if i in self.end_vars():
            return "e"
        return None

    def nvars(self) -> int:
        return max(self.degrees())

    def __str__(self):
        parts = [f"x{i}" + (f"^{a}" if a > 1 else "") for i, a in self.beginning]
        for j1, j2, b1, b2 in self.end:
            parts.append(f"[x{j1},x{j2}]")
            if b1:
                parts.append(f"x{j1}" + (f"^{b1}" if b1 > 1 else ""))
            if b2:
                parts.append(f"x{j2}" + (f"^{b2}" if b2 > 1 else ""))
        return "*".join(parts)


def ss_to_freepoly(u: SSElement, field: Field = QQ, unitary=False) -> FreePoly:
    def xv(i):
        return FreePoly.var(i, field, unitary)

    out = None
    factors = []
    for i, a in u.beginning:
        factors.append(FreePoly.word((i,) * a, 1, field, unitary))
    for j1, j2, b1, b2 in u.end:
        factors.append(commutator(xv(j1), xv(j2)))
        if b1:
            factors.append(FreePoly.word((j1,) * b1, 1, field, unitary))
        if b2:
            factors.append(FreePoly.word((j2,) * b2, 1, field, unitary))
    for f in factors:
        out = f if out is None else out * f
    return out


# Venkova's order --------------------------------------------------------

def venkova_compare(u: SSElement, v: SSElement) -> int:
    """``1`` if ``u > v``, ``-1`` if ``u < v``, ``0`` if equal.

    Lower degree is greater, then fewer end blocks, then the first variable
    of strictly smaller degree, then the first variable sitting in the end
    of one element and the beginning of the other (end side is greater).
    """
    if u == v:
        return 0
    du, dv = u.degree, v.degree
    if du != dv:
        return 1 if du < dv else -1
    if u.lend != v.lend:
        return 1 if u.lend < v.lend else -1
    gu, gv = u.degrees(), v.degrees()
    top = max(max(gu), max(gv))
    for i in range(1, top + 1):
        a, b = gu.get(i, 0), gv.get(i, 0)
        if a != b:
            return 1 if a < b else -1
    for j in range(1, top + 1):
        pu, pv = u.placement(j), v.placement(j)
        if pu == pv:
            continue
        if pu == "e" and pv == "b":
            return 1
        if pu == "b" and pv == "e":
            return -1
        break
    raise Incomparable(f"{u} and {v} are not ordered")


def venkova_key(u: SSElement, nvars: int) -> tuple:
    """Sort key (for elements on at most ``nvars`` variables) with
    ``key(u) > key(v)`` iff ``u > v``."""
    d = u.degrees()
    ends = u.end_vars()
    return (-u.degree, -u.lend,
            tuple(-d.get(i, 0) for i in range(1, nvars + 1)),
            tuple(1 if i in ends else 0 for i in range(1, nvars + 1)))


def sort_descending(elements) -> list:
    return sorted(elements, key=cmp_to_key(venkova_compare), reverse=True)


# normalization ----------------------------------------------------------

@lru_cache(maxsize=500_000)
def _nf(word: tuple, J: tuple) -> tuple:
    """Normal form of ``word * prod_J`` as ``((sorted word, J), coeff)`` pairs."""
    for k in range(len(word) - 1):
        if word[k] > word[k + 1]:
            break
    else:
        return (((word, J), 1),)
    b, a = word[k], word[k + 1]
    swapped = word[:k] + (a, b) + word[k + 2:]
    out = dict(_nf(swapped, J))
    if a not in J and b not in J:
        # ba = ab - [a, b]; the new commutator joins J with the sign of sorting
        sign = -1
        if sum(1 for j in J if j > a) & 1:
            sign = -sign
        if sum(1 for j in J if j > b) & 1:
            sign = -sign
        newJ = tuple(sorted(J + (a, b)))
        rest = word[:k] + word[k + 2:]
        for key, c in _nf(rest, newJ):
            t = out.get(key, 0) + sign * c
            if t:
                out[key] = t
            else:
                out.pop(key, None)
    return tuple(out.items())


def normal_form_of_word(word) -> dict:
    """``{SSElement: integer coefficient}`` congruent to ``word`` modulo T^(3)."""
    return {SSElement.from_word(w, J): c for (w, J), c in _nf(tuple(word), ())}


def _in_xp_ideal(u: SSElement, p: int) -> bool:
    return any(a >= p for _, a in u.beginning) or any(b >= p for blk in u.end for b in blk[2:])


@dataclass
class SSCombination:
    """Linear combination of SS elements, read modulo ``modulus``.

    ``constant`` carries the unit-word coefficient of unitary input.
    """

    terms: dict
    field: Field
    modulus: str = T3
    unitary: bool = False
    constant: object = None

    def __post_init__(self):
        if self.constant is None:
            self.constant = self.field.zero

    def __bool__(self):
        return bool(self.terms) or bool(self.constant)

    def __eq__(self, other):
        if not isinstance(other, SSCombination):
            return NotImplemented
        return (self.field == other.field and self.terms == other.terms
                and self.constant == other.constant)

    def items_descending(self):
        order = sort_descending(self.terms)
        return [(u, self.terms[u]) for u in order]

    def to_freepoly(self) -> FreePoly:
        out = FreePoly.zero(self.field, self.unitary)
        if self.constant:
            out = out + FreePoly.const(self.constant, self.field)
        for u, c in self.terms.items():
            out = out + ss_to_freepoly(u, self.field, self.unitary).scale(c)
        return out

    def classify_terms(self) -> list:
        p = self.field.p
        return [(u, c, classify(u, p, self.unitary)) for u, c in self.items_descending()]

    def __str__(self):
        pieces = []
        if self.constant:
            pieces.append((self.field.fmt(self.constant), ""))
        for u, c in self.items_descending():
            pieces.append((self.field.fmt(c), str(u)))
        if not pieces:
            return "0"
        out = []
        for s, body in pieces:
            neg = s.startswith("-")
            mag = s[1:] if neg else s
            text = mag if not body else (body if mag == "1" else f"{mag}*{body}")
            if not out:
                out.append(("-" if neg else "") + text)
            else:
                out.append((" - " if neg else " + ") + text)
        return "".join(out)


def normalize(f: FreePoly, modulus: str = T3, unitary=None) -> SSCombination:
    """Reduce ``f`` to a combination of SS elements.

    ``modulus`` is ``T3`` or ``T3_PLUS_XP``; the latter (nonunitary, p > 2)
    works modulo the identities of G0 and drops every SS element with an
    exponent ``>= p``. For unitary input the unit-word coefficient is split
    off, and the identities of G are exactly T^(3).
    """
    unitary = f.unitary if unitary is None else unitary
    if not unitary and f.constant_term():
        raise UnitInNonunitary("nonunitary normalization of a polynomial with a constant term")
    p = f.field.p
    if modulus not in (T3, T3_PLUS_XP):
        raise ValueError(f"unknown modulus {modulus!r}")
    drop_xp = modulus == T3_PLUS_XP and not unitary and p > 2
    acc = {}
    for w, c in f.terms.items():
        if not w:
            continue
        for key, k in _nf(w, ()):
            t = acc.get(key, f.field.zero) + c * k
            if t:
                acc[key] = t
            else:
                acc.pop(key, None)
    terms = {}
    for (w, J), c in acc.items():
        u = SSElement.from_word(w, J)
        if drop_xp and _in_xp_ideal(u, p):
            continue
        terms[u] = c
    if modulus == T3_PLUS_XP and unitary:
        modulus = T3
    return SSCombination(terms, f.field, modulus, unitary, f.constant_term() if unitary else None)


def classify(u: SSElement, p: int, unitary=False) -> str:
    """Place ``u`` in R / S (nonunitary) or R1 / S1 (unitary).

    ``uncertified`` marks pure-end elements with an end exponent ``>= p``,
    which the spanning argument does not cover (they are identities of G0).
    """
    if not unitary:
        if u.lbeg > 0:
            return R
        if p and any(b > p - 1 for blk in u.end for b in blk[2:]):
            return UNCERTIFIED
        return S_WITNESS
    if u.lbeg > 0:
        if not p:
            return R1
        degs = u.degrees()
        if any(degs[i] % p for i in u.beginning_vars()):
            return R1
        return S1_WITNESS
    if p and any(b > p - 1 for blk in u.end for b in blk[2:]):
        return UNCERTIFIED
    return S1_WITNESS
