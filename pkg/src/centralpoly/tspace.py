"""Bounded-degree T-spaces and T-ideals.

The T-space generated by ``g`` is spanned by all substitution instances
``g(h_1, ..., h_k)``; over an infinite field it is spanned, degree by
degree, by the multihomogeneous components of those instances. Writing each
``h_j`` as a sum of monomials, the component picking the monomials
``m_1, ..., m_d`` for the ``d`` occurrences of ``x_j`` is the sum over all
distinct ways of placing them (a polarization). :func:`span_at_type`
enumerates exactly these, plus outer monomial factors for T-ideals, at one
fixed multidegree and row-reduces them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .errors import CharacteristicMismatch, ResourceLimit, TypeMismatch
from .field import Field
from .freealg import FreePoly, commutator, multihomogeneous_components, words_of_type, word_str
from .generic import is_alive, odd_kernels
from .linalg import Echelon, nullspace, rref

TSPACE = "T-space"
TIDEAL = "T-ideal"

YES = "yes"
NO_AT_THIS_CAP = "no-at-this-cap"


@dataclass
class GeneratorSet:
    name: str
    generators: list
    closure: str
    unitary: bool
    p: int

    def __post_init__(self):
        if not self.unitary:
            for g in self.generators:
                if g.constant_term():
                    raise ValueError("nonunitary generators cannot have a constant term")

    def __add__(self, other):
        # a sum of a T-space and a T-ideal is spanned by both instance sets
        if self.unitary != other.unitary or self.p != other.p:
            raise ValueError("generator sets differ in unitarity or characteristic")
        return CombinedSet(f"{self.name}+{other.name}", [self, other])


@dataclass
class CombinedSet:
    name: str
    parts: list

    @property
    def unitary(self):
        return self.parts[0].unitary

    @property
    def p(self):
        return self.parts[0].p

    def __add__(self, other):
        more = other.parts if isinstance(other, CombinedSet) else [other]
        return CombinedSet(f"{self.name}+{other.name}", self.parts + more)


def _parts(gens):
    return gens.parts if isinstance(gens, CombinedSet) else [gens]


# builtin generator families ------------------------------------------------

def _x(i, field, unitary):
    return FreePoly.var(i, field, unitary)


def w_poly(n: int, p: int, offset=0, unitary=False) -> FreePoly:
    """``prod_{k=1}^n [x_{2k-1}, x_{2k}] x_{2k-1}^{p-1} x_{2k}^{p-1}`` (variables shifted by ``offset``)."""
    if p < 3:
        raise CharacteristicMismatch("w_n needs an odd prime characteristic")
    field = Field(p)
    out = None
    for k in range(1, n + 1):
        a, b = _x(offset + 2 * k - 1, field, unitary), _x(offset + 2 * k, field, unitary)
        blk = commutator(a, b) * a ** (p - 1) * b ** (p - 1)
        out = blk if out is None else out * blk
    return out


def default_block_bound(total_degree: int, p: int) -> int:
    return max(1, total_degree // (2 * p)) if p else 1


def builtin_generators(name: str, p: int, bound: int = 1, unitary=None) -> GeneratorSet:
    """One of ``S, S1, T3, TG0, CPG0, CPG`` with ``w_n`` for ``n <= bound``."""
    field = Field(p)
    key = name.upper()
    if key == "S":
        u = False if unitary is None else unitary
        gens = [commutator(_x(1, field, u), _x(2, field, u))]
        if p:
            gens += [w_poly(n, p, unitary=u) for n in range(1, bound + 1)]
        return GeneratorSet("S", gens, TSPACE, u, p)
    if key == "S1":
        if not p:
            s = builtin_generators("S", p, bound, unitary=True)
            return GeneratorSet("S1", s.generators, TSPACE, True, p)
        x1 = _x(1, field, True)
        gens = [commutator(x1, _x(2, field, True)), x1 ** p]
        for k in range(1, bound + 1):
            gens.append(x1 ** p * w_poly(k, p, offset=1, unitary=True))
        return GeneratorSet("S1", gens, TSPACE, True, p)
    if key == "T3":
        u = False if unitary is None else unitary
        x1, x2, x3 = (_x(i, field, u) for i in (1, 2, 3))
        return GeneratorSet("T3", [commutator(x1, x2, x3)], TIDEAL, u, p)
    if key == "TG0":
        x1, x2, x3 = (_x(i, field, False) for i in (1, 2, 3))
        gens = [commutator(x1, x2, x3)]
        if p:
            gens.insert(0, x1 ** p)
        return GeneratorSet("TG0", gens, TIDEAL, False, p)
    if key == "CPG0":
        x1, x2, x3, x4 = (_x(i, field, False) for i in (1, 2, 3, 4))
        gens = [commutator(x1, x2)]
        if p:
            gens += [x1 ** p, x2 * x1 ** p]
        gens.append(commutator(x1, x2) * commutator(x3, x4))
        if p:
            gens += [w_poly(n, p) for n in range(1, bound + 1)]
        return GeneratorSet("CPG0", gens, TSPACE, False, p)
    if key == "CPG":
        x1, x2, x3, x4 = (_x(i, field, True) for i in (1, 2, 3, 4))
        gens = [commutator(x1, x2)]
        if p:
            gens.append(x1 ** p)
        gens.append(commutator(x1, x2) * commutator(x3, x4))
        if p:
            for n in range(1, bound + 1):
                gens.append(_x(2 * n + 1, field, True) ** p * w_poly(n, p, unitary=True))
        return GeneratorSet("CPG", gens, TSPACE, True, p)
    raise ValueError(f"unknown generator set {name!r}")


# instance enumeration ------------------------------------------------------

DEFAULT_ROW_BUDGET = 400_000


def _sub_types(remaining):
    """All type vectors componentwise <= remaining."""
    return itertools.product(*(range(k + 1) for k in remaining))


class _WordTable:
    def __init__(self, cap):
        self.cap = cap
        self.cache = {}

    def words_le(self, remaining, allow_empty):
        key = (remaining, allow_empty)
        out = self.cache.get(key)
        if out is None:
            out = []
            for t in _sub_types(remaining):
                s = sum(t)
                if s > self.cap or (s == 0 and not allow_empty):
                    continue
                out.extend(words_of_type(t) if s else [()])
            out.sort(key=lambda w: (len(w), w))
            self.cache[key] = out
        return out


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _type_of(word, n):
    t = [0] * n
    for v in word:
        t[v - 1] += 1
    return tuple(t)


def _arrangements(items):
    """Distinct orderings of a multiset (given as a sorted list)."""
    if len(items) <= 1:
        yield tuple(items)
        return
    seen = set()
    for perm in itertools.permutations(items):
        if perm not in seen:
            seen.add(perm)
            yield perm


def _polarize(gen_terms, choice):
    """Sum over placements of the chosen monomials into the generator's words.

    ``choice[j]`` is the sorted multiset of words for variable x_j.
    """
    arrs = {j: list(_arrangements(ms)) for j, ms in choice.items()}
    out = {}
    for w, c in gen_terms:
        for combo in itertools.product(*(arrs[j] for j in sorted(arrs))):
            pick = dict(zip(sorted(arrs), combo))
            pos = {j: 0 for j in pick}
            res = []
            for v in w:
                res.extend(pick[v][pos[v]])
                pos[v] += 1
            key = tuple(res)
            out[key] = out.get(key, 0) + c
    return out


def _instances(gen: FreePoly, target, unitary, ideal, table, budget):
    """Yield ``(row dict, description)`` for the polarized instances of a
    multihomogeneous generator landing on ``target``."""
    n = len(target)
    degs = {}
    for v in next(iter(gen.terms)):
        degs[v] = degs.get(v, 0) + 1
    gen_terms = [(w, int(c) if gen.field.p else c) for w, c in gen.terms.items()]
    slots = [j for j in sorted(degs) for _ in range(degs[j])]
    count = [0]

    def rec(k, remaining, chosen, last):
        if k == len(slots):
            yield from outer(remaining, chosen)
            return
        j = slots[k]
        same = k > 0 and slots[k - 1] == j
        for w in table.words_le(remaining, allow_empty=unitary):
            if same and (len(w), w) < (len(last), last):
                continue
            chosen.setdefault(j, []).append(w)
            yield from rec(k + 1, _sub(remaining, _type_of(w, n)), chosen, w)
            chosen[j].pop()

    def outer(remaining, chosen):
        choice = {j: list(ms) for j, ms in chosen.items()}
        if not ideal:
            if any(remaining):
                return
            pieces = [(None, None)]
        else:
            pieces = []
            for y in table.words_le(remaining, allow_empty=True):
                rest = _sub(remaining, _type_of(y, n))
                zs = words_of_type(rest) if any(rest) else [()]
                for z in zs:
                    if len(z) <= table.cap:
                        pieces.append((y, z))
        if not pieces:
            return
        core = _polarize(gen_terms, choice)
        for y, z in pieces:
            count[0] += 1
            if count[0] > budget:
                raise ResourceLimit(f"more than {budget} substitution instances", reached=table.cap)
            if y is None:
                row = core
            else:
                row = {y + w + z: c for w, c in core.items()}
            yield row, (choice, y, z)

    yield from rec(0, tuple(target), {}, None)


@dataclass
class TSpaceBasis:
    """Row-reduced span of the instances of a generator set at one type."""

    type: tuple
    words: list
    echelon: Echelon
    provenance: list
    name: str
    cap: int
    unitary: bool
    p: int
    instances: int = 0
    index: dict = dc_field(default=None, repr=False)
    sources: list = dc_field(default_factory=list, repr=False)

    def __post_init__(self):
        if self.index is None:
            self.index = {w: i for i, w in enumerate(self.words)}

    @property
    def dimension(self) -> int:
        return self.echelon.rank

    def row_polys(self) -> list:
        field = Field(self.p)
        return [FreePoly({self.words[i]: c for i, c in enumerate(r) if c}, field, self.unitary)
                for r in self.echelon.rows]

    def vector(self, f: FreePoly):
        v = [0] * len(self.words)
        for w, c in f.terms.items():
            i = self.index.get(w)
            if i is None:
                raise TypeMismatch(f"monomial {word_str(w)} is not of type {self.type}")
            v[i] = c
        return v

    def source_coordinates(self, vec):
        """Coefficients expressing ``vec`` over the original instance rows
        (the ones named by ``provenance``), or ``None``."""
        coords = self.echelon.coordinates(vec)
        if coords is None:
            return None
        k, n = len(self.sources), len(self.words)
        aug = [tuple(r) + tuple(1 if i == j else 0 for j in range(k)) for i, r in enumerate(self.sources)]
        full = rref(aug, n + k, self.p)
        # full.rows[i] = sum_j T[i][j] * sources[j] and its first n entries are echelon row i
        out = [0] * k
        for c, row in zip(coords, full.rows):
            for j in range(k):
                out[j] += c * row[n + j]
        return [x % self.p for x in out] if self.p else out

    def export(self) -> dict:
        return {
            "type": list(self.type),
            "rows": [str(f) for f in self.row_polys()],
            "provenance": [describe(pv) for pv in self.provenance],
        }


def describe(prov) -> str:
    gen, (choice, y, z) = prov
    subs = []
    for j in sorted(choice):
        ms = [word_str(w) if w else "1" for w in choice[j]]
        # several monomials for one variable: the polarized component
        subs.append(f"x{j} -> {ms[0]}" if len(ms) == 1 else f"x{j} -> {{{', '.join(ms)}}}")
    s = f"{gen}: " + ", ".join(subs)
    if y is not None and (y or z):
        s += f"; outer {word_str(y) if y else '1'} . {word_str(z) if z else '1'}"
    return s


def _pad(t, n):
    t = tuple(t)
    while len(t) > n and t[-1] == 0:
        t = t[:-1]
    return t + (0,) * (n - len(t))


def span_at_type(gens, type_vec, cap=None, budget=DEFAULT_ROW_BUDGET) -> TSpaceBasis:
    """Exact span of the instances of ``gens`` with multidegree ``type_vec``.

    ``cap`` bounds the length of each substituted monomial; the default (the
    total degree of the type) already reaches every instance, since no
    monomial can be longer than the target.
    """
    target = tuple(type_vec)
    if any(t < 0 for t in target):
        raise ValueError("type entries must be >= 0")
    total = sum(target)
    cap = total if cap is None else cap
    if cap < max(target, default=0):
        raise ValueError("substitution cap must be at least the largest type entry")
    parts = _parts(gens)
    unitary, p = parts[0].unitary, parts[0].p
    words = words_of_type(target) if total else [()]
    index = {w: i for i, w in enumerate(words)}
    table = _WordTable(cap)
    rows, prov, seen = [], [], set()
    count = 0
    for part in parts:
        ideal = part.closure == TIDEAL
        for g in part.generators:
            for comp in multihomogeneous_components(g):
                if not comp.terms or not next(iter(comp.terms)):
                    continue
                for row, how in _instances(comp, target, unitary, ideal, table, budget - count):
                    count += 1
                    vec = [0] * len(words)
                    for w, c in row.items():
                        vec[index[w]] += c
                    if p:
                        vec = [v % p for v in vec]
                    key = tuple(vec)
                    if not any(key) or key in seen:
                        continue
                    seen.add(key)
                    rows.append(key)
                    prov.append((str(g), how))
    ech = rref(rows, len(words), p)
    basis = TSpaceBasis(target, words, ech, [prov[i] for i in ech.origin], _name(gens), cap,
                        unitary, p, count, index)
    basis.sources = [rows[i] for i in ech.origin]
    return basis


def _name(gens):
    return gens.name


@dataclass
class Membership:
    verdict: str
    coordinates: list = None
    provenance: list = None


def member(f: FreePoly, basis: TSpaceBasis) -> Membership:
    if not f.terms:
        return Membership(YES, [], [])
    if not f.is_multihomogeneous():
        raise TypeMismatch("split the polynomial into multihomogeneous components first")
    t = f.type_vector()
    n = max(len(t), len(basis.type))
    if _pad(t, n) != _pad(basis.type, n):
        raise TypeMismatch(f"polynomial has type {t}, basis has type {basis.type}")
    coords = basis.source_coordinates(basis.vector(f))
    if coords is None:
        return Membership(NO_AT_THIS_CAP)
    return Membership(YES, coords, [describe(pv) for pv in basis.provenance])


# central polynomials by kernel computation ----------------------------------

def central_search(type_vec, p: int, unitary=False, truncation=None) -> list:
    """Basis of the multihomogeneous polynomials of this type whose generic
    evaluation has no odd part (central polynomials and identities).

    The answer is for the infinite Grassmann algebra. ``truncation``, when
    given, must be at least the total degree plus 2; it only guards callers
    that think in terms of a finite G(n).
    """
    if truncation is not None and truncation < sum(type_vec) + 2:
        raise ValueError(f"truncation {truncation} is below total degree + 2 = {sum(type_vec) + 2}")
    words, ech = central_echelon(type_vec, p, unitary)
    field = Field(p)
    return [FreePoly({words[i]: c for i, c in enumerate(r) if c}, field, unitary) for r in ech.rows]


def central_echelon(type_vec, p: int, unitary=False):
    target = tuple(type_vec)
    words = words_of_type(target)
    kernels = [odd_kernels(w) for w in words]
    odd = sorted({b for ks in kernels for b in ks
                  if b.bit_count() & 1 and is_alive(target, b, p, unitary)})
    constraints = [[ks.get(b, 0) for ks in kernels] for b in odd]
    basis = nullspace(constraints, len(words), p) if constraints else [
        tuple(1 if i == j else 0 for i in range(len(words))) for j in range(len(words))]
    return words, rref(basis, len(words), p)
