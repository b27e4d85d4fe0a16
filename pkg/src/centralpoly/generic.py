"""Generic evaluation: decide identity / centrality over an infinite field.

Every element of G0 splits as ``c + h`` with ``c`` even (central, ``c^p = 0``
in characteristic p) and ``h`` odd (anticommuting, ``h^2 = 0``); elements of
G add a scalar ``a``. Evaluating a polynomial at the generic values
``x_i -> a_i + c_i + h_i`` in the free supercommutative algebra on these
symbols therefore computes every Grassmann evaluation at once.

For a word, the coefficient of ``h_B`` (B a set of variables) is a signed
count of the ways to pick one occurrence of each variable of B; the
remaining letters contribute ``prod (a_i + c_i)^(r_i - [i in B])``, which
depends only on the type ``r``. So a polynomial is summarized by the map
``(type, B) -> sum of coefficient * signed count``. A pair is *alive* when
its commuting factor is nonzero: always in G or in characteristic 0, and in
G0 over F_p only if every ``r_i - [i in B] <= p - 1``.

A nonzero alive pair can always be realized by a concrete substitution into
a finite Grassmann algebra (see :func:`find_certificate`), so the summary is
exact: ``f`` is an identity iff it has no nonzero alive pair, and central iff
every such pair has ``|B|`` even.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from math import comb

from .errors import ResourceLimit
from .exterior import GrassmannElement, blade_indices
from .field import Field, SymPoly
from .freealg import FreePoly, evaluate, word_type

IDENTITY = "identity"
CENTRAL = "central-non-identity"
NEITHER = "neither"


def odd_kernels(word) -> dict:
    """Map ``B mask -> signed count`` for one word (bit ``v - 1`` is x_v)."""
    states = {0: 1}
    for v in word:
        bit = 1 << (v - 1)
        nxt = dict(states)
        for mask, val in states.items():
            if mask & bit:
                continue
            # h_v moves left past the already chosen h's of larger variables
            s = -val if (mask >> v).bit_count() & 1 else val
            k = mask | bit
            t = nxt.get(k, 0) + s
            if t:
                nxt[k] = t
            else:
                nxt.pop(k, None)
        states = nxt
    return states


def is_alive(type_vec, bmask: int, p: int, unitary: bool) -> bool:
    if unitary or p == 0:
        return True
    for i, r in enumerate(type_vec):
        if r - ((bmask >> i) & 1) > p - 1:
            return False
    return True


def mask_vars(bmask: int) -> tuple:
    return blade_indices(bmask)


@dataclass
class GenericImage:
    """Summary of the generic evaluation of a polynomial.

    ``terms`` maps ``(type, B mask)`` to a nonzero field coefficient, keeping
    only alive pairs.
    """

    terms: dict
    field: Field
    unitary: bool
    nvars: int

    @property
    def is_identity(self) -> bool:
        return not self.terms

    @property
    def is_central(self) -> bool:
        return all(not b.bit_count() & 1 for _, b in self.terms)

    @property
    def verdict(self) -> str:
        if self.is_identity:
            return IDENTITY
        return CENTRAL if self.is_central else NEITHER

    def odd_terms(self) -> dict:
        return {k: c for k, c in self.terms.items() if k[1].bit_count() & 1}

    def expanded(self) -> dict:
        """The image as ``(a exponents, c exponents, h mask) -> coefficient``."""
        p = self.field.p
        out = {}
        for (r, b), coef in self.terms.items():
            m = [ri - ((b >> i) & 1) for i, ri in enumerate(r)]
            if not self.unitary:
                key = ((0,) * len(r), tuple(m), b)
                out[key] = out.get(key, 0) + coef
                continue
            ranges = [range(0, (mi if not p else min(mi, p - 1)) + 1) for mi in m]
            for es in itertools.product(*ranges):
                c = coef
                for mi, e in zip(m, es):
                    c = c * comb(mi, e)
                if c:
                    key = (tuple(mi - e for mi, e in zip(m, es)), tuple(es), b)
                    out[key] = out.get(key, 0) + c
        return {k: v for k, v in out.items() if v}

    def __str__(self):
        terms = self.expanded()
        if not terms:
            return "0"
        parts = []
        for (a, c, b), coef in sorted(terms.items(), key=lambda t: (t[0][2].bit_count(), t[0])):
            factors = []
            for sym, exps in (("a", a), ("c", c)):
                for i, e in enumerate(exps, start=1):
                    if e:
                        factors.append(f"{sym}{i}" + (f"^{e}" if e > 1 else ""))
            factors.extend(f"h{i}" for i in mask_vars(b))
            body = "*".join(factors)
            s = self.field.fmt(coef)
            if not body:
                parts.append(s)
            elif s == "1":
                parts.append(body)
            elif s == "-1":
                parts.append("-" + body)
            else:
                parts.append(f"{s}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


def generic_image(f: FreePoly, unitary=None) -> GenericImage:
    unitary = f.unitary if unitary is None else unitary
    n = f.nvars()
    p = f.field.p
    acc = {}
    kernel_cache = {}
    for w, c in f.terms.items():
        r = word_type(w, n)
        ks = kernel_cache.get(w)
        if ks is None:
            ks = kernel_cache[w] = odd_kernels(w)
        for b, k in ks.items():
            if not is_alive(r, b, p, unitary):
                continue
            key = (r, b)
            acc[key] = acc.get(key, f.field.zero) + c * k
    terms = {k: v for k, v in acc.items() if v}
    return GenericImage(terms, f.field, unitary, n)


def verdict(f: FreePoly, unitary=None) -> str:
    return generic_image(f, unitary).verdict


@dataclass
class Certificate:
    """A concrete substitution separating ``f`` from the center (or from 0).

    ``value`` is ``f`` evaluated at ``assignment`` inside G(z)/G0(z).
    ``probe`` is the fresh generator index ``z + 1``; ``commutator`` is
    ``[value, e_probe]``, nonzero exactly when ``value`` has an odd part.
    """

    assignment: dict
    value: GrassmannElement
    generators: int
    probe: int
    commutator: GrassmannElement
    term: tuple = dc_field(default=None)


def _nonunitary_assignment(r, b, field):
    gens = {}
    nxt = 1
    for i, ri in enumerate(r, start=1):
        if not ri:
            # variables outside the chosen type are sent to 0
            gens[i] = {}
            continue
        lone = (b >> (i - 1)) & 1
        terms = {}
        for _ in range(ri - lone):
            terms[(1 << (nxt - 1)) | (1 << nxt)] = 1
            nxt += 2
        if lone:
            terms[1 << (nxt - 1)] = 1
            nxt += 1
        gens[i] = terms
    z = nxt - 1
    return {i: GrassmannElement(t, field, False, 0) for i, t in gens.items()}, z


def _unitary_assignment(r, b, alphas, field):
    out = {}
    nxt = 1
    for i, ri in enumerate(r, start=1):
        terms = {0: alphas[i - 1]}
        if (b >> (i - 1)) & 1:
            terms[1 << (nxt - 1)] = 1
            nxt += 1
        out[i] = GrassmannElement(terms, field, True, 0)
    return out, nxt - 1


def _finish(f, assignment, z, term):
    value = evaluate(f, assignment)
    value = GrassmannElement(value.terms, f.field, value.unitary, 0)
    probe = GrassmannElement.generator(z + 1, f.field, value.unitary)
    return Certificate(assignment, value, z, z + 1, value.commutator(probe), term)


def find_certificate(f: FreePoly, central=True, image=None, max_alpha_tries=64):
    """Concrete substitution showing ``f`` is not central (or, with
    ``central=False``, not an identity). Returns ``None`` if there is none.
    """
    image = image or generic_image(f)
    candidates = image.odd_terms() if central else image.terms
    if not candidates:
        return None
    field = f.field
    for (r, b) in sorted(candidates, key=lambda k: (sum(k[0]), k[0], k[1])):
        if not image.unitary:
            assignment, z = _nonunitary_assignment(r, b, field)
            cert = _finish(f, assignment, z, (r, b))
            ok = cert.commutator if central else cert.value
            if ok:
                return cert
            continue
        # scalars only matter when several types share the chosen h-pattern
        ranges = [range(1, 5)] * len(r)
        for k, alphas in enumerate(itertools.product(*ranges)):
            if k >= max_alpha_tries:
                break
            alphas = [field(a) for a in alphas]
            if field.p and any(not a for a in alphas):
                continue
            assignment, z = _unitary_assignment(r, b, alphas, field)
            cert = _finish(f, assignment, z, (r, b))
            ok = cert.commutator if central else cert.value
            if ok:
                return cert
    return None


# literal generic evaluation in a fixed truncation --------------------------

LITERAL_BUDGET = 200_000


def literal_generic_values(variables, n, field, unitary):
    lo = 0 if unitary else 1
    out = {}
    for i in variables:
        terms = {bl: SymPoly.var((i, bl), field) for bl in range(lo, 1 << n)}
        out[i] = GrassmannElement(terms, field, unitary, n)
    return out


def literal_generic_image(f: FreePoly, n: int, unitary=None) -> GrassmannElement:
    """Evaluate ``f`` at ``x_i -> sum_J c_{i,J} e_J`` over all blades of the
    truncation, with the c's independent commuting indeterminates.

    Only feasible for small ``n`` and degree; raises :class:`ResourceLimit`
    otherwise.
    """
    unitary = f.unitary if unitary is None else unitary
    size = (1 << n) - (0 if unitary else 1)
    d = max(f.degree(), 1)
    estimate = size ** min(d, n) * max(len(f.terms), 1)
    if estimate > LITERAL_BUDGET:
        raise ResourceLimit(
            f"literal generic evaluation in G({n}) at degree {d} is too large; "
            "lower the truncation or use the default method", reached=estimate)
    values = literal_generic_values(sorted(f.variables()), n, f.field, unitary)
    if not f.variables():
        return GrassmannElement({0: f.constant_term()} if unitary else {}, f.field, unitary, n)
    return evaluate(f, values)


def literal_verdict(f: FreePoly, n: int, unitary=None) -> str:
    img = literal_generic_image(f, n, unitary)
    if not img:
        return IDENTITY
    return CENTRAL if not img.odd_part() else NEITHER
