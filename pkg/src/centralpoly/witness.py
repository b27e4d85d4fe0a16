"""Separating substitutions for the families M_{m,n} and M'_{m,n}(r).

``M_{m,n}`` (nonunitary) holds the SS elements on exactly the variables
x_1..x_n with x_m in the beginning, every beginning index ``<= m`` and, for
p > 2, all beginning exponents in ``[1, p-1]`` and end exponents in
``[0, p-1]``. ``M'_{m,n}(r)`` (unitary) holds the SS elements of type ``r``
with x_m in the beginning.

For each member ``u`` the witness assignment makes ``u`` evaluate to a
nonzero multiple of the top blade while every smaller member of the family
vanishes, which is what makes combinations of the family non-central.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .canon import SSElement, sort_descending, ss_to_freepoly
from .errors import NotInM, NotInMPrime, ResourceLimit
from .exterior import GrassmannElement, blade
from .field import Field
from .freealg import FreePoly


def build_w(N: int, n: int, field: Field = Field(0)) -> GrassmannElement:
    """``sum_{j=N+1}^{N+n} e_{2j-1} e_{2j}``."""
    if n < 1 or N < 0:
        raise ValueError("need n >= 1 and N >= 0")
    return GrassmannElement({blade(2 * j - 1, 2 * j): 1 for j in range(N + 1, N + n + 1)}, field)


def build_v(N: int, n: int, field: Field = Field(0)) -> GrassmannElement:
    """``build_w(N, n) + e_{2N+2n+1}``."""
    return build_w(N, n, field) + GrassmannElement.generator(2 * N + 2 * n + 1, field)


def top_blade_w(N: int, n: int):
    return blade(*range(2 * N + 1, 2 * N + 2 * n + 1))


def top_blade_v(N: int, n: int):
    return blade(*range(2 * N + 1, 2 * N + 2 * n + 2))


# evaluation of SS elements ----------------------------------------------

def evaluate_ss(u: SSElement, assignment: dict, cache=None) -> GrassmannElement:
    """``u(g_1, ..., g_n)`` computed factor by factor, stopping at the first zero."""
    cache = {} if cache is None else cache

    def power(i, k):
        key = (i, k)
        r = cache.get(key)
        if r is None:
            r = assignment[i] if k == 1 else power(i, k - 1) * assignment[i]
            cache[key] = r
        return r

    acc = None
    for i, a in u.beginning:
        f = power(i, a)
        acc = f if acc is None else acc * f
        if not acc:
            return acc
    for j1, j2, b1, b2 in u.end:
        key = ("c", j1, j2)
        c = cache.get(key)
        if c is None:
            c = cache[key] = assignment[j1].commutator(assignment[j2])
        acc = c if acc is None else acc * c
        if b1:
            acc = acc * power(j1, b1)
        if b2:
            acc = acc * power(j2, b2)
        if not acc:
            return acc
    return acc


# membership -------------------------------------------------------------

def check_m(u: SSElement, m: int, n: int, p: int):
    """Raise :class:`NotInM` unless ``u`` lies in M_{m,n}."""
    if not 1 <= m <= n:
        raise NotInM(f"need 1 <= m <= n, got m={m}, n={n}")
    vars_ = u.beginning_vars() | u.end_vars()
    if vars_ != set(range(1, n + 1)):
        raise NotInM(f"{u} is not on exactly the variables x1..x{n}")
    if m not in u.beginning_vars():
        raise NotInM(f"x{m} is not in the beginning of {u}")
    if any(i > m for i in u.beginning_vars()):
        raise NotInM(f"{u} has a beginning variable after x{m}")
    if p > 2:
        if any(a > p - 1 for _, a in u.beginning):
            raise NotInM(f"{u} has a beginning exponent above {p - 1}")
        if any(b > p - 1 for blk in u.end for b in blk[2:]):
            raise NotInM(f"{u} has an end exponent above {p - 1}")


def in_m(u, m, n, p) -> bool:
    try:
        check_m(u, m, n, p)
    except NotInM:
        return False
    return True


def check_mprime(u: SSElement, m: int, n: int, r: tuple, p: int):
    """Raise :class:`NotInMPrime` unless ``u`` lies in M'_{m,n}(r)."""
    r = tuple(r)
    if not 1 <= m <= n or len(r) != n or any(ri < 1 for ri in r):
        raise NotInMPrime(f"need 1 <= m <= n and n positive degrees, got m={m}, r={r}")
    if p and r[m - 1] % p == 0:
        raise NotInMPrime(f"r_{m} = {r[m - 1]} is divisible by p = {p}")
    if u.lbeg == 0 or m not in u.beginning_vars():
        raise NotInMPrime(f"x{m} is not in the beginning of {u}")
    d = u.degrees()
    if set(d) != set(range(1, n + 1)) or any(d[i] != r[i - 1] for i in d):
        raise NotInMPrime(f"{u} does not have type {r}")


# witnesses --------------------------------------------------------------

@dataclass
class Witness:
    """Assignment ``x_i -> assignment[i]`` inside G(z) or G0(z).

    ``supports[i]`` lists the generator indices used by ``assignment[i]``.
    """

    element: SSElement
    m: int
    n: int
    p: int
    assignment: dict
    generators: int
    supports: dict
    value: GrassmannElement

    def evaluate(self, v: SSElement, cache=None) -> GrassmannElement:
        return evaluate_ss(v, self.assignment, cache)

    def top_blade(self):
        return (1 << self.generators) - 1


def m_fact_witness(u: SSElement, m: int, n: int, p: int) -> Witness:
    """Witness for ``u`` in M_{m,n}.

    Supports are allocated left to right in variable order: x_m gets
    ``alpha_m - 1`` pairs and a lone generator, other beginning variables get
    ``alpha`` pairs, end variables ``beta`` pairs and a lone generator, so
    ``z = 2 (deg u - lend u) - 1``.
    """
    check_m(u, m, n, p)
    field = Field(p)
    alpha = dict(u.beginning)
    beta = u.end_exponents()
    nxt = 1
    assignment, supports = {}, {}
    for i in range(1, n + 1):
        if i == m:
            pairs, lone = alpha[i] - 1, True
        elif i in alpha:
            pairs, lone = alpha[i], False
        else:
            pairs, lone = beta[i], True
        terms, used = {}, []
        for _ in range(pairs):
            terms[blade(nxt, nxt + 1)] = 1
            used += [nxt, nxt + 1]
            nxt += 2
        if lone:
            terms[blade(nxt)] = 1
            used.append(nxt)
            nxt += 1
        assignment[i] = GrassmannElement(terms, field, False)
        supports[i] = tuple(used)
    z = nxt - 1
    value = evaluate_ss(u, assignment)
    return Witness(u, m, n, p, assignment, z, supports, value)


def mprime_witness(u: SSElement, m: int, n: int, r, p: int) -> Witness:
    """Witness for ``u`` in M'_{m,n}(r): ``g_m = 1 + e``, the other beginning
    variables ``1``, each end variable ``1 + e``, with generators numbered
    ``1..z`` in variable order and ``z = 2 lend u + 1``."""
    check_mprime(u, m, n, r, p)
    field = Field(p)
    carriers = sorted({m} | u.end_vars())
    label = {v: k for k, v in enumerate(carriers, start=1)}
    assignment, supports = {}, {}
    for i in range(1, n + 1):
        if i in label:
            assignment[i] = GrassmannElement({0: 1, blade(label[i]): 1}, field, True)
            supports[i] = (label[i],)
        else:
            assignment[i] = GrassmannElement({0: 1}, field, True)
            supports[i] = ()
    z = len(carriers)
    value = evaluate_ss(u, assignment)
    return Witness(u, m, n, p, assignment, z, supports, value)


def mprime_expected_odd_part(u: SSElement, m: int, r, p: int) -> GrassmannElement:
    """``r_m e_m 2^s prod e_{j1} e_{j2}`` in the relabelled generators."""
    field = Field(p)
    carriers = sorted({m} | u.end_vars())
    label = {v: k for k, v in enumerate(carriers, start=1)}
    out = GrassmannElement({blade(label[m]): r[m - 1]}, field, True)
    for j1, j2, _, _ in u.end:
        out = out * GrassmannElement({blade(label[j1], label[j2]): 2}, field, True)
    return out


# enumeration ------------------------------------------------------------

DEFAULT_LIMIT = 20_000


def _even_subsets_complement(universe, must_have, allowed):
    """Beginning sets B with ``must_have`` in B, B within ``allowed``, and
    ``universe - B`` of even size."""
    optional = sorted(set(allowed) - {must_have})
    for k in range(len(optional) + 1):
        for extra in itertools.combinations(optional, k):
            B = {must_have, *extra}
            if (len(universe) - len(B)) % 2 == 0:
                yield sorted(B)


def enumerate_m(m: int, n: int, p: int, max_degree=None, limit=DEFAULT_LIMIT) -> list:
    """All of M_{m,n} (degree-bounded when p = 0), sorted descending."""
    if m > n or m < 1:
        return []
    if p == 0 and max_degree is None:
        raise ResourceLimit("M_{m,n} is infinite in characteristic 0; give max_degree")
    top = p - 1 if p else max_degree
    universe = set(range(1, n + 1))
    out = []
    for B in _even_subsets_complement(universe, m, range(1, m + 1)):
        J = sorted(universe - set(B))
        for alphas in itertools.product(range(1, top + 1), repeat=len(B)):
            for betas in itertools.product(range(0, top + 1), repeat=len(J)):
                deg = sum(alphas) + sum(betas) + len(J)
                if max_degree is not None and deg > max_degree:
                    continue
                beginning = tuple(zip(B, alphas))
                end = tuple((J[k], J[k + 1], betas[k], betas[k + 1]) for k in range(0, len(J), 2))
                out.append(SSElement(beginning, end))
                if len(out) > limit:
                    raise ResourceLimit(f"M_{{{m},{n}}} has more than {limit} elements", reached=len(out))
    return sort_descending(out)


def enumerate_mprime(m: int, n: int, r, p: int, limit=DEFAULT_LIMIT) -> list:
    """All of M'_{m,n}(r), sorted descending."""
    r = tuple(r)
    if m > n or m < 1:
        return []
    if len(r) != n or any(ri < 1 for ri in r):
        raise NotInMPrime(f"type {r} must list n = {n} positive degrees")
    if p and r[m - 1] % p == 0:
        raise NotInMPrime(f"r_{m} = {r[m - 1]} is divisible by p = {p}")
    universe = set(range(1, n + 1))
    out = []
    for B in _even_subsets_complement(universe, m, universe):
        J = sorted(universe - set(B))
        beginning = tuple((i, r[i - 1]) for i in B)
        end = tuple((J[k], J[k + 1], r[J[k] - 1] - 1, r[J[k + 1] - 1] - 1) for k in range(0, len(J), 2))
        out.append(SSElement(beginning, end))
        if len(out) > limit:
            raise ResourceLimit(f"M'_{{{m},{n}}}{r} has more than {limit} elements", reached=len(out))
    return sort_descending(out)


def combination_value(terms, witness: Witness) -> GrassmannElement:
    """Evaluate ``sum c * u`` at a witness assignment."""
    field = Field(witness.p)
    unitary = next(iter(witness.assignment.values())).unitary
    total = GrassmannElement.zero(field, unitary)
    cache = {}
    for u, c in terms:
        total = total + evaluate_ss(u, witness.assignment, cache).scale(field(c))
    return total


def as_freepoly(u: SSElement, p: int, unitary=False) -> FreePoly:
    return ss_to_freepoly(u, Field(p), unitary)
