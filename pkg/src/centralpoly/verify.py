"""Property suites backing ``centralpoly verify`` and the acceptance tests.

Every suite is exact and seeded. A suite returns a :class:`Report` holding
one :class:`CheckResult` per individual statement checked.
"""

from __future__ import annotations

import inspect
import itertools
import random
from dataclasses import dataclass, field as dc_field
from math import comb, factorial

import numpy as np

from .canon import SSElement, classify, normalize, venkova_compare, venkova_key
from .exterior import DenseGrassmann, GrassmannElement, blade_indices, random_element, random_even_odd
from .field import Field
from .freealg import FreePoly, commutator, dense_is_zero, evaluate_dense
from .generic import CENTRAL, IDENTITY, find_certificate, generic_image, literal_generic_values
from .tspace import builtin_generators, central_echelon, default_block_bound, span_at_type, w_poly
from .witness import (
    build_v, build_w, combination_value, enumerate_m, enumerate_mprime, m_fact_witness,
    mprime_expected_odd_part, mprime_witness, top_blade_v, top_blade_w,
)

PRIMES = (0, 3, 5)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class Report:
    title: str
    checks: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, passed, detail=""):
        self.checks.append(CheckResult(name, bool(passed), detail))

    def lines(self):
        yield f"== {self.title}: {'PASS' if self.passed else 'FAIL'} ({sum(c.passed for c in self.checks)}/{len(self.checks)})"
        for c in self.checks:
            yield "  " + c.line()

    def as_dict(self) -> dict:
        return {"title": self.title, "passed": self.passed,
                "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks]}


def _x(i, field, unitary=False):
    return FreePoly.var(i, field, unitary)


def _dense_vanishes(f: FreePoly, n: int, unitary: bool, trials: int, seed: int) -> bool:
    p = f.field.p
    eng = DenseGrassmann(n, unitary, p)
    rng = np.random.default_rng(seed)
    values = {i: eng.random(rng, trials) for i in sorted(f.variables())}
    if not values:
        return not f
    return dense_is_zero(evaluate_dense(f, eng, values), p)


# commutator identities modulo T^(3) ------------------------------------------

def commutator_identities(f_field: Field):
    """``(label, difference)`` pairs whose difference must vanish on G0."""
    x = lambda i: _x(i, f_field)  # noqa: E731
    u, v, w, t = x(1), x(2), x(3), x(4)
    out = [
        ("[u,vw] = [u,v]w + v[u,w]", commutator(u, v * w) - (commutator(u, v) * w + v * commutator(u, w))),
        ("[u,vw] = [u,v]w + [u,w]v + [v,[u,w]]",
         commutator(u, v * w) - (commutator(u, v) * w + commutator(u, w) * v + commutator(v, commutator(u, w)))),
    ]
    for n in range(1, 5):
        vs = [x(i) for i in range(2, n + 2)]
        prod = vs[0]
        for a in vs[1:]:
            prod = prod * a
        rhs = FreePoly.zero(f_field)
        for i in range(n):
            term = commutator(u, vs[i])
            for j in range(n):
                if j != i:
                    term = term * vs[j]
            rhs = rhs + term
        out.append((f"[u, v1...v{n}] expansion", commutator(u, prod) - rhs))
    out.append(("[u,v][w,t] = -[u,w][v,t]", commutator(u, v) * commutator(w, t) + commutator(u, w) * commutator(v, t)))
    out.append(("[u,v][u,w] = 0", commutator(u, v) * commutator(u, w)))
    out.append(("[u,v]uw = [u,v]wu", commutator(u, v) * u * w - commutator(u, v) * w * u))
    for n in range(2, 5):
        lhs = u ** n * v ** n
        rhs = (u * v) ** n + commutator(u, v).scale(comb(n, 2)) * u ** (n - 1) * v ** (n - 1)
        out.append((f"x1^{n} x2^{n} = (x1 x2)^{n} + C({n},2)[x1,x2]x1^{n - 1}x2^{n - 1}", lhs - rhs))
    return out


def suite_commutator_identities(seed=0, trials=100, primes=PRIMES, n=6) -> Report:
    rep = Report("commutator identities modulo T3 vanish on G0(6)")
    for p in primes:
        for k, (label, diff) in enumerate(commutator_identities(Field(p))):
            ok = _dense_vanishes(diff, n, False, trials, seed + 1000 * p + k)
            rep.add(f"p={p}: {label}", ok, f"{trials} assignments, seed {seed + 1000 * p + k}")
    return rep


# Grassmann structure ---------------------------------------------------------

def suite_grassmann_structure(seed=0, trials=200, primes=PRIMES) -> Report:
    rep = Report("even/odd structure of G0")
    rng = random.Random(seed)
    for p in primes:
        F = Field(p)
        ok = True
        for _ in range(trials):
            _, h = random_even_odd(rng, 6, F)
            _, u = random_even_odd(rng, 6, F)
            ok &= h * u == -(u * h)
        rep.add(f"p={p}: odd elements anticommute", ok, f"{trials} pairs in G0(6)")
        ok = True
        for _ in range(trials // 4):
            c, h = random_even_odd(rng, 6, F)
            g = c + h
            for m in range(1, 6):
                rhs = c ** m + (h.scale(F(m)) if m == 1 else (c ** (m - 1) * h).scale(F(m)))
                ok &= g ** m == rhs
        rep.add(f"p={p}: (c+h)^m = c^m + m c^(m-1) h, m <= 5", ok, f"{trials // 4} elements")
        ok = True
        for _ in range(trials // 4):
            c1, h1 = random_even_odd(rng, 6, F)
            c2, h2 = random_even_odd(rng, 6, F)
            g1, g2 = c1 + h1, c2 + h2
            for m1, m2 in itertools.product(range(4), repeat=2):
                lhs = g1.commutator(g2)
                rhs = h1 * h2
                if m1:
                    lhs, rhs = lhs * g1 ** m1, rhs * c1 ** m1
                if m2:
                    lhs, rhs = lhs * g2 ** m2, rhs * c2 ** m2
                ok &= lhs == rhs.scale(F(2))
        rep.add(f"p={p}: [g1,g2] g1^m1 g2^m2 = 2 c1^m1 c2^m2 h1 h2", ok, f"{trials // 4} pairs, m1, m2 <= 3")
        ok = True
        for _ in range(trials // 4):
            k = rng.randint(1, 4)
            u = random_element(rng, 6, F, nterms=k)
            ok &= not u ** (len(u.terms) + 1)
        rep.add(f"p={p}: u^(k+1) = 0 for u with k <= 4 blade terms", ok, f"{trials // 4} elements")
    F3 = Field(3)
    ok = all(not random_element(rng, 4, F3) ** 3 for _ in range(trials))
    rep.add("p=3: g^3 = 0 in G0(4)", ok, f"{trials} dense random elements")
    g = literal_generic_values([1], 4, F3, False)[1]
    rep.add("p=3: generic element of G0(4) cubes to 0", not g ** 3, "15 independent coefficients")
    return rep


# powers of w and v ---------------------------------------------------------

def suite_w_powers(primes=PRIMES) -> Report:
    rep = Report("powers of sums of disjoint generator pairs")
    for p in primes:
        F = Field(p)
        for n in range(1, 5):
            for N in (0, 3):
                w, v = build_w(N, n, F), build_v(N, n, F)
                sw = set(range(2 * N + 1, 2 * N + 2 * n + 1))
                sv = sw | {2 * N + 2 * n + 1}
                t = GrassmannElement({top_blade_w(N, n): factorial(n)}, F)
                tv = GrassmannElement({top_blade_v(N, n): factorial(n + 1)}, F)
                ok = w ** n == t
                ok &= all(set(blade_indices(b)) < sw for m in range(1, n) for b in (w ** m).terms)
                ok &= v ** (n + 1) == tv
                ok &= all(set(blade_indices(b)) < sv for m in range(1, n + 1) for b in (v ** m).terms)
                vanish = p and factorial(n) % p == 0
                rep.add(f"p={p}, n={n}, N={N}", ok, "n! vanishes, w^n = 0" if vanish else "")
    return rep


# normalization soundness -----------------------------------------------------

def random_poly(rng: random.Random, field: Field, unitary=False, max_vars=4, max_degree=6, max_terms=5):
    nv = rng.randint(1, max_vars)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        w = tuple(rng.randint(1, nv) for _ in range(rng.randint(1, max_degree)))
        terms[w] = terms.get(w, 0) + rng.choice([-3, -2, -1, 1, 2, 3])
    if unitary and rng.random() < 0.5:
        terms[()] = rng.randint(-3, 3)
    return FreePoly(terms, field, unitary)


def suite_normalization(seed=0, count=500, trials=100, primes=PRIMES, n=6) -> Report:
    rep = Report("normal forms agree with their input on G0(6) and G(6)")
    engines = {(p, u): DenseGrassmann(n, u, p) for p in primes for u in (False, True)}
    for p in primes:
        F = Field(p)
        for unitary in (False, True):
            rng = random.Random(seed * 7919 + p * 2 + unitary)
            nrng = np.random.default_rng(seed * 7919 + p * 2 + unitary)
            eng = engines[(p, unitary)]
            bad, invariant_bad = [], 0
            for _ in range(count):
                f = random_poly(rng, F, unitary)
                nf = normalize(f)
                for u in nf.terms:
                    try:
                        SSElement(u.beginning, u.end)
                        classify(u, p, unitary)
                    except ValueError:
                        invariant_bad += 1
                diff = f - nf.to_freepoly()
                if diff:
                    values = {i: eng.random(nrng, trials) for i in range(1, 5)}
                    if not dense_is_zero(evaluate_dense(diff, eng, values), p):
                        bad.append(str(f))
            alg = "G" if unitary else "G0"
            rep.add(f"p={p}: {alg}({n}) evaluations", not bad,
                    f"{count} polynomials x {trials} assignments, seed {seed}" + (f"; first failure {bad[0]}" if bad else ""))
            rep.add(f"p={p}, {'unitary' if unitary else 'nonunitary'}: SS invariants of output terms",
                    not invariant_bad, f"{invariant_bad} violations")
    return rep


# witnesses -------------------------------------------------------------------

def _is_top_multiple(g: GrassmannElement, z: int) -> bool:
    return bool(g) and set(g.terms) == {(1 << z) - 1}


def suite_m_witnesses(p=3, max_n=4, seed=0, random_probes=50) -> Report:
    rep = Report(f"separating substitutions for M families (p={p}, n <= {max_n})")
    rng = random.Random(seed)
    F = Field(p)
    combos_ok = True
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            fam = enumerate_m(m, n, p, max_degree=None if p else 2 * n)
            top_ok = small_ok = comm_ok = True
            pairs = 0
            for k, u in enumerate(fam):
                wit = m_fact_witness(u, m, n, p)
                z = 2 * (u.degree - u.lend) - 1
                top_ok &= wit.generators == z and _is_top_multiple(wit.value, z)
                cache = {}
                for v in fam[k + 1:]:
                    pairs += 1
                    small_ok &= not wit.evaluate(v, cache)
                if p > 2:
                    gm = wit.assignment[m]
                    for _ in range(random_probes):
                        g = random_element(rng, z + 2, F, nterms=6)
                        comm_ok &= not (gm.commutator(g) * gm ** (p - 1))
                # a random combination led by u is separated by u's witness
                tail = [v for v in fam[k + 1:] if rng.random() < 0.3]
                terms = [(u, rng.randint(1, max(1, (p or 5) - 1)))] + [(v, rng.randint(-3, 3)) for v in tail]
                val = combination_value(terms, wit)
                combos_ok &= bool(val) and val == wit.value.scale(F(terms[0][1]))
            label = f"M_{{{m},{n}}} ({len(fam)} elements)"
            rep.add(f"{label}: u(g) is a nonzero multiple of e1...ez, z = 2(deg - lend) - 1", top_ok)
            rep.add(f"{label}: smaller members vanish", small_ok, f"{pairs} ordered pairs")
            if p > 2:
                rep.add(f"{label}: [g_m, g] g_m^(p-1) = 0", comm_ok, f"{random_probes} random g per element")
    rep.add("combinations evaluate to their leading term at its witness", combos_ok, f"seed {seed}")
    return rep


def suite_mprime_witnesses(p=3, max_n=3, max_r=4, seed=0) -> Report:
    rep = Report(f"separating substitutions for M' families (p={p}, n <= {max_n}, r_i <= {max_r})")
    rng = random.Random(seed)
    F = Field(p)
    families = elements = pairs = 0
    top_ok = small_ok = combo_ok = True
    for n in range(1, max_n + 1):
        for r in itertools.product(range(1, max_r + 1), repeat=n):
            for m in range(1, n + 1):
                if p and r[m - 1] % p == 0:
                    continue
                fam = enumerate_mprime(m, n, r, p)
                families += 1
                for k, u in enumerate(fam):
                    elements += 1
                    wit = mprime_witness(u, m, n, r, p)
                    z = 2 * u.lend + 1
                    odd = wit.value.odd_part()
                    expected = mprime_expected_odd_part(u, m, r, p)
                    top_ok &= wit.generators == z and bool(odd) and odd == expected and _is_top_multiple(odd, z)
                    for v in fam[k + 1:]:
                        pairs += 1
                        small_ok &= not wit.evaluate(v)
                    tail = [v for v in fam[k + 1:] if rng.random() < 0.5]
                    terms = [(u, rng.randint(1, max(1, (p or 5) - 1)))] + [(v, rng.randint(-3, 3)) for v in tail]
                    val = combination_value(terms, wit)
                    probe = GrassmannElement.generator(z + 1, F, True)
                    combo_ok &= bool(val.commutator(probe))
    rep.add("odd part of u(g) is r_m e_m 2^s prod e_j e_j', z = 2 lend + 1", top_ok,
            f"{elements} elements in {families} families")
    rep.add("smaller members vanish", small_ok, f"{pairs} ordered pairs")
    rep.add("nonzero combinations fail to commute with a fresh generator", combo_ok, f"seed {seed}")
    return rep


def _placement_reason(u, v):
    """Index decided by the placement rule, or ``None`` if an earlier rule decides."""
    if u.degree != v.degree or u.lend != v.lend or u.degrees() != v.degrees():
        return None
    top = max(max(u.degrees()), max(v.degrees()))
    for j in range(1, top + 1):
        if u.placement(j) != v.placement(j):
            return j
    return None


def suite_order(p=3, max_n=4, max_mprime_n=3, max_r=4) -> Report:
    rep = Report("Venkova order on the witness families")
    fams = []
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            fams.append((f"M_{{{m},{n}}}", enumerate_m(m, n, p, max_degree=None if p else 2 * n), n))
    for n in range(1, max_mprime_n + 1):
        for r in itertools.product(range(1, max_r + 1), repeat=n):
            for m in range(1, n + 1):
                if not (p and r[m - 1] % p == 0):
                    fams.append((f"M'_{{{m},{n}}}{r}", enumerate_mprime(m, n, r, p), n))
    anti = total = trans = remark = True
    pairs = placement_pairs = 0
    for _, fam, n in fams:
        for i, u in enumerate(fam):
            for j, v in enumerate(fam):
                c = venkova_compare(u, v)
                pairs += 1
                anti &= c == -venkova_compare(v, u)
                total &= (c == 0) == (i == j)
                # the family is sorted descending; every pair must agree with it
                trans &= c == (0 if i == j else (1 if i < j else -1))
                if c:
                    trans &= (c > 0) == (venkova_key(u, n) > venkova_key(v, n))
                if c > 0:
                    jj = _placement_reason(u, v)
                    if jj is not None:
                        placement_pairs += 1
                        remark &= any(u.placement(k) == "b" and v.placement(k) == "e"
                                      for k in range(jj + 1, n + 1))
    rep.add("antisymmetry", anti, f"{pairs} ordered pairs in {len(fams)} families")
    rep.add("totality", total)
    rep.add("transitivity (agreement with one linear order)", trans)
    rep.add("placement rule: a later variable sits in the beginning of the larger and the end of the smaller",
            remark, f"{placement_pairs} pairs decided by placement")
    return rep


# generators and theorems ---------------------------------------------------

def generator_expectations(p=3):
    """``(label, polynomial, expected verdict)`` for the central-polynomial generators."""
    F = Field(p)
    x = lambda i, u=False: _x(i, F, u)  # noqa: E731
    rows = [
        ("[x1,x2]", commutator(x(1), x(2)), CENTRAL),
        ("[x1,x2][x3,x4]", commutator(x(1), x(2)) * commutator(x(3), x(4)), CENTRAL),
    ]
    for n in (1, 2):
        rows.append((f"w{n}", w_poly(n, p), CENTRAL))
    rows.append((f"x2*x1^{p}", x(2) * x(1) ** p, IDENTITY))
    rows.append((f"x1^{p}", x(1) ** p, IDENTITY))
    rows.append((f"x1^{p} (unitary)", x(1, True) ** p, CENTRAL))
    for n in (1, 2):
        rows.append((f"x{2 * n + 1}^{p} w{n} (unitary)", x(2 * n + 1, True) ** p * w_poly(n, p, unitary=True), CENTRAL))
    return rows


def suite_generators(p=3) -> Report:
    rep = Report(f"verdicts on the central-polynomial generators (p={p})")
    for label, f, expected in generator_expectations(p):
        img = generic_image(f)
        got = img.verdict
        detail = got
        ok = got == expected
        if got != IDENTITY:
            # not an identity: exhibit a concrete nonzero value
            cert = find_certificate(f, central=False, image=img)
            ok &= cert is not None and bool(cert.value)
            if cert is not None:
                detail += f"; nonzero value on {cert.generators} generators"
        rep.add(label, ok, detail)
    return rep


def compositions(total, parts):
    for cut in itertools.combinations(range(1, total), parts - 1):
        b = (0,) + cut + (total,)
        yield tuple(b[i + 1] - b[i] for i in range(parts))


def suite_theorems(p=3, max_vars=4, max_degree=6, unitary_vars=3, unitary_degree=5) -> Report:
    rep = Report(f"central polynomials by kernel vs generated T-spaces (p={p})")
    for unitary, nv, nd in ((False, max_vars, max_degree), (True, unitary_vars, unitary_degree)):
        bad, count = [], 0
        for D in range(1, nd + 1):
            bound = default_block_bound(D, p)
            if unitary:
                gens = builtin_generators("S1", p, bound) + builtin_generators("T3", p, unitary=True)
            else:
                gens = builtin_generators("S", p, bound) + builtin_generators("TG0", p)
            for k in range(1, min(nv, D) + 1):
                for t in compositions(D, k):
                    count += 1
                    span = span_at_type(gens, t)
                    _, kernel = central_echelon(t, p, unitary)
                    if span.echelon != kernel:
                        bad.append(f"{t}: span {span.dimension}, kernel {kernel.rank}")
        name = "S1 + T3 = central kernel (unitary)" if unitary else "S + TG0 = central kernel (nonunitary)"
        rep.add(name, not bad, f"{count} types, <= {nv} variables, degree <= {nd}" + (f"; {bad[:3]}" if bad else ""))
    return rep


SUITES = {
    "lemmas": (suite_commutator_identities, suite_grassmann_structure, suite_w_powers),
    "normalize": (suite_normalization,),
    "witnesses": (suite_m_witnesses, suite_mprime_witnesses, suite_order),
    "theorems": (suite_generators, suite_theorems),
}


def run_suite(name: str, **kwargs) -> list:
    names = list(SUITES) if name == "all" else [name]
    reports = []
    for n in names:
        for fn in SUITES[n]:
            reports.append(fn(**{k: v for k, v in kwargs.items() if k in inspect.signature(fn).parameters}))
    return reports
