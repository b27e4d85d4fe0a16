"""One test per acceptance criterion; each prints a single pass/fail line."""

import pytest

from centralpoly import verify

from conftest import ACCEPTANCE_LINES

CRITERIA = [
    (1, "commutator identities in G0(6), p in {0,3,5}, 100 seeded trials",
     lambda: [verify.suite_commutator_identities(seed=0, trials=100, primes=(0, 3, 5), n=6)]),
    (2, "Grassmann structure laws (anticommuting odd parts, powers, g^3 = 0 at p=3)",
     lambda: [verify.suite_grassmann_structure(seed=0, trials=200)]),
    (3, "powers of w and v are the predicted blade multiples, n <= 4, N in {0,3}",
     lambda: [verify.suite_w_powers()]),
    (4, "normalization soundness on 500 random polynomials, 100 evaluations each",
     lambda: [verify.suite_normalization(seed=0, count=500, trials=100)]),
    (5, "M_{m,n} witnesses exhaustive for n <= 4, p=3",
     lambda: [verify.suite_m_witnesses(p=3, max_n=4, seed=0, random_probes=50)]),
    (6, "M'_{m,n}(r) witnesses exhaustive for n <= 3, r_i <= 4, p=3",
     lambda: [verify.suite_mprime_witnesses(p=3, max_n=3, max_r=4)]),
    (7, "generator verdicts match the expected classification, p=3",
     lambda: [verify.suite_generators(p=3)]),
    (8, "central kernel equals S+T(G0) (<= 4 vars, deg <= 6) and S1+T3 (unitary, <= 3 vars, deg <= 5), p=3",
     lambda: [verify.suite_theorems(p=3, max_vars=4, max_degree=6, unitary_vars=3, unitary_degree=5)]),
    (9, "Venkova order is a total order on the witness families, placement remark holds",
     lambda: [verify.suite_order(p=3, max_n=4, max_mprime_n=3, max_r=4)]),
]


@pytest.mark.parametrize("number,label,run", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, label, run):
    reports = run()
    ok = all(r.passed for r in reports)
    checks = sum(len(r.checks) for r in reports)
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {label} ({checks} checks)"
    ACCEPTANCE_LINES.append(line)
    print(line)
    if not ok:
        failed = [c.line() for r in reports for c in r.checks if not c.passed]
        pytest.fail("\n".join(failed[:20]))
