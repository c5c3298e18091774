"""Acceptance criteria, one test each.

Each test records a line ``CRITERION <n> PASS|FAIL <detail>``; the lines are
printed as they are produced and repeated in the pytest terminal summary (see
conftest.py). Run ``python tests/test_acceptance.py`` for just these lines.
"""

import random
import time

from suzree.field import FieldSpec, sqrt_char3
from suzree.matrix import Matrix, preserves_symplectic_form
from suzree.ree import Ree
from suzree.suzuki import Suzuki
from suzree.verify import bfs_closure, run_suite

from reference_matrices import g1_minus_square, g1_square

RESULTS: list[str] = []


def record(n, ok, detail):
    line = f"CRITERION {n} {'PASS' if ok else 'FAIL'} {detail}"
    RESULTS.append(line)
    print(line)
    return ok


def test_criterion_1_suzuki_weyl_cell_identity():
    groups = [Suzuki.from_q(q) for q in (2, 8, 32, 128)]
    for G in groups:
        G.torus_weyl(1)  # build field tables outside the timed region
    t0 = time.perf_counter()
    cases = failures = 0
    for G in groups:
        for e in G.field.nonzero():
            lhs, rhs = G.weyl_identity(e)
            cases += 1
            failures += lhs != rhs
    elapsed = time.perf_counter() - t0
    ok = cases == 166 and failures == 0 and elapsed < 1.0
    assert record(1, ok, f"cases={cases} failures={failures} time={elapsed:.3f}s (limit 1s)")


def test_criterion_2_suzuki_torus_cell_identity():
    cases = failures = corner_failures = 0
    for q in (2, 8, 32, 128):
        G = Suzuki.from_q(q)
        for e in G.field.nonzero():
            g1, lhs, rhs = G.torus_identity(e)
            cases += 1
            failures += lhs != rhs
            corner_failures += g1[0, 0] != e
    ok = cases == 166 and failures == 0 and corner_failures == 0
    assert record(2, ok, f"cases={cases} failures={failures} g1[0,0]!=eps: {corner_failures}")


def test_criterion_3_ree_cell_identities():
    groups = [Ree.from_q(q) for q in (3, 27, 243)]
    t0 = time.perf_counter()
    cases = failures = 0
    for R in groups:
        for lam in R.field.nonzero():
            for sign in (1, -1):
                lhs, rhs = R.weyl_identity(lam, sign)
                g1, lhs2, rhs2 = R.torus_identity(lam, sign)
                cases += 2
                failures += (lhs != rhs) + (lhs2 != rhs2) + (g1[0, 0] != sign * lam * lam)
    elapsed = time.perf_counter() - t0

    spots = [(groups[0], groups[0].field(1)), (groups[0], -groups[0].field(1))]
    rng = random.Random(2024)
    spots += [(groups[1], groups[1].field(rng.randrange(1, 27))) for _ in range(20)]
    display_failures = 0
    for R, lam in spots:
        for sign, ref in ((1, g1_square), (-1, g1_minus_square)):
            g1, _, _ = R.torus_identity(lam, sign)
            display_failures += g1 != Matrix.from_rows(R.field, ref(lam, R.theta))
    ok = cases == 4 * (2 + 26 + 242) and failures == 0 and display_failures == 0 and elapsed < 10
    assert record(3, ok, f"cases={cases} failures={failures} time={elapsed:.2f}s (limit 10s); "
                          f"g1 display mismatches={display_failures} over {2 * len(spots)} checks")


def test_criterion_4_full_factorization():
    details, ok = [], True
    for G, expected in ((Suzuki.from_q(2), 20), (Suzuki.from_q(8), 29120), (Ree.from_q(3), 1512)):
        t0 = time.perf_counter()
        (rep,) = run_suite(G, "bruhat", "exhaustive", workers=1)
        elapsed = time.perf_counter() - t0
        ok &= rep.cases == expected and rep.failures == 0
        if G.q == 8:
            ok &= elapsed < 30
        details.append(f"{G!r} cases={rep.cases} failures={rep.failures} time={elapsed:.2f}s")
    assert record(4, ok, "; ".join(details) + " (Sz(8) limit 30s)")


def test_criterion_5_sampled_factorization():
    t0 = time.perf_counter()
    details, ok = [], True
    for G in (Suzuki.from_q(32), Suzuki.from_q(128), Ree.from_q(27)):
        (rep,) = run_suite(G, "bruhat", "sample", 10_000, seed="acceptance", workers=1)
        ok &= rep.cases == 10_000 and rep.failures == 0
        details.append(f"{G!r} cases={rep.cases} failures={rep.failures}")
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 60
    assert record(5, ok, "; ".join(details) + f" total time={elapsed:.2f}s (limit 60s)")


def _formula(G):
    k = 2 if isinstance(G, Suzuki) else 3
    q = G.q
    return q ** k * (q - 1) * (q ** k + 1)


def test_criterion_6_order_consistency():
    details, ok = [], True
    for G in (Suzuki.from_q(2), Suzuki.from_q(8), Ree.from_q(3)):
        distinct = set(G.enumerate_group())
        gens = G.generators()
        closure = bfs_closure(gens, limit=2 * _formula(G))
        ok &= len(gens) == 3 and len(distinct) == _formula(G) == len(closure) and closure == distinct
        details.append(f"{G!r} enum={len(distinct)} formula={_formula(G)} bfs={len(closure)}")
    assert record(6, ok, "; ".join(details))


def test_criterion_7_bruhat_uniqueness():
    details, ok = [], True
    for G in (Suzuki.from_q(2), Suzuki.from_q(8), Ree.from_q(3)):
        elems = list(G.enumerate_group())
        dups = len(elems) - len(set(elems))
        ok &= dups == 0
        details.append(f"{G!r} enumerated={len(elems)} duplicates={dups}")
    assert record(7, ok, "; ".join(details))


def test_criterion_8_structural_checks():
    R = Ree.from_q(27)
    minus_antidiag = Matrix(R.field, 7, [2 if i + j == 6 else 0 for i in range(7) for j in range(7)])
    w_ok = R.g2.longest_weyl == minus_antidiag
    th = R.theta
    h_bad = sum(
        R.g2.torus_alpha_beta(e, e ** (3 * th)) != Matrix.diagonal(
            [e, e ** (3 * th - 1), e ** (2 - 3 * th), R.field.one, e ** (3 * th - 2),
             e ** (1 - 3 * th), e ** -1])
        for e in R.field.nonzero())
    form_cases = form_bad = 0
    for q in (2, 8):
        for g in Suzuki.from_q(q).enumerate_group():
            form_cases += 1
            form_bad += not preserves_symplectic_form(g)
    ok = w_ok and h_bad == 0 and form_bad == 0
    assert record(8, ok, f"(w_a w_b)^3 == -antidiag: {w_ok}; h(eps) mismatches over GF(27)*: {h_bad}; "
                         f"symplectic failures: {form_bad}/{form_cases}")


def test_criterion_9_field_properties():
    theta_bad = fermat_bad = square_bad = cases = 0
    for q in (2, 8, 32, 128, 3, 27, 243):
        f = FieldSpec.for_order(q)
        squares = {a * a for a in f.nonzero()}
        for a in f.elements():
            cases += 1
            theta_bad += a.theta_unpow().theta_pow() != a or a.theta_pow().theta_unpow() != a
            fermat_bad += a ** q != a
            if f.p == 3 and a:
                lam, s = sqrt_char3(a)
                square_bad += ((a in squares) == (-a in squares)) or s * lam * lam != a
    ok = theta_bad == fermat_bad == square_bad == 0
    assert record(9, ok, f"elements={cases} theta inverse failures={theta_bad} "
                         f"square/minus-square failures={square_bad} a^q!=a: {fermat_bad}")


if __name__ == "__main__":
    import sys
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
