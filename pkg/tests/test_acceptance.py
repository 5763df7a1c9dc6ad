"""Acceptance gate: every criterion exact, one pass/fail line printed each.

Run with `pytest tests/test_acceptance.py -s` to see the lines as they pass.
"""
import random
from fractions import Fraction

import idealsat as s
from idealsat import verify

from helpers import (
    CYCLE5,
    TRIANGLE,
    P,
    bounded_monomials,
    random_ideal,
    random_monomial,
    random_saturated_prime_intersection,
)


def report(num, name, ok):
    print(f"ACCEPTANCE {num} ({name}): {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} ({name}) failed"


def test_criterion_1_cycle_power():
    ideal = P(CYCLE5) ** 5
    res = s.saturate(ideal)
    prof = s.quotient_profile(ideal)
    ok = (res.sat_number == 2
          and prof.sigma >= 4
          and prof.sigma == verify.CYCLE5_POWER5_SIGMA)
    report(1, "five-cycle fifth power: sat 2, sigma >= 4", ok)


def test_criterion_2_four_prime_intersection():
    n = 4
    primes = [(1, 2), (2, 3), (2, 4), (3, 4)]
    pres = s.IntersectionPresentation(
        n, tuple((frozenset(F), 1) for F in primes) + ((frozenset(range(1, n + 1)), 5),))
    capped = pres.instantiate()
    chain = s.saturate(capped).sat_number
    closed = s.sat_from_presentation(pres)
    ok = chain == 3 and closed == 3
    report(2, "four-prime intersection capped at degree 5: sat 3 both routes", ok)


def test_criterion_3_triangle_table_and_fit():
    table = s.sat_table(P(TRIANGLE), 8)
    fit = s.quasilinear_fit(table)
    ok = (table.values == (0, 1, 1, 2, 2, 3, 3, 4)
          and fit is not None
          and fit.period == 2
          and fit.lines[0] == (Fraction(1, 2), Fraction(0))
          and fit.lines[1] == (Fraction(1, 2), Fraction(-1, 2)))
    report(3, "triangle power table 0,1,1,2,2,3,3,4 with period-2 fit", ok)


def test_criterion_4_principal_closure_sweep():
    rows = verify.principal_closure_sweep(max_n=4, max_deg=3, max_k=4)
    ok = all(r["sat"] == r["k"] and r["template_matches"] for r in rows)
    assert len(rows) == 56  # 14 seed monomials across n <= 4, 4 powers each
    report(4, "principal closure sweep: sat(B^k) = k and template equality", ok)


def test_criterion_5_veronese_sweep():
    rows = verify.veronese_sweep(max_n=5, max_k=5)
    ok = all(r["expected"] == r["computed"] for r in rows)
    assert len(rows) == 75  # 15 (d, n) pairs, 5 powers each
    report(5, "Veronese formula vs colon chain, d <= n <= 5, k <= 5", ok)


def test_criterion_6_socle_sweep():
    checks = verify.socle_sweep(max_n=4, max_d=5, max_k=3)
    ok = bool(checks) and all(c.ok for c in checks)
    report(6, "extremal closure socle identity, n <= 4, d <= 5, k <= 3", ok)


def test_criterion_7_presentation_roundtrip():
    battery = verify.presentation_battery()
    ok = True
    for name, ideal in battery:
        pres = s.intersection_presentation(ideal)  # raises on reconstruction mismatch
        ok = ok and pres.instantiate() == ideal
    for n in (3, 4):
        capped = verify.capped_degree_ideal(3, 2, n)
        pres = s.intersection_presentation(capped)
        full = frozenset(range(1, n + 1))
        expected = tuple(sorted(
            [(frozenset(set(range(1, n + 1)) - {i}), 1) for i in range(1, n + 1)]
            + [(full, 3)],
            key=lambda fa: (len(fa[0]), sorted(fa[0]))))
        ok = ok and pres.components == expected
        ok = ok and s.sat_from_presentation(pres) == 1
        ok = ok and s.saturate(capped).sat_number == 1
    report(7, "presentation round-trip battery incl. capped degree-3 ideals", ok)


def test_criterion_8a_profile_bounds():
    rng = random.Random(2024)
    ok = True
    for _ in range(200):
        I = random_ideal(rng, max_n=4, max_gens=6, max_deg=5)
        res = s.saturate(I)
        prof = s.quotient_profile(I)
        ok = ok and prof.gamma == res.sat_number
        ok = ok and res.sat_number <= prof.sigma
        if not prof.is_empty:
            ok = ok and prof.gamma <= prof.sigma and prof.gamma >= 1
    report("8a", "gamma = sat <= sigma over 200 random ideals", ok)


def test_criterion_8b_truncation_closed_form():
    rng = random.Random(2025)
    ok = True
    for _ in range(50):
        Q, n = random_saturated_prime_intersection(rng)
        assert Q.colon_maximal() == Q
        d = rng.randint(1, Q.alpha() + 3)
        closed = s.sat_of_truncation(Q, d)
        chain = s.saturate(Q.intersect(s.maximal_ideal(n) ** d)).sat_number
        ok = ok and closed == chain
    report("8b", "truncation closed form vs colon chain, 50 prime intersections", ok)


def test_criterion_8c_order_vs_closure():
    ok = True
    for n in range(1, 5):
        for d in range(1, 5):
            for k in range(1, 4):
                mons = bounded_monomials(n, d, k)
                for u in mons:
                    closure = s.borel_closure(s.BorelSpec(k, (u,), n))
                    for v in mons:
                        ok = ok and s.precedes(v, u, k) == closure.contains(v)
    report("8c", "index order matches closure membership, exhaustive small range", ok)


def test_criterion_8d_bound_and_power_preservation():
    ok = True
    for name, ideal in verify.presentation_battery():
        for k in (2, 3):
            ok = ok and s.is_polymatroidal(ideal ** k).ok
        for k in (1, 2, 3):
            restricted = s.restrict_bounded(ideal, k)
            if not restricted.is_zero:
                ok = ok and s.is_polymatroidal(restricted).ok
    report("8d", "powers and bounded restrictions stay polymatroidal", ok)


def test_criterion_8e_membership_coherence():
    rng = random.Random(2026)
    ok = True
    for _ in range(500):
        n = rng.randint(1, 4)
        I = random_ideal(rng, n=n, max_gens=4, max_deg=4)
        J = random_ideal(rng, n=n, max_gens=4, max_deg=4)
        w = random_monomial(rng, n, 6)
        u = random_monomial(rng, n, 3)
        ok = ok and I.intersect(J).contains(w) == (I.contains(w) and J.contains(w))
        ok = ok and I.colon(u).contains(w) == I.contains(u * w)
        gu, gv = rng.choice(I.gens), rng.choice(J.gens)
        ok = ok and (I * J).contains(gu * gv)
    report("8e", "membership coherence over 500 random ideal/monomial draws", ok)


def test_criterion_9_scaling_law():
    n = 3
    transversal = s.prime_power((1, 2), 1, n) * s.prime_power((2, 3), 1, n)
    good = s.check_scaling_law(transversal, 4)
    bad = s.check_scaling_law(P(TRIANGLE), 4)
    ok = (good.holds and good.base_sat == 1
          and not bad.holds and bad.first_violation == 2)
    report(9, "scaling law holds for the transversal, fails for the triangle at k=2", ok)


def test_verification_suite_green():
    results = verify.run_checks()
    for r in results:
        print(f"{r.status} {r.name}")
    assert all(r.ok for r in results)
