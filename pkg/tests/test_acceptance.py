"""Acceptance criteria, one test each, with the stated tolerances and time limits.

Each test prints a single ``[PASS]``/``[FAIL]`` line; the lines are also
collected and repeated in the pytest terminal summary. Run standalone with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import json
import time

import pytest

from hyperjac.cli import mask_timings, run
from hyperjac.families import Abhyankar, EvenTheorem, FamilySpec, MoriOdd, build_family
from hyperjac.ffpoly import Poly, PrimeField, is_prime, is_separable
from hyperjac.galois import (
    BivarPoly,
    bivariate_discriminant,
    disc_square_in_function_field,
    morse_check,
    sample_specializations,
)
from hyperjac.reptheory import check_property_b, verify_tail_inequality, wagner_min_dim
from hyperjac.rng import task_stream
from hyperjac.supersing import (
    Effort,
    HyperCurve,
    Verdict,
    count_points,
    hasse_witt,
    l_polynomial,
    newton_slopes,
    p_rank,
    refute_supersingular,
)

RESULTS: list[str] = []

EVEN_FAMILY = "x^10-x+z"
ABHYANKAR = "x^10 - x*z^7 + 1"


def record(n: int, ok: bool, elapsed: float, limit: float, detail: str) -> None:
    ok = ok and elapsed < limit
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n:>2}: {detail} ({elapsed:.3f}s, limit {limit:g}s)"
    RESULTS.append(line)
    print(line)
    assert ok, line


def random_squarefree(stream, p: int, deg: int) -> Poly:
    F = PrimeField(p)
    while True:
        cs = [stream.below(p) for _ in range(deg)] + [1 + stream.below(p - 1)]
        f = Poly(F, cs)
        if is_separable(f):
            return f


# -- 1 ----------------------------------------------------------------------------


def test_criterion_01_property_b_and_tail():
    t0 = time.perf_counter()
    reports = [check_property_b(n) for n in range(10, 1001, 2)]
    tail = verify_tail_inequality(20, 120)
    elapsed = time.perf_counter() - t0
    bad = [r.n for r in reports if not r.verdict or not r.audit]
    ok = not bad and len(reports) == 496 and all(h for _, h in tail) and len(tail) == 101
    record(1, ok, elapsed, 1.0,
           f"property (b) true for {len(reports) - len(bad)}/496 even n in [10,1000]; "
           f"tail inequality true for {sum(h for _, h in tail)}/101 n in [20,120]")


# -- 2 ----------------------------------------------------------------------------


def test_criterion_02_wagner_bound():
    t0 = time.perf_counter()
    got = (wagner_min_dim(10), wagner_min_dim(16), wagner_min_dim(14))
    elapsed = time.perf_counter() - t0
    record(2, got == (8, 128, 32), elapsed, 1e-3, f"wagner_min_dim(10,16,14) = {got}")


# -- 3 ----------------------------------------------------------------------------


def test_criterion_03_morse_iff():
    t0 = time.perf_counter()
    total = agree = 0
    for n in range(4, 15, 2):
        for p in range(3, 32):
            if not is_prime(p) or n % p == 0:
                continue
            F = PrimeField(p)
            total += 1
            agree += morse_check(Poly.monomial(F, n) - Poly.x(F)) == (n * (n - 1) % p != 0)
    elapsed = time.perf_counter() - t0
    record(3, agree == total and total > 0, elapsed, 5.0, f"Morse iff agrees in {agree}/{total} cases")


# -- 4 ----------------------------------------------------------------------------

C4_SEEDS = {11: 11, 13: 13, 17: 17}


def criterion4_reports() -> list[str]:
    out = []
    for p, seed in C4_SEEDS.items():
        _, lines = run(["galois", "--p", str(p), "--poly", EVEN_FAMILY, "--budget", "500", "--seed", str(seed)])
        out.extend(lines)
    return out


def test_criterion_04_galois_certification():
    t0 = time.perf_counter()
    reports = [json.loads(x) for x in criterion4_reports()]
    elapsed = time.perf_counter() - t0
    verdicts = {d["p"]: d["verdict"] for d in reports}
    n_sn = sum(v == "SnCertified" for v in verdicts.values())
    record(4, n_sn >= 2, elapsed, 10.0, f"x^10-x+z budget 500: {verdicts}, SnCertified for {n_sn}/3")


# -- 5 ----------------------------------------------------------------------------


def criterion5_evidence(seed: int = 0) -> dict:
    F = build_family_abhyankar()
    D = bivariate_discriminant(F)
    records = sample_specializations(F, 2000, seed)
    sf = [r for r in records if r.squarefree]
    by_field: dict[int, list[int]] = {}
    for r in sf:
        by_field.setdefault(r.field_degree, [0, 0])[0 if r.outcome.is_even else 1] += 1
    return {
        "disc": str(D),
        "disc_square": disc_square_in_function_field(D),
        "samples": len(records),
        "squarefree": len(sf),
        "odd": sum(not r.outcome.is_even for r in sf),
        "even_odd_by_field_degree": {str(k): v for k, v in sorted(by_field.items())},
        "first_odd": next((str(r.outcome) for r in sf if not r.outcome.is_even), None),
    }


def build_family_abhyankar() -> BivarPoly:
    return build_family(FamilySpec(Abhyankar(3, 7), PrimeField(3)))


def test_criterion_05_abhyankar_alternating():
    t0 = time.perf_counter()
    ev = criterion5_evidence()
    elapsed = time.perf_counter() - t0
    ok = ev["disc_square"] and ev["odd"] == 0
    record(5, ok, elapsed, 10.0,
           f"{ABHYANKAR} over F_3, budget 2000: disc_x = {ev['disc']}, square in F_3(z): {ev['disc_square']}; "
           f"odd cycle types {ev['odd']}/{ev['squarefree']} (even/odd by field degree {ev['even_odd_by_field_degree']})")


# -- 6 ----------------------------------------------------------------------------

C6_FAMILIES = [EvenTheorem(4), MoriOdd(4)]
C6_BUDGET = 200


def criterion6_records():
    out = []
    for p in (7, 11, 13):
        for kind in C6_FAMILIES:
            F = build_family(FamilySpec(kind, PrimeField(p)))
            for r in sample_specializations(F, C6_BUDGET, p):
                if r.squarefree:
                    out.append((p, str(kind), r))
    return out


def test_criterion_06_stickelberger():
    t0 = time.perf_counter()
    recs = criterion6_records()
    agree = sum(r.outcome.is_even == r.disc_square for _, _, r in recs)
    distinct = len({(p, k, r.field_degree, r.z0) for p, k, r in recs})
    elapsed = time.perf_counter() - t0
    record(6, agree == len(recs) and distinct >= 500, elapsed, 10.0,
           f"parity matches disc square class in {agree}/{len(recs)} squarefree specializations "
           f"({distinct} distinct) over p in {{7,11,13}}")


# -- 7 ----------------------------------------------------------------------------


def test_criterion_07_supersingularity_oracles():
    t0 = time.perf_counter()
    c3 = HyperCurve(Poly(PrimeField(3), [0, -1, 0, 1]))
    e3 = refute_supersingular(c3, Effort.FULL_L)
    c5 = HyperCurve(Poly(PrimeField(5), [1, 1, 0, 1]))
    e5 = refute_supersingular(c5, Effort.FULL_L)
    elapsed = time.perf_counter() - t0
    half = newton_slopes([1, 0, 3], 3)
    ok = (
        e3.l_poly == [1, 0, 3] and e3.slopes == half == [0.5, 0.5] and e3.verdict is Verdict.CONFIRMED
        and e5.matrix == [[2]] and e5.p_rank == 1 and e5.l_poly == [1, 3, 5]
        and e5.verdict is Verdict.REFUTED_BY_P_RANK
    )
    record(7, ok, elapsed, 1.0,
           f"x^3-x/F_3: L={e3.l_poly}, slopes={[str(s) for s in e3.slopes]}, {e3.verdict.value}; "
           f"x^3+x+1/F_5: HW={e5.matrix}, p-rank={e5.p_rank}, L={e5.l_poly}, {e5.verdict.value}")


# -- 8 ----------------------------------------------------------------------------


def test_criterion_08_elliptic_trace():
    t0 = time.perf_counter()
    total = agree = 0
    for i, p in enumerate((5, 7, 11, 13)):
        rng = task_stream(8, i)
        for _ in range(20):
            c = HyperCurve(random_squarefree(rng, p, 3))
            total += 1
            agree += (hasse_witt(c)[0][0] - (p + 1 - count_points(c))) % p == 0
    elapsed = time.perf_counter() - t0
    record(8, agree == total == 80, elapsed, 5.0, f"Hasse-Witt entry = trace mod p in {agree}/{total} cubics")


# -- 9 ----------------------------------------------------------------------------


def test_criterion_09_genus2_cross_check():
    t0 = time.perf_counter()
    total = agree = 0
    for i, p in enumerate((3, 5, 7)):
        rng = task_stream(9, i)
        for j in range(10):
            c = HyperCurve(random_squarefree(rng, p, 5 + j % 2))
            counts = [count_points(c, 1), count_points(c, 2)]
            slopes = newton_slopes(l_polynomial(c, counts), p)
            total += 1
            agree += p_rank(hasse_witt(c), c) == sum(s == 0 for s in slopes)
    elapsed = time.perf_counter() - t0
    record(9, agree == total == 30, elapsed, 30.0, f"p-rank = slope-0 multiplicity in {agree}/{total} genus-2 curves")


# -- 10 ---------------------------------------------------------------------------


def criterion10_reports(p: int) -> list[str]:
    return run(["hw", "--p", str(p), "--poly", EVEN_FAMILY, "--budget", "100", "--seed", "10"])[1]


def test_criterion_10_main2_evidence():
    fractions = {}
    ok = True
    worst = 0.0
    for p in (7, 11, 13):
        t0 = time.perf_counter()
        summary = json.loads(criterion10_reports(p)[-1])
        worst = max(worst, time.perf_counter() - t0)
        st = summary["stats"]
        fractions[p] = f"{st['refuted']}/{st['squarefree']} ({st['distinct_z0']} distinct c)"
        ok &= st["squarefree"] == 100 and st["refuted"] >= 1
    record(10, ok, worst, 10.0, f"RefutedByPRank fraction for y^2 = x^10-x+c: {fractions}")


# -- 11 ---------------------------------------------------------------------------


def _criterion6_text() -> list[str]:
    return [json.dumps({"p": p, "family": k, "z0": r.z0_json(p), "cycle": str(r.outcome), "disc_square": r.disc_square},
                       sort_keys=True) for p, k, r in criterion6_records()]


def _determinism_runs() -> dict[str, list[str]]:
    c5 = json.dumps(criterion5_evidence(), sort_keys=True)
    c5_cli = run(["galois", "--p", "3", "--poly", ABHYANKAR, "--budget", "2000", "--seed", "0"])[1]
    return {
        "4": [mask_timings(x) for x in criterion4_reports()],
        "5": [c5] + [mask_timings(x) for x in c5_cli],
        "6": _criterion6_text(),
        "10": [mask_timings(x) for p in (7, 11, 13) for x in criterion10_reports(p)],
    }


def test_criterion_11_determinism():
    t0 = time.perf_counter()
    a = _determinism_runs()
    b = _determinism_runs()
    elapsed = time.perf_counter() - t0
    same = {k: a[k] == b[k] for k in a}
    record(11, all(same.values()), elapsed, 120.0,
           f"byte-identical reports on rerun (timings masked): {same}")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:warnings"]))
