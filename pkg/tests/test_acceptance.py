"""Acceptance suite: one test per criterion, each printing a pass/fail line
with its runtime and asserting both the claim and the runtime budget.

Criterion 2 is implemented verbatim and expected to fail: the strict
inequality has exactly two counterexamples, (r, g) = (3, 10) and (3, 14),
where the rank-3 closed form equals the rank-1 value (see the companion
test and the decisions ledger outside the package).  It is marked
xfail(strict=True) so the failure stays pinned and visible.
"""

import json
import random
import time
from fractions import Fraction
from math import gcd

import pytest

from cliffwalls import (
    CliffordQuery,
    L_value,
    clifford_index_k3,
    clifford_plane,
    closed_form_cap,
    exceeds_corollary_floor,
    floor_sqrt,
    h0_bound_plane,
    lm_construction,
    sharp_example,
    verify_Q,
    verify_fs,
    verify_lE_cap,
    verify_plane,
    verify_rank2,
)
from cliffwalls.cli import main


def _report(name: str, ok: bool, elapsed: float, budget: float, extra: str = ""):
    status = "PASS" if ok else "FAIL"
    print(f"[acceptance] {name}: {status} in {elapsed:.3f}s (budget {budget}s)"
          + (f" {extra}" if extra else ""))


def test_criterion_01_rank2_identity():
    t0 = time.perf_counter()
    ok = all(clifford_index_k3(CliffordQuery(2, g)) == (g - 1) // 2
             for g in range(4, 201))
    elapsed = time.perf_counter() - t0
    _report("1 rank-2 identity", ok, elapsed, 1)
    assert ok and elapsed < 1


@pytest.mark.xfail(strict=True,
                   reason="strictness fails at exactly (3,10) and (3,14): "
                          "the rank-3 closed form equals floor((g-1)/2) there")
def test_criterion_02_mercat_failure_strict():
    t0 = time.perf_counter()
    witnesses = [(r, g) for r in range(3, 9) for g in range(r * r, 201)
                 if not clifford_index_k3(CliffordQuery(r, g)) < (g - 1) // 2]
    elapsed = time.perf_counter() - t0
    _report("2 strict drop below rank-1 value", not witnesses, elapsed, 1,
            extra=f"equality witnesses: {witnesses}")
    assert not witnesses and elapsed < 1


def test_criterion_02_companion_exact_exception_set():
    # the honest version: never above the rank-1 value, equality exactly twice
    t0 = time.perf_counter()
    equalities = []
    for r in range(3, 9):
        for g in range(r * r, 201):
            value = clifford_index_k3(CliffordQuery(r, g))
            assert value <= (g - 1) // 2
            if value == (g - 1) // 2:
                equalities.append((r, g))
    elapsed = time.perf_counter() - t0
    ok = equalities == [(3, 10), (3, 14)]
    _report("2c equality set pinned", ok, elapsed, 1, extra=str(equalities))
    assert ok and elapsed < 1


def test_criterion_03_attainment():
    t0 = time.perf_counter()
    ok = True
    for r in range(2, 9):
        for g in range(max(r * r, 6), 121):
            lm = lm_construction(CliffordQuery(r, g))
            if not (lm.valid and lm.cliff_upper == clifford_index_k3(CliffordQuery(r, g))):
                ok = False
    elapsed = time.perf_counter() - t0
    _report("3 restriction attains the index", ok, elapsed, 1)
    assert ok and elapsed < 1


def test_criterion_04_sharpness_gap():
    # gap allowance (k^2 - t^2)/r + r/g + 3/2, non-strict: the allowance is
    # attained at (r, k) = (6, 3) for odd g (ledgered sign repair)
    t0 = time.perf_counter()
    ok = True
    attained = []
    for r in range(2, 7):
        for k in range(1, r + 1):
            t = gcd(r, k)
            for g in range(max((r // t) ** 2, 2), 81):
                d, h0, _ = sharp_example(r, k, g)
                gap = closed_form_cap(r, d, g) - h0
                allowance = (Fraction(k * k - t * t, r) + Fraction(r, g)
                             + Fraction(3, 2))
                if not (0 < gap <= allowance):
                    ok = False
                if gap == allowance:
                    attained.append((r, k, g))
    elapsed = time.perf_counter() - t0
    _report("4 sharp family gap", ok, elapsed, 2,
            extra=f"allowance attained {len(attained)}x")
    assert ok and elapsed < 2


def test_criterion_05_corollary_floor():
    t0 = time.perf_counter()
    ok = all(exceeds_corollary_floor(clifford_index_k3(CliffordQuery(r, g)), g)
             for r in range(2, 7) for g in range(r * r, 121))
    elapsed = time.perf_counter() - t0
    _report("5 surd floor (squared comparison)", ok, elapsed, 1)
    assert ok and elapsed < 1


def test_criterion_06_proof_step_suites():
    t0 = time.perf_counter()
    reports = [
        verify_Q((4, 8), None),
        verify_fs((3, 8), None),
        verify_rank2((4, 60)),
        verify_plane((5, 40), (1, 10)),
    ]
    elapsed = time.perf_counter() - t0
    ok = all(rep.passed for rep in reports)
    detail = "; ".join(rep.summary() for rep in reports)
    _report("6 proof-step suites", ok, elapsed, 30, extra=detail)
    assert ok and elapsed < 30


def test_criterion_07_polygon_oracle():
    t0 = time.perf_counter()
    rep = verify_lE_cap((3, 5), None)
    elapsed = time.perf_counter() - t0
    _report("7 chain-search oracle", rep.passed, elapsed, 300,
            extra=rep.summary())
    assert rep.passed and elapsed < 300


def test_criterion_08_plane_sharpness():
    t0 = time.perf_counter()
    ok = all(h0_bound_plane(1, l, l).value == 3 for l in range(5, 41))
    for l in range(5, 41):
        for r in range(1, 11):
            res = clifford_plane(r, l)
            if not (res.value == l - 4 and res.record_all_true):
                ok = False
    elapsed = time.perf_counter() - t0
    _report("8 plane caps and index", ok, elapsed, 1)
    assert ok and elapsed < 1


def test_criterion_09_random_properties():
    rng = random.Random(20260810)
    n = 10**5
    t0 = time.perf_counter()

    # (a) weighted-norm triangle inequality on random rationals; clearing
    # the shared denominator reduces the check to integers (the norm is
    # homogeneous), so each instance is an exact integer comparison
    weight = 4 * 6  # 2 H^2 + 4 at genus six
    ok_norm = True
    for _ in range(n):
        den = rng.randint(1, 16)
        ax, ay, bx, by = (rng.randint(-10**4, 10**4) for _ in range(4))
        # vectors (ax, ay)/den and (bx, by)/den
        big = (ax + bx) ** 2 + weight * (ay + by) ** 2
        s1 = ax * ax + weight * ay * ay
        s2 = bx * bx + weight * by * by
        t = big - s1 - s2
        if not (t <= 0 or t * t <= 4 * s1 * s2):
            ok_norm = False

    # (b) L triangle inequality with all four branch combinations hit
    combos = set()
    ok_l = True
    for _ in range(n):
        a1 = Fraction(rng.randint(-400, 400), rng.randint(1, 8))
        b1 = Fraction(rng.randint(1, 400), rng.randint(1, 8))
        a2 = Fraction(rng.randint(-400, 400), rng.randint(1, 8))
        b2 = Fraction(rng.randint(1, 400), rng.randint(1, 8))
        if not L_value(a1 + a2, b1 + b2) <= L_value(a1, b1) + L_value(a2, b2):
            ok_l = False
        br1 = a1 >= -b1
        br2 = a2 >= -b2
        brs = a1 + a2 >= -(b1 + b2)
        combos.add((min(br1, br2), max(br1, br2), brs))
    ok_l = ok_l and {(True, True, True), (False, False, False),
                     (False, True, True), (False, True, False)} <= combos

    # (c) L positive homogeneity
    ok_h = True
    for _ in range(n):
        a = Fraction(rng.randint(-300, 300), rng.randint(1, 6))
        b = Fraction(rng.randint(1, 300), rng.randint(1, 6))
        k = Fraction(rng.randint(1, 50), rng.randint(1, 6))
        if L_value(k * a, k * b) != k * L_value(a, b):
            ok_h = False

    # (d) floor_sqrt exactness on random rationals, as an integer statement:
    # with q = p/dnm, m is largest with m^2 * dnm <= p
    ok_f = True
    for _ in range(n):
        p = rng.randint(0, 10**12)
        dnm = rng.randint(1, 10**6)
        m = floor_sqrt(Fraction(p, dnm))
        if not (m * m * dnm <= p < (m + 1) * (m + 1) * dnm):
            ok_f = False

    elapsed = time.perf_counter() - t0
    ok = ok_norm and ok_l and ok_h and ok_f
    _report("9 random exact properties", ok, elapsed, 30,
            extra=f"4x{n} instances, L combos hit: {sorted(combos)}")
    assert ok and elapsed < 30


def test_criterion_10_cli_determinism(tmp_path, capsys):
    t0 = time.perf_counter()
    commands = [
        ["cliff", "k3", "--r", "3", "--g", "9", "--format", "json"],
        ["cliff", "p2", "--r", "4", "--l", "6", "--format", "csv"],
        ["h0", "k3", "--r", "1", "--g", "5", "--d", "4", "--format", "json"],
        ["h0", "p2", "--r", "2", "--l", "7", "--d", "14", "--format", "table"],
        ["verify", "--suite", "q-step1", "--rmax", "5", "--gmax", "40",
         "--format", "csv"],
    ]
    ok = True
    for argv in commands:
        outs = []
        for _ in range(2):
            code = main(list(argv))
            outs.append(capsys.readouterr().out)
            ok = ok and code == 0
        ok = ok and outs[0] == outs[1]
    for name, argv in [("k3", ["plot", "k3", "--r", "2", "--d", "6", "--g", "5"]),
                       ("p2", ["plot", "p2", "--r", "1", "--d", "5", "--l", "5"])]:
        files = []
        for i in range(2):
            path = tmp_path / f"{name}-{i}.svg"
            assert main(argv + ["--out", str(path)]) == 0
            files.append(path.read_bytes())
        ok = ok and files[0] == files[1]
    elapsed = time.perf_counter() - t0
    _report("10 CLI determinism", ok, elapsed, 5)
    assert ok and elapsed < 5
