"""One test per acceptance criterion.

Every test prints a single ``ACCEPT <n> <name>: PASS|FAIL`` line (also gathered into the
terminal summary) with the measured time and its pinned limit.  All comparisons are exact
equalities in the cyclotomic field; the only tolerances are the wall-clock limits below.
"""

from __future__ import annotations

import math
import time
from contextlib import contextmanager

from anfield.classification import (
    A2_CATEGORIES,
    A2Name,
    enumerate_braided,
    enumerate_monoidal,
    invertible_subcategory_table,
    invertible_subcategory_twist,
    monoidal_classes,
)
from anfield.fusion import (
    CategoryParams,
    admissible_sixj_labels,
    fuse,
    pentagon_check,
    qdim,
    sixj_table,
)
from anfield.modular import (
    BraidingParams,
    braided_labels,
    conductor,
    galois_orbits,
    modularity_rank,
    r_coeff,
    twist,
)
from anfield.verify import run_suite

# wall-clock limits in seconds
LIMITS = {1: 10, 2: 60, 3: 300, 4: 120, 5: 60, 6: 60, 7: 30, 8: 30, 9: 10, 10: 30, 11: 10}


@contextmanager
def criterion(log: list, number: int, name: str):
    """Time the block, print the verdict line, then fail on a wrong result or overrun."""
    outcome = {"ok": False, "detail": ""}
    start = time.perf_counter()
    try:
        yield outcome
    finally:
        elapsed = time.perf_counter() - start
        within = elapsed < LIMITS[number]
        verdict = "PASS" if outcome["ok"] and within else "FAIL"
        line = f"ACCEPT {number:2d} {name}: {verdict} ({outcome['detail']}; {elapsed:.1f}s < {LIMITS[number]}s)"
        print(line)
        log.append(line)
    assert outcome["ok"], line
    assert within, line


def _suite(outcome, name, **kwargs):
    result = run_suite(name, **kwargs)
    outcome["ok"] = result.passed and result.checked > 0
    outcome["detail"] = f"{result.checked} identities, {len(result.failures)} failures"


def test_01_jones_wenzl(acceptance_log):
    with criterion(acceptance_log, 1, "Jones-Wenzl n <= 8") as outcome:
        _suite(outcome, "jw", k_max=8)


def test_02_theta_oracle(acceptance_log):
    with criterion(acceptance_log, 2, "theta oracle k <= 8") as outcome:
        _suite(outcome, "theta-oracle", k_max=8)


def test_03_sixj_oracle(acceptance_log):
    with criterion(acceptance_log, 3, "6j oracle k <= 6") as outcome:
        _suite(outcome, "sixj-oracle", k_max=6)


def test_04_pentagon_and_fault_injection(acceptance_log):
    with criterion(acceptance_log, 4, "pentagon k <= 5 + faults") as outcome:
        result = run_suite("pentagon", k_max=5)
        injected = detected = 0
        for k, m in [(1, 1), (1, 2), (2, 1), (2, 3), (3, 1), (3, 2)]:
            params = CategoryParams(k, m)
            for labels in admissible_sixj_labels(k):
                injected += 1
                detected += not pentagon_check(params, sixj_table(k, m).perturbed(labels, 1))
        outcome["ok"] = result.passed and detected == injected
        outcome["detail"] = f"{result.checked} identities, {detected}/{injected} faults caught"


def test_05_verlinde(acceptance_log):
    with criterion(acceptance_log, 5, "Verlinde k <= 8") as outcome:
        _suite(outcome, "verlinde", k_max=8)


def test_06_modularity_rank(acceptance_log):
    with criterion(acceptance_log, 6, "S-rank table k <= 9") as outcome:
        checked, wrong = 0, []
        for k in range(1, 10):
            for ell in braided_labels(k):
                expected = (k + 1) // 2 if k % 2 and ell % 2 else k + 1
                checked += 1
                if modularity_rank(BraidingParams(k, ell)) != expected:
                    wrong.append((k, ell))
        outcome["ok"] = not wrong
        outcome["detail"] = f"{checked} categories, mismatches {wrong}"


# conductor by k + l mod 4, as a multiple of k + 2
CONDUCTOR_TABLE = {0: 1, 1: 4, 2: 2, 3: 4}


def test_07_conductor(acceptance_log):
    with criterion(acceptance_log, 7, "conductor table") as outcome:
        checked, wrong = 0, []
        for k in range(2, 11):
            for ell in braided_labels(k):
                checked += 1
                if conductor(BraidingParams(k, ell)) != CONDUCTOR_TABLE[(k + ell) % 4] * (k + 2):
                    wrong.append((k, ell))
        a2 = [conductor(BraidingParams(1, A2_CATEGORIES[n][0])) for n in (A2Name.REP_Z2, A2Name.SVEC, A2Name.SEM, A2Name.SEM_BAR)]
        outcome["ok"] = not wrong and a2 == [1, 2, 4, 4]
        outcome["detail"] = f"{checked} categories, A2 conductors {a2}"


# rows l mod 4, columns k mod 4; None where no category exists
INVERTIBLE_TABLE = {
    0: [None, A2Name.SEM, None, A2Name.SEM],
    1: [A2Name.REP_Z2, A2Name.SVEC, A2Name.SVEC, A2Name.REP_Z2],
    2: [None, A2Name.SEM_BAR, None, A2Name.SEM_BAR],
    3: [A2Name.REP_Z2, A2Name.REP_Z2, A2Name.SVEC, A2Name.SVEC],
}


def test_08_invertible_subcategory(acceptance_log):
    with criterion(acceptance_log, 8, "invertible subcategory k <= 16") as outcome:
        checked, wrong = 0, []
        for k in range(1, 17):
            for ell in braided_labels(k):
                checked += 1
                expected = INVERTIBLE_TABLE[ell % 4][k % 4]
                if not (invertible_subcategory_twist(k, ell) == expected == invertible_subcategory_table(k, ell)):
                    wrong.append((k, ell))
        outcome["ok"] = not wrong
        outcome["detail"] = f"{checked} categories, mismatches {wrong}"


def test_09_global_dimension(acceptance_log):
    with criterion(acceptance_log, 9, "global dimension k <= 12") as outcome:
        checked, wrong = 0, []
        for k in range(1, 13):
            for ell in braided_labels(k):
                for pivotal in (1, -1):
                    bp = BraidingParams(k, ell, pivotal)
                    s4 = bp.s**4
                    closed = 2 * (k + 2) / (2 - s4 - s4.inverse())
                    total = sum((qdim(bp.category, a) ** 2 for a in range(k + 1)), 0 * s4)
                    checked += 1
                    if total != closed:
                        wrong.append((k, ell, pivotal))
        outcome["ok"] = not wrong
        outcome["detail"] = f"{checked} categories, mismatches {wrong}"


def test_10_ribbon_relation(acceptance_log):
    with criterion(acceptance_log, 10, "ribbon relation k <= 8") as outcome:
        checked, wrong = 0, []
        for k in range(1, 9):
            for ell in braided_labels(k):
                for pivotal in (1, -1):
                    bp = BraidingParams(k, ell, pivotal)
                    theta = [twist(bp, a) for a in range(k + 1)]
                    for a in range(k + 1):
                        for b in range(k + 1):
                            for c in fuse(k, a, b):
                                checked += 1
                                if r_coeff(bp, a, b, c) * r_coeff(bp, b, a, c) != theta[c] / (theta[a] * theta[b]):
                                    wrong.append((k, ell, pivotal, a, b, c))
        outcome["ok"] = not wrong
        outcome["detail"] = f"{checked} identities, {len(wrong)} failures"


def _expected_galois_orbits(k: int) -> list[set[int]]:
    labels = braided_labels(k)
    if k % 2 == 0:
        return [set(labels)]
    return [{x for x in labels if x % 2 == 0}, {x for x in labels if x % 4 == 1}, {x for x in labels if x % 4 == 3}]


def test_11_classification_counts(acceptance_log):
    with criterion(acceptance_log, 11, "classification counts") as outcome:
        problems = []
        for k in range(1, 10):
            phi = sum(1 for m in range(1, k + 3) if math.gcd(m, k + 2) == 1)
            if len(enumerate_monoidal(k)) != phi:
                problems.append(("monoidal", k))
            sizes = {len(c) for c in monoidal_classes(k)}
            if k >= 2 and sizes != {4}:
                problems.append(("class sizes", k))
        named = {c.name: c.ells for c in enumerate_braided(1)}
        if named != {A2Name.REP_Z2: (7, 11), A2Name.SVEC: (1, 5), A2Name.SEM: (4, 8), A2Name.SEM_BAR: (2, 10)}:
            problems.append(("A2 names", named))
        for k in range(2, 10):
            got = sorted(sorted(o) for o in galois_orbits(k))
            if got != sorted(sorted(o) for o in _expected_galois_orbits(k)):
                problems.append(("galois", k))
        outcome["ok"] = not problems
        outcome["detail"] = f"levels 1..9, problems {problems}"
