"""Exhaustive verification suites shared by the command line, the tests and the demos.

Each suite sweeps independent cases; with ``ANFIELD_THREADS`` > 1 the cases run in a
process pool (the work is CPU-bound pure Python).  Results are always reported in case
order, so the output does not depend on the worker count.
"""

from __future__ import annotations

import functools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from anfield.classification import invertible_subcategory_table, invertible_subcategory_twist
from anfield.fusion import (
    CategoryParams,
    admissible_sixj_labels,
    is_admissible,
    pentagon_check,
    six_j,
    sixj_oracle,
    theta_symbol,
)
from anfield.modular import (
    BraidingParams,
    braided_labels,
    conductor,
    conductor_formula,
    is_modular,
    modularity_rank,
    verlinde_check,
)
from anfield.symbolic import DELTA
from anfield.temperley_lieb import (
    chebyshev,
    evaluate_closed_network,
    generator,
    jones_wenzl,
    markov_trace,
    theta_network,
)

__all__ = ["SUITES", "SuiteResult", "run_suite", "worker_count", "monoidal_parameters", "symbolic_theta"]


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    failures: list[dict] = field(default_factory=list)

    def __bool__(self):
        return self.passed


def worker_count() -> int:
    """Worker processes allowed by ``ANFIELD_THREADS`` (default 1)."""
    raw = os.environ.get("ANFIELD_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"ANFIELD_THREADS must be a positive integer, got {raw!r}") from None


def monoidal_parameters(k: int) -> list[int]:
    return [m for m in range(1, k + 2) if math.gcd(m, k + 2) == 1]


# ---------------------------------------------------------------------------
# Per-case checks: each returns (number of identities checked, failures)
# ---------------------------------------------------------------------------

Case = tuple[int, list[dict]]


def _jw_case(n: int) -> Case:
    f = jones_wenzl(n, DELTA)
    failures = []
    checked = 1
    if f @ f != f:
        failures.append({"n": n, "check": "idempotent"})
    for i in range(1, n):
        e = generator(n, i, DELTA)
        checked += 2
        if not (e @ f).is_zero():
            failures.append({"n": n, "check": "e_i f = 0", "i": i})
        if not (f @ e).is_zero():
            failures.append({"n": n, "check": "f e_i = 0", "i": i})
    checked += 1
    if markov_trace(f) != chebyshev(n, DELTA):
        failures.append({"n": n, "check": "trace = Delta_n"})
    return checked, failures


@functools.lru_cache(maxsize=None)
def symbolic_theta(a: int, b: int, c: int):
    """The theta network evaluated over Q(delta), as a rational function of delta."""
    return evaluate_closed_network(theta_network(a, b, c, DELTA))


THETA_MAX_LABEL = 6


def _theta_case(k: int) -> Case:
    """Theta network against the closed formula, every m and both pivotal structures.

    The ``-`` structure has loop value ``-delta``, so the network is specialised there.
    """
    top = min(THETA_MAX_LABEL, k)
    triples = [
        (a, b, c)
        for a in range(top + 1)
        for b in range(top + 1)
        for c in range(top + 1)
        if is_admissible(a, b, c, k)
    ]
    checked, failures = 0, []
    for m in monoidal_parameters(k):
        for pivotal in (1, -1):
            params = CategoryParams(k, m, pivotal)
            loop = params.delta if pivotal == 1 else -params.delta
            for a, b, c in triples:
                checked += 1
                if symbolic_theta(a, b, c).evaluate(loop) != theta_symbol(params, a, b, c):
                    failures.append({"k": k, "m": m, "pivotal": pivotal, "triple": [a, b, c]})
    return checked, failures


def _sixj_case(km: tuple[int, int]) -> Case:
    k, m = km
    params = CategoryParams(k, m)
    checked, failures = 0, []
    for L in admissible_sixj_labels(k):
        checked += 1
        if six_j(params, L) != sixj_oracle(params, L):
            failures.append({"k": k, "m": m, "labels": list(L.as_tuple())})
    return checked, failures


def _pentagon_case(km: tuple[int, int]) -> Case:
    k, m = km
    report = pentagon_check(CategoryParams(k, m))
    return report.checked, [dict(f, k=k, m=m) for f in report.failures]


def _verlinde_case(k: int) -> Case:
    checked, failures = 0, []
    for ell in braided_labels(k):
        for pivotal in (1, -1):
            bp = BraidingParams(k, ell, pivotal)
            if not is_modular(bp):
                continue
            report = verlinde_check(bp)
            checked += report.checked
            failures += [
                {"k": k, "ell": ell, "pivotal": pivotal, "a": f["a"], "b": f["b"], "c": f["c"]}
                for f in report.failures
            ]
    return checked, failures


def _expected_rank(k: int, ell: int) -> int:
    return (k + 1) // 2 if k % 2 and ell % 2 else k + 1


def _tables_case(k: int) -> Case:
    """Conductor, invertible-subcategory and S-rank tables at level ``k``."""
    checked, failures = 0, []
    for ell in braided_labels(k):
        bp = BraidingParams(k, ell)
        checked += 3
        got = conductor(bp)
        if got != conductor_formula(k, ell):
            failures.append({"table": "conductor", "k": k, "ell": ell, "got": got})
        table, twist = invertible_subcategory_table(k, ell), invertible_subcategory_twist(k, ell)
        if table != twist:
            failures.append({"table": "invertible", "k": k, "ell": ell, "table_value": str(table), "twist_value": str(twist)})
        rank = modularity_rank(bp)
        if rank != _expected_rank(k, ell):
            failures.append({"table": "rank", "k": k, "ell": ell, "got": rank})
    return checked, failures


def _by_level(k_min: int, k_max: int) -> list[int]:
    return list(range(k_min, k_max + 1))


def _by_category(k_min: int, k_max: int) -> list[tuple[int, int]]:
    return [(k, m) for k in range(k_min, k_max + 1) for m in monoidal_parameters(k)]


@dataclass(frozen=True)
class Suite:
    check: Callable
    cases: Callable[[int, int], list]
    default_k_max: int
    k_floor: int = 1
    description: str = ""


SUITES: dict[str, Suite] = {
    "jw": Suite(_jw_case, _by_level, 8, 0, "symbolic Jones-Wenzl: idempotent, killed by e_i, trace Delta_n (k-max bounds n)"),
    "theta-oracle": Suite(_theta_case, _by_level, 8, 1, "theta network vs closed formula, labels <= 6"),
    "sixj-oracle": Suite(_sixj_case, _by_category, 6, 1, "closed-form 6j vs strand-representation oracle"),
    "pentagon": Suite(_pentagon_case, _by_category, 5, 1, "Biedenharn-Elliott identity on all labels"),
    "verlinde": Suite(_verlinde_case, _by_level, 8, 1, "fusion rules recovered from S in every modular case"),
    "tables": Suite(_tables_case, _by_level, 10, 1, "conductor, invertible-subcategory and S-rank tables"),
}


def _run_cases(check: Callable, cases: list, workers: int) -> Iterable[Case]:
    if workers <= 1 or len(cases) <= 1:
        return map(check, cases)
    pool = ProcessPoolExecutor(max_workers=min(workers, len(cases)))

    def results():
        with pool:
            yield from pool.map(check, cases)

    return results()


def run_suite(
    name: str,
    k_max: int | None = None,
    k_min: int | None = None,
    progress: Callable[[str], None] | None = None,
    workers: int | None = None,
) -> SuiteResult:
    """Run a named suite over ``k_min .. k_max``; raises KeyError for an unknown name."""
    suite = SUITES[name]
    k_max = suite.default_k_max if k_max is None else k_max
    k_min = suite.k_floor if k_min is None else max(k_min, suite.k_floor)
    cases = suite.cases(k_min, k_max)
    workers = worker_count() if workers is None else workers
    checked, failures = 0, []
    for case, (n, fails) in zip(cases, _run_cases(suite.check, cases, workers)):
        checked += n
        failures += fails
        if progress:
            status = "ok" if not fails else f"{len(fails)} FAILED"
            progress(f"[{name}] case {case}: {n} checks, {status}")
    return SuiteResult(name, not failures, checked, failures)
