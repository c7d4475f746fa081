"""Fusion rules, dimensions, theta and 6j symbols of the categories C_{k,m,+/-}.

Conventions: ``q = zeta_{2(k+2)}^m`` and ``delta = q + q^-1``.  Quantum integers are taken
in the ``s``-convention with ``s^2 = v = -q`` (so ``-[2] = delta``), computed inside
Q(q).  Simple objects are the integers ``0 .. k``.

The pivotal structure ``-`` is transported from ``+``: a closed network acquires the
sign ``(-1)`` per loop of odd label, so dimensions pick up ``(-1)^n`` and theta symbols
pick up ``(-1)^((a+b+c)/2)``, while 6j symbols (which only see the monoidal structure)
are unchanged.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping

from anfield.cyclotomic import CyclotomicNumber, FactorialRatio, root_of_unity
from anfield.trivalent import sixj_block, strand_representation, theta_value

__all__ = [
    "CategoryParams",
    "AdmissibleTriple",
    "SixJLabels",
    "is_admissible",
    "fuse",
    "fusion_multiplicity",
    "qdim",
    "global_dim",
    "theta_symbol",
    "six_j",
    "SixJTable",
    "sixj_table",
    "admissible_sixj_labels",
    "PentagonReport",
    "pentagon_check",
    "orthogonality_check",
    "sixj_oracle",
    "theta_oracle",
]


def _sign(pivotal) -> int:
    if pivotal in (1, "+", "plus"):
        return 1
    if pivotal in (-1, "-", "minus"):
        return -1
    raise ValueError(f"pivotal sign must be '+' or '-', got {pivotal!r}")


@dataclass(frozen=True)
class CategoryParams:
    """Parameters of the pivotal fusion category C_{k,m,pivotal}.

    ``m`` is read modulo ``k + 2`` and stored in ``1 .. k+1``.
    """

    k: int
    m: int = 1
    pivotal: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"level k must be at least 1, got {self.k}")
        m = self.m % (self.k + 2)
        if math.gcd(m, self.k + 2) != 1:
            raise ValueError(f"m = {self.m} is not coprime to k + 2 = {self.k + 2}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "pivotal", _sign(self.pivotal))

    @functools.cached_property
    def q(self) -> CyclotomicNumber:
        return root_of_unity(2 * (self.k + 2), self.m)

    @functools.cached_property
    def delta(self) -> CyclotomicNumber:
        return self.q + self.q.inverse()

    @functools.cached_property
    def s(self) -> CyclotomicNumber:
        """A square root of ``-q``; ``-s^2 - s^-2 = delta``."""
        return root_of_unity(4 * (self.k + 2), self.m + self.k + 2)

    @functools.cached_property
    def v(self) -> CyclotomicNumber:
        """``s^2 = -q``, kept in Q(q)."""
        return -self.q

    @property
    def rank(self) -> int:
        return self.k + 1

    def simples(self) -> range:
        return range(self.k + 1)


def is_admissible(a: int, b: int, c: int, k: int | None = None) -> bool:
    """Parity and triangle conditions, plus the level cutoff when ``k`` is given."""
    if min(a, b, c) < 0 or (a + b + c) % 2:
        return False
    if a > b + c or b > a + c or c > a + b:
        return False
    if k is not None and (max(a, b, c) > k or a + b + c > 2 * k):
        return False
    return True


@dataclass(frozen=True)
class AdmissibleTriple:
    a: int
    b: int
    c: int

    @property
    def u(self) -> int:
        return (self.b + self.c - self.a) // 2

    @property
    def v(self) -> int:
        return (self.a + self.c - self.b) // 2

    @property
    def w(self) -> int:
        return (self.a + self.b - self.c) // 2

    def is_admissible(self, k: int | None = None) -> bool:
        return is_admissible(self.a, self.b, self.c, k)


@dataclass(frozen=True)
class SixJLabels:
    """Labels of ``{a b e; c d f}``: ``f`` joins the (a, b) and (c, d) vertices, ``e`` the (a, d) and (b, c) ones."""

    a: int
    b: int
    e: int
    c: int
    d: int
    f: int

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.e, self.c, self.d, self.f)

    def triples(self) -> tuple[tuple[int, int, int], ...]:
        a, b, e, c, d, f = self.as_tuple()
        return ((a, d, e), (b, c, e), (a, b, f), (c, d, f))

    @property
    def a_sums(self) -> tuple[int, int, int, int]:
        return tuple(sum(t) // 2 for t in self.triples())  # type: ignore[return-value]

    @property
    def b_sums(self) -> tuple[int, int, int]:
        a, b, e, c, d, f = self.as_tuple()
        return ((b + d + e + f) // 2, (a + c + e + f) // 2, (a + b + c + d) // 2)

    def is_admissible(self, k: int | None = None) -> bool:
        return all(is_admissible(*t, k) for t in self.triples())


def _labels(L) -> SixJLabels:
    return L if isinstance(L, SixJLabels) else SixJLabels(*L)


# ---------------------------------------------------------------------------
# Fusion rules and dimensions
# ---------------------------------------------------------------------------


def _level(params) -> int:
    return params if isinstance(params, int) else params.k


def fuse(params: CategoryParams | int, i: int, j: int) -> list[int]:
    """Simple summands of ``X_i (x) X_j`` (each with multiplicity one)."""
    k = _level(params)
    for x in (i, j):
        if not 0 <= x <= k:
            raise ValueError(f"X_{x} is not a simple object at level {k}")
    return list(range(abs(i - j), min(i + j, 2 * k - i - j) + 1, 2))


def fusion_multiplicity(params: CategoryParams | int, i: int, j: int, l: int) -> int:
    return int(is_admissible(i, j, l, _level(params)))


def qdim(params: CategoryParams, n: int) -> CyclotomicNumber:
    """Categorical dimension of ``X_n``: ``(-1)^n [n+1]`` for ``+``, ``[n+1]`` for ``-``."""
    if not 0 <= n <= params.k:
        raise ValueError(f"X_{n} is not a simple object at level {params.k}")
    bracket = FactorialRatio.of([n + 1], [n]).evaluate(params.v)
    sign = (-1) ** n if params.pivotal == 1 else 1
    return bracket if sign == 1 else -bracket


def global_dim(params: CategoryParams) -> CyclotomicNumber:
    """``2(k+2) / (2 - s^4 - s^-4)``, which equals the sum of squared dimensions."""
    v2 = params.v * params.v
    return 2 * (params.k + 2) / (2 - v2 - v2.inverse())


# ---------------------------------------------------------------------------
# Theta and 6j symbols
# ---------------------------------------------------------------------------


def _theta_ratio(a: int, b: int, c: int) -> tuple[int, list[int], list[int]]:
    u, v, w = (b + c - a) // 2, (a + c - b) // 2, (a + b - c) // 2
    return u + v + w, [u + v + w + 1, u, v, w], [u + v, v + w, u + w]


def theta_symbol(params: CategoryParams, a, b: int | None = None, c: int | None = None, *, strict: bool = False):
    """Theta symbol ``(-1)^(u+v+w) [u+v+w+1]! [u]! [v]! [w]! / ([u+v]! [v+w]! [u+w]!)``.

    Accepts an :class:`AdmissibleTriple` or three integers.  Non-admissible triples
    give 0, or raise ValueError when ``strict`` is set.
    """
    if isinstance(a, AdmissibleTriple):
        a, b, c = a.a, a.b, a.c
    if not is_admissible(a, b, c, params.k):
        if strict:
            raise ValueError(f"({a}, {b}, {c}) is not admissible at level {params.k}")
        return params.q * 0
    sign, num, den = _theta_ratio(a, b, c)
    value = FactorialRatio.of(num, den).evaluate(params.v)
    if params.pivotal == -1:
        sign += (a + b + c) // 2
    return -value if sign % 2 else value


def _sixj_terms(L: SixJLabels) -> Iterator[tuple[int, FactorialRatio]]:
    """Each summand of the 6j formula as ``(sign, factorial ratio)``.

    The prefactor sign is ``(-1)^e``, which makes ``{0 0 0; 0 0 0} = 1``; with
    ``(-1)^(e+1)`` every symbol would come out negated.
    """
    a, b, e, c, d, f = L.as_tuple()
    a_s, b_s = L.a_sums, L.b_sums
    s_lo, s_hi = max(a_s), min(b_s)
    base_num = [bj - ai for bj in b_s for ai in a_s] + [e + 1]
    base_den = [a, b, c, d, e, f, e]
    base_sign = e
    for x, y, z in ((a, d, e), (b, c, e)):
        sgn, t_num, t_den = _theta_ratio(x, y, z)
        # dividing by theta swaps its numerator and denominator
        base_num += t_den
        base_den += t_num
        base_sign += sgn
    for s in range(s_lo, s_hi + 1):
        num = base_num + [s + 1]
        den = base_den + [s - ai for ai in a_s] + [bj - s for bj in b_s]
        yield base_sign + s, FactorialRatio.of(num, den)


def _six_j_formula(params: CategoryParams, L: SixJLabels) -> CyclotomicNumber:
    if not L.is_admissible(params.k):
        return params.q * 0
    total = params.q * 0
    for sign, ratio in _sixj_terms(L):
        try:
            value = ratio.evaluate(params.v)
        except ZeroDivisionError as exc:
            raise ArithmeticError(f"6j summand for {L.as_tuple()} has a pole at level {params.k}") from exc
        total = total - value if sign % 2 else total + value
    return total


class SixJTable:
    """Lazily filled table of 6j symbols for one monoidal category C_{k,m}."""

    def __init__(self, params: CategoryParams):
        self.params = CategoryParams(params.k, params.m, 1)
        self._values: dict[tuple[int, ...], CyclotomicNumber] = {}

    def __getitem__(self, L) -> CyclotomicNumber:
        L = _labels(L)
        key = L.as_tuple()
        val = self._values.get(key)
        if val is None:
            val = _six_j_formula(self.params, L)
            self._values[key] = val
        return val

    def __call__(self, *labels) -> CyclotomicNumber:
        return self[labels[0] if len(labels) == 1 else labels]

    def fill(self) -> SixJTable:
        for L in admissible_sixj_labels(self.params.k):
            self[L]
        return self

    def items(self) -> list[tuple[tuple[int, ...], CyclotomicNumber]]:
        self.fill()
        return sorted(
            (key, val) for key, val in self._values.items() if SixJLabels(*key).is_admissible(self.params.k)
        )

    def perturbed(self, labels, delta=1) -> dict[tuple[int, ...], CyclotomicNumber]:
        """A copy of the filled table with one entry shifted (for fault-injection tests)."""
        values = dict(self.items())
        key = _labels(labels).as_tuple()
        values[key] = values[key] + delta
        return values


@functools.lru_cache(maxsize=None)
def sixj_table(k: int, m: int) -> SixJTable:
    return SixJTable(CategoryParams(k, m))


def six_j(params: CategoryParams, L, *rest) -> CyclotomicNumber:
    """``{a b e; c d f}``, from cached tables; 0 if a vertex triple is not admissible.

    Call as ``six_j(params, SixJLabels(...))`` or ``six_j(params, a, b, e, c, d, f)``.
    """
    if rest:
        L = (L,) + rest
    return sixj_table(params.k, params.m)[L]


def admissible_sixj_labels(k: int) -> list[SixJLabels]:
    """Every label tuple whose four vertex triples are admissible at level ``k``."""
    out = []
    r = range(k + 1)
    for a, d in itertools.product(r, r):
        for e in r:
            if not is_admissible(a, d, e, k):
                continue
            for b, c in itertools.product(r, r):
                if not is_admissible(b, c, e, k):
                    continue
                for f in r:
                    if is_admissible(a, b, f, k) and is_admissible(c, d, f, k):
                        out.append(SixJLabels(a, b, e, c, d, f))
    return out


# ---------------------------------------------------------------------------
# Consistency checks
# ---------------------------------------------------------------------------


@dataclass
class PentagonReport:
    passed: bool
    checked: int
    failures: list[dict] = field(default_factory=list)

    def __bool__(self):
        return self.passed


def _lookup(values) -> Callable[[tuple[int, ...]], object]:
    if isinstance(values, SixJTable):
        return lambda key: values[key]
    if isinstance(values, Mapping):
        zero = next(iter(values.values())) * 0 if values else 0
        return lambda key: values.get(key, zero)
    return values


def pentagon_check(params: CategoryParams, values=None, max_failures: int = 10) -> PentagonReport:
    """Check the Biedenharn-Elliott identity over all boundary labels at level ``k``.

    Five boundary labels ``L0 .. L4`` sit counterclockwise on a disk.  Going from the
    tree that isolates ``{L1, L2}`` and ``{L3, L4}`` to the one that isolates
    ``{L2, L3}`` and ``{L4, L0}`` takes two moves one way and three the other:

        F(x0,L0,e1; L4,L3,y0) F(e1,L3,e2; L2,L1,x0)
            = sum_g F(L2,L1,g; L0,y0,x0) F(L4,L3,e2; L2,g,y0) F(L1,L0,e1; L4,e2,g)

    ``values`` may be a :class:`SixJTable`, a mapping from label tuples, or a callable.
    """
    k = params.k
    F = _lookup(values if values is not None else sixj_table(k, params.m))
    ok = functools.partial(is_admissible, k=k)
    r = range(k + 1)
    checked = 0
    failures: list[dict] = []
    for L0, L1, L2, L3, L4 in itertools.product(r, repeat=5):
        starts = [
            (x0, y0)
            for x0 in r
            if ok(L1, L2, x0)
            for y0 in r
            if ok(L3, L4, y0) and ok(x0, y0, L0)
        ]
        if not starts:
            continue
        ends = [
            (e1, e2)
            for e2 in r
            if ok(L2, L3, e2)
            for e1 in r
            if ok(L4, L0, e1) and ok(e2, e1, L1)
        ]
        for x0, y0 in starts:
            for e1, e2 in ends:
                lhs = F((x0, L0, e1, L4, L3, y0)) * F((e1, L3, e2, L2, L1, x0))
                rhs = 0
                for g in r:
                    t1 = F((L2, L1, g, L0, y0, x0))
                    if not t1:
                        continue
                    t2 = F((L4, L3, e2, L2, g, y0))
                    if not t2:
                        continue
                    rhs = rhs + t1 * t2 * F((L1, L0, e1, L4, e2, g))
                checked += 1
                if lhs != rhs:
                    failures.append(
                        {"boundary": (L0, L1, L2, L3, L4), "start": (x0, y0), "end": (e1, e2)}
                    )
                    if len(failures) >= max_failures:
                        return PentagonReport(False, checked, failures)
    return PentagonReport(not failures, checked, failures)


def orthogonality_check(params: CategoryParams, values=None) -> PentagonReport:
    """``sum_e {a b e; c d f} {d a f'; b c e} = [f = f']`` for all boundary labels."""
    k = params.k
    F = _lookup(values if values is not None else sixj_table(k, params.m))
    r = range(k + 1)
    checked = 0
    failures: list[dict] = []
    for a, b, c, d in itertools.product(r, repeat=4):
        fs = [f for f in r if is_admissible(a, b, f, k) and is_admissible(c, d, f, k)]
        es = [e for e in r if is_admissible(a, d, e, k) and is_admissible(b, c, e, k)]
        for f in fs:
            for f2 in fs:
                total = 0
                for e in es:
                    total = total + F((a, b, e, c, d, f)) * F((d, a, f2, b, c, e))
                checked += 1
                if total != (1 if f == f2 else 0):
                    failures.append({"boundary": (a, b, c, d), "f": f, "f2": f2})
    return PentagonReport(not failures, checked, failures)


# ---------------------------------------------------------------------------
# Independent evaluations through the strand representation
# ---------------------------------------------------------------------------


ORACLE_MAX_LEVEL = 8


def _oracle_rep(params: CategoryParams):
    # loop value delta for "+" and -delta for "-"
    return strand_representation(params.q if params.pivotal == 1 else -params.q)


def theta_oracle(params: CategoryParams, a: int, b: int, c: int) -> CyclotomicNumber:
    """Theta network evaluated from projector-capped vertices."""
    if not is_admissible(a, b, c, params.k):
        return params.q * 0
    return theta_value(_oracle_rep(params), a, b, c)


@functools.lru_cache(maxsize=None)
def _oracle_block(k: int, m: int, a: int, b: int, c: int, d: int):
    params = CategoryParams(k, m)
    return sixj_block(strand_representation(params.q), k, a, b, c, d)


def sixj_oracle(params: CategoryParams, L, *rest) -> CyclotomicNumber:
    """6j symbol obtained by solving the change of basis between H- and I-shaped vertex pairs."""
    if rest:
        L = (L,) + rest
    L = _labels(L)
    if params.k > ORACLE_MAX_LEVEL:
        raise ValueError(f"the network oracle is limited to k <= {ORACLE_MAX_LEVEL}")
    if not L.is_admissible(params.k):
        return params.q * 0
    block = _oracle_block(params.k, params.m, L.a, L.b, L.c, L.d)
    return block[(L.e, L.f)]
