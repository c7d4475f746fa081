"""Braiding-dependent data of C^br_{k,l,+/-}: R coefficients, S and T matrices, conductors.

The braided category with parameter ``l`` (``gcd(l, k+2) = 1``, read mod ``4(k+2)``) has
``s = zeta_{4(k+2)}^(l+k+2)``, i.e. ``s = i * exp(l pi i / (2(k+2)))``.  Its loop value
``-s^2 - s^-2 = 2 cos(l pi / (k+2))`` pins down the underlying monoidal category
C_{k,m}; :attr:`BraidingParams.m` is the representative of that class in ``1 .. k+1``.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

from anfield.cyclotomic import CyclotomicNumber, root_of_unity
from anfield.exact_linalg import bareiss_rank, matmul
from anfield.fusion import CategoryParams, _sign, fusion_multiplicity, is_admissible

__all__ = [
    "BraidingParams",
    "ModularMatrices",
    "s_param",
    "r_coeff",
    "s_matrix",
    "t_matrix",
    "modular_matrices",
    "twist",
    "modularity_rank",
    "is_modular",
    "conductor",
    "conductor_formula",
    "VerlindeReport",
    "verlinde_check",
    "galois_conjugate",
    "galois_orbits",
    "braided_labels",
]


def _check_ell(k: int, ell: int) -> int:
    if k < 1:
        raise ValueError(f"level k must be at least 1, got {k}")
    ell %= 4 * (k + 2)
    if math.gcd(ell, k + 2) != 1:
        raise ValueError(f"l = {ell} is not coprime to k + 2 = {k + 2}")
    return ell


@dataclass(frozen=True)
class BraidingParams:
    """Parameters of the ribbon category C^br_{k,l,pivotal}; ``l`` is stored mod ``4(k+2)``."""

    k: int
    ell: int
    pivotal: int = 1

    def __post_init__(self):
        object.__setattr__(self, "ell", _check_ell(self.k, self.ell))
        object.__setattr__(self, "pivotal", _sign(self.pivotal))

    @property
    def _s_exponent(self) -> int:
        return self.ell + self.k + 2

    @functools.cached_property
    def s(self) -> CyclotomicNumber:
        return root_of_unity(4 * (self.k + 2), self._s_exponent)

    @functools.cached_property
    def v(self) -> CyclotomicNumber:
        """``s^2`` as an element of Q(zeta_{2(k+2)})."""
        return root_of_unity(2 * (self.k + 2), self._s_exponent)

    @functools.cached_property
    def delta(self) -> CyclotomicNumber:
        return -self.v - self.v.inverse()

    @property
    def m(self) -> int:
        """Monoidal class representative in ``1 .. k+1`` with ``q + q^-1 = -s^2 - s^-2``."""
        r = self.ell % (2 * (self.k + 2))
        return r if r < self.k + 2 else 2 * (self.k + 2) - r

    @property
    def literal_m(self) -> int:
        """``l mod (k+2)``; its ``q`` satisfies ``s^2 = q_sign * q``."""
        return self.ell % (self.k + 2)

    @property
    def q_sign(self) -> int:
        """Sign relating ``s^2`` to the literal ``q = zeta_{2(k+2)}^(l mod (k+2))``."""
        j = (self.ell % (2 * (self.k + 2))) // (self.k + 2)
        return -1 if j == 0 else 1

    @property
    def category(self) -> CategoryParams:
        return CategoryParams(self.k, self.m, self.pivotal)

    def _power_of_s(self, e: int) -> CyclotomicNumber:
        return root_of_unity(4 * (self.k + 2), e * self._s_exponent)

    def _bracket(self, n: int) -> CyclotomicNumber:
        """``[n] = (v^n - v^-n) / (v - v^-1)``."""
        big = 2 * (self.k + 2)
        e = self._s_exponent
        num = root_of_unity(big, n * e) - root_of_unity(big, -n * e)
        return num / (self.v - self.v.inverse())


def s_param(k: int, ell: int) -> CyclotomicNumber:
    """``s = zeta_{4(k+2)}^(l+k+2)``, the complete invariant of the braided category."""
    return BraidingParams(k, ell).s


def r_coeff(bp: BraidingParams, a: int, b: int, c: int) -> CyclotomicNumber:
    """Eigenvalue of the braiding ``X_a (x) X_b -> X_b (x) X_a`` on the ``X_c`` channel.

    ``(-1)^((a+b+c)/2) s^((c(c+2) - a(a+2) - b(b+2)) / 2)``; 0 when ``c`` is not a channel.
    """
    if not is_admissible(a, b, c, bp.k):
        return bp.s * 0
    e = (c * (c + 2) - a * (a + 2) - b * (b + 2)) // 2
    value = bp._power_of_s(e)
    return -value if ((a + b + c) // 2) % 2 else value


def s_matrix(bp: BraidingParams) -> list[list[CyclotomicNumber]]:
    """Unnormalized S-matrix ``S[a][b] = (-1)^(a+b) [(a+1)(b+1)]`` (``S[0][0] = 1``)."""
    k = bp.k
    out = []
    for a in range(k + 1):
        row = []
        for b in range(k + 1):
            val = bp._bracket((a + 1) * (b + 1))
            if bp.pivotal == 1 and (a + b) % 2:
                val = -val
            row.append(val)
        out.append(row)
    return out


def twist(bp: BraidingParams, a: int) -> CyclotomicNumber:
    """Ribbon twist of ``X_a``: ``(-1)^a s^(a(a+2))`` for ``+``, ``s^(a(a+2))`` for ``-``."""
    if not 0 <= a <= bp.k:
        raise ValueError(f"X_{a} is not a simple object at level {bp.k}")
    value = bp._power_of_s(a * (a + 2))
    return -value if bp.pivotal == 1 and a % 2 else value


def t_matrix(bp: BraidingParams) -> list[list[CyclotomicNumber]]:
    zero = bp.s * 0
    k = bp.k
    return [[twist(bp, a) if a == b else zero for b in range(k + 1)] for a in range(k + 1)]


@dataclass(frozen=True)
class ModularMatrices:
    S: list
    T: list


def modular_matrices(bp: BraidingParams) -> ModularMatrices:
    return ModularMatrices(s_matrix(bp), t_matrix(bp))


def modularity_rank(bp: BraidingParams) -> int:
    """Exact rank of the S-matrix (fraction-free elimination over Q(zeta))."""
    return bareiss_rank(s_matrix(bp))


def is_modular(bp: BraidingParams) -> bool:
    return modularity_rank(bp) == bp.k + 1


def conductor(bp: BraidingParams) -> int:
    """Order of T: the lcm of the multiplicative orders of the twists."""
    n = 1
    for a in range(bp.k + 1):
        order = twist(bp, a).multiplicative_order()
        n = n * order // math.gcd(n, order)
    return n


def conductor_formula(k: int, ell: int) -> int:
    """Conductor of the ``+`` ribbon structure by the residue of ``k + l`` mod 4.

    ``0 -> k+2``, ``2 -> 2(k+2)``, odd ``-> 4(k+2)``; at ``k = 1`` the four categories
    RepZ2, sVec, Sem, SemBar have conductors 1, 2, 4, 4.
    """
    ell = _check_ell(k, ell)
    if k == 1:
        return {7: 1, 11: 1, 1: 2, 5: 2}.get(ell, 4)
    r = (k + ell) % 4
    return {0: k + 2, 2: 2 * (k + 2)}.get(r, 4 * (k + 2))


@dataclass
class VerlindeReport:
    passed: bool
    checked: int
    failures: list[dict] = field(default_factory=list)

    def __bool__(self):
        return self.passed


def verlinde_check(bp: BraidingParams, S: list[list[CyclotomicNumber]] | None = None) -> VerlindeReport:
    """Recover every fusion multiplicity from the S-matrix via the Verlinde formula.

    ``N_ab^c = (1/D^2) sum_x S[a][x] S[b][x] conj(S[c][x]) / S[0][x]``.  Only meaningful for
    modular data; raises ValueError otherwise.  ``S`` overrides the computed matrix.
    """
    if not is_modular(bp):
        raise ValueError(f"C^br_({bp.k},{bp.ell}) is not modular")
    if S is None:
        S = s_matrix(bp)
    k = bp.k
    dim2 = sum((S[0][x] * S[0][x] for x in range(k + 1)), bp.v * 0)
    inv0 = [1 / S[0][x] for x in range(k + 1)]
    conj = [[S[c][x].conjugate() for x in range(k + 1)] for c in range(k + 1)]
    inv_dim2 = 1 / dim2
    failures = []
    checked = 0
    for a in range(k + 1):
        for b in range(a, k + 1):
            ab = [S[a][x] * S[b][x] * inv0[x] for x in range(k + 1)]
            for c in range(k + 1):
                total = bp.v * 0
                for x in range(k + 1):
                    total = total + ab[x] * conj[c][x]
                value = total * inv_dim2
                checked += 1
                if value != fusion_multiplicity(k, a, b, c):
                    failures.append({"a": a, "b": b, "c": c, "value": value})
    return VerlindeReport(not failures, checked, failures)


def galois_conjugate(bp: BraidingParams, j: int) -> BraidingParams:
    """Apply ``s -> s^j`` (``gcd(j, 4(k+2)) = 1``), returning the conjugate category's parameters."""
    big = 4 * (bp.k + 2)
    if math.gcd(j, big) != 1:
        raise ValueError(f"{j} is not a unit modulo {big}")
    ell = (j * bp._s_exponent - (bp.k + 2)) % big
    return BraidingParams(bp.k, ell, bp.pivotal)


def braided_labels(k: int) -> list[int]:
    """All ``l`` in ``0 .. 4(k+2)-1`` with ``gcd(l, k+2) = 1``."""
    return [ell for ell in range(4 * (k + 2)) if math.gcd(ell, k + 2) == 1]


def galois_orbits(k: int) -> list[tuple[int, ...]]:
    """Partition of the braided parameters ``l`` into Galois orbits."""
    big = 4 * (k + 2)
    units = [j for j in range(1, big) if math.gcd(j, big) == 1]
    remaining = set(braided_labels(k))
    orbits = []
    while remaining:
        start = min(remaining)
        bp = BraidingParams(k, start)
        orbit = {galois_conjugate(bp, j).ell for j in units}
        orbits.append(tuple(sorted(orbit)))
        remaining -= orbit
    return orbits
