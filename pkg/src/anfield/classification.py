"""Enumeration of the categories with A_{k+1} fusion rules and their classification tables.

Tables are stored as data.  Wherever a table has a computable counterpart (invertible
subcategories, conductors, modularity, Galois orbits) the computation lives alongside
it so the two can be compared.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from anfield.cyclotomic import CyclotomicNumber
from anfield.fusion import CategoryParams, qdim
from anfield.modular import BraidingParams, braided_labels, galois_orbits, is_modular, twist

__all__ = [
    "A2Name",
    "A2_CATEGORIES",
    "BraidedCategory",
    "enumerate_monoidal",
    "enumerate_braided",
    "monoidal_equiv",
    "monoidal_classes",
    "monoidal_galois_orbits",
    "UnreachableCellError",
    "invertible_subcategory_table",
    "invertible_subcategory_twist",
    "invertible_subcategory",
    "autoequivalence_groups",
    "AlgebraObject",
    "algebra_objects",
    "CentreAtom",
    "CentreExpr",
    "drinfeld_centre",
    "DaggerDescriptor",
    "PivotalDescriptor",
    "pivotal_and_dagger_descriptors",
    "classification_record",
]


class A2Name(str, enum.Enum):
    """The four braided categories with A_2 fusion rules."""

    REP_Z2 = "RepZ2"
    SVEC = "sVec"
    SEM = "Sem"
    SEM_BAR = "SemBar"

    def __str__(self) -> str:
        return self.value


# Both values of l (mod 12) realising each A_2 category at k = 1.
A2_CATEGORIES: dict[A2Name, tuple[int, int]] = {
    A2Name.REP_Z2: (7, 11),
    A2Name.SVEC: (1, 5),
    A2Name.SEM: (4, 8),
    A2Name.SEM_BAR: (2, 10),
}


def _a2_name(ell: int) -> A2Name:
    ell %= 12
    for name, ells in A2_CATEGORIES.items():
        if ell in ells:
            return name
    raise ValueError(f"l = {ell} does not define a braided category at k = 1")


@dataclass(frozen=True)
class BraidedCategory:
    """One braided category: its parameter(s) ``l`` and, at ``k = 1``, its name."""

    k: int
    ells: tuple[int, ...]
    name: A2Name | None = None

    @property
    def ell(self) -> int:
        return self.ells[0]

    def params(self, pivotal=1) -> BraidingParams:
        return BraidingParams(self.k, self.ell, pivotal)


def enumerate_monoidal(k: int) -> list[tuple[int, CyclotomicNumber]]:
    """``(m, q + q^-1)`` for every ``m`` in ``1 .. k+1`` coprime to ``k + 2``."""
    if k < 1:
        raise ValueError(f"level k must be at least 1, got {k}")
    return [(m, CategoryParams(k, m).delta) for m in range(1, k + 2) if math.gcd(m, k + 2) == 1]


def enumerate_braided(k: int) -> list[BraidedCategory]:
    """All braided categories at level ``k``; at ``k = 1`` the four named A_2 categories."""
    if k < 1:
        raise ValueError(f"level k must be at least 1, got {k}")
    if k == 1:
        return [BraidedCategory(1, ells, name) for name, ells in A2_CATEGORIES.items()]
    return [BraidedCategory(k, (ell,)) for ell in braided_labels(k)]


def monoidal_equiv(k: int, ell1: int, ell2: int) -> bool:
    """Whether two braided categories share a monoidal category: ``l1 = +/- l2 mod 2(k+2)``."""
    BraidingParams(k, ell1), BraidingParams(k, ell2)  # validate
    n = 2 * (k + 2)
    return (ell1 - ell2) % n == 0 or (ell1 + ell2) % n == 0


def monoidal_classes(k: int) -> list[list[BraidedCategory]]:
    """Group :func:`enumerate_braided` by underlying monoidal category."""
    classes: list[list[BraidedCategory]] = []
    for cat in enumerate_braided(k):
        for cls in classes:
            if monoidal_equiv(k, cls[0].ell, cat.ell):
                cls.append(cat)
                break
        else:
            classes.append([cat])
    return classes


def monoidal_galois_orbits(k: int) -> list[tuple[int, ...]]:
    """Galois orbits of the monoidal parameters ``m`` under ``q -> q^j``."""
    n = 2 * (k + 2)
    units = [j for j in range(1, n) if math.gcd(j, n) == 1]
    remaining = {m for m, _ in enumerate_monoidal(k)}
    orbits = []
    while remaining:
        start = min(remaining)
        orbit = set()
        for j in units:
            r = (j * start) % n
            orbit.add(r if r < k + 2 else n - r)
        orbits.append(tuple(sorted(orbit)))
        remaining -= orbit
    return orbits


# ---------------------------------------------------------------------------
# Invertible objects
# ---------------------------------------------------------------------------


class UnreachableCellError(RuntimeError):
    """A (k mod 4, l mod 4) cell that coprimality rules out was reached."""


_R, _S, _M, _B = A2Name.REP_Z2, A2Name.SVEC, A2Name.SEM, A2Name.SEM_BAR

# rows: l mod 4; columns: k mod 4; None marks the cells excluded by gcd(l, k+2) = 1
_INVERTIBLE_TABLE: dict[int, tuple[A2Name | None, ...]] = {
    0: (None, _M, None, _M),
    1: (_R, _S, _S, _R),
    2: (None, _B, None, _B),
    3: (_R, _R, _S, _S),
}


def invertible_subcategory_table(k: int, ell: int) -> A2Name:
    """Braided type of ``{X_0, X_k}`` read from the (k mod 4, l mod 4) table."""
    BraidingParams(k, ell)
    cell = _INVERTIBLE_TABLE[ell % 4][k % 4]
    if cell is None:
        raise UnreachableCellError(f"cell (k = {k % 4}, l = {ell % 4}) mod 4 should be unreachable")
    return cell


def _unit_dimension_twist(bp: BraidingParams) -> CyclotomicNumber:
    """Twist of ``X_k`` under the pivotal structure that gives it dimension +1."""
    k = bp.k
    plus = BraidingParams(k, bp.ell, 1)
    pivotal = 1 if qdim(plus.category, k) == 1 else -1
    return twist(BraidingParams(k, bp.ell, pivotal), k)


def _a2_reference_twists() -> dict[A2Name, CyclotomicNumber]:
    return {name: _unit_dimension_twist(BraidingParams(1, ells[0])) for name, ells in A2_CATEGORIES.items()}


def invertible_subcategory_twist(k: int, ell: int) -> A2Name:
    """Identify ``{X_0, X_k}`` by comparing the twist of ``X_k`` with the A_2 twists.

    Pivotal structures are chosen so the invertible object has dimension +1 on both
    sides; the twists of RepZ2, sVec, Sem and SemBar are then 1, -1, -i and i.
    """
    value = _unit_dimension_twist(BraidingParams(k, ell))
    for name, ref in _a2_reference_twists().items():
        if value == ref:
            return name
    raise ArithmeticError(f"twist {value!r} of X_{k} matches no A_2 category")


def invertible_subcategory(k: int, ell: int) -> A2Name:
    """Table lookup, cross-checked against the twist computation."""
    by_table = invertible_subcategory_table(k, ell)
    by_twist = invertible_subcategory_twist(k, ell)
    if by_table != by_twist:
        raise ArithmeticError(f"(k, l) = ({k}, {ell}): table says {by_table}, twist says {by_twist}")
    return by_table


# ---------------------------------------------------------------------------
# Static tables
# ---------------------------------------------------------------------------

_AUTO_TABLE = {0: ("Z/2Z", "trivial"), 1: ("trivial", "trivial"), 2: ("Z/2Z", "Z/2Z"), 3: ("trivial", "trivial")}


def autoequivalence_groups(k: int) -> tuple[str, str]:
    """``(tensor auto-equivalences of C_{k,m}, braided auto-equivalences of C^br_{k,l})``."""
    if k < 1:
        raise ValueError(f"level k must be at least 1, got {k}")
    if k <= 2:
        return ("trivial", "trivial")
    return _AUTO_TABLE[k % 4]


@dataclass(frozen=True)
class AlgebraObject:
    """A simple algebra object ``A`` (sum of the listed simples) and its module category."""

    summands: tuple[int, ...]
    module_category: str
    commutativity: str

    def commutative_in(self, k: int, ell: int) -> bool:
        """Whether ``A`` is commutative in the braided category C^br_{k,l}."""
        rule = self.commutativity
        if rule == "always":
            return True
        if rule == "never":
            return False
        if rule == "k = 0 mod 4":
            return k % 4 == 0
        if rule == "k*l = 3 mod 4":
            return (k * ell) % 4 == 3
        raise ValueError(f"unknown commutativity rule {rule!r}")

    def describe(self) -> str:
        return " + ".join("1" if x == 0 else f"f^({x})" for x in self.summands)


def algebra_objects(k: int, m: int | None = None) -> list[AlgebraObject]:
    """Non-trivial simple algebra objects of C_{k,m}.

    The T-type row needs ``m`` odd; when ``m`` is omitted it is listed for every odd ``k``.
    """
    if k < 1:
        raise ValueError(f"level k must be at least 1, got {k}")
    rows = []
    if k % 2 == 0:
        rows.append(AlgebraObject((0, k), f"D_{k // 2 + 2}", "k = 0 mod 4"))
    elif m is None or m % 2 == 1:
        rows.append(AlgebraObject((0, k), f"T_{(k + 1) // 2}", "k*l = 3 mod 4"))
    if k == 10:
        rows.append(AlgebraObject((0, 6), "E_6", "always"))
    if k == 16:
        rows.append(AlgebraObject((0, 8, 16), "E_7", "never"))
    if k == 28:
        rows.append(AlgebraObject((0, 10, 18, 28), "E_8", "always"))
    return rows


@dataclass(frozen=True)
class CentreAtom:
    """A factor of a Drinfeld centre: ``kind`` is one of
    ``C_br``, ``C_br_rev``, ``Ad_C_br``, ``Ad_C_br_rev``, ``Z_Vec_Z2``."""

    kind: str
    k: int | None = None
    m: int | None = None

    def __str__(self) -> str:
        base = {
            "C_br": "C^br_{{{k},{m}}}",
            "C_br_rev": "C^br_{{{k},{m}}}^rev",
            "Ad_C_br": "Ad(C^br_{{{k},{m}}})",
            "Ad_C_br_rev": "Ad(C^br_{{{k},{m}}})^rev",
            "Z_Vec_Z2": "Z(Vec(Z/2Z))",
        }[self.kind]
        return base.format(k=self.k, m=self.m)


@dataclass(frozen=True)
class CentreExpr:
    """A Deligne product of centre atoms."""

    factors: tuple[CentreAtom, ...]

    def __str__(self) -> str:
        return " [x] ".join(str(f) for f in self.factors)

    def to_json(self) -> dict:
        return {
            "expression": str(self),
            "factors": [{"kind": f.kind, "k": f.k, "m": f.m} for f in self.factors],
        }


def drinfeld_centre(k: int, m: int) -> CentreExpr:
    """Drinfeld centre of C_{k,m} as a product expression."""
    params = CategoryParams(k, m)
    k, m = params.k, params.m
    if k % 2 == 0 or m % 2 == 0:
        return CentreExpr((CentreAtom("C_br", k, m), CentreAtom("C_br_rev", k, m)))
    return CentreExpr(
        (CentreAtom("Ad_C_br", k, m), CentreAtom("Ad_C_br_rev", k, m), CentreAtom("Z_Vec_Z2"))
    )


@dataclass(frozen=True)
class DaggerDescriptor:
    base: str = "conjugate-linear reflection in a horizontal line"
    family: str = "phi -> lambda^((n-m)/2) phi^dagger for phi: X^n -> X^m, lambda a nonzero real"
    classified: bool = False


@dataclass(frozen=True)
class PivotalDescriptor:
    pivotal_structures: int
    signs: tuple[str, ...]
    spherical: bool
    dagger: DaggerDescriptor
    equivariantisation_depth: int | None


def pivotal_and_dagger_descriptors(k: int, m: int) -> PivotalDescriptor:
    CategoryParams(k, m)
    depth = k // 2 + 1 if k % 2 == 0 and k >= 4 else None
    return PivotalDescriptor(2, ("+", "-"), True, DaggerDescriptor(), depth)


# ---------------------------------------------------------------------------
# Full record
# ---------------------------------------------------------------------------


def classification_record(k: int) -> dict:
    """Everything known about level ``k`` as plain data (used by the command line)."""
    monoidal = []
    for m, delta in enumerate_monoidal(k):
        monoidal.append(
            {
                "m": m,
                "delta": delta,
                "centre": drinfeld_centre(k, m).to_json(),
                "algebra_objects": [
                    {"object": a.describe(), "module_category": a.module_category, "commutative_when": a.commutativity}
                    for a in algebra_objects(k, m)
                ],
                "pivotal": pivotal_and_dagger_descriptors(k, m),
            }
        )
    braided = []
    for cat in enumerate_braided(k):
        bp = cat.params()
        braided.append(
            {
                "ell": list(cat.ells),
                "name": str(cat.name) if cat.name else None,
                "m": bp.m,
                "invertible_subcategory": str(invertible_subcategory(k, cat.ell)),
                "modular": is_modular(bp),
            }
        )
    classes = [[c.ells[0] for c in cls] for cls in monoidal_classes(k)]
    tensor_aut, braided_aut = autoequivalence_groups(k)
    return {
        "k": k,
        "monoidal": monoidal,
        "braided": braided,
        "monoidal_classes": classes,
        "galois_orbits": [list(o) for o in galois_orbits(k)],
        "monoidal_galois_orbits": [list(o) for o in monoidal_galois_orbits(k)],
        "autoequivalences": {"tensor": tensor_aut, "braided": braided_aut},
    }
