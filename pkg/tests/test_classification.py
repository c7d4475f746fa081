from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anfield.classification import (
    A2_CATEGORIES,
    A2Name,
    algebra_objects,
    autoequivalence_groups,
    classification_record,
    drinfeld_centre,
    enumerate_braided,
    enumerate_monoidal,
    invertible_subcategory,
    invertible_subcategory_table,
    invertible_subcategory_twist,
    monoidal_classes,
    monoidal_equiv,
    monoidal_galois_orbits,
    pivotal_and_dagger_descriptors,
)
from anfield.cyclotomic import euler_phi
from anfield.modular import BraidingParams, braided_labels, galois_orbits, is_modular


@pytest.mark.parametrize("k, ms", [(1, [1, 2]), (2, [1, 3]), (3, [1, 2, 3, 4]), (4, [1, 5])])
def test_enumerate_monoidal(k, ms):
    assert [m for m, _ in enumerate_monoidal(k)] == ms


@pytest.mark.parametrize("k", range(1, 16))
def test_loop_value_is_a_complete_invariant(k):
    entries = enumerate_monoidal(k)
    assert len(entries) == euler_phi(k + 2)
    assert len({delta for _, delta in entries}) == len(entries)


def test_enumerate_braided_examples():
    assert [c.ell for c in enumerate_braided(2)] == [1, 3, 5, 7, 9, 11, 13, 15]
    assert len(enumerate_braided(3)) == 16
    named = {c.name: c.ells for c in enumerate_braided(1)}
    assert named == A2_CATEGORIES
    with pytest.raises(ValueError):
        enumerate_braided(0)


def test_a2_pairs_share_their_invariants():
    for name, ells in A2_CATEGORIES.items():
        for ell in ells:
            assert invertible_subcategory_twist(1, ell) == name
    assert len({BraidingParams(1, ells[0]).s for ells in A2_CATEGORIES.values()}) == 4


def test_monoidal_equiv_examples():
    assert monoidal_equiv(3, 1, 9)
    assert not monoidal_equiv(3, 1, 3)
    assert monoidal_equiv(3, 1, 11)


@pytest.mark.parametrize("k", range(1, 10))
def test_monoidal_classes(k):
    classes = monoidal_classes(k)
    assert len(classes) == euler_phi(k + 2)
    sizes = {len(c) for c in classes}
    assert sizes == ({2} if k == 1 else {4})
    for cls in classes:
        ms = {c.params().m for c in cls}
        assert len(ms) == 1


@pytest.mark.parametrize(
    "k, ell, expected",
    [(2, 1, A2Name.SVEC), (3, 4, A2Name.SEM), (4, 1, A2Name.REP_Z2), (8, 3, A2Name.REP_Z2), (1, 2, A2Name.SEM_BAR), (5, 3, A2Name.REP_Z2)],
)
def test_invertible_subcategory_examples(k, ell, expected):
    assert invertible_subcategory(k, ell) == expected


def test_invertible_table_unreachable_cells():
    # k even forces l odd, so the (k even, l even) cells are never reached through valid input
    with pytest.raises(ValueError):
        invertible_subcategory_table(2, 2)


@given(st.integers(1, 16).flatmap(lambda k: st.tuples(st.just(k), st.sampled_from(braided_labels(k)))))
@settings(max_examples=80, deadline=None)
def test_invertible_table_matches_twist(t):
    k, ell = t
    assert invertible_subcategory_table(k, ell) == invertible_subcategory_twist(k, ell)


@pytest.mark.parametrize(
    "k, groups",
    [(1, ("trivial", "trivial")), (2, ("trivial", "trivial")), (4, ("Z/2Z", "trivial")), (5, ("trivial", "trivial")), (6, ("Z/2Z", "Z/2Z")), (7, ("trivial", "trivial"))],
)
def test_autoequivalences(k, groups):
    assert autoequivalence_groups(k) == groups


def test_algebra_objects_examples():
    (d4,) = algebra_objects(4)
    assert d4.summands == (0, 4) and d4.module_category == "D_4"
    assert d4.commutative_in(4, 1)
    e6 = [a for a in algebra_objects(10) if a.module_category == "E_6"]
    assert e6 and e6[0].summands == (0, 6) and e6[0].commutative_in(10, 1)
    e8 = [a for a in algebra_objects(28) if a.module_category == "E_8"]
    assert e8[0].summands == (0, 10, 18, 28)
    e7 = [a for a in algebra_objects(16) if a.module_category == "E_7"]
    assert not e7[0].commutative_in(16, 1)
    assert algebra_objects(3, 2) == []
    (t2,) = algebra_objects(3, 1)
    assert t2.module_category == "T_2"
    assert t2.commutative_in(3, 1) and not t2.commutative_in(3, 3)
    assert not algebra_objects(6)[0].commutative_in(6, 1)


def test_drinfeld_centre_examples():
    assert [f.kind for f in drinfeld_centre(2, 1).factors] == ["C_br", "C_br_rev"]
    assert [f.kind for f in drinfeld_centre(3, 1).factors] == ["Ad_C_br", "Ad_C_br_rev", "Z_Vec_Z2"]
    assert [f.kind for f in drinfeld_centre(3, 2).factors] == ["C_br", "C_br_rev"]
    assert "Z(Vec(Z/2Z))" in str(drinfeld_centre(5, 3))
    assert drinfeld_centre(3, 1).to_json()["expression"] == str(drinfeld_centre(3, 1))


@pytest.mark.parametrize("k, m", [(1, 1), (2, 3), (6, 1), (7, 4)])
def test_pivotal_descriptors(k, m):
    desc = pivotal_and_dagger_descriptors(k, m)
    assert desc.pivotal_structures == 2 and desc.spherical
    assert desc.equivariantisation_depth == (4 if k == 6 else None)


@pytest.mark.parametrize("k", range(2, 10))
def test_galois_orbits_match_summary(k):
    orbits = [set(o) for o in galois_orbits(k)]
    labels = braided_labels(k)
    if k % 2 == 0:
        assert orbits == [set(labels)]
    else:
        expected = [
            {x for x in labels if x % 4 == 1},
            {x for x in labels if x % 2 == 0},
            {x for x in labels if x % 4 == 3},
        ]
        assert sorted(map(sorted, orbits)) == sorted(map(sorted, expected))
    for orbit in orbits:
        # modularity is a Galois invariant
        assert len({is_modular(BraidingParams(k, ell)) for ell in orbit}) == 1


@pytest.mark.parametrize("k", range(1, 10))
def test_monoidal_galois_orbits_partition(k):
    orbits = monoidal_galois_orbits(k)
    flat = sorted(m for o in orbits for m in o)
    assert flat == [m for m in range(1, k + 2) if math.gcd(m, k + 2) == 1]
    if k % 2 == 0:
        assert len(orbits) == 1


def test_classification_record_shape():
    record = classification_record(1)
    assert [b["name"] for b in record["braided"]] == ["RepZ2", "sVec", "Sem", "SemBar"]
    assert record["autoequivalences"] == {"tensor": "trivial", "braided": "trivial"}
    assert len(record["monoidal"]) == 2
