from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anfield.cyclotomic import quantum_integer
from anfield.fusion import (
    AdmissibleTriple,
    CategoryParams,
    SixJLabels,
    admissible_sixj_labels,
    fuse,
    fusion_multiplicity,
    global_dim,
    is_admissible,
    orthogonality_check,
    pentagon_check,
    qdim,
    six_j,
    sixj_oracle,
    sixj_table,
    theta_oracle,
    theta_symbol,
)


def categories(max_k: int = 6):
    return st.integers(1, max_k).flatmap(
        lambda k: st.tuples(
            st.just(k),
            st.sampled_from([m for m in range(1, k + 2) if math.gcd(m, k + 2) == 1]),
            st.sampled_from([1, -1]),
        )
    ).map(lambda t: CategoryParams(*t))


# -- parameters and fusion rules ----------------------------------------------


def test_params_normalise_m_and_reject_bad_input():
    assert CategoryParams(3, 7).m == 2
    assert CategoryParams(2, 1, "-").pivotal == -1
    with pytest.raises(ValueError):
        CategoryParams(4, 2)
    with pytest.raises(ValueError):
        CategoryParams(0)
    with pytest.raises(ValueError):
        CategoryParams(2, 1, "x")


@pytest.mark.parametrize(
    "k, i, j, expected",
    [(2, 1, 1, [0, 2]), (5, 1, 1, [0, 2]), (3, 3, 1, [2]), (6, 6, 1, [5]), (3, 2, 2, [0, 2]), (4, 2, 3, [1, 3])],
)
def test_fuse(k, i, j, expected):
    assert fuse(k, i, j) == expected


@given(st.integers(1, 10).flatmap(lambda k: st.tuples(st.just(k), *(st.integers(0, k),) * 3)))
def test_fusion_is_associative_and_commutative(t):
    k, a, b, c = t
    assert fuse(k, a, b) == fuse(k, b, a)
    left = sorted(z for y in fuse(k, a, b) for z in fuse(k, y, c))
    right = sorted(z for y in fuse(k, b, c) for z in fuse(k, a, y))
    assert left == right
    assert fusion_multiplicity(k, a, b, c) == int(c in fuse(k, a, b))


def test_admissibility():
    assert is_admissible(1, 1, 2)
    assert not is_admissible(1, 1, 1)
    assert not is_admissible(2, 2, 4, k=3)
    assert not is_admissible(3, 3, 4, k=4)
    assert AdmissibleTriple(3, 2, 1).is_admissible(3)
    assert (AdmissibleTriple(3, 2, 1).u, AdmissibleTriple(3, 2, 1).v, AdmissibleTriple(3, 2, 1).w) == (0, 1, 2)


# -- dimensions ---------------------------------------------------------------


def test_dimension_examples():
    p = CategoryParams(3, 1)
    assert qdim(p, 0) == 1
    assert qdim(p, 1) == p.delta
    assert qdim(CategoryParams(3, 1, -1), 1) == -p.delta
    with pytest.raises(ValueError):
        qdim(p, 4)


def test_global_dimension_examples():
    p = CategoryParams(1, 1)
    assert global_dim(p) == 2
    assert sum((qdim(p, n) ** 2 for n in p.simples()), p.q * 0) == 2
    p2 = CategoryParams(2, 1)
    assert global_dim(p2) == 4


@given(categories(12))
@settings(max_examples=40, deadline=None)
def test_global_dimension_is_sum_of_squares(p):
    assert global_dim(p) == sum((qdim(p, n) ** 2 for n in p.simples()), p.q * 0)


@given(categories(8))
@settings(max_examples=30, deadline=None)
def test_dimensions_are_a_fusion_character(p):
    for a in p.simples():
        for b in p.simples():
            total = sum((qdim(p, c) for c in fuse(p, a, b)), p.q * 0)
            assert qdim(p, a) * qdim(p, b) == total


# -- theta symbols ------------------------------------------------------------


@pytest.mark.parametrize("k, m", [(3, 1), (4, 5), (6, 3)])
def test_theta_examples(k, m):
    p = CategoryParams(k, m)
    for a in range(k + 1):
        assert theta_symbol(p, a, a, 0) == qdim(p, a)
    assert theta_symbol(p, 1, 1, 1) == 0
    assert theta_symbol(p, 1, 1, 2) == quantum_integer(3, p.s)
    assert theta_symbol(p, AdmissibleTriple(1, 1, 2)) == theta_symbol(p, 1, 1, 2)
    with pytest.raises(ValueError):
        theta_symbol(p, 1, 1, 1, strict=True)


@given(categories(6), st.data())
@settings(max_examples=40, deadline=None)
def test_theta_matches_oracle(p, data):
    a = data.draw(st.integers(0, p.k))
    b = data.draw(st.integers(0, p.k))
    c = data.draw(st.sampled_from(fuse(p, a, b)))
    assert theta_symbol(p, a, b, c) == theta_oracle(p, a, b, c)


def test_theta_pivotal_sign():
    plus, minus = CategoryParams(5, 3, 1), CategoryParams(5, 3, -1)
    for a in range(6):
        for b in range(6):
            for c in fuse(5, a, b):
                sign = -1 if ((a + b + c) // 2) % 2 else 1
                assert theta_symbol(minus, a, b, c) == sign * theta_symbol(plus, a, b, c)


# -- 6j symbols ---------------------------------------------------------------


def test_sixj_trivial_entries():
    p = CategoryParams(2, 1)
    assert six_j(p, 0, 0, 0, 0, 0, 0) == 1
    assert six_j(p, 1, 1, 1, 1, 1, 1) == 0  # inadmissible vertex
    assert six_j(p, SixJLabels(1, 1, 0, 1, 1, 0)) == sixj_oracle(p, 1, 1, 0, 1, 1, 0)
    assert six_j(p, 1, 1, 2, 1, 1, 2) == sixj_oracle(p, 1, 1, 2, 1, 1, 2)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_sixj_matches_oracle_exhaustively(k):
    for m in range(1, k + 2):
        if math.gcd(m, k + 2) != 1:
            continue
        p = CategoryParams(k, m)
        for L in admissible_sixj_labels(k):
            assert six_j(p, L) == sixj_oracle(p, L), L


def test_sixj_f_matrix_of_x1_cubed():
    # the 2x2 block of X_1^(x)3; values frozen from the strand-representation oracle at k = 6
    p = CategoryParams(6, 1)
    x = p.delta
    assert six_j(p, 1, 1, 0, 1, 1, 0) == 1 / x
    assert six_j(p, 1, 1, 0, 1, 1, 2) == 1 - 1 / (x * x)
    assert six_j(p, 1, 1, 2, 1, 1, 0) == 1
    assert six_j(p, 1, 1, 2, 1, 1, 2) == -1 / x


@given(categories(5), st.data())
@settings(max_examples=30, deadline=None)
def test_sixj_tetrahedral_symmetry(p, data):
    """The tetrahedral value is invariant under relabelling: check the column swap a<->c, b<->d."""
    labels = data.draw(st.sampled_from(admissible_sixj_labels(p.k)))
    a, b, e, c, d, f = labels.as_tuple()

    def tet(a, b, e, c, d, f):
        return six_j(p, a, b, e, c, d, f) * theta_symbol(p, a, d, e) * theta_symbol(p, b, c, e) / qdim(p, e)

    assert tet(a, b, e, c, d, f) == tet(c, d, e, a, b, f)


# -- consistency checks -------------------------------------------------------


@pytest.mark.parametrize("k, m", [(1, 1), (1, 2), (2, 1), (2, 3), (3, 1), (3, 2), (4, 1)])
def test_pentagon_and_orthogonality(k, m):
    p = CategoryParams(k, m)
    report = pentagon_check(p)
    assert report and report.checked > 0
    assert orthogonality_check(p)


@pytest.mark.parametrize("labels", [(1, 1, 0, 1, 1, 0), (1, 1, 2, 1, 1, 2), (2, 1, 1, 2, 1, 1), (0, 0, 0, 0, 0, 0)])
def test_pentagon_detects_single_fault(labels):
    p = CategoryParams(2, 1)
    bad = sixj_table(2, 1).perturbed(labels, 1)
    report = pentagon_check(p, bad)
    assert not report
    assert report.failures
    assert set(report.failures[0]) == {"boundary", "start", "end"}


# -- exhaustive invariants ----------------------------------------------------


@pytest.mark.parametrize("k", range(1, 9))
def test_fusion_ring_is_associative_exhaustively(k):
    r = range(k + 1)
    for a in r:
        for b in r:
            assert fuse(k, a, b) == fuse(k, b, a)
            for c in r:
                left = sorted(z for y in fuse(k, a, b) for z in fuse(k, y, c))
                right = sorted(z for y in fuse(k, b, c) for z in fuse(k, a, y))
                assert left == right


@pytest.mark.parametrize("k", range(1, 9))
def test_theta_is_symmetric_exhaustively(k):
    for m in range(1, k + 2):
        if math.gcd(m, k + 2) != 1:
            continue
        for pivotal in (1, -1):
            p = CategoryParams(k, m, pivotal)
            for a in range(k + 1):
                for b in range(a, k + 1):
                    for c in fuse(k, a, b):
                        if c < b:
                            continue
                        value = theta_symbol(p, a, b, c)
                        for perm in itertools.permutations((a, b, c)):
                            assert theta_symbol(p, *perm) == value


@pytest.mark.parametrize("k", range(1, 11))
def test_theta_with_trivial_edge_is_dimension(k):
    for m in range(1, k + 2):
        if math.gcd(m, k + 2) != 1:
            continue
        for pivotal in (1, -1):
            p = CategoryParams(k, m, pivotal)
            assert all(theta_symbol(p, a, a, 0) == qdim(p, a) for a in range(k + 1))


@pytest.mark.parametrize("k", range(1, 7))
def test_sixj_vanishes_off_admissible_labels(k):
    p = CategoryParams(k, 1)
    admissible = {L.as_tuple() for L in admissible_sixj_labels(k)}
    for labels in itertools.product(range(k + 1), repeat=6):
        if labels not in admissible:
            assert six_j(p, labels).is_zero(), labels
