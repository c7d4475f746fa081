from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anfield.cyclotomic import root_of_unity
from anfield.exact_linalg import matmul
from anfield.fusion import fuse, global_dim, qdim
from anfield.modular import (
    BraidingParams,
    braided_labels,
    conductor,
    conductor_formula,
    galois_conjugate,
    galois_orbits,
    is_modular,
    modular_matrices,
    modularity_rank,
    r_coeff,
    s_matrix,
    s_param,
    t_matrix,
    twist,
    verlinde_check,
)


def braidings(max_k: int = 8):
    return st.integers(1, max_k).flatmap(
        lambda k: st.tuples(st.just(k), st.sampled_from(braided_labels(k)), st.sampled_from([1, -1]))
    ).map(lambda t: BraidingParams(*t))


def test_s_param_examples():
    assert s_param(1, 1) == root_of_unity(12, 4) == root_of_unity(3)
    assert s_param(2, 1) == root_of_unity(16, 5)
    with pytest.raises(ValueError):
        s_param(4, 2)


def test_loop_value_and_monoidal_class():
    for k in range(1, 8):
        for ell in braided_labels(k):
            bp = BraidingParams(k, ell)
            assert bp.delta == bp.category.delta
            assert -bp.s**2 - bp.s**-2 == bp.delta
            assert 1 <= bp.m <= k + 1


def test_r_coeff_examples():
    bp = BraidingParams(3, 1)
    s = bp.s
    assert r_coeff(bp, 1, 1, 0) == -(s**-3)
    assert r_coeff(bp, 1, 1, 2) == s
    assert r_coeff(bp, 1, 1, 1) == 0


@given(braidings(8), st.data())
@settings(max_examples=60, deadline=None)
def test_ribbon_relation(bp, data):
    a = data.draw(st.integers(0, bp.k))
    b = data.draw(st.integers(0, bp.k))
    c = data.draw(st.sampled_from(fuse(bp.k, a, b)))
    assert r_coeff(bp, a, b, c) * r_coeff(bp, b, a, c) == twist(bp, c) / (twist(bp, a) * twist(bp, b))


def test_s_and_t_shapes():
    mm = modular_matrices(BraidingParams(2, 1))
    assert len(mm.S) == len(mm.T) == 3
    assert mm.S[0][0] == 1
    assert all(mm.T[i][j] == 0 for i in range(3) for j in range(3) if i != j)


@given(braidings(7))
@settings(max_examples=40, deadline=None)
def test_s_matrix_is_symmetric_with_dimension_row(bp):
    S = s_matrix(bp)
    n = bp.k + 1
    assert all(S[i][j] == S[j][i] for i in range(n) for j in range(n))
    assert all(S[0][a] == qdim(bp.category, a) for a in range(n))


@given(braidings(7))
@settings(max_examples=40, deadline=None)
def test_modular_relations(bp):
    if not is_modular(bp):
        return
    S, T = s_matrix(bp), t_matrix(bp)
    n = bp.k + 1
    dim2 = global_dim(bp.category)
    SS = matmul(S, S)
    assert all(SS[i][j] == (dim2 if i == j else 0) for i in range(n) for j in range(n))
    ST = matmul(S, T)
    ST3 = matmul(ST, matmul(ST, ST))
    gauss = sum((T[a][a] * S[0][a] ** 2 for a in range(n)), bp.v * 0)
    assert all(ST3[i][j] == gauss * SS[i][j] for i in range(n) for j in range(n))


@pytest.mark.parametrize("k, ell, rank", [(3, 1, 2), (2, 1, 3), (1, 7, 1), (1, 4, 2), (5, 3, 3), (5, 2, 6)])
def test_modularity_rank_examples(k, ell, rank):
    bp = BraidingParams(k, ell)
    assert modularity_rank(bp) == rank
    assert is_modular(bp) == (rank == k + 1)


@pytest.mark.parametrize("k, ell, n", [(2, 1, 16), (1, 7, 1), (1, 11, 1), (1, 1, 2), (1, 4, 4), (1, 2, 4), (4, 1, 24), (3, 1, 5), (5, 3, 7), (5, 2, 28), (6, 3, 32), (3, 3, 10)])
def test_conductor_examples(k, ell, n):
    bp = BraidingParams(k, ell)
    assert conductor(bp) == n == conductor_formula(k, ell)


def test_conductor_of_minus_structure_can_differ():
    # the "-" ribbon structure drops the (-1)^a factor of the twists; at k = 1 this halves or doubles T's order
    assert conductor(BraidingParams(1, 7, -1)) == 2
    assert conductor(BraidingParams(1, 1, -1)) == 1


@pytest.mark.parametrize("k, ell", [(2, 1), (6, 1), (3, 2), (5, 4)])
def test_verlinde(k, ell):
    bp = BraidingParams(k, ell)
    report = verlinde_check(bp)
    assert report and report.checked > 0


def test_verlinde_detects_perturbed_s():
    bp = BraidingParams(2, 1)
    S = s_matrix(bp)
    S[1][2] = S[1][2] + 1
    S[2][1] = S[2][1] + 1
    assert not verlinde_check(bp, S)


def test_verlinde_refuses_non_modular():
    with pytest.raises(ValueError):
        verlinde_check(BraidingParams(3, 1))


def test_galois_orbit_examples():
    assert [len(o) for o in galois_orbits(2)] == [8]
    orbits = {frozenset(o) for o in galois_orbits(3)}
    labels = braided_labels(3)
    assert orbits == {
        frozenset(x for x in labels if x % 2 == 0),
        frozenset(x for x in labels if x % 4 == 1),
        frozenset(x for x in labels if x % 4 == 3),
    }
    bp = BraidingParams(5, 3)
    assert galois_conjugate(bp, 1) == bp
    with pytest.raises(ValueError):
        galois_conjugate(bp, 2)


@given(braidings(8), st.data())
@settings(max_examples=60, deadline=None)
def test_galois_acts_on_twists_and_s_matrix(bp, data):
    big = 4 * (bp.k + 2)
    j = data.draw(st.sampled_from([j for j in range(1, big) if math.gcd(j, big) == 1]))
    conj = galois_conjugate(bp, j)
    assert conj.s == bp.s.galois_apply(j)
    for a in range(bp.k + 1):
        assert twist(conj, a) == twist(bp, a).galois_apply(j)
    assert s_matrix(conj)[1][1] == s_matrix(bp)[1][1].galois_apply(j)
