from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anfield.cyclotomic import root_of_unity
from anfield.temperley_lieb import (
    TLMorphism,
    all_diagrams,
    compose,
    evaluate_closed_network,
    generator,
    jones_wenzl,
    tensor,
    theta_network,
)
from anfield.trivalent import StrandRepresentation, strand_representation, theta_value

# a generic-enough q: loop value 2cos(pi/11), no Delta_n vanishes for n < 10
Q = root_of_unity(22)
REP = strand_representation(Q)
DELTA = Q + Q.inverse()


def dense_compose(x: dict, y: dict) -> dict:
    """Matrix product of two ``{(out, in): value}`` dictionaries."""
    out: dict = {}
    for (o, mid), a in x.items():
        for (mid2, i), b in y.items():
            if mid == mid2:
                out[(o, i)] = out.get((o, i), 0) + a * b
    return {k: v for k, v in out.items() if v}


def test_cup_cap_relations():
    rep = StrandRepresentation(Q)
    cup = {((0, 1), ()): rep.one, ((1, 0), ()): Q}
    cap = {((), (0, 1)): rep.qinv, ((), (1, 0)): rep.one}
    assert dense_compose(cap, cup) == {((), ()): DELTA}


@pytest.mark.parametrize("n", range(2, 5))
def test_generators_represent_tl_relations(n):
    for i in range(1, n):
        e = REP.represent(generator(n, i, DELTA))
        e2 = dense_compose(e, e)
        assert e2 == {k: v * DELTA for k, v in e.items()}


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.data())
@settings(max_examples=40, deadline=None)
def test_represent_is_a_functor(n0, n1, n2, data):
    n1 += (n1 + n0) % 2
    n2 += (n2 + n1) % 2
    f = TLMorphism.from_diagram(data.draw(st.sampled_from(all_diagrams(n0, n1))), DELTA)
    g = TLMorphism.from_diagram(data.draw(st.sampled_from(all_diagrams(n1, n2))), DELTA)
    assert REP.represent(compose(g, f)) == dense_compose(REP.represent(g), REP.represent(f))
    h = TLMorphism.from_diagram(data.draw(st.sampled_from(all_diagrams(n0, n0))), DELTA)
    left, right = REP.represent(tensor(f, h)), {}
    for (o1, i1), a in REP.represent(f).items():
        for (o2, i2), b in REP.represent(h).items():
            right[(o1 + o2, i1 + i2)] = a * b
    assert left == right


@pytest.mark.parametrize("n", range(0, 6))
def test_jones_wenzl_blocks_are_rank_one(n):
    dense = REP.represent(jones_wenzl(n, DELTA))
    factors = REP.jw_factors(n)
    for out_bits, in_bits in product(product((0, 1), repeat=n), repeat=2):
        w = sum(out_bits)
        expected = 0
        if sum(in_bits) == w:
            u, v = factors[w]
            expected = u.get(out_bits, 0) * v.get(in_bits, 0)
        assert dense.get((out_bits, in_bits), 0) == expected


@pytest.mark.parametrize("a, b, c", [(0, 0, 0), (1, 1, 0), (1, 1, 2), (2, 2, 2), (3, 2, 1), (3, 3, 4), (4, 4, 4)])
def test_theta_matches_diagram_calculus(a, b, c):
    assert theta_value(REP, a, b, c) == evaluate_closed_network(theta_network(a, b, c, DELTA))


def test_trace_of_identity_block_is_chebyshev():
    for n in range(7):
        assert REP.identity(n).trace() == REP.chebyshev(n)
