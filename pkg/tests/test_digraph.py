from __future__ import annotations

import pytest
from hypothesis import given, settings

import oracles
from conftest import digraphs
from pldkernels import INF, DuplicateArc, LoopArc, VertexOutOfRange, build_digraph, cycle, fixture, girth
from pldkernels.digraph import (
    heads,
    is_acyclic,
    min_in_degree,
    omega_minus_set,
    omega_plus_set,
    out_neighborhood_r,
    topological_order,
)

PROPS = settings(max_examples=150, deadline=None)


def by_label(D, names):
    return tuple(sorted(D.labels.index(s) for s in names))


def test_triangle():
    C3 = build_digraph(3, [(0, 1), (1, 2), (2, 0)])
    assert C3 == cycle(3)
    assert min_in_degree(C3) == 1
    assert girth(C3) == 3


def test_fig1_digraph():
    D = fixture("fig1").digraph
    assert (D.n, len(D.arcs)) == (6, 12)
    assert min_in_degree(D) == 2
    assert girth(D) == 2


@pytest.mark.parametrize("arcs,error", [
    ([(0, 0)], LoopArc),
    ([(0, 1), (0, 1)], DuplicateArc),
    ([(0, 2)], VertexOutOfRange),
])
def test_invalid_arcs(arcs, error):
    with pytest.raises(error):
        build_digraph(2, arcs)


def test_in_isolated_vertex():
    assert min_in_degree(build_digraph(3, [(0, 1), (1, 0), (0, 2)])) == 1
    assert min_in_degree(build_digraph(3, [(0, 1), (1, 2)])) == 0


def test_path_is_acyclic():
    P = build_digraph(3, [(0, 1), (1, 2)])
    assert girth(P) == INF
    assert is_acyclic(P)
    assert topological_order(P) == [0, 1, 2]
    with pytest.raises(ValueError):
        topological_order(cycle(3))


def test_in_boundary():
    assert omega_minus_set(cycle(3), [0]) == ((2, 0),)
    D = fixture("fig2_left").digraph
    x, y, t = (D.labels.index(s) for s in "xyt")
    assert set(omega_minus_set(D, [y, t])) == {(x, y), (x, t)}
    assert omega_minus_set(D, range(D.n)) == ()


def test_out_boundary():
    assert omega_plus_set(cycle(3), [0]) == ((0, 1),)
    assert omega_plus_set(fixture("fig4_left").digraph, [2]) == ()
    assert omega_plus_set(cycle(4), range(4)) == ()


def test_heads():
    assert heads([(2, 0)]) == (0,)
    assert heads([]) == ()
    assert heads(fixture("fig1").pld_map.a_prime) == tuple(range(6))


def test_out_neighborhood():
    assert out_neighborhood_r(cycle(3), 0, 2) == (1, 2)
    D = fixture("fig2_left").digraph
    x = D.labels.index("x")
    assert out_neighborhood_r(D, x, 2) == by_label(D, "tyz")
    sink = build_digraph(2, [(0, 1)])
    assert out_neighborhood_r(sink, 1, 5) == ()
    with pytest.raises(ValueError):
        out_neighborhood_r(sink, 0, 0)


@PROPS
@given(digraphs(1, 6, in_degree_one=False))
def test_distances_match_floyd_warshall(D):
    ref = oracles.floyd(D.n, D.arcs)
    assert [list(row) for row in D.distances.matrix] == ref


@PROPS
@given(digraphs(1, 6, in_degree_one=False))
def test_girth_matches_oracle(D):
    assert girth(D) == oracles.girth(D.n, D.arcs)


@PROPS
@given(digraphs(2, 6, in_degree_one=False))
def test_degree_sums(D):
    assert sum(D.in_degree(v) for v in range(D.n)) == len(D.arcs)
    assert sum(D.out_degree(v) for v in range(D.n)) == len(D.arcs)


@PROPS
@given(digraphs(2, 6, in_degree_one=False), digraphs(2, 6, in_degree_one=False).map(lambda D: D.n))
def test_boundaries(D, size):
    U = list(range(min(size, D.n)))
    minus, plus = set(omega_minus_set(D, U)), set(omega_plus_set(D, U))
    assert not minus & plus
    assert set(heads(minus)) <= set(U)
    assert not set(heads(plus)) & set(U)
