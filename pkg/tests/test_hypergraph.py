"""Build validation, connectivity, neighborhoods, degrees."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercurv import build, errors, is_connected, is_strongly_connected

from conftest import random_oriented_unit, random_undirected


def test_h4_builds_and_is_connected(h4):
    assert h4.n_vertices == 4
    assert h4.n_edges == 2
    assert is_connected(h4)


def test_two_vertex_single_edge_is_valid():
    hg = build("undirected", 2, [([0, 1], 1)])
    assert hg.degree(0) == 1


def test_directed_hyperloop_rejected():
    with pytest.raises(errors.HyperloopInLooplessModel):
        build("directed", 2, [([0], [0], 1)])


def test_disconnected_rejected():
    with pytest.raises(errors.NotConnected):
        build("undirected", 4, [([0, 1], 1), ([2, 3], 1)])


def test_not_strongly_connected_rejected():
    # one-way chain: no path back
    with pytest.raises(errors.NotStronglyConnected):
        build("directed", 3, [([0], [1], 1), ([1], [2], 1)])


def test_directed_three_cycle_strongly_connected():
    hg = build("directed", 3, [([0], [1], 1), ([1], [2], 1), ([2], [0], 1)])
    assert is_strongly_connected(hg)


def test_rejects_bad_edges():
    with pytest.raises(errors.EmptyEdge):
        build("undirected", 3, [([0], 1)])
    with pytest.raises(errors.DuplicateVertex):
        build("undirected", 3, [([0, 0, 1], 1)])
    with pytest.raises(errors.NonPositiveWeight):
        build("undirected", 3, [([0, 1, 2], 0)])
    with pytest.raises(errors.VertexOutOfRange):
        build("undirected", 3, [([0, 5], 1)])
    with pytest.raises(errors.EmptyEdge):
        build("undirected", 3, [])


def test_reversal_closure_enforced():
    with pytest.raises(errors.NotClosedUnderReversal):
        build("oriented", 2, [([0], [1], 1)])
    with pytest.raises(errors.NotClosedUnderReversal):
        build("oriented", 2, [([0], [1], 1), ([1], [0], 2)])
    hg = build("oriented", 2, [([0], [1], 1), ([1], [0], 1)])
    assert hg.n_edges == 2


def test_symmetrize_adds_reversals():
    hg = build("oriented", 3, [([0], [1], 2), ([1], [2], 2), ([2], [0], 2)], symmetrize=True)
    assert hg.n_edges == 6
    assert hg.edges[3].tail == frozenset({1})
    assert hg.edges[3].head == frozenset({0})
    assert hg.edges[3].weight == 2


def test_h4_neighborhoods_and_degrees(h4):
    assert h4.neighbors(0) == frozenset({1, 2, 3})
    assert h4.neighbors(3) == frozenset({0})
    assert h4.degree(0) == 2
    assert h4.degree(1) == 1
    assert h4.degree(3) == 1


def test_directed_neighborhoods():
    hg = build("directed", 4, [([0, 1], [2], 1), ([2], [3], 1), ([3], [0, 1], 1)])
    assert hg.out_neighbors(0) == frozenset({2})
    assert hg.in_neighbors(2) == frozenset({0, 1})
    assert hg.in_neighbors(0) == frozenset({3})
    # set neighborhoods: one hop into the tail side, one hop out of the head side
    assert hg.tail_in_neighborhood(0) == frozenset({3})
    assert hg.head_out_neighborhood(0) == frozenset({3})


def test_multi_edges_accumulate():
    hg = build("undirected", 2, [([0, 1], 1), ([0, 1], Fraction(1, 2))])
    assert hg.degree(0) == Fraction(3, 2)
    assert hg.n_edges == 2


@given(st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_oriented_neighborhood_symmetry_and_degree_ratio(seed):
    hg = random_oriented_unit(random.Random(seed))
    b_cap = hg.max_head_size()
    a_cap = hg.max_tail_size()
    for v in range(hg.n_vertices):
        gamma_in = hg.in_neighbors(v)
        gamma_out = hg.out_neighbors(v)
        assert gamma_in == gamma_out
        assert hg.deg(v) == hg.deg_in(v) + hg.deg_out(v) > 0
        assert b_cap * hg.deg_out(v) >= len(gamma_out) >= 0
        assert a_cap * hg.deg_in(v) >= len(gamma_in)
        assert len(gamma_out) >= 1


@given(st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_undirected_positive_degrees(seed):
    hg = random_undirected(random.Random(seed))
    for v in range(hg.n_vertices):
        assert hg.degree(v) > 0
