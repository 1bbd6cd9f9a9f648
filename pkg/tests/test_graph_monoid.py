import random

import pytest
from hypothesis import given, strategies as st

from hopf_lpa.cross_check import replay_certificate
from hopf_lpa.digraph import MultiDigraph
from hopf_lpa.errors import EmptyGraph, NotApplicable
from hopf_lpa.graph_monoid import (
    EQUAL,
    IBN,
    NOT_EQUAL,
    NOT_IBN,
    UNKNOWN,
    GraphMonoid,
    decide_equal,
    ibn_test,
    one_step_rewrites,
)
from hopf_lpa.groups import build_group
from hopf_lpa.hopf_graph import build_gamma, build_window
from hopf_lpa.ramification import parse_ramification
from oracles import random_multigraph


def graph(n, edges):
    return MultiDigraph([f"v{i}" for i in range(n)], edges)


R1 = graph(1, [(0, 0, 1)])
R2 = graph(1, [(0, 0, 1), (0, 0, 2)])
U_TO_V = graph(2, [(0, 1, 1)])


def hopf(spec, text):
    G = build_group(spec)
    return build_gamma(G, parse_ramification(G, text))


def test_one_step_examples():
    assert one_step_rewrites(R2, (1,)) == {(2,)}
    assert one_step_rewrites(U_TO_V, (1, 0)) == {(0, 1)}
    assert one_step_rewrites(U_TO_V, (0, 0)) == set()


def test_decide_examples():
    d = decide_equal(R2, (1,), (2,))
    assert d.verdict == EQUAL and len(d.certificate["trace"]) == 1
    d = decide_equal(R1, (1,), (2,))
    assert d.verdict == NOT_EQUAL
    assert d.certificate["modulus"] == 0 and d.certificate["functional"] != [0]
    assert decide_equal(U_TO_V, (1, 0), (0, 1)).verdict == EQUAL


def test_reflexive():
    d = decide_equal(hopf("symmetric:3", "(12)=1"), (1,) * 6, (1,) * 6)
    assert d.verdict == EQUAL and d.certificate["trace"] == []


def test_ibn_examples():
    for spec, text, m in [("symmetric:3", "(123)=1", 2), ("cyclic:4", "0=1;1=2", 3),
                          ("trivial", "1_G=3", 3)]:
        g = hopf(spec, text)
        d = ibn_test(g)
        assert d.verdict == NOT_IBN
        M = GraphMonoid(g)
        assert replay_certificate(M, d)
        assert (d.certificate["n"] - d.certificate["m"]) % (m - 1) == 0
    assert ibn_test(hopf("cyclic:6", "2=1")).verdict == IBN
    assert ibn_test(hopf("symmetric:3", "")).verdict == IBN


def test_degree_witness_is_found_directly():
    # one forward rewrite at every vertex turns the vertex sum into m copies
    g = hopf("dihedral:3", "s=1")
    M = GraphMonoid(g)
    trace = [(v, "+") for v in range(g.n)]
    assert M.replay((1,) * g.n, trace) == (3,) * g.n
    assert M.decide_equal((1,) * g.n, (3,) * g.n).verdict == EQUAL


def test_refuses_truncated_and_empty():
    with pytest.raises(NotApplicable):
        GraphMonoid(build_window(parse_ramification(build_group("integers"), "1"), 3))
    with pytest.raises(EmptyGraph):
        ibn_test(graph(0, []))


def test_budget_gives_unknown():
    # u -> v, u -> w with two loops at v and at w: the relation lattice is all
    # of Z^3, so only the search can decide, and three visits are not enough
    g = graph(3, [(0, 1, 1), (0, 2, 1), (1, 1, 1), (1, 1, 2), (2, 2, 1), (2, 2, 2)])
    d = decide_equal(g, (5, 0, 0), (0, 9, 9), max_visited=3)
    assert d.verdict == UNKNOWN and "budget" in d.certificate["note"]
    full = decide_equal(g, (5, 0, 0), (0, 9, 9))
    assert full.verdict == EQUAL
    assert GraphMonoid(g).replay((5, 0, 0), full.certificate["trace"]) == (0, 9, 9)


monoid_elements = st.lists(st.integers(0, 2), min_size=4, max_size=4)


@st.composite
def small_graphs(draw):
    n = 4
    edges = []
    for s in range(n):
        targets = draw(st.lists(st.integers(0, n - 1), max_size=2))
        edges += [(s, t, k + 1) for k, t in enumerate(targets)]
    return graph(n, edges)


@given(small_graphs(), monoid_elements, monoid_elements)
def test_certificates_replay(g, x, y):
    M = GraphMonoid(g)
    d = M.decide_equal(x, y, max_visited=2000)
    assert d.verdict == M.decide_equal(y, x, max_visited=2000).verdict
    if d.verdict in (EQUAL, NOT_EQUAL):
        assert replay_certificate(M, d, x, y)
    if d.verdict == NOT_EQUAL:
        f, mod = d.certificate["functional"], d.certificate["modulus"]

        def val(v):
            s = sum(a * b for a, b in zip(f, v))
            return s % mod if mod else s

        # constant along every rewrite
        for z in M.one_step_rewrites(x):
            assert val(z) == val(x)


def test_rewrites_are_relations():
    rng = random.Random(3)
    for _ in range(100):
        n, edges = random_multigraph(rng, max_vertices=5, max_out=2)
        M = GraphMonoid(graph(n, edges))
        x = tuple(rng.randint(0, 2) for _ in range(n))
        for y in M.one_step_rewrites(x):
            diff = [a - b for a, b in zip(x, y)]
            assert diff in M.lattice or not any(diff)
            assert min(y) >= 0
