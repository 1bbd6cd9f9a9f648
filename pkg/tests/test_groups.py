import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hopf_lpa.errors import InvalidSpec, InvalidTable, NotASubgroup, SizeLimit, UnknownElement
from hopf_lpa.groups import (
    INFINITE,
    Subgroup,
    build_finite_group,
    build_group,
    conjugacy_classes,
    coset_count,
    generated_subgroup,
    is_normal,
    load_table,
)
from oracles import brute_conjugacy_classes

FAMILIES = ["trivial", "cyclic:1", "cyclic:5", "symmetric:3", "symmetric:4", "dihedral:2",
            "dihedral:4", "dihedral:5", "product(cyclic:2, cyclic:2)",
            "product(symmetric:3, cyclic:2)"]


def names(G, xs):
    return {G.name(x) for x in xs}


def test_symmetric3_elements():
    G = build_group("symmetric:3")
    assert G.order == 6
    assert set(G.names) == {"id", "(12)", "(13)", "(23)", "(123)", "(132)"}


def test_trivial_group():
    G = build_group("trivial")
    assert G.order == 1 and G.identity_index == 0


def test_cyclic_table():
    G = build_group("cyclic:4")
    assert np.array_equal(np.asarray(G.table), (np.arange(4)[:, None] + np.arange(4)) % 4)


@pytest.mark.parametrize("spec", FAMILIES)
def test_group_axioms(spec):
    G = build_group(spec)
    T = np.asarray(G.table).astype(int)
    n = G.order
    idx = np.arange(n)
    assert np.array_equal(T[T[:, :, None], idx[None, None, :]], T[idx[:, None, None], T[None, :, :]])
    e = G.identity_index
    assert all(T[e, x] == x == T[x, e] for x in range(n))
    assert all(T[x, G.inv(x)] == e == T[G.inv(x), x] for x in range(n))
    assert len(set(G.names)) == n


def test_associativity_full_cube():
    G = build_group("dihedral:4")
    T = np.asarray(G.table).astype(int)
    left = T[T[:, :, None], np.arange(8)[None, None, :]]
    right = T[np.arange(8)[:, None, None], T[None, :, :]]
    assert np.array_equal(left, right)


def test_s3_classes():
    G = build_group("symmetric:3")
    got = [names(G, c.members) for c in conjugacy_classes(G)]
    assert got == [{"id"}, {"(12)", "(13)", "(23)"}, {"(123)", "(132)"}]
    for c in conjugacy_classes(G):
        assert c.representative == min(c.members)


def test_cyclic_classes_are_singletons():
    G = build_group("cyclic:7")
    assert [len(c) for c in conjugacy_classes(G)] == [1] * 7


def test_dihedral4_class_sizes():
    # frozen from the brute-force orbit oracle
    G = build_group("dihedral:4")
    assert sorted(len(c) for c in conjugacy_classes(G)) == [1, 1, 2, 2, 2]


@pytest.mark.parametrize("spec", FAMILIES)
def test_classes_match_brute_force(spec):
    G = build_group(spec)
    ours = [frozenset(c.members) for c in conjugacy_classes(G)]
    assert ours == brute_conjugacy_classes(G.table)
    assert all(G.order % len(c) == 0 for c in ours)
    # ordered by smallest member
    assert [min(c) for c in ours] == sorted(min(c) for c in ours)


def test_generated_subgroup_examples():
    G = build_group("symmetric:3")
    c3 = generated_subgroup(G, [G.element("(1 2 3)")])
    assert names(G, c3.members) == {"id", "(123)", "(132)"}
    c2 = generated_subgroup(G, [G.element("(1 2)")])
    assert names(G, c2.members) == {"id", "(12)"}
    assert generated_subgroup(G, []).members == {G.identity_index}


@given(st.sampled_from(FAMILIES), st.data())
def test_generated_subgroup_idempotent(spec, data):
    G = build_group(spec)
    gens = data.draw(st.sets(st.integers(0, G.order - 1), max_size=3))
    H = generated_subgroup(G, gens)
    assert generated_subgroup(G, H.members).members == H.members
    assert set(gens) <= H.members
    assert all(G.mul(a, b) in H.members for a in H.members for b in H.members)
    assert G.order % H.order == 0


def test_normality_examples():
    G = build_group("symmetric:3")
    A3 = generated_subgroup(G, [G.element("(123)")])
    assert is_normal(G, A3)
    assert not is_normal(G, generated_subgroup(G, [G.element("(12)")]))
    assert is_normal(G, Subgroup(frozenset(range(6))))
    with pytest.raises(NotASubgroup):
        is_normal(G, Subgroup(frozenset({G.identity_index, G.element("(12)"),
                                         G.element("(13)")})))


def test_coset_counts():
    G = build_group("symmetric:3")
    assert coset_count(G, generated_subgroup(G, [G.element("(123)")])) == 2
    assert coset_count(G, Subgroup(frozenset(range(6)))) == 1
    C6 = build_group("cyclic:6")
    assert coset_count(C6, generated_subgroup(C6, [2])) == 2


def test_literal_syntaxes():
    G = build_group("symmetric:3")
    assert G.element("(1 2 3)") == G.element("(1,2,3)") == G.element("(123)")
    assert G.element("(1 2)(1 3)") in range(6)
    D = build_group("dihedral:4")
    assert D.element("r^4") == D.identity_index
    assert D.element("r s") == D.mul(D.element("r"), D.element("s"))
    P = build_group("product(cyclic:2, cyclic:3)")
    assert P.name(P.element("(1, 2)")) == "(1, 2)"
    with pytest.raises(UnknownElement):
        G.element("(1 2 4)")


def test_spec_errors():
    with pytest.raises(InvalidSpec) as exc:
        build_group("cyclic:")
    assert exc.value.position is not None
    with pytest.raises(InvalidSpec):
        build_group("symmetric:7")
    with pytest.raises(InvalidSpec):
        build_group("wreath:3")
    with pytest.raises(SizeLimit):
        build_group("cyclic:6000")
    with pytest.raises(SizeLimit):
        build_finite_group("symmetric:4", max_order=10)


def test_table_file(tmp_path):
    good = tmp_path / "z3.json"
    good.write_text(json.dumps({"names": ["e", "a", "b"],
                                "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]}))
    G = load_table(good)
    assert G.order == 3 and G.name(G.identity_index) == "e"
    assert build_group(f"table:{good}").order == 3
    bad = tmp_path / "bad.json"
    # a Latin square that is not associative
    bad.write_text(json.dumps({"names": list("eabcd"), "table": [
        [0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]}))
    with pytest.raises(InvalidTable):
        load_table(bad)
    noinv = tmp_path / "noinv.json"
    noinv.write_text(json.dumps({"names": ["e", "z"], "table": [[0, 1], [1, 1]]}))
    with pytest.raises(InvalidTable):
        load_table(noinv)


def test_integers():
    Z = build_group("integers")
    assert Z.order == INFINITE
    assert Z.mul(3, -5) == -2 and Z.inv(4) == -4
    assert Z.class_of(7).members == (7,)
