from hypothesis import given, strategies as st

from hopf_lpa.groups import INFINITE, TRIVIAL, build_group, is_normal
from hopf_lpa.ramification import from_multiplicities, parse_ramification
from hopf_lpa.semigroup import (
    analyze,
    integer_semigroup_contains,
    integer_semigroup_flags,
    semigroup_closure_finite,
    unit_group,
)
from oracles import brute_semigroup, zero_sum_word_exists

S3 = build_group("symmetric:3")
Z = build_group("integers")


def names(G, xs):
    return {G.name(x) for x in xs}


def el(*lits):
    return [S3.element(x) for x in lits]


def test_closure_examples():
    assert names(S3, semigroup_closure_finite(S3, el("(123)", "(132)"))) == {"id", "(123)", "(132)"}
    assert semigroup_closure_finite(S3, el("(12)", "(13)", "(23)")) == frozenset(range(6))
    assert semigroup_closure_finite(S3, []) == frozenset()


def test_integer_flags():
    assert integer_semigroup_flags({0, 2}) == (True, False, 2)
    assert integer_semigroup_flags({2, 3}) == (False, False, 1)
    assert integer_semigroup_flags({-1, 1}) == (True, True, 1)
    assert integer_semigroup_flags(set()) == (False, False, 0)
    assert integer_semigroup_flags({0}) == (True, True, 0)


def test_unit_group():
    A3 = semigroup_closure_finite(S3, el("(123)"))
    assert unit_group(S3, A3).members == A3
    assert unit_group(S3, frozenset()) == TRIVIAL
    assert unit_group(S3, frozenset(range(6))).order == 6


def test_analyze_s3_c3():
    sg = analyze(S3, parse_ramification(S3, "(1 2 3)=1"))
    assert sg.delta0.order == 3 and sg.coset_count_delta0 == 2
    assert sg.lambda0.members == sg.delta0.members
    assert sg.scc_count_delta == 1 and sg.is_subgroup and not sg.equals_whole_group


def test_analyze_integers_zero_two():
    sg = analyze(Z, parse_ramification(Z, "0=1;2=1"))
    assert sg.delta0.modulus == 2 and sg.coset_count_delta0 == 2
    assert sg.lambda0.modulus == 0 and sg.scc_count_delta == INFINITE
    assert sg.is_submonoid and not sg.is_subgroup


def test_analyze_integers_two_three():
    sg = analyze(Z, parse_ramification(Z, "2=1;3=1"))
    assert not sg.is_submonoid and sg.lambda0 == TRIVIAL
    assert sg.delta0.modulus == 1 and sg.coset_count_delta0 == 1


def test_zero_ramification():
    for G in (S3, build_group("trivial")):
        sg = analyze(G, parse_ramification(G, ""))
        assert sg.s_members == frozenset() and sg.delta0.members == {G.identity_index}
        assert not sg.is_submonoid and sg.lambda0 == TRIVIAL
        assert sg.scc_count_delta == 1 and sg.coset_count_delta0 == G.order


def test_integer_membership():
    # the generated subsemigroup of {2, 3} contains 2 and 3 themselves
    assert [t for t in range(-3, 12) if integer_semigroup_contains({2, 3}, t)] == \
        [2, 3, 4, 5, 6, 7, 8, 9, 10, 11]
    assert integer_semigroup_contains({0, 2}, 0) and not integer_semigroup_contains({0, 2}, 3)
    assert integer_semigroup_contains({-2, 3}, 1) and integer_semigroup_contains({-2, 3}, 0)
    assert not integer_semigroup_contains({4, 6}, 2) and integer_semigroup_contains({4, 6}, 10)
    assert not integer_semigroup_contains(set(), 0)


@given(st.sets(st.integers(-6, 6), max_size=4), st.integers(-40, 40))
def test_integer_membership_matches_words(gens, target):
    reach = set()
    layer = set(gens)
    for _ in range(50):
        reach |= layer
        layer = {a + g for a in layer for g in gens if abs(a + g) <= 60}
    assert integer_semigroup_contains(gens, target) == (target in reach)


@given(st.sets(st.integers(-7, 7), max_size=4))
def test_submonoid_flag_matches_zero_sum_search(gens):
    assert integer_semigroup_flags(gens)[0] == zero_sum_word_exists(gens)


GROUPS = ["symmetric:3", "dihedral:4", "dihedral:3", "product(cyclic:2, cyclic:2)",
          "cyclic:8", "symmetric:4"]


@given(st.sampled_from(GROUPS), st.data())
def test_finite_reports(spec, data):
    G = build_group(spec)
    pairs = data.draw(st.lists(st.tuples(st.integers(0, G.order - 1), st.integers(0, 2)),
                               max_size=3, unique_by=lambda t: G.class_of(t[0]).representative))
    r = from_multiplicities(G, pairs)
    sg = analyze(G, r)
    assert sg.s_members == brute_semigroup(G.table, sorted(r.support_elements()))
    if sg.s_members:
        # a nonempty finite subsemigroup of a group is a subgroup
        assert sg.is_subgroup and sg.is_submonoid
        assert sg.lambda0.members == sg.s_members
    else:
        assert sg.lambda0 == TRIVIAL
    assert not sg.equals_whole_group or sg.is_subgroup
    assert is_normal(G, sg.delta0) and sg.delta0_is_normal
    if sg.lambda0 != TRIVIAL:
        assert is_normal(G, sg.lambda0)
    assert analyze(G, r) == sg
