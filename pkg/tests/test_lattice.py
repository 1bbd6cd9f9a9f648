from hypothesis import given, strategies as st

from hopf_lpa.groups import INFINITE
from hopf_lpa.lattice import IntegerLattice
from oracles import sympy_lattice_contains

vectors = st.lists(st.integers(-6, 6), min_size=3, max_size=3)


def test_small_cases():
    L = IntegerLattice([[2, 0], [0, 3]], 2)
    assert [4, 9] in L and [1, 0] not in L
    assert L.order_of([1, 1]) == 6
    assert IntegerLattice([], 2).order_of([0, 1]) == INFINITE
    assert [0, 0] in IntegerLattice([], 2)
    zero_rows = IntegerLattice([[0, 0]], 2)
    assert [1, 0] not in zero_rows


def test_relation_lattice_of_a_loop_with_two_petals():
    # v - 2v = -v spans everything
    L = IntegerLattice([[-1]], 1)
    assert [5] in L and L.order_of([1]) == 1


@given(st.lists(vectors, max_size=4), vectors)
def test_membership_matches_sympy(rows, z):
    L = IntegerLattice(rows, 3)
    assert (z in L) == sympy_lattice_contains(rows, z)
    sep = L.separating_functional(z)
    if sep is not None:
        f, mod = sep

        def val(v):
            s = sum(a * b for a, b in zip(f, v))
            return s % mod if mod else s

        assert all(val(r) == 0 for r in rows)
        assert val(z) != 0


@given(st.lists(vectors, max_size=4), vectors)
def test_order_by_multiples(rows, z):
    L = IntegerLattice(rows, 3)
    order = L.order_of(z)
    if order == INFINITE:
        assert all([k * x for x in z] not in L for k in range(1, 8))
    else:
        assert [order * x for x in z] in L
        assert all([k * x for x in z] not in L for k in range(1, order))
