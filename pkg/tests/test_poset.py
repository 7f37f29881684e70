import json
from math import comb

import pytest
from hypothesis import given, settings

from oracles import bell, gaussian_binomial, width_by_antichains
from posetbalance.poset import (PosetError, add_relation, antichain, boolean_lattice, chain, chain_product,
                                down_sets, dual, from_covers, from_json, from_permutation, ideal_lattice,
                                is_chain, parse_permutation, partition_lattice, principal_ideal, relabel,
                                restrict, subspace_lattice, to_dot, width, width_bruteforce)
from posetbalance.search import canonical_form
from strategies import posets


def test_from_covers_closes_transitively():
    P = from_covers(3, [(1, 2), (2, 3)])
    assert P.less(1, 3)
    assert P.covers == ((1, 2), (2, 3))
    assert P.relations() == {(1, 2), (2, 3), (1, 3)}


def test_cycle_is_rejected():
    with pytest.raises(PosetError, match="cycle"):
        from_covers(3, [(1, 2), (2, 3), (3, 1)])


@pytest.mark.parametrize("covers", [[(0, 1)], [(1, 4)], [(2, 2)]])
def test_bad_pairs_rejected(covers):
    with pytest.raises(PosetError):
        from_covers(3, covers)


def test_json_round_trip_keeps_labels():
    P = boolean_lattice(2)
    Q = from_json(P.to_json())
    assert Q == P
    assert json.loads(P.to_json())["labels"] == ["{}", "{1}", "{2}", "{1,2}"]


def test_json_needs_fields():
    with pytest.raises(PosetError):
        from_json('{"covers": []}')


@given(posets())
def test_dual_is_involution(P):
    assert dual(dual(P)) == P
    assert {(y, x) for x, y in P.relations()} == dual(P).relations()


@given(posets())
def test_covers_regenerate_poset(P):
    assert from_covers(P.n, P.covers).relations() == P.relations()


@given(posets(max_n=8))
def test_width_matches_oracles(P):
    assert width(P) == width_by_antichains(P) == width_bruteforce(P)


@given(posets(max_n=6))
def test_down_sets_are_closed(P):
    ideals = down_sets(P)
    assert len(set(ideals)) == len(ideals)
    for S in ideals:
        for y in range(P.n):
            if S >> y & 1:
                assert P.down[y] & ~S == 0
    # and nothing is missed
    closed = [S for S in range(1 << P.n) if all(P.down[y] & ~S == 0 for y in range(P.n) if S >> y & 1)]
    assert sorted(closed) == sorted(ideals)


def test_add_relation_and_restrict():
    P = add_relation(antichain(3), 1, 2)
    assert P.relations() == {(1, 2)}
    Q = restrict(chain(4), 0b1010)
    assert Q.relations() == {(1, 2)}


def test_relabel_moves_relations():
    P = relabel(chain(3), [3, 1, 2])
    assert P.relations() == {(3, 1), (1, 2), (3, 2)}


def test_permutation_poset():
    pi = parse_permutation("41325")
    assert pi == (4, 1, 3, 2, 5)
    assert parse_permutation("4,1,3,2,5") == pi
    assert set(from_permutation(pi).covers) == {(1, 2), (1, 3), (2, 5), (3, 5), (4, 5)}
    with pytest.raises(ValueError):
        parse_permutation("4135")


def test_boolean_lattice():
    for n in range(1, 6):
        B = boolean_lattice(n)
        assert B.n == 2 ** n
        assert width(B) == comb(n, n // 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_partition_lattice_size(n):
    L = partition_lattice(n)
    assert L.n == bell(n)
    assert L.label(1) == "/".join(str(i) for i in range(1, n + 1))


@pytest.mark.parametrize("n,q", [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_subspace_lattice_size(n, q):
    L = subspace_lattice(n, q)
    assert L.n == sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def test_small_subspace_lattices():
    assert subspace_lattice(2, 2).n == 5
    assert subspace_lattice(3, 2).n == 16
    with pytest.raises(ValueError):
        subspace_lattice(2, 4)
    # L_4(2) has 67 elements, past the bitmask cap
    with pytest.raises(PosetError, match="at most 64"):
        subspace_lattice(4, 2)


def test_ideal_lattice_of_chain_and_antichain():
    assert is_chain(ideal_lattice(chain(4)))
    assert canonical_form(ideal_lattice(antichain(3))) == canonical_form(boolean_lattice(3))


def test_principal_ideal_includes_element():
    P = chain(3)
    assert principal_ideal(P, 2) == 0b011


def test_chain_product_labels():
    P = chain_product(2, 3)
    assert P.labels == ("(1,1)", "(1,2)", "(1,3)", "(2,1)", "(2,2)", "(2,3)")
    assert P.less(P.index_of("(1,2)"), P.index_of("(2,3)"))


def test_dot_export():
    text = to_dot(from_covers(3, [(1, 2)]))
    assert text.startswith('digraph "P" {')
    assert "1 -> 2;" in text
    assert "rankdir=BT" in text
