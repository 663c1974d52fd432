import math
import random

import pytest

from handleact import catalog
from handleact.errors import DomainError, InputError
from handleact.groups import (FiniteGroup, automorphism_group, conjugate_tuple,
                              element_order, group_exponent,
                              group_from_permutations, is_generating_tuple,
                              load_group, subgroup_closure)

Z2_TABLE = [[0, 1], [1, 0]]


def test_load_group_table_z2():
    g = load_group({"table": Z2_TABLE})
    assert g.size == 2
    assert g.identity == 0
    assert g.inv == (0, 1)


def test_load_group_permutations_s3():
    # closure of a transposition and a 3-cycle is all of S3
    g = load_group({"permutations": [[1, 0, 2], [1, 2, 0]]})
    assert g.size == 6


def test_load_group_bad_row_rejected():
    with pytest.raises(InputError):
        load_group({"table": [[0, 1], [1, 1]]})


def test_load_group_identity_must_be_zero():
    # Z/2 with the elements relabelled so the identity sits at index 1
    with pytest.raises(InputError):
        load_group({"table": [[1, 0], [0, 1]]})


def test_load_group_nonassociative_rejected():
    # a Latin square with two-sided identity that fails associativity
    # (order-5 loop: the smallest size where that can happen)
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(InputError):
        load_group({"table": table})


def test_load_group_needs_known_key():
    with pytest.raises(InputError):
        load_group({"gens": []})


def test_closure_bound():
    with pytest.raises(DomainError):
        group_from_permutations([[1, 2, 3, 4, 0]], max_size=3)


def test_element_orders():
    z4 = catalog.cyclic(4)
    assert element_order(z4, 0) == 1
    assert element_order(z4, 1) == 4
    s3 = catalog.symmetric(3)
    three_cycle = next(a for a in range(6) if s3.labels[a].count("(") == 1
                       and len(s3.labels[a].split()) == 3)
    assert element_order(s3, three_cycle) == 3


def test_group_exponent():
    assert group_exponent(catalog.trivial()) == 1
    assert group_exponent(catalog.cyclic(4)) == 4
    assert group_exponent(catalog.symmetric(3)) == 6


def test_is_generating_tuple():
    z2 = catalog.cyclic(2)
    assert not is_generating_tuple(z2, (0,))
    assert is_generating_tuple(z2, (1,))
    s3 = catalog.symmetric(3)
    # generator 0 is the transposition, generator 1 the 3-cycle (BFS order)
    assert is_generating_tuple(s3, (1, 2))


def test_conjugate_tuple_examples():
    z2 = catalog.cyclic(2)
    assert conjugate_tuple(z2, (1, 0), 0) == (1, 0)
    z6 = catalog.cyclic(6)
    assert conjugate_tuple(z6, (2, 5), 3) == (2, 5)  # abelian: no effect
    s3 = catalog.symmetric(3)
    idx = {s3.labels[a]: a for a in range(6)}
    got = conjugate_tuple(s3, (idx["(0 1)"],), idx["(0 1 2)"])
    assert got == (idx["(1 2)"],)


@pytest.mark.parametrize("name,group", catalog.groups_up_to_order(12))
def test_lagrange_and_exponent(name, group):
    exponent = group_exponent(group)
    for a in range(group.size):
        k = element_order(group, a)
        assert group.size % k == 0
        assert exponent % k == 0


def test_conjugation_round_trip():
    rng = random.Random(5)
    for name, group in catalog.groups_up_to_order(12):
        for _ in range(20):
            t = tuple(rng.randrange(group.size) for _ in range(3))
            c = rng.randrange(group.size)
            back = conjugate_tuple(conjugate_tuple(group, t, c), group.inv[c])
            assert back == t


def conjugate_tuple_keeps_generation(group, t, c):
    return is_generating_tuple(group, t) == \
        is_generating_tuple(group, conjugate_tuple(group, t, c))


def test_generation_invariant_under_conjugation():
    rng = random.Random(6)
    for name, group in catalog.groups_up_to_order(8):
        for _ in range(30):
            t = tuple(rng.randrange(group.size) for _ in range(2))
            c = rng.randrange(group.size)
            assert conjugate_tuple_keeps_generation(group, t, c)


def test_subgroup_closure_values():
    s3 = catalog.symmetric(3)
    idx = {s3.labels[a]: a for a in range(6)}
    assert len(subgroup_closure(s3, [idx["(0 1 2)"]])) == 3
    assert len(subgroup_closure(s3, [idx["(0 1)"]])) == 2
    assert subgroup_closure(s3, []) == frozenset({0})


def test_catalog_orders():
    orders = sorted(g.size for _, g in catalog.groups_up_to_order(12))
    assert orders == [1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8,
                      9, 9, 10, 10, 11, 12, 12, 12, 12, 12]
    assert group_exponent(catalog.quaternion()) == 4
    assert group_exponent(catalog.dicyclic(3)) == 12


def test_catalog_groups_pairwise_distinct():
    """Order-and-order-multiset distinguishes every pair in the catalog."""
    seen = {}
    for name, g in catalog.groups_up_to_order(12):
        sig = (g.size, tuple(sorted(element_order(g, a) for a in range(g.size))),
               sum(1 for a in range(g.size) for b in range(g.size)
                   if g.mul[a][b] != g.mul[b][a]))
        assert sig not in seen, "%s looks isomorphic to %s" % (name, seen.get(sig))
        seen[sig] = name


def test_automorphism_group_sizes():
    # |Aut(Z/5)| = 4, |Aut(Z2xZ2)| = 6 (= S3), |Aut(S3)| = 6
    assert len(automorphism_group(catalog.cyclic(5))) == 4
    assert len(automorphism_group(catalog.abelian(2, 2))) == 6
    assert len(automorphism_group(catalog.symmetric(3))) == 6


def test_power_helper():
    z6 = catalog.cyclic(6)
    assert z6.power(5, 0) == 0
    assert z6.power(5, 2) == 4
    assert z6.power(5, -1) == 1
