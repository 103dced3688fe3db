import numpy as np
import pytest

from phipsi.cruncher.groups import (all_subgroups, cyclic_factorizations, cyclic_reduce, join, make_group, meet,
                                    quotient, subgroup_from_elements, subgroup_generated, supp, sylow_component,
                                    trivial_subgroup, whole_group)
from phipsi.errors import InvalidExponentError, InvalidInputError


def test_enumeration_is_row_major():
    G = make_group([2, 3])
    assert G.size == 6
    assert G.index_of((0, 0)) == 0
    assert G.index_of((1, 2)) == 5
    assert G.element_of(4).exponents == (1, 1)
    assert G.generators() == [3, 1]


def test_cyclic_index_is_exponent():
    G = make_group([12])
    assert G.is_cyclic
    assert G.index_of((7,)) == 7
    assert G.op_index(7, 8) == 3
    assert int(G.inverse_table[5]) == 7
    assert G.power_index(5, 3) == 3


def test_orders_and_exponent():
    G = make_group([2, 4])
    assert G.exponent() == 4
    assert G.order_of((1, 2)) == 2
    assert G.elements_of_order(4) == [1, 3, 5, 7]
    assert G.is_p_group(2) and not G.is_p_group(3)


def test_trivial_group():
    G = make_group([])
    assert G.size == 1
    assert G.name == "1"
    assert supp(G) == []
    assert all_subgroups(G) == [trivial_subgroup(G)]


def test_rejects_order_one_factor():
    with pytest.raises(InvalidInputError):
        make_group([1, 2])


@pytest.mark.parametrize("orders, count", [
    ([12], 6),
    ([2, 2], 5),
    ([2, 4], 8),
    ([3, 3], 6),
    ([2, 2, 2], 16),
    ([], 1),
])
def test_subgroup_counts(orders, count):
    assert len(all_subgroups(make_group(orders))) == count


def test_lattice_closed_under_meet_and_join():
    G = make_group([2, 4])
    lattice = set(all_subgroups(G))
    for N in lattice:
        for M in lattice:
            assert meet(N, M) in lattice
            assert join(N, M) in lattice


def test_cyclic_meet_join():
    G = make_group([12])
    a, b = subgroup_generated(G, [4]), subgroup_generated(G, [6])
    assert meet(a, b).is_trivial
    assert join(a, b) == subgroup_generated(G, [2])


def test_labels():
    G = make_group([12])
    assert subgroup_generated(G, [4]).label == "<g^4>"
    assert whole_group(G).label == "<g>"
    assert trivial_subgroup(G).label == "1"
    H = make_group([2, 2])
    assert subgroup_generated(H, [(1, 0)]).label == "<(1,0)>"


def test_subgroup_equality_ignores_generators():
    G = make_group([12])
    assert subgroup_generated(G, [8]) == subgroup_generated(G, [4])
    assert (4,) in subgroup_generated(G, [8])


def test_subgroup_from_elements():
    G = make_group([4])
    assert subgroup_from_elements(G, [0, 2]) == subgroup_generated(G, [2])
    assert subgroup_from_elements(G, [0, 1]) is None
    assert subgroup_from_elements(G, [1, 3]) is None


def test_sylow_components():
    G = make_group([12])
    assert sylow_component(G, 2).order == 4
    assert sylow_component(G, 3).order == 3
    assert sylow_component(G, 5).is_trivial
    assert supp(G) == [2, 3]


def test_quotient():
    G = make_group([12])
    QG = quotient(G, subgroup_generated(G, [4]))
    assert QG.size == 4
    assert QG.coset_representatives == (0, 1, 2, 3)
    assert QG.is_well_defined()
    assert int(QG.coset_of[7]) == 3
    np.testing.assert_array_equal(QG.table[1], [1, 2, 3, 0])


@pytest.mark.parametrize("m", [6, 12, 30])
def test_cyclic_reduce(m):
    G = make_group([m])
    for n in range(1, m):
        d = cyclic_reduce(m, n)
        assert m % d == 0
        assert subgroup_generated(G, [n]) == subgroup_generated(G, [d])


def test_cyclic_reduce_range():
    with pytest.raises(InvalidExponentError):
        cyclic_reduce(6, 6)


def test_cyclic_factorizations():
    assert cyclic_factorizations(4) == [(), (2,), (3,), (2, 2), (4,)]
    assert (2, 2, 2) in cyclic_factorizations(8)
    assert all(np.prod(t) <= 24 for t in cyclic_factorizations(24))


def test_op_inverse_and_order_of():
    C12 = make_group([12])
    assert C12.inverse((5,)).exponents == (7,)
    assert C12.op((7,), (8,)).exponents == (3,)
    assert C12.order_of((5,)) == 12
    assert C12.order_of((4,)) == 3

    G = make_group([2, 3])
    assert G.order_of((1, 1)) == 6
    assert G.inverse((1, 1)).exponents == (1, 2)
    assert G.op((1, 2), (1, 1)) == G.identity
