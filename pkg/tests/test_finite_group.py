import itertools

import pytest

from quasi_core.Errors import (GroupMismatch, GroupTooLarge, NoIdentity, NotAssociative,
                               NotLatinSquare)
from quasi_core.FiniteGroup import (FiniteGroup, cyclic, direct_product, elements, inverse,
                                    is_abelian, mul, parse_product, trivial_group)


def test_product_group_multiplication():
    G = FiniteGroup.product(2, 2)
    assert mul(G.element((1, 0)), G.element((0, 1))).label == "(1,1)"


def test_identity_and_inverses_in_z3():
    G = cyclic(3)
    two = G.element(2)
    assert (two * two).label == "1"
    assert inverse(G.element(1)).label == "2"
    assert inverse(G.element(0)).is_identity()
    e = G.element(0)
    assert two * e == two


def test_exponent_two_inverses():
    G = FiniteGroup.product(2, 2, 2)
    for x in elements(G):
        assert inverse(x) == x


def test_from_table_z2():
    G = FiniteGroup.from_table([[0, 1], [1, 0]], 0)
    assert G.order == 2
    assert G.is_abelian()


def test_klein_four_table():
    table = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    assert is_abelian(FiniteGroup.from_table(table, 0))


def test_non_latin_table_rejected():
    with pytest.raises(NotLatinSquare):
        FiniteGroup.from_table([[0, 1], [1, 1]], 0)


def test_non_associative_table_rejected():
    # a loop of order 5 that is not a group
    table = [[0, 1, 2, 3, 4],
             [1, 0, 3, 4, 2],
             [2, 4, 0, 1, 3],
             [3, 2, 4, 0, 1],
             [4, 3, 1, 2, 0]]
    with pytest.raises(NotAssociative) as info:
        FiniteGroup.from_table(table, 0)
    assert len(info.value.witness) == 3


def test_missing_identity_rejected():
    with pytest.raises(NoIdentity):
        FiniteGroup.from_table([[1, 0], [0, 1]], 0)


def test_direct_product_and_trivial_group():
    assert direct_product(cyclic(2), cyclic(2)).order == 4
    assert trivial_group().order == 1
    assert cyclic(1).is_trivial()
    assert is_abelian(parse_product("Z2 x Z2 x Z2"))


@pytest.mark.parametrize("orders", [(2,), (3,), (2, 2), (2, 3), (4, 2), (2, 2, 2)])
def test_group_laws_exhaustively(orders):
    G = FiniteGroup.product(*orders)
    xs = elements(G)
    for g, h, k in itertools.product(xs, repeat=3):
        assert (g * h) * k == g * (h * k)
    for g, h in itertools.product(xs, repeat=2):
        assert inverse(g * h) == inverse(h) * inverse(g)


def test_elements_mismatch():
    with pytest.raises(GroupMismatch):
        mul(cyclic(2).element(1), cyclic(3).element(1))


def test_size_limit():
    with pytest.raises(GroupTooLarge):
        parse_product("Z20 x Z20")
