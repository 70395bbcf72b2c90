import pytest
from hypothesis import given, strategies as st

from src.algebra.fingroup import (
    abelianization_order_profile,
    center,
    closure,
    commutator_subgroup,
    direct_product,
    group_from_table,
    is_subgroup,
    standard_group,
)
from src.errors import (
    ConfigInvalid,
    NoIdentity,
    NotAssociative,
    OrderBoundExceeded,
    UnresolvedReference,
)

D4 = standard_group("dihedral", 4)
elements = st.integers(min_value=0, max_value=D4.order - 1)


def test_standard_orders(c3, s3, d4):
    assert c3.order == 3
    assert s3.order == 6
    assert d4.order == 8
    assert c3.is_abelian
    assert not s3.is_abelian


def test_identity_is_index_zero(small_group):
    g = small_group
    assert all(g.m(0, x) == x == g.m(x, 0) for x in g.elements)
    assert g.label(0) == "e"


def test_cyclic_labels(c3):
    assert c3.labels == ("e", "r", "r2")
    assert c3.element("r2") == 2


def test_symmetric_labels_use_cycles(s3):
    assert s3.label(1) == "(23)"
    assert s3.element("(12)") == 2
    assert s3.element_order(3) == 3


def test_dihedral_reflections_are_involutions(d4):
    reflections = [x for x in d4.elements if d4.label(x).endswith("s")]
    assert len(reflections) == 4
    assert all(d4.element_order(x) == 2 for x in reflections)


def test_element_resolution_errors(s3):
    with pytest.raises(UnresolvedReference):
        s3.element("(1234)")
    with pytest.raises(ConfigInvalid):
        s3.element(7)


def test_table_identity_is_relocated():
    g = group_from_table([[1, 0], [0, 1]], labels=["a", "e"])
    assert g.labels == ("e", "a")
    assert g.mul == ((0, 1), (1, 0))


def test_table_without_identity():
    with pytest.raises(NoIdentity):
        group_from_table([[0, 0], [0, 0]])


def test_table_not_associative():
    with pytest.raises(NotAssociative) as info:
        group_from_table([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    assert info.value.witness is not None


def test_order_bound():
    with pytest.raises(OrderBoundExceeded):
        standard_group("symmetric", 5)


def test_center_and_commutator(s3, c3):
    assert center(s3) == frozenset({0})
    assert len(commutator_subgroup(s3)) == 3
    assert commutator_subgroup(c3) == frozenset({0})
    assert is_subgroup(s3, commutator_subgroup(s3))


def test_abelianization_profile(s3, c3):
    assert abelianization_order_profile(s3) == (1, 2)
    assert abelianization_order_profile(c3) == (1, 3, 3)


def test_closure_of_generator(d4):
    assert len(closure(d4, [1])) == 4


def test_direct_product(c2):
    klein = direct_product([c2, c2])
    assert klein.order == 4
    assert klein.is_abelian
    assert all(klein.element_order(x) <= 2 for x in klein.elements)


@given(elements, elements, elements)
def test_multiplication_is_associative(a, b, c):
    assert D4.m(D4.m(a, b), c) == D4.m(a, D4.m(b, c))


@given(elements)
def test_inverse_table(a):
    assert D4.m(a, D4.inv[a]) == 0 == D4.m(D4.inv[a], a)
