import pytest
from hypothesis import given, strategies as st

from src.algebra.fingroup import standard_group
from src.algebra.gset import (
    compose,
    conj,
    enumerate_equivariant_maps,
    equivariant_map,
    equivariant_search_size,
    gset_from_table,
    identity_map,
    naive_equivariant_maps,
    orbits,
    point,
    regular,
    s_product,
    stabilizer,
    t_product,
    transversal,
    trivial,
)
from src.errors import ChainTypeMismatch, NotAnAction, NotEquivariant, SizeBoundExceeded

S3 = standard_group("symmetric", 3)
C3 = standard_group("cyclic", 3)
PROBES = [regular(C3), conj(C3), trivial(C3, 2), point(C3), s_product(regular(C3), trivial(C3, 2))]


def test_sizes(s3):
    assert regular(s3).size == 6
    assert conj(s3).size == 6
    assert trivial(s3, 0).size == 0
    assert point(s3).size == 1


def test_conjugation_classes(s3):
    orb = orbits(conj(s3))
    assert orb.representatives == (0, 1, 3)
    assert orb.sizes == (1, 3, 2)


def test_regular_is_transitive(small_group):
    orb = orbits(regular(small_group))
    assert orb.orbit_count == 1
    assert all(len(stabilizer(regular(small_group), x)) == 1 for x in regular(small_group).points)


def test_transversal_carries_representatives(s3):
    x_set = conj(s3)
    orb = orbits(x_set)
    for x, g in transversal(x_set).items():
        assert x_set.act[g][orb.rep[x]] == x


def test_products_encode_left_major(c3):
    l_set, x_set = regular(c3), trivial(c3, 2)
    sx = s_product(l_set, x_set)
    assert sx.size == 6
    assert sx.pair(2, 1) == 5
    assert sx.split(5) == (2, 1)
    assert sx.act[1][sx.pair(2, 1)] == sx.pair(0, 1)


def test_t_product_acts_on_group_coordinate(c3):
    tx = t_product(conj(c3))
    assert tx.size == 9
    assert tx.act[2][tx.pair(1, 2)] == tx.pair(0, 2)
    assert orbits(tx).orbit_count == 3


def test_products_are_cached(c3):
    assert s_product(regular(c3), point(c3)) is s_product(regular(c3), point(c3))
    assert t_product(regular(c3)) == t_product(regular(c3))


def test_invalid_action_table(c2):
    with pytest.raises(NotAnAction):
        gset_from_table(c2, [[0, 1], [0, 0]])
    with pytest.raises(NotAnAction):
        gset_from_table(c2, [[1, 0], [0, 1]])


def test_non_equivariant_map(c2):
    with pytest.raises(NotEquivariant) as info:
        equivariant_map(regular(c2), trivial(c2, 2), [0, 1])
    assert info.value.witness == (1, 0)


def test_compose_checks_endpoints(c2):
    f = equivariant_map(regular(c2), point(c2), [0, 0])
    with pytest.raises(ChainTypeMismatch):
        compose(f, f)
    assert compose(identity_map(point(c2)), f).table == (0, 0)


def test_hom_counts(s3):
    assert len(enumerate_equivariant_maps(regular(s3), conj(s3))) == 6
    assert len(enumerate_equivariant_maps(conj(s3), point(s3))) == 1
    assert enumerate_equivariant_maps(point(s3), regular(s3)) == []


def test_search_bound(s3):
    assert equivariant_search_size(trivial(s3, 3), trivial(s3, 4)) == 64
    with pytest.raises(SizeBoundExceeded):
        enumerate_equivariant_maps(trivial(s3, 3), trivial(s3, 4), bound=10)


@given(st.sampled_from(PROBES), st.sampled_from(PROBES[:4]))
def test_orbit_enumerator_matches_naive_filter(x_set, y_set):
    fast = sorted(m.table for m in enumerate_equivariant_maps(x_set, y_set))
    assert fast == sorted(naive_equivariant_maps(x_set, y_set))


@given(st.sampled_from(PROBES))
def test_burnside_count(x_set):
    group = x_set.group
    fixed = sum(1 for g in group.elements for x in x_set.points if x_set.act[g][x] == x)
    assert fixed == orbits(x_set).orbit_count * group.order
