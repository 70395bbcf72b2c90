import pytest

from src.errors import SizeBoundExceeded
from src.simplicial.duplicial import Simplex, nerve_config
from src.simplicial.homology import (
    boundary_matrices,
    check_boundary_squared,
    element_order_profile,
    h1_matches_abelianization,
    homology_groups,
    ordering_invariance,
)
from src.utils.smith import invariant_factors, rank, smith_diagonal


def summary(groups):
    return [(g.betti, g.torsion) for g in groups]


def test_cyclic_three_nerve(c3):
    dcfg = nerve_config(c3, 4)
    groups = homology_groups(dcfg)
    assert summary(groups) == [(1, []), (0, [3]), (0, []), (0, [3])]
    assert str(groups[1]) == "Z/3"
    assert str(groups[2]) == "0"
    assert str(groups[0]) == "Z"


def test_cyclic_two_nerve(c2):
    assert summary(homology_groups(nerve_config(c2, 5))) == [(1, []), (0, [2]), (0, []), (0, [2]), (0, [])]


def test_symmetric_three_h1(s3):
    dcfg = nerve_config(s3, 2)
    groups = homology_groups(dcfg)
    assert summary(groups) == [(1, []), (0, [2])]
    assert h1_matches_abelianization(dcfg, groups).passed


def test_boundary_squared(small_group):
    matrices = boundary_matrices(nerve_config(small_group, 3))
    assert [m.level for m in matrices] == [1, 2, 3]
    assert check_boundary_squared(matrices).passed


def test_boundary_shape(c3):
    d2 = boundary_matrices(nerve_config(c3, 2))[1]
    assert d2.shape == (3, 9)


def test_ordering_invariance(c3):
    dcfg = nerve_config(c3, 3)
    assert ordering_invariance(dcfg).passed
    assert ordering_invariance(dcfg, groups=homology_groups(dcfg)).passed


def test_cell_bound(s3):
    with pytest.raises(SizeBoundExceeded):
        boundary_matrices(nerve_config(s3, 4), cell_bound=1000)


def test_h1_is_abelianization(small_group):
    dcfg = nerve_config(small_group, 2)
    assert h1_matches_abelianization(dcfg, homology_groups(dcfg)).passed


def test_smith_normal_form():
    assert smith_diagonal([[2, 4], [6, 8]], 2) == [2, 4]
    assert smith_diagonal([[1, 2], [2, 4]], 2) == [1]
    assert smith_diagonal([], 0) == []
    assert rank([[0, 0], [0, 0]], 2) == 0


def test_invariant_factors_divide():
    assert invariant_factors([4, 6]) == [2, 12]
    assert invariant_factors([0, 3, 0]) == [3]


def test_element_order_profile():
    assert element_order_profile([2]) == (1, 2)
    assert element_order_profile([2, 2]) == (1, 2, 2, 2)
    assert element_order_profile([]) == (1,)


def test_boundary_squared_reports_corrupted_matrix(c2):
    dcfg = nerve_config(c2, 3)
    matrices = boundary_matrices(dcfg)
    d1 = matrices[0]
    d1.entries[0][d1.cols.index(Simplex((0,), 0))] += 1
    verdict = check_boundary_squared(matrices)
    assert not verdict.passed
    assert verdict.witness is not None
    assert verdict.lhs == 1
