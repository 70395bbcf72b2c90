import itertools

import pytest
from hypothesis import given, strategies as st

from src.algebra.crossed import (
    braiding_preserves_alpha_predicted,
    check_braiding,
    check_braiding_naturality,
    check_yang_baxter,
    crossed_from,
    crossed_monoidal,
    diagonal_comonoid,
    enumerate_crossed_morphisms,
    enumerate_crossed_structures,
    trivial_crossed,
)
from src.algebra.fingroup import standard_group
from src.algebra.gset import conj, point, regular, trivial
from src.errors import NotCrossed

S3 = standard_group("symmetric", 3)
CONJ_STRUCTURES = enumerate_crossed_structures(conj(S3))
SMALL_STRUCTURES = CONJ_STRUCTURES + [trivial_crossed(point(S3)), trivial_crossed(trivial(S3, 2))]


def test_identity_on_conjugation_is_crossed(s3):
    x = crossed_from(conj(s3), list(s3.elements))
    assert x.describe_alpha()[1] == "(23)"


def test_identity_on_regular_is_not_crossed(s3):
    with pytest.raises(NotCrossed):
        crossed_from(regular(s3), list(s3.elements))


def test_structure_counts(s3, c3):
    assert len(enumerate_crossed_structures(regular(s3))) == 6
    assert len(enumerate_crossed_structures(conj(c3))) == 27
    assert len(CONJ_STRUCTURES) == 6


def test_monoidal_product_alpha_multiplies(s3):
    x = crossed_from(conj(s3), list(s3.elements))
    product, sigma = crossed_monoidal(x, x)
    assert product.alpha[product.base.pair(1, 3)] == s3.m(1, 3)
    assert sigma.is_bijective


@given(st.sampled_from(CONJ_STRUCTURES), st.sampled_from(CONJ_STRUCTURES))
def test_braiding_alpha_matches_prediction(x, y):
    bijective, equivariant, keeps_alpha = check_braiding(x, y)
    assert bijective.passed and equivariant.passed
    assert keeps_alpha.passed == braiding_preserves_alpha_predicted(x, y)


def test_braiding_breaks_alpha_for_identity_structure(s3):
    x = crossed_from(conj(s3), list(s3.elements))
    assert not braiding_preserves_alpha_predicted(x, x)
    assert not check_braiding(x, x)[2].passed


@given(st.sampled_from(SMALL_STRUCTURES), st.sampled_from(SMALL_STRUCTURES), st.sampled_from(SMALL_STRUCTURES))
def test_yang_baxter(x, y, z):
    assert check_yang_baxter(x, y, z).passed


def test_braiding_naturality_on_crossed_morphisms(s3):
    x = crossed_from(conj(s3), list(s3.elements))
    t = trivial_crossed(point(s3))
    for f, g in itertools.product(enumerate_crossed_morphisms(x, x), enumerate_crossed_morphisms(t, t)):
        assert check_braiding_naturality(f, g).passed


def test_crossed_morphisms_preserve_alpha(s3):
    x = crossed_from(conj(s3), list(s3.elements))
    t = trivial_crossed(point(s3))
    assert len(enumerate_crossed_morphisms(x, t)) == 0
    assert len(enumerate_crossed_morphisms(t, x)) == 1


def test_diagonal_comonoid(s3):
    plain = diagonal_comonoid(conj(s3))
    assert len(plain) == 3 and all(v.passed for v in plain)
    assert all(v.passed for v in diagonal_comonoid(trivial_crossed(conj(s3))))
    identity = diagonal_comonoid(crossed_from(conj(s3), list(s3.elements)))
    assert [v.passed for v in identity] == [True, True, True, False]
