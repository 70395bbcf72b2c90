import pytest

from src.algebra.fingroup import standard_group
from src.algebra.gset import conj, orbits, point, regular, stabilizer
from src.categorical.emcat import cofree, enumerate_coalgebras
from src.categorical.functors import build_probe_universe
from src.categorical.triangle import (
    FFamily,
    adjunction_counit,
    adjunction_unit,
    as_set,
    classify_phi,
    comparison_K,
    comparison_K_verdicts,
    equalizer_D,
    equalizer_verdict,
    fixed_points,
    phi_from_f,
    pi_theta,
    search_comonad_morphisms,
)
from src.errors import ConfigInvalid, NotCoalgebraMorphism, NotComonadMorphism
from src.verdict import all_passed

C3 = standard_group("cyclic", 3)
S3 = standard_group("symmetric", 3)


@pytest.mark.parametrize("group", [C3, S3], ids=["C3", "S3"])
def test_constant_families_give_comonad_morphisms(group):
    universe = build_probe_universe(group)
    l_set = conj(group)
    for l0 in orbits(l_set).representatives:
        family = FFamily.constant(l_set, l0)
        morphism = phi_from_f(family, universe.objects, strict=True)
        assert all_passed(morphism.verdicts(universe))
        recovered, verdict = classify_phi(morphism.phi, l_set, universe.objects)
        assert verdict.passed
        assert recovered.at(point(group)) == (l0,)


def test_non_uniform_family_is_rejected(c2):
    l_set = regular(c2)
    family = FFamily(l_set, lambda x: [1 if x.kind == "T" else 0] * x.size, "split")
    with pytest.raises(NotComonadMorphism):
        phi_from_f(family, [point(c2)], strict=True)


def test_family_must_fit(c2):
    family = FFamily(regular(c2), lambda x: [5] * x.size)
    with pytest.raises(ConfigInvalid):
        family.at(point(c2))


def test_comonad_morphism_search(c3):
    count, verdict = search_comonad_morphisms(conj(c3), point(c3))
    assert count == 3
    assert verdict.passed


def test_comparison_functor(s3):
    family = FFamily.constant(conj(s3), 3)
    for size in (1, 2):
        y = as_set(size, s3)
        assert all_passed(comparison_K_verdicts(y, family))
        assert comparison_K(y, family).base.size == 6 * size


@pytest.mark.parametrize("l0", [0, 1, 3])
def test_unit_is_not_bijective(s3, l0):
    family = FFamily.constant(conj(s3), l0)
    y = as_set(2, s3)
    table, dky, bijective = adjunction_unit(y, family)
    assert dky == len(stabilizer(conj(s3), l0)) * 2
    assert not bijective
    assert len(table) == 2


def test_unit_at_fixed_point_of_trivial_group():
    trivial_group = standard_group("cyclic", 1)
    family = FFamily.constant(conj(trivial_group), 0)
    assert adjunction_unit(as_set(3, trivial_group), family)[2]


def test_counit_at_cofree_is_not_bijective(s3):
    family = FFamily.constant(conj(s3), 0)
    size, target, bijective = adjunction_counit(cofree(regular(s3), conj(s3)), family)
    assert (size, target) == (36, 36)
    assert not bijective


def test_equalizer_and_pi_theta(c3):
    l_set = conj(c3)
    family = FFamily.constant(l_set, 1)
    coalgebras = []
    for x in (regular(c3), conj(c3), point(c3)):
        coalgebras.extend(enumerate_coalgebras(x, l_set))
    for c in coalgebras:
        assert equalizer_verdict(c, family).passed
        for size in (1, 2):
            assert all_passed(pi_theta(as_set(size, c3), c, family).verdicts())


def test_pi_rejects_non_morphism(c3):
    l_set = conj(c3)
    family = FFamily.constant(l_set, 1)
    c = enumerate_coalgebras(point(c3), l_set)[0]
    bijection = pi_theta(as_set(1, c3), c, family)
    assert c.beta1 == (0,)
    with pytest.raises(NotCoalgebraMorphism):
        bijection.pi((0, 0, 0))


def test_equalizer_of_point(c3):
    l_set = conj(c3)
    c = enumerate_coalgebras(point(c3), l_set)[2]
    assert equalizer_D(c, FFamily.constant(l_set, 2)) == frozenset({0})
    assert equalizer_D(c, FFamily.constant(l_set, 1)) == frozenset()


def test_fixed_points(s3, c3):
    assert fixed_points(conj(s3)) == [0]
    assert fixed_points(conj(c3)) == [0, 1, 2]


def test_pi_after_theta_reports_a_wrong_theta(c3):
    l_set = conj(c3)
    family = FFamily.constant(l_set, 1)
    c = next(c for c in enumerate_coalgebras(regular(c3), l_set) if set(c.beta1) == {1})
    bijection = pi_theta(as_set(1, c3), c, family)
    assert bijection.d == [0, 1, 2]
    theta = bijection.theta
    bijection.theta = lambda q: theta(tuple((x + 1) % 3 for x in q))
    *_, pi_after_theta = bijection.verdicts()
    assert not pi_after_theta.passed
    assert pi_after_theta.witness == (0,)
