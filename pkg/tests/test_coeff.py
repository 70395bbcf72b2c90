import pytest

from src.algebra.fingroup import standard_group
from src.algebra.gset import conj, point, regular, s_product, t_product, trivial
from src.categorical.coeff import (
    CoefficientCorrespondence,
    coefficient_config,
    correspondence,
    enumerate_h,
    h_declaration_verdict,
    lambda_from_h,
    lambda_injectivity,
    nabla,
    rho_verdicts,
    translation_defect,
)
from src.categorical.emcat import cofree, enumerate_coalgebras
from src.core.fixtures import fixture_configs
from src.errors import ConfigInvalid, NotEquivariant, NotWellDefined
from src.verdict import all_passed

C3 = standard_group("cyclic", 3)
S3 = standard_group("symmetric", 3)


def translation_config(group):
    return coefficient_config(regular(group), regular(group), list(group.elements), list(group.elements))


def central_config(group):
    return coefficient_config(conj(group), point(group), list(group.elements), [0], "conjugation")


def coalgebras_over(l_set):
    group = l_set.group
    found = []
    for x in (regular(group), conj(group), point(group), trivial(group, 2)):
        found.extend(enumerate_coalgebras(x, l_set))
    return found


def test_alpha_is_inverse_of_h_after_f(s3):
    cfg = translation_config(s3)
    assert cfg.alpha() == tuple(s3.inv[w] for w in s3.elements)
    assert central_config(s3).alpha() == (0,)


def test_f_must_be_equivariant(c2):
    with pytest.raises(NotEquivariant):
        coefficient_config(regular(c2), regular(c2), [0, 1], [0, 0])


def test_tables_must_fit(c2):
    with pytest.raises(ConfigInvalid):
        coefficient_config(regular(c2), point(c2), [0], [0])
    with pytest.raises(ConfigInvalid):
        coefficient_config(regular(c2), point(c2), [0, 1], [0], a_bar=5)


def test_h_declaration(c2):
    cfg = coefficient_config(regular(c2), regular(c2), [0, 1], [0, 1], "conjugation")
    assert not h_declaration_verdict(cfg).passed
    assert h_declaration_verdict(translation_config(c2)).passed


def test_enumerate_h_counts():
    assert len(enumerate_h(regular(C3))) == 3
    assert len(enumerate_h(conj(S3), "conjugation")) == 6
    assert enumerate_h(point(S3), "translation") == []


def test_translation_defect(s3):
    assert translation_defect(tuple(s3.elements), regular(s3)) is None
    assert translation_defect(tuple(s3.elements), conj(s3)) is not None
    assert translation_defect(tuple(s3.elements), conj(s3), over=[0]) is not None


def test_rho(s3):
    assert all_passed(rho_verdicts(central_config(s3)))
    assert all_passed(rho_verdicts(translation_config(s3)))


def test_lambda_from_translation(c3):
    result = lambda_from_h(translation_config(c3))
    assert result.predicted is True
    assert all_passed(result.verdicts)


def test_lambda_from_conjugation_is_not_equivariant(s3):
    result = lambda_from_h(central_config(s3))
    assert result.predicted is False
    declared, equivariant, _ = result.verdicts
    assert declared.passed
    assert not equivariant.passed


def test_lambda_strict_rejects_bad_declaration(c2):
    cfg = coefficient_config(regular(c2), regular(c2), [0, 1], [0, 1], "conjugation")
    with pytest.raises(NotEquivariant):
        lambda_from_h(cfg, strict=True)


def test_lambda_strict_accepts_translation(c3):
    assert lambda_from_h(translation_config(c3), strict=True).orbit_map == {0: 0, 1: 1, 2: 2}


def test_lambda_injectivity(c3):
    base = translation_config(c3)
    configs = [base.with_h(h) for h in enumerate_h(regular(c3))]
    assert lambda_injectivity(configs, regular(c3)) == (3, 3)


@pytest.mark.parametrize("group", [C3, S3], ids=["C3", "S3"])
def test_nabla_matches_translation_prediction(group):
    for cfg in fixture_configs(group, l_kinds=["regular", "conj"], n_kinds=["point"]):
        for c in coalgebras_over(cfg.l_set):
            result = nabla(cfg, c)
            morphism, counit, _, _ = result.verdicts
            assert counit.passed
            assert morphism.passed == result.predicted
            assert result.passed == result.predicted


def test_nabla_rejects_foreign_coalgebra(c3):
    cfg = translation_config(c3)
    with pytest.raises(ConfigInvalid):
        nabla(cfg, cofree(point(c3), conj(c3)))


def test_correspondence_round_trips(c3):
    cfg = translation_config(c3)
    objects = [point(c3), regular(c3), trivial(c3, 2)]
    coalgebras = coalgebras_over(cfg.l_set) + [cofree(x, cfg.l_set) for x in objects]
    for direction in ("forward", "backward"):
        mapping, verdict = correspondence(cfg, direction, objects, coalgebras)
        assert verdict.passed
        assert mapping


def test_correspondence_chains_agree_with_direct_formulas(c3):
    corr = CoefficientCorrespondence(translation_config(c3))
    for c in coalgebras_over(regular(c3)):
        assert corr.direct_check(c).passed
    assert corr.backward_direct_check(regular(c3)).passed


def test_unknown_direction(c3):
    with pytest.raises(ConfigInvalid):
        correspondence(translation_config(c3), "sideways", [], [])


def test_orbit_map_independent_of_representative(c3):
    cfg = translation_config(c3)
    result = lambda_from_h(cfg, s_product(regular(c3), regular(c3)))
    assert result.verdicts[2].passed
    assert len(result.orbit_map) == 9


def test_not_well_defined_is_reported(s3):
    cfg = coefficient_config(conj(s3), conj(s3), list(s3.elements), list(s3.elements), "conjugation")
    assert not lambda_from_h(cfg).verdicts[2].passed
    with pytest.raises(NotWellDefined):
        lambda_from_h(cfg, strict=True)


def test_nabla_coassociativity_fails_off_translation(c3):
    cfg = central_config(c3)
    c = next(c for c in enumerate_coalgebras(regular(c3), cfg.l_set) if set(c.beta1) == {1})
    result = nabla(cfg, c)
    morphism, counit, coassoc, _ = result.verdicts
    assert result.predicted is False
    assert counit.passed
    assert not coassoc.passed
    assert not morphism.passed
    assert not result.passed


def test_chains_pass_through_lambda_inverse(c3):
    cfg = translation_config(c3)
    pinned = CoefficientCorrespondence(cfg)
    tx = t_product(point(c3))
    assert [pinned.lambda_inverse(point(c3), p) for p in tx.points] == list(tx.points)
    shifted = CoefficientCorrespondence(cfg, a_bar=1)
    assert shifted.lambda_inverse(point(c3), tx.pair(1, 0)) == tx.pair(0, 0)
    assert shifted.lambda_inverse(point(c3), tx.pair(0, 0)) == tx.pair(2, 0)
