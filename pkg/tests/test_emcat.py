import pytest

from src.algebra.fingroup import standard_group
from src.algebra.gset import conj, point, regular, trivial
from src.categorical.emcat import (
    CofreeAdjunction,
    Q_comonad,
    check_coalgebra_axioms,
    coalgebra_from_beta1,
    coalgebra_universe,
    cofree,
    colax_check,
    enumerate_coalgebras,
    lax_iso_check,
    mate_lambda,
    omega_gamma,
)
from src.categorical.functors import build_probe_universe
from src.core.fixtures import fixture_groups, fixture_l_sets
from src.errors import NotEquivariant
from src.verdict import all_passed

C3 = standard_group("cyclic", 3)
S3 = standard_group("symmetric", 3)


@pytest.fixture(scope="module")
def c3_setup():
    base = build_probe_universe(C3)
    l_set = regular(C3)
    return l_set, base, coalgebra_universe(l_set, base)


def test_enumerated_coalgebras_satisfy_axioms():
    for l_set in (regular(S3), conj(S3)):
        for x in (regular(S3), conj(S3), point(S3)):
            for c in enumerate_coalgebras(x, l_set):
                assert check_coalgebra_axioms(c).passed


def test_coalgebra_counts():
    assert len(enumerate_coalgebras(regular(S3), conj(S3))) == 6
    assert enumerate_coalgebras(point(S3), regular(S3)) == []


def test_non_equivariant_coaction():
    with pytest.raises(NotEquivariant):
        coalgebra_from_beta1(conj(S3), regular(S3), [0] * 6)


def test_cofree_is_a_coalgebra():
    assert check_coalgebra_axioms(cofree(conj(S3), regular(S3))).passed


def test_cofree_adjunction():
    adjunction = CofreeAdjunction(trivial(C3, 2), regular(C3))
    for c in enumerate_coalgebras(regular(C3), regular(C3)):
        assert all_passed(adjunction.round_trip_verdicts(c))
        assert all_passed(adjunction.triangle_verdicts(c))


def test_q_comonad(c3_setup):
    l_set, _, coalgebras = c3_setup
    assert all_passed(Q_comonad(l_set).verdicts(coalgebras))


def test_omega_gamma_for_every_a_bar(c3_setup):
    l_set, base, _ = c3_setup
    for a in C3.elements:
        assert all_passed(omega_gamma(l_set, a).verdicts(base.objects))


LAX_CASES = [(g, kind) for g in fixture_groups() for kind in ("regular", "conj", "trivial2")]


@pytest.fixture(scope="module", params=LAX_CASES, ids=[f"{g.name}-{kind}" for g, kind in LAX_CASES])
def lax_setup(request):
    group, kind = request.param
    base = build_probe_universe(group)
    l_set = fixture_l_sets(group)[kind]
    return l_set, base, coalgebra_universe(l_set, base)


def test_lax_iso_holds_only_at_identity(lax_setup):
    l_set, base, _ = lax_setup
    group = l_set.group
    for a in group.elements:
        assert lax_iso_check(l_set, a, base.objects).passed == (a == group.identity)


def test_colax_holds_only_at_identity(lax_setup):
    l_set, _, coalgebras = lax_setup
    group = l_set.group
    for a in group.elements:
        assert colax_check(l_set, a, coalgebras.objects).passed == (a == group.identity)


def test_mate_lambda_closed_form(c3_setup):
    l_set, _, coalgebras = c3_setup
    for a in C3.elements:
        assert all_passed(mate_lambda(l_set, a).verdicts(coalgebras.objects))
