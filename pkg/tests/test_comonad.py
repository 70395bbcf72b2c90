import pytest

from src.algebra.fingroup import standard_group
from src.algebra.gset import EquivariantMap, conj, point, regular, s_product, t_product, trivial
from src.categorical.comonad import (
    ThetaXi,
    build_S,
    build_T,
    check_comonad_laws,
    check_distributive_law,
    chi,
    chi_inverse,
    chi_inverse_table,
    chi_table,
    derive_law_components,
    distributive_law_verdicts,
    identity_omega,
    mate,
    search_counit_compatible_laws,
)
from src.categorical.functors import (
    NatTransform,
    build_probe_universe,
    check_mutually_inverse,
    check_naturality,
    identity_functor,
    t_functor,
)
from src.core.fixtures import fixture_groups, fixture_l_sets
from src.errors import IncompatibleFunctors, NotEquivariant
from src.verdict import all_passed

GROUPS = fixture_groups()


@pytest.fixture(scope="module", params=GROUPS, ids=[g.name for g in GROUPS])
def universe(request):
    return build_probe_universe(request.param)


def test_t_comonad_laws(universe):
    group = universe.objects[0].group
    assert check_comonad_laws(build_T(group), universe).passed


def test_s_comonad_laws(universe):
    group = universe.objects[0].group
    for l_set in fixture_l_sets(group).values():
        assert check_comonad_laws(build_S(l_set), universe).passed


def test_chi_and_inverse(universe):
    for l_set in fixture_l_sets(universe.objects[0].group).values():
        forward, backward = chi(l_set), chi_inverse(l_set)
        assert check_mutually_inverse("chi", forward, backward, universe.objects).passed
        assert check_naturality(forward, universe).passed


def test_distributive_laws(universe):
    group = universe.objects[0].group
    t = build_T(group)
    for l_set in fixture_l_sets(group).values():
        s = build_S(l_set)
        assert all_passed(distributive_law_verdicts(chi_inverse(l_set), s, t, universe))
        assert check_distributive_law(chi(l_set), t, s, universe).passed


def test_law_components_have_forced_form(c3):
    l_set, x = conj(c3), trivial(c3, 2)
    stx = s_product(l_set, t_product(x))
    tsx = t_product(s_product(l_set, x))
    candidate = EquivariantMap(stx, tsx, tuple(chi_inverse_table(l_set, x)))
    components = derive_law_components(candidate, l_set)
    assert components.matches_forced.passed
    assert components.beta[(2, 1, 0)] == 1


def test_swapped_candidate_is_not_forced(c2):
    l_set, x = regular(c2), point(c2)
    stx = s_product(l_set, t_product(x))
    tsx = t_product(s_product(l_set, x))
    table = tuple(tsx.pair(g, s_product(l_set, x).pair(l, 0)) for l in l_set.points for g in c2.elements)
    components = derive_law_components(EquivariantMap(stx, tsx, table), l_set)
    assert not components.matches_forced.passed


@pytest.mark.parametrize("kind,n", [("cyclic", 2), ("cyclic", 3)])
def test_counit_compatibility_forces_chi_inverse(kind, n):
    group = standard_group(kind, n)
    for l_set in (regular(group), conj(group)):
        survivors, verdict = search_counit_compatible_laws(l_set, point(group))
        assert verdict.passed
        assert survivors == [tuple(chi_inverse_table(l_set, point(group)))]


def test_theta_xi_round_trip(c3):
    bijection = ThetaXi(point(c3), regular(c3))
    assert all_passed(bijection.round_trip_verdicts())
    assert bijection.theta(bijection.xi((2,))) == (2,)


def test_theta_rejects_non_equivariant(c2):
    bijection = ThetaXi(point(c2), regular(c2))
    with pytest.raises(NotEquivariant):
        bijection.theta((0, 0))


def test_mate_of_identity_is_chi(c3):
    l_set = conj(c3)
    lam = mate(identity_omega(l_set), "F-|U", l_set)
    for k in (1, 2):
        y = trivial(c3, k)
        assert lam.at(y).table == tuple(chi_table(l_set, y))


def test_mate_checks_shape(c3):
    wrong = NatTransform("eps", t_functor(), identity_functor(), lambda x: [])
    with pytest.raises(IncompatibleFunctors):
        mate(wrong, "F-|U", regular(c3))
