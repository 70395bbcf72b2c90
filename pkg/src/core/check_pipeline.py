"""
Check pipeline: runs the selected suites on a resolved scenario and
assembles the report.
"""
import logging
import time
from typing import Callable, Dict, List, Optional

import config
from src.algebra.crossed import (
    CrossedGSet,
    braiding_preserves_alpha_predicted,
    check_braiding,
    check_braiding_naturality,
    check_yang_baxter,
    crossed_monoidal,
    crossed_witness,
    diagonal_comonoid,
    enumerate_crossed_morphisms,
    enumerate_crossed_structures,
    trivial_crossed,
)
from src.algebra.gset import (
    GSet,
    EquivariantMap,
    enumerate_equivariant_maps,
    equivariant_search_size,
    naive_equivariant_maps,
    orbits,
    point,
    regular,
    trivial,
)
from src.categorical.coeff import (
    CoefficientConfig,
    correspondence,
    enumerate_coefficient_configs,
    enumerate_h,
    lambda_from_h,
    lambda_injectivity,
    nabla,
    rho_verdicts,
    translation_defect,
    CoefficientCorrespondence,
)
from src.categorical.comonad import (
    ThetaXi,
    build_S,
    build_T,
    chi,
    chi_inverse,
    chi_table,
    comonad_law_verdicts,
    derive_law_components,
    distributive_law_verdicts,
    identity_omega,
    mate,
    search_counit_compatible_laws,
)
from src.categorical.emcat import (
    CofreeAdjunction,
    Q_comonad,
    coalgebra_universe,
    colax_verdicts,
    lax_iso_verdicts,
    mate_lambda,
    omega_gamma,
)
from src.categorical.functors import (
    ProbeUniverse,
    build_probe_universe,
    check_mutually_inverse,
    compare_maps,
)
from src.categorical.triangle import (
    FFamily,
    adjunction_counit,
    adjunction_unit,
    classify_phi,
    comparison_K_verdicts,
    equalizer_verdict,
    phi_from_f,
    pi_theta,
    search_comonad_morphisms,
)
from src.core.report import Report, SuiteResult
from src.core.scenario import Scenario
from src.errors import SizeBoundExceeded
from src.simplicial.duplicial import (
    DuplicialConfig,
    compare_operator_presentations,
    composite_verdicts,
    cyclicity,
    duplicial_config,
    duplicial_verdicts,
    identity_at_level_zero,
    nerve_config,
    simplicial_verdicts,
)
from src.simplicial.homology import (
    boundary_matrices,
    check_boundary_squared,
    h1_matches_abelianization,
    homology_groups,
    ordering_invariance,
)
from src.verdict import fail, ok

logger = logging.getLogger(__name__)

# Triangle checks enumerate maps Y -> D(c); plain sets stay this small
MAX_TRIANGLE_SET = 3
# Uniqueness search over L x G x~ X -> G x~ L x X is run for groups up to this order
MAX_UNIQUENESS_ORDER = 3
# Hom counts are cross-checked against the naive filter below this many tables
NAIVE_HOM_BOUND = 4096


class CheckPipeline:
    """Runs suites in the fixed order laws, distributive, ..., classify."""

    def __init__(self, scenario: Scenario, timing: bool = False):
        self.scenario = scenario
        self.timing = timing
        self.group = scenario.group
        self._universe: Optional[ProbeUniverse] = None
        self._coalgebra_universes: Dict[GSet, ProbeUniverse] = {}
        self._suites: Dict[str, Callable[[SuiteResult], None]] = {
            "laws": self.run_laws_suite,
            "distributive": self.run_distributive_suite,
            "crossed": self.run_crossed_suite,
            "lax-colax": self.run_lax_colax_suite,
            "correspondence": self.run_correspondence_suite,
            "triangle": self.run_triangle_suite,
            "duplicial": self.run_duplicial_suite,
            "cyclicity": self.run_cyclicity_suite,
            "homology": self.run_homology_suite,
            "classify": self.run_classify_suite,
        }

    # ----- shared objects -----

    @property
    def universe(self) -> ProbeUniverse:
        if self._universe is None:
            self._universe = build_probe_universe(
                self.group, list(self.scenario.gsets.values()), self.scenario.probe_map_bound
            )
        return self._universe

    def coalgebra_universe(self, l_set: GSet) -> ProbeUniverse:
        if l_set not in self._coalgebra_universes:
            self._coalgebra_universes[l_set] = coalgebra_universe(
                l_set, self.universe, self.scenario.probe_map_bound
            )
        return self._coalgebra_universes[l_set]

    def coalgebras(self, l_set: GSet):
        return [c for c in self.coalgebra_universe(l_set).objects if not c.label]

    def l_sets(self) -> List[GSet]:
        """Distinct L of the coefficient sections, or every named G-set."""
        candidates = [c.l_set for c in self.scenario.coefficients] or list(self.scenario.gsets.values())
        out: List[GSet] = []
        for x in candidates or [regular(self.group)]:
            if x not in out:
                out.append(x)
        return out

    def duplicial_configs(self) -> List[DuplicialConfig]:
        cap = self.scenario.level_cap
        configs = [nerve_config(self.group, cap)]
        configs += [duplicial_config(cfg, cap) for cfg in self.scenario.coefficients]
        return configs

    # ----- run -----

    def run(self) -> Report:
        report = Report(
            scenario=self.scenario.source,
            level_cap=self.scenario.level_cap,
            note=f"simplicial checks are exhaustive up to level {self.scenario.level_cap}",
        )
        for name in self.scenario.suites:
            suite = SuiteResult(suite=name)
            start = time.perf_counter()
            logger.info("Running suite %s", name)
            self._suites[name](suite)
            if self.timing:
                suite.seconds = round(time.perf_counter() - start, 3)
            logger.info("Suite %s: %s", name, "satisfied" if suite.satisfied else "VIOLATED")
            report.suites.append(suite)
        return report

    # ----- suites -----

    def run_laws_suite(self, suite: SuiteResult) -> None:
        universe = self.universe
        suite.add_all(comonad_law_verdicts(build_T(self.group), universe))
        for l_set in self.l_sets():
            suite.add_all(comonad_law_verdicts(build_S(l_set), universe))
            q = Q_comonad(l_set)
            suite.add_all(q.verdicts(self.coalgebra_universe(l_set)))
            for x in universe.objects:
                theta_xi = ThetaXi(x, l_set)
                try:
                    suite.add_all(theta_xi.round_trip_verdicts())
                except SizeBoundExceeded as e:
                    suite.notes.append(f"theta/xi at {x.name}: {e}")
                adjunction = CofreeAdjunction(x, l_set)
                for c in self.coalgebras(l_set)[:4]:
                    suite.add_all(adjunction.round_trip_verdicts(c))
                    suite.add_all(adjunction.triangle_verdicts(c))
            lam = mate(identity_omega(l_set), "F-|U", l_set)
            for size in (1, 2):
                y = trivial(self.group, size)
                expected = EquivariantMap(lam.at(y).domain, lam.at(y).codomain, tuple(chi_table(l_set, y)))
                suite.add(compare_maps("mate.F-U-is-chi", lam.at(y), expected, y.name))

    def run_distributive_suite(self, suite: SuiteResult) -> None:
        universe = self.universe
        t_comonad = build_T(self.group)
        for l_set in self.l_sets():
            s_comonad = build_S(l_set)
            suite.add(check_mutually_inverse("chi.inverse", chi(l_set), chi_inverse(l_set), universe.objects))
            suite.add_all(distributive_law_verdicts(chi_inverse(l_set), s_comonad, t_comonad, universe))
            suite.add_all(distributive_law_verdicts(chi(l_set), t_comonad, s_comonad, universe))
            for x in universe.objects:
                suite.add(derive_law_components(chi_inverse(l_set).at(x), l_set).matches_forced)
            if self.group.order <= MAX_UNIQUENESS_ORDER:
                try:
                    survivors, verdict = search_counit_compatible_laws(l_set, point(self.group))
                    suite.add(verdict)
                    suite.table("uniqueness", {"L": l_set.name, "X": "point", "survivors": len(survivors)})
                except SizeBoundExceeded as e:
                    suite.notes.append(f"uniqueness search skipped for {l_set.name}: {e}")

    def _crossed_objects(self) -> List[CrossedGSet]:
        objects = list(self.scenario.crossed.values())
        if not objects:
            for x in self.scenario.gsets.values():
                objects.append(trivial_crossed(x))
            objects.extend(enumerate_crossed_structures(regular(self.group))[:2])
        return objects[:4]

    def run_crossed_suite(self, suite: SuiteResult) -> None:
        objects = self._crossed_objects()
        group = self.group
        for x in objects:
            comonoid = diagonal_comonoid(x)
            suite.add_all(comonoid[:3])
            suite.add(comonoid[3], prediction=all(a == group.identity for a in x.alpha))
            witness = crossed_witness(x.base, x.alpha)
            suite.add(ok("crossed.axiom", x.base.size * group.order, x.name) if witness is None
                      else fail("crossed.axiom", x.base.size * group.order, x.name, witness))
        for x in objects:
            for y in objects:
                product, _ = crossed_monoidal(x, y)
                suite.add(ok("crossed.product-is-crossed", product.base.size, product.base.name))
                bij, equi, keeps = check_braiding(x, y)
                suite.add(bij)
                suite.add(equi)
                suite.add(keeps, prediction=braiding_preserves_alpha_predicted(x, y))
                suite.table("braiding", {"X": x.name, "Y": y.name, "preserves_alpha": keeps.passed})
        for x in objects[:3]:
            for y in objects[:3]:
                for z in objects[:2]:
                    suite.add(check_yang_baxter(x, y, z))
        for x in objects[:2]:
            for y in objects[:2]:
                fs = enumerate_crossed_morphisms(x, x)[:2]
                gs = enumerate_crossed_morphisms(y, y)[:2]
                for f in fs:
                    for g in gs:
                        suite.add(check_braiding_naturality(f, g))

    def run_lax_colax_suite(self, suite: SuiteResult) -> None:
        objects = self.universe.objects
        group = self.group
        for l_set in self.l_sets():
            coalgebras = self.coalgebras(l_set)
            for a in group.elements:
                predicted = a == group.identity
                lax = lax_iso_verdicts(l_set, a, objects)
                colax = colax_verdicts(l_set, a, coalgebras)
                suite.add(lax[0], prediction=predicted)
                suite.add(lax[1], prediction=True if predicted else None)
                suite.add(colax[0], prediction=predicted)
                suite.add(colax[1], prediction=True if predicted else None)
                suite.add_all(omega_gamma(l_set, a).verdicts(objects))
                suite.add_all(mate_lambda(l_set, a).verdicts(coalgebras))
                suite.table("lax-colax", {
                    "L": l_set.name, "a_bar": group.label(a),
                    "lax": lax[0].passed and lax[1].passed, "colax": colax[0].passed and colax[1].passed,
                })

    def run_correspondence_suite(self, suite: SuiteResult) -> None:
        for cfg in self.scenario.coefficients:
            self._correspondence_for(suite, cfg, record=True)
            for h in enumerate_h(cfg.l_set, cfg.h_action, cfg.h_table):
                if tuple(h) != cfg.h:
                    self._correspondence_for(suite, cfg.with_h(h), record=False)
            hs = [cfg.with_h(h) for h in enumerate_h(cfg.l_set, cfg.h_action, cfg.h_table)]
            count, distinct = lambda_injectivity(hs, cfg.n_set)
            suite.table("lambda-injectivity", {"config": cfg.name, "h_count": count, "distinct_lambda": distinct})

    def _correspondence_for(self, suite: SuiteResult, cfg: CoefficientConfig, record: bool) -> None:
        exact = translation_defect(cfg.h, cfg.l_set) is None
        coalgebras = self.coalgebras(cfg.l_set)
        objects = [cfg.n_set] + [x for x in self.universe.objects if x != cfg.n_set][:2]
        if record:
            suite.add_all(rho_verdicts(cfg))
            lam = lambda_from_h(cfg)
            declared, equivariant, defined = lam.verdicts
            suite.add(declared)
            suite.add(equivariant, prediction=lam.predicted)
            suite.add(defined, prediction=True if lam.predicted else None)
            for c in coalgebras:
                result = nabla(cfg, c)
                suite.add_all(result.verdicts[1:2])
                for v in result.verdicts[:1] + result.verdicts[2:]:
                    suite.add(v, prediction=True if result.predicted else None)
                combined = all(v.passed for v in result.verdicts)
                suite.add(
                    ok("nabla.prediction", 1, c.name) if combined == result.predicted
                    else fail("nabla.prediction", 1, c.name, None, combined, result.predicted)
                )
        prediction = True if exact else None
        corr = CoefficientCorrespondence(cfg)
        for direction in ("forward", "backward"):
            _, verdict = correspondence(cfg, direction, objects, coalgebras)
            suite.add(verdict, prediction=prediction)
        for c in coalgebras:
            suite.add(corr.direct_check(c), prediction=prediction)
        for x in objects:
            suite.add(corr.backward_direct_check(x), prediction=prediction)

    def run_triangle_suite(self, suite: SuiteResult) -> None:
        objects = self.universe.objects
        sizes = sorted({s for s in self.scenario.sets.values() if 1 <= s <= MAX_TRIANGLE_SET}) or [1, 2]
        for l_set in self.l_sets():
            coalgebras = self.coalgebras(l_set)
            for l0 in orbits(l_set).representatives:
                family = FFamily.constant(l_set, l0)
                morphism = phi_from_f(family, objects, strict=True)
                suite.add_all(morphism.verdicts(self.universe))
                _, classified = classify_phi(morphism.phi, l_set, objects)
                suite.add(classified)
                for size in sizes:
                    y = trivial(self.group, size)
                    suite.add_all(comparison_K_verdicts(y, family))
                    _, dky, unit_bijective = adjunction_unit(y, family)
                    suite.table("K-D", {"L": l_set.name, "l0": l_set.describe(l0), "Y": size,
                                        "DKY": dky, "unit_bijective": unit_bijective})
                    for c in coalgebras:
                        suite.add(equalizer_verdict(c, family))
                        try:
                            suite.add_all(pi_theta(y, c, family).verdicts())
                        except SizeBoundExceeded as e:
                            suite.notes.append(f"Pi/Theta skipped for {c.name}: {e}")
                for c in coalgebras[:3]:
                    kdc, size_c, bijective = adjunction_counit(c, family)
                    if not bijective:
                        suite.notes.append(
                            f"counit K D c -> c is not bijective at {c.name} (l0={l_set.describe(l0)}): "
                            f"|K D c| = {kdc}, |c| = {size_c}"
                        )
            try:
                count, verdict = search_comonad_morphisms(l_set, point(self.group))
                suite.add(verdict)
                suite.table("phi-search", {"L": l_set.name, "X": "point", "morphisms": count})
            except SizeBoundExceeded as e:
                suite.notes.append(f"phi search skipped for {l_set.name}: {e}")

    def run_duplicial_suite(self, suite: SuiteResult) -> None:
        for dcfg in self.duplicial_configs():
            suite.add_all(simplicial_verdicts(dcfg))
            suite.add_all(duplicial_verdicts(dcfg))
            stabilizing = all(
                dcfg.n_set.act[dcfg.alpha[w]][w] == w for w in dcfg.n_set.points
            )
            faulty = duplicial_verdicts(dcfg, identity_at_level_zero(dcfg))[0]
            suite.add(faulty.model_copy(update={"law": "duplicial.dt[t0=id]"}), prediction=stabilizing)
            if dcfg.coefficients is None:
                continue
            predicted, verdicts = composite_verdicts(dcfg)
            for v in verdicts:
                suite.add(v, prediction=predicted)
            count, _, presentations = compare_operator_presentations(dcfg)
            suite.add(presentations, prediction=None)
            suite.table("presentations", {"config": dcfg.name, "differing_simplices": count})

    def run_cyclicity_suite(self, suite: SuiteResult) -> None:
        for dcfg in self.duplicial_configs():
            result = cyclicity(dcfg)
            suite.add(result.criterion, prediction=None)
            suite.add(result.brute, prediction=result.criterion.passed)
            suite.add(result.agreement)
            if result.criterion.passed:
                suite.add(ok("cyclicity.crossed-candidate", 1, dcfg.name) if result.crossed is not None
                          else fail("cyclicity.crossed-candidate", 1, dcfg.name, list(dcfg.alpha)))
            if dcfg.coefficients is None:
                expected = {n: nerve_order(self.group, n) for n in result.orders}
                bad = next((n for n in result.orders if result.orders[n] != expected[n]), None)
                suite.add(ok("cyclicity.nerve-order", len(expected), dcfg.name) if bad is None
                          else fail("cyclicity.nerve-order", len(expected), dcfg.name, bad,
                                    result.orders[bad], expected[bad]))
            suite.table("cyclicity", {
                "config": dcfg.name,
                "alpha": [self.group.label(a) for a in dcfg.alpha],
                "criterion": result.criterion.passed,
                "brute": result.brute.passed,
                "orders": {str(n): k for n, k in result.orders.items()},
            })

    def _homology_cap(self, dcfg: DuplicialConfig, suite: SuiteResult) -> int:
        cap = self.scenario.homology_cap
        if dcfg.coefficients is not None:
            cap = min(cap, self.scenario.level_cap)
        wanted = cap
        order, size = dcfg.group.order, dcfg.n_set.size
        while cap > 1 and order ** (2 * cap - 1) * size * size > config.HOMOLOGY_CELL_BOUND:
            cap -= 1
        if cap < wanted:
            suite.notes.append(f"{dcfg.name}: homology computed to level {cap - 1} (cell bound)")
        return cap

    def run_homology_suite(self, suite: SuiteResult) -> None:
        for dcfg in self.duplicial_configs():
            cap = self._homology_cap(dcfg, suite)
            matrices = boundary_matrices(dcfg, cap)
            suite.add(check_boundary_squared(matrices))
            groups = homology_groups(dcfg, cap, matrices=matrices)
            h0 = groups[0]
            n_orbits = orbits(dcfg.n_set).orbit_count
            suite.add(ok("homology.h0-orbits", 1, dcfg.name) if (h0.betti, h0.torsion) == (n_orbits, [])
                      else fail("homology.h0-orbits", 1, dcfg.name, None, str(h0), n_orbits))
            if dcfg.n_set.size == 1:
                suite.add(h1_matches_abelianization(dcfg, groups))
            suite.add(ordering_invariance(dcfg, cap, groups))
            for g in groups:
                suite.table("homology", {"config": dcfg.name, "level": g.level, "group": str(g),
                                         "betti": g.betti, "torsion": g.torsion})

    def run_classify_suite(self, suite: SuiteResult) -> None:
        gsets = list(self.scenario.gsets.items())
        for name, x in gsets:
            try:
                structures = len(enumerate_crossed_structures(x))
            except SizeBoundExceeded as e:
                structures = None
                suite.notes.append(f"crossed structures on {name} not enumerated: {e}")
            suite.table("crossed-structures", {"gset": name, "count": structures})
            for action in ("translation", "conjugation"):
                suite.table("h-maps", {"L": name, "action": action, "count": len(enumerate_h(x, action))})
        for (xn, x), (yn, y) in ((a, b) for a in gsets for b in gsets):
            obj = f"{xn}->{yn}"
            try:
                maps = enumerate_equivariant_maps(x, y)
            except SizeBoundExceeded as e:
                suite.notes.append(f"Hom({obj}) not enumerated: {e}")
                continue
            suite.table("hom-counts", {"X": xn, "Y": yn, "count": len(maps),
                                       "search_space": equivariant_search_size(x, y)})
            if y.size ** x.size <= NAIVE_HOM_BOUND:
                naive = naive_equivariant_maps(x, y)
                tables = sorted(m.table for m in maps)
                suite.add(ok("classify.enumerator-matches-naive", len(naive), obj) if sorted(naive) == tables
                          else fail("classify.enumerator-matches-naive", len(naive), obj, None, len(maps), len(naive)))
        for cfg in self.scenario.coefficients:
            try:
                configs = enumerate_coefficient_configs(cfg.l_set, cfg.n_set, cfg.h_action)
            except SizeBoundExceeded as e:
                suite.notes.append(f"configurations of {cfg.name} not enumerated: {e}")
                continue
            cyclic = 0
            for candidate in configs:
                result = cyclicity(duplicial_config(candidate, self.scenario.level_cap))
                cyclic += result.criterion.passed
                suite.add(result.agreement)
            suite.table("coefficient-configs", {"config": cfg.name, "h_action": cfg.h_action,
                                                "count": len(configs), "cyclic": cyclic})


def run_scenario(scenario: Scenario, timing: bool = False) -> Report:
    return CheckPipeline(scenario, timing).run()


def nerve_order(group, n: int) -> int:
    """
    Order of t at level n of the cyclic nerve: n + 1, except that level 1
    collapses to 1 when every element is its own inverse.
    """
    if group.order == 1 or n == 0:
        return 1
    if n == 1 and all(group.inv[g] == g for g in group.elements):
        return 1
    return n + 1
