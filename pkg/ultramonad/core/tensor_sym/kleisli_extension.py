"""
Checks that θ makes SP^n_G extend to the Kleisli category of the max-min measure monad:

    condition 1:  θ_X ∘ SP^n_G(δ_X) = δ_{SP^n_G X}
    condition 2:  ξ_{SP X} ∘ J(θ_X) ∘ θ_{J X} = θ_X ∘ SP^n_G(ξ_X)
"""
import logging
from functools import partial

import numpy as np

from ultramonad.core.budgets import Budgets, DEFAULT_BUDGETS
from ultramonad.core.law_harness import LawReport, LawResult, run_law
from ultramonad.core.measures.measure import Measure, dirac
from ultramonad.core.measures.measure_kind import MeasureKind
from ultramonad.core.monad_ops.measure_of_measures import MeasureOfMeasures, measure_of_measures
from ultramonad.core.monad_ops.measure_space import as_measure, measure_space
from ultramonad.core.monad_ops.monad_structure import multiply
from ultramonad.core.sampling.random_objects import random_measure_of_measures, random_ultrametric_space
from ultramonad.core.tensor_sym.permutation_group import PermutationGroup
from ultramonad.core.tensor_sym.symmetric_power import all_point_tuples, sympow_space
from ultramonad.core.tensor_sym.theta import theta
from ultramonad.core.ultra_core.product_space import product_label
from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace

logger = logging.getLogger(__name__)

KLEISLI_MAX_SPACE_SIZE = 4
KLEISLI_MAX_OUTER_ATOMS = 2
KLEISLI_MAX_INNER_ATOMS = 2
KIND = MeasureKind.MAXMIN


def unit_condition(space: FinUltrametricSpace,
                   group: PermutationGroup,
                   budgets: Budgets = DEFAULT_BUDGETS) -> LawResult:
    """Condition 1, exhaustively over every point tuple of X^n."""
    orbit_space, pi_g = sympow_space(space, group, budgets)
    tuples = all_point_tuples(space, group.n)
    failures = []
    for entries in tuples:
        lifted = theta(group, [dirac(KIND, space, point) for point in entries], budgets)
        expected = dirac(KIND, orbit_space, pi_g.assignment[product_label(entries)])
        if lifted != expected:
            failures.append({"tuple": list(entries), "theta_of_diracs": str(lifted), "dirac_of_orbit": str(expected)})
    if failures:
        logger.warning(f"Kleisli unit condition failed on {len(failures)}/{len(tuples)} tuples")
    else:
        logger.success(f"Kleisli unit condition held on all {len(tuples)} tuples")
    return LawResult(trials=len(tuples), failures=len(failures), first_counterexample=failures[0] if failures else None)


def flatten_then_theta(group: PermutationGroup,
                       outer: list[MeasureOfMeasures],
                       budgets: Budgets = DEFAULT_BUDGETS) -> Measure:
    """θ_X ∘ SP^n_G(ξ_X)[M_1, …, M_n] = θ_X[ξ(M_1), …, ξ(M_n)]."""
    return theta(group, [multiply(big_m) for big_m in outer], budgets)


def theta_then_flatten(group: PermutationGroup,
                       outer: list[MeasureOfMeasures],
                       budgets: Budgets = DEFAULT_BUDGETS) -> Measure:
    """ξ ∘ J(θ_X) ∘ θ_{J(X)}[M_1, …, M_n], with J(X) restricted to the inner measures that occur."""
    base_space = outer[0].base_space
    space_of_measures = measure_space(inner for big_m in outer for inner in big_m.inner_measures)
    over_measures = theta(group, [as_measure(big_m, space_of_measures) for big_m in outer], budgets)

    orbit_space_of_measures, _ = sympow_space(space_of_measures.space, group, budgets, validate=False)
    target_space, _ = sympow_space(base_space, group, budgets, validate=False)
    pushed = measure_of_measures(
        KIND, target_space,
        ((theta(group, [space_of_measures.measure_at(label)
                         for label in orbit_space_of_measures.coordinates_of(orbit_label)], budgets), weight)
         for orbit_label, weight in over_measures.atoms))
    return multiply(pushed)


def _multiplication_condition(group: PermutationGroup,
                              space: FinUltrametricSpace | None,
                              budgets: Budgets,
                              rng: np.random.Generator):
    base = space if space is not None else random_ultrametric_space(rng, max_size=KLEISLI_MAX_SPACE_SIZE)
    outer = [random_measure_of_measures(rng, KIND, base, KLEISLI_MAX_OUTER_ATOMS, KLEISLI_MAX_INNER_ATOMS)
             for _ in range(group.n)]
    left = theta_then_flatten(group, outer, budgets)
    right = flatten_then_theta(group, outer, budgets)
    if left != right:
        return {"measures_of_measures": [str(big_m) for big_m in outer],
                "theta_then_flatten": str(left), "flatten_then_theta": str(right)}
    return None


def check_kleisli_extension(group: PermutationGroup,
                            space: FinUltrametricSpace | None = None,
                            trials: int = 100,
                            seed: int = 0,
                            budgets: Budgets = DEFAULT_BUDGETS,
                            workers: int = 1) -> LawReport:
    """
    Condition 1 runs exhaustively on `space` (or on a seeded random space of at most four points);
    condition 2 runs on `trials` seeded random tuples of measures of measures.
    """
    if space is None:
        space = random_ultrametric_space(np.random.default_rng(seed), max_size=KLEISLI_MAX_SPACE_SIZE)
    logger.info(f"Checking Kleisli extension conditions for SP^{group.n} under a group of order {group.order}, "
                f"space of {space.size} points, {trials} trials, seed {seed}")
    unit = unit_condition(space, group, budgets)
    multiplication = run_law("multiplication_condition",
                             partial(_multiplication_condition, group, space, budgets),
                             trials, np.random.SeedSequence([seed, 1]), workers)
    return LawReport(laws={"unit_condition": unit, "multiplication_condition": multiplication})
