"""Randomized checks of the monad laws, the Kleisli-category laws and the metric facts about ξ."""
import logging
from functools import partial

import numpy as np

from ultramonad.core.law_harness import LawCheck, LawReport, run_laws
from ultramonad.core.measures.evaluation import evaluate
from ultramonad.core.measures.measure_distance import measure_distance
from ultramonad.core.measures.measure_kind import MeasureKind
from ultramonad.core.measures.r_constant_functions import sample_r_constant_function
from ultramonad.core.monad_ops.kleisli import KleisliMap, kleisli_compose, kleisli_unit
from ultramonad.core.monad_ops.measure_of_measures import evaluate_outer
from ultramonad.core.monad_ops.measure_space import second_order_distance
from ultramonad.core.monad_ops.monad_structure import map_dirac, map_multiply, multiply, multiply_outer, outer_dirac
from ultramonad.core.sampling.random_objects import (
    random_kleisli_map,
    random_measure,
    random_measure_of_measures,
    random_measure_of_measures_of_measures,
    random_radius,
    random_ultrametric_space,
)
from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace

logger = logging.getLogger(__name__)

DEFAULT_TRIALS = 200


def _space(rng: np.random.Generator, space: FinUltrametricSpace | None) -> FinUltrametricSpace:
    return space if space is not None else random_ultrametric_space(rng)


def _left_unit(kind: MeasureKind, space: FinUltrametricSpace | None, rng: np.random.Generator):
    mu = random_measure(rng, kind, _space(rng, space))
    flattened = multiply(map_dirac(mu))
    if flattened != mu:
        return {"mu": str(mu), "xi_of_J_delta": str(flattened)}
    return None


def _right_unit(kind: MeasureKind, space: FinUltrametricSpace | None, rng: np.random.Generator):
    mu = random_measure(rng, kind, _space(rng, space))
    flattened = multiply(outer_dirac(mu))
    if flattened != mu:
        return {"mu": str(mu), "xi_of_delta_J": str(flattened)}
    return None


def _associativity(kind: MeasureKind, space: FinUltrametricSpace | None, rng: np.random.Generator):
    big_m3 = random_measure_of_measures_of_measures(rng, kind, _space(rng, space))
    inner_first = multiply(map_multiply(big_m3))
    outer_first = multiply(multiply_outer(big_m3))
    if inner_first != outer_first:
        return {"xi_J_xi": str(inner_first), "xi_xi_J": str(outer_first)}
    return None


def _multiplication_is_integration(kind: MeasureKind, space: FinUltrametricSpace | None, rng: np.random.Generator):
    """ξ(M)(φ) = M(φ̄) on a random test function."""
    base = _space(rng, space)
    big_m = random_measure_of_measures(rng, kind, base)
    phi = sample_r_constant_function(base, random_radius(rng, base), rng)
    flattened_value, outer_value = evaluate(multiply(big_m), phi), evaluate_outer(big_m, phi)
    if flattened_value != outer_value:
        return {"M": str(big_m), "xi_M_phi": str(flattened_value), "M_phi_bar": str(outer_value)}
    return None


def _multiplication_nonexpanding(kind: MeasureKind, space: FinUltrametricSpace | None, rng: np.random.Generator):
    base = _space(rng, space)
    big_m = random_measure_of_measures(rng, kind, base)
    big_n = random_measure_of_measures(rng, kind, base)
    flattened_distance = measure_distance(multiply(big_m), multiply(big_n))
    outer_distance = second_order_distance(big_m, big_n)
    if flattened_distance > outer_distance:
        return {"M": str(big_m), "N": str(big_n),
                "flattened_distance": str(flattened_distance), "second_order_distance": str(outer_distance)}
    return None


def _render(kleisli_map: KleisliMap) -> dict[str, str]:
    return {point: str(image) for point, image in kleisli_map.images.items()}


def _kleisli_left_unit(kind: MeasureKind, space: FinUltrametricSpace | None, rng: np.random.Generator):
    source, target = _space(rng, space), _space(rng, space)
    g = random_kleisli_map(rng, kind, source, target)
    composed = kleisli_compose(kleisli_unit(kind, source), g)
    if composed != g:
        return {"g": _render(g), "g_after_unit": _render(composed)}
    return None


def _kleisli_right_unit(kind: MeasureKind, space: FinUltrametricSpace | None, rng: np.random.Generator):
    source, target = _space(rng, space), _space(rng, space)
    f = random_kleisli_map(rng, kind, source, target)
    composed = kleisli_compose(f, kleisli_unit(kind, target))
    if composed != f:
        return {"f": _render(f), "unit_after_f": _render(composed)}
    return None


def _kleisli_associativity(kind: MeasureKind, space: FinUltrametricSpace | None, rng: np.random.Generator):
    x, y, z, w = (_space(rng, space) for _ in range(4))
    f = random_kleisli_map(rng, kind, x, y)
    g = random_kleisli_map(rng, kind, y, z)
    h = random_kleisli_map(rng, kind, z, w)
    left = kleisli_compose(kleisli_compose(f, g), h)
    right = kleisli_compose(f, kleisli_compose(g, h))
    if left != right:
        return {"composed_f_g_then_h": _render(left),
                "f_then_composed_g_h": _render(right)}
    return None


MONAD_LAWS = {
    "left_unit": _left_unit,
    "right_unit": _right_unit,
    "associativity": _associativity,
    "multiplication_is_integration": _multiplication_is_integration,
    "multiplication_nonexpanding": _multiplication_nonexpanding,
    "kleisli_left_unit": _kleisli_left_unit,
    "kleisli_right_unit": _kleisli_right_unit,
    "kleisli_associativity": _kleisli_associativity,
}


def check_monad_laws(kind: MeasureKind,
                     space: FinUltrametricSpace | None = None,
                     trials: int = DEFAULT_TRIALS,
                     seed: int = 0,
                     workers: int = 1) -> LawReport:
    """
    Check every law in MONAD_LAWS on `trials` seeded random instances each.
    Instances live on `space` when given, otherwise every trial samples its own space of at most six points.
    """
    kind = MeasureKind(kind)
    checks: dict[str, LawCheck] = {name: partial(law, kind, space) for name, law in MONAD_LAWS.items()}
    logger.info(f"Checking {len(checks)} {kind.value} monad laws on {trials} trials, seed {seed}")
    return run_laws(checks, trials, seed, workers)
