"""Oracles that witness (in)equality of measures through their values on test functions."""
import itertools
import logging
from fractions import Fraction

from ultramonad.core.measures.evaluation import evaluate
from ultramonad.core.measures.measure import Measure
from ultramonad.core.measures.measure_distance import require_comparable
from ultramonad.core.measures.measure_kind import MeasureKind
from ultramonad.core.measures.r_constant_functions import sample_r_constant_function
from ultramonad.core.measures.scalar_functions import TestFunction
from ultramonad.core.sampling.rng import spawn_trial_seeds
from ultramonad.core.ultra_core.ball_partition import ball_partition

logger = logging.getLogger(__name__)


def _finite_weights(mu: Measure, nu: Measure) -> list[Fraction]:
    return [weight.fraction for measure in (mu, nu) for _, weight in measure.atoms if weight.is_finite]


def oracle_values(mu: Measure, nu: Measure) -> list[Fraction]:
    """The value set V of the Φ* family: all finite weights, 0, one value above and one below them."""
    finite = _finite_weights(mu, nu) + [Fraction(0)]
    return sorted(set(finite) | {max(finite) + 1, min(finite) - 1})


def functional_equality_oracle(mu: Measure, nu: Measure) -> TestFunction | None:
    """
    Brute force over Φ* = all functions S ∪ {⋆} → V, where S is the joint support and ⋆ stands for
    every other point. Returns a φ with μ(φ) ≠ ν(φ), or None when the two functionals agree on Φ*.
    Exponential in |S|; meant for desk-scale cross-checks.
    """
    require_comparable(mu, nu)
    space = mu.space
    joint_support = sorted(set(mu.support_points) | set(nu.support_points), key=space.index_of)
    outside = [point for point in space.points if point not in joint_support]
    values = oracle_values(mu, nu)
    for assignment in itertools.product(values, repeat=len(joint_support) + 1):
        function_values = dict(zip(joint_support, assignment))
        function_values.update({point: assignment[-1] for point in outside})
        phi = TestFunction(space=space, values=function_values)
        if evaluate(mu, phi) != evaluate(nu, phi):
            return phi
    return None


def separating_function(mu: Measure, nu: Measure, r: Fraction | int | str) -> TestFunction | None:
    """
    A φ constant on the open r-balls with μ(φ) ≠ ν(φ), or None if no such φ exists (d̂(μ, ν) < r).

    φ is `high` on one ball where the per-ball maxima differ and `low` on every other ball.
    """
    require_comparable(mu, nu)
    partition = ball_partition(mu.space, r)
    finite = _finite_weights(mu, nu) + [Fraction(0)]
    low = min(finite) - 1
    for block in partition.blocks:
        mu_max = max((mu.weights[point] for point in block if point in mu.weights), default=None)
        nu_max = max((nu.weights[point] for point in block if point in nu.weights), default=None)
        if mu_max == nu_max:
            continue
        larger = max(weight for weight in (mu_max, nu_max) if weight is not None)
        if mu.kind is MeasureKind.MAXPLUS:
            high = Fraction(0)
        else:
            high = larger.fraction if larger.is_finite else max(finite) + 1
        values = {point: high if point in block else low for point in mu.space.points}
        return TestFunction(space=mu.space, values=values)
    return None


def sampled_agreement(mu: Measure, nu: Measure, r: Fraction | int | str, samples: int, seed: int) -> bool:
    """True iff μ and ν agree on `samples` seeded random members of F_r."""
    require_comparable(mu, nu)
    for trial_seed in spawn_trial_seeds(seed, samples):
        phi = sample_r_constant_function(mu.space, r, trial_seed)
        if evaluate(mu, phi) != evaluate(nu, phi):
            logger.trace(f"Sampled r-constant function separates the measures at r={r}")
            return False
    return True
