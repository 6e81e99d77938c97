from fractions import Fraction

from ultramonad.core.measures.scalar_functions import TestFunction
from ultramonad.core.sampling.rng import DEFAULT_DENOMINATORS, SeedLike, make_rng, random_rational
from ultramonad.core.ultra_core.ball_partition import ball_partition
from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace

DEFAULT_VALUE_LOW = Fraction(-10)
DEFAULT_VALUE_HIGH = Fraction(10)


def sample_r_constant_function(space: FinUltrametricSpace,
                               r: Fraction | int | str,
                               seed: SeedLike,
                               low: Fraction | int = DEFAULT_VALUE_LOW,
                               high: Fraction | int = DEFAULT_VALUE_HIGH) -> TestFunction:
    """A seeded member of F_r: one random rational in [low, high] per open r-ball."""
    partition = ball_partition(space, r)
    rng = make_rng(seed)
    values = {}
    for block in partition.blocks:
        value = random_rational(rng, low, high, DEFAULT_DENOMINATORS)
        values.update({point: value for point in block})
    return TestFunction(space=space, values=values)


def is_r_constant(phi: TestFunction, r: Fraction | int | str) -> bool:
    partition = ball_partition(phi.space, r)
    return all(len({phi.values[point] for point in block}) == 1 for block in partition.blocks)
