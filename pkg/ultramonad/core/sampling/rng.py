from fractions import Fraction
from typing import Sequence

import numpy as np

SeedLike = int | np.random.SeedSequence | np.random.Generator

DEFAULT_DENOMINATORS = (1, 2, 3, 4)


def make_rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def spawn_trial_seeds(seed: int, trials: int) -> list[np.random.SeedSequence]:
    """One independent stream per trial, so a trial's outcome never depends on scheduling."""
    return np.random.SeedSequence(seed).spawn(trials)


def random_rational(rng: np.random.Generator,
                    low: Fraction | int,
                    high: Fraction | int,
                    denominators: Sequence[int] = DEFAULT_DENOMINATORS) -> Fraction:
    """A rational in [low, high] from the grid p/q, q drawn from `denominators`."""
    denominator = int(rng.choice(denominators))
    numerator_low = int(np.ceil(Fraction(low) * denominator))
    numerator_high = int(np.floor(Fraction(high) * denominator))
    return Fraction(int(rng.integers(numerator_low, numerator_high + 1)), denominator)


def random_subset_indices(rng: np.random.Generator, size: int, count: int) -> list[int]:
    """`count` distinct indices from range(size), returned sorted."""
    return sorted(int(index) for index in rng.choice(size, size=count, replace=False))
