"""Seeded generators for the random instances the law harnesses and property suites run on."""
import string
from fractions import Fraction

import numpy as np

from ultramonad.core.extended_reals import ExtReal
from ultramonad.core.measures.measure import Measure, canonicalize
from ultramonad.core.measures.measure_kind import MeasureKind
from ultramonad.core.monad_ops.kleisli import KleisliMap
from ultramonad.core.monad_ops.measure_of_measures import (
    MeasureOfMeasures,
    MeasureOfMeasuresOfMeasures,
    measure_of_measures,
    measure_of_measures_of_measures,
)
from ultramonad.core.sampling.rng import random_rational, random_subset_indices
from ultramonad.core.types.type_overloads import PointLabel
from ultramonad.core.ultra_core.ball_partition import ball_partition
from ultramonad.core.ultra_core.point_map import PointMap
from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace

MAX_SPACE_SIZE = 6
MAX_OUTER_ATOMS = 4
MAX_INNER_ATOMS = 4

WEIGHT_LOW = Fraction(-4)
WEIGHT_HIGH = Fraction(4)
WEIGHT_DENOMINATORS = (1, 2)


def point_labels(size: int) -> list[PointLabel]:
    if size <= len(string.ascii_lowercase):
        return list(string.ascii_lowercase[:size])
    return [f"p{index}" for index in range(size)]


def random_ultrametric_space(rng: np.random.Generator,
                             min_size: int = 1,
                             max_size: int = MAX_SPACE_SIZE) -> FinUltrametricSpace:
    """
    Agglomerate singletons by random pairwise merges at nondecreasing rational heights (a random dendrogram).
    Points of two clusters merged at height h are at distance h, which is an ultrametric by construction.
    """
    size = int(rng.integers(min_size, max_size + 1))
    clusters = [[index] for index in range(size)]
    dist = [[Fraction(0)] * size for _ in range(size)]
    height = Fraction(0)
    while len(clusters) > 1:
        step_low = Fraction(1, 2) if height == 0 else Fraction(0)
        height += random_rational(rng, step_low, 2, WEIGHT_DENOMINATORS)
        left, right = sorted(int(index) for index in rng.choice(len(clusters), size=2, replace=False))
        for i in clusters[left]:
            for j in clusters[right]:
                dist[i][j] = dist[j][i] = height
        clusters[left] = clusters[left] + clusters.pop(right)
    return FinUltrametricSpace(points=tuple(point_labels(size)), dist=tuple(tuple(row) for row in dist))


def random_radius(rng: np.random.Generator, space: FinUltrametricSpace) -> Fraction:
    """A radius from the realized distances, the midpoints between them, or beyond the diameter."""
    levels = [value for value in space.distinct_distances() if value > 0]
    candidates = list(levels)
    candidates += [(low + high) / 2 for low, high in zip([Fraction(0)] + levels, levels)]
    candidates.append(space.diameter + 1)
    return candidates[int(rng.integers(len(candidates)))]


def random_weight(rng: np.random.Generator, kind: MeasureKind) -> ExtReal:
    high = WEIGHT_HIGH if kind is MeasureKind.MAXMIN else Fraction(0)
    return ExtReal(random_rational(rng, WEIGHT_LOW, high, WEIGHT_DENOMINATORS))


def _normalized_weights(rng: np.random.Generator, kind: MeasureKind, count: int) -> list[ExtReal]:
    weights = [random_weight(rng, kind) for _ in range(count)]
    weights[int(rng.integers(count))] = kind.unit_weight
    return weights


def random_measure(rng: np.random.Generator,
                   kind: MeasureKind,
                   space: FinUltrametricSpace,
                   max_atoms: int | None = None) -> Measure:
    """Uniform atom count, points without replacement, grid weights, one atom promoted to the unit weight."""
    limit = space.size if max_atoms is None else min(space.size, max_atoms)
    count = int(rng.integers(1, limit + 1))
    points = [space.points[index] for index in random_subset_indices(rng, space.size, count)]
    return canonicalize(kind, space, zip(points, _normalized_weights(rng, kind, count)))


def random_measure_of_measures(rng: np.random.Generator,
                               kind: MeasureKind,
                               space: FinUltrametricSpace,
                               max_outer: int = MAX_OUTER_ATOMS,
                               max_inner: int = MAX_INNER_ATOMS) -> MeasureOfMeasures:
    count = int(rng.integers(1, max_outer + 1))
    inner = [random_measure(rng, kind, space, max_inner) for _ in range(count)]
    return measure_of_measures(kind, space, zip(inner, _normalized_weights(rng, kind, count)))


def random_measure_of_measures_of_measures(rng: np.random.Generator,
                                           kind: MeasureKind,
                                           space: FinUltrametricSpace,
                                           max_outer: int = 3,
                                           max_inner: int = 3) -> MeasureOfMeasuresOfMeasures:
    count = int(rng.integers(1, max_outer + 1))
    middle = [random_measure_of_measures(rng, kind, space, max_inner, max_inner) for _ in range(count)]
    return measure_of_measures_of_measures(kind, space, zip(middle, _normalized_weights(rng, kind, count)))


def random_retraction(rng: np.random.Generator, space: FinUltrametricSpace) -> PointMap:
    """
    Send every point to a randomly chosen representative of its open r-ball for a random r.
    Nonexpanding: distinct balls keep their mutual distance, points in one ball collapse.
    """
    partition = ball_partition(space, random_radius(rng, space))
    assignment = {}
    for block in partition.blocks:
        representative = block[int(rng.integers(len(block)))]
        assignment.update({point: representative for point in block})
    return PointMap(source=space, target=space, assignment=assignment)


def random_kleisli_map(rng: np.random.Generator,
                       kind: MeasureKind,
                       source: FinUltrametricSpace,
                       target: FinUltrametricSpace,
                       max_atoms: int = MAX_INNER_ATOMS) -> KleisliMap:
    return KleisliMap(kind=kind, source=source, target=target,
                      images={point: random_measure(rng, kind, target, max_atoms) for point in source.points})


def random_point_tuple(rng: np.random.Generator, space: FinUltrametricSpace, arity: int) -> tuple[PointLabel, ...]:
    return tuple(space.points[int(rng.integers(space.size))] for _ in range(arity))
