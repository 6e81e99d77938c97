import logging
from fractions import Fraction
from typing import Sequence

from ultramonad.core.errors import MismatchedSpaces, MixedKinds
from ultramonad.core.extended_reals import ExtReal, NEG_INF
from ultramonad.core.measures.measure import Measure
from ultramonad.core.measures.pushforward import pushforward
from ultramonad.core.types.type_overloads import PointLabel
from ultramonad.core.ultra_core.ball_partition import quotient
from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace

logger = logging.getLogger(__name__)


def require_comparable(mu: Measure, nu: Measure) -> None:
    if mu.kind != nu.kind:
        raise MixedKinds(f"Cannot compare a {mu.kind.value} measure with a {nu.kind.value} measure")
    if mu.space != nu.space:
        raise MismatchedSpaces("Measures live on different spaces")


def closed_ball_classes(space: FinUltrametricSpace,
                        labels: Sequence[PointLabel],
                        threshold: Fraction) -> list[list[PointLabel]]:
    """Classes of `labels` under d ≤ threshold (an equivalence relation in an ultrametric space)."""
    classes: list[list[PointLabel]] = []
    for label in labels:
        for block in classes:
            if space.distance(block[0], label) <= threshold:
                block.append(label)
                break
        else:
            classes.append([label])
    return classes


def signature(mu: Measure, classes: Sequence[Sequence[PointLabel]]) -> tuple[ExtReal, ...]:
    """Max atom weight of μ inside each class, -inf for classes without atoms."""
    weights = mu.weights
    return tuple(max((weights[point] for point in block if point in weights), default=NEG_INF)
                 for block in classes)


def measure_distance(mu: Measure, nu: Measure) -> Fraction:
    """
    d̂(μ, ν) = inf{r > 0 : μ(φ) = ν(φ) for every φ constant on the open r-balls}.

    Agreement at radius r is equality of the q_r-pushforwards. On the joint support S the strict
    r-partition for r in (t_k, t_{k+1}] equals the d ≤ t_k partition, and agreement is monotone in r,
    so the infimum is the least realized distance t at which the per-class max weights coincide.
    """
    require_comparable(mu, nu)
    space = mu.space
    joint_support = sorted(set(mu.support_points) | set(nu.support_points), key=space.index_of)
    for threshold in space.distinct_distances(joint_support):
        classes = closed_ball_classes(space, joint_support, threshold)
        if signature(mu, classes) == signature(nu, classes):
            return threshold
    # a single class always agrees: both maxima are the unit weight
    raise AssertionError("unreachable: the coarsest partition always agrees")


def quotient_agreement(mu: Measure, nu: Measure, r: Fraction | int | str) -> bool:
    """J(q_r)(μ) = J(q_r)(ν), which holds iff d̂(μ, ν) < r."""
    require_comparable(mu, nu)
    _, q_r = quotient(mu.space, r)
    return pushforward(q_r, mu) == pushforward(q_r, nu)
