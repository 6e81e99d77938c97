"""Symmetric powers SP^n_G(X) = X^n / G with d̃([x], [y]) = min over σ ∈ G of max_i d(x_i, y_σ(i))."""
import functools
import itertools
import logging
from fractions import Fraction
from typing import Sequence

from pydantic import BaseModel, ConfigDict

from ultramonad.core.budgets import Budgets, DEFAULT_BUDGETS
from ultramonad.core.errors import ArityMismatch, GroupBudgetExceeded
from ultramonad.core.tensor_sym.permutation_group import PermutationGroup
from ultramonad.core.types.type_overloads import PointLabel, PointTuple
from ultramonad.core.ultra_core.point_map import PointMap
from ultramonad.core.ultra_core.product_space import (
    PRODUCT_LABEL_SEPARATOR,
    check_distinct_labels,
    check_product_budget,
    product,
)
from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace

logger = logging.getLogger(__name__)


class OrbitPoint(BaseModel):
    """[x_1, …, x_n]: a G-orbit of point tuples, stored by its least member in point-index order."""
    model_config = ConfigDict(frozen=True)

    group: PermutationGroup
    representative: PointTuple

    @property
    def label(self) -> PointLabel:
        return "[" + PRODUCT_LABEL_SEPARATOR.join(self.representative) + "]"


def _check_arity(group: PermutationGroup, entries: Sequence[PointLabel]) -> None:
    if len(entries) != group.n:
        raise ArityMismatch(f"Tuple of length {len(entries)} for a group acting on {group.n} letters",
                            arity=len(entries), n=group.n)


def _check_group_budget(group: PermutationGroup, budgets: Budgets) -> None:
    if group.order > budgets.group_order:
        raise GroupBudgetExceeded(f"Group of order {group.order} exceeds the budget {budgets.group_order}",
                                  order=group.order, budget=budgets.group_order)


def orbit_point(space: FinUltrametricSpace, group: PermutationGroup, entries: Sequence[PointLabel]) -> OrbitPoint:
    """The orbit of `entries`; equal orbits give equal OrbitPoints."""
    _check_arity(group, entries)
    indices = [space.index_of(entry) for entry in entries]
    least = min(group.orbit(indices))
    return OrbitPoint(group=group, representative=tuple(space.points[index] for index in least))


def bottleneck_cost(space: FinUltrametricSpace,
                    group: PermutationGroup,
                    x: Sequence[PointLabel],
                    y: Sequence[PointLabel]) -> Fraction:
    """min over σ ∈ G of max_i d(x_i, y_σ(i)) for raw tuples."""
    x_indices = [space.index_of(point) for point in x]
    y_indices = [space.index_of(point) for point in y]
    return min(max((space.dist[i][y_indices[image]] for i, image in zip(x_indices, sigma)), default=Fraction(0))
               for sigma in group.elements)


def sympow_distance(space: FinUltrametricSpace,
                    group: PermutationGroup,
                    x: OrbitPoint,
                    y: OrbitPoint,
                    budgets: Budgets = DEFAULT_BUDGETS) -> Fraction:
    _check_arity(group, x.representative)
    _check_arity(group, y.representative)
    _check_group_budget(group, budgets)
    return bottleneck_cost(space, group, x.representative, y.representative)


@functools.lru_cache(maxsize=64)
def _orbit_space(space: FinUltrametricSpace,
                 group: PermutationGroup,
                 budgets: Budgets) -> tuple[FinUltrametricSpace, PointMap]:
    _check_group_budget(group, budgets)
    check_product_budget([space.size] * group.n, budgets)

    power = product([space] * group.n, budgets)
    orbit_of: dict[PointLabel, OrbitPoint] = {}
    orbits: dict[PointTuple, OrbitPoint] = {}
    for label, coordinates in zip(power.points, power.coordinates):
        orbit = orbit_point(space, group, coordinates)
        orbits.setdefault(orbit.representative, orbit)
        orbit_of[label] = orbit

    # orbits appear in product order, i.e. sorted by their least representative
    representatives = list(orbits)
    labels = [orbits[rep].label for rep in representatives]
    check_distinct_labels(labels, "orbit")
    dist = [[bottleneck_cost(space, group, x, y) for y in representatives] for x in representatives]
    orbit_space = FinUltrametricSpace.trusted(points=labels,
                                              dist=dist,
                                              coordinates=representatives)
    pi_g = PointMap(source=power, target=orbit_space,
                    assignment={label: orbit.label for label, orbit in orbit_of.items()})
    logger.trace(f"SP^{group.n} over {space.size} points under a group of order {group.order}: "
                 f"{orbit_space.size} orbit points")
    return orbit_space, pi_g


def sympow_space(space: FinUltrametricSpace,
                 group: PermutationGroup,
                 budgets: Budgets = DEFAULT_BUDGETS,
                 validate: bool = True) -> tuple[FinUltrametricSpace, PointMap]:
    """
    (SP^n_G(X), d̃) with orbit labels "[x_1,…,x_n]" and coordinates = representatives,
    together with the orbit map π_G: X^n → SP^n_G(X).
    """
    orbit_space, pi_g = _orbit_space(space, group, budgets)
    if validate:
        FinUltrametricSpace(points=orbit_space.points, dist=orbit_space.dist, coordinates=orbit_space.coordinates)
    return orbit_space, pi_g


def all_point_tuples(space: FinUltrametricSpace, arity: int) -> list[PointTuple]:
    return list(itertools.product(space.points, repeat=arity))
