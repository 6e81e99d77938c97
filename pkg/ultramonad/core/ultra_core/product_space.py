import functools
import itertools
import logging
import math
from typing import Sequence

from ultramonad.core.budgets import Budgets, DEFAULT_BUDGETS
from ultramonad.core.errors import BudgetExceeded, MalformedInput, MismatchedSpaces
from ultramonad.core.types.type_overloads import PointLabel
from ultramonad.core.ultra_core.point_map import PointMap
from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace

logger = logging.getLogger(__name__)


PRODUCT_LABEL_SEPARATOR = ","


def product_label(coordinates: Sequence[PointLabel]) -> PointLabel:
    return "(" + PRODUCT_LABEL_SEPARATOR.join(coordinates) + ")"


def check_distinct_labels(labels: Sequence[PointLabel], what: str) -> None:
    """Tuple labels join coordinates with ","; labels that already contain it can collide."""
    if len(set(labels)) != len(labels):
        raise MalformedInput(f"Point labels containing {PRODUCT_LABEL_SEPARATOR!r} make {what} labels ambiguous",
                             separator=PRODUCT_LABEL_SEPARATOR)


def check_product_budget(sizes: Sequence[int], budgets: Budgets = DEFAULT_BUDGETS) -> int:
    total = math.prod(sizes)
    if total > budgets.product_points:
        raise BudgetExceeded(f"Product would have {total} points, budget is {budgets.product_points}",
                             points=total, budget=budgets.product_points)
    return total


def product(spaces: Sequence[FinUltrametricSpace], budgets: Budgets = DEFAULT_BUDGETS) -> FinUltrametricSpace:
    """Max-metric product X_1 × … × X_k; points are coordinate tuples in lexicographic index order."""
    if not spaces:
        raise MalformedInput("A product needs at least one factor")
    check_product_budget([space.size for space in spaces], budgets)
    return _product(tuple(spaces))


@functools.lru_cache(maxsize=256)
def _product(spaces: tuple[FinUltrametricSpace, ...]) -> FinUltrametricSpace:
    index_tuples = list(itertools.product(*(range(space.size) for space in spaces)))
    coordinates = [tuple(space.points[i] for space, i in zip(spaces, indices)) for indices in index_tuples]
    labels = [product_label(coords) for coords in coordinates]
    check_distinct_labels(labels, "product")
    dist = [[max(space.dist[i][j] for space, i, j in zip(spaces, left, right))
             for right in index_tuples]
            for left in index_tuples]
    logger.trace(f"Built product of {len(spaces)} factors with {len(index_tuples)} points")
    return FinUltrametricSpace.trusted(points=labels,
                                       dist=dist,
                                       coordinates=coordinates)


def projection(product_space: FinUltrametricSpace,
               factors: Sequence[FinUltrametricSpace],
               index: int) -> PointMap:
    """Coordinate projection pr_index: X_1 × … × X_k → X_index."""
    if product_space.coordinates is None or any(len(coords) != len(factors) for coords in product_space.coordinates):
        raise MismatchedSpaces("Projection needs the product space of the given factors")
    return PointMap.from_function(product_space, factors[index],
                                  lambda label: product_space.coordinates_of(label)[index])


def product_map(maps: Sequence[PointMap], budgets: Budgets = DEFAULT_BUDGETS) -> PointMap:
    """f_1 × … × f_k between the product of the sources and the product of the targets."""
    source = product([f.source for f in maps], budgets)
    target = product([f.target for f in maps], budgets)
    return PointMap.from_function(
        source, target,
        lambda label: product_label([f.assignment[x] for f, x in zip(maps, source.coordinates_of(label))]))
