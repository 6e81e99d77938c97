import logging
from fractions import Fraction

from pydantic import BaseModel, ConfigDict

from ultramonad.core.errors import MalformedInput, NonpositiveRadius
from ultramonad.core.types.type_overloads import PointLabel
from ultramonad.core.ultra_core.point_map import PointMap
from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace, to_rational

logger = logging.getLogger(__name__)

QUOTIENT_LABEL_SEPARATOR = "|"


class Partition(BaseModel):
    """The open r-balls O_r(x) = {y : d(x, y) < r} of a space, ordered by smallest member index."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    space: FinUltrametricSpace
    radius: Fraction
    blocks: tuple[tuple[PointLabel, ...], ...]

    def block_of(self, point: PointLabel) -> tuple[PointLabel, ...]:
        self.space.index_of(point)
        return next(block for block in self.blocks if point in block)

    def block_index(self) -> dict[PointLabel, int]:
        return {point: index for index, block in enumerate(self.blocks) for point in block}


def _require_positive(r: Fraction | int | str) -> Fraction:
    radius = to_rational(r)
    if radius <= 0:
        raise NonpositiveRadius(f"Radius must be positive, got {radius}", radius=radius)
    return radius


def ball_partition(space: FinUltrametricSpace, r: Fraction | int | str) -> Partition:
    radius = _require_positive(r)
    assigned = [False] * space.size
    blocks = []
    for i in range(space.size):
        if assigned[i]:
            continue
        # strong triangle: the ball around the smallest unassigned index is a whole class
        members = [j for j in range(space.size) if space.dist[i][j] < radius]
        for j in members:
            assigned[j] = True
        blocks.append(tuple(space.points[j] for j in members))
    return Partition(space=space, radius=radius, blocks=tuple(blocks))


def quotient_label(block: tuple[PointLabel, ...]) -> PointLabel:
    return QUOTIENT_LABEL_SEPARATOR.join(sorted(block))


def quotient(space: FinUltrametricSpace, r: Fraction | int | str) -> tuple[FinUltrametricSpace, PointMap]:
    """X/O_r with d_r(O_r(x), O_r(y)) = d(x, y), together with the quotient map q_r."""
    partition = ball_partition(space, r)
    labels = [quotient_label(block) for block in partition.blocks]
    if len(set(labels)) != len(labels):
        raise MalformedInput(f"Point labels containing {QUOTIENT_LABEL_SEPARATOR!r} make quotient labels ambiguous")
    representatives = [space.index_of(block[0]) for block in partition.blocks]
    dist = [[space.dist[i][j] for j in representatives] for i in representatives]
    quotient_space = FinUltrametricSpace.trusted(labels, dist)

    assignment = {point: label for label, block in zip(labels, partition.blocks) for point in block}
    q_r = PointMap(source=space, target=quotient_space, assignment=assignment)
    logger.trace(f"Quotient at radius {partition.radius}: {space.size} -> {quotient_space.size} points")
    return quotient_space, q_r
