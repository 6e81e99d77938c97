import logging
from fractions import Fraction
from typing import Callable

from pydantic import BaseModel, ConfigDict, model_validator

from ultramonad.core.errors import InvalidPointMap, MismatchedSpaces
from ultramonad.core.types.type_overloads import PointLabel
from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace

logger = logging.getLogger(__name__)


class PointMap(BaseModel):
    """A total map between the point sets of two finite ultrametric spaces."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    source: FinUltrametricSpace
    target: FinUltrametricSpace
    assignment: dict[PointLabel, PointLabel]

    @model_validator(mode="after")
    def validate_assignment(self):
        missing = [point for point in self.source.points if point not in self.assignment]
        if missing:
            raise InvalidPointMap(f"Map is not total, missing images for {missing}", missing=missing)
        extra = [point for point in self.assignment if not self.source.contains(point)]
        if extra:
            raise InvalidPointMap(f"Map assigns images to non-points {extra}", extra=extra)
        outside = sorted({image for image in self.assignment.values() if not self.target.contains(image)})
        if outside:
            raise InvalidPointMap(f"Images {outside} are not points of the target", outside=outside)
        return self

    @classmethod
    def from_function(cls,
                      source: FinUltrametricSpace,
                      target: FinUltrametricSpace,
                      function: Callable[[PointLabel], PointLabel]) -> "PointMap":
        return cls(source=source, target=target, assignment={point: function(point) for point in source.points})

    @classmethod
    def identity(cls, space: FinUltrametricSpace) -> "PointMap":
        return cls(source=space, target=space, assignment={point: point for point in space.points})

    @classmethod
    def constant(cls, source: FinUltrametricSpace, target: FinUltrametricSpace, value: PointLabel) -> "PointMap":
        return cls.from_function(source, target, lambda _: value)

    def __call__(self, point: PointLabel) -> PointLabel:
        self.source.index_of(point)
        return self.assignment[point]

    def then(self, other: "PointMap") -> "PointMap":
        """Composition `other ∘ self`."""
        if other.source != self.target:
            raise MismatchedSpaces("Cannot compose maps: target and source differ")
        return PointMap(source=self.source, target=other.target,
                        assignment={point: other.assignment[image] for point, image in self.assignment.items()})


def check_nonexpanding(f: PointMap) -> bool:
    """True iff ϱ(f(x), f(y)) ≤ d(x, y) for every pair of source points."""
    source, target = f.source, f.target
    images = [target.index_of(f.assignment[point]) for point in source.points]
    for i, image_i in enumerate(images):
        for j, image_j in enumerate(images):
            if target.dist[image_i][image_j] > source.dist[i][j]:
                logger.trace(f"Map expands {source.points[i]},{source.points[j]}: "
                             f"{target.dist[image_i][image_j]} > {source.dist[i][j]}")
                return False
    return True


def sup_distance(f: PointMap, g: PointMap) -> Fraction:
    """max over source points x of d(f(x), g(x))."""
    if f.source != g.source or f.target != g.target:
        raise MismatchedSpaces("sup distance needs maps with the same source and target")
    return max((f.target.distance(f.assignment[point], g.assignment[point]) for point in f.source.points),
               default=Fraction(0))
