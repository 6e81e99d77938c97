import functools
import logging
from fractions import Fraction
from typing import Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from ultramonad.core.errors import (
    MalformedInput,
    NonpositiveOffDiagonal,
    NonzeroDiagonal,
    NotSquare,
    NotSymmetric,
    StrongTriangleViolation,
    UnknownPoint,
)
from ultramonad.core.extended_reals import ExtReal
from ultramonad.core.types.type_overloads import DistanceMatrix, PointIndex, PointLabel

logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=4096)
def _point_index(points: tuple[PointLabel, ...]) -> dict[PointLabel, PointIndex]:
    return {label: index for index, label in enumerate(points)}


def to_rational(value: Fraction | int | str | ExtReal) -> Fraction:
    """Exact finite rational from the accepted wire spellings (ints, "p/q" strings, finite ExtReals)."""
    extended = ExtReal.coerce(value)
    if not extended.is_finite:
        raise MalformedInput(f"Expected a finite rational, got {extended}", value=str(extended))
    return extended.fraction


def check_ultrametric_axioms(points: Sequence[PointLabel], dist: DistanceMatrix) -> None:
    """Raise the first violated axiom, scanning index tuples in row-major order."""
    size = len(points)
    if len(dist) != size or any(len(row) != size for row in dist):
        raise NotSquare(f"Distance matrix must be {size}x{size}", size=size)
    if len(set(points)) != size:
        raise MalformedInput("Point labels must be distinct", points=list(points))

    for i in range(size):
        for j in range(size):
            if i == j:
                if dist[i][i] != 0:
                    raise NonzeroDiagonal(f"d[{i}][{i}] = {dist[i][i]} must be 0", i=i)
                continue
            if dist[i][j] != dist[j][i]:
                raise NotSymmetric(f"d[{i}][{j}] = {dist[i][j]} differs from d[{j}][{i}] = {dist[j][i]}", i=i, j=j)
            if dist[i][j] <= 0:
                raise NonpositiveOffDiagonal(f"d[{i}][{j}] = {dist[i][j]} must be positive", i=i, j=j)

    for i in range(size):
        row_i = dist[i]
        for j in range(size):
            d_ij = row_i[j]
            for k in range(size):
                if d_ij > max(row_i[k], dist[k][j]):
                    raise StrongTriangleViolation(
                        f"d[{i}][{j}] = {d_ij} > max(d[{i}][{k}], d[{k}][{j}]) = {max(row_i[k], dist[k][j])}",
                        i=i, j=j, k=k)


class FinUltrametricSpace(BaseModel):
    """
    A finite set of labelled points with an exact distance matrix obeying the strong triangle inequality.

    `coordinates` is only set on product spaces: the factor labels of every point, aligned with `points`.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    points: tuple[PointLabel, ...]
    dist: DistanceMatrix
    coordinates: tuple[tuple[PointLabel, ...], ...] | None = None

    @model_validator(mode="after")
    def validate_axioms(self):
        check_ultrametric_axioms(self.points, self.dist)
        if self.coordinates is not None and len(self.coordinates) != len(self.points):
            raise MalformedInput("Product coordinates must align with the points")
        return self

    @classmethod
    def trusted(cls, points: Sequence[PointLabel], dist: Sequence[Sequence[Fraction]],
                coordinates: Sequence[tuple[PointLabel, ...]] | None = None) -> "FinUltrametricSpace":
        """Build a space whose ultrametric property holds by construction (quotients, products, d̂)."""
        return cls.model_construct(points=tuple(points),
                                   dist=tuple(tuple(row) for row in dist),
                                   coordinates=tuple(coordinates) if coordinates is not None else None)

    def __hash__(self) -> int:
        return hash(self.points)

    @property
    def size(self) -> int:
        return len(self.points)

    def index_of(self, label: PointLabel) -> PointIndex:
        try:
            return _point_index(self.points)[label]
        except KeyError:
            raise UnknownPoint(f"{label!r} is not a point of this space", point=label)

    def contains(self, label: PointLabel) -> bool:
        return label in _point_index(self.points)

    def distance(self, x: PointLabel, y: PointLabel) -> Fraction:
        return self.dist[self.index_of(x)][self.index_of(y)]

    def coordinates_of(self, label: PointLabel) -> tuple[PointLabel, ...]:
        if self.coordinates is None:
            raise MalformedInput("Space is not a product space")
        return self.coordinates[self.index_of(label)]

    @property
    def diameter(self) -> Fraction:
        return max((max(row) for row in self.dist), default=Fraction(0))

    def distinct_distances(self, labels: Sequence[PointLabel] | None = None) -> list[Fraction]:
        """Sorted distinct values {0} ∪ {d(x, y) : x ≠ y} over `labels` (default: all points)."""
        indices = [self.index_of(label) for label in labels] if labels is not None else range(self.size)
        values = {Fraction(0)}
        for i in indices:
            for j in indices:
                values.add(self.dist[i][j])
        return sorted(values)


def validate_ultrametric(points: Sequence[PointLabel],
                         matrix: Sequence[Sequence[Fraction | int | str]]) -> FinUltrametricSpace:
    """Parse a label list and a rational matrix into a validated, immutable ultrametric space."""
    if len(matrix) != len(points) or any(len(row) != len(points) for row in matrix):
        raise NotSquare(f"Distance matrix must be {len(points)}x{len(points)}", size=len(points))
    dist = tuple(tuple(to_rational(entry) for entry in row) for row in matrix)
    space = FinUltrametricSpace(points=tuple(points), dist=dist)
    logger.debug(f"Validated ultrametric space with {space.size} points, diameter {space.diameter}")
    return space
