from fractions import Fraction
from typing import Iterable

from pydantic import BaseModel, ConfigDict, model_validator

from ultramonad.core.errors import MalformedInput, MismatchedSpaces
from ultramonad.core.types.type_overloads import PointLabel
from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace


class FiniteSubset(BaseModel):
    """A nonempty subset of a finite ultrametric space, i.e. a point of its hyperspace exp X."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    space: FinUltrametricSpace
    members: frozenset[PointLabel]

    @model_validator(mode="after")
    def validate_members(self):
        if not self.members:
            raise MalformedInput("Hyperspace points are nonempty subsets")
        for member in self.members:
            self.space.index_of(member)
        return self

    @classmethod
    def of(cls, space: FinUltrametricSpace, members: Iterable[PointLabel]) -> "FiniteSubset":
        return cls(space=space, members=frozenset(members))

    def __hash__(self) -> int:
        return hash(self.members)

    @property
    def sorted_members(self) -> list[PointLabel]:
        return sorted(self.members, key=self.space.index_of)


def _directed_distance(space: FinUltrametricSpace, a: Iterable[PointLabel], b: frozenset[PointLabel]) -> Fraction:
    return max(min(space.distance(x, y) for y in b) for x in a)


def hausdorff_distance(a: FiniteSubset, b: FiniteSubset) -> Fraction:
    """max( max_a min_b d, max_b min_a d ) for finite nonempty subsets of one space."""
    if a.space != b.space:
        raise MismatchedSpaces("Hausdorff distance needs subsets of the same space")
    return max(_directed_distance(a.space, a.members, b.members),
               _directed_distance(a.space, b.members, a.members))


def singleton(space: FinUltrametricSpace, point: PointLabel) -> FiniteSubset:
    """Unit of the hyperspace monad, x ↦ {x}."""
    return FiniteSubset.of(space, [point])


def union(subsets: Iterable[FiniteSubset]) -> FiniteSubset:
    """Multiplication of the hyperspace monad: the union of a nonempty family of subsets."""
    subsets = list(subsets)
    if not subsets:
        raise MalformedInput("Union of an empty family is not a hyperspace point")
    space = subsets[0].space
    if any(subset.space != space for subset in subsets):
        raise MismatchedSpaces("Union needs subsets of the same space")
    return FiniteSubset(space=space, members=frozenset().union(*(subset.members for subset in subsets)))
