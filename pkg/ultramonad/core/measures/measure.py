import logging
from typing import Iterable

from pydantic import BaseModel, ConfigDict, model_validator

from ultramonad.core.errors import MalformedInput, UnknownPoint
from ultramonad.core.extended_reals import ExtReal, ExtRealLike, NEG_INF
from ultramonad.core.measures.measure_kind import MeasureKind
from ultramonad.core.types.type_overloads import PointLabel
from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace

logger = logging.getLogger(__name__)


class Measure(BaseModel):
    """
    A max-min or max-plus measure of finite support, stored in canonical form:
    distinct atom points in space order, no -inf weights, and the kind's normalization.
    Two measures define the same functional iff they are equal.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: MeasureKind
    space: FinUltrametricSpace
    atoms: tuple[tuple[PointLabel, ExtReal], ...]

    @model_validator(mode="after")
    def validate_canonical_form(self):
        indices = [self.space.index_of(point) for point, _ in self.atoms]
        if indices != sorted(set(indices)):
            raise MalformedInput("Atoms must be distinct and in space point order; use canonicalize()")
        merged = self.kind.merge_atoms(self.atoms)
        if len(merged) != len(self.atoms):
            raise MalformedInput("Canonical measures carry no -inf atoms; use canonicalize()")
        return self

    def __hash__(self) -> int:
        return hash((self.kind, self.atoms))

    @property
    def weights(self) -> dict[PointLabel, ExtReal]:
        return dict(self.atoms)

    def weight_of(self, point: PointLabel) -> ExtReal:
        self.space.index_of(point)
        return self.weights.get(point, NEG_INF)

    @property
    def support_points(self) -> tuple[PointLabel, ...]:
        return tuple(point for point, _ in self.atoms)

    def sort_key(self) -> tuple:
        """Deterministic total order on measures over one space (used to order outer atoms)."""
        return tuple((self.space.index_of(point), weight.sort_key()) for point, weight in self.atoms)

    def __str__(self) -> str:
        body = ", ".join(f"{point}:{weight}" for point, weight in self.atoms)
        return f"{self.kind.value}{{{body}}}"


def canonicalize(kind: MeasureKind,
                 space: FinUltrametricSpace,
                 raw_atoms: Iterable[tuple[PointLabel, ExtRealLike]]) -> Measure:
    """Merge duplicate points by max weight, drop -inf atoms, check normalization."""
    raw_atoms = list(raw_atoms)
    for point, _ in raw_atoms:
        if not space.contains(point):
            raise UnknownPoint(f"{point!r} is not a point of the measure's space", point=point)
    merged = MeasureKind(kind).merge_atoms(raw_atoms)
    atoms = tuple(sorted(merged.items(), key=lambda atom: space.index_of(atom[0])))
    return Measure.model_construct(kind=MeasureKind(kind), space=space, atoms=atoms)


def dirac(kind: MeasureKind, space: FinUltrametricSpace, x: PointLabel) -> Measure:
    """δ_x: a single atom at x with the neutral weight (+inf for max-min, 0 for max-plus)."""
    space.index_of(x)
    kind = MeasureKind(kind)
    return Measure.model_construct(kind=kind, space=space, atoms=((x, kind.unit_weight),))
