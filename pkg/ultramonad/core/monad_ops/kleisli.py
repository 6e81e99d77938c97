import logging

from pydantic import BaseModel, ConfigDict, model_validator

from ultramonad.core.errors import InvalidPointMap, MismatchedSpaces, MixedKinds
from ultramonad.core.measures.measure import Measure, dirac
from ultramonad.core.measures.measure_kind import MeasureKind
from ultramonad.core.monad_ops.measure_of_measures import MeasureOfMeasures, measure_of_measures
from ultramonad.core.monad_ops.monad_structure import multiply
from ultramonad.core.types.type_overloads import PointLabel
from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace

logger = logging.getLogger(__name__)


class KleisliMap(BaseModel):
    """A measure-valued map X → J(Y): a morphism of the Kleisli category."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: MeasureKind
    source: FinUltrametricSpace
    target: FinUltrametricSpace
    images: dict[PointLabel, Measure]

    @model_validator(mode="after")
    def validate_images(self):
        missing = [point for point in self.source.points if point not in self.images]
        if missing:
            raise InvalidPointMap(f"Kleisli map is not total, missing {missing}", missing=missing)
        for point, image in self.images.items():
            self.source.index_of(point)
            if image.kind != self.kind:
                raise MixedKinds(f"Image of {point!r} is a {image.kind.value} measure, expected {self.kind.value}")
            if image.space != self.target:
                raise MismatchedSpaces(f"Image of {point!r} does not live on the target space")
        return self

    def __call__(self, point: PointLabel) -> Measure:
        self.source.index_of(point)
        return self.images[point]


def kleisli_unit(kind: MeasureKind, space: FinUltrametricSpace) -> KleisliMap:
    """The Kleisli identity x ↦ δ_x."""
    return KleisliMap(kind=kind, source=space, target=space,
                      images={point: dirac(kind, space, point) for point in space.points})


def push_kleisli(g: KleisliMap, mu: Measure) -> MeasureOfMeasures:
    """J(g)(μ): move every atom y of μ to the measure g(y), keeping its weight."""
    if mu.kind != g.kind:
        raise MixedKinds("Measure and Kleisli map have different kinds")
    if mu.space != g.source:
        raise MismatchedSpaces("Measure does not live on the source of the Kleisli map")
    return measure_of_measures(g.kind, g.target, ((g.images[point], weight) for point, weight in mu.atoms))


def kleisli_extend(g: KleisliMap, mu: Measure) -> Measure:
    """The Kleisli extension g^# = ξ ∘ J(g)."""
    return multiply(push_kleisli(g, mu))


def kleisli_compose(f: KleisliMap, g: KleisliMap) -> KleisliMap:
    """g ∗ f = ξ_Z ∘ J(g) ∘ f: first f, then g."""
    if f.kind != g.kind:
        raise MixedKinds("Kleisli maps of different kinds cannot be composed")
    if f.target != g.source:
        raise MismatchedSpaces("Target of f is not the source of g")
    return KleisliMap(kind=f.kind, source=f.source, target=g.target,
                      images={point: kleisli_extend(g, image) for point, image in f.images.items()})
