"""Finite pieces of J(X) as ultrametric spaces in their own right, so the monad can be iterated metrically."""
import logging
from fractions import Fraction
from typing import Iterable

from pydantic import BaseModel, ConfigDict

from ultramonad.core.errors import MalformedInput, MismatchedSpaces, MixedKinds
from ultramonad.core.measures.measure import Measure, canonicalize
from ultramonad.core.measures.measure_distance import measure_distance, require_comparable
from ultramonad.core.measures.scalar_functions import TestFunction
from ultramonad.core.monad_ops.measure_of_measures import MeasureOfMeasures, lift_test_function
from ultramonad.core.types.type_overloads import PointLabel
from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace

logger = logging.getLogger(__name__)

MEASURE_LABEL_PREFIX = "m"


class MeasureSpace(BaseModel):
    """Distinct measures labelled m0, m1, … with d̂ as the distance matrix."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    space: FinUltrametricSpace
    measures: tuple[Measure, ...]

    def label_of(self, mu: Measure) -> PointLabel:
        try:
            return self.space.points[self.measures.index(mu)]
        except ValueError:
            raise MalformedInput(f"{mu} is not a point of this measure space")

    def measure_at(self, label: PointLabel) -> Measure:
        return self.measures[self.space.index_of(label)]


def measure_space(measures: Iterable[Measure]) -> MeasureSpace:
    """Materialize (J(X) restricted to `measures`, d̂); duplicates collapse, first occurrence order is kept."""
    distinct: list[Measure] = []
    for mu in measures:
        if mu not in distinct:
            distinct.append(mu)
    if not distinct:
        raise MalformedInput("A measure space needs at least one measure")
    for mu in distinct[1:]:
        require_comparable(distinct[0], mu)
    dist = tuple(tuple(measure_distance(mu, nu) for nu in distinct) for mu in distinct)
    labels = tuple(f"{MEASURE_LABEL_PREFIX}{index}" for index in range(len(distinct)))
    logger.trace(f"Built measure space with {len(distinct)} points")
    return MeasureSpace(space=FinUltrametricSpace(points=labels, dist=dist), measures=tuple(distinct))


def as_measure(big_m: MeasureOfMeasures, space_of_measures: MeasureSpace) -> Measure:
    """Read M ∈ J²(X) as an ordinary measure on the measure space."""
    if space_of_measures.measures and space_of_measures.measures[0].space != big_m.base_space:
        raise MismatchedSpaces("Measure space is built over a different base space")
    return canonicalize(big_m.kind, space_of_measures.space,
                        ((space_of_measures.label_of(inner), weight) for inner, weight in big_m.outer_atoms))


def lift_to_measure_space(phi: TestFunction, space_of_measures: MeasureSpace) -> TestFunction:
    """φ̄ as a test function on the measure space."""
    lifted = lift_test_function(phi, space_of_measures.measures)
    return TestFunction(space=space_of_measures.space,
                        values={space_of_measures.label_of(mu): value.fraction for mu, value in lifted.items()})


def second_order_distance(big_m: MeasureOfMeasures, big_n: MeasureOfMeasures) -> Fraction:
    """d̂̂(M, N): the measure distance on J(J(X)), computed on the measure space of both inner supports."""
    if big_m.kind != big_n.kind:
        raise MixedKinds("Cannot compare measures of measures of different kinds")
    if big_m.base_space != big_n.base_space:
        raise MismatchedSpaces("Measures of measures live on different base spaces")
    space_of_measures = measure_space(big_m.inner_measures + big_n.inner_measures)
    return measure_distance(as_measure(big_m, space_of_measures), as_measure(big_n, space_of_measures))
