import logging
from typing import Iterable, Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from ultramonad.core.errors import MalformedInput, MismatchedSpaces, MixedKinds
from ultramonad.core.extended_reals import ExtReal, ExtRealLike
from ultramonad.core.measures.evaluation import evaluate
from ultramonad.core.measures.measure import Measure
from ultramonad.core.measures.measure_kind import MeasureKind
from ultramonad.core.measures.scalar_functions import TestFunction
from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace

logger = logging.getLogger(__name__)


def _check_inner(kind: MeasureKind, base_space: FinUltrametricSpace, inner_kinds_spaces: Iterable[tuple]) -> None:
    for inner_kind, inner_space in inner_kinds_spaces:
        if inner_kind != kind:
            raise MixedKinds(f"Inner {inner_kind.value} measure inside a {kind.value} measure of measures")
        if inner_space != base_space:
            raise MismatchedSpaces("Inner measures must live on the base space")


def _check_canonical_order(outer_atoms: Sequence[tuple], kind: MeasureKind) -> None:
    keys = [inner.sort_key() for inner, _ in outer_atoms]
    if keys != sorted(keys) or len(set(inner for inner, _ in outer_atoms)) != len(outer_atoms):
        raise MalformedInput("Outer atoms must be distinct and sorted; use the canonicalizing constructor")
    if len(kind.merge_atoms(outer_atoms)) != len(outer_atoms):
        raise MalformedInput("Canonical outer atoms carry no -inf weights")


class MeasureOfMeasures(BaseModel):
    """
    An element of J²(X) (or I²(X)): finitely many canonical inner measures with outer weights.
    Inner measures key the outer atoms by canonical equality.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: MeasureKind
    base_space: FinUltrametricSpace
    outer_atoms: tuple[tuple[Measure, ExtReal], ...]

    @model_validator(mode="after")
    def validate_outer_atoms(self):
        _check_inner(self.kind, self.base_space, ((inner.kind, inner.space) for inner, _ in self.outer_atoms))
        _check_canonical_order(self.outer_atoms, self.kind)
        return self

    def __hash__(self) -> int:
        return hash((self.kind, self.outer_atoms))

    def sort_key(self) -> tuple:
        return tuple((inner.sort_key(), weight.sort_key()) for inner, weight in self.outer_atoms)

    @property
    def inner_measures(self) -> tuple[Measure, ...]:
        return tuple(inner for inner, _ in self.outer_atoms)

    def __str__(self) -> str:
        body = ", ".join(f"{inner}:{weight}" for inner, weight in self.outer_atoms)
        return f"{self.kind.value}[{body}]"


class MeasureOfMeasuresOfMeasures(BaseModel):
    """An element of J³(X): the depth-3 shape the associativity law is stated on."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: MeasureKind
    base_space: FinUltrametricSpace
    outer_atoms: tuple[tuple[MeasureOfMeasures, ExtReal], ...]

    @model_validator(mode="after")
    def validate_outer_atoms(self):
        _check_inner(self.kind, self.base_space, ((inner.kind, inner.base_space) for inner, _ in self.outer_atoms))
        _check_canonical_order(self.outer_atoms, self.kind)
        return self

    def __hash__(self) -> int:
        return hash((self.kind, self.outer_atoms))


def measure_of_measures(kind: MeasureKind,
                        base_space: FinUltrametricSpace,
                        raw_outer_atoms: Iterable[tuple[Measure, ExtRealLike]]) -> MeasureOfMeasures:
    """Canonicalize outer atoms the same way as point atoms: merge equal inner measures by max weight."""
    kind = MeasureKind(kind)
    raw_outer_atoms = list(raw_outer_atoms)
    _check_inner(kind, base_space, ((inner.kind, inner.space) for inner, _ in raw_outer_atoms))
    merged = kind.merge_atoms(raw_outer_atoms)
    atoms = tuple(sorted(merged.items(), key=lambda atom: atom[0].sort_key()))
    return MeasureOfMeasures.model_construct(kind=kind, base_space=base_space, outer_atoms=atoms)


def measure_of_measures_of_measures(kind: MeasureKind,
                                    base_space: FinUltrametricSpace,
                                    raw_outer_atoms: Iterable[tuple[MeasureOfMeasures, ExtRealLike]]
                                    ) -> MeasureOfMeasuresOfMeasures:
    kind = MeasureKind(kind)
    raw_outer_atoms = list(raw_outer_atoms)
    _check_inner(kind, base_space, ((inner.kind, inner.base_space) for inner, _ in raw_outer_atoms))
    merged = kind.merge_atoms(raw_outer_atoms)
    atoms = tuple(sorted(merged.items(), key=lambda atom: atom[0].sort_key()))
    return MeasureOfMeasuresOfMeasures.model_construct(kind=kind, base_space=base_space, outer_atoms=atoms)


def lift_test_function(phi: TestFunction, measures: Iterable[Measure]) -> dict[Measure, ExtReal]:
    """φ̄(μ) = μ(φ) on a finite list of measures."""
    return {mu: evaluate(mu, phi) for mu in measures}


def evaluate_outer(big_m: MeasureOfMeasures, phi: TestFunction) -> ExtReal:
    """M(φ̄): the value the multiplication is defined to reproduce, ξ(M)(φ) = M(φ̄)."""
    lifted = lift_test_function(phi, big_m.inner_measures)
    return big_m.kind.integrate((weight, lifted[inner]) for inner, weight in big_m.outer_atoms)
