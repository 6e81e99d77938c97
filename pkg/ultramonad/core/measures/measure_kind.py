from enum import Enum
from typing import Hashable, Iterable, TypeVar

from ultramonad.core.errors import EmptySupport, NotNormalized, WeightOutOfRange
from ultramonad.core.extended_reals import ExtReal, NEG_INF, POS_INF, ZERO

AtomKey = TypeVar("AtomKey", bound=Hashable)


class MeasureKind(str, Enum):
    """
    MAXMIN: weights in [-inf, +inf], atoms combine with functions by min, normalized by max weight = +inf.
    MAXPLUS: weights in [-inf, 0], atoms combine with functions by +, normalized by max weight = 0.
    """
    MAXMIN = "maxmin"
    MAXPLUS = "maxplus"

    @property
    def unit_weight(self) -> ExtReal:
        return POS_INF if self is MeasureKind.MAXMIN else ZERO

    def combine(self, left: ExtReal, right: ExtReal) -> ExtReal:
        """The semiring "times": min for max-min measures, + for max-plus measures."""
        if self is MeasureKind.MAXMIN:
            return min(left, right)
        return left + right

    def integrate(self, weighted_values: Iterable[tuple[ExtReal, ExtReal]]) -> ExtReal:
        """max over (weight, value) pairs of combine(weight, value); empty join is -inf."""
        return max((self.combine(weight, value) for weight, value in weighted_values), default=NEG_INF)

    def check_weight(self, weight: ExtReal) -> None:
        if self is MeasureKind.MAXPLUS and weight > ZERO:
            raise WeightOutOfRange(f"Max-plus weights live in [-inf, 0], got {weight}", weight=weight)

    def merge_atoms(self, raw_atoms: Iterable[tuple[AtomKey, ExtReal]]) -> dict[AtomKey, ExtReal]:
        """Merge duplicate keys by max, drop -inf atoms and enforce the normalization of this kind."""
        merged: dict[AtomKey, ExtReal] = {}
        for key, weight in raw_atoms:
            weight = ExtReal.coerce(weight)
            self.check_weight(weight)
            if key not in merged or merged[key] < weight:
                merged[key] = weight
        merged = {key: weight for key, weight in merged.items() if not weight.is_neg_inf}
        if not merged:
            raise EmptySupport("Every atom has weight -inf")
        if max(merged.values()) != self.unit_weight:
            raise NotNormalized(f"A {self.value} measure needs an atom of weight {self.unit_weight}",
                                max_weight=max(merged.values()))
        return merged
