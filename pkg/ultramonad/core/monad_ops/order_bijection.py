import logging
import math
from abc import ABC, abstractmethod
from enum import Enum
from fractions import Fraction

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from ultramonad.core.errors import InexactBijection, KindMismatch, MalformedInput, WeightOutOfRange
from ultramonad.core.extended_reals import ExtReal, NEG_INF, POS_INF, ZERO
from ultramonad.core.measures.measure import Measure, canonicalize
from ultramonad.core.measures.measure_kind import MeasureKind
from ultramonad.core.monad_ops.measure_of_measures import MeasureOfMeasures, measure_of_measures

logger = logging.getLogger(__name__)


class ConversionDirection(str, Enum):
    TO_MAXMIN = "to_maxmin"
    TO_MAXPLUS = "to_maxplus"


class OrderBijection(BaseModel, ABC):
    """A strictly increasing bijection α: [-inf, 0] → [-inf, +inf] with α(-inf) = -inf and α(0) = +inf."""
    model_config = ConfigDict(frozen=True)

    @property
    @abstractmethod
    def name(self) -> str:
        ...

    @property
    def exact(self) -> bool:
        return True

    @abstractmethod
    def forward(self, t: ExtReal) -> ExtReal:
        ...

    @abstractmethod
    def inverse(self, s: ExtReal) -> ExtReal:
        ...

    def forward_float(self, t: float) -> float:
        if math.isinf(t):
            return self.forward(NEG_INF if t < 0 else POS_INF).to_float()
        return self.forward(ExtReal(Fraction(t))).to_float()

    @staticmethod
    def _check_domain(t: ExtReal) -> None:
        if t > ZERO:
            raise WeightOutOfRange(f"Order bijections are defined on [-inf, 0], got {t}", weight=t)


class PiecewiseRationalBijection(OrderBijection):
    """
    α(t) = scale·(t − pivot) + shift               for t ≤ pivot,
    α(t) = scale·(pivot/t − 1) + shift             for pivot ≤ t < 0,
    α(0) = +inf, α(-inf) = -inf.

    Maps rationals to rationals, so it is usable in exact law checks.
    pivot = -1, scale = 1, shift = 0 gives t+1 below -1 and -1/t - 1 above.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    pivot: Fraction = Fraction(-1)
    scale: Fraction = Fraction(1)
    shift: Fraction = Fraction(0)

    @model_validator(mode="after")
    def validate_parameters(self):
        if self.pivot >= 0 or self.scale <= 0:
            raise MalformedInput(f"Need pivot < 0 and scale > 0, got pivot={self.pivot}, scale={self.scale}")
        return self

    @property
    def name(self) -> str:
        return f"piecewise(pivot={ExtReal(self.pivot)},scale={ExtReal(self.scale)},shift={ExtReal(self.shift)})"

    def forward(self, t: ExtReal) -> ExtReal:
        self._check_domain(t)
        if t.is_neg_inf:
            return NEG_INF
        if t == ZERO:
            return POS_INF
        value = t.fraction
        if value <= self.pivot:
            unshifted = value - self.pivot
        else:
            unshifted = self.pivot / value - 1
        return ExtReal(self.scale * unshifted + self.shift)

    def inverse(self, s: ExtReal) -> ExtReal:
        if s.is_neg_inf:
            return NEG_INF
        if s.is_pos_inf:
            return ZERO
        unshifted = (s.fraction - self.shift) / self.scale
        if unshifted <= 0:
            return ExtReal(unshifted + self.pivot)
        return ExtReal(self.pivot / (unshifted + 1))


class NegativeLogBijection(OrderBijection):
    """α(t) = -ln(-t). Irrational on rationals: display only, never used in exact computations."""

    @property
    def name(self) -> str:
        return "log"

    @property
    def exact(self) -> bool:
        return False

    def forward(self, t: ExtReal) -> ExtReal:
        raise InexactBijection("-ln(-t) has no exact rational values; use forward_float")

    def inverse(self, s: ExtReal) -> ExtReal:
        raise InexactBijection("exp(-s) has no exact rational values")

    def forward_float(self, t: float) -> float:
        if t > 0:
            raise WeightOutOfRange(f"Order bijections are defined on [-inf, 0], got {t}", weight=t)
        if t == 0:
            return float("inf")
        if t == float("-inf"):
            return float("-inf")
        return 0.0 - math.log(-t)


DEFAULT_ORDER_BIJECTION = PiecewiseRationalBijection()

_SAMPLED_PIVOTS = (Fraction(-1), Fraction(-2), Fraction(-1, 2), Fraction(-3), Fraction(-3, 2))
_SAMPLED_SCALES = (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3))
_SAMPLED_SHIFTS = (Fraction(-2), Fraction(-1), Fraction(0), Fraction(1), Fraction(5, 2))


def sample_order_bijection(rng: np.random.Generator) -> PiecewiseRationalBijection:
    return PiecewiseRationalBijection(pivot=_SAMPLED_PIVOTS[int(rng.integers(len(_SAMPLED_PIVOTS)))],
                                      scale=_SAMPLED_SCALES[int(rng.integers(len(_SAMPLED_SCALES)))],
                                      shift=_SAMPLED_SHIFTS[int(rng.integers(len(_SAMPLED_SHIFTS)))])


def convert(mu: Measure,
            alpha: OrderBijection = DEFAULT_ORDER_BIJECTION,
            direction: ConversionDirection = ConversionDirection.TO_MAXMIN) -> Measure:
    """g^α: map every atom weight through α (max-plus → max-min) or α⁻¹ (max-min → max-plus)."""
    direction = ConversionDirection(direction)
    if not alpha.exact:
        raise InexactBijection(f"Order bijection {alpha.name!r} is display-only")
    if direction is ConversionDirection.TO_MAXMIN:
        if mu.kind is not MeasureKind.MAXPLUS:
            raise KindMismatch("Conversion to max-min needs a max-plus measure")
        return canonicalize(MeasureKind.MAXMIN, mu.space, ((point, alpha.forward(w)) for point, w in mu.atoms))
    if mu.kind is not MeasureKind.MAXMIN:
        raise KindMismatch("Conversion to max-plus needs a max-min measure")
    return canonicalize(MeasureKind.MAXPLUS, mu.space, ((point, alpha.inverse(w)) for point, w in mu.atoms))


def convert_outer(big_m: MeasureOfMeasures,
                  alpha: OrderBijection = DEFAULT_ORDER_BIJECTION,
                  direction: ConversionDirection = ConversionDirection.TO_MAXMIN) -> MeasureOfMeasures:
    """J(g^α) ∘ g^α on J²: convert every inner measure and every outer weight."""
    direction = ConversionDirection(direction)
    target_kind = MeasureKind.MAXMIN if direction is ConversionDirection.TO_MAXMIN else MeasureKind.MAXPLUS
    weight_map = alpha.forward if direction is ConversionDirection.TO_MAXMIN else alpha.inverse
    return measure_of_measures(target_kind, big_m.base_space,
                               ((convert(inner, alpha, direction), weight_map(weight))
                                for inner, weight in big_m.outer_atoms))
