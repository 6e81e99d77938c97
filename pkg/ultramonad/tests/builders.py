from ultramonad.core.extended_reals import ExtRealLike
from ultramonad.core.measures.measure import Measure, canonicalize
from ultramonad.core.measures.measure_kind import MeasureKind
from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace


def maxmin(space: FinUltrametricSpace, **weights: ExtRealLike) -> Measure:
    return canonicalize(MeasureKind.MAXMIN, space, weights.items())


def maxplus(space: FinUltrametricSpace, **weights: ExtRealLike) -> Measure:
    return canonicalize(MeasureKind.MAXPLUS, space, weights.items())
