"""
The max-plus and max-min monads are not isomorphic: for the measure of measures

    M = (-1)⊙δ_μ ∨ δ_ν,  μ = (-2)⊙δ_a ∨ δ_b,  ν = (-3)⊙δ_b ∨ δ_c

on the discrete three-point space, the two legs of the multiplication square of any weight
conversion g^α disagree at a: α(-3) on one side, α(-2) on the other.
"""
import logging
from fractions import Fraction
from typing import NamedTuple

from ultramonad.core.extended_reals import ExtReal
from ultramonad.core.measures.measure import Measure, canonicalize
from ultramonad.core.measures.measure_distance import measure_distance
from ultramonad.core.measures.measure_kind import MeasureKind
from ultramonad.core.monad_ops.measure_of_measures import MeasureOfMeasures, measure_of_measures
from ultramonad.core.monad_ops.monad_structure import multiply
from ultramonad.core.monad_ops.order_bijection import (
    DEFAULT_ORDER_BIJECTION,
    ConversionDirection,
    OrderBijection,
    convert,
    convert_outer,
)
from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace

logger = logging.getLogger(__name__)

WITNESS_POINT = "a"


class NonIsomorphismWitness(NamedTuple):
    side1: Measure
    side2: Measure
    distance: Fraction


def witness_space() -> FinUltrametricSpace:
    one, zero = Fraction(1), Fraction(0)
    return FinUltrametricSpace(points=("a", "b", "c"),
                               dist=((zero, one, one), (one, zero, one), (one, one, zero)))


def witness_measure_of_measures(space: FinUltrametricSpace | None = None) -> MeasureOfMeasures:
    space = space or witness_space()
    kind = MeasureKind.MAXPLUS
    mu = canonicalize(kind, space, [("a", ExtReal(-2)), ("b", ExtReal(0))])
    nu = canonicalize(kind, space, [("b", ExtReal(-3)), ("c", ExtReal(0))])
    return measure_of_measures(kind, space, [(mu, ExtReal(-1)), (nu, ExtReal(0))])


def non_isomorphism_witness(alpha: OrderBijection = DEFAULT_ORDER_BIJECTION) -> NonIsomorphismWitness:
    """(g^α ∘ ζ(M), ξ ∘ J(g^α) ∘ g^α(M), d̂ between them); the distance is positive for every exact α."""
    big_m = witness_measure_of_measures()
    side1 = convert(multiply(big_m), alpha, ConversionDirection.TO_MAXMIN)
    side2 = multiply(convert_outer(big_m, alpha, ConversionDirection.TO_MAXMIN))
    distance = measure_distance(side1, side2)
    logger.debug(f"Witness with {alpha.name}: side1={side1}, side2={side2}, distance={distance}")
    return NonIsomorphismWitness(side1=side1, side2=side2, distance=distance)


def float_witness(alpha: OrderBijection) -> dict[str, dict[str, float] | float]:
    """Both legs in floating point, for display-only bijections such as -ln(-t)."""
    big_m = witness_measure_of_measures()
    flattened = multiply(big_m)
    side1 = {point: alpha.forward_float(weight.to_float()) for point, weight in flattened.atoms}

    side2: dict[str, float] = {}
    for inner, outer_weight in big_m.outer_atoms:
        outer_value = alpha.forward_float(outer_weight.to_float())
        for point, inner_weight in inner.atoms:
            value = min(outer_value, alpha.forward_float(inner_weight.to_float()))
            side2[point] = max(side2.get(point, float("-inf")), value)
    side2 = dict(sorted(side2.items()))
    return {"side1": side1,
            "side2": side2,
            "difference_at_a": abs(side1[WITNESS_POINT] - side2[WITNESS_POINT])}
