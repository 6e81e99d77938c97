"""Unit δ and multiplication ξ (max-min) / ζ (max-plus) of the measure monads."""
from ultramonad.core.measures.measure import Measure, canonicalize, dirac
from ultramonad.core.monad_ops.measure_of_measures import (
    MeasureOfMeasures,
    MeasureOfMeasuresOfMeasures,
    measure_of_measures,
)


def multiply(big_m: MeasureOfMeasures) -> Measure:
    """ξ_X(∨_i α_i ∧ δ_{μ_i}) = ∨_i ∨_j α_i ∧ β_ij ∧ δ_{x_ij}; max-plus uses α_i + β_ij."""
    kind = big_m.kind
    return canonicalize(kind, big_m.base_space,
                        ((point, kind.combine(outer_weight, inner_weight))
                         for inner, outer_weight in big_m.outer_atoms
                         for point, inner_weight in inner.atoms))


def multiply_outer(big_m3: MeasureOfMeasuresOfMeasures) -> MeasureOfMeasures:
    """ξ_{J(X)}: flatten the two outer levels of a depth-3 nesting."""
    kind = big_m3.kind
    return measure_of_measures(kind, big_m3.base_space,
                               ((inner, kind.combine(outer_weight, middle_weight))
                                for middle, outer_weight in big_m3.outer_atoms
                                for inner, middle_weight in middle.outer_atoms))


def map_multiply(big_m3: MeasureOfMeasuresOfMeasures) -> MeasureOfMeasures:
    """J(ξ_X): multiply every middle-level measure of measures in place."""
    return measure_of_measures(big_m3.kind, big_m3.base_space,
                               ((multiply(middle), weight) for middle, weight in big_m3.outer_atoms))


def outer_dirac(mu: Measure) -> MeasureOfMeasures:
    """δ_{J(X)}(μ) = δ_μ."""
    return measure_of_measures(mu.kind, mu.space, [(mu, mu.kind.unit_weight)])


def map_dirac(mu: Measure) -> MeasureOfMeasures:
    """J(δ_X)(μ) = ∨_i α_i ∧ δ_{δ_{x_i}}."""
    return measure_of_measures(mu.kind, mu.space,
                               ((dirac(mu.kind, mu.space, point), weight) for point, weight in mu.atoms))
