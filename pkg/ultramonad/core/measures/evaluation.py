from ultramonad.core.errors import MismatchedSpaces
from ultramonad.core.extended_reals import ExtReal, NEG_INF
from ultramonad.core.measures.measure import Measure
from ultramonad.core.measures.scalar_functions import TestFunction
from ultramonad.core.ultra_core.hyperspace import FiniteSubset


def evaluate(mu: Measure, phi: TestFunction) -> ExtReal:
    """μ(φ) = max_i α_i ∧ φ(x_i) (max-min) or max_i α_i + φ(x_i) (max-plus)."""
    if mu.space != phi.space:
        raise MismatchedSpaces("Measure and test function live on different spaces")
    return mu.kind.integrate((weight, ExtReal(phi.values[point])) for point, weight in mu.atoms)


def set_value(mu: Measure, subset: FiniteSubset) -> ExtReal:
    """μ(A) = max{α_i : x_i ∈ A}, -inf for the empty join."""
    if mu.space != subset.space:
        raise MismatchedSpaces("Measure and subset live on different spaces")
    return max((weight for point, weight in mu.atoms if point in subset.members), default=NEG_INF)


def support(mu: Measure) -> FiniteSubset:
    """supp(μ) = {x_i : α_i > -inf}; canonical measures carry no -inf atoms."""
    return FiniteSubset.of(mu.space, mu.support_points)
