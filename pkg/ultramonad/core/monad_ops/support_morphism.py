"""supp: J(X) → exp X as a morphism from the measure monad into the hyperspace monad."""
import logging

from ultramonad.core.measures.evaluation import support
from ultramonad.core.measures.measure import dirac
from ultramonad.core.monad_ops.measure_of_measures import MeasureOfMeasures
from ultramonad.core.monad_ops.monad_structure import multiply
from ultramonad.core.ultra_core.hyperspace import singleton, union

logger = logging.getLogger(__name__)


def unit_square_commutes(big_m: MeasureOfMeasures) -> bool:
    """supp(δ_x) = {x} for every point of the base space."""
    space = big_m.base_space
    return all(support(dirac(big_m.kind, space, point)) == singleton(space, point) for point in space.points)


def multiplication_square_commutes(big_m: MeasureOfMeasures) -> bool:
    """supp(ξ(M)) = u(exp(supp)(supp(M))): the union of the inner supports over the outer support."""
    flattened = support(multiply(big_m))
    unioned = union(support(inner) for inner in big_m.inner_measures)
    if flattened != unioned:
        logger.warning(f"Support of the product {sorted(flattened.members)} "
                       f"differs from the union of inner supports {sorted(unioned.members)}")
        return False
    return True


def support_morphism_check(big_m: MeasureOfMeasures) -> bool:
    return unit_square_commutes(big_m) and multiplication_square_commutes(big_m)
