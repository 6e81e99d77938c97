from ultramonad.core.errors import MismatchedSpaces
from ultramonad.core.measures.measure import Measure, canonicalize
from ultramonad.core.ultra_core.point_map import PointMap


def pushforward(f: PointMap, mu: Measure) -> Measure:
    """J(f)(∨ α_i ∧ δ_{x_i}) = ∨ α_i ∧ δ_{f(x_i)}, and likewise for max-plus measures."""
    if mu.space != f.source:
        raise MismatchedSpaces("Measure does not live on the source of the map")
    return canonicalize(mu.kind, f.target, ((f.assignment[point], weight) for point, weight in mu.atoms))
