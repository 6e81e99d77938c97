import logging
from typing import Sequence

from ultramonad.core.budgets import Budgets, DEFAULT_BUDGETS
from ultramonad.core.errors import ArityMismatch, KindMismatch, MismatchedSpaces, MixedKinds
from ultramonad.core.measures.measure import Measure
from ultramonad.core.measures.measure_kind import MeasureKind
from ultramonad.core.measures.pushforward import pushforward
from ultramonad.core.tensor_sym.permutation_group import PermutationGroup
from ultramonad.core.tensor_sym.symmetric_power import sympow_space
from ultramonad.core.tensor_sym.tensor import tensor_all

logger = logging.getLogger(__name__)


def theta(group: PermutationGroup, measures: Sequence[Measure], budgets: Budgets = DEFAULT_BUDGETS) -> Measure:
    """θ_X[μ_1, …, μ_n] = J(π_G)(μ_1 ⊗ … ⊗ μ_n), a max-min measure on SP^n_G(X)."""
    if len(measures) != group.n:
        raise ArityMismatch(f"{len(measures)} measures for a group acting on {group.n} letters",
                            arity=len(measures), n=group.n)
    if any(mu.kind != measures[0].kind for mu in measures):
        raise MixedKinds("θ needs measures of a single kind")
    if measures[0].kind is not MeasureKind.MAXMIN:
        raise KindMismatch("θ is defined for max-min measures only")
    space = measures[0].space
    if any(mu.space != space for mu in measures):
        raise MismatchedSpaces("θ needs measures on a single space")

    _, pi_g = sympow_space(space, group, budgets, validate=False)
    return pushforward(pi_g, tensor_all(measures, budgets))
