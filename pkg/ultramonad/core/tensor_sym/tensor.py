import itertools
import logging
from typing import Sequence

from ultramonad.core.budgets import Budgets, DEFAULT_BUDGETS
from ultramonad.core.errors import MalformedInput, MixedKinds
from ultramonad.core.measures.measure import Measure, canonicalize
from ultramonad.core.ultra_core.product_space import product, product_label

logger = logging.getLogger(__name__)


def tensor_all(measures: Sequence[Measure], budgets: Budgets = DEFAULT_BUDGETS) -> Measure:
    """
    μ_1 ⊗ … ⊗ μ_k on X_1 × … × X_k: one atom per tuple of atoms, weights combined by the kind's
    "times" (min for max-min, + for max-plus), so every marginal gives back its factor.
    """
    if not measures:
        raise MalformedInput("A tensor product needs at least one factor")
    kind = measures[0].kind
    if any(mu.kind != kind for mu in measures):
        raise MixedKinds("All tensor factors must be of the same kind")

    space = product([mu.space for mu in measures], budgets)
    raw_atoms = []
    for combination in itertools.product(*(mu.atoms for mu in measures)):
        weight = combination[0][1]
        for _, factor_weight in combination[1:]:
            weight = kind.combine(weight, factor_weight)
        raw_atoms.append((product_label([point for point, _ in combination]), weight))
    return canonicalize(kind, space, raw_atoms)


def tensor(mu: Measure, nu: Measure, budgets: Budgets = DEFAULT_BUDGETS) -> Measure:
    return tensor_all([mu, nu], budgets)
