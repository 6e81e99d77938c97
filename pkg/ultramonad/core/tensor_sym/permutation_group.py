import logging
from collections import deque
from typing import Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from ultramonad.core.budgets import Budgets, DEFAULT_BUDGETS
from ultramonad.core.errors import GroupBudgetExceeded, InvalidPermutation
from ultramonad.core.types.type_overloads import Permutation

logger = logging.getLogger(__name__)


def identity_permutation(n: int) -> Permutation:
    return tuple(range(n))


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """(σ ∘ τ)(i) = σ(τ(i))."""
    return tuple(sigma[image] for image in tau)


def invert(sigma: Permutation) -> Permutation:
    inverse = [0] * len(sigma)
    for i, image in enumerate(sigma):
        inverse[image] = i
    return tuple(inverse)


def from_one_based(n: int, images: Sequence[int]) -> Permutation:
    """Parse a one-line image list of {1..n} into a 0-based permutation."""
    images = list(images)
    if not all(isinstance(image, int) and not isinstance(image, bool) for image in images):
        raise InvalidPermutation(f"{images} is not a list of integers", n=n, images=repr(images))
    if len(images) != n or sorted(images) != list(range(1, n + 1)):
        raise InvalidPermutation(f"{images} is not a permutation of 1..{n}", n=n, images=images)
    return tuple(image - 1 for image in images)


def to_one_based(sigma: Permutation) -> list[int]:
    return [image + 1 for image in sigma]


class PermutationGroup(BaseModel):
    """A subgroup G of S_n, materialized as its element list (0-based one-line images, identity first)."""
    model_config = ConfigDict(frozen=True)

    n: int
    elements: tuple[Permutation, ...]

    @model_validator(mode="after")
    def validate_group(self):
        members = set(self.elements)
        if not self.elements or self.elements[0] != identity_permutation(self.n):
            raise InvalidPermutation("The element list must start with the identity")
        for sigma in self.elements:
            if sorted(sigma) != list(range(self.n)):
                raise InvalidPermutation(f"{sigma} is not a permutation of 0..{self.n - 1}")
            if invert(sigma) not in members:
                raise InvalidPermutation(f"{sigma} has no inverse in the element list")
        return self

    @property
    def order(self) -> int:
        return len(self.elements)

    def act(self, sigma: Permutation, entries: Sequence) -> tuple:
        """σ · (x_1, …, x_n) = (x_σ(1), …, x_σ(n))."""
        return tuple(entries[image] for image in sigma)

    def orbit(self, entries: Sequence) -> set[tuple]:
        return {self.act(sigma, entries) for sigma in self.elements}


def group_closure(n: int,
                  generators: Sequence[Sequence[int]],
                  budgets: Budgets = DEFAULT_BUDGETS) -> PermutationGroup:
    """
    Breadth-first closure of one-based generators under composition; element order is discovery order.
    In a finite group products of generators already contain every inverse.
    """
    if n < 1:
        raise InvalidPermutation(f"Arity must be positive, got {n}", n=n)
    parsed = [from_one_based(n, generator) for generator in generators]
    identity = identity_permutation(n)
    elements = [identity]
    seen = {identity}
    frontier = deque([identity])
    while frontier:
        current = frontier.popleft()
        for generator in parsed:
            candidate = compose(generator, current)
            if candidate in seen:
                continue
            seen.add(candidate)
            elements.append(candidate)
            if len(elements) > budgets.group_order:
                raise GroupBudgetExceeded(f"Group generated on {n} letters exceeds {budgets.group_order} elements",
                                          budget=budgets.group_order)
            frontier.append(candidate)
    logger.trace(f"Closed {len(parsed)} generators on {n} letters into a group of order {len(elements)}")
    return PermutationGroup(n=n, elements=tuple(elements))


def symmetric_group(n: int, budgets: Budgets = DEFAULT_BUDGETS) -> PermutationGroup:
    """S_n from the adjacent transpositions."""
    generators = []
    for i in range(1, n):
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        generators.append(images)
    return group_closure(n, generators, budgets)


def trivial_group(n: int) -> PermutationGroup:
    return group_closure(n, [])
