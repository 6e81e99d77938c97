"""
Bottleneck assignment: the least t such that the bipartite graph {(i, j) : cost[i][j] ≤ t} has a perfect
matching. Used as an independent cross-check of d̃ for the full symmetric group.
"""
from fractions import Fraction
from typing import Sequence


def _has_perfect_matching(allowed: Sequence[Sequence[bool]]) -> bool:
    size = len(allowed)
    match_of_right: list[int | None] = [None] * size

    def try_augment(left: int, visited: list[bool]) -> bool:
        for right in range(size):
            if not allowed[left][right] or visited[right]:
                continue
            visited[right] = True
            if match_of_right[right] is None or try_augment(match_of_right[right], visited):
                match_of_right[right] = left
                return True
        return False

    return all(try_augment(left, [False] * size) for left in range(size))


def bottleneck_assignment(cost: Sequence[Sequence[Fraction]]) -> Fraction:
    """min over bijections σ of max_i cost[i][σ(i)], by threshold scan with augmenting-path matching."""
    if not cost:
        return Fraction(0)
    for threshold in sorted({value for row in cost for value in row}):
        if _has_perfect_matching([[value <= threshold for value in row] for row in cost]):
            return threshold
    raise AssertionError("unreachable: the largest cost admits every assignment")
