from typing import Any


class UltramonadError(Exception):
    """Root of every domain error raised by ultramonad.

    Not a ValueError, so pydantic validators let it propagate unchanged.
    """
    code: str = "ultramonad_error"

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> dict[str, Any]:
        return {"error": self.code,
                "message": self.message,
                "details": {key: _jsonable(value) for key, value in self.details.items()}}


def _jsonable(value: Any) -> Any:
    if isinstance(value, (str, int, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    return str(value)


# ---- ultrametric spaces ----
class NotSquare(UltramonadError):
    code = "not_square"


class NotSymmetric(UltramonadError):
    code = "not_symmetric"


class NonzeroDiagonal(UltramonadError):
    code = "nonzero_diagonal"


class NonpositiveOffDiagonal(UltramonadError):
    code = "nonpositive_off_diagonal"


class StrongTriangleViolation(UltramonadError):
    code = "strong_triangle_violation"


class NonpositiveRadius(UltramonadError):
    code = "nonpositive_radius"


class BudgetExceeded(UltramonadError):
    code = "budget_exceeded"


class MismatchedSpaces(UltramonadError):
    code = "mismatched_spaces"


class UnknownPoint(UltramonadError):
    code = "unknown_point"


class InvalidPointMap(UltramonadError):
    code = "invalid_point_map"


# ---- extended reals ----
class ExtendedArithmeticError(UltramonadError):
    code = "extended_arithmetic_error"


# ---- measures ----
class NotNormalized(UltramonadError):
    code = "not_normalized"


class WeightOutOfRange(UltramonadError):
    code = "weight_out_of_range"


class EmptySupport(UltramonadError):
    code = "empty_support"


class MixedKinds(UltramonadError):
    code = "mixed_kinds"


class KindMismatch(UltramonadError):
    code = "kind_mismatch"


class InexactBijection(UltramonadError):
    code = "inexact_bijection"


# ---- groups / symmetric powers ----
class InvalidPermutation(UltramonadError):
    code = "invalid_permutation"


class ArityMismatch(UltramonadError):
    code = "arity_mismatch"


class GroupBudgetExceeded(UltramonadError):
    code = "group_budget_exceeded"


# ---- input ----
class MalformedInput(UltramonadError):
    code = "malformed_input"
