import functools
from fractions import Fraction
from typing import Union

from ultramonad.core.errors import ExtendedArithmeticError, MalformedInput

ExtRealLike = Union["ExtReal", Fraction, int, str]

_NEG_INF_SIGN = -1
_FINITE_SIGN = 0
_POS_INF_SIGN = 1

_POS_INF_SPELLINGS = {"inf", "+inf", "infinity", "+infinity", "∞", "+∞"}
_NEG_INF_SPELLINGS = {"-inf", "-infinity", "-∞"}


@functools.total_ordering
class ExtReal:
    """
    Exact element of the extended real line: an arbitrary-precision rational, or -inf, or +inf.

    Immutable and hashable. Ordering is total with -inf < every finite value < +inf.
    Addition follows the absorbing convention for -inf: (-inf) + x = -inf for every x < +inf,
    and (+inf) + (-inf) raises ExtendedArithmeticError.
    """

    __slots__ = ("_sign", "_value")

    def __init__(self, value: Fraction | int = 0, *, _sign: int = _FINITE_SIGN):
        self._sign = _sign
        self._value = Fraction(value) if _sign == _FINITE_SIGN else None

    @classmethod
    def finite(cls, value: Fraction | int | str) -> "ExtReal":
        return cls(Fraction(value))

    @classmethod
    def coerce(cls, value: ExtRealLike) -> "ExtReal":
        if isinstance(value, ExtReal):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, bool):
            raise MalformedInput(f"Booleans are not extended reals: {value!r}")
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise MalformedInput(f"Cannot interpret {value!r} as an exact extended real")

    @classmethod
    def parse(cls, text: str) -> "ExtReal":
        """Parse "inf", "-inf", an integer string or a "p/q" string."""
        cleaned = text.strip().lower()
        if cleaned in _POS_INF_SPELLINGS:
            return POS_INF
        if cleaned in _NEG_INF_SPELLINGS:
            return NEG_INF
        try:
            return cls(Fraction(cleaned))
        except (ValueError, ZeroDivisionError):
            raise MalformedInput(f"Not an exact rational or infinity: {text!r}", value=text)

    @property
    def is_finite(self) -> bool:
        return self._sign == _FINITE_SIGN

    @property
    def is_pos_inf(self) -> bool:
        return self._sign == _POS_INF_SIGN

    @property
    def is_neg_inf(self) -> bool:
        return self._sign == _NEG_INF_SIGN

    @property
    def fraction(self) -> Fraction:
        if not self.is_finite:
            raise ExtendedArithmeticError(f"{self} has no finite value")
        return self._value

    def sort_key(self) -> tuple[int, Fraction]:
        return self._sign, self._value if self._value is not None else Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtReal):
            return NotImplemented
        return self.sort_key() == other.sort_key()

    def __lt__(self, other: ExtRealLike) -> bool:
        return self.sort_key() < ExtReal.coerce(other).sort_key()

    def __hash__(self) -> int:
        return hash(self.sort_key())

    def __add__(self, other: ExtRealLike) -> "ExtReal":
        other = ExtReal.coerce(other)
        if {self._sign, other._sign} == {_NEG_INF_SIGN, _POS_INF_SIGN}:
            raise ExtendedArithmeticError("(+inf) + (-inf) is undefined")
        if self.is_neg_inf or other.is_neg_inf:
            return NEG_INF
        if self.is_pos_inf or other.is_pos_inf:
            return POS_INF
        return ExtReal(self._value + other._value)

    __radd__ = __add__

    def __neg__(self) -> "ExtReal":
        if self.is_pos_inf:
            return NEG_INF
        if self.is_neg_inf:
            return POS_INF
        return ExtReal(-self._value)

    def __sub__(self, other: ExtRealLike) -> "ExtReal":
        return self + (-ExtReal.coerce(other))

    def to_float(self) -> float:
        if self.is_pos_inf:
            return float("inf")
        if self.is_neg_inf:
            return float("-inf")
        return float(self._value)

    def __str__(self) -> str:
        if self.is_pos_inf:
            return "inf"
        if self.is_neg_inf:
            return "-inf"
        if self._value.denominator == 1:
            return str(self._value.numerator)
        return f"{self._value.numerator}/{self._value.denominator}"

    def __repr__(self) -> str:
        return f"ExtReal({self})"


NEG_INF = ExtReal(_sign=_NEG_INF_SIGN)
POS_INF = ExtReal(_sign=_POS_INF_SIGN)
ZERO = ExtReal(0)


def format_rational(value: Fraction) -> str:
    """Integers as plain digits, everything else as "p/q"."""
    return str(ExtReal(value))
