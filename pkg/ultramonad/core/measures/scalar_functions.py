from fractions import Fraction
from typing import Mapping

from pydantic import BaseModel, ConfigDict, model_validator

from ultramonad.core.errors import MalformedInput
from ultramonad.core.extended_reals import ExtReal
from ultramonad.core.types.type_overloads import PointLabel
from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace, to_rational


class TestFunction(BaseModel):
    """A finite-valued function on the points of a space, i.e. an element of C(X) for finite X."""
    __test__ = False  # not a pytest class
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    space: FinUltrametricSpace
    values: dict[PointLabel, Fraction]

    @model_validator(mode="after")
    def validate_total(self):
        missing = [point for point in self.space.points if point not in self.values]
        if missing:
            raise MalformedInput(f"Test function is not total, missing {missing}", missing=missing)
        for point in self.values:
            self.space.index_of(point)
        return self

    @classmethod
    def of(cls, space: FinUltrametricSpace, values: Mapping[PointLabel, Fraction | int | str]) -> "TestFunction":
        return cls(space=space, values={point: to_rational(value) for point, value in values.items()})

    def __call__(self, point: PointLabel) -> ExtReal:
        self.space.index_of(point)
        return ExtReal(self.values[point])
