from pydantic import BaseModel, ConfigDict, Field

DEFAULT_PRODUCT_POINT_BUDGET = 10_000
DEFAULT_GROUP_ORDER_BUDGET = 720


class Budgets(BaseModel):
    """Size caps for constructions that grow exponentially (products, symmetric powers, groups)."""
    model_config = ConfigDict(frozen=True)

    product_points: int = Field(default=DEFAULT_PRODUCT_POINT_BUDGET, gt=0,
                                description="Largest number of points a product space may have")
    group_order: int = Field(default=DEFAULT_GROUP_ORDER_BUDGET, gt=0,
                             description="Largest permutation group that will be materialized")


DEFAULT_BUDGETS = Budgets()
