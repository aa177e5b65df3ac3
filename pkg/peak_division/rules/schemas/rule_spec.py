from typing import Literal, Tuple, Union

from pydantic import Field, parse_obj_as, validator
from typing_extensions import Annotated

from peak_division.economy.schemas.rational import ExactModel, Rational

Matrix = Tuple[Tuple[Rational, ...], ...]


class BaseRule(ExactModel):
    """
    Wire form of a peaks-only allocation rule. Agents are 1-indexed here
    and 0-indexed everywhere else.
    """

    @property
    def label(self) -> str:
        return self.rule

    def allocate(self, econ, peaks):
        from peak_division.rules.evaluation import evaluate_rule

        return evaluate_rule(self, econ, peaks)


class UniformRule(BaseRule):
    rule: Literal["uniform"] = "uniform"


class SequentialRule(BaseRule):
    rule: Literal["sequential"] = "sequential"
    reference: Matrix

    @property
    def label(self) -> str:
        rows = ";".join(",".join(str(g) for g in row) for row in self.reference)
        return f"sequential[{rows}]"


class SerialRule(BaseRule):
    rule: Literal["serial"] = "serial"
    orders: Tuple[Tuple[int, ...], ...]

    @validator("orders")
    def validate_orders(cls, orders):
        if not orders:
            raise ValueError("at least one priority order is needed")
        for order in orders:
            if any(a < 1 for a in order):
                raise ValueError(f"agents are numbered from 1, got {order}")
        return orders

    @property
    def zero_based_orders(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(a - 1 for a in order) for order in self.orders)

    @property
    def label(self) -> str:
        return "serial[" + ";".join(
            ",".join(str(a) for a in order) for order in self.orders
        ) + "]"


class ProportionalRule(BaseRule):
    rule: Literal["proportional"] = "proportional"


class ConstantRule(BaseRule):
    rule: Literal["constant"] = "constant"
    allocation: Matrix

    @property
    def label(self) -> str:
        rows = ";".join(",".join(str(x) for x in row) for row in self.allocation)
        return f"constant[{rows}]"


RuleSpec = Annotated[
    Union[UniformRule, SequentialRule, SerialRule, ProportionalRule, ConstantRule],
    Field(discriminator="rule"),
]


def parse_rule_spec(data: dict) -> BaseRule:
    return parse_obj_as(RuleSpec, data)
