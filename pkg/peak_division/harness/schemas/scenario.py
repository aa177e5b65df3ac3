import json

from typing import Any, List, Literal, Optional, Tuple

from pydantic import ValidationError as PydanticValidationError
from pydantic import root_validator, validator

from peak_division.axioms.grid import PeakGrid, grid_from_step, make_grid
from peak_division.axioms.settings import PEAK_DIVISION_GRID_POINTS
from peak_division.economy.domain import Economy, make_economy
from peak_division.economy.schemas.rational import ExactModel, Rational
from peak_division.rules.schemas.rule_spec import BaseRule, parse_rule_spec

from ..exceptions import InvalidScenario

Matrix = Tuple[Tuple[Rational, ...], ...]

COMMANDS = (
    "allocate",
    "check",
    "option-box",
    "dominate",
    "pusp",
    "uniform-characterization",
    "builtin",
)

# fields each command cannot run without
REQUIRED_FIELDS = {
    "allocate": ("economy", "rule", "peaks"),
    "check": ("economy", "rule"),
    "option-box": ("economy", "rule", "agent", "others"),
    "dominate": ("economy",),
    "pusp": ("economy", "rule"),
    "uniform-characterization": ("economy",),
    "builtin": ("case",),
}


class EconomySpec(ExactModel):
    l: int
    omega: Tuple[Rational, ...]
    n: int

    def build(self) -> Economy:
        return make_economy(self.l, self.omega, self.n)


class GridSpec(ExactModel):
    points: Optional[int] = None
    step: Optional[Rational] = None

    @root_validator
    def validate_one_of(cls, values):
        if values.get("points") is not None and values.get("step") is not None:
            raise ValueError("a grid is given either by points or by step, not both")
        return values

    def build(self, econ: Economy, points: Optional[int] = None) -> PeakGrid:
        if points is not None:
            return make_grid(econ, points)
        if self.step is not None:
            return grid_from_step(econ, self.step)
        return make_grid(econ, self.points or PEAK_DIVISION_GRID_POINTS)


class Scenario(ExactModel):
    command: Literal[COMMANDS]
    economy: Optional[EconomySpec] = None
    rule: Any = None
    rules: List[Any] = []
    peaks: Optional[Matrix] = None
    axioms: Optional[List[str]] = None
    grid: GridSpec = GridSpec()
    agent: Optional[int] = None
    others: Optional[Matrix] = None
    case: Optional[str] = None
    substitute_non_bossy: bool = False
    perturbation_budget: Optional[int] = None
    format: Optional[Literal["json", "table"]] = None

    @validator("rule", pre=True)
    def validate_rule(cls, value):
        if value is None or isinstance(value, BaseRule):
            return value
        return parse_rule_spec(value)

    @validator("rules", pre=True, each_item=True)
    def validate_rules(cls, value):
        if isinstance(value, BaseRule):
            return value
        return parse_rule_spec(value)

    @validator("agent")
    def validate_agent(cls, value):
        if value is not None and value < 1:
            raise ValueError(f"agents are numbered from 1, got {value}")
        return value

    @root_validator(skip_on_failure=True)
    def validate_command(cls, values):
        command = values["command"]
        missing = [f for f in REQUIRED_FIELDS[command] if values.get(f) is None]
        if missing:
            raise ValueError(f"{command} needs {', '.join(missing)}")
        if command == "dominate" and len(values.get("rules") or []) != 2:
            raise ValueError("dominate compares exactly two rules")
        return values


def parse_scenario(data: dict, command: Optional[str] = None) -> Scenario:
    if not isinstance(data, dict):
        raise InvalidScenario("a scenario is a json object")
    if command is not None:
        data = {"command": command, **data}
        if data["command"] != command:
            raise InvalidScenario(
                f"scenario runs {data['command']!r}, this command runs {command!r}"
            )
    try:
        return Scenario(**data)
    except PydanticValidationError as e:
        raise InvalidScenario(f"invalid scenario: {e}")


def load_scenario(path: str, command: Optional[str] = None) -> Scenario:
    """
    Reads a scenario file. Json numbers are kept as their literal text so
    that ``13.5`` is read as the exact rational 27/2.
    """
    try:
        with open(path) as f:
            data = json.load(f, parse_float=str)
    except OSError as e:
        raise InvalidScenario(f"cannot read scenario {path}: {e}")
    except json.JSONDecodeError as e:
        raise InvalidScenario(f"{path} is not valid json: {e}")
    return parse_scenario(data, command)
