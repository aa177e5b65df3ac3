from typing import Callable, Dict, List

from peak_division.economy.domain import Economy

from .schemas.rule_spec import (
    BaseRule,
    ConstantRule,
    ProportionalRule,
    SequentialRule,
    SerialRule,
    UniformRule,
)
from .settings import PEAK_DIVISION_CATALOG


def egalitarian_reference(econ: Economy):
    return tuple(econ.equal_division for _ in range(econ.n))


def skewed_reference(econ: Economy):
    """
    Reference point giving agent 1 half of every commodity more than
    the last agent, the rest split equally; equal division when n == 1.
    """
    if econ.n == 1:
        return egalitarian_reference(econ)
    rows = []
    for i in range(econ.n):
        row = []
        for w in econ.omega:
            share = w / econ.n
            if i == 0:
                share += share / 2
            elif i == econ.n - 1:
                share -= share / 2
            row.append(share)
        rows.append(tuple(row))
    return tuple(rows)


def equal_division_rule(econ: Economy) -> ConstantRule:
    return ConstantRule(allocation=egalitarian_reference(econ))


CATALOG_BUILDERS: Dict[str, Callable[[Economy], BaseRule]] = {
    "uniform": lambda econ: UniformRule(),
    "sequential-egalitarian": lambda econ: SequentialRule(
        reference=egalitarian_reference(econ)
    ),
    "sequential-skewed": lambda econ: SequentialRule(reference=skewed_reference(econ)),
    "serial": lambda econ: SerialRule(orders=(tuple(range(1, econ.n + 1)),)),
    "proportional": lambda econ: ProportionalRule(),
    "constant": equal_division_rule,
}


def default_catalog(econ: Economy, kinds: List[str] = PEAK_DIVISION_CATALOG) -> List[BaseRule]:
    return [CATALOG_BUILDERS[kind](econ) for kind in kinds]
