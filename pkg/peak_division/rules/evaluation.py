import logging

from typing import Callable, Dict

from peak_division.economy.domain import Allocation, Economy, PeakProfile

from .allocation import (
    proportional_allocate,
    sequential_allocate,
    serial_allocate,
    uniform_allocate,
)
from .exceptions import UnknownRule
from .schemas.rule_spec import BaseRule

logger = logging.getLogger(__name__)


def _uniform(spec, econ, peaks):
    return uniform_allocate(econ, peaks)


def _sequential(spec, econ, peaks):
    return sequential_allocate(econ, spec.reference, peaks)


def _serial(spec, econ, peaks):
    return serial_allocate(econ, spec.zero_based_orders, peaks)


def _proportional(spec, econ, peaks):
    return proportional_allocate(econ, peaks)


def _constant(spec, econ, peaks):
    econ.check_profile(peaks)
    return econ.check_allocation(spec.allocation)


RULE_EVALUATORS: Dict[str, Callable[[BaseRule, Economy, PeakProfile], Allocation]] = {
    "uniform": _uniform,
    "sequential": _sequential,
    "serial": _serial,
    "proportional": _proportional,
    "constant": _constant,
}


def evaluate_rule(spec: BaseRule, econ: Economy, peaks: PeakProfile) -> Allocation:
    try:
        evaluator = RULE_EVALUATORS[spec.rule]
    except (AttributeError, KeyError):
        raise UnknownRule(f"no evaluator for {spec!r}")
    return evaluator(spec, econ, peaks)
