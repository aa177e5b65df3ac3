import logging
import time

from typing import Callable, Dict, List, Optional

import django
import pydantic

from peak_division import __version__
from peak_division.axioms.checks import run_axioms
from peak_division.axioms.grid import PeakGrid
from peak_division.axioms.implications import check_implications
from peak_division.axioms.settings import PEAK_DIVISION_WORKERS
from peak_division.axioms.table import rule_label
from peak_division.dominance.domination import check_domination
from peak_division.dominance.exceptions import HypothesesNotCertified, NotStrategyProof
from peak_division.dominance.option_sets import option_box
from peak_division.dominance.pusp import pusp_probe, uniform_characterization_spotcheck
from peak_division.dominance.schemas.verdict import OptionBoxReport
from peak_division.dominance.settings import PEAK_DIVISION_PERTURBATION_BUDGET
from peak_division.economy.domain import Economy
from peak_division.rules.schemas.rule_spec import UniformRule
from peak_division.rules.allocation import uniform_lambdas

from .exceptions import InvalidScenario
from .schemas.report import RunReport
from .schemas.scenario import Scenario, load_scenario

logger = logging.getLogger(__name__)

Handler = Callable[[Scenario, Economy, PeakGrid, int], List[dict]]


def versions() -> Dict[str, str]:
    return {
        "peak_division": __version__,
        "django": django.get_version(),
        "pydantic": str(pydantic.VERSION),
    }


def refusal(rule: str, reason: str, failed=()) -> dict:
    return {"kind": "refusal", "rule": rule, "reason": reason, "failed": list(failed)}


def perturbation_budget(scenario: Scenario) -> int:
    # an explicit 0 means no edits
    if scenario.perturbation_budget is None:
        return PEAK_DIVISION_PERTURBATION_BUDGET
    return scenario.perturbation_budget


def do_allocate(scenario: Scenario, econ: Economy, grid: PeakGrid, workers: int) -> List[dict]:
    rule = scenario.rule
    peaks = econ.check_profile(scenario.peaks)
    result = {
        "kind": "allocation",
        "rule": rule_label(rule),
        "peaks": peaks,
        "allocation": rule.allocate(econ, peaks),
    }
    if isinstance(rule, UniformRule):
        result["levels"] = [
            {"lambda": s.lam, "mode": s.mode.value}
            for s in uniform_lambdas(econ, peaks)
        ]
    return [result]


def do_check(scenario: Scenario, econ: Economy, grid: PeakGrid, workers: int) -> List[dict]:
    reports = run_axioms(scenario.rule, econ, grid, scenario.axioms, workers=workers)
    implications = check_implications(reports)
    results = [dict(kind="axiom", **report.dict(exclude_none=True)) for report in reports]
    if implications:
        results.append({"kind": "implications", "holding": implications})
    return results


def do_option_box(scenario: Scenario, econ: Economy, grid: PeakGrid, workers: int) -> List[dict]:
    agent = scenario.agent - 1
    if agent >= econ.n:
        raise InvalidScenario(f"agent {scenario.agent} does not exist, n={econ.n}")
    if len(scenario.others) != econ.n - 1:
        raise InvalidScenario(f"others lists {len(scenario.others)} peaks, expected {econ.n - 1}")
    others = tuple(
        econ.check_bundle(peak, what=f"peak {k + 1} of the others")
        for k, peak in enumerate(scenario.others)
    )
    box = option_box(scenario.rule, econ, agent, others, grid)
    report = OptionBoxReport(
        agent=scenario.agent, others=others, intervals=box.intervals, valid=box.valid
    )
    return [dict(kind="option-box", rule=rule_label(scenario.rule), **report.dict())]


def do_dominate(scenario: Scenario, econ: Economy, grid: PeakGrid, workers: int) -> List[dict]:
    rule_a, rule_b = scenario.rules
    try:
        verdict = check_domination(rule_a, rule_b, econ, grid, workers=workers)
    except NotStrategyProof as e:
        return [refusal(e.rule, "not-strategy-proof")]
    return [dict(kind="domination", **verdict.dict())]


def do_pusp(scenario: Scenario, econ: Economy, grid: PeakGrid, workers: int) -> List[dict]:
    budget = perturbation_budget(scenario)
    try:
        report = pusp_probe(scenario.rule, econ, grid, budget, workers=workers)
    except HypothesesNotCertified as e:
        return [refusal(e.rule, "hypotheses-not-certified", e.failed)]
    return [dict(kind="axiom", **report.dict(exclude_none=True))]


def do_uniform_characterization(scenario: Scenario, econ: Economy, grid: PeakGrid, workers: int) -> List[dict]:
    report = uniform_characterization_spotcheck(
        econ,
        grid,
        catalog=scenario.rules or None,
        substitute_non_bossy=scenario.substitute_non_bossy,
        perturbation_budget=perturbation_budget(scenario),
        workers=workers,
    )
    return [dict(kind="axiom", **report.dict(exclude_none=True))]


SCENARIO_HANDLERS: Dict[str, Handler] = {
    "allocate": do_allocate,
    "check": do_check,
    "option-box": do_option_box,
    "dominate": do_dominate,
    "pusp": do_pusp,
    "uniform-characterization": do_uniform_characterization,
}


def execute(
    scenario: Scenario,
    workers: int = PEAK_DIVISION_WORKERS,
    grid_points: Optional[int] = None,
) -> RunReport:
    if scenario.command == "builtin":
        from .builtins import reproduce_builtin

        return reproduce_builtin(scenario.case, workers=workers)

    started = time.perf_counter()
    econ = scenario.economy.build()
    grid = scenario.grid.build(econ, grid_points)
    logger.info(
        f"Running {scenario.command} on l={econ.l} n={econ.n} "
        f"omega={econ.omega} with grid {grid.points_per_axis}"
    )
    results = SCENARIO_HANDLERS[scenario.command](scenario, econ, grid, workers)
    return RunReport(
        command=scenario.command,
        scenario=scenario.dict(exclude_none=True),
        results=results,
        versions=versions(),
        elapsed=time.perf_counter() - started,
    )


def run_scenario(
    path: str,
    command: Optional[str] = None,
    workers: int = PEAK_DIVISION_WORKERS,
    grid_points: Optional[int] = None,
) -> RunReport:
    return execute(load_scenario(path, command), workers=workers, grid_points=grid_points)
