"""
Canned cases with golden values.

Each case runs one or more scenarios through the ordinary handlers and
then compares a few outputs against values established beforehand, either
worked out by hand or taken from a published worked example. A mismatch
is a regression.
"""
import logging
import time

from fractions import Fraction
from typing import Any, Callable, Dict, List, Tuple

from peak_division.axioms.efficiency import find_pareto_improvement
from peak_division.axioms.grid import grid_from_step
from peak_division.axioms.settings import PEAK_DIVISION_WORKERS
from peak_division.economy.domain import make_economy
from peak_division.economy.preferences import QuadraticPreference, quad_strictly_prefers

from .exceptions import GoldenMismatch, UnknownBuiltin
from .runner import SCENARIO_HANDLERS, versions
from .schemas.report import RunReport
from .schemas.scenario import parse_scenario

logger = logging.getLogger(__name__)

F = Fraction

# name, expected, actual, provenance
Golden = Tuple[str, Any, Any, str]
CaseRunner = Callable[[int], Tuple[List[dict], List[Golden]]]


def _run(data: dict, workers: int) -> List[dict]:
    scenario = parse_scenario(data)
    econ = scenario.economy.build()
    grid = scenario.grid.build(econ)
    return SCENARIO_HANDLERS[scenario.command](scenario, econ, grid, workers)


def _by_axiom(results: List[dict]) -> Dict[str, str]:
    return {r["axiom"]: r["verdict"].value for r in results if r["kind"] == "axiom"}


def three_agent_uniform(workers: int):
    results = _run(
        {
            "command": "allocate",
            "economy": {"l": 2, "omega": [12, 15], "n": 3},
            "rule": {"rule": "uniform"},
            "peaks": [[2, 2], [4, 7], [8, 4]],
        },
        workers,
    )
    allocation = results[0]["allocation"]
    levels = tuple(level["lambda"] for level in results[0]["levels"])
    goldens = [
        ("allocation", ((2, 4), (4, 7), (6, 4)), allocation, "worked-example"),
        ("levels", (6, 4), levels, "worked-example"),
        ("modes", ("ExcessDemand", "ExcessSupply"),
         tuple(level["mode"] for level in results[0]["levels"]), "derived-by-hand"),
    ]
    return results, goldens


def inefficient_uniform(workers: int):
    results = _run(
        {
            "command": "allocate",
            "economy": {"l": 2, "omega": [18, 12], "n": 2},
            "rule": {"rule": "uniform"},
            "peaks": [["27/2", 9], [12, "21/2"]],
        },
        workers,
    )
    allocation = results[0]["allocation"]
    peaks = results[0]["peaks"]
    prefs = [
        QuadraticPreference(peak=peaks[0], weights=(F(1), F(3))),
        QuadraticPreference(peak=peaks[1], weights=(F(3), F(1))),
    ]
    econ = make_economy(2, (18, 12), 2)
    improvement = find_pareto_improvement(allocation, prefs, econ, grid_from_step(econ, "1/2"))
    known = ((F(15, 2), F(15, 2)), (F(21, 2), F(9, 2)))
    results.append(
        {
            "kind": "pareto-improvement",
            "preferences": [{"peak": p.peak, "weights": p.weights} for p in prefs],
            "improvement": improvement,
            "known_improvement": known,
            "distances_before": [p.distance(x) for p, x in zip(prefs, allocation)],
            "distances_known": [p.distance(x) for p, x in zip(prefs, known)],
        }
    )
    goldens = [
        ("allocation", ((9, 6), (9, 6)), allocation, "worked-example"),
        ("improvement-found", True, improvement is not None, "derived-by-hand"),
        (
            "known-improvement-strict",
            True,
            all(quad_strictly_prefers(p, k, x) for p, k, x in zip(prefs, known, allocation)),
            "worked-example",
        ),
        ("distances", (F(189, 4), F(171, 4)),
         (prefs[0].distance(allocation[0]), prefs[0].distance(known[0])), "derived-by-hand"),
    ]
    return results, goldens


def serial_equal_treatment(workers: int):
    economy = {"l": 1, "omega": [10], "n": 2}
    serial = {"rule": "serial", "orders": [[1, 2]]}
    results = _run(
        {"command": "allocate", "economy": economy, "rule": serial, "peaks": [[6], [6]]},
        workers,
    )
    results += _run(
        {"command": "allocate", "economy": economy, "rule": serial, "peaks": [[10], [10]]},
        workers,
    )
    results += _run(
        {
            "command": "check",
            "economy": economy,
            "rule": serial,
            "axioms": ["strategy-proofness", "equal-treatment", "egalitarian-lower-bound"],
            "grid": {"points": 5},
        },
        workers,
    )
    verdicts = _by_axiom(results)
    goldens = [
        ("equal-peaks", ((6,), (4,)), results[0]["allocation"], "derived-by-hand"),
        ("full-peaks", ((10,), (0,)), results[1]["allocation"], "derived-by-hand"),
        ("strategy-proofness", "CertifiedOnGrid", verdicts["strategy-proofness"], "sweep"),
        ("equal-treatment", "Refuted", verdicts["equal-treatment"], "sweep"),
        ("egalitarian-lower-bound", "Refuted", verdicts["egalitarian-lower-bound"], "sweep"),
    ]
    return results, goldens


def serial_vs_uniform(workers: int):
    economy = {"l": 1, "omega": [10], "n": 2}
    grid = {"step": 1}
    uniform = {"rule": "uniform"}
    serial = {"rule": "serial", "orders": [[1, 2]]}
    constant = {"rule": "constant", "allocation": [[5], [5]]}
    results = []
    for rule, agent in ((uniform, 1), (serial, 1), (serial, 2)):
        results += _run(
            {
                "command": "option-box",
                "economy": economy,
                "rule": rule,
                "agent": agent,
                "others": [[4]],
                "grid": grid,
            },
            workers,
        )
    for pair in ((serial, uniform), (uniform, constant), (uniform, uniform)):
        results += _run(
            {"command": "dominate", "economy": economy, "rules": list(pair), "grid": grid},
            workers,
        )
    boxes = [r["intervals"] for r in results if r["kind"] == "option-box"]
    relations = [r["relation"].value for r in results if r["kind"] == "domination"]
    goldens = [
        ("uniform-box", ((5, 6),), boxes[0], "derived-by-hand"),
        ("serial-first-box", ((0, 10),), boxes[1], "derived-by-hand"),
        ("serial-last-box", ((6, 6),), boxes[2], "derived-by-hand"),
        ("serial-vs-uniform", "Incomparable", relations[0], "derived-by-hand"),
        ("uniform-vs-constant", "A_dominates_B", relations[1], "derived-by-hand"),
        ("uniform-vs-uniform", "Equivalent", relations[2], "derived-by-hand"),
    ]
    return results, goldens


def uniform_characterization(workers: int):
    results = _run(
        {
            "command": "uniform-characterization",
            "economy": {"l": 2, "omega": [12, 12], "n": 3},
            "grid": {"points": 3},
        },
        workers,
    )
    details = results[0]["details"]
    goldens = [
        ("verdict", "CertifiedOnGrid", results[0]["verdict"].value, "sweep"),
        ("survivors", ["uniform", "sequential[4,4;4,4;4,4]"], details["survivors"], "sweep"),
        (
            "eliminated",
            {
                "sequential[6,6;4,4;2,2]": "equal-treatment",
                "serial[1,2,3]": "equal-treatment",
                "proportional": "strategy-proofness",
                "constant[4,4;4,4;4,4]": "unanimity",
            },
            details["eliminated"],
            "sweep",
        ),
    ]
    return results, goldens


BUILTIN_CASES: Dict[str, CaseRunner] = {
    "three-agent-uniform": three_agent_uniform,
    "inefficient-uniform": inefficient_uniform,
    "serial-equal-treatment": serial_equal_treatment,
    "serial-vs-uniform": serial_vs_uniform,
    "uniform-characterization": uniform_characterization,
}

# the short ids the cases are also known by
BUILTIN_ALIASES: Dict[str, str] = {
    "figure1": "three-agent-uniform",
    "example1": "inefficient-uniform",
    "serial-et": "serial-equal-treatment",
    "domination-serial-uniform": "serial-vs-uniform",
    "theorem3": "uniform-characterization",
}


def _same(expected, actual) -> bool:
    if isinstance(expected, (tuple, list)) and isinstance(actual, (tuple, list)):
        return len(expected) == len(actual) and all(
            _same(e, a) for e, a in zip(expected, actual)
        )
    return expected == actual


def reproduce_builtin(case_id: str, workers: int = PEAK_DIVISION_WORKERS) -> RunReport:
    case_id = BUILTIN_ALIASES.get(case_id, case_id)
    try:
        case = BUILTIN_CASES[case_id]
    except KeyError:
        raise UnknownBuiltin(
            f"unknown builtin {case_id!r}, choose among {sorted(BUILTIN_CASES)} "
            f"or their aliases {sorted(BUILTIN_ALIASES)}"
        )
    started = time.perf_counter()
    results, goldens = case(workers)
    checks = [
        {
            "name": name,
            "expected": expected,
            "actual": actual,
            "provenance": provenance,
            "passed": _same(expected, actual),
        }
        for name, expected, actual, provenance in goldens
    ]
    failed = [c["name"] for c in checks if not c["passed"]]
    if failed:
        for c in checks:
            if not c["passed"]:
                logger.error(f"{case_id}: {c['name']} expected {c['expected']}, got {c['actual']}")
        raise GoldenMismatch(f"{case_id}: {', '.join(failed)} differ from the golden values")
    logger.info(f"{case_id}: {len(checks)} golden value(s) reproduced")
    return RunReport(
        command="builtin",
        scenario={"case": case_id},
        results=results + [{"kind": "golden", "checks": checks}],
        versions=versions(),
        elapsed=time.perf_counter() - started,
    )
