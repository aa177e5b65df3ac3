"""
Evidence-grade probes of Pareto-undominated strategy-proofness.

Neither probe proves anything on the continuum: a clean probe means no
strategy-proof dominator was found among the catalog rules and a finite
family of box-enlargement edits, on the given grid.
"""
import itertools
import logging
import time

from typing import Iterable, List, Optional

from peak_division.axioms.checks import (
    check_equal_treatment,
    check_non_bossy,
    check_replacement_monotone,
    check_strategy_proof,
    check_unanimity,
    default_grid,
)
from peak_division.axioms.grid import PeakGrid
from peak_division.axioms.schemas.report import AxiomReport, Verdict
from peak_division.axioms.settings import PEAK_DIVISION_WORKERS
from peak_division.axioms.table import rule_label
from peak_division.economy.domain import Economy
from peak_division.rules.catalog import default_catalog
from peak_division.rules.schemas.rule_spec import UniformRule

from .domination import extensionally_equal, find_dominator
from .exceptions import HypothesesNotCertified
from .perturbations import perturbation_family
from .settings import PEAK_DIVISION_PERTURBATION_BUDGET

logger = logging.getLogger(__name__)

PUSP_HYPOTHESES = {
    "strategy-proofness": check_strategy_proof,
    "unanimity": check_unanimity,
    "replacement-monotonicity": check_replacement_monotone,
}


class _Counted:
    def __init__(self, items: Iterable):
        self.items = items
        self.count = 0

    def __iter__(self):
        for item in self.items:
            self.count += 1
            yield item


def _search(rule, econ: Economy, grid: PeakGrid, catalog, budget: int, workers: int):
    candidates = _Counted(
        itertools.chain(
            (c for c in catalog if c != rule),
            perturbation_family(rule, econ, grid, budget=budget),
        )
    )
    found = find_dominator(rule, econ, grid, candidates, workers)
    return found, candidates.count


def pusp_probe(
    rule,
    econ: Economy,
    grid: PeakGrid = None,
    perturbation_budget: int = PEAK_DIVISION_PERTURBATION_BUDGET,
    catalog: Optional[List] = None,
    workers: int = PEAK_DIVISION_WORKERS,
) -> AxiomReport:
    grid = default_grid(econ, grid)
    label = rule_label(rule)
    failed = [
        name for name, check in PUSP_HYPOTHESES.items()
        if not check(rule, econ, grid, workers).certified
    ]
    if failed:
        logger.warning(f"Dominator search refused for {label}: {failed}")
        raise HypothesesNotCertified(label, failed)

    started = time.perf_counter()
    catalog = default_catalog(econ) if catalog is None else catalog
    found, examined = _search(rule, econ, grid, catalog, perturbation_budget, workers)
    elapsed = time.perf_counter() - started
    witness = found[1] if found else None
    logger.info(f"Dominator search for {label}: {examined} candidate(s) in {elapsed:.3f}s")
    return AxiomReport(
        axiom="pareto-undominated-strategy-proofness",
        rule=label,
        verdict=Verdict.refuted if found else Verdict.certified,
        witness=witness,
        profiles_checked=grid.profile_count(econ.n),
        grid_points=grid.points_per_axis,
        elapsed=elapsed,
        details={"candidates_examined": examined, "perturbation_budget": perturbation_budget},
    )


def uniform_characterization_spotcheck(
    econ: Economy,
    grid: PeakGrid = None,
    catalog: Optional[List] = None,
    substitute_non_bossy: bool = False,
    perturbation_budget: int = PEAK_DIVISION_PERTURBATION_BUDGET,
    workers: int = PEAK_DIVISION_WORKERS,
) -> AxiomReport:
    """
    Screens every catalog rule for strategy-proofness, unanimity,
    monotonicity, equal treatment and, last, the absence of a
    strategy-proof dominator. Certified when every survivor coincides
    with the uniform rule on the grid.

    ``substitute_non_bossy`` screens for non-bossiness instead of
    replacement monotonicity.
    """
    grid = default_grid(econ, grid)
    catalog = default_catalog(econ) if catalog is None else catalog
    monotonicity = "non-bossiness" if substitute_non_bossy else "replacement-monotonicity"
    screens = (
        ("strategy-proofness", check_strategy_proof),
        ("unanimity", check_unanimity),
        (monotonicity, check_non_bossy if substitute_non_bossy else check_replacement_monotone),
        ("equal-treatment", check_equal_treatment),
    )

    started = time.perf_counter()
    eliminated, survivors = {}, []
    for rule in catalog:
        label = rule_label(rule)
        reason = next(
            (name for name, check in screens if not check(rule, econ, grid, workers).certified),
            None,
        )
        if reason is None:
            found, _ = _search(rule, econ, grid, catalog, perturbation_budget, workers)
            if found:
                reason = f"dominated-by:{rule_label(found[0])}"
        if reason:
            logger.info(f"{label} eliminated by {reason}")
            eliminated[label] = reason
        else:
            survivors.append(rule)

    uniform = UniformRule()
    matches = [extensionally_equal(rule, uniform, econ, grid) for rule in survivors]
    certified = bool(survivors) and all(matches)
    elapsed = time.perf_counter() - started
    return AxiomReport(
        axiom="uniform-characterization",
        rule=",".join(rule_label(rule) for rule in catalog),
        verdict=Verdict.certified if certified else Verdict.refuted,
        profiles_checked=grid.profile_count(econ.n),
        grid_points=grid.points_per_axis,
        elapsed=elapsed,
        details={
            "eliminated": eliminated,
            "survivors": [rule_label(rule) for rule in survivors],
            "survivors_match_uniform": all(matches),
            "monotonicity": monotonicity,
        },
    )
