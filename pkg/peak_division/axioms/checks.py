"""
Axiom certification over peak grids.

Every ``check_*`` function sweeps the whole grid and returns an
:class:`AxiomReport`. ``CertifiedOnGrid`` only means that no violation
exists among the enumerated profiles; it is not a proof on the continuum.
"""
import logging

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Optional

from peak_division.economy.domain import Economy, between
from peak_division.economy.preferences import (
    QuadraticPreference,
    quad_strictly_prefers,
)

from .exceptions import MultiCommodity, UnknownAxiom
from .grid import PeakGrid, make_grid
from .inspectors import (
    AXIOM_INSPECTORS,
    rm_violated,
    same_side_violated,
    sp_violated,
    uncompromising_applies,
)
from .schemas.report import AxiomReport, Witness
from .settings import PEAK_DIVISION_GRID_POINTS, PEAK_DIVISION_WORKERS
from .sweep import sweep

logger = logging.getLogger(__name__)

ZERO = Fraction(0)

AXIOMS = (
    "same-sidedness",
    "unanimity",
    "strategy-proofness",
    "replacement-monotonicity",
    "non-bossiness",
    "equal-treatment",
    "egalitarian-lower-bound",
)
ONE_DIMENSIONAL_AXIOMS = ("uncompromisingness",)


def default_grid(econ: Economy, grid: Optional[PeakGrid] = None) -> PeakGrid:
    return grid or make_grid(econ, PEAK_DIVISION_GRID_POINTS)


@lru_cache(maxsize=256)
def certify(
    axiom: str,
    rule,
    econ: Economy,
    grid: PeakGrid,
    workers: int = PEAK_DIVISION_WORKERS,
) -> AxiomReport:
    """
    Memoized sweep, shared by the dominance probes that keep asking
    the same questions about the same rules.
    """
    return sweep(axiom, rule, econ, grid, workers=workers)


def check_same_sided(
    rule, econ: Economy, grid: PeakGrid = None, workers: int = PEAK_DIVISION_WORKERS
) -> AxiomReport:
    return certify("same-sidedness", rule, econ, default_grid(econ, grid), workers)


def check_unanimity(
    rule, econ: Economy, grid: PeakGrid = None, workers: int = PEAK_DIVISION_WORKERS
) -> AxiomReport:
    return certify("unanimity", rule, econ, default_grid(econ, grid), workers)


def check_strategy_proof(
    rule, econ: Economy, grid: PeakGrid = None, workers: int = PEAK_DIVISION_WORKERS
) -> AxiomReport:
    return certify("strategy-proofness", rule, econ, default_grid(econ, grid), workers)


def check_replacement_monotone(
    rule, econ: Economy, grid: PeakGrid = None, workers: int = PEAK_DIVISION_WORKERS
) -> AxiomReport:
    return certify("replacement-monotonicity", rule, econ, default_grid(econ, grid), workers)


def check_non_bossy(
    rule, econ: Economy, grid: PeakGrid = None, workers: int = PEAK_DIVISION_WORKERS
) -> AxiomReport:
    return certify("non-bossiness", rule, econ, default_grid(econ, grid), workers)


def check_equal_treatment(
    rule, econ: Economy, grid: PeakGrid = None, workers: int = PEAK_DIVISION_WORKERS
) -> AxiomReport:
    return certify("equal-treatment", rule, econ, default_grid(econ, grid), workers)


def check_egalitarian_bound(
    rule, econ: Economy, grid: PeakGrid = None, workers: int = PEAK_DIVISION_WORKERS
) -> AxiomReport:
    return certify("egalitarian-lower-bound", rule, econ, default_grid(econ, grid), workers)


def check_uncompromising_1d(
    rule, econ: Economy, grid: PeakGrid = None, workers: int = PEAK_DIVISION_WORKERS
) -> AxiomReport:
    if econ.l != 1:
        raise MultiCommodity(
            f"uncompromisingness is a one-commodity property, the economy has {econ.l}"
        )
    return certify("uncompromisingness", rule, econ, default_grid(econ, grid), workers)


def run_axioms(
    rule,
    econ: Economy,
    grid: PeakGrid = None,
    axioms: Optional[Iterable[str]] = None,
    workers: int = PEAK_DIVISION_WORKERS,
) -> List[AxiomReport]:
    if axioms is None:
        axioms = AXIOMS + (ONE_DIMENSIONAL_AXIOMS if econ.l == 1 else ())
    axioms = list(axioms)
    for axiom in axioms:
        if axiom not in AXIOM_INSPECTORS:
            raise UnknownAxiom(
                f"unknown axiom {axiom!r}, choose among {sorted(AXIOM_INSPECTORS)}"
            )
        if axiom in ONE_DIMENSIONAL_AXIOMS and econ.l != 1:
            raise MultiCommodity(
                f"{axiom} is a one-commodity property, the economy has {econ.l}"
            )
    grid = default_grid(econ, grid)
    return [certify(axiom, rule, econ, grid, workers) for axiom in axioms]


def _replace(profile, agent: int, bundle):
    return profile[:agent] + (tuple(bundle),) + profile[agent + 1:]


def _confirm(axiom: str, econ: Economy, w: Witness, truthful, deviated) -> bool:
    peaks = w.profile
    i = w.agent - 1 if w.agent else None
    j = w.other_agent - 1 if w.other_agent else None
    c = w.commodity - 1 if w.commodity else None

    if axiom == "same-sidedness":
        total = sum((p[c] for p in peaks), ZERO)
        return same_side_violated(total, econ.omega[c], peaks[i][c], truthful[i][c])
    if axiom == "unanimity":
        sums_match = all(
            sum((p[k] for p in peaks), ZERO) == econ.omega[k] for k in range(econ.l)
        )
        return sums_match and truthful[i] != peaks[i]
    if axiom == "strategy-proofness":
        if not sp_violated(peaks[i], truthful[i], deviated[i]):
            return False
        if w.preference is None:
            return True
        pref = QuadraticPreference(peak=w.preference.peak, weights=w.preference.weights)
        return quad_strictly_prefers(pref, deviated[i], truthful[i])
    if axiom == "replacement-monotonicity":
        return rm_violated(truthful[i][c], deviated[i][c], truthful[j][c], deviated[j][c])
    if axiom == "non-bossiness":
        return deviated[i] == truthful[i] and deviated[j] != truthful[j]
    if axiom == "equal-treatment":
        return peaks[i] == peaks[j] and truthful[i] != truthful[j]
    if axiom == "egalitarian-lower-bound":
        return not between(truthful[i], peaks[i], econ.equal_division)
    if axiom == "uncompromisingness":
        (p,), (x,), (q,) = peaks[i], truthful[i], w.deviation
        return uncompromising_applies(p, x, q) and deviated[i] != truthful[i]
    raise UnknownAxiom(f"unknown axiom {axiom!r}")


def replay_witness(rule, econ: Economy, report: AxiomReport) -> bool:
    """
    Re-evaluates the rule on the witness of a refuted report and confirms
    both the recorded allotments and the violation itself.
    """
    w = report.witness
    if w is None:
        return False
    truthful = rule.allocate(econ, w.profile)
    if w.truthful is not None and tuple(truthful) != tuple(w.truthful):
        logger.warning(f"{report.axiom}: truthful outcome differs from the witness")
        return False
    deviated = None
    if w.deviation is not None:
        deviated = rule.allocate(econ, _replace(w.profile, w.agent - 1, w.deviation))
        if w.deviated is not None and tuple(deviated) != tuple(w.deviated):
            logger.warning(f"{report.axiom}: deviated outcome differs from the witness")
            return False
    return _confirm(report.axiom, econ, w, truthful, deviated)
