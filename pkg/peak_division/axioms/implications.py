import logging

from collections import defaultdict
from typing import Dict, Iterable, List, Tuple

from .exceptions import InconsistentImplication
from .schemas.report import AxiomReport

logger = logging.getLogger(__name__)

# (antecedents, consequent), each must hold for every rule on every grid
IMPLICATIONS: Tuple[Tuple[Tuple[str, ...], str], ...] = (
    (("replacement-monotonicity",), "non-bossiness"),
    (("strategy-proofness", "unanimity", "non-bossiness"), "same-sidedness"),
    (("same-sidedness",), "unanimity"),
)


def check_implications(reports: Iterable[AxiomReport]) -> List[str]:
    """
    Cross-checks reports of the same rule on the same grid. Returns the
    implications that could be evaluated; raises when a certified
    antecedent meets a refuted consequent.
    """
    grouped: Dict[tuple, Dict[str, AxiomReport]] = defaultdict(dict)
    for report in reports:
        grouped[(report.rule, report.grid_points)][report.axiom] = report

    evaluated = []
    for (rule, grid_points), by_axiom in grouped.items():
        for antecedents, consequent in IMPLICATIONS:
            if consequent not in by_axiom or any(a not in by_axiom for a in antecedents):
                continue
            name = f"{' & '.join(antecedents)} => {consequent}"
            evaluated.append(name)
            if all(by_axiom[a].certified for a in antecedents) and not by_axiom[consequent].certified:
                logger.error(f"{rule} on grid {grid_points} breaks {name}")
                raise InconsistentImplication(
                    f"{rule} is certified for {', '.join(antecedents)} "
                    f"but refuted for {consequent} on grid {grid_points}"
                )
    logger.debug(f"{len(evaluated)} implication(s) hold")
    return evaluated
