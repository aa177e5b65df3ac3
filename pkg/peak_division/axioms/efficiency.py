import itertools
import logging

from typing import List, Optional, Sequence

from peak_division.economy.domain import Allocation, Economy
from peak_division.economy.exceptions import ShapeError
from peak_division.economy.preferences import (
    QuadraticPreference,
    quad_strictly_prefers,
    quad_weakly_prefers,
)

from .grid import PeakGrid, grid_from_step
from .settings import PEAK_DIVISION_IMPROVEMENT_STEP

logger = logging.getLogger(__name__)


def find_pareto_improvement(
    alloc: Sequence[Sequence],
    prefs: Sequence[QuadraticPreference],
    econ: Economy,
    search: Optional[PeakGrid] = None,
) -> Optional[Allocation]:
    """
    Looks for a feasible allocation that every agent weakly prefers to
    ``alloc`` and at least one strictly prefers.

    The first n-1 agents pick bundles on ``search``, the last one takes
    what is left. Candidates are filtered per agent before the product is
    enumerated, so only weak improvements are ever combined.
    """
    alloc = econ.check_allocation(alloc)
    if len(prefs) != econ.n:
        raise ShapeError(f"expected {econ.n} preferences, got {len(prefs)}")
    search = search or grid_from_step(econ, PEAK_DIVISION_IMPROVEMENT_STEP)

    candidates: List[list] = []
    for i in range(econ.n - 1):
        weak = [b for b in search.bundles if quad_weakly_prefers(prefs[i], b, alloc[i])]
        if not weak:
            return None
        candidates.append(weak)
    logger.debug(
        f"Pareto search over {[len(c) for c in candidates]} candidate bundles per agent"
    )

    last = econ.n - 1
    for picked in itertools.product(*candidates):
        rest = tuple(
            w - sum((b[c] for b in picked), 0) for c, w in enumerate(econ.omega)
        )
        if not econ.contains(rest):
            continue
        if not quad_weakly_prefers(prefs[last], rest, alloc[last]):
            continue
        proposal = tuple(picked) + (rest,)
        strict = any(
            quad_strictly_prefers(pref, b, x) for pref, b, x in zip(prefs, proposal, alloc)
        )
        if strict:
            logger.info(f"Pareto improvement over {alloc}: {proposal}")
            return proposal
    return None
