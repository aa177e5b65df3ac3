import logging
import time

from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Tuple

from peak_division.economy.domain import Economy

from .exceptions import UnknownAxiom
from .grid import PeakGrid
from .inspectors import AXIOM_INSPECTORS
from .schemas.report import AxiomReport, Verdict, Witness
from .settings import PEAK_DIVISION_WORKERS
from .table import rule_label, tabulate

logger = logging.getLogger(__name__)

# chunks handed to each worker, more chunks let early witnesses cut work short
CHUNKS_PER_WORKER = 4


def _init_worker() -> None:
    # spawned workers start without the project loaded
    from django.apps import apps

    if not apps.ready:
        import django

        django.setup()


def partition(total: int, chunks: int) -> List[Tuple[int, int]]:
    """
    Splits [0, total) into at most ``chunks`` contiguous, ordered ranges.
    """
    chunks = max(1, min(chunks, total))
    size, extra = divmod(total, chunks)
    ranges, start = [], 0
    for k in range(chunks):
        stop = start + size + (1 if k < extra else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


def scan_chunk(
    axiom: str, rule, econ: Economy, grid: PeakGrid, start: int, stop: int
) -> Optional[Witness]:
    inspector = AXIOM_INSPECTORS[axiom]
    table = tabulate(rule, econ, grid)
    for index, profile in grid.profiles(econ.n, start, stop):
        witness = inspector(table, index, profile)
        if witness is not None:
            logger.debug(f"{axiom}: chunk [{start}, {stop}) stops at profile {index}")
            return witness
    logger.debug(f"{axiom}: chunk [{start}, {stop}) clean")
    return None


def first_witness(
    axiom: str, rule, econ: Economy, grid: PeakGrid, workers: int
) -> Optional[Witness]:
    total = grid.profile_count(econ.n)
    if workers <= 1 or total < 2:
        return scan_chunk(axiom, rule, econ, grid, 0, total)

    ranges = partition(total, workers * CHUNKS_PER_WORKER)
    with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker) as pool:
        futures = [
            pool.submit(scan_chunk, axiom, rule, econ, grid, start, stop)
            for start, stop in ranges
        ]
        # ranges are ordered, so the first chunk reporting a witness holds
        # the lexicographically smallest one
        for k, future in enumerate(futures):
            witness = future.result()
            if witness is not None:
                for pending in futures[k + 1:]:
                    pending.cancel()
                return witness
    return None


def sweep(
    axiom: str,
    rule,
    econ: Economy,
    grid: PeakGrid,
    workers: int = PEAK_DIVISION_WORKERS,
) -> AxiomReport:
    if axiom not in AXIOM_INSPECTORS:
        raise UnknownAxiom(
            f"unknown axiom {axiom!r}, choose among {sorted(AXIOM_INSPECTORS)}"
        )
    label = rule_label(rule)
    total = grid.profile_count(econ.n)
    logger.info(
        f"Sweeping {axiom} for {label} over {total} profiles with {workers} worker(s)"
    )

    started = time.perf_counter()
    witness = first_witness(axiom, rule, econ, grid, workers)
    elapsed = time.perf_counter() - started

    report = AxiomReport(
        axiom=axiom,
        rule=label,
        verdict=Verdict.refuted if witness else Verdict.certified,
        witness=witness,
        profiles_checked=witness.profile_index + 1 if witness else total,
        grid_points=grid.points_per_axis,
        elapsed=elapsed,
    )
    logger.info(f"{axiom} for {label}: {report.verdict.value} in {elapsed:.3f}s")
    return report
