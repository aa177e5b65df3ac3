import os

from django.conf import settings


PEAK_DIVISION_GRID_POINTS = getattr(settings, "PEAK_DIVISION_GRID_POINTS", 5)

# processes used by the exhaustive sweeps, 1 means inline
PEAK_DIVISION_WORKERS = getattr(
    settings,
    "PEAK_DIVISION_WORKERS",
    int(os.environ.get("PEAK_DIVISION_WORKERS", "1")),
)

# spacing of the allocation grid searched for Pareto improvements
PEAK_DIVISION_IMPROVEMENT_STEP = getattr(
    settings, "PEAK_DIVISION_IMPROVEMENT_STEP", "1/2"
)

# how many rule tables are kept in memory between sweeps
PEAK_DIVISION_TABLE_CACHE = getattr(settings, "PEAK_DIVISION_TABLE_CACHE", 32)
