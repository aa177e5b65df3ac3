from django.conf import settings


# rule kinds included in the default catalog, in evaluation order
PEAK_DIVISION_CATALOG = getattr(
    settings,
    "PEAK_DIVISION_CATALOG",
    [
        "uniform",
        "sequential-egalitarian",
        "sequential-skewed",
        "serial",
        "proportional",
        "constant",
    ],
)
