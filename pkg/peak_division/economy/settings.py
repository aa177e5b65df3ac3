from django.conf import settings


# weights tried by the quadratic witness search are BASE ** e
# for every exponent e in the closed range below
PEAK_DIVISION_WITNESS_WEIGHT_BASE = getattr(
    settings, "PEAK_DIVISION_WITNESS_WEIGHT_BASE", 2
)
PEAK_DIVISION_WITNESS_EXPONENTS = getattr(
    settings, "PEAK_DIVISION_WITNESS_EXPONENTS", (-8, 8)
)
