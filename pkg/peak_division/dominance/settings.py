from django.conf import settings


# others-profiles examined per agent, None enumerates all of them
PEAK_DIVISION_CONDITIONING_SAMPLE = getattr(
    settings, "PEAK_DIVISION_CONDITIONING_SAMPLE", None
)

# box-enlargement edits tried by the dominator search
PEAK_DIVISION_PERTURBATION_BUDGET = getattr(
    settings, "PEAK_DIVISION_PERTURBATION_BUDGET", 256
)

PEAK_DIVISION_MAX_EVIDENCE = getattr(settings, "PEAK_DIVISION_MAX_EVIDENCE", 16)
