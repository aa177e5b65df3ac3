from django.conf import settings


# json or table
PEAK_DIVISION_REPORT_FORMAT = getattr(settings, "PEAK_DIVISION_REPORT_FORMAT", "json")

# elapsed times make json reports differ between runs
PEAK_DIVISION_REPORT_TIMINGS = getattr(settings, "PEAK_DIVISION_REPORT_TIMINGS", False)

PEAK_DIVISION_REPORT_TEMPLATE = getattr(
    settings, "PEAK_DIVISION_REPORT_TEMPLATE", "peak_division/report.txt"
)
