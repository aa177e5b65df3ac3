from django.apps import AppConfig


class PeakDivisionHarnessConfig(AppConfig):
    name = "peak_division.harness"
    verbose_name = "Peak Division - Scenario harness"
    label = "peak_division_harness"
