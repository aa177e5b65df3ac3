from django.apps import AppConfig


class PeakDivisionRulesConfig(AppConfig):
    name = "peak_division.rules"
    verbose_name = "Peak Division - Allocation rules"
    label = "peak_division_rules"
