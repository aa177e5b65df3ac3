from django.apps import AppConfig


class PeakDivisionDominanceConfig(AppConfig):
    name = "peak_division.dominance"
    verbose_name = "Peak Division - Option sets and domination"
    label = "peak_division_dominance"
