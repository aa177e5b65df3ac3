from django.apps import AppConfig


class PeakDivisionEconomyConfig(AppConfig):
    name = "peak_division.economy"
    verbose_name = "Peak Division - Exact economies, bundles and preferences"
    label = "peak_division_economy"
