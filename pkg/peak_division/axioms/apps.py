from django.apps import AppConfig


class PeakDivisionAxiomsConfig(AppConfig):
    name = "peak_division.axioms"
    verbose_name = "Peak Division - Axiom verification"
    label = "peak_division_axioms"
