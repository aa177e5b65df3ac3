from django.utils.translation import gettext as _

from peak_division.harness.runner import execute
from peak_division.harness.schemas.scenario import load_scenario
from peak_division.harness.utils import ScenarioCommand


class Command(ScenarioCommand):
    help = "Certify or refute axioms of a scenario rule over a peak grid"

    def add_arguments(self, parser):
        parser.epilog = (
            "Example: ./manage.py check_axioms --scenario scenarios/proportional_check.json "
            "--axioms strategy-proofness --workers 4"
        )
        parser.add_argument("--scenario", required=True, help=_("Scenario json file"))
        parser.add_argument(
            "--axioms",
            nargs="*",
            default=None,
            help=_("Axioms to sweep, overrides the scenario list"),
        )
        super().add_arguments(parser)

    def run(self, **options):
        scenario = load_scenario(options["scenario"], command="check")
        if options["axioms"] is not None:
            scenario = scenario.copy(update={"axioms": options["axioms"]})
        return execute(
            scenario, workers=options["workers"], grid_points=options["grid_points"]
        )
