from django.utils.translation import gettext as _

from peak_division.harness.runner import run_scenario
from peak_division.harness.utils import ScenarioCommand


class Command(ScenarioCommand):
    help = "Allocate the peaks of a scenario with its rule"

    def add_arguments(self, parser):
        parser.epilog = "Example: ./manage.py allocate --scenario scenarios/three_agent_uniform.json"
        parser.add_argument("--scenario", required=True, help=_("Scenario json file"))
        super().add_arguments(parser)

    def run(self, **options):
        return run_scenario(
            options["scenario"],
            command="allocate",
            workers=options["workers"],
            grid_points=options["grid_points"],
        )
