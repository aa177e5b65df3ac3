from django.utils.translation import gettext as _

from peak_division.harness.runner import run_scenario
from peak_division.harness.utils import ScenarioCommand


class Command(ScenarioCommand):
    help = "Run any scenario file, whatever its command"

    def add_arguments(self, parser):
        parser.epilog = "Example: ./manage.py run_scenario scenarios/serial_vs_uniform.json"
        parser.add_argument("path", help=_("Scenario json file"))
        super().add_arguments(parser)

    def run(self, **options):
        return run_scenario(
            options["path"],
            workers=options["workers"],
            grid_points=options["grid_points"],
        )
