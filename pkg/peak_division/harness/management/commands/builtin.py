from django.utils.translation import gettext as _

from peak_division.harness.builtins import BUILTIN_ALIASES, BUILTIN_CASES, reproduce_builtin
from peak_division.harness.utils import ScenarioCommand


class Command(ScenarioCommand):
    help = "Reproduce a canned case and compare it with its golden values"

    def add_arguments(self, parser):
        parser.epilog = "Example: ./manage.py builtin three-agent-uniform --format table"
        parser.add_argument(
            "case_id",
            help=_("One of: %s, or an alias: %s") % (
                ", ".join(sorted(BUILTIN_CASES)), ", ".join(sorted(BUILTIN_ALIASES))
            ),
        )
        super().add_arguments(parser)

    def run(self, **options):
        # canned cases carry their own grids, --grid-points does not apply
        return reproduce_builtin(options["case_id"], workers=options["workers"])
