import logging

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError
from django.utils.translation import gettext as _

from peak_division.axioms.exceptions import InconsistentImplication, MultiCommodity
from peak_division.axioms.settings import PEAK_DIVISION_WORKERS

from .exceptions import GoldenMismatch, ReportWriteError, UnknownBuiltin
from .reports import FORMATS, emit_report
from .schemas.report import RunReport
from .settings import PEAK_DIVISION_REPORT_FORMAT

logger = logging.getLogger(__name__)

# exception -> process exit code, first match wins
EXIT_CODES = (
    (ValidationError, 2),
    (UnknownBuiltin, 2),
    (MultiCommodity, 2),
    (InconsistentImplication, 3),
    (GoldenMismatch, 3),
    (ReportWriteError, 4),
)


class ScenarioCommand(BaseCommand):
    """
    Shared options and error handling of the scenario commands. Refuted
    verdicts are results, they exit 0 like any completed run.
    """

    def add_arguments(self, parser):
        parser.add_argument(
            "--format",
            choices=FORMATS,
            default=None,
            help=_("Report format, json is canonical and byte-stable"),
        )
        parser.add_argument(
            "--out",
            default=None,
            help=_("Write the report to this path instead of stdout"),
        )
        parser.add_argument(
            "--workers",
            type=int,
            default=PEAK_DIVISION_WORKERS,
            help=_("Processes used by the exhaustive sweeps"),
        )
        parser.add_argument(
            "--grid-points",
            type=int,
            default=None,
            help=_("Points per commodity axis, overrides the scenario grid"),
        )

    def run(self, **options) -> RunReport:
        raise NotImplementedError()  # pragma: no cover

    def handle(self, *args, **options):
        try:
            report = self.run(**options)
            fmt = options["format"] or report.scenario.get("format") or PEAK_DIVISION_REPORT_FORMAT
            text = emit_report(report, format=fmt, path=options["out"])
        except Exception as e:
            for exc_type, code in EXIT_CODES:
                if isinstance(e, exc_type):
                    logger.error(f"{self.__module__.rsplit('.', 1)[-1]} failed: {e}")
                    raise CommandError(str(e), returncode=code)
            raise
        if not options["out"]:
            self.stdout.write(text, ending="")
