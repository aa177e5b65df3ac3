import enum
import json
import logging

from fractions import Fraction
from typing import Any, List, Optional, Tuple

from django.template.loader import render_to_string
from pydantic import BaseModel

from peak_division.economy.rationals import format_both, format_rational

from .exceptions import ReportWriteError
from .schemas.report import RunReport
from .settings import (
    PEAK_DIVISION_REPORT_FORMAT,
    PEAK_DIVISION_REPORT_TEMPLATE,
    PEAK_DIVISION_REPORT_TIMINGS,
)

logger = logging.getLogger(__name__)

FORMATS = ("json", "table")


def to_jsonable(value: Any, timings: bool = PEAK_DIVISION_REPORT_TIMINGS) -> Any:
    """
    Plain json types only: rationals become "p/q" strings, enums their
    values, and ``elapsed`` entries are dropped unless timings are on.
    """
    if isinstance(value, BaseModel):
        value = value.dict()
    if isinstance(value, dict):
        return {
            str(k): to_jsonable(v, timings)
            for k, v in value.items()
            if timings or k != "elapsed"
        }
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [to_jsonable(v, timings) for v in items]
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, Fraction):
        return format_rational(value)
    return value


def render_json(report: RunReport, timings: bool = PEAK_DIVISION_REPORT_TIMINGS) -> str:
    return json.dumps(to_jsonable(report.as_dict(timings), timings), indent=2, sort_keys=True) + "\n"


def _cell(value: Any) -> str:
    if isinstance(value, bool) or value is None:
        return str(value).lower()
    if isinstance(value, enum.Enum):
        return str(value.value)
    if isinstance(value, Fraction):
        return format_both(value)
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_cell(v) for v in value) + ")"
    return str(value)


def flatten(value: Any, prefix: str = "") -> List[Tuple[str, str]]:
    """
    Dotted-key rows for the table format; vectors and matrices stay on a
    single row.
    """
    if isinstance(value, BaseModel):
        value = value.dict()
    if isinstance(value, dict):
        rows = []
        for key in sorted(value):
            rows += flatten(value[key], f"{prefix}.{key}" if prefix else str(key))
        return rows
    if isinstance(value, (list, tuple)) and any(isinstance(v, (dict, BaseModel)) for v in value):
        rows = []
        for k, item in enumerate(value):
            rows += flatten(item, f"{prefix}[{k}]")
        return rows
    return [(prefix, _cell(value))]


def render_table(report: RunReport, timings: bool = PEAK_DIVISION_REPORT_TIMINGS) -> str:
    data = report.as_dict(timings)
    sections = []
    for k, result in enumerate(data["results"]):
        title = f"{k + 1}. {result.get('kind', 'result')}"
        if "axiom" in result:
            title += f" {result['axiom']}"
        if "rule" in result:
            title += f" [{result['rule']}]"
        rows = [
            (key, value) for key, value in flatten(result)
            if key not in ("kind", "axiom", "rule") and (timings or not key.endswith("elapsed"))
        ]
        sections.append({"title": title, "rows": rows})
    width = max((len(key) for s in sections for key, _ in s["rows"]), default=0)
    return render_to_string(
        PEAK_DIVISION_REPORT_TEMPLATE,
        {
            "command": data["command"],
            "versions": sorted(data["versions"].items()),
            "scenario": flatten(data["scenario"]),
            "sections": sections,
            "width": width,
            "elapsed": data.get("elapsed"),
        },
    )


REPORT_RENDERERS = {"json": render_json, "table": render_table}


def emit_report(
    report: RunReport,
    format: str = PEAK_DIVISION_REPORT_FORMAT,
    path: Optional[str] = None,
    timings: bool = PEAK_DIVISION_REPORT_TIMINGS,
) -> str:
    """
    Renders the report and writes it to ``path`` when one is given. The
    rendered text is returned either way.
    """
    if format not in REPORT_RENDERERS:
        raise ValueError(f"unknown report format {format!r}, choose among {FORMATS}")
    text = REPORT_RENDERERS[format](report, timings)
    if path:
        try:
            with open(path, "w") as f:
                f.write(text)
        except OSError as e:
            logger.error(f"Cannot write report to {path}: {e}")
            raise ReportWriteError(f"cannot write {path}: {e}")
        logger.info(f"Report written to {path}")
    return text
