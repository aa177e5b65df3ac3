from typing import Any, Dict, List

from peak_division.economy.schemas.rational import ExactModel


class RunReport(ExactModel):
    """
    Outcome of one scenario. ``results`` hold plain json-ready dicts, each
    tagged with a ``kind``.
    """

    command: str
    scenario: Dict[str, Any]
    results: List[Dict[str, Any]] = []
    versions: Dict[str, str] = {}
    elapsed: float = 0.0

    def as_dict(self, timings: bool = False) -> dict:
        exclude = None if timings else {"elapsed"}
        return self.dict(exclude=exclude)
