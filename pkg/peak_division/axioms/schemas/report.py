import enum

from typing import Any, Dict, Optional, Tuple

from peak_division.economy.schemas.rational import ExactModel, Rational

Vector = Tuple[Rational, ...]
Matrix = Tuple[Vector, ...]


class Verdict(str, enum.Enum):
    certified = "CertifiedOnGrid"
    refuted = "Refuted"


class PreferenceWitness(ExactModel):
    peak: Vector
    weights: Vector


class Witness(ExactModel):
    """
    A re-runnable counterexample. ``agent`` and ``commodity`` are
    1-indexed; ``profile_index`` is the lexicographic position of the
    profile on the sweep grid.
    """

    profile_index: int
    profile: Matrix
    agent: Optional[int] = None
    other_agent: Optional[int] = None
    commodity: Optional[int] = None
    deviation: Optional[Vector] = None
    truthful: Optional[Matrix] = None
    deviated: Optional[Matrix] = None
    preference: Optional[PreferenceWitness] = None
    counterpart: Optional[str] = None


class AxiomReport(ExactModel):
    axiom: str
    rule: str
    verdict: Verdict
    witness: Optional[Witness] = None
    profiles_checked: int
    grid_points: Tuple[int, ...] = ()
    # seconds, never part of the canonical output
    elapsed: float = 0.0
    details: Dict[str, Any] = {}

    @property
    def certified(self) -> bool:
        return self.verdict == Verdict.certified

    def as_dict(self, timings: bool = False) -> dict:
        exclude = None if timings else {"elapsed"}
        return self.dict(exclude=exclude, exclude_none=True)
