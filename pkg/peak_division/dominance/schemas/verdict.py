import enum

from typing import List, Tuple

from peak_division.economy.schemas.rational import ExactModel, Rational

Vector = Tuple[Rational, ...]
Matrix = Tuple[Vector, ...]


class Relation(str, enum.Enum):
    a_dominates_b = "A_dominates_B"
    b_dominates_a = "B_dominates_A"
    equivalent = "Equivalent"
    incomparable = "Incomparable"


class OptionBoxReport(ExactModel):
    """
    Option set of one agent (1-indexed) against the others' peaks, one
    ``[a, b]`` pair per commodity.
    """

    agent: int
    others: Matrix
    intervals: Tuple[Tuple[Rational, Rational], ...]
    valid: bool


class Evidence(ExactModel):
    # the rule whose option box offers ``point`` while the other rule's does not
    offered_by: str
    agent: int
    others: Matrix
    point: Vector


class DominationVerdict(ExactModel):
    rule_a: str
    rule_b: str
    relation: Relation
    evidence: List[Evidence] = []
    conditioning_profiles: int
    invalid_boxes: int = 0
    elapsed: float = 0.0

    def as_dict(self, timings: bool = False) -> dict:
        exclude = None if timings else {"elapsed"}
        return self.dict(exclude=exclude, exclude_none=True)
