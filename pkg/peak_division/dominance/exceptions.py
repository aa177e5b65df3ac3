from typing import Sequence


class NotStrategyProof(Exception):
    def __init__(self, rule: str):
        self.rule = rule
        super().__init__(f"{rule} is not certified strategy-proof on this grid")


class HypothesesNotCertified(Exception):
    def __init__(self, rule: str, failed: Sequence[str]):
        self.rule = rule
        self.failed = tuple(failed)
        super().__init__(f"{rule} fails {', '.join(self.failed)}")
