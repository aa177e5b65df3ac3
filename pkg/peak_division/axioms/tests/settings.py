from dataclasses import dataclass
from fractions import Fraction as F

from peak_division.economy.domain import make_economy
from peak_division.rules.schemas.rule_spec import (
    ConstantRule,
    ProportionalRule,
    SequentialRule,
    SerialRule,
    UniformRule,
)


@dataclass(frozen=True)
class BossyRule:
    """
    One commodity, three agents. Agent 1 always gets a third of the
    endowment but decides, through their report, which of agents 2 and 3
    gets the larger remaining share.
    """

    label: str = "bossy"

    def allocate(self, econ, peaks):
        econ.check_profile(peaks)
        (w,) = econ.omega
        first, large, small = w / 3, w / 2, w / 6
        if peaks[0][0] > w / 2:
            large, small = small, large
        return ((first,), (large,), (small,))


ONE_COMMODITY_THREE_AGENTS = make_economy(1, [12], 3)
ONE_COMMODITY_TWO_AGENTS = make_economy(1, [10], 2)
TWO_COMMODITIES_THREE_AGENTS = make_economy(2, [12, 12], 3)
TWO_COMMODITIES_TWO_AGENTS = make_economy(2, [4, 4], 2)

UNIFORM = UniformRule()
PROPORTIONAL = ProportionalRule()
SERIAL = SerialRule(orders=((1, 2),))
CONSTANT = ConstantRule(allocation=((4,), (4,), (4,)))
BOSSY = BossyRule()

# proportional, Omega = 10, two agents, grid step 1: agent 2 with peak 1
# gets 10 and prefers the 5 obtained by reporting 0
PROPORTIONAL_SP_WITNESS = {
    "profile_index": 1,
    "profile": ((0,), (1,)),
    "agent": 2,
    "deviation": (0,),
    "truthful": ((0,), (10,)),
    "deviated": ((5,), (5,)),
}

INEFFICIENT_OMEGA = (18, 12)
INEFFICIENT_UNIFORM = ((9, 6), (9, 6))
INEFFICIENT_PEAKS = ((F(27, 2), 9), (12, F(21, 2)))
INEFFICIENT_WEIGHTS = ((1, 3), (3, 1))

SERIAL_THREE = SerialRule(orders=((1, 2, 3),))
# agent 1 half as much again as equal division, agent 3 half of it
SEQUENTIAL_SKEWED = SequentialRule(reference=((6, 6), (4, 4), (2, 2)))
EQUAL_DIVISION = ConstantRule(allocation=((4, 4), (4, 4), (4, 4)))
