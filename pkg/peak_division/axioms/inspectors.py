"""
Per-profile inspectors, one per axiom.

An inspector looks at a single grid profile (and, for the unilateral
axioms, every deviation of every agent from it) and returns the first
violation it meets as a :class:`Witness`, or None. Sweeps call the
inspectors in lexicographic profile order, so the first witness found is
the canonical one.

The unilateral inspectors first consult a memoized summary of the
agent's deviation group and only walk the deviations one by one when
the summary shows a violation somewhere in the group, so the witness
returned is the one the plain walk would return.
"""
import logging

from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from peak_division.economy.domain import Allocation, Bundle, between
from peak_division.economy.preferences import sp_witness_preference

from .grid import Profile
from .schemas.report import PreferenceWitness, Witness
from .table import RuleTable, deviate

logger = logging.getLogger(__name__)

ZERO = Fraction(0)

Inspector = Callable[[RuleTable, int, Profile], Optional[Witness]]


def sp_violated(peak: Bundle, truthful: Bundle, deviated: Bundle) -> bool:
    """
    A peaks-only rule is manipulable at this triple exactly when the
    truthful bundle differs from the deviation bundle and is not between
    the peak and it.
    """
    return truthful != deviated and not between(truthful, peak, deviated)


def same_side_violated(total: Fraction, omega: Fraction, peak: Fraction, share: Fraction) -> bool:
    return (total >= omega and share > peak) or (total <= omega and share < peak)


def rm_violated(before_i: Fraction, after_i: Fraction, before_j: Fraction, after_j: Fraction) -> bool:
    """
    Agent j must move weakly against agent i in the commodity at hand.
    """
    return (before_i <= after_i and before_j < after_j) or (
        before_i >= after_i and before_j > after_j
    )


def uncompromising_applies(peak: Fraction, share: Fraction, report: Fraction) -> bool:
    """
    The new report stays on the same side of the allotment as the true
    peak, which sits strictly away from it.
    """
    return (peak < share and report <= share) or (peak > share and report >= share)


def own_bounds(members: List[Allocation], agent: int) -> Tuple[Bundle, Bundle]:
    """
    Coordinate-wise least and greatest bundle the agent receives across
    the group.
    """
    columns = list(zip(*(alloc[agent] for alloc in members)))
    return tuple(min(c) for c in columns), tuple(max(c) for c in columns)


def sp_clean(peak: Bundle, truthful: Bundle, low: Bundle, high: Bundle) -> bool:
    """
    No report in the group moves the agent to a bundle that the truthful
    one fails to lie between, read off the group bounds alone.
    """
    return all(
        min(p, hi) <= x <= max(p, lo)
        for p, x, lo, hi in zip(peak, truthful, low, high)
    )


def rm_clean(members: List[Allocation], agent: int) -> bool:
    """
    Within the group, every other agent's allotment of each commodity is
    weakly decreasing in the agent's own allotment of it, and constant
    where the agent's allotment ties.
    """
    n, commodities = len(members[0]), len(members[0][agent])
    for c in range(commodities):
        ranked = sorted(members, key=lambda alloc: alloc[agent][c])
        for before, after in zip(ranked, ranked[1:]):
            tie = before[agent][c] == after[agent][c]
            for j in range(n):
                if j == agent:
                    continue
                if tie and before[j][c] != after[j][c]:
                    return False
                if not tie and after[j][c] > before[j][c]:
                    return False
    return True


def nb_clean(members: List[Allocation], agent: int) -> bool:
    # same own bundle, same allocation
    seen: Dict[Bundle, Allocation] = {}
    for alloc in members:
        if seen.setdefault(alloc[agent], alloc) != alloc:
            return False
    return True


def witness_for(
    table: RuleTable,
    index: int,
    profile: Profile,
    agent: Optional[int] = None,
    deviation: Optional[int] = None,
    **kwargs,
) -> Witness:
    data = dict(
        profile_index=index,
        profile=table.peaks(profile),
        truthful=table.outcome(profile),
    )
    if agent is not None:
        data["agent"] = agent + 1
    if deviation is not None:
        data["deviation"] = table.bundles[deviation]
        data["deviated"] = table.outcome(deviate(profile, agent, deviation))
    data.update(kwargs)
    return Witness(**data)


def same_sidedness(table: RuleTable, index: int, profile: Profile) -> Optional[Witness]:
    peaks = table.peaks(profile)
    alloc = table.outcome_at(index)
    for c, w in enumerate(table.econ.omega):
        total = sum((p[c] for p in peaks), ZERO)
        for i, (p, x) in enumerate(zip(peaks, alloc)):
            if same_side_violated(total, w, p[c], x[c]):
                return witness_for(table, index, profile, agent=i, commodity=c + 1)
    return None


def unanimity(table: RuleTable, index: int, profile: Profile) -> Optional[Witness]:
    peaks = table.peaks(profile)
    for c, w in enumerate(table.econ.omega):
        if sum((p[c] for p in peaks), ZERO) != w:
            return None
    alloc = table.outcome_at(index)
    for i, (p, x) in enumerate(zip(peaks, alloc)):
        if p != x:
            return witness_for(table, index, profile, agent=i)
    return None


def strategy_proofness(table: RuleTable, index: int, profile: Profile) -> Optional[Witness]:
    peaks = table.peaks(profile)
    alloc = table.outcome_at(index)
    for i, own in enumerate(profile):
        peak, truthful = peaks[i], alloc[i]
        low, high = table.summary("own-bounds", i, table.group_base(index, i, own), own_bounds)
        if sp_clean(peak, truthful, low, high):
            continue
        for m in range(table.size):
            if m == own:
                continue
            deviated = table.outcome_at(table.neighbour(index, i, own, m))[i]
            if sp_violated(peak, truthful, deviated):
                pref = sp_witness_preference(peak, better=deviated, worse=truthful)
                if pref is None:
                    logger.info(
                        f"Manipulation at profile {index} by agent {i + 1} has no "
                        "quadratic witness; a single-peaked one exists regardless"
                    )
                return witness_for(
                    table, index, profile, agent=i, deviation=m,
                    preference=(
                        PreferenceWitness(peak=pref.peak, weights=pref.weights)
                        if pref else None
                    ),
                )
    return None


def replacement_monotonicity(table: RuleTable, index: int, profile: Profile) -> Optional[Witness]:
    alloc = table.outcome_at(index)
    n = table.econ.n
    for i, own in enumerate(profile):
        if table.summary("rm-clean", i, table.group_base(index, i, own), rm_clean):
            continue
        for m in range(table.size):
            if m == own:
                continue
            other = table.outcome_at(table.neighbour(index, i, own, m))
            for c in range(table.econ.l):
                for j in range(n):
                    if j != i and rm_violated(
                        alloc[i][c], other[i][c], alloc[j][c], other[j][c]
                    ):
                        return witness_for(
                            table, index, profile, agent=i, deviation=m,
                            commodity=c + 1, other_agent=j + 1,
                        )
    return None


def non_bossiness(table: RuleTable, index: int, profile: Profile) -> Optional[Witness]:
    alloc = table.outcome_at(index)
    for i, own in enumerate(profile):
        if table.summary("nb-clean", i, table.group_base(index, i, own), nb_clean):
            continue
        for m in range(table.size):
            if m == own:
                continue
            other = table.outcome_at(table.neighbour(index, i, own, m))
            if other[i] == alloc[i] and other != alloc:
                j = next(k for k, (a, b) in enumerate(zip(alloc, other)) if a != b)
                return witness_for(
                    table, index, profile, agent=i, deviation=m, other_agent=j + 1
                )
    return None


def equal_treatment(table: RuleTable, index: int, profile: Profile) -> Optional[Witness]:
    alloc = None
    for i in range(len(profile)):
        for j in range(i + 1, len(profile)):
            if profile[i] != profile[j]:
                continue
            alloc = alloc or table.outcome_at(index)
            if alloc[i] != alloc[j]:
                return witness_for(table, index, profile, agent=i, other_agent=j + 1)
    return None


def egalitarian_lower_bound(table: RuleTable, index: int, profile: Profile) -> Optional[Witness]:
    peaks = table.peaks(profile)
    alloc = table.outcome_at(index)
    share = table.econ.equal_division
    for i, (p, x) in enumerate(zip(peaks, alloc)):
        if not between(x, p, share):
            return witness_for(table, index, profile, agent=i)
    return None


def uncompromisingness(table: RuleTable, index: int, profile: Profile) -> Optional[Witness]:
    peaks = table.peaks(profile)
    alloc = table.outcome_at(index)
    for i, own in enumerate(profile):
        (p,), (x,) = peaks[i], alloc[i]
        if p == x:
            continue
        for m in range(table.size):
            if m == own:
                continue
            (q,) = table.bundles[m]
            if uncompromising_applies(p, x, q):
                if table.outcome_at(table.neighbour(index, i, own, m))[i] != alloc[i]:
                    return witness_for(table, index, profile, agent=i, deviation=m)
    return None


AXIOM_INSPECTORS: Dict[str, Inspector] = {
    "same-sidedness": same_sidedness,
    "unanimity": unanimity,
    "strategy-proofness": strategy_proofness,
    "replacement-monotonicity": replacement_monotonicity,
    "non-bossiness": non_bossiness,
    "equal-treatment": equal_treatment,
    "egalitarian-lower-bound": egalitarian_lower_bound,
    "uncompromisingness": uncompromisingness,
}
