from fractions import Fraction as F

from django.test import TestCase
from hypothesis import assume, given
from hypothesis import strategies as st
from hypothesis.extra.django import TestCase as HypothesisTestCase

from peak_division.rules.allocation import uniform_1d
from peak_division.rules.exceptions import InvalidPeak
from peak_division.rules.water_filling import Mode, solve_lambda, water_level


class SolveLambdaTest(TestCase):
    def test_excess_demand(self):
        solution = solve_lambda([2, 4, 8], 12)
        self.assertEqual(solution.lam, 6)
        self.assertEqual(solution.mode, Mode.excess_demand)

    def test_excess_supply(self):
        solution = solve_lambda([2, 7, 4], 15)
        self.assertEqual(solution.lam, 4)
        self.assertEqual(solution.mode, Mode.excess_supply)

    def test_balanced(self):
        solution = solve_lambda([4, 8], 12)
        self.assertEqual(solution.lam, 8)
        self.assertEqual(solution.mode, Mode.balanced)

    def test_rational_level(self):
        self.assertEqual(solve_lambda([F(27, 2), 12], 18).lam, 9)
        self.assertEqual(solve_lambda([3, 3, 6], 7).lam, F(7, 3))

    def test_supply_with_zero_peaks(self):
        solution = solve_lambda([0, 0, 0], 12)
        self.assertEqual(solution.lam, 4)
        self.assertEqual(solution.mode, Mode.excess_supply)

    def test_zero_endowment(self):
        solution = solve_lambda([0, 0], 0)
        self.assertEqual(solution.lam, 0)
        self.assertEqual(solution.mode, Mode.balanced)

    def test_peak_outside(self):
        with self.assertRaises(InvalidPeak):
            solve_lambda([13, 0], 12)
        with self.assertRaises(InvalidPeak):
            solve_lambda([-1, 0], 12)


class WaterLevelTest(TestCase):
    def test_level_between_kinks(self):
        # min(1, t) + min(9, 4 + t) + min(9, 2 + t) == 12
        self.assertEqual(water_level([1, 9, 9], [0, 4, 2], F(12), F(0)), F(5, 2))

    def test_level_at_floor(self):
        self.assertEqual(water_level([6, 4], [6, 4], F(10), F(0)), 0)

    def test_unreachable(self):
        with self.assertRaises(ValueError):
            water_level([1, 1], [0, 0], F(3), F(0))

    def test_floor_too_high(self):
        with self.assertRaises(ValueError):
            water_level([5, 5], [3, 3], F(4), F(0))


def demand(peaks, t):
    return sum((min(p, t) for p in peaks), F(0))


def supply(peaks, t):
    return sum((max(p, t) for p in peaks), F(0))


amount = st.fractions(min_value=0, max_value=12, max_denominator=6)
peaks_within = amount.flatmap(
    lambda omega: st.tuples(
        st.just(omega),
        st.lists(st.fractions(min_value=0, max_value=omega, max_denominator=6), min_size=1, max_size=4),
    )
)


class SolveLambdaPropertiesTest(HypothesisTestCase):
    @given(peaks_within)
    def test_level_clears_the_commodity(self, case):
        omega, peaks = case
        solution = solve_lambda(peaks, omega)
        level = supply if solution.mode == Mode.excess_supply else demand
        self.assertEqual(level(peaks, solution.lam), omega)

    @given(peaks_within)
    def test_nearby_levels_miss(self, case):
        omega, peaks = case
        solution = solve_lambda(peaks, omega)
        assume(solution.mode != Mode.balanced)
        level = supply if solution.mode == Mode.excess_supply else demand
        eps = F(1, 1000)
        self.assertLess(level(peaks, solution.lam - eps), omega)
        self.assertGreater(level(peaks, solution.lam + eps), omega)

    @given(st.lists(amount, min_size=1, max_size=4), amount)
    def test_balanced_levels_share_one_allocation(self, peaks, extra):
        omega = sum(peaks, F(0))
        solution = solve_lambda(peaks, omega)
        self.assertEqual(solution.mode, Mode.balanced)
        # every level from max(peaks) up clears the commodity
        for t in (solution.lam, solution.lam + extra):
            self.assertEqual(demand(peaks, t), omega)
            self.assertEqual(tuple(min(p, t) for p in peaks), uniform_1d(peaks, omega))


class FlatStretchTest(TestCase):
    def test_any_level_above_the_peaks(self):
        self.assertEqual(solve_lambda([4, 8], 12).lam, 8)
        for t in (8, 9, F(25, 2)):
            self.assertEqual(demand([F(4), F(8)], t), 12)
            self.assertEqual(tuple(min(p, t) for p in (4, 8)), uniform_1d([4, 8], 12))
