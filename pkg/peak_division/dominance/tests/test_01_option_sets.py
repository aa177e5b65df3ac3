from fractions import Fraction as F

from django.test import TestCase

from peak_division.axioms.grid import grid_from_step, make_grid
from peak_division.axioms.table import tabulate
from peak_division.dominance.option_sets import (
    OptionBox,
    box_from_points,
    conditioning_profiles,
    insert_peak,
    option_box,
    table_box,
)
from peak_division.economy.exceptions import ShapeError
from peak_division.rules.catalog import egalitarian_reference, skewed_reference
from peak_division.rules.schemas.rule_spec import SequentialRule, SerialRule

from .settings import (
    ONE_COMMODITY,
    PROPORTIONAL,
    SERIAL,
    SERIAL_FIRST_BOX,
    SERIAL_LAST_BOX,
    THREE_AGENTS,
    THREE_AGENTS_TWO_COMMODITIES,
    TWO_COMMODITIES,
    UNIFORM,
    UNIFORM_BOX,
)


class OptionBoxTest(TestCase):
    def setUp(self):
        self.econ = ONE_COMMODITY
        self.grid = grid_from_step(self.econ, 1)
        self.others = ((F(4),),)

    def test_uniform(self):
        box = option_box(UNIFORM, self.econ, 0, self.others, self.grid)
        self.assertEqual(box.intervals, UNIFORM_BOX)
        self.assertTrue(box.valid)

    def test_serial(self):
        first = option_box(SERIAL, self.econ, 0, self.others, self.grid)
        last = option_box(SERIAL, self.econ, 1, self.others, self.grid)
        self.assertEqual(first.intervals, SERIAL_FIRST_BOX)
        self.assertEqual(last.intervals, SERIAL_LAST_BOX)
        self.assertTrue(first.valid and last.valid)

    def test_proportional_is_not_a_box(self):
        box = option_box(PROPORTIONAL, self.econ, 0, self.others, self.grid)
        self.assertEqual(box.intervals, ((0, F(50, 7)),))
        self.assertFalse(box.valid)

    def test_rule_picks_the_closest_point(self):
        box = option_box(UNIFORM, self.econ, 0, self.others, self.grid)
        for peak in self.grid.bundles:
            alloc = UNIFORM.allocate(self.econ, insert_peak(self.others, 0, peak))
            self.assertEqual(alloc[0], box.clamp(peak))

    def test_wrong_number_of_peaks(self):
        with self.assertRaises(ShapeError):
            option_box(UNIFORM, self.econ, 0, (), self.grid)

    def test_every_box_is_valid_for_sequential_rules(self):
        for econ, points in (
            (ONE_COMMODITY, 5),
            (TWO_COMMODITIES, 3),
            (THREE_AGENTS, 5),
            (THREE_AGENTS_TWO_COMMODITIES, 3),
        ):
            grid = make_grid(econ, points)
            rules = (
                UNIFORM,
                SequentialRule(reference=egalitarian_reference(econ)),
                SequentialRule(reference=skewed_reference(econ)),
                SerialRule(orders=(tuple(range(1, econ.n + 1)),)),
            )
            for rule in rules:
                table = tabulate(rule, econ, grid)
                for others in conditioning_profiles(grid.size, econ.n - 1):
                    for agent in range(econ.n):
                        box = table_box(table, agent, others)
                        self.assertTrue(box.valid, f"{rule.label} n={econ.n} l={econ.l}")

    def test_three_agent_boxes(self):
        grid = grid_from_step(THREE_AGENTS, 1)
        others = ((F(2),), (F(3),))
        self.assertEqual(option_box(UNIFORM, THREE_AGENTS, 0, others, grid).intervals, ((4, 7),))
        serial = SerialRule(orders=((1, 2, 3),))
        self.assertEqual(option_box(serial, THREE_AGENTS, 0, others, grid).intervals, ((0, 12),))
        self.assertEqual(option_box(serial, THREE_AGENTS, 1, others, grid).intervals, ((0, 10),))
        self.assertEqual(option_box(serial, THREE_AGENTS, 2, others, grid).intervals, ((7, 7),))

    def test_table_box_matches_option_box(self):
        table = tabulate(UNIFORM, self.econ, self.grid)
        others = (self.grid.bundle_index((F(4),)),)
        self.assertEqual(
            table_box(table, 0, others).intervals,
            option_box(UNIFORM, self.econ, 0, self.others, self.grid).intervals,
        )


class BoxGeometryTest(TestCase):
    def setUp(self):
        self.grid = grid_from_step(ONE_COMMODITY, 1)

    def test_hull(self):
        box = box_from_points([(F(5),), (F(6),)], self.grid)
        self.assertEqual(box.intervals, ((5, 6),))
        self.assertTrue(box.valid)

    def test_gap_is_invalid(self):
        self.assertFalse(box_from_points([(F(2),), (F(6),)], self.grid).valid)

    def test_off_grid_endpoints(self):
        box = box_from_points([(F(1, 2),), (F(1),), (F(2),), (F(5, 2),)], self.grid)
        self.assertTrue(box.valid)

    def test_nesting(self):
        inner = box_from_points([(F(5),), (F(6),)], self.grid)
        outer = box_from_points([(F(k),) for k in range(11)], self.grid)
        self.assertTrue(inner.within(outer))
        self.assertFalse(outer.within(inner))
        self.assertIsNone(inner.outside(outer))
        self.assertEqual(outer.outside(inner), (0,))

    def test_contains_corners(self):
        box = OptionBox(intervals=((F(1), F(2)), (F(0), F(3))), points=frozenset(), valid=True)
        self.assertTrue(box.contains((1, 3)))
        self.assertFalse(box.contains((3, 3)))


class ConditioningProfilesTest(TestCase):
    def test_all(self):
        self.assertEqual(len(list(conditioning_profiles(5, 2))), 25)

    def test_sample(self):
        self.assertEqual(
            list(conditioning_profiles(5, 2, 4)), [(0, 0), (1, 1), (2, 2), (3, 3)]
        )
        self.assertEqual(len(list(conditioning_profiles(5, 1, 10))), 5)

    def test_no_others(self):
        self.assertEqual(list(conditioning_profiles(5, 0)), [()])
