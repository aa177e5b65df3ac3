from django.test import TestCase

from peak_division.axioms.grid import make_grid
from peak_division.dominance.domination import check_domination
from peak_division.dominance.exceptions import HypothesesNotCertified
from peak_division.dominance.pusp import pusp_probe
from peak_division.dominance.schemas.verdict import Relation

from .settings import (
    DESK,
    DESK_EQUAL_DIVISION,
    DESK_SERIAL,
    DESK_SKEWED,
    UNIFORM,
)


class DeskScaleDominationTest(TestCase):
    def setUp(self):
        self.grid = make_grid(DESK, 5)

    def relation(self, rule_a, rule_b):
        return check_domination(rule_a, rule_b, DESK, self.grid, workers=1)

    def test_uniform_dominates_equal_division(self):
        verdict = self.relation(UNIFORM, DESK_EQUAL_DIVISION)
        self.assertEqual(verdict.relation, Relation.a_dominates_b)
        self.assertEqual(verdict.conditioning_profiles, 625)
        self.assertEqual({e.offered_by for e in verdict.evidence}, {"uniform"})

    def test_serial_and_uniform_are_incomparable(self):
        verdict = self.relation(DESK_SERIAL, UNIFORM)
        self.assertEqual(verdict.relation, Relation.incomparable)
        self.assertEqual({e.offered_by for e in verdict.evidence}, {"serial[1,2,3]", "uniform"})

    def test_uniform_is_equivalent_to_itself(self):
        verdict = self.relation(UNIFORM, UNIFORM)
        self.assertEqual(verdict.relation, Relation.equivalent)
        self.assertEqual(verdict.invalid_boxes, 0)


class DeskScalePuspTest(TestCase):
    def setUp(self):
        self.grid = make_grid(DESK, 5)

    def test_uniform(self):
        report = pusp_probe(UNIFORM, DESK, self.grid, perturbation_budget=64, workers=1)
        self.assertTrue(report.certified)
        self.assertEqual(report.profiles_checked, 15625)

    def test_skewed_sequential(self):
        report = pusp_probe(DESK_SKEWED, DESK, self.grid, perturbation_budget=64, workers=1)
        self.assertTrue(report.certified)
        self.assertIsNone(report.witness)

    def test_equal_division_is_refused(self):
        with self.assertRaises(HypothesesNotCertified) as cm:
            pusp_probe(DESK_EQUAL_DIVISION, DESK, self.grid, workers=1)
        self.assertEqual(cm.exception.failed, ("unanimity",))
