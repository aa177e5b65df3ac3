from django.test import TestCase

from peak_division.axioms.grid import grid_from_step
from peak_division.dominance.domination import (
    check_domination,
    dominates_on_grid,
    extensionally_equal,
    find_dominator,
)
from peak_division.dominance.exceptions import NotStrategyProof
from peak_division.dominance.schemas.verdict import Relation

from .settings import (
    EGALITARIAN,
    EQUAL_DIVISION,
    ONE_COMMODITY,
    PROPORTIONAL,
    SERIAL,
    UNIFORM,
)


class CheckDominationTest(TestCase):
    def setUp(self):
        self.econ = ONE_COMMODITY
        self.grid = grid_from_step(self.econ, 1)

    def relation(self, rule_a, rule_b, **kwargs):
        return check_domination(rule_a, rule_b, self.econ, self.grid, workers=1, **kwargs)

    def test_equivalent(self):
        verdict = self.relation(UNIFORM, UNIFORM)
        self.assertEqual(verdict.relation, Relation.equivalent)
        self.assertEqual(verdict.evidence, [])
        self.assertEqual(verdict.conditioning_profiles, 11)
        self.assertEqual(verdict.invalid_boxes, 0)
        self.assertEqual(self.relation(UNIFORM, EGALITARIAN).relation, Relation.equivalent)

    def test_uniform_dominates_equal_division(self):
        verdict = self.relation(UNIFORM, EQUAL_DIVISION)
        self.assertEqual(verdict.relation, Relation.a_dominates_b)
        self.assertTrue(verdict.evidence)
        self.assertTrue(all(e.offered_by == "uniform" for e in verdict.evidence))
        self.assertEqual(
            self.relation(EQUAL_DIVISION, UNIFORM).relation, Relation.b_dominates_a
        )

    def test_incomparable(self):
        verdict = self.relation(SERIAL, UNIFORM)
        self.assertEqual(verdict.relation, Relation.incomparable)
        offered_by = {e.offered_by for e in verdict.evidence}
        self.assertEqual(offered_by, {"serial[1,2]", "uniform"})

    def test_evidence_is_capped(self):
        verdict = self.relation(UNIFORM, EQUAL_DIVISION, max_evidence=2)
        self.assertEqual(len(verdict.evidence), 2)
        for e in verdict.evidence:
            self.assertEqual(e.point, (6,))

    def test_conditioning_sample(self):
        verdict = self.relation(UNIFORM, EQUAL_DIVISION, conditioning_sample=3)
        self.assertEqual(verdict.conditioning_profiles, 3)
        self.assertEqual(verdict.relation, Relation.a_dominates_b)

    def test_manipulable_rule(self):
        with self.assertRaises(NotStrategyProof) as cm:
            self.relation(PROPORTIONAL, UNIFORM)
        self.assertEqual(cm.exception.rule, "proportional")
        with self.assertRaises(NotStrategyProof):
            self.relation(UNIFORM, PROPORTIONAL)

    def test_as_dict(self):
        data = self.relation(UNIFORM, EQUAL_DIVISION).as_dict()
        self.assertNotIn("elapsed", data)
        self.assertEqual(data["relation"], Relation.a_dominates_b)


class PeakBasedDominationTest(TestCase):
    def setUp(self):
        self.econ = ONE_COMMODITY
        self.grid = grid_from_step(self.econ, 1)

    def test_agrees_with_box_nesting(self):
        self.assertTrue(dominates_on_grid(UNIFORM, EQUAL_DIVISION, self.econ, self.grid))
        self.assertTrue(dominates_on_grid(UNIFORM, EQUAL_DIVISION, self.econ, self.grid, strict=True))
        self.assertFalse(dominates_on_grid(EQUAL_DIVISION, UNIFORM, self.econ, self.grid))
        self.assertFalse(dominates_on_grid(SERIAL, UNIFORM, self.econ, self.grid))
        self.assertFalse(dominates_on_grid(UNIFORM, SERIAL, self.econ, self.grid))

    def test_reflexive_not_strict(self):
        self.assertTrue(dominates_on_grid(UNIFORM, EGALITARIAN, self.econ, self.grid))
        self.assertFalse(dominates_on_grid(UNIFORM, EGALITARIAN, self.econ, self.grid, strict=True))

    def test_transitive(self):
        rules = (UNIFORM, EGALITARIAN, EQUAL_DIVISION, SERIAL)
        for a in rules:
            for b in rules:
                for c in rules:
                    if dominates_on_grid(a, b, self.econ, self.grid) and dominates_on_grid(
                        b, c, self.econ, self.grid
                    ):
                        self.assertTrue(dominates_on_grid(a, c, self.econ, self.grid))

    def test_extensional_equality(self):
        self.assertTrue(extensionally_equal(UNIFORM, EGALITARIAN, self.econ, self.grid))
        self.assertFalse(extensionally_equal(UNIFORM, SERIAL, self.econ, self.grid))


class FindDominatorTest(TestCase):
    def setUp(self):
        self.econ = ONE_COMMODITY
        self.grid = grid_from_step(self.econ, 1)

    def test_uniform_dominates_equal_division(self):
        candidate, witness = find_dominator(
            EQUAL_DIVISION, self.econ, self.grid, [SERIAL, UNIFORM], workers=1
        )
        self.assertEqual(candidate, UNIFORM)
        self.assertEqual(witness.counterpart, "uniform")
        self.assertEqual(witness.profile_index, 6)
        self.assertEqual(witness.truthful, ((5,), (5,)))
        self.assertEqual(witness.deviated, ((4,), (6,)))

    def test_manipulable_candidate(self):
        self.assertIsNone(find_dominator(UNIFORM, self.econ, self.grid, [PROPORTIONAL], workers=1))

    def test_nothing_dominates_uniform(self):
        self.assertIsNone(
            find_dominator(UNIFORM, self.econ, self.grid, [EGALITARIAN, SERIAL, EQUAL_DIVISION], workers=1)
        )
