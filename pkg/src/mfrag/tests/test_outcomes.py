import logging
import unittest
from itertools import combinations

from mfrag.catalog import uniform
from mfrag.connectivity import is_z_closed
from mfrag.corpus import generate_corpus
from mfrag.exminor import InvalidSetup, NotRobustNonStrong, SetupContext
from mfrag.matroid import Matroid
from mfrag.minors import RobustBasis, minor_ground
from mfrag.outcomes import (
    OutcomeVerdict,
    _fan_clause,
    _triad_clause,
    classify_mainthm1,
    classify_mainthm2,
    confining_sets,
    good_separation,
    strong_element_audit,
)
from mfrag.tests import examples

logger = logging.getLogger(__name__)


def naive_confining_sets(ctx):
    """Unions of two triads checked straight from the definition."""
    m = ctx.reduced
    triads = [
        frozenset(combo)
        for combo in combinations(m.ground, 3)
        if m.is_cocircuit(combo)
    ]
    found = set()
    for first, second in combinations(triads, 2):
        overlap = len(first & second)
        if overlap not in (1, 2):
            continue
        union = first | second
        if union & ctx.basis != ctx.xy:
            continue
        outside = union - ctx.basis
        if not union <= m.coclosure(outside):
            continue
        if overlap == 1 and not any(ctx.is_strong(e) for e in outside):
            continue
        found.add(union)
    return found


class TestExamplesBase(object):
    __test__ = False  # abstract mixin; collected via concrete subclasses

    def test_all_examples(self):
        for name, factory in examples.setups:
            logger.debug("Checking setup %s", name)
            self.do_tests(factory())

    def do_tests(self, ctx):
        raise NotImplementedError


class TestConfiningSets(TestExamplesBase, unittest.TestCase):
    __test__ = True

    def do_tests(self, ctx):
        found = confining_sets(ctx)
        self.assertEqual({g.labels for g in found}, naive_confining_sets(ctx))
        for g in found:
            self.assertEqual(g.labels, g.first | g.second)
            self.assertTrue(ctx.reduced.is_cocircuit(g.first))
            self.assertTrue(ctx.reduced.is_cocircuit(g.second))

    def test_line(self):
        found = confining_sets(examples.u26_setup())
        self.assertEqual(len(found), 1)
        g = found[0]
        self.assertEqual(g.labels, frozenset(["1", "2", "3", "4"]))
        self.assertEqual(g.first, frozenset(["1", "2", "3"]))
        self.assertEqual(g.second, frozenset(["1", "2", "4"]))
        self.assertEqual(g.overlap, 2)
        self.assertIsNone(g.strong_witness)
        self.assertEqual(g.to_dict()["G"], ["1", "2", "3", "4"])

    def test_avoids_rest_of_basis(self):
        found = confining_sets(examples.u37_setup())
        self.assertEqual([g.labels for g in found], [frozenset(["1", "2", "4", "5"])])


class TestStrongAudit(unittest.TestCase):
    def test_nothing_strong(self):
        audit = strong_element_audit(examples.u26_setup_with_companion())
        self.assertEqual(audit["strong"], [])
        self.assertTrue(audit["passed"])
        for name, check in audit["checks"].items():
            self.assertTrue(check["passed"], name)

    def test_strong_basis_element(self):
        # in U(3,5) only contractions keep a U(2,4)-minor
        audit = strong_element_audit(examples.u37_setup())
        self.assertEqual(audit["strong"], ["3"])
        self.assertFalse(audit["checks"]["nostrongbasis"]["passed"])
        self.assertEqual(audit["checks"]["nostrongbasis"]["detail"], ["3"])
        self.assertTrue(audit["checks"]["atmost2outxy"]["passed"])
        self.assertFalse(audit["passed"])


class TestGoodSeparation(unittest.TestCase):
    def test_requires_robust_element(self):
        ctx = examples.u26_setup()
        with self.assertRaises(NotRobustNonStrong):
            good_separation(ctx, "1")
        with self.assertRaises(NotRobustNonStrong):
            good_separation(ctx, "3")

    def test_requires_element_of_reduced(self):
        with self.assertRaises(NotRobustNonStrong):
            good_separation(examples.u26_setup(), "5")

    def test_strong_element_rejected(self):
        with self.assertRaises(NotRobustNonStrong):
            good_separation(examples.u37_setup(), "3")

    def test_glued_halves(self):
        ctx = examples.glued_setup()
        result = good_separation(ctx, "12")
        self.assertFalse(result.dual)
        self.assertIsNone(result.trimmed)
        self.assertEqual(result.side_y, frozenset(["14", "34", "45", "25", "35"]))
        self.assertEqual(result.side_x, frozenset(["16", "67", "27", "36", "37"]))
        self.assertEqual(result.possible_strong, frozenset(["45", "14", "34"]))
        self.assertTrue(result.vertical)
        self.assertLessEqual(result.lambda_value, 2)
        self.assertTrue(is_z_closed(ctx.reduced, "12", result.side_y))
        self.assertTrue(result.strong_in_y)
        copy = minor_ground(ctx.reduced.contract("12"), ctx.minor)
        self.assertEqual(copy, frozenset(["67", "27"]))
        self.assertLessEqual(len(result.side_y & copy), 1)
        for e in result.side_y - result.possible_strong:
            self.assertTrue(ctx.is_flexible(e), e)
        self.assertTrue(result.to_dict()["S'_in_Y"])

    def test_trimmed_side_must_stay_vertical(self):
        corpus = generate_corpus("GF(3)", 7)
        found = [m for m in corpus if m.name == "GF(3)-n7-1"][0]
        m = Matroid(list(found.ground) + ["a", "b"], found.basis_masks)
        ctx = SetupContext(m, uniform(2, 4), "a", "b", ["1", "2", "3"], "1", "2")
        self.assertTrue(ctx.check())
        with self.assertRaises(InvalidSetup):
            good_separation(ctx, "4")


class TestClassification(unittest.TestCase):
    def test_first_theorem_on_line(self):
        verdict = classify_mainthm1(examples.u26_setup())
        self.assertEqual(verdict.holds, ["a", "b_i"])
        self.assertEqual(
            verdict.evidence["b_i"], {"basis": ["1", "2"], "robust": []}
        )
        self.assertTrue(verdict.evidence["fragile"])
        self.assertEqual(verdict.evidence["flexible"], [])
        self.assertEqual(verdict.to_dict()["theorem"], 1)

    def test_second_theorem_on_line(self):
        verdict = classify_mainthm2(examples.u26_setup())
        self.assertEqual(verdict.holds, ["a", "b", "c"])
        self.assertEqual(verdict.instance["candidate"], "M")
        self.assertEqual(verdict.instance["pair"], ["5", "6"])
        self.assertEqual(verdict.evidence["b"], {"rank": 2, "minor_rank": 2})

    def test_size_bound(self):
        verdict = classify_mainthm1(examples.u37_setup())
        self.assertTrue(verdict.flags["a"])
        self.assertEqual(verdict.evidence["a"], {"size": 7, "minor_size": 4})

    def test_verdict_without_outcome(self):
        verdict = OutcomeVerdict(2, {"a": False, "b": False, "c": False}, {})
        self.assertEqual(verdict.holds, [])
        self.assertIsNone(verdict.to_dict()["instance"])

    def test_second_theorem_evaluates_every_exchange(self):
        verdict = classify_mainthm2(examples.k5_setup())
        self.assertEqual(verdict.instance["candidate"], "M")
        self.assertEqual(verdict.holds, ["a", "b"])
        summaries = verdict.evidence["candidates"]
        self.assertEqual(len(summaries), 11)
        self.assertEqual(summaries[0]["candidate"], "M")
        self.assertEqual(summaries[1]["candidate"], "wye_delta(M*,12,13,23)")
        for summary in summaries[1:]:
            self.assertTrue(summary["candidate"].startswith("wye_delta(M*,"))
            self.assertEqual(summary["pair"], ["a", "b"])
            self.assertEqual(summary["xy"], ["12", "13"])
            self.assertEqual(summary["holds"], ["a", "b"])

    def test_wheel_is_fragile(self):
        verdict = classify_mainthm1(examples.w4_setup())
        self.assertTrue(verdict.evidence["fragile"])
        self.assertEqual(verdict.evidence["flexible"], [])
        self.assertFalse(verdict.flags["b_ii"])
        self.assertFalse(verdict.flags["b_iii"])


class TestOutcomeClauses(unittest.TestCase):
    """The triad and fan outcomes on the wheel W4 over GF(3)."""

    def setUp(self):
        self.ctx = examples.w4_setup()
        self.cocircuit = sorted(["a", "b", "r12", "r41", "s1"])

    def clause(self, check, basis, flexible=("r12",)):
        candidate = RobustBasis(basis, ["s1"], ["s1"])
        ctx = self.ctx
        return check(
            ctx.matroid, "a", "b", ctx.reduced, candidate, "r12", "r41", set(flexible)
        )

    def test_triad(self):
        basis = ["s2", "r12", "r41", "r23"]
        self.assertEqual(
            self.clause(_triad_clause, basis),
            {
                "basis": sorted(basis),
                "triad": ["r12", "r41", "s1"],
                "cocircuit": self.cocircuit,
                "triangle": ["a", "r12", "r41"],
            },
        )

    def test_triad_needs_flexible_elements_inside(self):
        basis = ["s2", "r12", "r41", "r23"]
        self.assertIsNone(self.clause(_triad_clause, basis, ["r12", "s3"]))

    def test_triad_element_outside_basis(self):
        basis = ["s1", "r12", "r41", "r23"]
        self.assertIsNone(self.clause(_triad_clause, basis))

    def test_fan(self):
        basis = ["s2", "r12", "r41", "r23"]
        self.assertEqual(
            self.clause(_fan_clause, basis),
            {
                "basis": sorted(basis),
                "fan": ["s2", "s1", "r12", "r41"],
                "cocircuit": self.cocircuit,
                "z": "s1",
                "triangle": ["a", "r12", "r41"],
            },
        )

    def test_fan_follows_basis(self):
        found = self.clause(_fan_clause, ["s4", "r12", "r41", "r23"])
        self.assertEqual(found["fan"], ["s4", "s1", "r41", "r12"])
        self.assertEqual(found["z"], "s1")

    def test_fan_of_first_type(self):
        self.assertIsNone(self.clause(_fan_clause, ["s2", "r12", "s3", "s4"]))


if __name__ == "__main__":
    unittest.main()
