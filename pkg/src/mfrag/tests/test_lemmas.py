import logging
import unittest

from mfrag.catalog import mk4, uniform
from mfrag.lemmas import (
    LemmaResult,
    UnknownLemma,
    _VERIFIERS,
    check_instance,
    default_minors,
    get_verifier,
    lemma_ids,
    verifier,
    verify,
)
from mfrag.tests import examples
from mfrag.tests.test_minors import two_lines

logger = logging.getLogger(__name__)

LEMMAS = [
    "CPL2",
    "bixby",
    "calc1",
    "calc2",
    "cplminorlemma",
    "existsv3sep",
    "existszclosed",
    "f2f3",
    "fanends",
    "gutspluscoguts1",
    "keepingN",
    "longline3conn",
    "orthogonality",
    "pathgenerator",
    "seriesindependent",
    "seriesnotbasisstrong",
    "sicominor",
    "triadin4circuit",
    "uncrossing",
]


class TestRegistry(unittest.TestCase):
    def test_ids(self):
        self.assertEqual(lemma_ids(), sorted(LEMMAS))

    def test_unknown(self):
        with self.assertRaises(UnknownLemma):
            get_verifier("nosuchlemma")
        with self.assertRaises(UnknownLemma):
            verify("nosuchlemma", [uniform(2, 4)])

    def test_description(self):
        v = get_verifier("orthogonality")
        self.assertIn("cl*(Y)", v.description)
        self.assertNotIn("\n", v.description)

    def test_minor_lemmas(self):
        needing = sorted(name for name in LEMMAS if get_verifier(name).needs_minor)
        self.assertEqual(
            needing, ["CPL2", "cplminorlemma", "existszclosed", "sicominor"]
        )
        self.assertEqual([m.name for m in default_minors()], ["U(2,4)", "MK4"])


class TestExamplesBase(object):
    __test__ = False  # abstract mixin; collected via concrete subclasses

    def test_all_examples(self):
        matroids = [factory() for _, factory in examples.three_connected]
        for name in LEMMAS:
            logger.debug("Verifying %s", name)
            self.do_tests(name, verify(name, matroids))

    def do_tests(self, name, results):
        raise NotImplementedError


class TestLemmasHold(TestExamplesBase, unittest.TestCase):
    __test__ = True

    def do_tests(self, name, results):
        for result in results:
            self.assertTrue(result.passed, "%s: %r" % (name, result.failures[:1]))
            self.assertEqual(result.lemma, name)

    def test_checks_something(self):
        for name in ("orthogonality", "calc1", "uncrossing", "bixby"):
            result = check_instance(name, uniform(2, 5))
            self.assertFalse(result.skipped)
            self.assertGreater(result.checked, 0, name)

    def test_minor_pairs(self):
        results = verify("sicominor", [uniform(2, 5), mk4()])
        self.assertEqual(len(results), 4)
        self.assertEqual(
            [(r.instance["name"], r.minor) for r in results],
            [
                ("U(2,5)", "U(2,4)"),
                ("U(2,5)", "MK4"),
                ("MK4", "U(2,4)"),
                ("MK4", "MK4"),
            ],
        )
        # U(2,5) has no MK4-minor and MK4 no U(2,4)-minor
        self.assertEqual([r.skipped for r in results], [False, True, True, False])

    def test_explicit_minor(self):
        results = verify("CPL2", [uniform(2, 5)], minors=[uniform(2, 4)])
        self.assertEqual(len(results), 1)
        self.assertEqual(results[0].minor, "U(2,4)")

    def test_parallel_jobs(self):
        matroids = [uniform(2, 4), uniform(2, 5), mk4()]
        serial = verify("calc1", matroids)
        parallel = verify("calc1", matroids, jobs=2)
        self.assertEqual(
            [r.to_dict() for r in serial], [r.to_dict() for r in parallel]
        )


class TestSkipping(unittest.TestCase):
    def test_not_3connected(self):
        result = check_instance("calc1", two_lines())
        self.assertTrue(result.skipped)
        self.assertEqual(result.checked, 0)
        self.assertTrue(result.passed)

    def test_too_small(self):
        self.assertTrue(check_instance("calc1", uniform(1, 3)).skipped)
        self.assertFalse(check_instance("orthogonality", uniform(1, 3)).skipped)


class TestFailures(unittest.TestCase):
    def setUp(self):
        @verifier("everyelementisaloop", min_size=1)
        def every_element_is_a_loop(matroid, minor=None):
            """Every element is a loop."""
            for e in matroid.ground:
                yield {"e": e}, e in matroid.loops()

    def tearDown(self):
        _VERIFIERS.pop("everyelementisaloop", None)

    def test_failures_collected(self):
        result = check_instance("everyelementisaloop", uniform(2, 4))
        self.assertEqual(result.checked, 4)
        self.assertFalse(result.passed)
        self.assertEqual(result.failures[0], {"e": "1"})
        content = result.to_dict()
        self.assertFalse(content["passed"])
        self.assertEqual(len(content["failures"]), 4)
        self.assertIsInstance(result, LemmaResult)


if __name__ == "__main__":
    unittest.main()
