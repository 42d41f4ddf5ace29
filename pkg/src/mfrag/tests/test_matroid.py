import logging
import unittest
from collections import Counter

from mfrag.catalog import (
    NEAR_REGULAR_EXCLUDED,
    UnknownName,
    catalog,
    catalog_names,
    is_binary,
    is_wheel_or_whirl,
    k23,
    mk4,
    uniform,
    wheel,
    whirl,
)
from mfrag.graph import components, graphic_matroid
from mfrag.isomorphism import is_isomorphic, isomorphic
from mfrag.matroid import (
    EmptyGroundSet,
    ExchangeAxiomViolation,
    GroundSetTooLarge,
    Matroid,
    NotABasis,
    UnknownLabel,
    matroid_from_bases,
)
from mfrag.tests import examples

logger = logging.getLogger(__name__)


class TestExamplesBase(object):
    __test__ = False  # abstract mixin; collected via concrete subclasses

    """Runs ``do_matroid_test`` on every matroid in mfrag.tests.examples."""

    def do_matroid_test(self, matroid):
        pass

    def test_all_examples(self):
        for name, factory in examples.matroids:
            logger.info("Testing the %s matroid", name)
            self.do_matroid_test(factory())


class TestAxioms(TestExamplesBase, unittest.TestCase):
    __test__ = True

    def do_matroid_test(self, m):
        # catalog entries satisfy the exchange axiom
        Matroid(m.ground, m.basis_masks, validate=True)
        self.assertEqual(m.dual().dual(), m)
        self.assertEqual(m.dual().rank(), m.size - m.rank())
        for c in m.circuits():
            self.assertFalse(m.is_independent(c))
            for e in c:
                self.assertTrue(m.is_independent(c - {e}))
        # circuits and cocircuits never meet in exactly one element
        for c in m.circuits():
            for d in m.cocircuits():
                self.assertNotEqual(len(c & d), 1)

    def test_basis_exchange(self):
        with self.assertRaises(ExchangeAxiomViolation) as cm:
            matroid_from_bases(["1", "2", "3", "4"], [["1", "2"], ["3", "4"]])
        self.assertIsNotNone(cm.exception.element)

    def test_bases_of_different_sizes(self):
        with self.assertRaises(ExchangeAxiomViolation):
            matroid_from_bases(["1", "2", "3"], [["1"], ["2", "3"]])

    def test_empty_family(self):
        with self.assertRaises(ExchangeAxiomViolation):
            Matroid(["1"], [])

    def test_ground_set_limits(self):
        with self.assertRaises(GroundSetTooLarge):
            Matroid([str(i) for i in range(17)], [1])
        with self.assertRaises(EmptyGroundSet):
            Matroid([], [0])


class TestRankAndClosure(unittest.TestCase):
    def test_uniform(self):
        m = uniform(2, 4)
        self.assertEqual(m.rank(), 2)
        self.assertEqual(m.rank(["1"]), 1)
        self.assertEqual(m.rank(["1", "2", "3"]), 2)
        self.assertEqual(m.corank(), 2)
        self.assertEqual(m.closure(["1"]), frozenset(["1"]))
        self.assertEqual(m.closure(["1", "2"]), frozenset(m.ground))
        self.assertEqual(len(m.bases()), 6)
        self.assertEqual(m.nonbases(), [])

    def test_fano(self):
        m = examples.fano()
        sizes = Counter(len(c) for c in m.circuits())
        self.assertEqual(sizes, Counter({3: 7, 4: 7}))
        self.assertEqual(len(m.triangles()), 7)
        self.assertEqual(m.closure(["1", "2"]), frozenset(["1", "2", "3"]))
        self.assertEqual(m.coclosure(["4", "5", "6"]), frozenset(["4", "5", "6", "7"]))

    def test_circuit_order(self):
        circuits = uniform(2, 4).circuits()
        self.assertEqual(circuits[0], frozenset(["1", "2", "3"]))
        self.assertEqual(circuits[-1], frozenset(["2", "3", "4"]))

    def test_loops_and_coloops(self):
        m = matroid_from_bases(["a", "b", "c"], [["a"]])
        self.assertEqual(m.coloops(), frozenset(["a"]))
        self.assertEqual(m.loops(), frozenset(["b", "c"]))
        self.assertEqual(m.parallel_classes(), [("a",)])

    def test_series_classes(self):
        m = uniform(2, 3)
        self.assertEqual(m.series_classes(), [("1", "2", "3")])
        self.assertEqual(m.parallel_classes(), [("1",), ("2",), ("3",)])

    def test_segments(self):
        self.assertTrue(uniform(2, 5).is_segment(["1", "2", "3", "4"]))
        self.assertFalse(uniform(3, 5).is_segment(["1", "2", "3"]))
        self.assertFalse(uniform(2, 5).is_segment(["1", "2"]))
        self.assertTrue(uniform(3, 5).is_cosegment(["1", "2", "3"]))

    def test_unknown_label(self):
        with self.assertRaises(UnknownLabel):
            uniform(2, 4).rank(["5"])


class TestMinors(unittest.TestCase):
    def test_delete_and_contract(self):
        m = uniform(2, 4)
        self.assertEqual(m.delete(["4"]), uniform(2, 3))
        self.assertEqual(m.contract(["4"]), uniform(1, 3))
        self.assertEqual(m.minor(contract=["4"], delete=["3"]), uniform(1, 2))
        self.assertIs(m.delete([]), m)
        with self.assertRaises(EmptyGroundSet):
            m.delete(m.ground)

    def test_deletion_is_dual_to_contraction(self):
        m = examples.non_fano()
        self.assertEqual(m.delete(["7"]).dual(), m.dual().contract(["7"]))

    def test_restrict(self):
        m = examples.fano()
        line = m.restrict(["1", "2", "3"])
        self.assertEqual(line, uniform(2, 3))

    def test_minor_b(self):
        m = uniform(2, 4)
        minor = m.minor_B(["1", "2"], ["1", "3"])
        self.assertEqual(set(minor.ground), {"1", "3"})
        self.assertEqual(minor.rank(), 1)
        self.assertEqual(minor.loops(), frozenset())
        with self.assertRaises(NotABasis):
            m.minor_B(["1"], ["1", "3"])

    def test_simplify(self):
        m = examples.gf2_all_ones().matroid()
        simple, classes = m.simplify()
        self.assertEqual(simple.ground, ("x1", "x2", "y1"))
        self.assertEqual(classes["y1"], ("y1", "y2"))
        cosimple, _ = uniform(2, 3).cosimplify()
        self.assertEqual(cosimple.size, 1)

    def test_simplify_keeps_smallest_label(self):
        m = examples.gf2_all_ones().matroid().reordered(["y2", "x1", "x2", "y1"])
        simple, classes = m.simplify()
        self.assertEqual(simple.ground, ("x1", "x2", "y1"))
        self.assertEqual(classes, {"x1": ("x1",), "x2": ("x2",), "y1": ("y2", "y1")})
        cosimple, coclasses = uniform(2, 3).reordered(["3", "1", "2"]).cosimplify()
        self.assertEqual(cosimple.ground, ("1",))
        self.assertEqual(coclasses, {"1": ("3", "1", "2")})

    def test_relabel_and_reorder(self):
        m = uniform(2, 4)
        renamed = m.relabel({"1": "a"})
        self.assertEqual(renamed.ground, ("a", "2", "3", "4"))
        reordered = m.reordered(["4", "3", "2", "1"])
        self.assertEqual(reordered, m)
        self.assertEqual(reordered.digest(), m.digest())
        self.assertNotEqual(wheel(3), whirl(3).relabel({}))


class TestCatalog(unittest.TestCase):
    def test_names(self):
        for name in catalog_names():
            m = catalog(name)
            self.assertIsInstance(m, Matroid, msg=name)
        for name in NEAR_REGULAR_EXCLUDED:
            catalog(name)
        with self.assertRaises(UnknownName):
            catalog("K5")
        with self.assertRaises(UnknownName):
            catalog("wheel(9)")

    def test_uniform_spellings(self):
        for name in ("U(2,4)", "U2,4", "U24"):
            self.assertEqual(catalog(name), uniform(2, 4))
        self.assertEqual(catalog("U(2,4)*"), uniform(2, 4))
        self.assertEqual(catalog("U(3,6)").dual(), uniform(3, 6))

    def test_counts(self):
        self.assertEqual(len(mk4().basis_masks), 16)
        self.assertEqual(len(whirl(3).basis_masks), 17)
        self.assertEqual(len(k23().basis_masks), 12)
        self.assertEqual(k23().rank(), 4)
        self.assertEqual(catalog("AG23e").size, 8)
        self.assertEqual(catalog("P8").rank(), 4)

    def test_wheels(self):
        self.assertTrue(is_isomorphic(wheel(3), mk4()))
        self.assertFalse(is_isomorphic(wheel(3), whirl(3)))
        self.assertTrue(is_wheel_or_whirl(whirl(4)))
        self.assertTrue(is_wheel_or_whirl(mk4()))
        self.assertFalse(is_wheel_or_whirl(uniform(3, 6)))
        self.assertFalse(is_wheel_or_whirl(examples.fano()))

    def test_binary(self):
        self.assertTrue(is_binary(examples.fano()))
        self.assertTrue(is_binary(mk4()))
        self.assertFalse(is_binary(uniform(2, 4)))
        self.assertFalse(is_binary(whirl(3)))


class TestGraphs(unittest.TestCase):
    def test_two_triangles(self):
        edges = [
            ("a", "b", "1"),
            ("b", "c", "2"),
            ("c", "a", "3"),
            ("x", "y", "4"),
            ("y", "z", "5"),
            ("z", "x", "6"),
        ]
        m = graphic_matroid(edges)
        self.assertEqual(m.rank(), 4)
        self.assertEqual(
            components(m), [frozenset(["1", "2", "3"]), frozenset(["4", "5", "6"])]
        )

    def test_parallel_edges_and_loops(self):
        m = graphic_matroid([("a", "b", "e"), ("a", "b", "f"), ("a", "a", "g")])
        self.assertEqual(m.loops(), frozenset(["g"]))
        self.assertEqual(m.parallel_classes(), [("e", "f")])


class TestIsomorphism(unittest.TestCase):
    def test_mapping_carries_bases(self):
        first = examples.fano()
        second = first.relabel(lambda e: "p" + e).reordered(
            ["p7", "p6", "p5", "p4", "p3", "p2", "p1"]
        )
        mapping = isomorphic(first, second)
        self.assertIsNotNone(mapping)
        self.assertEqual(first.relabel(mapping), second)

    def test_non_isomorphic(self):
        self.assertIsNone(isomorphic(examples.fano(), examples.non_fano()))
        self.assertIsNone(isomorphic(uniform(2, 5), uniform(3, 5)))

    def test_self_dual(self):
        self.assertTrue(is_isomorphic(examples.u24(), examples.u24().dual()))
        self.assertTrue(is_isomorphic(mk4(), mk4().dual()))


if __name__ == "__main__":
    unittest.main()
