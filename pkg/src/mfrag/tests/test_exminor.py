import logging
import unittest

from mfrag.catalog import uniform
from mfrag.constants import (
    INCRIMINATED,
    NONZERO_BUT_DEPENDENT,
    NOT_IN_P,
    REPRESENTS,
    ZERO_BUT_BASIS,
)
from mfrag.exminor import (
    InvalidSetup,
    MissingCompanion,
    PivotNotAllowable,
    SetupContext,
    allowable_pivot,
    bad_submatrix_nonzero,
    check_notrepcert_hypotheses,
    incriminates,
    incrimination_dichotomy,
    verify_companion,
)
from mfrag.matroid import NotABasis
from mfrag.partialfield import pf_make
from mfrag.pmatrix import LabelMismatch, PMatrix
from mfrag.tests import examples

logger = logging.getLogger(__name__)

U26 = uniform(2, 6)


def relabeled_u24():
    return uniform(2, 4).relabel({"1": "x1", "2": "x2", "3": "y1", "4": "y2"})


def gf4_u25():
    pf = pf_make("GF(4)")
    return PMatrix(
        pf,
        ["1", "2"],
        ["3", "4", "5"],
        [[1, 1, 1], [1, pf.parse("w"), pf.parse("w+1")]],
    )


class TestIncrimination(unittest.TestCase):
    def test_zero_but_basis(self):
        check = incriminates(
            U26, examples.u26_companion(), ["1", "2"], ["1", "2", "5", "6"]
        )
        self.assertIsNotNone(check)
        self.assertEqual(check.reason, ZERO_BUT_BASIS)
        self.assertTrue(check.det.is_zero())

    def test_not_incriminating(self):
        self.assertIsNone(
            incriminates(U26, examples.u26_companion(), ["1", "2"], ["1", "3"])
        )

    def test_not_in_p(self):
        regular = PMatrix(
            pf_make("regular"), ["x1", "x2"], ["y1", "y2"], [[1, 1], [-1, 1]]
        )
        check = incriminates(
            relabeled_u24(), regular, ["x1", "x2"], ["x1", "x2", "y1", "y2"]
        )
        self.assertEqual(check.reason, NOT_IN_P)
        self.assertFalse(check.det.is_member())

    def test_nonzero_but_dependent(self):
        matroid = examples.gf2_all_ones().matroid()
        matrix = PMatrix(
            pf_make("GF(5)"), ["x1", "x2"], ["y1", "y2"], [[1, 1], [1, 2]]
        )
        check = incriminates(matroid, matrix, ["x1", "x2"], ["x1", "x2", "y1", "y2"])
        self.assertEqual(check.reason, NONZERO_BUT_DEPENDENT)

    def test_rows_must_be_the_basis(self):
        with self.assertRaises(LabelMismatch):
            incriminates(U26, examples.u26_companion(), ["1", "3"], ["1", "3"])

    def test_rows_must_be_independent(self):
        matroid = examples.gf2_all_ones().matroid()
        matrix = PMatrix(pf_make("GF(2)"), ["y1", "y2"], ["x1", "x2"], [[1, 1], [1, 1]])
        with self.assertRaises(NotABasis):
            incriminates(matroid, matrix, ["y1", "y2"], ["y1", "x1"])


class TestDichotomy(unittest.TestCase):
    def test_incriminated(self):
        outcome, check = incrimination_dichotomy(
            U26, examples.u26_companion(), ["1", "2"]
        )
        self.assertEqual(outcome, INCRIMINATED)
        self.assertEqual(check.labels, frozenset(["1", "2", "5", "6"]))
        self.assertEqual(check.reason, ZERO_BUT_BASIS)
        self.assertTrue(check.det.is_zero())

    def test_represents(self):
        outcome, check = incrimination_dichotomy(
            uniform(2, 5), gf4_u25(), ["1", "2"]
        )
        self.assertEqual(outcome, REPRESENTS)
        self.assertIsNone(check)

    def test_not_a_pmatrix(self):
        regular = PMatrix(
            pf_make("regular"), ["x1", "x2"], ["y1", "y2"], [[1, 1], [-1, 1]]
        )
        outcome, check = incrimination_dichotomy(
            relabeled_u24(), regular, ["x1", "x2"]
        )
        self.assertEqual(outcome, INCRIMINATED)
        self.assertEqual(check.reason, NOT_IN_P)

    def test_check_to_dict(self):
        _, check = incrimination_dichotomy(U26, examples.u26_companion(), ["1", "2"])
        content = check.to_dict()
        self.assertEqual(content["reason"], ZERO_BUT_BASIS)
        self.assertEqual(sorted(content["Z"]), ["1", "2", "5", "6"])


class TestCompanion(unittest.TestCase):
    def test_valid_companion(self):
        matrix = examples.u26_companion()
        minor_labels = ["1", "2", "3", "4"]
        flags = verify_companion(
            U26,
            matrix,
            "5",
            "6",
            matrix.submatrix(minor_labels),
            minor_labels,
            ["1", "2"],
        )
        self.assertTrue(flags["pmatrix_minus_a"])
        self.assertTrue(flags["represents_minus_a"])
        self.assertTrue(flags["represents_minus_b"])
        self.assertTrue(flags["scaling_equivalent"])
        self.assertTrue(flags["valid"])

    def test_reference_mismatch(self):
        matrix = examples.u26_companion()
        pf = pf_make("GF(4)")
        reference = PMatrix(
            pf, ["1", "2"], ["3", "4"], [[1, 1], [1, pf.parse("w+1")]]
        )
        flags = verify_companion(
            U26, matrix, "5", "6", reference, ["1", "2", "3", "4"], ["1", "2"]
        )
        self.assertFalse(flags["scaling_equivalent"])
        self.assertFalse(flags["valid"])

    def test_pair_must_label_columns(self):
        matrix = examples.u26_companion()
        with self.assertRaises(LabelMismatch):
            verify_companion(
                U26, matrix, "1", "6", matrix, ["1", "2", "3", "4"], ["1", "2"]
            )


class TestExamplesBase(object):
    __test__ = False  # abstract mixin; collected via concrete subclasses

    def test_all_examples(self):
        for name, factory in examples.setups:
            logger.debug("Checking setup %s", name)
            self.do_tests(factory())

    def do_tests(self, ctx):
        raise NotImplementedError


class TestSetupCheck(TestExamplesBase, unittest.TestCase):
    __test__ = True

    def do_tests(self, ctx):
        self.assertTrue(ctx.check())
        self.assertEqual(ctx.cobasis, frozenset(ctx.reduced.ground) - ctx.basis)
        quadruple = frozenset([ctx.a, ctx.b, ctx.x, ctx.y])
        self.assertEqual(ctx.incriminating_set(), quadruple)
        content = ctx.to_dict()
        self.assertEqual(content["pair"], [ctx.a, ctx.b])
        self.assertEqual(content["xy"], [ctx.x, ctx.y])

    def invalid(self, *args):
        ctx = SetupContext(U26, uniform(2, 4), *args)
        with self.assertRaises(InvalidSetup):
            ctx.check()

    def test_pair_meets_xy(self):
        self.invalid("5", "1", ["1", "2"], "1", "2")

    def test_xy_outside_basis(self):
        self.invalid("5", "6", ["1", "3"], "1", "2")

    def test_not_a_basis(self):
        self.invalid("5", "6", ["1", "2", "3"], "1", "2")

    def test_no_minor(self):
        ctx = SetupContext(U26, uniform(3, 5), "5", "6", ["1", "2"], "1", "2")
        with self.assertRaises(InvalidSetup):
            ctx.check()

    def test_companion_must_incriminate(self):
        pf = pf_make("GF(4)")
        w, w1 = pf.parse("w"), pf.parse("w+1")
        ctx = examples.u26_setup()
        ctx.companion = PMatrix(
            pf, ["1", "2"], ["3", "4", "5", "6"], [[1, 1, 1, 1], [1, w, w1, w]]
        )
        with self.assertRaises(InvalidSetup):
            ctx.check()

    def test_element_flags(self):
        ctx = examples.u26_setup()
        # no single removal from U(2,4) keeps a U(2,4)-minor
        for e in ctx.reduced.ground:
            self.assertFalse(ctx.is_robust(e))
            self.assertFalse(ctx.is_strong(e))
            self.assertFalse(ctx.is_flexible(e))
        self.assertEqual(ctx.strong_outside_xy(), [])
        self.assertEqual(ctx.possible_strong(), frozenset(["1", "2"]))


class TestPivots(unittest.TestCase):
    def test_pivot_on_x(self):
        ctx = examples.u26_setup_with_companion()
        result = allowable_pivot(ctx, "1", "3")
        self.assertEqual(result.x, "3")
        self.assertEqual(result.y, "2")
        self.assertEqual(result.basis, frozenset(["2", "3"]))
        self.assertEqual(set(result.companion.rows), {"2", "3"})
        self.assertNotIn("companion", result.sources)
        self.assertTrue(result.check())

    def test_pivot_on_y(self):
        ctx = examples.u26_setup_with_companion()
        result = allowable_pivot(ctx, "2", "4")
        self.assertEqual((result.x, result.y), ("1", "4"))

    def test_column_in_pair(self):
        ctx = examples.u26_setup_with_companion()
        with self.assertRaises(PivotNotAllowable):
            allowable_pivot(ctx, "1", "5")

    def test_row_outside_basis(self):
        ctx = examples.u26_setup_with_companion()
        with self.assertRaises(PivotNotAllowable):
            allowable_pivot(ctx, "3", "4")

    def test_missing_companion(self):
        with self.assertRaises(MissingCompanion):
            allowable_pivot(examples.u26_setup(), "1", "3")
        with self.assertRaises(MissingCompanion):
            bad_submatrix_nonzero(examples.u26_setup())

    def test_bad_submatrix(self):
        self.assertTrue(bad_submatrix_nonzero(examples.u26_setup_with_companion()))


class TestNotRepCertificate(unittest.TestCase):
    CORE = ["1", "2", "3", "4"]

    def test_hypotheses_hold(self):
        ctx = examples.u26_setup_with_companion()
        flags = check_notrepcert_hypotheses(
            ctx, self.CORE, self.CORE, self.CORE + ["5"], self.CORE + ["6"]
        )
        for name in ("fragile_C", "i", "ii", "iii", "iv", "v", "vi"):
            self.assertTrue(flags[name], name)

    def test_without_companion(self):
        flags = check_notrepcert_hypotheses(
            examples.u26_setup(),
            self.CORE,
            self.CORE,
            self.CORE + ["5"],
            self.CORE + ["6"],
        )
        self.assertIsNone(flags["vi"])
        self.assertTrue(flags["ii"])

    def test_pair_on_one_side(self):
        flags = check_notrepcert_hypotheses(
            examples.u26_setup(),
            self.CORE,
            self.CORE,
            self.CORE + ["5", "6"],
            self.CORE,
        )
        self.assertFalse(flags["i"])


if __name__ == "__main__":
    unittest.main()
