import io
import json
import logging
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from mfrag import __version__
from mfrag.catalog import k23
from mfrag.cli import EXIT_FAILURE, EXIT_INPUT_ERROR, EXIT_OK, main
from mfrag.isomorphism import is_isomorphic
from mfrag.lemmas import _VERIFIERS, verifier
from mfrag.matroid import Matroid

logger = logging.getLogger(__name__)

path = os.path.join(os.path.dirname(os.path.abspath(__file__)), "files")


class CommandTestCase(unittest.TestCase):
    def run_command(self, *argv):
        out = io.StringIO()
        err = io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def run_json(self, *argv, **kwargs):
        code, out, err = self.run_command(*argv)
        self.assertEqual(code, kwargs.get("expected", EXIT_OK), err)
        report = json.loads(out)
        self.assertEqual(report["command"], ["mfrag"] + list(argv))
        return report["result"]


class TestCatalog(CommandTestCase):
    def test_list(self):
        result = self.run_json("catalog", "list")
        self.assertIn("F7", result["names"])
        self.assertIn("AG23e", result["near_regular_excluded"])

    def test_show(self):
        result = self.run_json("catalog", "show", "F7")
        self.assertTrue(result["three_connected"])
        self.assertEqual(len(result["circuits"]), 14)
        self.assertEqual(len(result["cocircuits"]), 7)
        matroid = Matroid.deserialize(content=result["mtd"], format="mtd")
        self.assertEqual(matroid.name, "F7")

    def test_show_needs_name(self):
        code, out, err = self.run_command("catalog", "show")
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertEqual(out, "")
        self.assertIn("needs a name", err)

    def test_unknown_name(self):
        code, _, err = self.run_command("catalog", "show", "nosuch")
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertTrue(err.startswith("error:"))

    def test_text_format(self):
        code, out, _ = self.run_command("--format", "text", "catalog", "list")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith("command: mfrag --format text catalog list"))
        self.assertIn("names: U(2,4)", out)

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as directory:
            target = os.path.join(directory, "report.json")
            code, out, _ = self.run_command("-o", target, "catalog", "list")
            self.assertEqual(code, EXIT_OK)
            self.assertEqual(out, "")
            with open(target) as f:
                self.assertIn("near_regular_excluded", json.load(f)["result"])

    def test_version(self):
        out = io.StringIO()
        with redirect_stdout(out), self.assertRaises(SystemExit):
            main(["--version"])
        self.assertEqual(out.getvalue().strip(), __version__)

    def test_missing_command(self):
        with redirect_stderr(io.StringIO()), self.assertRaises(SystemExit) as cm:
            main([])
        self.assertEqual(cm.exception.code, EXIT_INPUT_ERROR)


class TestAnalyze(CommandTestCase):
    def test_fragile_line(self):
        result = self.run_json("analyze", "--matroid", "U(2,5)", "--minor", "U(2,4)")
        self.assertTrue(result["summary"]["fragile"])
        self.assertEqual(result["summary"]["flexible"], [])
        elements = result["elements"]
        self.assertEqual([e["label"] for e in elements], ["1", "2", "3", "4", "5"])
        self.assertTrue(all(e["deletable"] for e in elements))
        self.assertFalse(any(e["contractible"] for e in elements))

    def test_basis(self):
        result = self.run_json(
            "analyze", "--matroid", "U(2,5)", "--minor", "U(2,4)", "--basis", "1,2"
        )
        self.assertEqual(result["basis"], ["1", "2"])
        robust = {e["label"]: e["robust"] for e in result["elements"]}
        self.assertEqual(
            robust, {"1": False, "2": False, "3": True, "4": True, "5": True}
        )

    def test_no_minor(self):
        code, _, err = self.run_command(
            "analyze", "--matroid", "MK4", "--minor", "U(2,4)"
        )
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertIn("error:", err)

    def test_matrix_file(self):
        result = self.run_json(
            "analyze", "--matroid", os.path.join(path, "u24.pmx"), "--minor", "U(2,4)"
        )
        self.assertEqual(len(result["elements"]), 4)


class TestClassify(CommandTestCase):
    def test_both_theorems(self):
        ctx = os.path.join(path, "u26.ctx")
        result = self.run_json("classify", "--ctx", ctx)
        self.assertEqual(result["mainthm1"]["holds"], ["a", "b_i"])
        self.assertEqual(result["mainthm2"]["holds"], ["a", "b", "c"])

    def test_single_theorem(self):
        ctx = os.path.join(path, "u26-companion.ctx")
        result = self.run_json("classify", "--ctx", ctx, "--theorem", "2")
        self.assertEqual(list(result), ["mainthm2"])

    def test_missing_file(self):
        code, _, err = self.run_command("classify", "--ctx", "no-such.ctx")
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertIn("no-such.ctx", err)


class TestVerify(CommandTestCase):
    def tearDown(self):
        _VERIFIERS.pop("everyelementisaloop", None)

    def test_passes(self):
        result = self.run_json(
            "verify", "--lemma", "calc1", "--corpus", "U(2,4),U(2,5)"
        )
        self.assertTrue(result["passed"])
        self.assertEqual(result["instances"], 2)
        self.assertEqual(result["failures"], [])
        instances = [r["instance"] for r in result["results"]]
        self.assertEqual(instances, ["U(2,4)", "U(2,5)"])

    def test_explicit_minor(self):
        result = self.run_json(
            "verify",
            "--lemma",
            "sicominor",
            "--corpus",
            "U(2,5)",
            "--minor",
            "U(2,4)",
        )
        self.assertEqual(result["instances"], 1)
        self.assertEqual(result["results"][0]["minor"], "U(2,4)")

    def test_failure_exit_code(self):
        @verifier("everyelementisaloop", min_size=1)
        def every_element_is_a_loop(matroid, minor=None):
            """Every element is a loop."""
            for e in matroid.ground:
                yield {"e": e}, e in matroid.loops()

        result = self.run_json(
            "verify",
            "--lemma",
            "everyelementisaloop",
            "--corpus",
            "U(2,4)",
            expected=EXIT_FAILURE,
        )
        self.assertFalse(result["passed"])
        self.assertEqual(len(result["failures"][0]["failures"]), 4)

    def test_unknown_lemma(self):
        code, _, err = self.run_command(
            "verify", "--lemma", "nosuch", "--corpus", "catalog"
        )
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertIn("known lemmas", err)

    def test_corpus_cap(self):
        code, _, err = self.run_command(
            "verify", "--lemma", "calc1", "--corpus", "all-gf2-upto(12)"
        )
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertIn("cap", err)


class TestPivot(CommandTestCase):
    def test_pivot(self):
        result = self.run_json(
            "pivot", "--matrix", os.path.join(path, "u24.pmx"), "--on", "1,3"
        )
        self.assertEqual(result["on"], ["1", "3"])
        self.assertEqual(result["rows"], ["3", "2"])
        self.assertEqual(result["cols"], ["1", "4"])
        self.assertTrue(result["same_matroid"])

    def test_column_first(self):
        result = self.run_json(
            "pivot", "--matrix", os.path.join(path, "u24.pmx"), "--on", "3,1"
        )
        self.assertEqual(result["on"], ["1", "3"])

    def test_bad_labels(self):
        code, _, err = self.run_command(
            "pivot", "--matrix", os.path.join(path, "u24.pmx"), "--on", "1"
        )
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertIn("--on", err)


class TestDeltaY(CommandTestCase):
    def test_delta_y(self):
        result = self.run_json("deltay", "--matroid", "MK4", "--triangle", "12,13,23")
        self.assertEqual(result["exchange"], "delta_y")
        self.assertFalse(result["three_connected"])
        matroid = Matroid.deserialize(content=result["mtd"], format="mtd")
        self.assertTrue(is_isomorphic(matroid, k23()))
        self.assertEqual(matroid.name, "delta_y(MK4,12,13,23)")

    def test_wye_delta(self):
        result = self.run_json("deltay", "--matroid", "K23", "--triad", "11,12,13")
        self.assertEqual(result["exchange"], "wye_delta")
        self.assertTrue(result["three_connected"])

    def test_needs_a_set(self):
        with redirect_stderr(io.StringIO()), self.assertRaises(SystemExit):
            main(["deltay", "--matroid", "MK4"])


class TestFragileScan(CommandTestCase):
    def test_ternary(self):
        result = self.run_json(
            "--no-cache",
            "fragile-scan",
            "--minor",
            "U(2,4)",
            "--field",
            "GF(3)",
            "--max-n",
            "6",
        )
        self.assertEqual(result["field"], "GF(3)")
        self.assertEqual(result["count"], len(result["matroids"]))
        self.assertGreaterEqual(result["count"], 1)
        self.assertTrue(all(entry["fragile"] for entry in result["matroids"]))


if __name__ == "__main__":
    unittest.main()
