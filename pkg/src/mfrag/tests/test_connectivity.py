import logging
import unittest

from mfrag.catalog import mk4, uniform, wheel
from mfrag.connectivity import (
    ConnectivityException,
    DegenerateSide,
    FanRecord,
    HypothesisFailed,
    Not3Connected,
    NotAFan,
    NoVerticalSeparation,
    SeparationRecord,
    cl_or_clstar_membership,
    detachable_pairs,
    fan_end_kind,
    fan_type,
    fans,
    fcl,
    is_3connected,
    is_connected,
    is_fan,
    is_z_closed,
    lambda_value,
    path_of_3seps,
    separations,
    vertical_3seps_through,
    z_closed_separation,
)
from mfrag.graph import graphic_matroid
from mfrag.matroid import matroid_from_bases
from mfrag.operations import two_sum
from mfrag.tests import examples

logger = logging.getLogger(__name__)

LINE = ["1", "2", "3"]


def k5_minus_edge():
    """K5 with the edge pq removed; {u, v, w} is a vertex cut."""
    edges = [
        ("u", "v", "uv"),
        ("v", "w", "vw"),
        ("w", "u", "wu"),
        ("p", "u", "pu"),
        ("p", "v", "pv"),
        ("p", "w", "pw"),
        ("q", "u", "qu"),
        ("q", "v", "qv"),
        ("q", "w", "qw"),
    ]
    return graphic_matroid(edges, name="K5-e")


def k4_and_claw():
    """A K4 on {p1, p2} and a claw from q, both attached to the triangle uvw."""
    edges = [("u", "v", "uv"), ("v", "w", "vw"), ("w", "u", "wu"), ("p1", "p2", "pp")]
    for p in ("p1", "p2", "q"):
        for t in ("u", "v", "w"):
            edges.append((p, t, p + t))
    return graphic_matroid(edges, name="K4+claw")


def two_lines():
    second = uniform(2, 4).relabel({"1": "a", "2": "b", "3": "c"})
    return two_sum(uniform(2, 4), second, "4")


class TestConnectivity(unittest.TestCase):
    def test_lambda(self):
        m = uniform(2, 4)
        self.assertEqual(lambda_value(m, ["1", "2"]), 2)
        self.assertEqual(lambda_value(m, ["1"]), 1)
        self.assertEqual(lambda_value(two_lines(), LINE), 1)
        for side in ([], m.ground):
            with self.assertRaises(DegenerateSide):
                lambda_value(m, side)

    def test_three_connected_examples(self):
        for name, factory in examples.three_connected:
            m = factory()
            self.assertTrue(is_connected(m), msg=name)
            self.assertTrue(is_3connected(m), msg=name)
        self.assertTrue(is_3connected(k5_minus_edge()))

    def test_not_three_connected(self):
        m = two_lines()
        self.assertTrue(is_connected(m))
        self.assertFalse(is_3connected(m))
        self.assertFalse(is_3connected(examples.gf2_all_ones().matroid()))
        coloop = matroid_from_bases(["a", "b", "c"], [["a", "b"], ["a", "c"]])
        self.assertFalse(is_connected(coloop))

    def test_two_separations(self):
        records = separations(two_lines(), 2)
        self.assertEqual(len(records), 1)
        record = records[0]
        self.assertEqual(record.side_x, frozenset(LINE))
        self.assertEqual(record.side_y, frozenset(["a", "b", "c"]))
        self.assertEqual(record.lambda_value, 1)
        self.assertTrue(record.exact)

    def test_three_separations(self):
        self.assertEqual(separations(uniform(3, 6), 3), [])
        records = separations(examples.fano(), 3)
        self.assertEqual(len(records), 7)
        for record in records:
            self.assertEqual(len(record.side_x), 3)
            self.assertTrue(record.exact)
            self.assertFalse(record.vertical)


class TestSeparationRecord(unittest.TestCase):
    def test_guts_and_coguts(self):
        m = examples.fano()
        record = SeparationRecord(m, LINE, ["4", "5", "6", "7"])
        self.assertEqual(record.lambda_value, 2)
        self.assertEqual(record.guts, frozenset(LINE))
        self.assertEqual(record.coguts, frozenset())
        d = record.to_dict()
        self.assertEqual(d["X"], LINE)
        self.assertIsNone(d["z"])

    def test_partition_checks(self):
        m = examples.fano()
        with self.assertRaises(ConnectivityException):
            SeparationRecord(m, LINE, ["3", "4", "5", "6", "7"])
        with self.assertRaises(ConnectivityException):
            SeparationRecord(m, LINE, ["4", "5"])
        with self.assertRaises(DegenerateSide):
            SeparationRecord(m, m.ground, [])

    def test_middle_element(self):
        m = k5_minus_edge()
        record = SeparationRecord(
            m, ["pu", "pv", "pw", "vw"], ["qu", "qv", "qw", "wu"], z="uv"
        )
        self.assertEqual(record.lambda_value, 2)
        self.assertTrue(record.vertical)


class TestVerticalSeparations(unittest.TestCase):
    def test_through_a_cut_edge(self):
        m = k5_minus_edge()
        records = vertical_3seps_through(m, "uv")
        self.assertTrue(records)
        sides = [{r.side_x, r.side_y} for r in records]
        self.assertIn(
            {
                frozenset(["pu", "pv", "pw", "vw"]),
                frozenset(["qu", "qv", "qw", "wu"]),
            },
            sides,
        )
        for record in records:
            self.assertTrue(record.vertical)
            self.assertLessEqual(record.lambda_value, 2)

    def test_none_in_uniform(self):
        self.assertEqual(vertical_3seps_through(uniform(2, 4), "1"), [])
        with self.assertRaises(NoVerticalSeparation):
            z_closed_separation(uniform(2, 4), "1")

    def test_needs_three_connected(self):
        with self.assertRaises(Not3Connected):
            vertical_3seps_through(two_lines(), "1")

    def test_z_closed_side(self):
        m = k4_and_claw()
        record = z_closed_separation(m, "uv")
        self.assertTrue(record.vertical)
        self.assertTrue(record.z_closed_Y)
        self.assertTrue(is_z_closed(m, "uv", record.side_y))

    def test_minor_hint(self):
        m = k4_and_claw()
        hint = ["p1u", "p2u", "pp"]
        record = z_closed_separation(m, "uv", minor_ground=hint)
        self.assertLessEqual(len(record.side_y & set(hint)), 1)
        self.assertEqual(record.side_y, frozenset(["qu", "qv", "qw", "vw", "wu"]))


class TestClosures(unittest.TestCase):
    def test_membership(self):
        m = examples.fano()
        self.assertTrue(cl_or_clstar_membership(m, ["1", "2"], "3")["in_cl"])
        result = cl_or_clstar_membership(m, ["1", "2"], "4")
        self.assertFalse(result["in_cl"])
        self.assertFalse(result["in_clstar"])
        with self.assertRaises(ConnectivityException):
            cl_or_clstar_membership(m, ["1", "2"], "1")

    def test_full_closure(self):
        m = examples.fano()
        self.assertEqual(fcl(m, ["1", "2"]), frozenset(LINE))
        self.assertEqual(fcl(m, LINE), frozenset(LINE))

    def test_z_closed(self):
        m = examples.fano()
        self.assertTrue(is_z_closed(m, "4", LINE))
        self.assertTrue(is_z_closed(m, "3", ["1", "2"]))
        self.assertFalse(is_z_closed(m, "4", ["1", "2"]))


class TestFans(unittest.TestCase):
    K4_FAN = ["12", "13", "23", "34"]

    def test_k4(self):
        m = mk4()
        found = fans(m)
        self.assertTrue(found)
        for fan in found:
            self.assertEqual(len(fan), 6)
            self.assertTrue(fan.maximal)
            self.assertTrue(is_fan(m, fan.ordering))

    def test_wheel_fans_cover_the_wheel(self):
        m = wheel(4)
        for fan in fans(m):
            self.assertEqual(len(fan), 8)
        self.assertIn(
            ("s1", "r1", "s2", "r2", "s3", "r3", "s4", "r4"),
            [fan.ordering for fan in fans(m)],
        )

    def test_record(self):
        m = mk4()
        fan = FanRecord(m, self.K4_FAN)
        self.assertTrue(fan.starts_with_triangle)
        self.assertFalse(fan.ends_with_triangle)
        self.assertEqual(fan.to_dict()["ordering"], self.K4_FAN)
        with self.assertRaises(NotAFan):
            FanRecord(m, ["12", "34", "13"])
        self.assertFalse(is_fan(m, ["12", "34", "13"]))
        self.assertFalse(is_fan(m, ["12", "13"]))

    def test_types(self):
        fan = FanRecord(mk4(), self.K4_FAN)
        self.assertEqual(fan_type(fan, ["12", "23"]), "I")
        self.assertEqual(fan_type(fan, ["12", "23", "34"]), "II")
        self.assertIsNone(fan_type(fan, ["13"]))
        six = fans(mk4())[0]
        self.assertIsNone(fan_type(six, six.ordering[:3]))

    def test_ends(self):
        m = mk4()
        fan = FanRecord(m, self.K4_FAN)
        self.assertEqual(fan_end_kind(m, fan, "12"), "spoke")
        self.assertEqual(fan_end_kind(m, fan, "34"), "rim")
        with self.assertRaises(ConnectivityException):
            fan_end_kind(m, fan, "13")
        with self.assertRaises(NotAFan):
            fan_end_kind(m, FanRecord(m, self.K4_FAN[:3]), "12")


class TestPaths(unittest.TestCase):
    def test_wheel_path(self):
        m = wheel(4)
        path = path_of_3seps(
            m, ["s1", "r1", "s2"], ["s3", "r2"], ["r3", "s4", "r4"]
        )
        self.assertEqual(
            path.parts,
            [
                frozenset(["s1", "r1", "s2"]),
                frozenset(["r2"]),
                frozenset(["s3"]),
                frozenset(["r3", "s4", "r4"]),
            ],
        )
        self.assertEqual(path.prefix_lambdas(), [2, 2, 2])

    def test_hypothesis_fails(self):
        with self.assertRaises(HypothesisFailed) as cm:
            path_of_3seps(uniform(3, 6), ["1", "2"], ["3"], ["4", "5", "6"])
        self.assertEqual(cm.exception.z, "3")


class TestDetachablePairs(unittest.TestCase):
    def test_uniform(self):
        self.assertEqual(detachable_pairs(uniform(3, 6)), [])
        pairs = detachable_pairs(uniform(2, 5))
        self.assertEqual(len(pairs), 10)
        for _, _, tags in pairs:
            self.assertEqual(tags, ("delete",))

    def test_needs_three_connected(self):
        with self.assertRaises(Not3Connected):
            detachable_pairs(two_lines())


if __name__ == "__main__":
    unittest.main()
