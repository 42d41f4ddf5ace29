"""Separations, fans, z-closed sets and paths of 3-separations.

All searches are exhaustive over subsets of the ground set, which the 16
element cap keeps affordable. The connectivity function is

    lambda(X) = r(X) + r(E - X) - r(E)

so that (X, Y) is a k-separation when ``lambda(X) <= k - 1`` and both sides have
at least k elements, and an exact one when equality holds.
"""

import logging
from itertools import combinations

from mfrag import Error
from mfrag.constants import CONTRACTION, DELETION, RIM, SPOKE, FAN_TYPE_I, FAN_TYPE_II
from mfrag.graph import components
from mfrag.matroid import EmptyGroundSet, popcount, set_key, submasks

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

logger = logging.getLogger(__name__)


#  Exceptions
class ConnectivityException(Error):
    """Base class for connectivity exceptions."""

    pass


class DegenerateSide(ConnectivityException):
    def __str__(self):
        return "A side of a separation must be neither empty nor the ground set"


class Not3Connected(ConnectivityException):
    def __init__(self, matroid):
        self.matroid = matroid

    def __str__(self):
        return "%r is not 3-connected" % self.matroid


class NoVerticalSeparation(ConnectivityException):
    def __init__(self, z):
        self.z = z

    def __str__(self):
        return "No z-closed vertical 3-separation through %s" % self.z


class NotAFan(ConnectivityException):
    def __init__(self, ordering):
        self.ordering = tuple(ordering)

    def __str__(self):
        return "(%s) is not a fan" % ",".join(self.ordering)


class HypothesisFailed(ConnectivityException):
    def __init__(self, z):
        self.z = z

    def __str__(self):
        return "No path of 3-separations isolates %s" % self.z


#  Connectivity function
def _lam(matroid, mask):
    return (
        matroid.rank_mask(mask)
        + matroid.rank_mask(matroid.full_mask & ~mask)
        - matroid.rank()
    )


def lambda_value(matroid, labels):
    """
    The connectivity function of a proper non-empty subset.

    :raises DegenerateSide: for the empty set or the whole ground set.
    """
    mask = matroid.mask(labels)
    if mask == 0 or mask == matroid.full_mask:
        raise DegenerateSide()
    return _lam(matroid, mask)


class SeparationRecord(object):
    """
    A separation (X, Y) or a partition (X, {z}, Y).

    With a middle element z the recorded ``lambda_value`` is the larger of
    lambda(X) and lambda(X u z), and the separation is vertical when both
    (X u z, Y) and (X, Y u z) are vertical and z lies in cl(X) and cl(Y).
    """

    def __init__(self, matroid, side_x, side_y, z=None, k=3):
        self.matroid = matroid
        self.k = k
        self.z = z
        x = matroid.mask(side_x)
        y = matroid.mask(side_y)
        zm = matroid.mask(z) if z is not None else 0
        if x & y or x & zm or y & zm or (x | y | zm) != matroid.full_mask:
            raise ConnectivityException("Sides do not partition the ground set")
        if not x or not y:
            raise DegenerateSide()
        self._x = x
        self._y = y
        self.side_x = matroid.labels(x)
        self.side_y = matroid.labels(y)

        if z is None:
            self.lambda_value = _lam(matroid, x)
            self.vertical = min(matroid.rank_mask(x), matroid.rank_mask(y)) >= k
            self.z_closed_Y = False
        else:
            self.lambda_value = max(_lam(matroid, x), _lam(matroid, x | zm))
            rx = matroid.rank_mask(x)
            ry = matroid.rank_mask(y)
            self.vertical = (
                min(rx, ry) >= k
                and matroid.rank_mask(x | zm) == rx
                and matroid.rank_mask(y | zm) == ry
            )
            self.z_closed_Y = _z_closed_mask(matroid, zm, y)
        self.exact = self.lambda_value == k - 1
        self.guts = matroid.labels(
            matroid.closure_mask(x) & matroid.closure_mask(y)
        )
        self.coguts = matroid.labels(
            matroid.coclosure_mask(x) & matroid.coclosure_mask(y)
        )

    def to_dict(self):
        m = self.matroid
        return {
            "X": list(m.ordered(self._x)),
            "z": self.z,
            "Y": list(m.ordered(self._y)),
            "lambda": self.lambda_value,
            "exact": self.exact,
            "vertical": self.vertical,
            "z_closed_Y": self.z_closed_Y,
            "guts": list(m.ordered(m.mask(self.guts))),
            "coguts": list(m.ordered(m.mask(self.coguts))),
        }

    def __repr__(self):
        m = self.matroid
        if self.z is None:
            return "<SeparationRecord: (%s | %s) lambda=%d>" % (
                ",".join(m.ordered(self._x)),
                ",".join(m.ordered(self._y)),
                self.lambda_value,
            )
        return "<SeparationRecord: (%s | %s | %s) lambda=%d>" % (
            ",".join(m.ordered(self._x)),
            self.z,
            ",".join(m.ordered(self._y)),
            self.lambda_value,
        )


def _unordered_masks(matroid, within):
    """Splits of ``within`` into two non-empty parts, each listed once with the
    smaller part (by size, then positions) first."""
    for x in submasks(within):
        y = within & ~x
        if x and y and set_key(x) < set_key(y):
            yield x, y


def separations(matroid, k, min_side=None):
    """
    All k-separations, each unordered partition once.

    :param k: 1, 2 or 3.
    :param min_side: Smallest allowed side, ``k`` by default.
    """
    if min_side is None:
        min_side = k
    found = []
    for x, y in _unordered_masks(matroid, matroid.full_mask):
        if popcount(x) < min_side or popcount(y) < min_side:
            continue
        if _lam(matroid, x) <= k - 1:
            found.append(x)
    found.sort(key=set_key)
    return [
        SeparationRecord(
            matroid, matroid.labels(x), matroid.labels(matroid.full_mask & ~x), k=k
        )
        for x in found
    ]


def is_connected(matroid):
    return len(components(matroid)) == 1


def _has_2separation(matroid):
    # sides avoiding the first element cover every unordered partition once
    full = matroid.full_mask
    n = matroid.size
    for x in range(2, full, 2):
        size = popcount(x)
        if 2 <= size <= n - 2 and _lam(matroid, x) <= 1:
            return True
    return False


def is_3connected(matroid):
    """Whether the matroid has neither a 1- nor a 2-separation."""
    return is_connected(matroid) and not _has_2separation(matroid)


def _require_3connected(matroid):
    if not is_3connected(matroid):
        raise Not3Connected(matroid)


#  Vertical 3-separations
def vertical_3seps_through(matroid, z):
    """
    The vertical 3-separations (X, {z}, Y), each unordered pair of sides once.

    :raises Not3Connected: unless the matroid is 3-connected.
    """
    _require_3connected(matroid)
    zm = matroid.mask(z)
    rest = matroid.full_mask & ~zm
    found = []
    for x, y in _unordered_masks(matroid, rest):
        if _lam(matroid, x) > 2 or _lam(matroid, x | zm) > 2:
            continue
        rx = matroid.rank_mask(x)
        ry = matroid.rank_mask(y)
        if min(rx, ry) < 3:
            continue
        if matroid.rank_mask(x | zm) != rx or matroid.rank_mask(y | zm) != ry:
            continue
        found.append((x, y))
    found.sort(key=lambda pair: set_key(pair[0]))
    return [
        SeparationRecord(matroid, matroid.labels(x), matroid.labels(y), z=z)
        for x, y in found
    ]


def cl_or_clstar_membership(matroid, labels, e):
    """
    Whether ``e`` lies in the closure and in the coclosure of X.

    :return: A dict with keys ``in_cl`` and ``in_clstar``.
    """
    x = matroid.mask(labels)
    em = matroid.mask(e)
    if x & em:
        raise ConnectivityException("%s lies in the given set" % e)
    return {
        "in_cl": matroid.rank_mask(x | em) == matroid.rank_mask(x),
        "in_clstar": matroid.corank_mask(x | em) == matroid.corank_mask(x),
    }


#  Full closure and z-closed sets
def _fcl_mask(matroid, mask):
    while True:
        grown = matroid.coclosure_mask(matroid.closure_mask(mask))
        if grown == mask:
            return mask
        mask = grown


def fcl(matroid, labels):
    """The full closure: the smallest set containing X that is closed and coclosed."""
    return matroid.labels(_fcl_mask(matroid, matroid.mask(labels)))


def _z_closed_mask(matroid, zm, y):
    if y & zm:
        return False
    return matroid.coclosure_mask(y) == y and matroid.closure_mask(y) & ~zm == y


def is_z_closed(matroid, z, labels):
    """Whether Y = cl*(Y) and Y = cl(Y) - {z}."""
    return _z_closed_mask(matroid, matroid.mask(z), matroid.mask(labels))


def _grow_z_closed(matroid, contracted, y):
    grown = fcl(contracted, matroid.labels(y))
    return matroid.mask(grown)


def z_closed_separation(matroid, z, minor_ground=None):
    """
    A vertical 3-separation (X, {z}, Y) with Y z-closed and meeting the
    minor's ground set in at most one element.

    Candidates are the vertical 3-separations through z in both orientations
    whose Y side meets ``minor_ground`` at most once, smallest Y first; each Y
    is replaced by its full closure in M/z.

    :param minor_ground: Labels of E(N), or None.
    :raises NoVerticalSeparation: when no candidate survives.
    """
    zm = matroid.mask(z)
    hint = matroid.mask([e for e in (minor_ground or ()) if e in matroid])
    candidates = []
    for record in vertical_3seps_through(matroid, z):
        for y in (record._x, record._y):
            if popcount(y & hint) <= 1:
                candidates.append(y)
    candidates.sort(key=set_key)
    rest = matroid.full_mask & ~zm
    contracted = matroid.contract(z)
    for y in candidates:
        grown = _grow_z_closed(matroid, contracted, y)
        x = rest & ~grown
        if not x or popcount(grown & hint) > 1:
            continue
        if not _z_closed_mask(matroid, zm, grown):
            continue
        record = SeparationRecord(
            matroid, matroid.labels(x), matroid.labels(grown), z=z
        )
        if record.vertical and record.lambda_value <= 2:
            logger.debug("z-closed side for %s: %r", z, record)
            return record
    raise NoVerticalSeparation(z)


#  Fans
def _fan_start(matroid, ordering):
    """Whether the fan starts with a triangle; raises NotAFan otherwise."""
    if len(ordering) < 3 or len(set(ordering)) != len(ordering):
        raise NotAFan(ordering)
    triangles = matroid.circuit_masks()
    triads = matroid.cocircuit_masks()
    masks = [matroid.mask(e) for e in ordering]
    first = masks[0] | masks[1] | masks[2]
    if popcount(first) == 3 and first in triangles:
        expected = True
    elif popcount(first) == 3 and first in triads:
        expected = False
    else:
        raise NotAFan(ordering)
    start = expected
    for i in range(len(masks) - 2):
        triple = masks[i] | masks[i + 1] | masks[i + 2]
        if triple not in (triangles if expected else triads):
            raise NotAFan(ordering)
        expected = not expected
    return start


def is_fan(matroid, ordering):
    try:
        _fan_start(matroid, list(ordering))
    except NotAFan:
        return False
    return True


class FanRecord(object):
    """A fan (f1, ..., fk) whose consecutive triples alternate between
    triangles and triads."""

    def __init__(self, matroid, ordering, maximal=False):
        self.matroid = matroid
        self.ordering = tuple(ordering)
        self.starts_with_triangle = _fan_start(matroid, self.ordering)
        self.maximal = maximal

    @property
    def ends_with_triangle(self):
        return self.starts_with_triangle == (len(self.ordering) % 2 == 1)

    def __len__(self):
        return len(self.ordering)

    def to_dict(self):
        return {
            "ordering": list(self.ordering),
            "starts_with_triangle": self.starts_with_triangle,
            "maximal": self.maximal,
        }

    def __repr__(self):
        return "<FanRecord: (%s)>" % ",".join(self.ordering)


def fans(matroid):
    """
    The maximal fans, each ordering reported once up to reversal with the
    end earlier in the ground order first.
    """
    triangles = set(matroid.triangle_masks())
    triads = set(matroid.triad_masks())
    n = matroid.size
    sequences = []

    def extend(seq, used, expect_triangle):
        sequences.append(tuple(seq))
        family = triangles if expect_triangle else triads
        tail = (1 << seq[-2]) | (1 << seq[-1])
        for d in range(n):
            if used >> d & 1:
                continue
            if tail | (1 << d) in family:
                seq.append(d)
                extend(seq, used | 1 << d, not expect_triangle)
                seq.pop()

    for family, is_triangle in ((triangles, True), (triads, False)):
        for mask in family:
            members = [i for i in range(n) if mask >> i & 1]
            for a, b, c in _orderings(members):
                extend([a, b, c], mask, not is_triangle)

    sets = {}
    for seq in sequences:
        sets.setdefault(sum(1 << i for i in seq), []).append(seq)
    maximal_sets = [
        s for s in sets if not any(s != t and s & t == s for t in sets)
    ]
    canonical = set()
    for s in maximal_sets:
        for seq in sets[s]:
            canonical.add(seq if seq[0] < seq[-1] else tuple(reversed(seq)))
    ordered = sorted(canonical, key=lambda seq: (len(seq), seq))
    return [
        FanRecord(matroid, [matroid.ground[i] for i in seq], maximal=True)
        for seq in ordered
    ]


def _orderings(members):
    a, b, c = members
    return [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)]


def fan_type(fan, basis):
    """
    Type I or II of a 4-element fan relative to a basis.

    The fan is read from its triangle end; the type is I when the basis meets
    it in {f1, f3} and II when in {f1, f3, f4}.

    :return: ``"I"``, ``"II"`` or None.
    """
    if len(fan.ordering) != 4:
        return None
    ordering = fan.ordering if fan.starts_with_triangle else fan.ordering[::-1]
    met = set(basis) & set(ordering)
    f1, _, f3, f4 = ordering
    if met == {f1, f3}:
        return FAN_TYPE_I
    if met == {f1, f3, f4}:
        return FAN_TYPE_II
    return None


def fan_end_kind(matroid, fan, f):
    """
    Whether an end of a fan with at least four elements is a spoke (it lies
    in the end triangle) or a rim element (it lies in the end triad).
    """
    if len(fan.ordering) < 4:
        raise NotAFan(fan.ordering)
    if f == fan.ordering[0]:
        triangle_end = fan.starts_with_triangle
    elif f == fan.ordering[-1]:
        triangle_end = fan.ends_with_triangle
    else:
        raise ConnectivityException("%s is not an end of %r" % (f, fan))
    return SPOKE if triangle_end else RIM


#  Paths of 3-separations
class Path3Sep(object):
    """An ordered partition (P1, ..., Pn) of the ground set whose proper
    prefixes are 3-separating."""

    def __init__(self, matroid, parts):
        self.matroid = matroid
        self.parts = [frozenset(p) for p in parts]

    def prefix_lambdas(self):
        values = []
        mask = 0
        for part in self.parts[:-1]:
            mask |= self.matroid.mask(part)
            values.append(_lam(self.matroid, mask))
        return values

    def to_dict(self):
        m = self.matroid
        return {"parts": [list(m.ordered(m.mask(p))) for p in self.parts]}

    def __repr__(self):
        return "<Path3Sep: %s>" % " | ".join(
            ",".join(self.matroid.ordered(self.matroid.mask(p))) for p in self.parts
        )


def _isolating_split(matroid, a, z, zm):
    """The first Z' inside ``z`` (without zm) with lambda(A u Z') and
    lambda(A u Z' u zm) both at most 2."""
    others = z & ~zm
    for sub in sorted(submasks(others), key=set_key):
        if _lam(matroid, a | sub) <= 2 and _lam(matroid, a | sub | zm) <= 2:
            return sub
    return None


def path_of_3seps(matroid, side_a, middle, side_b):
    """
    Orders the elements of Z so that (A, z1, ..., zn, B) is a path of
    3-separations.

    Each z needs some Z' inside Z - z with A u Z' and A u Z' u z both
    3-separating. The smallest z is placed after the elements of its Z', which
    are ordered recursively, and the rest follow recursively.

    :raises HypothesisFailed: naming an element that cannot be placed.
    """
    a = matroid.mask(side_a)
    z = matroid.mask(middle)
    b = matroid.mask(side_b)
    if a & z or a & b or z & b or (a | z | b) != matroid.full_mask:
        raise ConnectivityException("Sides do not partition the ground set")
    for i in range(matroid.size):
        if z >> i & 1 and _isolating_split(matroid, a, z, 1 << i) is None:
            raise HypothesisFailed(matroid.ground[i])

    def order(left, inner):
        if not inner:
            return []
        first = (inner & -inner).bit_length() - 1
        zm = 1 << first
        sub = _isolating_split(matroid, left, inner, zm)
        if sub is None:
            raise HypothesisFailed(matroid.ground[first])
        return (
            order(left, sub)
            + [first]
            + order(left | sub | zm, inner & ~sub & ~zm)
        )

    sequence = order(a, z)
    prefix = a
    for i in sequence:
        prefix |= 1 << i
        if prefix != matroid.full_mask and _lam(matroid, prefix) > 2:
            raise HypothesisFailed(matroid.ground[i])
    parts = (
        [matroid.labels(a)]
        + [frozenset([matroid.ground[i]]) for i in sequence]
        + [matroid.labels(b)]
    )
    return Path3Sep(matroid, parts)


#  Detachable pairs
def _removal_is_3connected(matroid, pair, operation):
    try:
        if operation == DELETION:
            minor = matroid.delete(pair)
        else:
            minor = matroid.contract(pair)
    except EmptyGroundSet:
        return False
    return is_3connected(minor)


def detachable_pairs(matroid):
    """
    Pairs {a, b} for which M\\a,b or M/a,b is 3-connected.

    :return: A list of ``(a, b, tags)`` with tags among ``"delete"`` and
        ``"contract"``.
    """
    _require_3connected(matroid)
    result = []
    for pair in combinations(matroid.ground, 2):
        tags = tuple(
            op for op in (DELETION, CONTRACTION)
            if _removal_is_3connected(matroid, pair, op)
        )
        if tags:
            result.append((pair[0], pair[1], tags))
    return result
