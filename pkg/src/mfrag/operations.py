"""Constructions combining matroids: 2-sums, generalized parallel connections
and the Delta-Y exchange."""

import logging

from mfrag.graph import graphic_matroid
from mfrag.matroid import Matroid, MatroidException, bits, popcount, submasks

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

logger = logging.getLogger(__name__)


#  Exceptions
class BadBasepoint(MatroidException):
    def __init__(self, basepoint, reason):
        self.basepoint = basepoint
        self.reason = reason

    def __str__(self):
        return "Invalid basepoint %s: %s" % (self.basepoint, self.reason)


class LabelCollision(MatroidException):
    def __init__(self, labels):
        self.labels = sorted(labels)

    def __str__(self):
        return "Labels used on both sides: %s" % ",".join(self.labels)


class NotATriangle(MatroidException):
    def __init__(self, labels):
        self.labels = sorted(labels)

    def __str__(self):
        return "{%s} is not a triangle" % ",".join(self.labels)


class NotATriad(MatroidException):
    def __init__(self, labels):
        self.labels = sorted(labels)

    def __str__(self):
        return "{%s} is not a triad" % ",".join(self.labels)


class TriangleNotCoindependent(MatroidException):
    def __init__(self, labels):
        self.labels = sorted(labels)

    def __str__(self):
        return "Triangle {%s} is not coindependent" % ",".join(self.labels)


def two_sum(first, second, basepoint):
    """
    The 2-sum of two matroids along a shared basepoint.

    :param first: Matroid containing ``basepoint``.
    :param second: Matroid containing ``basepoint``; its other labels must be
        disjoint from those of ``first``.
    :param basepoint: Label of the basepoint, which is neither a loop nor a
        coloop in either matroid.
    """
    for m in (first, second):
        if basepoint not in m:
            raise BadBasepoint(basepoint, "missing from %r" % m)
        if basepoint in m.loops():
            raise BadBasepoint(basepoint, "a loop of %r" % m)
        if basepoint in m.coloops():
            raise BadBasepoint(basepoint, "a coloop of %r" % m)
    left = [e for e in first.ground if e != basepoint]
    right = [e for e in second.ground if e != basepoint]
    shared = set(left) & set(right)
    if shared:
        raise LabelCollision(shared)
    p1 = first.mask(basepoint)
    p2 = second.mask(basepoint)
    left_masks = [first.mask(e) for e in left]
    right_masks = [second.mask(e) for e in right]
    nl = len(left)

    def rank_of(mask):
        x1 = 0
        x2 = 0
        for i in bits(mask):
            if i < nl:
                x1 |= left_masks[i]
            else:
                x2 |= right_masks[i - nl]
        r1 = first.rank_mask(x1)
        r2 = second.rank_mask(x2)
        if first.rank_mask(x1 | p1) == r1 and second.rank_mask(x2 | p2) == r2:
            return r1 + r2 - 1
        return r1 + r2

    return Matroid.from_rank_function(left + right, rank_of)


def two_sum_part(matroid, side, basepoint="p"):
    """
    The part of the 1- or 2-sum decomposition induced by a separation.

    For an exact 2-separation (X, Y) this is the matroid M_X on X plus a
    basepoint with ``M = M_X (+)_2 M_Y``; for a 1-separation it is M|X.

    :param matroid: The matroid M.
    :param side: The label set X.
    :param basepoint: Label of the adjoined basepoint.
    """
    x = matroid.mask(side)
    y = matroid.full_mask & ~x
    lam = matroid.rank_mask(x) + matroid.rank_mask(y) - matroid.rank()
    if lam == 0:
        return matroid.restrict(matroid.ordered(x))
    if lam != 1:
        raise MatroidException(
            "{%s} is not 2-separating" % ",".join(matroid.ordered(x))
        )
    if basepoint in matroid:
        raise LabelCollision([basepoint])
    labels = list(matroid.ordered(x))
    masks = [matroid.mask(e) for e in labels]
    ry = matroid.rank_mask(y)
    p = len(labels)

    def rank_of(mask):
        s = 0
        for i in bits(mask):
            if i < p:
                s |= masks[i]
        if mask >> p & 1:
            return matroid.rank_mask(s | y) - ry + 1
        return matroid.rank_mask(s)

    return Matroid.from_rank_function(labels + [basepoint], rank_of)


def parallel_connection(first, second, triangle):
    """
    Generalized parallel connection across a common triangle.

    The triangle must carry the same labels in both matroids and be a
    modular flat of ``first``; the result has ground set ``E1 u E2`` with the
    rank function ``min over Z of r1(X1 u Z) + r2(X2 u Z) - r(Z u (X n T))``,
    Z ranging over subsets of the triangle.
    """
    t_labels = list(triangle)
    for m in (first, second):
        if not m.is_circuit(t_labels):
            raise NotATriangle(t_labels)
    shared = (set(first.ground) & set(second.ground)) - set(t_labels)
    if shared:
        raise LabelCollision(shared)
    ground = list(first.ground) + [e for e in second.ground if e not in t_labels]
    index = {e: i for i, e in enumerate(ground)}
    t_mask = sum(1 << index[e] for e in t_labels)
    to_first = [first.mask(e) if e in first else 0 for e in ground]
    to_second = [second.mask(e) if e in second else 0 for e in ground]

    def project(mask, table):
        result = 0
        for i in bits(mask):
            result |= table[i]
        return result

    def rank_of(mask):
        best = None
        for z in submasks(t_mask):
            y = mask | z
            value = (
                first.rank_mask(project(y, to_first))
                + second.rank_mask(project(y, to_second))
                - min(popcount(y & t_mask), 2)
            )
            if best is None or value < best:
                best = value
        return best

    return Matroid.from_rank_function(ground, rank_of)


def _k4(triangle):
    """M(K4) with a triangle labeled by ``triangle`` and star labels for the
    opposite edges, star i being opposite triangle edge i."""
    t1, t2, t3 = triangle
    stars = ["\x00star%d" % i for i in range(3)]
    edges = [
        ("u", "v", t1),
        ("v", "w", t2),
        ("w", "u", t3),
        ("c", "w", stars[0]),
        ("c", "u", stars[1]),
        ("c", "v", stars[2]),
    ]
    return graphic_matroid(edges), stars


def delta_y(matroid, triangle, require_coindependent=False):
    """
    Delta-Y exchange: glue M(K4) along the triangle T by generalized parallel
    connection and delete T. Each new element takes the label of the
    triangle element it is opposite to in K4, so the ground set is unchanged.

    :param matroid: The matroid M.
    :param triangle: Three labels forming a triangle of M.
    :param require_coindependent: Raise :py:class:`TriangleNotCoindependent`
        when T contains a cocircuit.
    """
    t_labels = [e for e in matroid.ground if e in set(triangle)]
    t_mask = matroid.mask(triangle)
    if popcount(t_mask) != 3 or t_mask not in matroid.circuit_masks():
        raise NotATriangle(list(triangle))
    if require_coindependent and matroid.corank_mask(t_mask) < 3:
        raise TriangleNotCoindependent(t_labels)
    k4, stars = _k4(t_labels)
    star_of = dict(zip(t_labels, stars))
    k4_t = [k4.mask(t) for t in t_labels]
    m_t = [matroid.mask(t) for t in t_labels]
    ground = matroid.ground
    index_old = [matroid.mask(e) if e not in star_of else 0 for e in ground]
    index_new = [k4.mask(star_of[e]) if e in star_of else 0 for e in ground]

    def rank_of(mask):
        x_old = 0
        x_new = 0
        for i in bits(mask):
            x_old |= index_old[i]
            x_new |= index_new[i]
        best = None
        for z in range(8):
            z_k4 = x_new
            z_m = x_old
            for j in range(3):
                if z >> j & 1:
                    z_k4 |= k4_t[j]
                    z_m |= m_t[j]
            value = k4.rank_mask(z_k4) + matroid.rank_mask(z_m) - min(popcount(z), 2)
            if best is None or value < best:
                best = value
        return best

    result = Matroid.from_rank_function(ground, rank_of)
    logger.debug("Delta-Y on {%s} of %r gives %r", ",".join(t_labels), matroid, result)
    return result


def wye_delta(matroid, triad, require_independent=False):
    """
    Y-Delta exchange, the dual of :py:func:`delta_y`.

    :param triad: Three labels forming a triad of M.
    """
    t_mask = matroid.mask(triad)
    if popcount(t_mask) != 3 or t_mask not in matroid.cocircuit_masks():
        raise NotATriad(list(triad))
    return delta_y(
        matroid.dual(), triad, require_coindependent=require_independent
    ).dual()
