"""Named matroids with fixed labels.

Names:

* ``U(m,n)``, ``Umn`` or ``Um,n``: the uniform matroid on ``1`` .. ``n``.
* ``wheel(r)`` and ``whirl(r)``: spokes and rim elements alternate as
  ``s1, r1, s2, r2, ...`` where ``s_i`` joins the hub to rim vertex ``i`` and
  ``r_i`` joins rim vertices ``i`` and ``i+1``.
* ``MK4`` (or ``K4``): edges ``12`` .. ``34`` of the complete graph on 4 vertices.
* ``K23``: edge ``ij`` joins vertex ``i`` of the 2-side to vertex ``j`` of the
  3-side.
* ``F7``, ``F7minus``, ``AG23e`` and ``P8``.

A trailing ``*`` on any name gives the dual.
"""

import logging
import re
from itertools import combinations

from mfrag import Error
from mfrag.constants import MAX_GROUND
from mfrag.graph import graphic_matroid
from mfrag.matroid import Matroid, matroid_from_bases

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

logger = logging.getLogger(__name__)

FANO_LINES = ("123", "145", "167", "246", "257", "347", "356")

P8_MATRIX = (
    (0, 1, 1, -1),
    (1, 0, 1, 1),
    (1, 1, 0, 1),
    (-1, 1, 1, 0),
)

NEAR_REGULAR_EXCLUDED = (
    "U(2,5)",
    "U(3,5)",
    "F7",
    "F7*",
    "F7minus",
    "F7minus*",
    "AG23e",
    "AG23e*",
    "P8",
)
"""Catalog names of the excluded minors for near-regular matroids that the
catalog carries directly; the remaining one is the Delta-Y exchange of
AG23e."""

_UNIFORM = re.compile(r"^U(?:\((\d+),(\d+)\)|(\d+),(\d+)|(\d)(\d+))$")
_WHEEL = re.compile(r"^(wheel|whirl)\((\d+)\)$")


class UnknownName(Error):
    def __init__(self, name):
        self.name = name

    def __str__(self):
        return "No catalog matroid named %r" % self.name


def _combos(n, k):
    return [sum(1 << i for i in combo) for combo in combinations(range(n), k)]


def uniform(m, n):
    if not 0 <= m <= n or n < 1 or n > MAX_GROUND:
        raise UnknownName("U(%d,%d)" % (m, n))
    labels = [str(i) for i in range(1, n + 1)]
    return Matroid(labels, _combos(n, m), name="U(%d,%d)" % (m, n))


def _wheel_edges(r):
    edges = []
    for i in range(1, r + 1):
        edges.append(("h", "v%d" % i, "s%d" % i))
        edges.append(("v%d" % i, "v%d" % (i % r + 1), "r%d" % i))
    return edges


def wheel(r):
    if r < 2 or 2 * r > MAX_GROUND:
        raise UnknownName("wheel(%d)" % r)
    return graphic_matroid(_wheel_edges(r), name="wheel(%d)" % r)


def whirl(r):
    """The wheel with its rim relaxed from a circuit-hyperplane to a basis."""
    if r < 2 or 2 * r > MAX_GROUND:
        raise UnknownName("whirl(%d)" % r)
    w = wheel(r)
    rim = w.mask(["r%d" % i for i in range(1, r + 1)])
    return Matroid(w.ground, w.basis_masks | {rim}, name="whirl(%d)" % r)


def mk4():
    edges = [(u, v, "%d%d" % (u, v)) for u, v in combinations(range(1, 5), 2)]
    return graphic_matroid(edges, name="MK4")


def k23():
    edges = [("a%d" % i, "b%d" % j, "%d%d" % (i, j)) for i in (1, 2) for j in (1, 2, 3)]
    return graphic_matroid(edges, name="K23")


def _from_nonbases(name, ground, rank, nonbases):
    nonbases = {frozenset(s) for s in nonbases}
    bases = [
        combo
        for combo in combinations(ground, rank)
        if frozenset(combo) not in nonbases
    ]
    return matroid_from_bases(ground, bases, name=name)


def fano():
    return _from_nonbases("F7", [str(i) for i in range(1, 8)], 3, FANO_LINES)


def non_fano():
    lines = [line for line in FANO_LINES if line != "356"]
    return _from_nonbases("F7minus", [str(i) for i in range(1, 8)], 3, lines)


def ag23e():
    """AG(2,3) with the point 22 deleted; points are coordinate pairs ``ij``."""
    points = [(i, j) for i in range(3) for j in range(3) if (i, j) != (2, 2)]
    lines = [
        ["%d%d" % p for p in triple]
        for triple in combinations(points, 3)
        if sum(p[0] for p in triple) % 3 == 0 and sum(p[1] for p in triple) % 3 == 0
    ]
    return _from_nonbases("AG23e", ["%d%d" % p for p in points], 3, lines)


def p8():
    from mfrag.partialfield import pf_make
    from mfrag.pmatrix import PMatrix

    matrix = PMatrix(pf_make("GF(3)"), "1234", "5678", P8_MATRIX)
    result = matrix.matroid()
    result.name = "P8"
    return result


_FIXED = {
    "MK4": mk4,
    "K4": mk4,
    "K23": k23,
    "F7": fano,
    "F7minus": non_fano,
    "AG23e": ag23e,
    "P8": p8,
}


def catalog(name):
    """
    Looks up a named matroid.

    :param name: A catalog name, optionally followed by ``*``.
    :raises UnknownName: for anything else.
    """
    text = name.strip()
    if text.endswith("*"):
        return catalog(text[:-1]).dual()
    if text in _FIXED:
        return _FIXED[text]()
    match = _UNIFORM.match(text)
    if match:
        groups = [g for g in match.groups() if g is not None]
        return uniform(int(groups[0]), int(groups[1]))
    match = _WHEEL.match(text)
    if match:
        factory = wheel if match.group(1) == "wheel" else whirl
        return factory(int(match.group(2)))
    raise UnknownName(name)


def catalog_names():
    """Representative names for ``catalog list``."""
    names = ["U(2,4)", "U(2,5)", "U(3,5)", "U(3,6)", "U(3,7)"]
    names += ["wheel(%d)" % r for r in range(2, 6)]
    names += ["whirl(%d)" % r for r in range(2, 6)]
    names += ["MK4", "K23", "F7", "F7*", "F7minus", "F7minus*", "AG23e", "AG23e*", "P8"]
    return names


def is_wheel_or_whirl(matroid):
    """Whether the matroid is isomorphic to a wheel or a whirl of rank at least 2."""
    from mfrag.isomorphism import is_isomorphic

    r = matroid.rank()
    if matroid.size != 2 * r or r < 2:
        return False
    return is_isomorphic(matroid, wheel(r)) or is_isomorphic(matroid, whirl(r))


def is_binary(matroid):
    """Whether the matroid has no U(2,4)-minor."""
    from mfrag.minors import has_minor

    if matroid.rank() < 2 or matroid.corank() < 2:
        return True
    return has_minor(matroid, uniform(2, 4)) is None
