"""Representations over small finite fields, up to row and column scaling."""

import logging
from itertools import combinations, product

from mfrag.constants import MAX_ENTRIES
from mfrag.exminor import ExminorException
from mfrag.graph import spanning_forest_edges, support_graph
from mfrag.matroid import set_key
from mfrag.minors import NoNMinor, has_minor
from mfrag.partialfield import PartialField, UnknownField, pf_make
from mfrag.pmatrix import PMatrix, scaling_equivalent

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

logger = logging.getLogger(__name__)


#  Exceptions
class TooLarge(ExminorException):
    def __init__(self, rank, corank):
        self.rank = rank
        self.corank = corank

    def __str__(self):
        return "A %dx%d matrix exceeds the enumeration cap of %d entries" % (
            self.rank,
            self.corank,
            MAX_ENTRIES,
        )


class NotRepresentable(ExminorException):
    def __init__(self, matroid, field):
        self.matroid = matroid
        self.field = field

    def __str__(self):
        return "%r is not representable over %s" % (self.matroid, self.field.name)


def _field(field):
    pf = field if isinstance(field, PartialField) else pf_make(field)
    if not pf.finite:
        raise UnknownField(pf.name)
    return pf


def _first_basis(matroid):
    return matroid.ordered(min(matroid.basis_masks, key=set_key))


def enumerate_representations(matroid, field, basis=None):
    """
    All B x (E - B) matrices A over a finite field with M[I|A] = M, one per
    scaling class.

    Entries on a spanning forest of the support graph are fixed to 1; every
    other support entry ranges over the non-zero field elements.

    :param field: A finite partial field or its name.
    :param basis: The basis B labeling the rows; the first basis in sorted
        order when omitted.
    :raises TooLarge: when the matrix has more than ``MAX_ENTRIES`` entries.
    :raises NotRepresentable: when no matrix qualifies.
    """
    pf = _field(field)
    if basis is None:
        basis = _first_basis(matroid)
    b = matroid.mask(basis)
    rows = matroid.ordered(b)
    cols = matroid.ordered(matroid.full_mask & ~b)
    if len(rows) * len(cols) > MAX_ENTRIES:
        raise TooLarge(len(rows), len(cols))

    bases = matroid.basis_masks
    support = [
        (x, y)
        for x in rows
        for y in cols
        if (b & ~matroid.mask(x)) | matroid.mask(y) in bases
    ]
    pattern = PMatrix(
        pf, rows, cols, [[1 if (x, y) in support else 0 for y in cols] for x in rows]
    )
    tree = set()
    row_set = set(rows)
    for _, edges in spanning_forest_edges(support_graph(pattern), cols):
        for u, v in edges:
            tree.add((u, v) if u in row_set else (v, u))
    free = [entry for entry in support if entry not in tree]
    units = [v for v in pf.elements() if not v.is_zero()]
    logger.debug(
        "Enumerating %d free entries over %s for %r", len(free), pf.name, matroid
    )

    found = []
    for values in product(units, repeat=len(free)):
        assigned = dict(zip(free, values))
        entries = [
            [
                assigned.get((x, y), pf.one()) if (x, y) in support else pf.zero()
                for y in cols
            ]
            for x in rows
        ]
        candidate = PMatrix(pf, rows, cols, entries)
        if candidate.matroid(check=False) != matroid:
            continue
        if any(scaling_equivalent(candidate, other) is not None for other in found):
            continue
        found.append(candidate)
    if not found:
        raise NotRepresentable(matroid, pf)
    return found


def _minor_basis(matroid, recipe):
    contract = matroid.mask(recipe.contract)
    delete = matroid.mask(recipe.delete)
    for b in sorted(matroid.basis_masks, key=set_key):
        if b & contract == contract and not b & delete:
            return matroid.ordered(b)
    return None


def stabilizer_check_finite(minor, matroid, field):
    """
    Whether N stabilizes M over a finite field: representations of M that
    agree up to scaling on a fixed N-minor agree up to scaling everywhere.

    The N-minor is the first one found; the vacuous case where M is not
    representable counts as stabilized.

    :raises NoNMinor: when M has no N-minor.
    :raises TooLarge: as :py:func:`enumerate_representations`.
    """
    pf = _field(field)
    recipe = has_minor(matroid, minor)
    if recipe is None:
        raise NoNMinor(matroid, minor)
    basis = _minor_basis(matroid, recipe)
    removed = set(recipe.contract) | set(recipe.delete)
    labels = [e for e in matroid.ground if e not in removed]
    try:
        representations = enumerate_representations(matroid, pf, basis=basis)
    except NotRepresentable:
        return True
    for first, second in combinations(representations, 2):
        if (
            scaling_equivalent(first.submatrix(labels), second.submatrix(labels))
            is not None
        ):
            logger.info(
                "Inequivalent representations of %r agree on {%s}",
                matroid,
                ",".join(labels),
            )
            return False
    return True
