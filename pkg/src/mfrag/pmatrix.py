"""Row and column labeled matrices over a partial field."""

import logging
from itertools import combinations

from mfrag import Error
from mfrag.constants import MAX_GROUND
from mfrag.graph import support_graph, spanning_forest_edges
from mfrag.matroid import Matroid, UnknownLabel
from mfrag.partialfield import NotInvertible
from mfrag.serializers import Serializable

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

logger = logging.getLogger(__name__)


#  Exceptions
class PMatrixException(Error):
    """Base class for P-matrix exceptions."""

    pass


class NonSquareSelection(PMatrixException):
    def __init__(self, rows, cols):
        self.rows = rows
        self.cols = cols

    def __str__(self):
        return "Selection meets %d rows but %d columns" % (
            len(self.rows),
            len(self.cols),
        )


class ZeroPivotEntry(PMatrixException):
    def __init__(self, x, y):
        self.x = x
        self.y = y

    def __str__(self):
        return "Cannot pivot on the zero entry (%s, %s)" % (self.x, self.y)


class ZeroScaleFactor(PMatrixException):
    def __init__(self, line):
        self.line = line

    def __str__(self):
        return "Cannot scale line %s by zero" % self.line


class NotAPermutation(PMatrixException):
    def __init__(self, given, expected):
        self.given = given
        self.expected = expected

    def __str__(self):
        return "%s is not a permutation of %s" % (
            ",".join(self.given),
            ",".join(self.expected),
        )


class LabelMismatch(PMatrixException):
    def __init__(self, message):
        self.message = message

    def __str__(self):
        return self.message


class NotAPMatrix(PMatrixException):
    def __init__(self, labels, value):
        self.labels = labels
        self.value = value

    def __str__(self):
        return "Subdeterminant on {%s} is %s, which is not in the partial field" % (
            ",".join(self.labels),
            self.value,
        )


class TooManyLabels(PMatrixException):
    def __init__(self, count):
        self.count = count

    def __str__(self):
        return "Matrices are limited to %d labels, got %d" % (MAX_GROUND, self.count)


class PMatrix(Serializable):
    """An X x Y matrix over a partial field with labeled lines."""

    default_format = "pmx"

    def __init__(self, pf, rows, cols, entries):
        """
        Constructor.

        :param pf: The partial field descriptor.
        :param rows: Ordered row labels X.
        :param cols: Ordered column labels Y, disjoint from X.
        :param entries: One sequence per row; items are elements of ``pf`` or
            anything :py:meth:`PartialField.element` accepts.
        """
        self._pf = pf
        self._rows = tuple(str(x) for x in rows)
        self._cols = tuple(str(y) for y in cols)
        labels = self._rows + self._cols
        if len(labels) > MAX_GROUND:
            raise TooManyLabels(len(labels))
        if len(set(labels)) != len(labels):
            raise LabelMismatch(
                "Row and column labels must be distinct: %s" % ",".join(labels)
            )
        entries = [list(row) for row in entries]
        if len(entries) != len(self._rows) or any(
            len(row) != len(self._cols) for row in entries
        ):
            raise LabelMismatch(
                "Expected a %dx%d array of entries" % (len(self._rows), len(self._cols))
            )
        self._entries = tuple(tuple(pf.element(v) for v in row) for row in entries)
        self._row_index = {x: i for i, x in enumerate(self._rows)}
        self._col_index = {y: j for j, y in enumerate(self._cols)}
        self._dets = {}

    @property
    def pf(self):
        return self._pf

    @property
    def rows(self):
        return self._rows

    @property
    def cols(self):
        return self._cols

    @property
    def labels(self):
        return self._rows + self._cols

    @property
    def entries(self):
        return self._entries

    def entry(self, x, y):
        try:
            return self._entries[self._row_index[x]][self._col_index[y]]
        except KeyError:
            raise UnknownLabel(x if x not in self._row_index else y)

    def _split(self, labels):
        if isinstance(labels, str):
            labels = (labels,)
        labels = set(labels)
        for label in labels:
            if label not in self._row_index and label not in self._col_index:
                raise UnknownLabel(label)
        rows = [x for x in self._rows if x in labels]
        cols = [y for y in self._cols if y in labels]
        return rows, cols

    #  Determinants
    def _det(self, rmask, cmask):
        key = (rmask, cmask)
        if key in self._dets:
            return self._dets[key]
        if not rmask:
            value = self._pf.one()
        else:
            r0 = (rmask & -rmask).bit_length() - 1
            rest = rmask & ~(1 << r0)
            value = self._pf.zero()
            sign = 1
            for j in range(len(self._cols)):
                if not (cmask >> j) & 1:
                    continue
                a = self._entries[r0][j]
                if not a.is_zero():
                    term = a * self._det(rest, cmask & ~(1 << j))
                    value = value + term if sign > 0 else value - term
                sign = -sign
        self._dets[key] = value
        return value

    def subdeterminant(self, labels):
        """
        Determinant of A[Z].

        :param labels: The label set Z; it must meet as many rows as columns.
        :raises NonSquareSelection: otherwise.
        """
        rows, cols = self._split(labels)
        if len(rows) != len(cols):
            raise NonSquareSelection(rows, cols)
        rmask = sum(1 << self._row_index[x] for x in rows)
        cmask = sum(1 << self._col_index[y] for y in cols)
        return self._det(rmask, cmask)

    def square_selections(self):
        """Non-empty square selections as (rows, cols) index tuples, by size then
        lexicographically."""
        for k in range(1, min(len(self._rows), len(self._cols)) + 1):
            for rows in combinations(range(len(self._rows)), k):
                for cols in combinations(range(len(self._cols)), k):
                    yield rows, cols

    def first_violation(self):
        """
        The first selection whose determinant lies outside the partial field.

        :return: A tuple ``(labels, value)`` or None.
        """
        if self._pf.finite:
            return None
        for rows, cols in self.square_selections():
            value = self._det(sum(1 << i for i in rows), sum(1 << j for j in cols))
            if not value.is_member():
                labels = tuple(self._rows[i] for i in rows) + tuple(
                    self._cols[j] for j in cols
                )
                return labels, value
        return None

    def is_pmatrix(self):
        return self.first_violation() is None

    #  Operations
    def pivot(self, x, y):
        """
        Pivots on the entry (x, y); y takes the row position of x and x the
        column position of y.

        :raises ZeroPivotEntry: when the entry is zero.
        """
        a = self.entry(x, y)
        if a.is_zero():
            raise ZeroPivotEntry(x, y)
        inv = a.inverse()
        rows = tuple(y if u == x else u for u in self._rows)
        cols = tuple(x if v == y else v for v in self._cols)
        entries = []
        for u in rows:
            line = []
            for v in cols:
                if u == y and v == x:
                    line.append(inv)
                elif u == y:
                    line.append(inv * self.entry(x, v))
                elif v == x:
                    line.append(-(inv * self.entry(u, y)))
                else:
                    line.append(
                        self.entry(u, v) - inv * self.entry(u, y) * self.entry(x, v)
                    )
            entries.append(line)
        return PMatrix(self._pf, rows, cols, entries)

    def scale(self, line, c):
        """
        Multiplies a row or column by a unit.

        :param line: A row or column label.
        :param c: The scale factor.
        """
        c = self._pf.element(c)
        if c.is_zero():
            raise ZeroScaleFactor(line)
        if not c.is_member():
            raise NotInvertible(str(c))
        entries = [list(row) for row in self._entries]
        if line in self._row_index:
            i = self._row_index[line]
            entries[i] = [c * v for v in entries[i]]
        elif line in self._col_index:
            j = self._col_index[line]
            for row in entries:
                row[j] = c * row[j]
        else:
            raise UnknownLabel(line)
        return PMatrix(self._pf, self._rows, self._cols, entries)

    def permute(self, rows, cols):
        """
        Reorders rows and columns; labels travel with their lines.

        :param rows: The row labels in their new order.
        :param cols: The column labels in their new order.
        """
        rows = tuple(rows)
        cols = tuple(cols)
        if sorted(rows) != sorted(self._rows):
            raise NotAPermutation(rows, self._rows)
        if sorted(cols) != sorted(self._cols):
            raise NotAPermutation(cols, self._cols)
        entries = [[self.entry(x, y) for y in cols] for x in rows]
        return PMatrix(self._pf, rows, cols, entries)

    def submatrix(self, labels):
        """A[Z]: the rows and columns whose labels lie in Z."""
        rows, cols = self._split(labels)
        entries = [[self.entry(x, y) for y in cols] for x in rows]
        return PMatrix(self._pf, rows, cols, entries)

    def delete(self, labels):
        """A - Z: drops the rows and columns whose labels lie in Z."""
        rows, cols = self._split(labels)
        keep = [x for x in self._rows if x not in rows] + [
            y for y in self._cols if y not in cols
        ]
        return self.submatrix(keep)

    def support(self):
        return frozenset(
            (x, y)
            for x in self._rows
            for y in self._cols
            if not self.entry(x, y).is_zero()
        )

    def matroid(self, check=True):
        return matroid_from_pmatrix(self, check=check)

    #  Identity
    def __eq__(self, other):
        return (
            isinstance(other, PMatrix)
            and self._pf == other._pf
            and self._rows == other._rows
            and self._cols == other._cols
            and self._entries == other._entries
        )

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._pf.name, self._rows, self._cols, self._entries))

    def __repr__(self):
        return "<PMatrix %s: %dx%d>" % (self._pf.name, len(self._rows), len(self._cols))

    def __str__(self):
        lines = ["%s: %s" % (x, " ".join(str(v) for v in row)) for x, row in zip(
            self._rows, self._entries
        )]
        return "\n".join(["cols %s" % " ".join(self._cols)] + lines)


def scaling_equivalent(first, second):
    """
    Decides whether ``second`` arises from ``first`` by scaling rows and columns.

    The factors are propagated along a BFS spanning forest of the common
    support graph, each tree rooted at its first column label, and then
    checked on every entry.

    :return: A dict of per-line unit factors f with
        ``second[x][y] = f[x] * first[x][y] * f[y]``, or None.
    :raises LabelMismatch: when label sets or partial fields differ.
    """
    if first.pf != second.pf:
        raise LabelMismatch(
            "Partial fields differ: %s and %s" % (first.pf.name, second.pf.name)
        )
    if set(first.rows) != set(second.rows) or set(first.cols) != set(second.cols):
        raise LabelMismatch("Row and column label sets must coincide")
    if first.support() != second.support():
        return None

    pf = first.pf
    rows = set(first.rows)
    factors = {}
    g = support_graph(first)
    for root, edges in spanning_forest_edges(g, first.cols):
        factors[root] = pf.one()
        for parent, child in edges:
            x, y = (parent, child) if parent in rows else (child, parent)
            try:
                ratio = (first.entry(x, y) * factors[parent]).inverse()
            except NotInvertible:
                return None
            factors[child] = second.entry(x, y) * ratio
    for x in first.rows:
        for y in first.cols:
            if second.entry(x, y) != factors[x] * first.entry(x, y) * factors[y]:
                return None
    return factors


def matroid_from_pmatrix(matrix, check=True):
    """
    The matroid M[I|A] on X u Y whose bases are X - Z for every square
    selection Z with non-zero determinant.

    :param matrix: A P-matrix.
    :param check: Verify that the matrix is a P-matrix first.
    :raises NotAPMatrix: carrying the first violating selection.
    """
    if check:
        violation = matrix.first_violation()
        if violation is not None:
            raise NotAPMatrix(*violation)
    nr = len(matrix.rows)
    all_rows = (1 << nr) - 1
    bases = [all_rows]
    for rows, cols in matrix.square_selections():
        rmask = sum(1 << i for i in rows)
        cmask = sum(1 << j for j in cols)
        if not matrix._det(rmask, cmask).is_zero():
            bases.append((all_rows & ~rmask) | (cmask << nr))
    return Matroid(matrix.labels, bases)
