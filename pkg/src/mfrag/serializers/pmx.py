"""The line-oriented ``.pmx`` format for labeled matrices over a partial field.

::

    pf GF(5)
    rows x u
    cols y v
    x: 2 3
    u: 1 4

Entries use the element-literal grammar of the partial field. Row lines must
follow the ``rows`` header order; ``#`` starts a comment.
"""

import logging

from lark import Transformer

from mfrag.partialfield import ParseError, PartialFieldException, pf_make
from mfrag.pmatrix import NotAPMatrix, PMatrix
from mfrag.serializers import LineGrammar, Serializer, token_error

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

logger = logging.getLogger(__name__)


PMX_GRAMMAR = r"""
start: _NL? pf_line rows_line cols_line row*

pf_line: "pf" VALUE _NL
rows_line: "rows" VALUE* _NL
cols_line: "cols" VALUE* _NL
row: ROW_LABEL VALUE* _NL

ROW_LABEL: /[^\s#:]+:/
VALUE: /[^\s#]+/
"""


class PMXTransformer(Transformer):
    def pf_line(self, children):
        return children[0]

    def rows_line(self, children):
        return children

    cols_line = rows_line

    def row(self, children):
        return children[0], children[1:]

    def start(self, children):
        return children[0], children[1], children[2], children[3:]


PMX = LineGrammar(
    PMX_GRAMMAR,
    PMXTransformer(),
    {"VALUE": "a label or an entry", "ROW_LABEL": "a row label such as 'x:'"},
)


class PMXSerializer(Serializer):
    """Serializer for :py:class:`~mfrag.pmatrix.PMatrix` in the ``.pmx`` format."""

    def serialize(self, stream, **kwargs):
        matrix = self.obj
        pf = matrix.pf
        lines = [
            "pf %s" % pf.name,
            " ".join(["rows"] + list(matrix.rows)),
            " ".join(["cols"] + list(matrix.cols)),
        ]
        for x in matrix.rows:
            values = [pf.format(matrix.entry(x, y)) for y in matrix.cols]
            lines.append(" ".join(["%s:" % x] + values))
        self.write(stream, "\n".join(lines) + "\n")

    def deserialize(self, stream, validate=True, **kwargs):
        """
        Reads a matrix.

        :param validate: Check that the matrix is a P-matrix.
        :raises ParseError: with line and column.
        :raises NotAPMatrix: when validating a matrix with a subdeterminant
            outside the partial field.
        """
        (name, rows, cols, row_lines), end = PMX.parse(stream)
        try:
            pf = pf_make(str(name))
        except PartialFieldException as exc:
            raise token_error(str(exc), name)
        rows = [str(label) for label in rows]
        cols = [str(label) for label in cols]

        entries = []
        for index, (label, values) in enumerate(row_lines):
            if index == len(rows):
                raise token_error("unexpected row %s after the last row" % label, label)
            if label[:-1] != rows[index]:
                raise token_error(
                    "expected row '%s:', found '%s'" % (rows[index], label), label
                )
            if len(values) != len(cols):
                raise ParseError(
                    "expected %d entries, found %d" % (len(cols), len(values)),
                    line=label.line,
                    column=values[0].column if values else label.end_column,
                )
            entries.append([_entry(pf, token) for token in values])
        if len(entries) < len(rows):
            raise ParseError("missing row '%s'" % rows[len(entries)], line=end)

        matrix = PMatrix(pf, rows, cols, entries)
        if validate:
            violation = matrix.first_violation()
            if violation is not None:
                raise NotAPMatrix(*violation)
        logger.debug("Read %r", matrix)
        return matrix


def _entry(pf, token):
    try:
        return pf.parse(str(token))
    except ParseError as exc:
        raise ParseError(
            exc.message, line=token.line, column=token.column + (exc.offset or 0)
        )
