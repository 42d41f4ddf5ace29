"""The ``.ctx`` format for excluded-minor setups.

::

    matroid M.mtd
    minor U(2,4)
    pair a b
    basis 1,2,3
    xy 1 2
    companion A.pmx

``matroid`` and ``minor`` name a ``.mtd`` or ``.pmx`` file or a catalog
entry; ``companion`` is optional and names a ``.pmx`` file. Relative paths are
resolved against the directory of the ``.ctx`` file. Lines come in the order
shown and ``basis -`` is the empty basis.
"""

import logging
import os

from lark import Transformer

from mfrag.catalog import UnknownName, catalog
from mfrag.exminor import SetupContext
from mfrag.pmatrix import PMatrix
from mfrag.serializers import (
    LineGrammar,
    Serializer,
    SerializerException,
    get,
    token_error,
)

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

logger = logging.getLogger(__name__)

CTX_GRAMMAR = r"""
start: _NL? matroid_line minor_line pair_line basis_line xy_line companion_line?

matroid_line: "matroid" SOURCE _NL
minor_line: "minor" SOURCE _NL
pair_line: "pair" LABEL LABEL _NL
basis_line: "basis" (LABEL ("," LABEL)* | EMPTY) _NL
xy_line: "xy" LABEL LABEL _NL
companion_line: "companion" SOURCE _NL

EMPTY: "-"
SOURCE: /[^\s#]([^\n#]*[^\s#])?/
LABEL: /[^\s#,]+/
"""


def _tagged(keyword):
    def transform(self, children):
        return keyword, children

    return transform


class CTXTransformer(Transformer):
    matroid_line = _tagged("matroid")
    minor_line = _tagged("minor")
    pair_line = _tagged("pair")
    basis_line = _tagged("basis")
    xy_line = _tagged("xy")
    companion_line = _tagged("companion")

    def start(self, children):
        return dict(children)


CTX = LineGrammar(
    CTX_GRAMMAR,
    CTXTransformer(),
    {"SOURCE": "a file or catalog name", "LABEL": "a label", "EMPTY": "'-'"},
)


def _source_of(ctx, key, matroid):
    source = ctx.sources.get(key)
    if source is not None:
        return source
    if matroid.name:
        try:
            if catalog(matroid.name) == matroid:
                return matroid.name
        except UnknownName:
            pass
    raise SerializerException("No file or catalog name recorded for the %s" % key)


def _format_basis(ctx):
    if not ctx.basis:
        return "-"
    return ",".join(ctx.reduced.ordered(ctx.reduced.mask(ctx.basis)))


class CTXSerializer(Serializer):
    """Serializer for :py:class:`~mfrag.exminor.SetupContext`.

    Writing needs the file paths or catalog names the setup was read from,
    kept in ``SetupContext.sources``.
    """

    def serialize(self, stream, **kwargs):
        ctx = self.obj
        lines = [
            "matroid %s" % _source_of(ctx, "matroid", ctx.matroid),
            "minor %s" % _source_of(ctx, "minor", ctx.minor),
            "pair %s %s" % (ctx.a, ctx.b),
            "basis %s" % _format_basis(ctx),
            "xy %s %s" % (ctx.x, ctx.y),
        ]
        if ctx.companion is not None:
            if "companion" not in ctx.sources:
                raise SerializerException("No file recorded for the companion matrix")
            lines.append("companion %s" % ctx.sources["companion"])
        self.write(stream, "\n".join(lines) + "\n")

    def deserialize(self, stream, base_dir=None, validate=True, **kwargs):
        """
        Reads a setup and the files it refers to.

        :param base_dir: Directory for relative paths, the working directory by
            default.
        :param validate: Check the referenced files and the setup requirements.
        :raises ParseError: with line and column.
        :raises InvalidSetup: when validating a setup that fails a requirement.
        """
        fields, _ = CTX.parse(stream)
        a, b = fields["pair"]
        x, y = fields["xy"]
        basis = [t for t in fields["basis"] if t.type == "LABEL"]

        sources = {}
        loaded = {}
        for keyword in ("matroid", "minor", "companion"):
            if keyword not in fields:
                continue
            token = fields[keyword][0]
            sources[keyword] = str(token)
            loaded[keyword] = _load(token, base_dir, validate, keyword == "companion")
        matroid = loaded["matroid"]
        for label in (a, b):
            if label not in matroid:
                raise token_error("%s is not an element of M" % label, label)
        for label in basis + [x, y]:
            if label not in matroid or label in (a, b):
                raise token_error("%s is not an element of M\\a,b" % label, label)

        ctx = SetupContext(
            matroid,
            loaded["minor"],
            str(a),
            str(b),
            [str(label) for label in basis],
            str(x),
            str(y),
            companion=loaded.get("companion"),
            name=getattr(stream, "name", None),
            sources=sources,
        )
        if validate:
            ctx.check()
        logger.debug("Read %r", ctx)
        return ctx


def _load(token, base_dir, validate, matrix):
    text = str(token)
    path = text if base_dir is None else os.path.join(base_dir, text)
    if os.path.exists(path):
        fmt = "pmx" if matrix or path.endswith(".pmx") else "mtd"
        # companion matrices need not be P-matrices
        loaded = get(fmt)().deserialize_source(path, validate=validate and not matrix)
        if not matrix and isinstance(loaded, PMatrix):
            loaded = loaded.matroid(check=False)
        return loaded
    if matrix:
        raise token_error("no such file %s" % text, token)
    try:
        return catalog(text)
    except UnknownName:
        raise token_error("%s is neither a file nor a catalog name" % text, token)
