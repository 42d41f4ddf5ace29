import io
import os

from lark import Lark
from lark.exceptions import UnexpectedEOF, UnexpectedInput, UnexpectedToken

from mfrag import Error
from mfrag.partialfield import ParseError

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

__all__ = ["get", "Serializer", "Serializable"]


class Serializer(object):
    """Reads and writes one kind of object in one text format."""

    obj = None
    """The matrix, matroid, setup or report being written."""

    def __init__(self, obj=None):
        self.obj = obj

    def serialize(self, stream, **kwargs):
        """Writes :py:attr:`obj` to a text stream."""
        raise NotImplementedError

    def deserialize(self, stream, **kwargs):
        """Parses one object from a text stream and returns it."""
        raise NotImplementedError

    def deserialize_source(self, source, **kwargs):
        """
        Deserializes from a stream or a file path.

        File paths are passed on as the ``base_dir`` keyword so that formats
        referring to other files can resolve relative paths.
        """
        if hasattr(source, "read"):
            return self.deserialize(source, **kwargs)
        kwargs.setdefault("base_dir", os.path.dirname(os.path.abspath(source)))
        with open(source) as f:
            return self.deserialize(f, **kwargs)

    @staticmethod
    def write(stream, content):
        if not isinstance(stream, io.TextIOBase):
            content = content.encode("utf-8")
        stream.write(content)


class SerializerException(Error):
    pass


#  Line-oriented formats
LINE_TERMINALS = r"""
_NL: (/\r?\n[\t ]*/ | /#[^\n]*/)+
%ignore /[\t ]+/
"""
"""Newlines, blank lines and ``#`` comments end a line; blanks separate
tokens. Appended to every format grammar."""

_DESCRIPTIONS = {"_NL": "end of line", "$END": "end of file", "COMMA": "','"}


class LineGrammar(object):
    """
    A lark grammar for one of the line-oriented file formats.

    The parser is an LALR parser with the contextual lexer, so keywords, labels
    and element literals may share characters as long as the grammar tells
    them apart by position. Syntax errors are raised as
    :py:class:`~mfrag.partialfield.ParseError` with line and column.
    """

    def __init__(self, grammar, transformer, terminals=None):
        """
        :param grammar: The rules and terminals; :py:data:`LINE_TERMINALS` is
            appended.
        :param transformer: A :py:class:`lark.Transformer` applied while
            parsing.
        :param terminals: Human-readable names of the named terminals, used in
            error messages.
        """
        self.grammar = grammar + LINE_TERMINALS
        self.transformer = transformer
        self.terminals = dict(_DESCRIPTIONS, **(terminals or {}))
        self._parser = None

    @property
    def parser(self):
        if self._parser is None:
            self._parser = Lark(
                self.grammar, parser="lalr", transformer=self.transformer
            )
        return self._parser

    def describe(self, terminal):
        return self.terminals.get(terminal, "'%s'" % terminal.lower())

    def parse(self, stream):
        """
        Parses a whole stream.

        :return: A pair of the transformed result and the line number just
            past the last line, for errors about missing lines.
        """
        text = stream.read()
        if isinstance(text, bytes):
            text = text.decode("utf-8")
        if not text.endswith("\n"):
            text += "\n"
        end = len(text.splitlines()) + 1
        try:
            return self.parser.parse(text), end
        except UnexpectedInput as exc:
            raise self.located(exc, end)

    def located(self, exc, end):
        expected = getattr(exc, "expected", None) or getattr(exc, "allowed", None)
        wanted = " or ".join(sorted(set(self.describe(t) for t in expected or ())))
        token = getattr(exc, "token", None)
        at_end = token is not None and token.type == "$END"
        if isinstance(exc, UnexpectedEOF) or at_end:
            return ParseError("unexpected end of file, expected %s" % wanted, line=end)
        if isinstance(exc, UnexpectedToken):
            if token.type == "_NL":
                found = self.describe("_NL")
            else:
                found = repr(str(token))
        else:
            found = repr(getattr(exc, "char", "?"))
        message = "unexpected %s" % found
        if wanted:
            message += ", expected %s" % wanted
        return ParseError(message, line=exc.line, column=exc.column)


def token_error(message, token):
    """A :py:class:`~mfrag.partialfield.ParseError` at a parsed token."""
    return ParseError(message, line=token.line, column=token.column)


class DoNotExist(Error):
    """No serializer is registered for a format name."""

    def __init__(self, format_name):
        self.format_name = format_name

    def __str__(self):
        return 'no serializer for the format "%s" (known: %s)' % (
            self.format_name,
            ", ".join(sorted(Registry.formats())),
        )


class Registry:
    """Format names mapped to serializer classes, filled on first use."""

    serializers = None

    @staticmethod
    def load_serializers():
        # imported here: the format modules import mfrag.pmatrix and friends
        from mfrag.serializers.pmx import PMXSerializer
        from mfrag.serializers.mtd import MTDSerializer
        from mfrag.serializers.ctx import CTXSerializer
        from mfrag.serializers.jsonreport import JSONReportSerializer

        Registry.serializers = {
            "pmx": PMXSerializer,
            "mtd": MTDSerializer,
            "ctx": CTXSerializer,
            "json": JSONReportSerializer,
        }

    @staticmethod
    def formats():
        if Registry.serializers is None:
            Registry.load_serializers()
        return list(Registry.serializers)


def get(format_name):
    """
    The serializer class for a format name.

    :raises DoNotExist: for an unregistered name.
    """
    if format_name not in Registry.formats():
        raise DoNotExist(format_name)
    return Registry.serializers[format_name]


class Serializable(object):
    """Mixin giving a class ``serialize``/``deserialize`` in the registry formats."""

    default_format = None

    def serialize(self, destination=None, format=None, **args):
        """
        Serialize the object to the destination.

        :param destination: Stream object or file path to serialize the output
            to. Default is `None`, which serializes as a string.
        :param format: Serialization format, defaulting to the natural format
            of the class.
        :return: Serialization in a string if no destination was given,
            None otherwise.
        """
        serializer = get(format or self.default_format)(self)
        if destination is None:
            stream = io.StringIO()
            serializer.serialize(stream, **args)
            return stream.getvalue()
        if hasattr(destination, "write"):
            serializer.serialize(destination, **args)
        else:
            with open(destination, "w") as stream:
                serializer.serialize(stream, **args)

    @classmethod
    def deserialize(cls, source=None, content=None, format=None, **args):
        """
        Deserialize an object from source (a stream or a file path) or directly
        from a string content.

        :param source: Stream object or path to deserialize from.
        :param content: String to deserialize from.
        :param format: Serialization format, defaulting to the natural format
            of the class.
        """
        serializer = get(format or cls.default_format)()
        if content is not None:
            stream = io.StringIO(
                content if isinstance(content, str) else content.decode()
            )
            return serializer.deserialize(stream, **args)
        if source is not None:
            return serializer.deserialize_source(source, **args)
        raise SerializerException("Nothing to deserialize: no source or content given")
