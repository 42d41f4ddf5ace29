import os

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"
__version__ = "0.1.0"

__all__ = ["Error", "matroid", "pmatrix", "read"]


class Error(Exception):
    """Base class for all errors in this package."""

    pass


def read(source, format=None, **kwargs):
    """
    Convenience function returning the object stored in a file.

    Does a lazy format detection: when no format is given, every registered
    text format is tried in turn and the first one that parses wins. A path
    with a ``.pmx``, ``.mtd`` or ``.ctx`` extension is read in that format
    only.

    :param source: Path or stream to read from.
    :param format: Optional format name (``pmx``, ``mtd`` or ``ctx``).
    :param kwargs: Passed on to the deserializer, e.g. ``validate``.
    """
    from mfrag.serializers import get

    if format:
        return get(format.lower())().deserialize_source(source, **kwargs)

    candidates = ["pmx", "mtd", "ctx"]
    if isinstance(source, str):
        extension = os.path.splitext(source)[1][1:].lower()
        if extension in candidates:
            return get(extension)().deserialize_source(source, **kwargs)
    for fmt in candidates:
        try:
            return get(fmt)().deserialize_source(source, **kwargs)
        except Error:
            if hasattr(source, "seek"):
                source.seek(0, 0)
    raise Error(
        "no format (pmx, mtd or ctx) could read the source; pass format= to "
        "see the parse error"
    )
