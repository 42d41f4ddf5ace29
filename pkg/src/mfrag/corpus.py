"""Corpora of 3-connected matroids for the lemma verifiers.

A corpus spec is one of

* ``catalog``: the 3-connected catalog entries, one per isomorphism class;
* ``all-gf2-upto(n)`` and ``all-gf3-upto(n)``: every 3-connected matroid with
  at least four and at most n elements representable over the field, one per
  isomorphism class;
* a comma-separated list of ``.mtd``, ``.pmx`` or ``.ctx`` files and catalog
  names.

Generated corpora grow level by level from the wheels and whirls by
single-element extensions and coextensions of a representation, keeping the
3-connected results. Over GF(2) and GF(3) representations of 3-connected
matroids are unique up to scaling, so growing a single representation per
class reaches every member. Results are cached as JSON.
"""

import hashlib
import json
import logging
import os
import re
from itertools import product

from mfrag import Error, __version__, read
from mfrag.catalog import UnknownName, catalog, catalog_names, wheel, whirl
from mfrag.connectivity import is_3connected
from mfrag.constants import CACHE_DIR_ENV, DEFAULT_CACHE_DIR, MAX_CORPUS_SIZE
from mfrag.isomorphism import is_isomorphic, signature
from mfrag.matroid import Matroid
from mfrag.minors import element_profile, has_minor, is_fragile
from mfrag.partialfield import pf_make
from mfrag.pmatrix import PMatrix

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

logger = logging.getLogger(__name__)

_GENERATED = re.compile(r"^all-gf([23])-upto\((\d+)\)$")
# commas inside parentheses belong to names such as U(2,4)
_SEPARATOR = re.compile(r",(?![^(]*\))")


#  Exceptions
class CorpusException(Error):
    pass


class CorpusTooLarge(CorpusException):
    def __init__(self, size):
        self.size = size

    def __str__(self):
        return "Corpus size %d exceeds the generation cap of %d elements" % (
            self.size,
            MAX_CORPUS_SIZE,
        )


#  Loading single matroids
def load_matroid(text, validate=True):
    """
    A matroid from a catalog name or from a ``.mtd``, ``.pmx`` or ``.ctx``
    file (the candidate M of a setup).

    :param validate: Validate the file contents.
    """
    if os.path.exists(text):
        loaded = read(text, validate=validate)
        if isinstance(loaded, PMatrix):
            loaded = loaded.matroid(check=False)
        elif not isinstance(loaded, Matroid):
            loaded = loaded.matroid
        if loaded.name is None:
            loaded.name = os.path.basename(text)
        return loaded
    try:
        return catalog(text)
    except UnknownName:
        raise CorpusException("%s is neither a file nor a catalog name" % text)


#  Isomorphism classes
class IsomorphismClasses(object):
    """Representatives of isomorphism classes, bucketed by a cheap invariant."""

    def __init__(self):
        self.members = []
        self._buckets = {}

    def add(self, matroid, payload=None):
        """Adds the matroid unless an isomorphic one is present; returns whether
        it was added."""
        bucket = self._buckets.setdefault(signature(matroid), [])
        if any(is_isomorphic(matroid, other) for other, _ in bucket):
            return False
        bucket.append((matroid, payload))
        self.members.append((matroid, payload))
        return True

    def __len__(self):
        return len(self.members)


def catalog_corpus():
    classes = IsomorphismClasses()
    for name in catalog_names():
        matroid = catalog(name)
        if matroid.size >= 4 and is_3connected(matroid):
            classes.add(matroid)
    logger.info("Catalog corpus: %d matroids", len(classes))
    return [m for m, _ in classes.members]


#  Generation by extension and coextension
def _label(n):
    return str(n)


def _units(pf):
    return [v for v in pf.elements() if not v.is_zero()]


def seed_matrix(pf, r, twisted=False):
    """
    The standard representation of the rank-r wheel (or whirl when
    ``twisted``) with spokes ``1`` .. ``r`` as rows and rim elements
    ``r+1`` .. ``2r`` as columns.

    :return: A :py:class:`PMatrix`, or None for a whirl over a field of
        characteristic 2 where no twisting unit exists.
    """
    one = pf.one()
    minus = -one
    corner = minus
    if twisted:
        candidates = [u for u in _units(pf) if u != minus]
        if not candidates:
            return None
        corner = candidates[0]
    entries = [[pf.zero()] * r for _ in range(r)]
    for i in range(r - 1):
        entries[i][i] = one
        entries[i + 1][i] = minus
    entries[r - 1][r - 1] = one
    entries[0][r - 1] = corner
    rows = [_label(i + 1) for i in range(r)]
    cols = [_label(r + i + 1) for i in range(r)]
    return PMatrix(pf, rows, cols, entries)


def _as_matroid(matrix):
    matroid = matrix.matroid(check=False)
    return matroid.reordered(sorted(matroid.ground, key=int))


def _seeds(pf, size):
    """Wheels and whirls with exactly ``size`` elements, as (matroid, matrix)."""
    if size % 2 or size < 4:
        return []
    r = size // 2
    found = []
    for twisted, reference in ((False, wheel), (True, whirl)):
        matrix = seed_matrix(pf, r, twisted)
        if matrix is None:
            continue
        matroid = _as_matroid(matrix)
        if not is_3connected(matroid):
            continue
        if not is_isomorphic(matroid, reference(r)):
            logger.warning(
                "Seed %s(%d) over %s does not match the catalog",
                reference.__name__,
                r,
                pf.name,
            )
        found.append((matroid, matrix))
    return found


def _projective_vectors(pf, r):
    """Non-zero vectors of length r whose first non-zero entry is 1."""
    values = pf.elements()
    one = pf.one()
    for vector in product(values, repeat=r):
        lead = next((v for v in vector if not v.is_zero()), None)
        if lead is not None and lead == one:
            yield vector


def _parallel(pf, first, second):
    units = _units(pf)
    return any(all(c * a == b for a, b in zip(first, second)) for c in units)


def _extensions(pf, matrix, label):
    """Single-element extensions of M[I|A] by new simple columns."""
    rows = matrix.rows
    cols = matrix.cols
    existing = [tuple(matrix.entry(x, y) for x in rows) for y in cols]
    one = pf.one()
    zero = pf.zero()
    existing += [tuple(one if x == row else zero for x in rows) for row in rows]
    for vector in _projective_vectors(pf, len(rows)):
        if any(_parallel(pf, vector, column) for column in existing):
            continue
        entries = [
            list(matrix.entry(x, y) for y in cols) + [vector[i]]
            for i, x in enumerate(rows)
        ]
        yield PMatrix(pf, rows, list(cols) + [label], entries)


def _dual_matrix(matrix):
    """The representation [I|-A^T] of the dual, rows and columns swapped."""
    return PMatrix(
        matrix.pf,
        matrix.cols,
        matrix.rows,
        [[-matrix.entry(x, y) for x in matrix.rows] for y in matrix.cols],
    )


def _coextensions(pf, matrix, label):
    for extended in _extensions(pf, _dual_matrix(matrix), label):
        yield _dual_matrix(extended)


def generate_corpus(field, max_size):
    """
    All 3-connected matroids with four to ``max_size`` elements representable
    over a small field, one per isomorphism class.

    :param field: A field name such as ``GF(3)``; growth is complete over
        GF(2), GF(3) and GF(4).
    :param max_size: At most ``MAX_CORPUS_SIZE``.
    :raises CorpusTooLarge: above the cap.
    """
    if max_size > MAX_CORPUS_SIZE:
        raise CorpusTooLarge(max_size)
    pf = pf_make(field)
    if not pf.finite:
        raise CorpusException("%s is not a finite field" % pf.name)
    if pf.name not in ("GF(2)", "GF(3)", "GF(4)"):
        logger.warning(
            "%s has inequivalent representations; growth may miss matroids", pf.name
        )
    classes = IsomorphismClasses()
    level = []
    for size in range(4, max_size + 1):
        grown = []
        for matroid, matrix in _seeds(pf, size):
            if classes.add(matroid, matrix):
                grown.append((matroid, matrix))
        label = _label(size)
        for _, matrix in level:
            for candidate in _candidates(pf, matrix, label):
                matroid = _as_matroid(candidate)
                if not is_3connected(matroid):
                    continue
                if classes.add(matroid, candidate):
                    grown.append((matroid, candidate))
        logger.debug("%s: %d matroids with %d elements", pf.name, len(grown), size)
        level = grown
    result = []
    counts = {}
    for matroid, _ in classes.members:
        counts[matroid.size] = counts.get(matroid.size, 0) + 1
        matroid.name = "%s-n%d-%d" % (pf.name, matroid.size, counts[matroid.size])
        result.append(matroid)
    logger.info(
        "Generated %d matroids over %s up to %d", len(result), pf.name, max_size
    )
    return result


def _candidates(pf, matrix, label):
    for candidate in _extensions(pf, matrix, label):
        yield candidate
    for candidate in _coextensions(pf, matrix, label):
        yield candidate


#  Cache
def cache_dir(path=None):
    """The cache directory: ``path``, else ``$MFRAG_CACHE_DIR``, else the
    default."""
    if path is None:
        path = os.environ.get(CACHE_DIR_ENV) or DEFAULT_CACHE_DIR
    return os.path.expanduser(path)


def cache_key(spec):
    text = "%s|%s" % (spec, __version__)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _cache_path(spec, directory):
    return os.path.join(directory, "corpus-%s.json" % cache_key(spec)[:32])


def _dump(spec, matroids, path):
    content = {
        "spec": spec,
        "version": __version__,
        "matroids": [
            {
                "name": m.name,
                "ground": list(m.ground),
                "bases": sorted(m.basis_masks),
            }
            for m in matroids
        ],
    }
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as f:
        json.dump(content, f, sort_keys=True)


def _load(spec, path):
    with open(path) as f:
        content = json.load(f)
    if content.get("spec") != spec or content.get("version") != __version__:
        raise CorpusException("Stale corpus cache %s" % path)
    return [
        Matroid(entry["ground"], entry["bases"], name=entry["name"])
        for entry in content["matroids"]
    ]


#  Corpus specs
def parse_spec(spec):
    """
    Classifies a corpus spec.

    :return: ``("catalog", None)``, ``("generated", (field, n))`` or
        ``("files", [entries])``.
    """
    text = spec.strip()
    if text == "catalog":
        return "catalog", None
    match = _GENERATED.match(text.lower())
    if match:
        size = int(match.group(2))
        if size > MAX_CORPUS_SIZE:
            raise CorpusTooLarge(size)
        return "generated", ("GF(%s)" % match.group(1), size)
    if text.lower().startswith("all-"):
        raise CorpusException("Malformed corpus spec %r" % spec)
    entries = [part.strip() for part in _SEPARATOR.split(text) if part.strip()]
    if not entries:
        raise CorpusException("Empty corpus spec")
    return "files", entries


def load_corpus(spec, cache=None, use_cache=True, validate=True):
    """
    The matroids named by a corpus spec.

    :param cache: Cache directory for generated corpora.
    :param use_cache: Read and write the JSON cache.
    :param validate: Validate corpus files.
    """
    kind, argument = parse_spec(spec)
    if kind == "catalog":
        return catalog_corpus()
    if kind == "files":
        return [load_matroid(entry, validate) for entry in argument]
    return field_corpus(*argument, cache=cache, use_cache=use_cache)


def field_corpus(field, max_size, cache=None, use_cache=True):
    """:py:func:`generate_corpus` behind the JSON cache."""
    key = "%s-upto(%d)" % (pf_make(field).name.lower(), max_size)
    path = _cache_path(key, cache_dir(cache))
    if use_cache and os.path.exists(path):
        try:
            matroids = _load(key, path)
            logger.info("Loaded %d matroids from %s", len(matroids), path)
            return matroids
        except (CorpusException, ValueError, KeyError) as exc:
            logger.warning("Ignoring corpus cache %s: %s", path, exc)
    matroids = generate_corpus(field, max_size)
    if use_cache:
        try:
            _dump(key, matroids, path)
        except OSError as exc:
            logger.warning("Could not write corpus cache %s: %s", path, exc)
    return matroids


def fragile_scan(minor, field, max_size, cache=None, use_cache=True):
    """
    The strictly N-fragile matroids among the 3-connected matroids
    representable over a field.

    :param minor: The matroid N.
    :return: A list of ``(matroid, profile)`` pairs, where ``profile`` is the
        :py:func:`~mfrag.minors.element_profile` of the matroid.
    """
    found = []
    for matroid in field_corpus(field, max_size, cache, use_cache):
        if matroid.size < minor.size or has_minor(matroid, minor) is None:
            continue
        profile = element_profile(matroid, minor)
        if is_fragile(matroid, minor, profile):
            found.append((matroid, profile))
    logger.info(
        "%d strictly %s-fragile matroids over %s",
        len(found),
        minor.name or "N",
        field,
    )
    return found
