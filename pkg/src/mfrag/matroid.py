"""Matroids given by explicit basis families.

Subsets of the ground set are handled as bitmasks over the ground order; the
public methods accept and return labels. The rank of every subset is tabulated
on first use, which is affordable under the 16-element cap and makes every
oracle (rank, closure, circuits, duals) a table lookup afterwards.
"""

import hashlib
import logging
from itertools import combinations

from mfrag import Error
from mfrag.constants import MAX_GROUND
from mfrag.serializers import Serializable

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

logger = logging.getLogger(__name__)


#  Exceptions
class MatroidException(Error):
    """Base class for matroid exceptions."""

    pass


class ExchangeAxiomViolation(MatroidException):
    def __init__(self, first=None, second=None, element=None):
        self.first = first
        self.second = second
        self.element = element

    def __str__(self):
        if self.first is None:
            return "The basis family is empty"
        if self.element is None:
            return "Bases %s and %s have different sizes" % (
                _fmt(self.first),
                _fmt(self.second),
            )
        return (
            "Basis exchange fails for %s and %s: no element of the second "
            "can replace %s" % (_fmt(self.first), _fmt(self.second), self.element)
        )


class UnknownLabel(MatroidException):
    def __init__(self, label):
        self.label = label

    def __str__(self):
        return "Unknown element label: %s" % self.label


class EmptyGroundSet(MatroidException):
    def __str__(self):
        return "The resulting matroid would have an empty ground set"


class NotABasis(MatroidException):
    def __init__(self, labels):
        self.labels = labels

    def __str__(self):
        return "%s is not a basis" % _fmt(self.labels)


class GroundSetTooLarge(MatroidException):
    def __init__(self, size):
        self.size = size

    def __str__(self):
        return "Ground sets are limited to %d elements, got %d" % (
            MAX_GROUND,
            self.size,
        )


def _fmt(labels):
    return "{%s}" % ",".join(labels)


#  Bitmask helpers
def popcount(mask):
    return bin(mask).count("1")


def bits(mask):
    """Indices of the set bits of ``mask`` in increasing order."""
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


def set_key(mask):
    """Ordering key of a subset: size first, then its index tuple."""
    return popcount(mask), tuple(bits(mask))


def submasks(mask):
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _compress(mask, kept):
    result = 0
    for j, i in enumerate(kept):
        if (mask >> i) & 1:
            result |= 1 << j
    return result


class MinorRecipe(object):
    """A pair (C, D) of disjoint label sets, standing for M/C\\D."""

    def __init__(self, contract=(), delete=()):
        self.contract = frozenset(contract)
        self.delete = frozenset(delete)
        if self.contract & self.delete:
            raise MatroidException(
                "Contract and delete sets overlap in %s"
                % _fmt(sorted(self.contract & self.delete))
            )

    def apply(self, matroid):
        return matroid.minor(self.contract, self.delete)

    def merged(self, other):
        """Recipe for applying ``other`` after this one."""
        return MinorRecipe(self.contract | other.contract, self.delete | other.delete)

    def removed(self):
        return self.contract | self.delete

    def __eq__(self, other):
        return (
            isinstance(other, MinorRecipe)
            and self.contract == other.contract
            and self.delete == other.delete
        )

    def __hash__(self):
        return hash((self.contract, self.delete))

    def __repr__(self):
        return "<MinorRecipe: /%s \\%s>" % (
            _fmt(sorted(self.contract)),
            _fmt(sorted(self.delete)),
        )

    def to_dict(self):
        return {"contract": sorted(self.contract), "delete": sorted(self.delete)}


class Matroid(Serializable):
    """A matroid on an ordered ground set of string labels."""

    default_format = "mtd"

    def __init__(self, ground, bases, name=None, validate=False):
        """
        Constructor.

        :param ground: Ordered sequence of distinct labels.
        :param bases: Iterable of bitmasks over the ground order.
        :param name: Optional display name (catalog entries set it).
        :param validate: Check the basis exchange axiom exhaustively.
        """
        ground = tuple(str(label) for label in ground)
        if not ground:
            raise EmptyGroundSet()
        if len(ground) > MAX_GROUND:
            raise GroundSetTooLarge(len(ground))
        if len(set(ground)) != len(ground):
            raise MatroidException("Duplicate labels in ground set %s" % _fmt(ground))
        self._ground = ground
        self._index = {label: i for i, label in enumerate(ground)}
        self._bases = frozenset(bases)
        if not self._bases:
            raise ExchangeAxiomViolation()
        self.name = name
        if validate:
            self._check_exchange()
        self._rank = popcount(next(iter(self._bases)))
        self._full = (1 << len(ground)) - 1
        self._ranks = None
        self._indep = None
        self._circuits = None
        self._dual = None

    #  Construction helpers
    @classmethod
    def from_rank_function(cls, ground, rank_of, name=None):
        """
        Builds a matroid from a rank function on bitmasks.

        :param ground: Ordered labels.
        :param rank_of: Callable taking a bitmask and returning its rank.
        """
        n = len(ground)
        full = (1 << n) - 1
        r = rank_of(full)
        bases = []
        for combo in combinations(range(n), r):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if rank_of(mask) == r:
                bases.append(mask)
        return cls(ground, bases, name=name)

    def _check_exchange(self):
        sizes = {}
        for b in self._bases:
            sizes.setdefault(popcount(b), b)
        if len(sizes) > 1:
            first, second = sorted(sizes.values(), key=set_key)[:2]
            raise ExchangeAxiomViolation(self.ordered(first), self.ordered(second))
        ordered_bases = sorted(self._bases, key=set_key)
        for b1 in ordered_bases:
            for b2 in ordered_bases:
                if b1 == b2:
                    continue
                only2 = b2 & ~b1
                for e in bits(b1 & ~b2):
                    reduced = b1 & ~(1 << e)
                    if not any(reduced | (1 << f) in self._bases for f in bits(only2)):
                        raise ExchangeAxiomViolation(
                            self.ordered(b1), self.ordered(b2), self._ground[e]
                        )

    #  Labels and masks
    @property
    def ground(self):
        return self._ground

    @property
    def size(self):
        return len(self._ground)

    @property
    def full_mask(self):
        return self._full

    @property
    def basis_masks(self):
        return self._bases

    def __len__(self):
        return len(self._ground)

    def __contains__(self, label):
        return label in self._index

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(label)

    def mask(self, labels):
        """Bitmask of a label collection; a single string counts as one label."""
        if isinstance(labels, str):
            labels = (labels,)
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return mask

    def labels(self, mask):
        return frozenset(self._ground[i] for i in bits(mask))

    def ordered(self, mask):
        return tuple(self._ground[i] for i in bits(mask))

    def sort_key(self, labels):
        return set_key(self.mask(labels))

    def sorted_sets(self, masks):
        return [self.labels(m) for m in sorted(masks, key=set_key)]

    #  Rank oracle
    def _tabulate(self):
        n = len(self._ground)
        size = 1 << n
        indep = bytearray(size)
        for b in self._bases:
            indep[b] = 1
        for mask in range(size - 1, 0, -1):
            if indep[mask]:
                for i in bits(mask):
                    indep[mask & ~(1 << i)] = 1
        ranks = [0] * size
        for mask in range(1, size):
            if indep[mask]:
                ranks[mask] = popcount(mask)
            else:
                ranks[mask] = max(ranks[mask & ~(1 << i)] for i in bits(mask))
        self._indep = indep
        self._ranks = ranks

    def rank_mask(self, mask):
        if self._ranks is None:
            self._tabulate()
        return self._ranks[mask]

    def independent_mask(self, mask):
        if self._indep is None:
            self._tabulate()
        return bool(self._indep[mask])

    def corank_mask(self, mask):
        """Rank of ``mask`` in the dual matroid."""
        return popcount(mask) + self.rank_mask(self._full & ~mask) - self._rank

    def closure_mask(self, mask):
        r = self.rank_mask(mask)
        closed = mask
        for i in range(len(self._ground)):
            bit = 1 << i
            if not mask & bit and self.rank_mask(mask | bit) == r:
                closed |= bit
        return closed

    def coclosure_mask(self, mask):
        r = self.corank_mask(mask)
        closed = mask
        for i in range(len(self._ground)):
            bit = 1 << i
            if not mask & bit and self.corank_mask(mask | bit) == r:
                closed |= bit
        return closed

    def rank(self, labels=None):
        """
        Rank of a set of labels (of the ground set when omitted).

        :param labels: Iterable of labels.
        """
        if labels is None:
            return self._rank
        return self.rank_mask(self.mask(labels))

    def corank(self, labels=None):
        if labels is None:
            return len(self._ground) - self._rank
        return self.corank_mask(self.mask(labels))

    def closure(self, labels):
        return self.labels(self.closure_mask(self.mask(labels)))

    def coclosure(self, labels):
        return self.labels(self.coclosure_mask(self.mask(labels)))

    def is_independent(self, labels):
        return self.independent_mask(self.mask(labels))

    def is_basis(self, labels):
        return self.mask(labels) in self._bases

    def is_circuit(self, labels):
        return self.mask(labels) in self.circuit_masks()

    def is_cocircuit(self, labels):
        return self.mask(labels) in self.cocircuit_masks()

    #  Derived families
    def bases(self):
        return self.sorted_sets(self._bases)

    def nonbases(self):
        """The r-subsets of the ground set that are not bases."""
        result = []
        for combo in combinations(range(len(self._ground)), self._rank):
            mask = sum(1 << i for i in combo)
            if mask not in self._bases:
                result.append(mask)
        return self.sorted_sets(result)

    def circuit_masks(self):
        if self._circuits is None:
            if self._indep is None:
                self._tabulate()
            indep = self._indep
            found = []
            for mask in range(1, self._full + 1):
                if indep[mask] or popcount(mask) > self._rank + 1:
                    continue
                if all(indep[mask & ~(1 << i)] for i in bits(mask)):
                    found.append(mask)
            self._circuits = frozenset(found)
        return self._circuits

    def cocircuit_masks(self):
        return self.dual().circuit_masks()

    def circuits(self):
        """All circuits, ascending by size then lexicographically."""
        return self.sorted_sets(self.circuit_masks())

    def cocircuits(self):
        return self.sorted_sets(self.cocircuit_masks())

    def triangle_masks(self):
        return [
            m for m in sorted(self.circuit_masks(), key=set_key) if popcount(m) == 3
        ]

    def triad_masks(self):
        return [
            m for m in sorted(self.cocircuit_masks(), key=set_key) if popcount(m) == 3
        ]

    def triangles(self):
        return [self.labels(m) for m in self.triangle_masks()]

    def triads(self):
        return [self.labels(m) for m in self.triad_masks()]

    def loops(self):
        return frozenset(e for e in self._ground if self.rank_mask(self.mask(e)) == 0)

    def coloops(self):
        return frozenset(e for e in self._ground if self.corank_mask(self.mask(e)) == 0)

    def parallel_classes(self):
        """Parallel classes of the non-loop elements, singletons included."""
        loops = self.loops()
        assigned = set()
        classes = []
        for e in self._ground:
            if e in loops or e in assigned:
                continue
            members = [e]
            for f in self._ground[self._index[e] + 1 :]:
                if f in loops or f in assigned:
                    continue
                if self.rank_mask(self.mask((e, f))) == 1:
                    members.append(f)
            assigned.update(members)
            classes.append(tuple(members))
        return classes

    def series_classes(self):
        return self.dual().parallel_classes()

    def is_segment(self, labels):
        """Whether every 3-element subset of ``labels`` is a triangle."""
        mask = self.mask(labels)
        if popcount(mask) < 3:
            return False
        triangles = self.circuit_masks()
        return all(
            sum(1 << i for i in combo) in triangles
            for combo in combinations(bits(mask), 3)
        )

    def is_cosegment(self, labels):
        return self.dual().is_segment(labels)

    #  Duality and minors
    def dual(self):
        if self._dual is None:
            dual = Matroid(self._ground, [self._full & ~b for b in self._bases])
            if self.name:
                if self.name.endswith("*"):
                    dual.name = self.name[:-1]
                else:
                    dual.name = self.name + "*"
            dual._dual = self
            self._dual = dual
        return self._dual

    def _restricted(self, keep, bases):
        kept = list(bits(keep))
        ground = [self._ground[i] for i in kept]
        return Matroid(ground, {_compress(b, kept) for b in bases})

    def delete(self, labels):
        """
        Deletes a set of elements.

        :param labels: Iterable of labels to delete.
        :raises EmptyGroundSet: when every element would be deleted.
        """
        removed = self.mask(labels)
        keep = self._full & ~removed
        if not keep:
            raise EmptyGroundSet()
        if not removed:
            return self
        r = self.rank_mask(keep)
        bases = [b & keep for b in self._bases if popcount(b & keep) == r]
        return self._restricted(keep, bases)

    def contract(self, labels):
        removed = self.mask(labels)
        keep = self._full & ~removed
        if not keep:
            raise EmptyGroundSet()
        if not removed:
            return self
        r = self.rank_mask(removed)
        bases = [b & keep for b in self._bases if popcount(b & removed) == r]
        return self._restricted(keep, bases)

    def restrict(self, labels):
        outside = self._full & ~self.mask(labels)
        return self.delete(self._ground[i] for i in bits(outside))

    def minor(self, contract=(), delete=()):
        """M/contract\\delete, keeping labels."""
        result = self
        if contract:
            result = result.contract(contract)
        if delete:
            result = result.delete(delete)
        return result

    def minor_B(self, basis, labels):
        """
        The minor M/(B-Z)\\(B*-Z) for a basis B.

        :param basis: Labels of a basis of this matroid.
        :param labels: The set Z, which becomes the ground set of the result.
        """
        b = self.mask(basis)
        if b not in self._bases:
            raise NotABasis(self.ordered(b))
        z = self.mask(labels)
        if not z:
            raise EmptyGroundSet()
        return self.minor(self.ordered(b & ~z), self.ordered(self._full & ~b & ~z))

    def simplify(self):
        """
        Simplification.

        The smallest label of each parallel class is kept.

        :return: A pair of the simple matroid and a map from each kept
            representative to its parallel class.
        """
        class_map = {min(members): members for members in self.parallel_classes()}
        removed = [e for e in self._ground if e not in class_map]
        return self.delete(removed), class_map

    def cosimplify(self):
        simple, class_map = self.dual().simplify()
        return simple.dual(), class_map

    def relabel(self, mapping):
        """
        Returns a copy with labels renamed.

        :param mapping: Dict or callable from old to new labels; labels missing
            from a dict are kept.
        """
        if callable(mapping):
            ground = [mapping(e) for e in self._ground]
        else:
            ground = [mapping.get(e, e) for e in self._ground]
        return Matroid(ground, self._bases)

    def reordered(self, ground):
        """The same labeled matroid with the ground set listed in another order."""
        positions = [self.index(label) for label in ground]
        if len(positions) != len(self._ground) or len(set(positions)) != len(positions):
            raise MatroidException("Reordering must list every element once")
        return Matroid(
            ground,
            {_compress(b, positions) for b in self._bases},
            name=self.name,
        )

    #  Identity
    def _remapped_bases(self, other):
        positions = [other._index[label] for label in self._ground]
        return {_compress(b, positions) for b in other._bases}

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return False
        if self._ground == other._ground:
            return self._bases == other._bases
        if set(self._ground) != set(other._ground):
            return False
        return self._bases == self._remapped_bases(other)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((frozenset(self._ground), len(self._bases), self._rank))

    def digest(self):
        """Content digest of the labeled matroid, independent of ground order."""
        text = "%s|%d|%s" % (
            ",".join(sorted(self._ground)),
            self._rank,
            ";".join(sorted(",".join(sorted(self.labels(b))) for b in self._bases)),
        )
        return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]

    def describe(self):
        return {
            "digest": self.digest(),
            "ground": list(self._ground),
            "rank": self._rank,
            "bases": len(self._bases),
            "name": self.name,
        }

    def __repr__(self):
        title = self.name or "Matroid"
        return "<%s: %d elements, rank %d, %d bases>" % (
            title,
            len(self._ground),
            self._rank,
            len(self._bases),
        )


def matroid_from_bases(ground, bases, name=None, validate=True):
    """
    Builds and validates a matroid from label sets.

    :param ground: Ordered labels.
    :param bases: Iterable of bases, each an iterable of labels.
    :param validate: Check the exchange axiom exhaustively.
    """
    ground = tuple(str(label) for label in ground)
    index = {label: i for i, label in enumerate(ground)}
    masks = set()
    for basis in bases:
        if isinstance(basis, str):
            basis = (basis,)
        mask = 0
        for label in basis:
            label = str(label)
            if label not in index:
                raise UnknownLabel(label)
            mask |= 1 << index[label]
        masks.add(mask)
    return Matroid(ground, masks, name=name, validate=validate)
