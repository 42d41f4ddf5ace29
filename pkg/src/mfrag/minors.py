"""N-minor search and the classification of elements relative to a minor N."""

import logging
from collections import Counter
from itertools import combinations

from mfrag import Error
from mfrag.catalog import is_binary, is_wheel_or_whirl, uniform
from mfrag.connectivity import SeparationRecord, is_3connected, separations
from mfrag.constants import CONTRACTION, DELETION
from mfrag.isomorphism import isomorphic
from mfrag.matroid import (
    EmptyGroundSet,
    MinorRecipe,
    NotABasis,
    _compress,
    bits,
    popcount,
    set_key,
)
from mfrag.operations import two_sum_part

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

logger = logging.getLogger(__name__)


#  Exceptions
class MinorException(Error):
    """Base class for minor-analysis exceptions."""

    pass


class NoNMinor(MinorException):
    def __init__(self, matroid, minor):
        self.matroid = matroid
        self.minor = minor

    def __str__(self):
        return "%r has no %r-minor" % (self.matroid, self.minor)


class NoBasisMeetsConstraints(MinorException):
    def __init__(self, constraints):
        self.constraints = constraints

    def __str__(self):
        return "No basis meets the constraints %s" % self.constraints


class PreconditionViolated(MinorException):
    def __init__(self, message):
        self.message = message

    def __str__(self):
        return self.message


class NNotApplicable(MinorException):
    def __init__(self, minor):
        self.minor = minor

    def __str__(self):
        return "N-stability needs a non-binary N, got %r" % self.minor


#  Minor search
def _degree_signature(masks, positions):
    degree = Counter()
    for b in masks:
        for i in bits(b):
            degree[i] += 1
    return tuple(sorted(degree.get(i, 0) for i in positions))


def has_minor(matroid, minor, accept=None):
    """
    Searches for an N-minor.

    Contract sets are independent sets of size r(M) - r(N) in increasing
    order; delete sets are the sets of the remaining size that are
    coindependent after contraction. Candidates are filtered by an invariant
    signature and by a memo of already refuted basis families before the
    isomorphism test.

    :param matroid: The matroid M.
    :param minor: The matroid N.
    :param accept: Optional predicate on a :py:class:`MinorRecipe`; recipes it
        rejects are skipped.
    :return: A :py:class:`MinorRecipe` (C, D) with M/C\\D isomorphic to N, or
        None.
    """
    n = matroid.size
    contract_size = matroid.rank() - minor.rank()
    delete_size = matroid.corank() - minor.corank()
    if minor.size > n or contract_size < 0 or delete_size < 0:
        return None

    target_bases = len(minor.basis_masks)
    target_degrees = _degree_signature(minor.basis_masks, range(minor.size))
    refuted = set()
    for c_combo in combinations(range(n), contract_size):
        c = sum(1 << i for i in c_combo)
        if not matroid.independent_mask(c):
            continue
        contracted = [b & ~c for b in matroid.basis_masks if b & c == c]
        rest = [i for i in range(n) if not c >> i & 1]
        for d_combo in combinations(rest, delete_size):
            d = sum(1 << i for i in d_combo)
            kept = [b for b in contracted if not b & d]
            if len(kept) != target_bases:
                continue
            positions = [i for i in rest if not d >> i & 1]
            if _degree_signature(kept, positions) != target_degrees:
                continue
            key = frozenset(_compress(b, positions) for b in kept)
            if key in refuted:
                continue
            recipe = MinorRecipe(matroid.ordered(c), matroid.ordered(d))
            candidate = matroid.minor(recipe.contract, recipe.delete)
            if isomorphic(candidate, minor) is None:
                refuted.add(key)
                continue
            if accept is not None and not accept(recipe):
                continue
            return recipe
    return None


def minor_ground(matroid, minor, recipe=None):
    """Labels of M that survive in the N-minor found by :py:func:`has_minor`."""
    if recipe is None:
        recipe = has_minor(matroid, minor)
        if recipe is None:
            raise NoNMinor(matroid, minor)
    return frozenset(matroid.ground) - recipe.removed()


def _removed(operation, e):
    try:
        result = operation(e)
    except EmptyGroundSet:
        return None
    return result


def element_profile(matroid, minor):
    """
    Removal behaviour of every element relative to N.

    :return: Dict from label to a dict with keys ``deletable``,
        ``contractible``, ``del_strong`` (co(M\\e) is 3-connected with an
        N-minor) and ``con_strong`` (si(M/e) is 3-connected with an N-minor).
    """
    profile = {}
    for e in matroid.ground:
        entry = {
            "deletable": False,
            "contractible": False,
            "del_strong": False,
            "con_strong": False,
        }
        deleted = _removed(matroid.delete, e)
        if deleted is not None and has_minor(deleted, minor) is not None:
            entry["deletable"] = True
            co, _ = deleted.cosimplify()
            entry["del_strong"] = (
                is_3connected(co) and has_minor(co, minor) is not None
            )
        contracted = _removed(matroid.contract, e)
        if contracted is not None and has_minor(contracted, minor) is not None:
            entry["contractible"] = True
            si, _ = contracted.simplify()
            entry["con_strong"] = (
                is_3connected(si) and has_minor(si, minor) is not None
            )
        profile[e] = entry
    return profile


class ElementClassification(object):
    """Flags of one element relative to N and, optionally, a basis B."""

    def __init__(self, label, deletable, contractible, robust=None, strong=None):
        self.label = label
        self.deletable = deletable
        self.contractible = contractible
        self.robust = robust
        self.strong = strong

    @property
    def flexible(self):
        return self.deletable and self.contractible

    @property
    def essential(self):
        return not self.deletable and not self.contractible

    def to_dict(self):
        return {
            "label": self.label,
            "deletable": self.deletable,
            "contractible": self.contractible,
            "flexible": self.flexible,
            "essential": self.essential,
            "robust": self.robust,
            "strong": self.strong,
        }

    def __repr__(self):
        flags = [
            name
            for name in ("deletable", "contractible", "robust", "strong")
            if getattr(self, name)
        ]
        return "<ElementClassification %s: %s>" % (self.label, ",".join(flags))


def _robust(entry, in_basis):
    return entry["contractible"] if in_basis else entry["deletable"]


def _strong(entry, in_basis):
    return entry["con_strong"] if in_basis else entry["del_strong"]


def classify_elements(matroid, minor, basis=None, profile=None):
    """
    Classifies every element of M relative to N.

    :param basis: Optional basis B; robust and strong flags are filled in
        when given.
    :param profile: A precomputed :py:func:`element_profile`.
    :raises NoNMinor: when M has no N-minor.
    :raises NotABasis: when B is not a basis of M.
    """
    if has_minor(matroid, minor) is None:
        raise NoNMinor(matroid, minor)
    if basis is not None and not matroid.is_basis(basis):
        raise NotABasis(sorted(basis))
    if profile is None:
        profile = element_profile(matroid, minor)
    basis = set(basis) if basis is not None else None
    result = []
    for e in matroid.ground:
        entry = profile[e]
        robust = strong = None
        if basis is not None:
            robust = _robust(entry, e in basis)
            strong = _strong(entry, e in basis)
        result.append(
            ElementClassification(
                e, entry["deletable"], entry["contractible"], robust, strong
            )
        )
    return result


def is_fragile(matroid, minor, profile=None):
    """Whether no element of M is N-flexible."""
    if profile is None:
        profile = element_profile(matroid, minor)
    return not any(
        entry["deletable"] and entry["contractible"] for entry in profile.values()
    )


def is_strictly_fragile(matroid, minor, profile=None):
    return has_minor(matroid, minor) is not None and is_fragile(
        matroid, minor, profile
    )


#  Robust bases
class RobustBasis(object):
    """A basis with the robust and strong elements outside {x, y}."""

    def __init__(self, basis, robust, strong):
        self.basis = frozenset(basis)
        self.robust = frozenset(robust)
        self.strong = frozenset(strong)

    @property
    def count(self):
        return len(self.robust)

    def to_dict(self):
        return {
            "basis": sorted(self.basis),
            "count": self.count,
            "robust": sorted(self.robust),
            "strong": sorted(self.strong),
        }

    def __repr__(self):
        return "<RobustBasis {%s}: %d robust>" % (
            ",".join(sorted(self.basis)),
            self.count,
        )


def _evaluate_basis(matroid, profile, b, xy):
    robust = []
    strong = []
    for i, e in enumerate(matroid.ground):
        bit = 1 << i
        if xy & bit:
            continue
        entry = profile[e]
        if _robust(entry, b & bit):
            robust.append(e)
        if _strong(entry, b & bit):
            strong.append(e)
    return robust, strong


def _bases_through(matroid, xy):
    return sorted((b for b in matroid.basis_masks if b & xy == xy), key=set_key)


def robust_basis_search(matroid, minor, x, y, z=None, profile=None):
    """
    A basis containing x and y with the most (N,B)-robust elements outside
    {x, y}, the basis with the smallest bitmask winning ties.

    :param z: When given, the basis must avoid z, {x, y, z} must be a triad
        and z must be (N,B)-strong.
    :raises NoBasisMeetsConstraints: when no basis qualifies.
    """
    if profile is None:
        profile = element_profile(matroid, minor)
    xy = matroid.mask((x, y))
    constraints = {"x": x, "y": y, "z": z}
    if z is not None:
        triad = matroid.mask((x, y, z))
        if popcount(triad) != 3 or triad not in matroid.cocircuit_masks():
            raise NoBasisMeetsConstraints(constraints)
    best = None
    for b in _bases_through(matroid, xy):
        robust, strong = _evaluate_basis(matroid, profile, b, xy)
        if z is not None and (matroid.mask(z) & b or z not in strong):
            continue
        key = (-len(robust), b)
        if best is None or key < best[0]:
            best = (key, RobustBasis(matroid.labels(b), robust, strong))
    if best is None:
        raise NoBasisMeetsConstraints(constraints)
    return best[1]


def robust_bases(matroid, minor, x, y, profile=None):
    """
    All robust bases for the pair {x, y}.

    When some basis through x and y has a strong element outside {x, y}, only
    bases displaying a triad {x, y, z} with z strong are considered.
    """
    if profile is None:
        profile = element_profile(matroid, minor)
    xy = matroid.mask((x, y))
    triads = matroid.cocircuit_masks()
    evaluated = []
    for b in _bases_through(matroid, xy):
        robust, strong = _evaluate_basis(matroid, profile, b, xy)
        evaluated.append((b, robust, strong))
    if not evaluated:
        raise NoBasisMeetsConstraints({"x": x, "y": y})
    if any(strong for _, _, strong in evaluated):
        evaluated = [
            (b, robust, strong)
            for b, robust, strong in evaluated
            if any(
                not matroid.mask(z) & b and xy | matroid.mask(z) in triads
                for z in strong
            )
        ]
        if not evaluated:
            raise NoBasisMeetsConstraints({"x": x, "y": y, "z": "strong"})
    top = max(len(robust) for _, robust, _ in evaluated)
    return [
        RobustBasis(matroid.labels(b), robust, strong)
        for b, robust, strong in evaluated
        if len(robust) == top
    ]


#  Splitter sequences
class SplitterSequence(object):
    """An ordering of C u D whose prefix removals all stay 3-connected."""

    def __init__(self, recipe, order):
        self.recipe = recipe
        self.order = tuple(order)

    def prefixes(self, matroid):
        """The minors after each prefix of the ordering."""
        current = matroid
        result = []
        for e in self.order:
            if e in self.recipe.contract:
                current = current.contract(e)
            else:
                current = current.delete(e)
            result.append(current)
        return result

    def to_dict(self):
        return {"recipe": self.recipe.to_dict(), "order": list(self.order)}

    def __repr__(self):
        return "<SplitterSequence: %s>" % ",".join(self.order)


def splitter_sequence(matroid, minor):
    """
    Removes one element at a time, deletions before contractions, keeping
    3-connectivity and an N-minor, backtracking on dead ends.

    :raises PreconditionViolated: when M or N is not 3-connected, N is small
        or N is a wheel or a whirl.
    :raises NoNMinor: when M has no N-minor.
    """
    if not is_3connected(matroid):
        raise PreconditionViolated("%r is not 3-connected" % matroid)
    if not is_3connected(minor) or minor.size < 4:
        raise PreconditionViolated(
            "%r must be 3-connected with at least 4 elements" % minor
        )
    if is_wheel_or_whirl(minor):
        raise PreconditionViolated("%r is a wheel or a whirl" % minor)
    if has_minor(matroid, minor) is None:
        raise NoNMinor(matroid, minor)

    failed = set()
    steps = []

    def search(current, contract, delete):
        if current.size == minor.size:
            return True
        key = (contract, delete)
        if key in failed:
            return False
        for operation in (DELETION, CONTRACTION):
            for e in current.ground:
                if operation == DELETION:
                    child = current.delete(e)
                else:
                    child = current.contract(e)
                if not is_3connected(child) or has_minor(child, minor) is None:
                    continue
                steps.append((e, operation))
                if operation == DELETION:
                    found = search(child, contract, delete | {e})
                else:
                    found = search(child, contract | {e}, delete)
                if found:
                    return True
                steps.pop()
        failed.add(key)
        return False

    if search(matroid, frozenset(), frozenset()):
        recipe = MinorRecipe(
            [e for e, op in steps if op == CONTRACTION],
            [e for e, op in steps if op == DELETION],
        )
        return SplitterSequence(recipe, [e for e, _ in steps])
    logger.warning(
        "No splitter sequence from %r down to %r; the search was exhausted",
        matroid,
        minor,
    )
    return None


#  N-stability
def fresh_label(matroid, stem="p"):
    """A label not used by the matroid."""
    label = stem
    count = 0
    while label in matroid:
        count += 1
        label = "%s%d" % (stem, count)
    return label


def n_stable(matroid, minor, copy=None):
    """
    Whether M is N-stable: for every 2-separation (X, Y) with at most one
    element of the N-minor in X, the part of M on X in the induced 1- or
    2-sum decomposition is binary.

    :param copy: Labels of the N-minor in M; the first minor found is used
        when omitted.
    :return: A pair ``(stable, witness)`` where the witness is the
        :py:class:`SeparationRecord` of a failing separation or None.
    :raises NNotApplicable: when N is binary.
    :raises NoNMinor: when M has no N-minor.
    """
    if is_binary(minor):
        raise NNotApplicable(minor)
    if copy is None:
        copy = minor_ground(matroid, minor)
    copy = frozenset(copy)
    basepoint = fresh_label(matroid)
    for record in separations(matroid, 2):
        for side, other in (
            (record.side_x, record.side_y),
            (record.side_y, record.side_x),
        ):
            if len(side & copy) > 1:
                continue
            part = two_sum_part(matroid, side, basepoint)
            if not is_binary(part):
                logger.debug("Non-binary part on %s", ",".join(sorted(side)))
                return False, SeparationRecord(matroid, side, other, k=2)
    return True, None


def _three_connected_up_to_series_pairs(matroid):
    co, _ = matroid.cosimplify()
    if not is_3connected(co):
        return False
    return all(len(members) <= 2 for members in matroid.series_classes())


def unstable_series_pairs(matroid, e, minor):
    """
    The series pairs S of M\\e for which S u e is a triangle of M that forms
    one side of a 2-separation whose 2-sum part is a U(2,4).

    :raises PreconditionViolated: unless M\\e is 3-connected up to series
        pairs and has an N-minor.
    """
    deleted = matroid.delete(e)
    if not _three_connected_up_to_series_pairs(deleted):
        raise PreconditionViolated(
            "%r is not 3-connected up to series pairs" % deleted
        )
    if has_minor(deleted, minor) is None:
        raise PreconditionViolated("%r has no %r-minor" % (deleted, minor))
    line = uniform(2, 4)
    basepoint = fresh_label(matroid)
    found = []
    for members in deleted.series_classes():
        if len(members) != 2:
            continue
        side = matroid.mask(members) | matroid.mask(e)
        if side not in matroid.circuit_masks():
            continue
        rest = matroid.full_mask & ~side
        if popcount(rest) < 2:
            continue
        if (
            matroid.rank_mask(side) + matroid.rank_mask(rest) - matroid.rank()
            > 1
        ):
            continue
        part = two_sum_part(matroid, matroid.ordered(side), basepoint)
        if isomorphic(part, line) is not None:
            found.append(tuple(members))
    return found
