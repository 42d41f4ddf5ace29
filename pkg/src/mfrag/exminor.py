"""Incriminating sets, companion matrices and the excluded-minor setup.

A setup fixes an excluded-minor candidate M, a minor N, a pair {a, b} with
M\\a,b 3-connected with an N-minor, a basis B of M\\a,b and a pair {x, y} in B
such that {a, b, x, y} incriminates (M, A) for the companion matrix A.
"""

import logging

from mfrag import Error
from mfrag.connectivity import is_3connected, is_connected
from mfrag.constants import (
    INCRIMINATED,
    NONZERO_BUT_DEPENDENT,
    NOT_IN_P,
    REPRESENTS,
    ZERO_BUT_BASIS,
)
from mfrag.matroid import EmptyGroundSet, MatroidException, NotABasis
from mfrag.minors import (
    NNotApplicable,
    NoNMinor,
    element_profile,
    has_minor,
    is_strictly_fragile,
    minor_ground,
    n_stable,
)
from mfrag.pmatrix import LabelMismatch, PMatrixException, scaling_equivalent
from mfrag.serializers import Serializable

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

logger = logging.getLogger(__name__)


#  Exceptions
class ExminorException(Error):
    """Base class for excluded-minor setup exceptions."""

    pass


class PivotNotAllowable(ExminorException):
    def __init__(self, p, q, reason):
        self.p = p
        self.q = q
        self.reason = reason

    def __str__(self):
        return "Pivot on (%s, %s) is not allowable: %s" % (self.p, self.q, self.reason)


class MissingCompanion(ExminorException):
    def __str__(self):
        return "The setup has no companion matrix"


class InvalidSetup(ExminorException):
    def __init__(self, reason):
        self.reason = reason

    def __str__(self):
        return "Invalid setup: %s" % self.reason


class NotRobustNonStrong(ExminorException):
    def __init__(self, z):
        self.z = z

    def __str__(self):
        return "%s is not (N,B)-robust without being (N,B)-strong" % self.z


class DichotomyViolated(ExminorException):
    def __init__(self, message):
        self.message = message

    def __str__(self):
        return self.message


#  Incrimination
class IncriminationCheck(object):
    """A set Z incriminating (M, A), with the reason and det(A[Z])."""

    def __init__(self, labels, reason, det):
        self.labels = frozenset(labels)
        self.reason = reason
        self.det = det

    def to_dict(self):
        return {
            "Z": sorted(self.labels),
            "reason": self.reason,
            "det": str(self.det),
        }

    def __repr__(self):
        return "<IncriminationCheck {%s}: %s>" % (
            ",".join(sorted(self.labels)),
            self.reason,
        )


def _check_indexing(matroid, matrix, basis):
    basis = frozenset(basis)
    if set(matrix.rows) != basis:
        raise LabelMismatch(
            "Rows {%s} differ from the basis {%s}"
            % (",".join(matrix.rows), ",".join(sorted(basis)))
        )
    if set(matrix.cols) != set(matroid.ground) - basis:
        raise LabelMismatch("Columns must be the complement of the basis")
    if not matroid.is_basis(basis):
        raise NotABasis(sorted(basis))
    return matroid.mask(basis)


def _reason(matroid, basis_mask, z_mask, det):
    if not det.is_member():
        return NOT_IN_P
    swapped = basis_mask ^ z_mask
    is_basis = swapped in matroid.basis_masks
    if det.is_zero() and is_basis:
        return ZERO_BUT_BASIS
    if not det.is_zero() and not is_basis:
        return NONZERO_BUT_DEPENDENT
    return None


def incriminates(matroid, matrix, basis, labels):
    """
    Decides whether Z incriminates (M, A).

    :param matrix: A B x (E - B) matrix.
    :param basis: The basis B of M indexing the rows.
    :param labels: The set Z; A[Z] must be square.
    :return: An :py:class:`IncriminationCheck` or None.
    """
    basis_mask = _check_indexing(matroid, matrix, basis)
    det = matrix.subdeterminant(labels)
    reason = _reason(matroid, basis_mask, matroid.mask(labels), det)
    if reason is None:
        return None
    return IncriminationCheck(labels, reason, det)


def incrimination_dichotomy(matroid, matrix, basis):
    """
    Either A is a P-matrix with M = M[I|A], or some Z incriminates (M, A).

    Square selections are scanned by size and then lexicographically; the
    branch found is cross-checked against the other one.

    :return: ``("Represents", None)`` or ``("Incriminated", check)``.
    :raises DichotomyViolated: if both or neither branch holds.
    """
    basis_mask = _check_indexing(matroid, matrix, basis)
    found = None
    for rows, cols in matrix.square_selections():
        labels = [matrix.rows[i] for i in rows] + [matrix.cols[j] for j in cols]
        det = matrix.subdeterminant(labels)
        reason = _reason(matroid, basis_mask, matroid.mask(labels), det)
        if reason is not None:
            found = IncriminationCheck(labels, reason, det)
            break
    represents = matrix.is_pmatrix() and matrix.matroid(check=False) == matroid
    if (found is None) != represents:
        raise DichotomyViolated(
            "Incriminating set %r contradicts representation %s" % (found, represents)
        )
    if found is None:
        return REPRESENTS, None
    return INCRIMINATED, found


def verify_companion(matroid, matrix, a, b, reference, minor_labels, basis):
    """
    Checks the defining conditions of a companion matrix.

    :param matrix: The B x (E - B) matrix A.
    :param reference: The X_N x Y_N matrix D representing N.
    :param minor_labels: The set E_N.
    :return: Dict of condition flags and ``valid``.
    """
    _check_indexing(matroid, matrix, basis)
    for label in (a, b):
        if label not in matrix.cols:
            raise LabelMismatch("%s must label a column" % label)
    flags = {}
    for label, key in ((a, "a"), (b, "b")):
        reduced = matrix.delete([label])
        is_p = reduced.is_pmatrix()
        flags["pmatrix_minus_%s" % key] = is_p
        flags["represents_minus_%s" % key] = (
            is_p and reduced.matroid(check=False) == matroid.delete(label)
        )
    flags["scaling_equivalent"] = (
        scaling_equivalent(matrix.submatrix(minor_labels), reference) is not None
    )
    flags["valid"] = all(flags.values())
    return flags


#  Setup
class SetupContext(Serializable):
    """The excluded-minor setup with cached element data of M\\a,b."""

    default_format = "ctx"

    def __init__(
        self, matroid, minor, a, b, basis, x, y, companion=None, name=None, sources=None
    ):
        """
        Constructor.

        :param matroid: The excluded-minor candidate M.
        :param minor: The matroid N.
        :param a: First element of the deleted pair.
        :param b: Second element of the deleted pair.
        :param basis: A basis B of M\\a,b containing x and y.
        :param companion: Optional B x (E - B) companion matrix.
        :param name: Optional description of where the setup came from.
        :param sources: Optional dict with the file paths or catalog names the
            matroid, minor and companion were read from.
        """
        self.matroid = matroid
        self.minor = minor
        self.a = a
        self.b = b
        self.basis = frozenset(basis)
        self.x = x
        self.y = y
        self.companion = companion
        self.name = name
        self.sources = dict(sources or {})
        self.reduced = matroid.delete((a, b))
        self.cobasis = frozenset(self.reduced.ground) - self.basis
        self._profile = None

    @property
    def profile(self):
        if self._profile is None:
            self._profile = element_profile(self.reduced, self.minor)
        return self._profile

    @property
    def xy(self):
        return frozenset((self.x, self.y))

    def is_robust(self, e):
        entry = self.profile[e]
        return entry["contractible"] if e in self.basis else entry["deletable"]

    def is_strong(self, e):
        entry = self.profile[e]
        return entry["con_strong"] if e in self.basis else entry["del_strong"]

    def is_flexible(self, e):
        entry = self.profile[e]
        return entry["deletable"] and entry["contractible"]

    def strong_outside_xy(self):
        return [
            e for e in self.reduced.ground if e not in self.xy and self.is_strong(e)
        ]

    def possible_strong(self):
        """{u, x, y} for the first strong u outside {x, y}, else {x, y}."""
        strong = self.strong_outside_xy()
        if strong:
            return frozenset((strong[0], self.x, self.y))
        return self.xy

    def minor_copy(self):
        return minor_ground(self.reduced, self.minor)

    def incriminating_set(self):
        return frozenset((self.a, self.b, self.x, self.y))

    def replaced(self, basis, x, y, companion):
        context = SetupContext(
            self.matroid,
            self.minor,
            self.a,
            self.b,
            basis,
            x,
            y,
            companion=companion,
            name=self.name,
        )
        context.sources = {
            key: value for key, value in self.sources.items() if key != "companion"
        }
        return context

    def check(self):
        """
        :raises InvalidSetup: naming the first failing requirement.
        """
        m = self.matroid
        for label in (self.a, self.b, self.x, self.y):
            if label not in m:
                raise InvalidSetup("%s is not an element of M" % label)
        if len({self.a, self.b, self.x, self.y}) != 4:
            raise InvalidSetup("a, b, x and y must be distinct")
        if not self.reduced.is_basis(self.basis):
            raise InvalidSetup("B is not a basis of M\\a,b")
        if self.reduced.rank() != m.rank():
            raise InvalidSetup("M\\a,b has smaller rank than M")
        if not self.xy <= self.basis:
            raise InvalidSetup("x and y must lie in B")
        if not is_3connected(self.reduced):
            raise InvalidSetup("M\\a,b is not 3-connected")
        if has_minor(self.reduced, self.minor) is None:
            raise InvalidSetup("M\\a,b has no N-minor")
        if self.companion is not None:
            check = incriminates(
                m, self.companion, self.basis, self.incriminating_set()
            )
            if check is None:
                raise InvalidSetup("{a,b,x,y} does not incriminate (M,A)")
        return True

    def to_dict(self):
        return {
            "name": self.name,
            "matroid": self.matroid.describe(),
            "minor": self.minor.describe(),
            "pair": [self.a, self.b],
            "basis": sorted(self.basis),
            "xy": [self.x, self.y],
            "companion": self.companion is not None,
        }

    def __repr__(self):
        return "<SetupContext %r: a=%s b=%s x=%s y=%s>" % (
            self.matroid,
            self.a,
            self.b,
            self.x,
            self.y,
        )


def _companion(ctx):
    if ctx.companion is None:
        raise MissingCompanion()
    return ctx.companion


def allowable_pivot(ctx, p, q):
    """
    Pivots the companion matrix on (p, q) when the pivot keeps an
    incriminating quadruple.

    With p in {x, y} the pivot swaps p for q in the quadruple; with p in
    B - {x, y} it needs A_pa = A_pb = 0 or A_xq = A_yq = 0 and leaves the
    quadruple alone. Either way q must lie in B* - {a, b} and A_pq must be
    non-zero.

    :return: The new :py:class:`SetupContext`.
    :raises PivotNotAllowable: naming the failed hypothesis.
    """
    matrix = _companion(ctx)
    if q not in ctx.cobasis:
        raise PivotNotAllowable(p, q, "%s is not in B*-{a,b}" % q)
    if p not in ctx.basis:
        raise PivotNotAllowable(p, q, "%s is not in B" % p)
    if matrix.entry(p, q).is_zero():
        raise PivotNotAllowable(p, q, "A_pq is zero")
    x, y = ctx.x, ctx.y
    if p in ctx.xy:
        if p == x:
            x = q
        else:
            y = q
    else:
        rows_zero = all(matrix.entry(p, j).is_zero() for j in (ctx.a, ctx.b))
        cols_zero = all(matrix.entry(i, q).is_zero() for i in (ctx.x, ctx.y))
        if not (rows_zero or cols_zero):
            raise PivotNotAllowable(
                p, q, "neither A_pa = A_pb = 0 nor A_xq = A_yq = 0"
            )
    pivoted = matrix.pivot(p, q)
    basis = (ctx.basis - {p}) | {q}
    result = ctx.replaced(basis, x, y, pivoted)
    if incriminates(ctx.matroid, pivoted, basis, result.incriminating_set()) is None:
        raise InvalidSetup(
            "{%s} does not incriminate the pivoted matrix"
            % ",".join(sorted(result.incriminating_set()))
        )
    logger.debug("Allowable pivot on (%s, %s): x=%s y=%s", p, q, x, y)
    return result


def bad_submatrix_nonzero(ctx):
    """Whether A_ij is non-zero for i in {x, y} and j in {a, b}."""
    matrix = _companion(ctx)
    return all(
        not matrix.entry(i, j).is_zero()
        for i in (ctx.x, ctx.y)
        for j in (ctx.a, ctx.b)
    )


def check_notrepcert_hypotheses(ctx, core, middle, first, second):
    """
    Evaluates the hypotheses of the non-representability certificate on the
    minors M_B[S] = M/(B - S)\\(B* - S).

    :param core: The set C, where M_B[C] should be strictly N-fragile.
    :param middle: The set Z.
    :param first: The set Z1.
    :param second: The set Z2.
    :return: Dict with flags ``fragile_C`` and ``i`` to ``vi``; ``vi`` is None
        without a companion matrix, ``iv`` and ``v`` are None for binary N.
    """
    m = ctx.matroid
    basis = sorted(ctx.basis)
    core, middle, first, second = (
        frozenset(s) for s in (core, middle, first, second)
    )
    for labels in (core, middle, first, second):
        m.mask(labels)

    def part(labels):
        try:
            return m.minor_B(basis, labels)
        except EmptyGroundSet:
            return None

    def stable(labels):
        minor = part(labels)
        if minor is None:
            return False
        try:
            return n_stable(minor, ctx.minor)[0]
        except NNotApplicable:
            return None
        except NoNMinor:
            return False

    flags = {}
    core_minor = part(core)
    flags["fragile_C"] = core_minor is not None and is_strictly_fragile(
        core_minor, ctx.minor
    )
    flags["i"] = (
        ctx.a in first - second and ctx.b in second - first
    )
    flags["ii"] = core | ctx.xy <= middle <= first & second
    middle_minor = part(middle)
    flags["iii"] = middle_minor is not None and is_connected(middle_minor)
    flags["iv"] = stable(first)
    flags["v"] = stable(second)
    if ctx.companion is None:
        flags["vi"] = None
    else:
        union = first | second
        union_minor = part(union)
        restricted = ctx.companion.submatrix(union)
        try:
            flags["vi"] = union_minor is not None and (
                incriminates(
                    union_minor,
                    restricted,
                    restricted.rows,
                    ctx.incriminating_set(),
                )
                is not None
            )
        except (PMatrixException, MatroidException) as exc:
            logger.debug("Restricted incrimination check failed: %s", exc)
            flags["vi"] = False
    return flags
