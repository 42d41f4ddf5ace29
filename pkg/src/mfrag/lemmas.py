"""Exhaustive verifiers for structural lemmas on 3-connected matroids.

A verifier is a generator registered under a lemma id with :py:func:`verifier`.
Given a matroid (and a minor N for lemmas about keeping an N-minor) it yields
one ``(witness, holds)`` pair per instance of the lemma's hypothesis, where
the witness is a JSON-friendly dict naming the elements and sets involved.
:py:func:`verify` runs a verifier over a corpus and collects the failures.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

from mfrag import Error
from mfrag.catalog import mk4, uniform
from mfrag.connectivity import (
    FanRecord,
    HypothesisFailed,
    NoVerticalSeparation,
    fan_end_kind,
    fans,
    is_3connected,
    is_connected,
    is_z_closed,
    path_of_3seps,
    separations,
    vertical_3seps_through,
    z_closed_separation,
)
from mfrag.constants import SPOKE
from mfrag.isomorphism import is_isomorphic
from mfrag.matroid import EmptyGroundSet, bits, popcount, set_key, submasks
from mfrag.minors import element_profile, has_minor, minor_ground

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

logger = logging.getLogger(__name__)


#  Exceptions
class LemmaException(Error):
    pass


class UnknownLemma(LemmaException):
    def __init__(self, name):
        self.name = name

    def __str__(self):
        return "Unknown lemma %r; known lemmas: %s" % (
            self.name,
            ", ".join(lemma_ids()),
        )


#  Registry
class Verifier(object):
    """A registered lemma verifier."""

    def __init__(self, name, function, needs_minor=False, min_size=4):
        self.name = name
        self.function = function
        self.needs_minor = needs_minor
        self.min_size = min_size

    @property
    def description(self):
        doc = self.function.__doc__ or ""
        return " ".join(doc.split())

    def applies_to(self, matroid):
        return matroid.size >= self.min_size and is_3connected(matroid)

    def __call__(self, matroid, minor=None):
        return self.function(matroid, minor)

    def __repr__(self):
        return "<Verifier: %s>" % self.name


_VERIFIERS = {}


def verifier(name, needs_minor=False, min_size=4):
    """
    Registers a verifier under a lemma id.

    :param needs_minor: The lemma quantifies over an N-minor of the matroid.
    :param min_size: Smaller matroids are skipped.
    """

    def register(function):
        _VERIFIERS[name] = Verifier(name, function, needs_minor, min_size)
        return function

    return register


def lemma_ids():
    return sorted(_VERIFIERS)


def get_verifier(name):
    try:
        return _VERIFIERS[name]
    except KeyError:
        raise UnknownLemma(name)


def default_minors():
    """The minors N used by the N-minor lemmas when none are given."""
    return [uniform(2, 4), mk4()]


#  Helpers
def _si(matroid):
    return matroid.simplify()[0]


def _co(matroid):
    return matroid.cosimplify()[0]


def _lam(matroid, mask):
    return (
        matroid.rank_mask(mask)
        + matroid.rank_mask(matroid.full_mask & ~mask)
        - matroid.rank()
    )


def _in_cl(matroid, mask, i):
    return matroid.rank_mask(mask | 1 << i) == matroid.rank_mask(mask)


def _in_clstar(matroid, mask, i):
    return matroid.corank_mask(mask | 1 << i) == matroid.corank_mask(mask)


def _names(matroid, mask):
    return list(matroid.ordered(mask))


def _minor_name(minor):
    return minor.name or repr(minor)


#  Closure and connectivity calculus
@verifier("orthogonality", min_size=1)
def orthogonality(matroid, minor=None):
    """For a partition (X, {e}, Y): e is in cl(X) exactly when e is not in
    cl*(Y)."""
    full = matroid.full_mask
    for e in range(matroid.size):
        rest = full & ~(1 << e)
        for x in submasks(rest):
            y = rest & ~x
            in_cl = _in_cl(matroid, x, e)
            in_clstar = _in_clstar(matroid, y, e)
            yield {
                "e": matroid.ground[e],
                "X": _names(matroid, x),
                "in_cl_X": in_cl,
                "in_clstar_Y": in_clstar,
            }, in_cl != in_clstar


@verifier("calc1")
def calc1(matroid, minor=None):
    """X exactly 3-separating and e outside X: X u e is 3-separating exactly
    when e is in cl(X) or cl*(X)."""
    full = matroid.full_mask
    for x in range(1, full):
        if _lam(matroid, x) != 2 or popcount(full & ~x) < 2:
            continue
        for e in bits(full & ~x):
            grown = x | 1 << e
            separating = _lam(matroid, grown) <= 2
            closure = _in_cl(matroid, x, e) or _in_clstar(matroid, x, e)
            yield {
                "X": _names(matroid, x),
                "e": matroid.ground[e],
                "separating": separating,
            }, separating == closure


@verifier("calc2")
def calc2(matroid, minor=None):
    """(X, Y) exactly 3-separating with |X| >= 3 and x in X: x is in cl(X - x)
    or cl*(X - x), and (X - x, Y u x) is exactly 3-separating exactly when x
    lies in one of the guts and the coguts."""
    full = matroid.full_mask
    for x in range(1, full):
        if popcount(x) < 3 or _lam(matroid, x) != 2:
            continue
        y = full & ~x
        for i in bits(x):
            smaller = x & ~(1 << i)
            in_cl = _in_cl(matroid, smaller, i)
            in_clstar = _in_clstar(matroid, smaller, i)
            guts = in_cl and _in_cl(matroid, y, i)
            coguts = in_clstar and _in_clstar(matroid, y, i)
            exact = _lam(matroid, smaller) == 2
            yield {
                "X": _names(matroid, x),
                "x": matroid.ground[i],
                "guts": guts,
                "coguts": coguts,
                "exact": exact,
            }, (in_cl or in_clstar) and exact == (guts != coguts)


@verifier("gutspluscoguts1")
def guts_plus_coguts(matroid, minor=None):
    """A 3-separation (X, Y) whose side X meets both cl(Y) and cl*(Y) meets
    each of them in exactly one element."""
    for record in separations(matroid, 3):
        for x_side, y_side in (
            (record.side_x, record.side_y),
            (record.side_y, record.side_x),
        ):
            x = matroid.mask(x_side)
            y = matroid.mask(y_side)
            guts = x & matroid.closure_mask(y)
            coguts = x & matroid.coclosure_mask(y)
            if not guts or not coguts:
                continue
            yield {
                "X": _names(matroid, x),
                "guts": _names(matroid, guts),
                "coguts": _names(matroid, coguts),
            }, popcount(guts) == 1 and popcount(coguts) == 1


@verifier("uncrossing")
def uncrossing(matroid, minor=None):
    """X, Y 3-separating: X u Y is 3-separating when |X n Y| >= 2, and X n Y
    is 3-separating when |E - (X u Y)| >= 2."""
    full = matroid.full_mask
    table = [_lam(matroid, mask) for mask in range(full + 1)]
    separating = [m for m in range(1, full) if table[m] <= 2]
    for first, second in combinations(separating, 2):
        meet = first & second
        join = first | second
        if popcount(meet) >= 2:
            yield {
                "X": _names(matroid, first),
                "Y": _names(matroid, second),
                "case": "union",
            }, table[join] <= 2
        if popcount(full & ~join) >= 2:
            yield {
                "X": _names(matroid, first),
                "Y": _names(matroid, second),
                "case": "intersection",
            }, table[meet] <= 2


#  Removing single elements
@verifier("bixby")
def bixby(matroid, minor=None):
    """si(M/e) or co(M\\e) is 3-connected."""
    for e in matroid.ground:
        si_ok = is_3connected(_si(matroid.contract(e)))
        co_ok = is_3connected(_co(matroid.delete(e)))
        yield {"e": e, "si_3connected": si_ok, "co_3connected": co_ok}, (
            si_ok or co_ok
        )


@verifier("existsv3sep")
def exists_vertical_3sep(matroid, minor=None):
    """si(M/e) is not 3-connected exactly when M has a vertical 3-separation
    (X, e, Y)."""
    for e in matroid.ground:
        si_ok = is_3connected(_si(matroid.contract(e)))
        records = vertical_3seps_through(matroid, e)
        witness = {"e": e, "si_3connected": si_ok, "vertical": len(records)}
        if records:
            witness["separation"] = records[0].to_dict()
        yield witness, si_ok != bool(records)


@verifier("longline3conn")
def long_line(matroid, minor=None):
    """M\\x is 3-connected for every x in a rank-2 set of at least four
    elements."""
    lines = set()
    for i, j in combinations(range(matroid.size), 2):
        flat = matroid.closure_mask(1 << i | 1 << j)
        if popcount(flat) >= 4:
            lines.add(flat)
    for flat in sorted(lines, key=set_key):
        for i in bits(flat):
            e = matroid.ground[i]
            yield {"X": _names(matroid, flat), "x": e}, is_3connected(
                matroid.delete(e)
            )


def _cosimple_3connected_deletions(matroid):
    line = uniform(1, 3)
    for u in matroid.ground:
        deleted = matroid.delete(u)
        co = _co(deleted)
        if is_3connected(co):
            yield u, deleted, is_isomorphic(co, line)


@verifier("seriesindependent")
def series_independent(matroid, minor=None):
    """co(M\\u) 3-connected: two distinct series classes of M\\u have an
    independent union unless co(M\\u) is U(1,3)."""
    for u, deleted, is_u13 in _cosimple_3connected_deletions(matroid):
        classes = [s for s in deleted.series_classes() if len(s) >= 2]
        for first, second in combinations(classes, 2):
            union = set(first) | set(second)
            independent = deleted.is_independent(union)
            yield {
                "u": u,
                "S": sorted(first),
                "S_prime": sorted(second),
                "independent": independent,
                "co_is_U13": is_u13,
            }, independent or is_u13


@verifier("seriesnotbasisstrong")
def series_not_basis_strong(matroid, minor=None):
    """co(M\\u) 3-connected and not U(1,3), S a non-trivial series class of
    M\\u containing s with si(M/s) not 3-connected: |S| = 2, M\\u has exactly
    two non-trivial series classes, and some s' in S - s has si(M/s')
    3-connected."""
    cache = {}

    def si_3connected(s):
        if s not in cache:
            cache[s] = is_3connected(_si(matroid.contract(s)))
        return cache[s]

    for u, deleted, is_u13 in _cosimple_3connected_deletions(matroid):
        if is_u13:
            continue
        classes = [s for s in deleted.series_classes() if len(s) >= 2]
        for members in classes:
            bad = [s for s in members if not si_3connected(s)]
            if not bad:
                continue
            partner = all(
                any(si_3connected(t) for t in members if t != s) for s in bad
            )
            yield {
                "u": u,
                "S": sorted(members),
                "not_3connected": sorted(bad),
                "nontrivial_classes": len(classes),
            }, len(members) == 2 and len(classes) == 2 and partner


@verifier("keepingN")
def keeping_connected(matroid, minor=None):
    """si(M/e) 3-connected and f != e: M/e\\f is connected, or si(M/e) is
    U(2,3) and no triangle contains {e, f}; M/e/f is connected when f is in
    no non-trivial parallel class of M/e."""
    line = uniform(2, 3)
    triangles = set(matroid.triangle_masks())
    for e in matroid.ground:
        contracted = matroid.contract(e)
        if not is_3connected(_si(contracted)):
            continue
        is_line = is_isomorphic(_si(contracted), line)
        parallel = set()
        for members in contracted.parallel_classes():
            if len(members) >= 2:
                parallel.update(members)
        for f in matroid.ground:
            if f == e:
                continue
            pair = matroid.mask((e, f))
            in_triangle = any(t & pair == pair for t in triangles)
            deleted_ok = is_connected(contracted.delete(f))
            holds = deleted_ok or (is_line and not in_triangle)
            witness = {"e": e, "f": f, "deletion_connected": deleted_ok}
            if f not in parallel:
                both_ok = is_connected(contracted.contract(f))
                witness["contraction_connected"] = both_ok
                holds = holds and both_ok
            yield witness, holds


@verifier("f2f3")
def fan_pair_isomorphism(matroid, minor=None):
    """If {f1, f2, f3} is the only triangle containing f3 and {f2, f3, f4} the
    only triad containing f2, then si(M/f3) is isomorphic to co(M\\f2)."""
    triangles = matroid.triangle_masks()
    triads = matroid.triad_masks()
    for i3 in range(matroid.size):
        around = [t for t in triangles if t >> i3 & 1]
        if len(around) != 1:
            continue
        triangle = around[0]
        for i2 in bits(triangle & ~(1 << i3)):
            meeting = [t for t in triads if t >> i2 & 1]
            if len(meeting) != 1 or not meeting[0] >> i3 & 1:
                continue
            triad = meeting[0]
            (i1,) = bits(triangle & ~(1 << i2) & ~(1 << i3))
            (i4,) = bits(triad & ~(1 << i2) & ~(1 << i3))
            if i1 == i4:
                continue
            f2 = matroid.ground[i2]
            f3 = matroid.ground[i3]
            holds = is_isomorphic(_si(matroid.contract(f3)), _co(matroid.delete(f2)))
            yield {
                "ordering": [matroid.ground[i] for i in (i1, i2, i3, i4)],
            }, holds


@verifier("fanends")
def fan_ends(matroid, minor=None):
    """|E| >= 7 and f an end of a fan with at least four elements: a spoke end
    has co(M\\f) but not si(M/f) 3-connected, a rim end the reverse."""
    if matroid.size < 7:
        return
    seen = set()
    for fan in fans(matroid):
        ordering = fan.ordering
        for start in range(len(ordering)):
            for stop in range(start + 4, len(ordering) + 1):
                window = ordering[start:stop]
                for f in (window[0], window[-1]):
                    if (window, f) in seen or (window[::-1], f) in seen:
                        continue
                    seen.add((window, f))
                    kind = fan_end_kind(matroid, FanRecord(matroid, window), f)
                    si_ok = is_3connected(_si(matroid.contract(f)))
                    co_ok = is_3connected(_co(matroid.delete(f)))
                    if kind == SPOKE:
                        holds = co_ok and not si_ok
                    else:
                        holds = si_ok and not co_ok
                    yield {"fan": list(window), "f": f, "kind": kind}, holds


@verifier("triadin4circuit")
def triad_in_4circuit(matroid, minor=None):
    """A triad {a, b, c} inside a 4-element circuit {a, b, c, d}: co(M\\a) or
    co(M\\c) is 3-connected, or {a, a', b} and {b, c, c'} are triangles, or
    {a, b, c, f} is a cosegment."""
    circuits = [c for c in matroid.circuit_masks() if popcount(c) == 4]
    triangles = set(matroid.triangle_masks())
    cosimple = {}

    def co_3connected(e):
        if e not in cosimple:
            cosimple[e] = is_3connected(_co(matroid.delete(e)))
        return cosimple[e]

    def in_triangle(pair):
        return any(t & pair == pair for t in triangles)

    for triad in matroid.triad_masks():
        cosegment = [
            f
            for f in bits(matroid.full_mask & ~triad)
            if matroid.is_cosegment(_names(matroid, triad | 1 << f))
        ]
        for circuit in sorted(circuits, key=set_key):
            if circuit & triad != triad:
                continue
            members = list(bits(triad))
            for ib in members:
                ia, ic = [i for i in members if i != ib]
                a, b, c = (matroid.ground[i] for i in (ia, ib, ic))
                first = co_3connected(a) or co_3connected(c)
                second = in_triangle(1 << ia | 1 << ib) and in_triangle(
                    1 << ib | 1 << ic
                )
                yield {
                    "triad": [a, b, c],
                    "d": matroid.ground[list(bits(circuit & ~triad))[0]],
                    "co_3connected": first,
                    "triangles": second,
                    "cosegment": [matroid.ground[f] for f in cosegment],
                }, first or second or bool(cosegment)


#  Paths of 3-separations
def _has_isolating_split(matroid, a, z, i):
    zm = 1 << i
    for sub in submasks(z & ~zm):
        if _lam(matroid, a | sub) <= 2 and _lam(matroid, a | sub | zm) <= 2:
            return True
    return False


@verifier("pathgenerator")
def path_generator(matroid, minor=None):
    """A partition (A, Z, B) with |A|, |B| >= 2 in which every z in Z sits in a
    path (A', {z}, B') of 3-separations with A in A' and B in B' orders into a
    path (A, z1, ..., zn, B) of 3-separations. Checked for |Z| in {2, 3}."""
    full = matroid.full_mask
    n = matroid.size
    for size in (2, 3):
        for combo in combinations(range(n), size):
            z = sum(1 << i for i in combo)
            rest = full & ~z
            low = rest & -rest
            for a in submasks(rest):
                b = rest & ~a
                if not a & low or popcount(a) < 2 or popcount(b) < 2:
                    continue
                if not all(_has_isolating_split(matroid, a, z, i) for i in combo):
                    continue
                witness = {
                    "A": _names(matroid, a),
                    "Z": _names(matroid, z),
                    "B": _names(matroid, b),
                }
                try:
                    path = path_of_3seps(
                        matroid,
                        matroid.labels(a),
                        matroid.labels(z),
                        matroid.labels(b),
                    )
                except HypothesisFailed as exc:
                    witness["failed_at"] = exc.z
                    yield witness, False
                    continue
                yield witness, all(value <= 2 for value in path.prefix_lambdas())


#  Keeping an N-minor
def _removals(matroid):
    for e in matroid.ground:
        yield e, "contract", matroid.contract(e)
        yield e, "delete", matroid.delete(e)


@verifier("sicominor", needs_minor=True)
def simplification_keeps_minor(matroid, minor):
    """M/e with an N-minor gives si(M/e) an N-minor; M\\e with an N-minor gives
    co(M\\e) one."""
    for e, operation, removed in _removals(matroid):
        if has_minor(removed, minor) is None:
            continue
        reduced = _si(removed) if operation == "contract" else _co(removed)
        yield {"e": e, "operation": operation, "N": _minor_name(minor)}, (
            has_minor(reduced, minor) is not None
        )


def _single_removal(matroid, label, operation):
    try:
        if operation == "contract":
            return matroid.contract(label)
        return matroid.delete(label)
    except EmptyGroundSet:
        return None


@verifier("cplminorlemma", needs_minor=True)
def two_separation_keeps_minor(matroid, minor):
    """For Q = M\\e or M/e connected with an N-minor and a 2-separation (X, Y)
    of Q: some side S meets the N-minor at most once, and every s in S keeps
    an N-minor under each single removal that leaves Q connected."""
    for e, operation, q in _removals(matroid):
        if not is_connected(q) or has_minor(q, minor) is None:
            continue
        copy = minor_ground(q, minor)
        keeps = {}

        def keeps_minor(s, op):
            if (s, op) not in keeps:
                removed = _single_removal(q, s, op)
                if removed is None or not is_connected(removed):
                    keeps[(s, op)] = None
                else:
                    keeps[(s, op)] = has_minor(removed, minor) is not None
            return keeps[(s, op)]

        for record in separations(q, 2):
            sides = [
                side for side in (record.side_x, record.side_y) if len(side & copy) <= 1
            ]
            witness = {
                "e": e,
                "operation": operation,
                "N": _minor_name(minor),
                "X": sorted(record.side_x),
                "Y": sorted(record.side_y),
            }
            if not sides:
                yield witness, False
                continue
            failures = [
                [s, op]
                for side in sides
                for s in sorted(side)
                for op in ("contract", "delete")
                if keeps_minor(s, op) is False
            ]
            witness["failures"] = failures
            yield witness, not failures


@verifier("CPL2", needs_minor=True)
def vertical_separation_minor(matroid, minor):
    """For a vertical 3-separation (X, z, Y) with an N-minor of M/z meeting X
    at most once: when Y u z is closed every element of X is N-contractible,
    otherwise every element of X - cl(Y) is; at most one element x of X is not
    N-deletable, and it sits in the coguts with z spanned by the rest of X."""
    profile = element_profile(matroid, minor)
    for z in matroid.ground:
        contracted = matroid.contract(z)
        zm = matroid.mask(z)
        for record in vertical_3seps_through(matroid, z):
            for x_side, y_side in (
                (record.side_x, record.side_y),
                (record.side_y, record.side_x),
            ):
                recipe = has_minor(
                    contracted,
                    minor,
                    accept=lambda r, side=x_side: len(side - r.removed()) <= 1,
                )
                if recipe is None:
                    continue
                x = matroid.mask(x_side)
                y = matroid.mask(y_side)
                closed = matroid.closure_mask(y | zm) == y | zm
                span = matroid.closure_mask(y)
                must_contract = x if closed else x & ~span
                not_contractible = [
                    e
                    for e in matroid.ordered(must_contract)
                    if not profile[e]["contractible"]
                ]
                not_deletable = [
                    i for i in bits(x) if not profile[matroid.ground[i]]["deletable"]
                ]
                holds = not not_contractible and len(not_deletable) <= 1
                for i in not_deletable:
                    bit = 1 << i
                    if closed:
                        holds = (
                            holds
                            and _in_clstar(matroid, y, i)
                            and _in_cl(matroid, x & ~bit, matroid.index(z))
                        )
                    else:
                        coguts = matroid.coclosure_mask(span) & ~span
                        holds = (
                            holds
                            and bool(coguts & bit)
                            and _in_cl(matroid, x & ~span & ~bit, matroid.index(z))
                        )
                yield {
                    "X": sorted(x_side),
                    "z": z,
                    "Y": sorted(y_side),
                    "N": _minor_name(minor),
                    "closed": closed,
                    "not_contractible": not_contractible,
                    "not_deletable": [matroid.ground[i] for i in not_deletable],
                }, holds


@verifier("existszclosed", needs_minor=True)
def exists_z_closed(matroid, minor):
    """z with M/z keeping an N-minor and si(M/z) not 3-connected has a
    vertical 3-separation (X, z, Y) with Y z-closed and meeting the N-minor
    at most once."""
    for z in matroid.ground:
        contracted = matroid.contract(z)
        recipe = has_minor(contracted, minor)
        if recipe is None or is_3connected(_si(contracted)):
            continue
        copy = minor_ground(contracted, minor, recipe)
        witness = {"z": z, "N": _minor_name(minor)}
        try:
            record = z_closed_separation(matroid, z, copy)
        except NoVerticalSeparation:
            yield witness, False
            continue
        witness["separation"] = record.to_dict()
        yield witness, (
            record.vertical
            and is_z_closed(matroid, z, record.side_y)
            and len(record.side_y & copy) <= 1
        )


#  Running verifiers
class LemmaResult(object):
    """Outcome of one verifier on one instance."""

    def __init__(
        self, lemma, instance, minor=None, checked=0, failures=None, skipped=False
    ):
        self.lemma = lemma
        self.instance = instance
        self.minor = minor
        self.checked = checked
        self.failures = list(failures or [])
        self.skipped = skipped

    @property
    def passed(self):
        return not self.failures

    def to_dict(self):
        return {
            "lemma": self.lemma,
            "instance": self.instance,
            "minor": self.minor,
            "checked": self.checked,
            "skipped": self.skipped,
            "passed": self.passed,
            "failures": self.failures,
        }

    def __repr__(self):
        return "<LemmaResult %s on %s: %d checked, %d failed>" % (
            self.lemma,
            self.instance.get("name") or self.instance.get("digest"),
            self.checked,
            len(self.failures),
        )


def check_instance(name, matroid, minor=None):
    """
    Runs a verifier on a single matroid.

    :param name: The lemma id.
    :param minor: The minor N for lemmas about N-minors.
    :return: A :py:class:`LemmaResult`; instances outside the lemma's
        hypothesis (too small, not 3-connected, no N-minor) are skipped.
    """
    v = get_verifier(name)
    result = LemmaResult(
        name, matroid.describe(), _minor_name(minor) if minor is not None else None
    )
    if not v.applies_to(matroid):
        result.skipped = True
        return result
    if v.needs_minor and has_minor(matroid, minor) is None:
        result.skipped = True
        return result
    for witness, holds in v(matroid, minor):
        result.checked += 1
        if not holds:
            logger.warning("%s fails on %r: %r", name, matroid, witness)
            result.failures.append(witness)
    logger.debug("%r", result)
    return result


def _check_task(task):
    return check_instance(*task)


def verify(name, matroids, minors=None, jobs=1):
    """
    Runs a verifier over a corpus.

    :param matroids: Iterable of matroids.
    :param minors: Minors N for the N-minor lemmas; :py:func:`default_minors`
        when omitted.
    :param jobs: Worker processes; results keep the corpus order.
    :return: A list of :py:class:`LemmaResult`.
    """
    v = get_verifier(name)
    if v.needs_minor:
        minors = list(minors) if minors is not None else default_minors()
        tasks = [(name, m, n) for m in matroids for n in minors]
    else:
        tasks = [(name, m, None) for m in matroids]
    logger.info("Verifying %s on %d instances with %d jobs", name, len(tasks), jobs)
    if jobs <= 1 or len(tasks) <= 1:
        return [_check_task(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(_check_task, tasks))
