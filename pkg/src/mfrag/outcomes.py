"""Structure found in an excluded-minor setup: confining sets, audits of
strong elements, good separations and the outcome classifiers."""

import logging
from itertools import combinations

from mfrag.connectivity import (
    FanRecord,
    NotAFan,
    SeparationRecord,
    is_3connected,
    is_fan,
    fan_type,
    z_closed_separation,
)
from mfrag.constants import FAN_TYPE_II, RANK_SLACK, SIZE_SLACK
from mfrag.exminor import InvalidSetup, NotRobustNonStrong, bad_submatrix_nonzero
from mfrag.matroid import EmptyGroundSet, bits, popcount, set_key
from mfrag.minors import (
    NoBasisMeetsConstraints,
    PreconditionViolated,
    element_profile,
    has_minor,
    is_fragile,
    minor_ground,
    robust_bases,
    unstable_series_pairs,
)
from mfrag.operations import wye_delta

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

logger = logging.getLogger(__name__)


#  Confining sets
class ConfiningSet(object):
    """A union G of two triads T and T' of M\\a,b confining {x, y}."""

    def __init__(self, labels, first, second, strong_witness=None):
        self.labels = frozenset(labels)
        self.first = frozenset(first)
        self.second = frozenset(second)
        self.overlap = len(self.first & self.second)
        self.strong_witness = strong_witness

    def to_dict(self):
        return {
            "G": sorted(self.labels),
            "T": sorted(self.first),
            "T'": sorted(self.second),
            "overlap": self.overlap,
            "strong_witness": self.strong_witness,
        }

    def __repr__(self):
        return "<ConfiningSet {%s} overlap=%d>" % (
            ",".join(sorted(self.labels)),
            self.overlap,
        )


def confining_sets(ctx):
    """
    All confining sets G = T u T' of M\\a,b.

    G must meet B in exactly {x, y}, lie in the coclosure of G - B, and when
    the triads share a single element G - B must contain a strong element.
    The first pair of triads in sorted order is kept as evidence for each G.
    """
    m = ctx.reduced
    basis = m.mask(ctx.basis)
    xy = m.mask(ctx.xy)
    triads = sorted(m.triad_masks(), key=set_key)
    found = {}
    for t1, t2 in combinations(triads, 2):
        overlap = popcount(t1 & t2)
        if overlap not in (1, 2):
            continue
        g = t1 | t2
        if g in found or g & basis != xy:
            continue
        outside = g & ~basis
        if m.coclosure_mask(outside) & g != g:
            continue
        witness = None
        for i in bits(outside):
            if ctx.is_strong(m.ground[i]):
                witness = m.ground[i]
                break
        if overlap == 1 and witness is None:
            continue
        found[g] = ConfiningSet(m.labels(g), m.labels(t1), m.labels(t2), witness)
        if overlap == 2 and not m.is_cosegment(m.labels(g)):
            logger.warning("Confining set %r is not a cosegment", found[g])
    return [found[g] for g in sorted(found, key=set_key)]


#  Strong-element audit
def _cosegments_through(matroid, u):
    """Cosegments with at least four elements containing u."""
    um = matroid.mask(u)
    others = matroid.full_mask & ~um
    result = []
    triads = matroid.cocircuit_masks()
    for rest in range(others + 1):
        if rest & ~others or popcount(rest) < 3:
            continue
        mask = rest | um
        if matroid.corank_mask(mask) != 2:
            continue
        if all(
            sum(1 << i for i in combo) in triads
            for combo in combinations(bits(mask), 3)
        ):
            result.append(mask)
    return result


def strong_element_audit(ctx):
    """
    Checks what a valid setup forces on the (N,B)-strong elements of
    M\\a,b outside {x, y}.

    :return: Dict with the strong elements, one entry per check (``passed``
        and violation ``detail``) and an overall ``passed``.
    :raises InvalidSetup: when the companion matrix has a zero in the bad
        submatrix.
    """
    if ctx.companion is not None and not bad_submatrix_nonzero(ctx):
        raise InvalidSetup("the bad submatrix has a zero entry")
    m = ctx.reduced
    strong = ctx.strong_outside_xy()
    checks = {}

    in_basis = [u for u in strong if u in ctx.basis]
    checks["nostrongbasis"] = {"passed": not in_basis, "detail": in_basis}
    checks["atmost2outxy"] = {"passed": len(strong) <= 2, "detail": strong}

    long_lines = []
    for u in strong:
        for mask in _cosegments_through(m, u):
            labels = m.labels(mask)
            if len(labels) != 4 or labels & ctx.basis != ctx.xy:
                long_lines.append(sorted(labels))
    checks["nostronglongline"] = {"passed": not long_lines, "detail": long_lines}

    all_strong = {e for e in m.ground if ctx.is_strong(e)}
    outside = []
    for combo in combinations(m.ground, 4):
        labels = frozenset(combo)
        if labels & ctx.basis != ctx.xy or not m.is_cosegment(combo):
            continue
        extra = sorted(all_strong - labels)
        if extra:
            outside.append({"C": sorted(labels), "strong": extra})
    checks["cosegstrongbound"] = {"passed": not outside, "detail": outside}

    meeting = []
    for u in strong:
        for e, other in ((ctx.a, ctx.b), (ctx.b, ctx.a)):
            try:
                pairs = unstable_series_pairs(
                    ctx.matroid.delete((u, other)), e, ctx.minor
                )
            except (PreconditionViolated, EmptyGroundSet):
                continue
            for pair in pairs:
                if not set(pair) & ctx.basis <= ctx.xy:
                    meeting.append({"u": u, "S": sorted(pair)})
    checks["unstablemeetsxy"] = {"passed": not meeting, "detail": meeting}

    passed = all(check["passed"] for check in checks.values())
    if not passed:
        logger.warning(
            "Strong-element audit failed for %r: %s",
            ctx,
            ",".join(name for name, c in sorted(checks.items()) if not c["passed"]),
        )
    return {"strong": strong, "checks": checks, "passed": passed}


#  Good separations
class GoodSeparation(SeparationRecord):
    """
    A z-closed vertical 3-separation (X, {z}, Y) after trimming.

    ``dual`` is set when the separation lives in the dual of M\\a,b, which
    is the case for z outside B.
    """

    def __init__(
        self, matroid, side_x, side_y, z, trimmed, untrimmed, possible_strong, dual
    ):
        SeparationRecord.__init__(self, matroid, side_x, side_y, z=z)
        self.trimmed = trimmed
        self.untrimmed = frozenset(untrimmed)
        self.possible_strong = frozenset(possible_strong)
        self.dual = dual

    @property
    def strong_in_y(self):
        return self.possible_strong <= self.side_y

    def to_dict(self):
        result = SeparationRecord.to_dict(self)
        result.update(
            {
                "trimmed": self.trimmed,
                "untrimmed_Y": sorted(self.untrimmed),
                "S'": sorted(self.possible_strong),
                "S'_in_Y": self.strong_in_y,
                "dual": self.dual,
            }
        )
        return result


def good_separation(ctx, z):
    """
    The good separation for an (N,B)-robust element z that is not
    (N,B)-strong.

    :raises NotRobustNonStrong: when z is strong or not robust.
    :raises NoVerticalSeparation: when no z-closed side exists.
    :raises InvalidSetup: when more than one element would need trimming or
        the trimmed separation is not vertical, leaves part of S' outside Y,
        meets N twice in Y or keeps a non-flexible element of Y - S'.
    """
    if z not in ctx.reduced or not ctx.is_robust(z) or ctx.is_strong(z):
        raise NotRobustNonStrong(z)
    dual = z not in ctx.basis
    if dual:
        w = ctx.reduced.dual()
        n = ctx.minor.dual()
    else:
        w = ctx.reduced
        n = ctx.minor
    copy = minor_ground(w.contract(z), n)
    record = z_closed_separation(w, z, copy)
    possible = ctx.possible_strong()
    y = record.side_y
    candidates = sorted(
        (e for e in y - possible if not ctx.is_flexible(e)), key=w.index
    )
    if len(candidates) > 1:
        raise InvalidSetup(
            "more than one non-flexible element outside S' in Y: %s"
            % ",".join(candidates)
        )
    trimmed = candidates[0] if candidates else None
    x = record.side_x
    if trimmed is not None:
        x = x | {trimmed}
        y = y - {trimmed}
    result = GoodSeparation(w, x, y, z, trimmed, record.side_y, possible, dual)
    unmet = []
    if not result.vertical or result.lambda_value > 2:
        unmet.append("vertical 3-separation")
    if not result.strong_in_y:
        unmet.append("S' inside Y")
    if len(result.side_y & copy) > 1:
        unmet.append("at most one element of N in Y")
    if not all(ctx.is_flexible(e) for e in result.side_y - possible):
        unmet.append("Y - S' flexible")
    if unmet:
        logger.debug("Separation %r for %s fails: %s", result, z, unmet)
        raise InvalidSetup(
            "separation for %s is not good: %s" % (z, ", ".join(unmet))
        )
    return result


#  Outcome classification
class OutcomeVerdict(object):
    """Flags of the outcomes of one theorem with their evidence."""

    def __init__(self, theorem, flags, evidence, instance=None):
        self.theorem = theorem
        self.flags = dict(flags)
        self.evidence = dict(evidence)
        self.instance = instance

    @property
    def holds(self):
        return sorted(name for name, value in self.flags.items() if value)

    def to_dict(self):
        return {
            "theorem": self.theorem,
            "flags": dict(self.flags),
            "holds": self.holds,
            "evidence": self.evidence,
            "instance": self.instance,
        }

    def __repr__(self):
        return "<OutcomeVerdict %s: %s>" % (self.theorem, ",".join(self.holds))


def _cocircuit_clause(m, a, b, x, y, z):
    """The p in {a, b} with {p, x, y} a triangle inside the cocircuit
    {a, b, x, y, z} of M, or None."""
    cocircuit = m.mask((a, b, x, y, z))
    if popcount(cocircuit) != 5 or cocircuit not in m.cocircuit_masks():
        return None
    circuits = m.circuit_masks()
    for p in (a, b):
        if m.mask((p, x, y)) in circuits:
            return p
    return None


def _fragile_clause(reduced, candidate, x, y):
    """Outcome (b)(i) on one robust basis; returns evidence or None."""
    cobasis = set(reduced.ground) - candidate.basis
    robust = sorted(candidate.robust & cobasis, key=reduced.index)
    if len(robust) > 1:
        return None
    if robust:
        z = robust[0]
        if z not in candidate.strong:
            return None
        if reduced.mask((x, y, z)) not in reduced.cocircuit_masks():
            return None
    return {"basis": sorted(candidate.basis), "robust": robust}


def _flexible(ctx_profile):
    return {
        e
        for e, entry in ctx_profile.items()
        if entry["deletable"] and entry["contractible"]
    }


def _triad_clause(matroid, a, b, reduced, candidate, x, y, flexible):
    """Outcome (b)(ii) on one robust basis."""
    triads = reduced.cocircuit_masks()
    for z in reduced.ground:
        if z in candidate.basis or z not in candidate.strong:
            continue
        if reduced.mask((x, y, z)) not in triads:
            continue
        allowed = {x, y, z}
        if not flexible <= allowed or not candidate.robust <= allowed:
            continue
        p = _cocircuit_clause(matroid, a, b, x, y, z)
        if p is None:
            continue
        return {
            "basis": sorted(candidate.basis),
            "triad": [x, y, z],
            "cocircuit": sorted((a, b, x, y, z)),
            "triangle": [p, x, y],
        }
    return None


def _is_maximal_fan(m, ordering):
    for e in m.ground:
        if e in ordering:
            continue
        if is_fan(m, (e,) + ordering) or is_fan(m, ordering + (e,)):
            return False
    return True


def _fan_clause(matroid, a, b, reduced, candidate, x, y, flexible):
    """Outcome (b)(iii) on one robust basis."""
    for z1 in reduced.ground:
        if z1 in (x, y) or z1 not in candidate.strong:
            continue
        for z2 in reduced.ground:
            if z2 in (x, y, z1):
                continue
            allowed = {x, y, z1, z2}
            if not flexible <= allowed or not candidate.robust <= allowed:
                continue
            for ordering in ((z2, z1, x, y), (z2, z1, y, x)):
                try:
                    fan = FanRecord(reduced, ordering)
                except NotAFan:
                    continue
                if fan_type(fan, candidate.basis) != FAN_TYPE_II:
                    continue
                if not _is_maximal_fan(reduced, ordering):
                    continue
                for z in (z1, z2):
                    p = _cocircuit_clause(matroid, a, b, x, y, z)
                    if p is not None:
                        return {
                            "basis": sorted(candidate.basis),
                            "fan": list(ordering),
                            "cocircuit": sorted((a, b, x, y, z)),
                            "z": z,
                            "triangle": [p, x, y],
                        }
    return None


def _robust_candidates(reduced, minor, x, y, profile):
    try:
        return robust_bases(reduced, minor, x, y, profile=profile)
    except NoBasisMeetsConstraints:
        return []


def classify_mainthm1(ctx):
    """
    Evaluates every outcome of the first structure theorem on a setup.

    :return: An :py:class:`OutcomeVerdict` with flags ``a``, ``b_i``,
        ``b_ii`` and ``b_iii``.
    :raises InvalidSetup: when the setup is not valid.
    """
    ctx.check()
    m = ctx.matroid
    reduced = ctx.reduced
    profile = ctx.profile
    flags = {}
    evidence = {}

    flags["a"] = m.size <= ctx.minor.size + SIZE_SLACK
    evidence["a"] = {"size": m.size, "minor_size": ctx.minor.size}

    fragile = is_fragile(reduced, ctx.minor, profile)
    flexible = _flexible(profile)
    candidates = _robust_candidates(reduced, ctx.minor, ctx.x, ctx.y, profile)
    evidence["robust_bases"] = [c.to_dict() for c in candidates]
    evidence["fragile"] = fragile
    evidence["flexible"] = sorted(flexible, key=reduced.index)

    def clause(name, candidate):
        if name == "b_i":
            if not fragile:
                return None
            return _fragile_clause(reduced, candidate, ctx.x, ctx.y)
        if fragile:
            return None
        check = _triad_clause if name == "b_ii" else _fan_clause
        return check(m, ctx.a, ctx.b, reduced, candidate, ctx.x, ctx.y, flexible)

    for name in ("b_i", "b_ii", "b_iii"):
        flags[name] = False
        for candidate in candidates:
            found = clause(name, candidate)
            if found is not None:
                flags[name] = True
                evidence[name] = found
                break

    verdict = OutcomeVerdict(1, flags, evidence, instance=ctx.to_dict())
    if not verdict.holds:
        logger.warning("No outcome holds for %r; not an excluded minor?", ctx)
    return verdict


def _deletion_pair(m0, n0, preferred):
    pairs = [preferred] if all(e in m0 for e in preferred) else []
    pairs += [p for p in combinations(m0.ground, 2) if p != tuple(preferred)]
    for pair in pairs:
        reduced = m0.delete(pair)
        if is_3connected(reduced) and has_minor(reduced, n0) is not None:
            return pair, reduced
    return None, None


def _basis_pair(reduced, preferred):
    bases = sorted(reduced.basis_masks, key=set_key)
    if all(e in reduced for e in preferred):
        xy = reduced.mask(preferred)
        if any(b & xy == xy for b in bases):
            return tuple(preferred)
    for pair in combinations(reduced.ground, 2):
        xy = reduced.mask(pair)
        if any(b & xy == xy for b in bases):
            return pair
    return None


def _mainthm2_flags(m0, n0, reduced, x, y, profile):
    flags = {
        "a": m0.size <= n0.size + SIZE_SLACK,
        "b": m0.rank() <= n0.rank() + RANK_SLACK,
        "c": False,
    }
    evidence = {
        "a": {"size": m0.size, "minor_size": n0.size},
        "b": {"rank": m0.rank(), "minor_rank": n0.rank()},
    }
    if is_fragile(reduced, n0, profile):
        for candidate in _robust_candidates(reduced, n0, x, y, profile):
            found = _fragile_clause(reduced, candidate, x, y)
            if found is not None:
                flags["c"] = True
                evidence["c"] = found
                break
    return flags, evidence


def _mainthm2_candidates(ctx):
    """The pair (M, N) followed by (Y-Delta of M*, N*) for every triangle of
    M, the latter sorted by triangle."""
    yield "M", ctx.matroid, ctx.minor
    dual = ctx.matroid.dual()
    dual_minor = ctx.minor.dual()
    for mask in sorted(ctx.matroid.triangle_masks(), key=set_key):
        triangle = ctx.matroid.ordered(mask)
        label = "wye_delta(M*,%s)" % ",".join(triangle)
        yield label, wye_delta(dual, triangle), dual_minor


def _evaluate_candidate(ctx, label, m0, n0):
    """Deletion pair, basis pair and outcome flags of one candidate, or a
    summary with ``pair`` or ``xy`` set to None when it has none."""
    if label == "M":
        pair, reduced = (ctx.a, ctx.b), ctx.reduced
        xy = (ctx.x, ctx.y)
        profile = ctx.profile
    else:
        pair, reduced = _deletion_pair(m0, n0, (ctx.a, ctx.b))
        if pair is None:
            logger.debug("No deletion pair for %s", label)
            return {"candidate": label, "pair": None, "xy": None, "holds": []}
        xy = _basis_pair(reduced, (ctx.x, ctx.y))
        if xy is None:
            return {"candidate": label, "pair": list(pair), "xy": None, "holds": []}
        profile = element_profile(reduced, n0)
    flags, evidence = _mainthm2_flags(m0, n0, reduced, xy[0], xy[1], profile)
    return {
        "candidate": label,
        "pair": list(pair),
        "xy": list(xy),
        "holds": sorted(name for name, value in flags.items() if value),
        "flags": flags,
        "evidence": evidence,
        "matroid": m0.describe(),
        "minor": n0.describe(),
    }


def classify_mainthm2(ctx):
    """
    Evaluates the outcomes of the second structure theorem for (M, N) and
    for each Y-Delta exchange of M* against N*.

    Every candidate is evaluated; ``evidence["candidates"]`` summarizes each
    of them in order.

    :return: An :py:class:`OutcomeVerdict` with flags ``a``, ``b`` and ``c``
        of the first candidate satisfying an outcome.
    :raises InvalidSetup: when the setup is not valid.
    """
    ctx.check()
    chosen = None
    summaries = []
    for label, m0, n0 in _mainthm2_candidates(ctx):
        result = _evaluate_candidate(ctx, label, m0, n0)
        summaries.append(
            {key: result[key] for key in ("candidate", "pair", "xy", "holds")}
        )
        if chosen is None and result["holds"]:
            chosen = result
    if chosen is None:
        logger.warning("No candidate satisfies an outcome for %r", ctx)
        flags = {"a": False, "b": False, "c": False}
        return OutcomeVerdict(2, flags, {"candidates": summaries}, None)
    evidence = dict(chosen["evidence"], candidates=summaries)
    instance = {
        key: chosen[key] for key in ("candidate", "matroid", "minor", "pair", "xy")
    }
    return OutcomeVerdict(2, chosen["flags"], evidence, instance=instance)
