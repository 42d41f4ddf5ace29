"""Matroid isomorphism by invariant refinement and backtracking."""

import logging
from collections import Counter

from mfrag.matroid import bits, popcount

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

logger = logging.getLogger(__name__)


def signature(matroid):
    """Cheap isomorphism invariant: size, rank, basis count and circuit sizes."""
    histogram = Counter(popcount(c) for c in matroid.circuit_masks())
    return (
        matroid.size,
        matroid.rank(),
        len(matroid.basis_masks),
        tuple(sorted(histogram.items())),
    )


def element_invariants(matroid):
    """Per-element invariants: basis degree and circuit/cocircuit size profiles."""
    n = matroid.size
    degree = [0] * n
    for b in matroid.basis_masks:
        for i in bits(b):
            degree[i] += 1
    circuit_profile = [Counter() for _ in range(n)]
    for c in matroid.circuit_masks():
        size = popcount(c)
        for i in bits(c):
            circuit_profile[i][size] += 1
    cocircuit_profile = [Counter() for _ in range(n)]
    for c in matroid.cocircuit_masks():
        size = popcount(c)
        for i in bits(c):
            cocircuit_profile[i][size] += 1
    return [
        (
            degree[i],
            tuple(sorted(circuit_profile[i].items())),
            tuple(sorted(cocircuit_profile[i].items())),
        )
        for i in range(n)
    ]


def isomorphic(first, second):
    """
    Searches for an isomorphism between two matroids.

    :return: A dict mapping labels of ``first`` to labels of ``second`` that
        carries bases onto bases, or None.
    """
    if signature(first) != signature(second):
        return None
    inv1 = element_invariants(first)
    inv2 = element_invariants(second)
    if sorted(inv1) != sorted(inv2):
        return None

    n = first.size
    class_size = Counter(inv1)
    order = sorted(range(n), key=lambda i: (class_size[inv1[i]], i))
    position = {element: step for step, element in enumerate(order)}
    candidates = [[j for j in range(n) if inv2[j] == inv1[i]] for i in range(n)]

    # circuits of the first matroid, grouped by their last element in search order
    closing = [[] for _ in range(n)]
    for c in first.circuit_masks():
        last = max(bits(c), key=lambda i: position[i])
        closing[last].append(c)
    targets = second.circuit_masks()

    image = [None] * n
    used = [False] * n

    def consistent(i):
        for c in closing[i]:
            mapped = 0
            for k in bits(c):
                mapped |= 1 << image[k]
            if mapped not in targets:
                return False
        return True

    def extend(step):
        if step == n:
            return True
        i = order[step]
        for j in candidates[i]:
            if used[j]:
                continue
            image[i] = j
            used[j] = True
            if consistent(i) and extend(step + 1):
                return True
            used[j] = False
        image[i] = None
        return False

    if not extend(0):
        logger.debug("No isomorphism between %r and %r", first, second)
        return None
    return {first.ground[i]: second.ground[image[i]] for i in range(n)}


def is_isomorphic(first, second):
    return isomorphic(first, second) is not None
