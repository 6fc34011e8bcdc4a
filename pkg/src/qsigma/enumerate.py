"""Enumeration of posets up to isomorphism.

Every poset on n elements arises from one on n-1 elements by adjoining a new
maximal element whose strict down-set is a down-set of the smaller poset.
Candidates are canonicalised and deduplicated by code; each level is emitted
in increasing canonical-code order, so output is deterministic.
"""

import numpy as np

from ._accel import kernels
from .canon import canonical_form
from .errors import ResourceLimitError
from .poset import FinitePoset, bits, linear_extension

MAX_ENUMERATION_N = 7


def downsets(P):
    """All down-sets of P (including the empty set) as bitmasks."""
    D = P.dual()
    order = linear_extension(D)[::-1]
    return [int(m) for m in kernels.upsets(D.up_array, np.asarray(order, dtype=np.int64))]


def extend_with_maximal(P, below_mask):
    n = P.n
    leq = np.zeros((n + 1, n + 1), dtype=bool)
    leq[:n, :n] = P.leq
    leq[n, n] = True
    for i in bits(below_mask):
        leq[i, n] = True
    return FinitePoset(list(P.elements) + [str(n)], leq, check=False)


def _next_level(level):
    seen = {}
    for P in level:
        for D in downsets(P):
            C = canonical_form(extend_with_maximal(P, D))
            key = C.leq.tobytes()
            if key not in seen:
                seen[key] = C
    return [seen[k] for k in sorted(seen)]


def poset_levels(n, max_n=MAX_ENUMERATION_N):
    """List of levels; ``levels[k-1]`` holds one representative per class of size k."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise ResourceLimitError(f"enumeration is capped at n <= {max_n} (asked for {n})")
    levels = [[canonical_form(FinitePoset(["0"], [[True]], check=False))]]
    while len(levels) < n:
        levels.append(_next_level(levels[-1]))
    return levels


def enumerate_posets(n, exact=False, max_n=MAX_ENUMERATION_N):
    """Yield one representative per isomorphism class of posets with at most
    ``n`` elements (exactly ``n`` when ``exact``)."""
    levels = poset_levels(n, max_n=max_n)
    if exact:
        yield from levels[-1]
    else:
        for level in levels:
            yield from level


def class_counts(n, max_n=MAX_ENUMERATION_N):
    return [len(level) for level in poset_levels(n, max_n=max_n)]
