"""Way-below between subsets, fin(x), quasicontinuity and continuity."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import constants
from ._accel import as_mask_array, kernels
from .errors import ResourceLimitError
from .poset import bits, is_directed, sup, up_closure
from .topology import directed_subsets


@dataclass(frozen=True)
class WayBelowWitness:
    G: int
    H: int
    failing_directed: Optional[int] = None


def _definitional_failure(P, G, H):
    upG, upH = up_closure(P, G), up_closure(P, H)
    for D, s in directed_subsets(P):
        if s is not None and upH >> s & 1 and not D & upG:
            return D
    return None


def way_below(P, G, H, definitional=False, witness=False):
    """G way below H: every directed D whose sup lies in up(H) meets up(G).

    The default path uses that directed subsets of a finite poset have a
    greatest element, which reduces the test to up(H) being inside up(G).
    ``definitional`` enumerates directed subsets instead.
    """
    if definitional:
        if P.n > constants.WAY_BELOW_DEFINITIONAL_MAX_N:
            raise ResourceLimitError("definitional way-below is capped at "
                                     f"n <= {constants.WAY_BELOW_DEFINITIONAL_MAX_N}")
        D = _definitional_failure(P, G, H)
        ok = D is None
    else:
        upG, upH = up_closure(P, G), up_closure(P, H)
        ok = upH & ~upG == 0
        D = None
        if not ok:
            # an element of up(H) outside up(G): {x} is directed with sup x
            D = 1 << bits(upH & ~upG)[0]
    if witness:
        return ok, WayBelowWitness(G, H, D)
    return ok


def point_way_below(P, y, x):
    return way_below(P, 1 << y, 1 << x)


def fin(P, x, definitional=False):
    """All nonempty F with F way below {x}, ascending by mask."""
    if P.n > constants.FIN_MAX_N:
        raise ResourceLimitError(f"fin(x) enumerates subsets; capped at n <= {constants.FIN_MAX_N}")
    if definitional:
        return [F for F in range(1, 1 << P.n) if way_below(P, F, 1 << x, definitional=True)]
    # vectorised fast path: {x} way below F iff x in up(F)
    subsets = np.arange(1, 1 << P.n, dtype=np.int64)
    hits = np.zeros(subsets.shape, dtype=bool)
    for i in bits(P.down[x]):
        hits |= (subsets >> i) & 1 == 1
    return [int(F) for F in subsets[hits]]


def is_quasicontinuous(P, definitional=False):
    """fin(x) is Smyth-directed and the up-closures of its members meet in up(x),
    for every x. (Finite posets are dcpos.)"""
    return quasicontinuity_failure(P, definitional) is None


def quasicontinuity_failure(P, definitional=False):
    """First element where the quasicontinuity test fails, or None."""
    for x in range(P.n):
        F = fin(P, x, definitional=definitional)
        if not F:
            return x
        ups = [up_closure(P, f) for f in F]
        if not kernels.smyth_directed(as_mask_array(F), as_mask_array(ups)):
            return x
        meet = P.full
        for u in ups:
            meet &= u
        if meet != P.up[x]:
            return x
    return None


def way_below_set(P, x, definitional=False):
    """Elements y with {y} way below {x}, as a bitmask."""
    out = 0
    for y in range(P.n):
        if way_below(P, 1 << y, 1 << x, definitional=definitional):
            out |= 1 << y
    return out


def is_domain(P, definitional=False):
    """Each way-below set is directed with supremum x."""
    for x in range(P.n):
        W = way_below_set(P, x, definitional=definitional)
        if not is_directed(P, W) or sup(P, W) != x:
            return False
    return True
