"""Scott topology, saturation, compactness and the compact-saturated family.

Topologies are explicit families of bitmasks over a host poset's ground set.
"""

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import numpy as np

from . import constants
from ._accel import MAX_MASK_BITS, as_mask_array, kernels
from .errors import PreconditionError, ResourceLimitError
from .poset import FinitePoset, bits, linear_extension, minimal_elements, up_closure


@dataclass(frozen=True)
class FiniteTopology:
    """A finite topology given by its open sets, or by its closed sets when
    ``closed`` is True."""

    host: FinitePoset
    sets: tuple
    closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(sorted(set(self.sets))))

    @property
    def full(self):
        return self.host.full

    @cached_property
    def opens(self):
        if not self.closed:
            return self.sets
        return tuple(sorted(self.full & ~c for c in self.sets))

    @cached_property
    def closed_sets(self):
        if self.closed:
            return self.sets
        return tuple(sorted(self.full & ~u for u in self.sets))

    @cached_property
    def _open_set(self):
        return frozenset(self.opens)

    @cached_property
    def _closed_set(self):
        return frozenset(self.closed_sets)

    def is_open(self, S):
        return S in self._open_set

    def is_closed(self, S):
        return S in self._closed_set

    def check(self):
        fam = self._open_set
        if 0 not in fam or self.full not in fam:
            raise ValueError("topology must contain the empty set and the whole space")
        for a, b in combinations(self.opens, 2):
            if a | b not in fam or a & b not in fam:
                raise ValueError("family is not closed under binary union/intersection")

    def closure(self, S):
        """Smallest closed set containing S."""
        out = self.full
        for c in self.closed_sets:
            if S & ~c == 0:
                out &= c
        return out

    def point_closure(self, x):
        return self.closure(1 << x)

    def dump(self):
        """One set per line: sorted comma-separated names inside braces."""
        return "\n".join(self.host.format_set(s) for s in self.sets) + "\n"


def upper_sets(P, cap=None):
    """All upper sets of P (including the empty set), ascending by mask."""
    if P.n > MAX_MASK_BITS:
        raise ResourceLimitError(f"upper-set enumeration supports at most {MAX_MASK_BITS} elements")
    order = linear_extension(P)[::-1]
    masks = kernels.upsets(P.up_array, np.asarray(order, dtype=np.int64))
    if cap is not None and len(masks) > cap:
        raise ResourceLimitError(f"{len(masks)} upper sets exceed cap {cap}")
    return [int(m) for m in masks]


def directed_subsets(P):
    """All directed subsets of P with their suprema (None when absent)."""
    if P.n > constants.DEFINITIONAL_SCOTT_MAX_N:
        raise ResourceLimitError("directed-subset enumeration is capped at "
                                 f"n <= {constants.DEFINITIONAL_SCOTT_MAX_N}")
    masks, sups = kernels.directed_subsets(P.up_array, P.n)
    return [(int(m), None if s < 0 else int(s)) for m, s in zip(masks, sups)]


def scott_opens(P, cap=None, definitional=None):
    """The Scott topology of P.

    Candidates are the upper sets of P; each is then tested against every
    directed subset D with a supremum: sup D in U must force D to meet U.
    The directed-set test runs whenever P is small enough to enumerate its
    subsets (``definitional=None``), or can be forced on/off.
    """
    cands = upper_sets(P, cap=cap)
    if definitional is None:
        definitional = P.n <= constants.DEFINITIONAL_SCOTT_MAX_N
    if definitional:
        masks, sups = kernels.directed_subsets(P.up_array, P.n)
        ok = kernels.scott_test(as_mask_array(cands), masks, sups)
        cands = [u for u, keep in zip(cands, ok) if keep]
    return FiniteTopology(P, tuple(cands))


def saturation(T, S):
    """Intersection of all opens containing S."""
    out = T.full
    for u in T.opens:
        if S & ~u == 0:
            out &= u
    return out


def is_saturated(T, S):
    return saturation(T, S) == S


def _has_finite_subcover(S, cover):
    # drop members while the rest still covers S
    kept = list(cover)
    for u in list(kept):
        rest = [v for v in kept if v is not u]
        union = 0
        for v in rest:
            union |= v
        if S & ~union == 0:
            kept = rest
    union = 0
    for v in kept:
        union |= v
    return S & ~union == 0


def is_compact(T, S, use_covers=False):
    """Cover compactness of S in T.

    On a finite space every cover is finite, so the answer is always True.
    ``use_covers`` runs the cover-based check instead: every subfamily of
    the opens that covers S is reduced to an irredundant subcover.
    """
    if not use_covers:
        return True
    opens = T.opens
    if len(opens) > constants.COVER_CHECK_MAX_OPENS:
        raise ResourceLimitError("cover-based compactness check is capped at "
                                 f"{constants.COVER_CHECK_MAX_OPENS} opens")
    m = len(opens)
    for fam in range(1, 1 << m):
        cover = [opens[i] for i in bits(fam)]
        union = 0
        for u in cover:
            union |= u
        if S & ~union:
            continue
        if not _has_finite_subcover(S, cover):
            return False
    return True


def smyth_leq(P, G, H):
    """G below H in the Smyth preorder: H is inside the up-closure of G."""
    return H & ~up_closure(P, G) == 0


@dataclass(frozen=True)
class QFamily:
    """Nonempty compact saturated sets of a Scott space, ordered by reverse
    inclusion. ``order`` materialises that order as a FinitePoset whose
    element ``i`` is ``members[i]``; it is built on first use."""

    host: FinitePoset
    members: tuple
    memo: dict = field(default_factory=dict, compare=False, repr=False)

    @cached_property
    def order(self):
        if len(self.members) > constants.ORDER_MAX_MEMBERS:
            raise ResourceLimitError(f"materialising the order of {len(self.members)} members exceeds "
                                     f"{constants.ORDER_MAX_MEMBERS}")
        return q_order(self.host, self.members)

    @cached_property
    def _pos(self):
        return {m: i for i, m in enumerate(self.members)}

    def __len__(self):
        return len(self.members)

    def __contains__(self, K):
        return K in self._pos

    def index(self, K):
        return self._pos[K]

    def member_mask(self, family_mask):
        """Union of the host-sets named by a bitmask over ``members``."""
        out = 0
        for i in bits(family_mask):
            out |= self.members[i]
        return out

    def to_json(self):
        edges = [[i, j] for i, j in self.order.covers()]
        return json.dumps({
            "members": [sorted(self.host.labels(m)) for m in self.members],
            "order_edges": edges,
        }, sort_keys=True)

    def check(self):
        """Re-verify the family's invariants; raises AssertionError."""
        T = scott_opens(self.host)
        for K in self.members:
            assert K != 0
            assert up_closure(self.host, minimal_elements(self.host, K)) == K, "K != up(min K)"
            assert is_saturated(T, K), "member is not saturated"
            assert is_compact(T, K)
        for i, a in enumerate(self.members):
            for j, b in enumerate(self.members):
                assert self.order.leq[i, j] == (b & ~a == 0)


def q_order(host, members):
    """FinitePoset of ``members`` under reverse inclusion."""
    arr = as_mask_array(members) if host.n <= MAX_MASK_BITS else None
    m = len(members)
    if arr is not None:
        leq = (arr[None, :] & ~arr[:, None]) == 0
    else:
        leq = np.array([[b & ~a == 0 for b in members] for a in members], dtype=bool).reshape(m, m)
    labels = [host.format_set(K) for K in members]
    return FinitePoset(labels, leq, check=False)


def compute_Q(P, cap=None, _skip_saturation=False):
    """Q(P): all nonempty compact saturated subsets of the Scott space of P.

    For small ground sets every nonempty subset is screened by the saturation
    kernel; above ``SUBSET_SCAN_MAX_N`` the saturated sets are read off the
    opens directly (in a finite space arbitrary intersections of opens are
    open). ``_skip_saturation`` is a test-only mutant.
    """
    if cap is None:
        cap = constants.DEFAULT_Q_CAP
    T = scott_opens(P, cap=cap + 1)
    if P.n <= constants.SUBSET_SCAN_MAX_N:
        cands = kernels.saturated_subsets(as_mask_array(T.opens), P.n, bool(_skip_saturation))
        cands = [int(c) for c in cands]
    else:
        if _skip_saturation:
            raise PreconditionError("saturation mutant needs a subset scan")
        cands = [u for u in T.opens if u]
    members = sorted(K for K in cands if is_compact(T, K))
    if len(members) > cap:
        raise ResourceLimitError(f"|Q| = {len(members)} exceeds cap {cap}")
    return QFamily(P, tuple(members))


def q_as_poset(Q):
    return Q.order


def _close(family, op):
    fam = set(family)
    frontier = list(fam)
    while frontier:
        new = []
        for a in frontier:
            for b in list(fam):
                c = op(a, b)
                if c not in fam:
                    fam.add(c)
                    new.append(c)
        frontier = new
    return fam


def co_compact_closed_sets(P, Q):
    """Co-compact topology of the Scott space of P in closed-set form: all
    intersections of finite unions of Q-members, plus the empty set and P."""
    unions = _close(Q.members, lambda a, b: a | b)
    closed = _close(unions | {P.full}, lambda a, b: a & b)
    closed.add(0)
    return FiniteTopology(P, tuple(closed), closed=True)


def is_irreducible_closed(T, A):
    if not T.is_closed(A):
        raise PreconditionError("set is not closed in this topology")
    if A == 0:
        raise PreconditionError("irreducibility is checked for nonempty closed sets")
    cs = [c for c in T.closed_sets if A & c]
    for B in cs:
        if A & ~B == 0:
            continue
        for C in cs:
            if A & ~C == 0:
                continue
            if A & ~(B | C) == 0:
                return False
    return True


def is_sober(T):
    closures = {T.point_closure(x) for x in range(T.host.n)}
    for A in T.closed_sets:
        if A and A not in closures and is_irreducible_closed(T, A):
            return False
    return True


def sobriety_witness(T):
    """A nonempty irreducible closed set that is no point closure, or None."""
    closures = {T.point_closure(x) for x in range(T.host.n)}
    for A in T.closed_sets:
        if A and A not in closures and is_irreducible_closed(T, A):
            return A
    return None


def is_TD(T):
    return all(T.is_closed(T.point_closure(x) & ~(1 << x)) for x in range(T.host.n))


def specialization_order(T):
    """x <= y iff x lies in the closure of {y}."""
    n = T.host.n
    cl = [T.point_closure(y) for y in range(n)]
    if len(set(cl)) != n:
        raise PreconditionError("topology is not T0")
    leq = np.array([[bool(cl[y] >> x & 1) for y in range(n)] for x in range(n)], dtype=bool)
    return FinitePoset(T.host.elements, leq, check=False)
