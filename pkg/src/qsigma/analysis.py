"""Predicates over the compact-saturated family Q(P).

k-irreducibility, co-sobriety, the K_D condition, Property (KL) and the
directed-decomposition conditions, strongly prime elements, Q-determinedness
and (weak) well-filteredness.
"""

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Optional

import numpy as np

from . import constants
from ._accel import MAX_MASK_BITS, as_mask_array, kernels
from .domain import is_quasicontinuous
from .errors import ResourceLimitError
from .poset import bits, inf, is_chain, is_directed, sup
from .topology import compute_Q, is_compact, scott_opens


@dataclass(frozen=True)
class PropertyReport:
    property: str
    verdict: Optional[bool]
    witness: Any = None
    notes: list = field(default_factory=list)
    bounds: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict is not None:
            object.__setattr__(self, "verdict", bool(self.verdict))
        if self.verdict is False and self.witness is None:
            raise ValueError(f"{self.property}: a false verdict needs a witness")

    def to_dict(self):
        d = {"property": self.property, "verdict": self.verdict,
             "notes": list(self.notes), "bounds": dict(self.bounds)}
        if self.witness is not None:
            d["witness"] = self.witness
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def _Q(P, Q):
    return compute_Q(P) if Q is None else Q


# ------------------------------------------------------------ k-irreducible

def k_split(Q, K):
    """A pair (A, B) of proper members of Q with A | B == K, or None."""
    subs = [A for A in Q.members if A != K and A & ~K == 0]
    for A, B in combinations(subs, 2):
        if A | B == K:
            return A, B
    return None


def is_k_irreducible(Q, K):
    if K not in Q:
        raise ValueError("K is not a member of Q")
    return k_split(Q, K) is None


def kirr(Q):
    """k-irreducible members, ascending by mask."""
    if "kirr" not in Q.memo:
        if Q.host.n <= MAX_MASK_BITS:
            flags = kernels.k_split_flags(as_mask_array(Q.members))
            Q.memo["kirr"] = tuple(K for K, split in zip(Q.members, flags) if not split)
        else:
            Q.memo["kirr"] = tuple(K for K in Q.members if k_split(Q, K) is None)
    return Q.memo["kirr"]


def kirr_poset(Q):
    idx = [Q.index(K) for K in kirr(Q)]
    mask = sum(1 << i for i in idx)
    return Q.order.subposet(mask)


def is_co_sober(P, Q=None):
    Q = _Q(P, Q)
    principal = set(P.up)
    return all(K in principal for K in kirr(Q))


def co_sober_report(P, Q=None):
    Q = _Q(P, Q)
    principal = set(P.up)
    bad = [K for K in kirr(Q) if K not in principal]
    return PropertyReport("co-sober", not bad,
                          witness=P.format_set(bad[0]) if bad else None,
                          notes=[f"|kIRR| = {len(kirr(Q))}"])


# ------------------------------------------------------------ K_D

def kd_failure(P, T=None):
    T = scott_opens(P) if T is None else T
    for x in range(P.n):
        if not is_compact(T, P.up[x] & ~(1 << x)):
            return x
    return None


def is_KD(P):
    return kd_failure(P) is None


# ------------------------------------------------------------ (KL)

def _chain_below(Q, kset, Ki):
    """{K' in kIRR : K' inside Ki} is totally ordered by inclusion."""
    below = [K for K in kset if K & ~Ki == 0]
    for a, b in combinations(below, 2):
        if a & ~b and b & ~a:
            return False
    return True


def kl_witness(P, Q, K):
    """Lexicographically first directed family of chain-condition k-irreducibles
    whose supremum in the Q-order is K, as a tuple of members; or None."""
    kset = kirr(Q)
    # members below K in the Q-order are supersets of K
    cands = [Ki for Ki in kset if K & ~Ki == 0 and _chain_below(Q, kset, Ki)]
    if len(cands) > constants.KL_MAX_CANDIDATES:
        raise ResourceLimitError("(KL) subfamily search is capped at "
                                 f"{constants.KL_MAX_CANDIDATES} candidates")
    target = Q.index(K)
    for size in range(1, len(cands) + 1):
        for fam in combinations(cands, size):
            fmask = sum(1 << Q.index(Ki) for Ki in fam)
            if is_directed(Q.order, fmask) and sup(Q.order, fmask) == target:
                return fam
    return None


def has_property_KL(P, Q=None):
    Q = _Q(P, Q)
    return all(kl_witness(P, Q, K) is not None for K in kirr(Q))


def kl_report(P, Q=None):
    Q = _Q(P, Q)
    kset = set(kirr(Q))
    for K in sorted(kset):
        fam = kl_witness(P, Q, K)
        if fam is None:
            return PropertyReport("kl", False, witness={"k_irreducible": P.format_set(K)},
                                  notes=["suprema computed in the Q-order"])
    return PropertyReport("kl", True, notes=["suprema computed in the Q-order",
                                             "every supremum is the k-irreducible itself, so it lies in kIRR"])


# ------------------------------------------------------------ decompositions

DECOMPOSITION_KINDS = ("chain", "quasicontinuous", "kd")


def _decomp_predicate(P, kind):
    if kind == "chain":
        return lambda d: is_chain(P, P.up[d])
    if kind == "quasicontinuous":
        return lambda d: is_quasicontinuous(P.subposet(P.up[d]))
    if kind == "kd":
        T = scott_opens(P)
        return lambda d: is_compact(T, P.up[d] & ~(1 << d))
    raise ValueError(f"unknown decomposition kind {kind!r}")


def decomposition_failure(P, kind):
    """First x admitting no directed D with sup x and the predicate on every
    member of D; None when the condition holds everywhere."""
    pred = _decomp_predicate(P, kind)
    cache = {}

    def good(d):
        if d not in cache:
            cache[d] = pred(d)
        return cache[d]

    for x in range(P.n):
        if good(x):
            continue
        below = bits(P.down[x])
        if len(below) > 16:
            raise ResourceLimitError("directed-set search below x is capped at 16 elements")
        found = False
        for r in range(1, len(below) + 1):
            for D in combinations(below, r):
                if not all(good(d) for d in D):
                    continue
                Dm = sum(1 << d for d in D)
                if is_directed(P, Dm) and sup(P, Dm) == x:
                    found = True
                    break
            if found:
                break
        if not found:
            return x
    return None


def decomposition_condition(P, kind):
    return decomposition_failure(P, kind) is None


def check_KL_equivalence(P, Q=None):
    Q = _Q(P, Q)
    kl = has_property_KL(P, Q)
    rhs = is_co_sober(P, Q) and decomposition_condition(P, "chain")
    agree = kl == rhs
    return PropertyReport("kl-equivalence", agree,
                          witness=None if agree else P.to_text(),
                          notes=[f"kl={kl}", f"co-sober and chain-decomposition={rhs}"])


# ------------------------------------------------------------ strongly prime

def strongly_prime(M, Q, a):
    for K in Q.members:
        k = inf(M, K)
        if k is not None and M.leq[k, a] and not K >> a & 1:
            return False
    return True


def SP(M, Q=None):
    Q = _Q(M, Q)
    out = 0
    for a in range(M.n):
        if strongly_prime(M, Q, a):
            out |= 1 << a
    return out


# ------------------------------------------------------------ Q-determined

def _qq(M, cap):
    Q = compute_Q(M, cap=cap)
    QQ = compute_Q(Q.order, cap=cap)
    return Q, QQ


def q_determined_failure(M, cap=None):
    """A member of Q(Q(M)) whose infimum exists but differs from its union,
    or None."""
    Q, QQ = _qq(M, cap)
    for fam in QQ.members:
        k = inf(Q.order, fam)
        if k is not None and Q.members[k] != Q.member_mask(fam):
            return Q, fam
    return None


def is_Q_determined(M, cap=None):
    return q_determined_failure(M, cap) is None


# ------------------------------------------------------------ well-filtered

def _filtered_violation(P, Q, T, weak):
    members = as_mask_array(Q.members)
    m = len(members)
    below = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            inter = members[i] & members[j]
            below[i, j] = sum(1 << k for k in range(m) if members[k] & ~inter == 0)
    fams = kernels.filtered_families(below, m)
    inter = np.full(fams.shape, P.full, dtype=np.int64)
    for i in range(m):
        inter = np.where((fams >> i) & 1 == 1, inter & members[i], inter)
    for U in T.opens:
        if weak and U == 0:
            continue
        inside = sum(1 << k for k in range(m) if members[k] & ~U == 0)
        bad = ((inter & ~np.int64(U)) == 0) & ((fams & np.int64(inside)) == 0)
        if bad.any():
            return int(fams[np.argmax(bad)]), U
    return None


def well_filtered_report(P, weak=True, definitional=None, Q=None):
    name = "wwf" if weak else "wf"
    Q = _Q(P, Q)
    if definitional is None:
        definitional = len(Q) <= constants.FILTERED_DEFINITIONAL_MAX_Q
    bounds = {"filtered_definitional_max_q": constants.FILTERED_DEFINITIONAL_MAX_Q, "q_size": len(Q)}
    if not definitional:
        return PropertyReport(name, True, bounds=bounds,
                              notes=["fast path: a filtered family of a finite Q has a least member"])
    if len(Q) > 30:
        raise ResourceLimitError("filtered-family enumeration needs |Q| <= 30")
    hit = _filtered_violation(P, Q, scott_opens(P), weak)
    if hit is None:
        return PropertyReport(name, True, bounds=bounds, notes=["definitional enumeration of filtered subfamilies"])
    fam, U = hit
    return PropertyReport(name, False, bounds=bounds,
                          witness={"family": [P.format_set(Q.members[i]) for i in bits(fam)],
                                   "open": P.format_set(U)})


def is_weakly_well_filtered(P, definitional=None):
    return bool(well_filtered_report(P, True, definitional).verdict)


def is_well_filtered(P, definitional=None):
    return bool(well_filtered_report(P, False, definitional).verdict)


# ------------------------------------------------------------ SP of Q(P)

def verify_strongly_prime_lemma(P, cap=None):
    """Strongly prime members of the Q-poset are principal filters; when P is
    Q-determined they are exactly the principal filters."""
    Q, QQ = _qq(P, cap)
    sp = SP(Q.order, QQ)
    sp_sets = {Q.members[i] for i in bits(sp)}
    principal = set(P.up)
    non_principal = sorted(sp_sets - principal)
    qdet = all(inf(Q.order, fam) is None or Q.members[inf(Q.order, fam)] == Q.member_mask(fam)
               for fam in QQ.members)
    ok = not non_principal and (not qdet or sp_sets == principal)
    witness = None
    if not ok:
        witness = {"strongly_prime": [P.format_set(K) for K in sorted(sp_sets)],
                   "principal": [P.format_set(K) for K in sorted(principal)]}
    return PropertyReport("sp", ok, witness=witness,
                          notes=[f"q-determined={qdet}", f"|SP(Q)| = {len(sp_sets)}"])
