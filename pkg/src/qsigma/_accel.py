"""Bitmask kernels for the hot loops, with a numba and a pure-numpy backend.

Subsets of a ground set of size n are int64 bitmasks (bit i <-> element i).
Every kernel comes in two flavours with identical signatures:

* ``numba_kernels``: explicit loops compiled with ``numba.njit``
* ``numpy_kernels``: vectorised numpy over whole subset arrays

``kernels`` is the active backend. Set ``QSIGMA_DISABLE_NUMBA=1`` (or run
without numba installed) to force the numpy path.
"""

import os
from types import SimpleNamespace

import numpy as np

MAX_MASK_BITS = 62  # int64 bitmasks, sign bit unused

try:
    import numba
    HAS_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and os.environ.get("QSIGMA_DISABLE_NUMBA", "").strip() not in ("1", "true", "yes")


# ---------------------------------------------------------------- numpy path

def np_transitive_closure(adj):
    r = np.array(adj, dtype=bool, copy=True)
    n = r.shape[0]
    r[np.arange(n), np.arange(n)] = True
    for k in range(n):
        r |= np.outer(r[:, k], r[k, :])
    return r


def np_upsets(up, order):
    # `order` lists elements so that every strict successor of order[t]
    # appears before it (maximal elements first).
    sets = np.zeros(1, dtype=np.int64)
    for x in order:
        bit = np.int64(1) << np.int64(x)
        need = np.int64(up[x]) & ~bit
        ok = (sets & need) == need
        sets = np.concatenate([sets, sets[ok] | bit])
    return np.sort(sets)


def np_saturated_subsets(opens, n, skip_filter):
    subsets = np.arange(1, np.int64(1) << np.int64(n), dtype=np.int64)
    if skip_filter:
        return subsets
    full = (np.int64(1) << np.int64(n)) - 1
    sat = np.full(subsets.shape, full, dtype=np.int64)
    for u in opens:
        inside = (subsets & ~np.int64(u)) == 0
        sat = np.where(inside, sat & np.int64(u), sat)
    return subsets[sat == subsets]


def np_directed_subsets(up, n):
    subsets = np.arange(1, np.int64(1) << np.int64(n), dtype=np.int64)
    directed = np.ones(subsets.shape, dtype=bool)
    bits = [np.int64(1) << np.int64(i) for i in range(n)]
    for i in range(n):
        has_i = (subsets & bits[i]) != 0
        for j in range(i + 1, n):
            both = has_i & ((subsets & bits[j]) != 0)
            bounded = (subsets & np.int64(up[i]) & np.int64(up[j])) != 0
            directed &= ~both | bounded
    subsets = subsets[directed]
    full = (np.int64(1) << np.int64(n)) - 1
    ub = np.full(subsets.shape, full, dtype=np.int64)
    for i in range(n):
        ub = np.where((subsets & bits[i]) != 0, ub & np.int64(up[i]), ub)
    sups = np.full(subsets.shape, -1, dtype=np.int64)
    for s in range(n):
        is_least = ((ub & bits[s]) != 0) & ((ub & ~np.int64(up[s])) == 0)
        sups = np.where(is_least, s, sups)
    return subsets, sups


def np_scott_test(cands, dmasks, dsups):
    ok = np.ones(len(cands), dtype=bool)
    has_sup = dsups >= 0
    dm = dmasks[has_sup]
    supbit = np.int64(1) << dsups[has_sup]
    for t, u in enumerate(cands):
        u = np.int64(u)
        bad = ((supbit & u) != 0) & ((dm & u) == 0)
        ok[t] = not bad.any()
    return ok


def np_smyth_directed(masks, upmasks):
    # family is directed under G <= H iff H subset of upG
    m = len(masks)
    for i in range(m):
        for j in range(i + 1, m):
            target = upmasks[i] & upmasks[j]
            if not ((masks & ~target) == 0).any():
                return False
    return m > 0


def np_filtered_families(below, m):
    """All nonempty subfamilies f of range(m) with (below[i, j] & f) != 0
    for every i, j in f."""
    fams = np.arange(1, np.int64(1) << np.int64(m), dtype=np.int64)
    ok = np.ones(fams.shape, dtype=bool)
    for i in range(m):
        bi = (fams >> np.int64(i)) & 1
        for j in range(i, m):
            both = (bi & ((fams >> np.int64(j)) & 1)) != 0
            ok &= ~both | ((fams & np.int64(below[i, j])) != 0)
    return fams[ok]


def np_k_split_flags(members):
    """For each member K: True iff K is the union of two members properly
    inside it."""
    out = np.zeros(len(members), dtype=bool)
    for t, K in enumerate(members):
        subs = members[((members & ~K) == 0) & (members != K)]
        for A in subs:
            R = K & ~A
            if ((subs & R) == R).any():
                out[t] = True
                break
    return out


# ---------------------------------------------------------------- loop path
# Plain loops; compiled by numba when available.

def _lp_transitive_closure(adj):
    n = adj.shape[0]
    r = adj.copy()
    for i in range(n):
        r[i, i] = True
    for k in range(n):
        for i in range(n):
            if r[i, k]:
                for j in range(n):
                    if r[k, j]:
                        r[i, j] = True
    return r


def _lp_upsets(up, order):
    n = len(order)
    cap = 1024
    sets = np.zeros(cap, dtype=np.int64)
    count = 1
    for t in range(n):
        x = order[t]
        bit = np.int64(1) << np.int64(x)
        need = up[x] & ~bit
        base = count
        for s in range(base):
            if sets[s] & need == need:
                if count == cap:
                    cap *= 2
                    grown = np.zeros(cap, dtype=np.int64)
                    grown[:count] = sets[:count]
                    sets = grown
                sets[count] = sets[s] | bit
                count += 1
    return np.sort(sets[:count])


def _lp_saturated_subsets(opens, n, skip_filter):
    total = (np.int64(1) << np.int64(n)) - 1
    out = np.empty(total, dtype=np.int64)
    count = 0
    for s in range(1, total + 1):
        s = np.int64(s)
        if skip_filter:
            out[count] = s
            count += 1
            continue
        sat = total
        for u in opens:
            if s & ~u == 0:
                sat &= u
        if sat == s:
            out[count] = s
            count += 1
    return out[:count]


def _lp_directed_subsets(up, n):
    total = (np.int64(1) << np.int64(n)) - 1
    masks = np.empty(total, dtype=np.int64)
    sups = np.empty(total, dtype=np.int64)
    count = 0
    for s in range(1, total + 1):
        s = np.int64(s)
        directed = True
        for i in range(n):
            if not (s >> i) & 1:
                continue
            for j in range(i + 1, n):
                if (s >> j) & 1 and (s & up[i] & up[j]) == 0:
                    directed = False
                    break
            if not directed:
                break
        if not directed:
            continue
        ub = total
        for i in range(n):
            if (s >> i) & 1:
                ub &= up[i]
        sup = -1
        for c in range(n):
            if (ub >> c) & 1 and (ub & ~up[c]) == 0:
                sup = c
                break
        masks[count] = s
        sups[count] = sup
        count += 1
    return masks[:count], sups[:count]


def _lp_scott_test(cands, dmasks, dsups):
    ok = np.ones(len(cands), dtype=np.bool_)
    for t in range(len(cands)):
        u = cands[t]
        for k in range(len(dmasks)):
            s = dsups[k]
            if s >= 0 and (u >> s) & 1 and (dmasks[k] & u) == 0:
                ok[t] = False
                break
    return ok


def _lp_smyth_directed(masks, upmasks):
    m = len(masks)
    if m == 0:
        return False
    for i in range(m):
        for j in range(i + 1, m):
            target = upmasks[i] & upmasks[j]
            found = False
            for k in range(m):
                if masks[k] & ~target == 0:
                    found = True
                    break
            if not found:
                return False
    return True


def _lp_filtered_families(below, m):
    total = (np.int64(1) << np.int64(m)) - 1
    out = np.empty(total, dtype=np.int64)
    count = 0
    for f in range(1, total + 1):
        f = np.int64(f)
        ok = True
        for i in range(m):
            if not (f >> i) & 1:
                continue
            for j in range(i, m):
                if (f >> j) & 1 and (f & below[i, j]) == 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out[count] = f
            count += 1
    return out[:count]


def _lp_k_split_flags(members):
    m = len(members)
    out = np.zeros(m, dtype=np.bool_)
    subs = np.empty(m, dtype=np.int64)
    for t in range(m):
        K = members[t]
        ns = 0
        for k in range(m):
            if members[k] != K and members[k] & ~K == 0:
                subs[ns] = members[k]
                ns += 1
        for a in range(ns):
            R = K & ~subs[a]
            for b in range(ns):
                if subs[b] & R == R:
                    out[t] = True
                    break
            if out[t]:
                break
    return out


numpy_kernels = SimpleNamespace(
    name="numpy",
    transitive_closure=np_transitive_closure,
    upsets=np_upsets,
    saturated_subsets=np_saturated_subsets,
    directed_subsets=np_directed_subsets,
    scott_test=np_scott_test,
    smyth_directed=np_smyth_directed,
    filtered_families=np_filtered_families,
    k_split_flags=np_k_split_flags,
)

if HAS_NUMBA:
    _jit = numba.njit(cache=True, nogil=True)
    numba_kernels = SimpleNamespace(
        name="numba",
        transitive_closure=_jit(_lp_transitive_closure),
        upsets=_jit(_lp_upsets),
        saturated_subsets=_jit(_lp_saturated_subsets),
        directed_subsets=_jit(_lp_directed_subsets),
        scott_test=_jit(_lp_scott_test),
        smyth_directed=_jit(_lp_smyth_directed),
        filtered_families=_jit(_lp_filtered_families),
        k_split_flags=_jit(_lp_k_split_flags),
    )
else:  # pragma: no cover
    numba_kernels = None

kernels = numba_kernels if USE_NUMBA else numpy_kernels


def backend_name():
    return kernels.name


def as_mask_array(masks):
    return np.asarray([int(m) for m in masks], dtype=np.int64)
