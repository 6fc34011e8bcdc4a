"""Canonical codes and isomorphism testing for finite posets.

The canonical labelling is individualisation-refinement: colour elements by
iterated (strict-up, strict-down) colour counts, branch on the first
non-singleton cell, and keep the lexicographically least relation code over
all discrete leaves. Twins (elements with identical strict up- and down-sets)
are interchangeable, so only one per twin class is branched on.
"""

from itertools import permutations
from typing import NamedTuple

import numpy as np

from .poset import FinitePoset


class CanonicalCode(NamedTuple):
    n: int
    code: bytes


def _relation_code(leq, order):
    sub = leq[np.ix_(order, order)]
    return np.packbits(sub, axis=None).tobytes()


def _rank(sig):
    _, inv = np.unique(sig, axis=0, return_inverse=True)
    return inv.ravel().astype(np.int64)


def _refine(strict, colors):
    ncells = colors.max() + 1
    while True:
        onehot = np.eye(ncells, dtype=np.int32)[colors]
        sig = np.hstack([colors[:, None], strict @ onehot, strict.T @ onehot])
        new = _rank(sig)
        new_cells = new.max() + 1
        if new_cells == ncells:
            return new
        colors, ncells = new, new_cells


def _individualize(colors, v):
    c = colors * 2 + 1
    c[v] -= 1
    return _rank(c[:, None])


def _twin_classes(leq):
    strict = leq.copy()
    np.fill_diagonal(strict, False)
    sig = np.hstack([strict, strict.T]).astype(np.int8)
    return _rank(sig)


class _Labeller:
    def __init__(self, P):
        self.leq = P.leq
        strict = P.leq.copy()
        np.fill_diagonal(strict, False)
        self.strict = strict.astype(np.int32)
        self.twins = _twin_classes(P.leq)
        self.best = None
        self.best_pos = None
        self.leaves = 0

    def run(self):
        n = self.leq.shape[0]
        self._search(np.zeros(n, dtype=np.int64))
        return self.best, self.best_pos

    def _search(self, colors):
        colors = _refine(self.strict, colors)
        n = len(colors)
        if colors.max() + 1 == n:
            self.leaves += 1
            order = np.argsort(colors)
            code = _relation_code(self.leq, order)
            if self.best is None or code < self.best:
                self.best = code
                self.best_pos = colors
            return
        counts = np.bincount(colors)
        cell = int(np.flatnonzero(counts > 1)[0])
        tried = set()
        for v in np.flatnonzero(colors == cell):
            t = int(self.twins[v])
            if t in tried:
                continue
            tried.add(t)
            self._search(_individualize(colors, int(v)))


def canonical_labelling(P):
    """Return (CanonicalCode, positions) where ``positions[i]`` is element i's
    canonical index."""
    code, pos = _Labeller(P).run()
    return CanonicalCode(P.n, code), pos


def canonical_code(P):
    return canonical_labelling(P)[0]


def canonical_form(P):
    """P relabelled canonically, with labels 0..n-1 in canonical order."""
    _, pos = canonical_labelling(P)
    C = P.relabel(pos)
    return FinitePoset([str(i) for i in range(P.n)], C.leq, check=False)


def is_order_isomorphism(P, M, mapping):
    if P.n != M.n or sorted(mapping) != list(range(M.n)):
        return False
    f = np.asarray(mapping)
    return bool(np.array_equal(P.leq, M.leq[np.ix_(f, f)]))


def are_isomorphic(P, M):
    """An order isomorphism P -> M as a list (``mapping[i]`` = image of i), or None."""
    if P.n != M.n:
        return None
    cp, pos_p = canonical_labelling(P)
    cm, pos_m = canonical_labelling(M)
    if cp != cm:
        return None
    inv_m = np.argsort(pos_m)
    mapping = [int(inv_m[pos_p[i]]) for i in range(P.n)]
    assert is_order_isomorphism(P, M, mapping)
    return mapping


def brute_force_code(P):
    """Least relation code over all n! orderings. Test oracle; keep n small."""
    if P.n > 8:
        raise ValueError("brute_force_code is only meant for n <= 8")
    best = None
    for order in permutations(range(P.n)):
        code = _relation_code(P.leq, np.asarray(order))
        if best is None or code < best:
            best = code
    return CanonicalCode(P.n, best)


def backtrack_isomorphism(P, M):
    """Plain backtracking search for an order isomorphism. Test oracle."""
    n = P.n
    if n != M.n:
        return None
    deg_p = [(int(P.leq[i].sum()), int(P.leq[:, i].sum())) for i in range(n)]
    deg_m = [(int(M.leq[j].sum()), int(M.leq[:, j].sum())) for j in range(n)]
    if sorted(deg_p) != sorted(deg_m):
        return None
    mapping = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        for j in range(n):
            if used[j] or deg_p[i] != deg_m[j]:
                continue
            if all(P.leq[i, k] == M.leq[j, mapping[k]] and P.leq[k, i] == M.leq[mapping[k], j]
                   for k in range(i)):
                mapping[i], used[j] = j, True
                if extend(i + 1):
                    return True
                used[j] = False
        mapping[i] = -1
        return False

    return list(mapping) if extend(0) else None
