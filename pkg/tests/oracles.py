"""Independent oracles and generators shared by the tests."""

import numpy as np
from hypothesis import strategies as st

from qsigma.canon import backtrack_isomorphism
from qsigma.poset import FinitePoset


@st.composite
def posets(draw, min_n=1, max_n=6):
    """Random poset: a random DAG on a shuffled natural labelling, then closed."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    perm = draw(st.permutations(range(n)))
    labels = [f"e{k}" for k in range(n)]
    rel = [(labels[perm[i]], labels[perm[j]]) for (i, j), k in zip(pairs, keep) if k]
    return FinitePoset.from_relations(labels, rel)


def is_partial_order(m):
    n = len(m)
    for i in range(n):
        if not m[i][i]:
            return False
        for j in range(n):
            if i != j and m[i][j] and m[j][i]:
                return False
            if m[i][j]:
                for k in range(n):
                    if m[j][k] and not m[i][k]:
                        return False
    return True


def naive_labeled_posets(n):
    """Every partial order on {0..n-1}: all 2^(n(n-1)) off-diagonal relations, filtered."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    for code in range(1 << len(off)):
        m = np.eye(n, dtype=bool)
        for b, (i, j) in enumerate(off):
            if code >> b & 1:
                m[i, j] = True
        if is_partial_order(m):
            yield FinitePoset([str(i) for i in range(n)], m, check=False)


def naturally_labeled_posets(n):
    """Every partial order whose labelling is a linear extension (one per
    class at least): strict pairs i<j only, filtered for transitivity."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for code in range(1 << len(pairs)):
        m = np.eye(n, dtype=bool)
        for b, (i, j) in enumerate(pairs):
            if code >> b & 1:
                m[i, j] = True
        if is_partial_order(m):
            yield FinitePoset([str(i) for i in range(n)], m, check=False)


def dedupe_pairwise(ps):
    reps = []
    for P in ps:
        if not any(backtrack_isomorphism(P, R) is not None for R in reps):
            reps.append(P)
    return reps


def all_subsets(n):
    return range(1 << n)


def brute_upper_sets(P):
    return [S for S in all_subsets(P.n)
            if all(not (S >> i & 1) or all(S >> j & 1 for j in range(P.n) if P.leq[i, j]) for i in range(P.n))]


