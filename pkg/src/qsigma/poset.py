"""Finite posets and basic order utilities.

Subsets of a poset's ground set ("element sets") are plain Python ints used
as bitmasks: bit ``i`` is set iff element ``i`` belongs to the set. This keeps
them hashable, cheap to combine, and directly usable by the kernels.
"""

import re
from functools import cached_property

import numpy as np

from ._accel import kernels
from .errors import CycleError, ParseError

NAME_RE = re.compile(r"^[A-Za-z0-9_()\-]+$")


def bits(mask):
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask):
    return bin(mask).count("1")


class FinitePoset:
    """A finite partial order stored as its full (closed) relation matrix.

    ``leq[i, j]`` is True iff ``elements[i] <= elements[j]``.
    """

    def __init__(self, elements, leq, check=True):
        elements = tuple(str(e) for e in elements)
        leq = np.array(leq, dtype=bool)
        n = len(elements)
        if n == 0:
            raise ValueError("empty poset")
        if leq.shape != (n, n):
            raise ValueError(f"relation has shape {leq.shape}, expected {(n, n)}")
        if len(set(elements)) != n:
            raise ValueError("duplicate element labels")
        leq.setflags(write=False)
        self.elements = elements
        self.leq = leq
        if check:
            self.check()

    @classmethod
    def from_relations(cls, elements, pairs):
        """Build the reflexive-transitive closure of ``pairs`` (label pairs x<=y)."""
        elements = [str(e) for e in elements]
        index = {e: i for i, e in enumerate(elements)}
        adj = np.zeros((len(elements), len(elements)), dtype=bool)
        for x, y in pairs:
            adj[index[str(x)], index[str(y)]] = True
        closed = kernels.transitive_closure(adj)
        both = closed & closed.T
        np.fill_diagonal(both, False)
        if both.any():
            i, j = map(int, np.argwhere(both)[0])
            raise CycleError(f"{elements[i]} and {elements[j]} are mutually related")
        return cls(elements, closed, check=False)

    @classmethod
    def chain(cls, n, prefix="c"):
        labels = [f"{prefix}{i}" for i in range(n)]
        return cls(labels, np.triu(np.ones((n, n), dtype=bool)), check=False)

    @classmethod
    def antichain(cls, n, prefix="a"):
        labels = [f"{prefix}{i}" for i in range(n)]
        return cls(labels, np.eye(n, dtype=bool), check=False)

    def check(self):
        r = self.leq
        if not r.diagonal().all():
            raise ValueError("relation is not reflexive")
        anti = r & r.T
        np.fill_diagonal(anti, False)
        if anti.any():
            raise CycleError("relation is not antisymmetric")
        if (kernels.transitive_closure(r) != r).any():
            raise ValueError("relation is not transitive")

    def __len__(self):
        return len(self.elements)

    @property
    def n(self):
        return len(self.elements)

    def __eq__(self, other):
        return (isinstance(other, FinitePoset) and self.elements == other.elements
                and np.array_equal(self.leq, other.leq))

    def __hash__(self):
        return hash((self.elements, self.leq.tobytes()))

    def __repr__(self):
        rel = " ".join(f"{self.elements[i]}<{self.elements[j]}" for i, j in self.covers())
        return f"FinitePoset([{' '.join(self.elements)}], {rel or '-'})"

    def le(self, i, j):
        return bool(self.leq[i, j])

    @cached_property
    def up(self):
        """``up[i]`` is the bitmask of the principal filter of element i."""
        return tuple(sum(1 << j for j in np.flatnonzero(row)) for row in self.leq)

    @cached_property
    def down(self):
        return tuple(sum(1 << j for j in np.flatnonzero(col)) for col in self.leq.T)

    @cached_property
    def up_array(self):
        return np.asarray(self.up, dtype=np.int64)

    @property
    def full(self):
        return (1 << self.n) - 1

    @cached_property
    def _index(self):
        return {e: i for i, e in enumerate(self.elements)}

    def index(self, label):
        return self._index[str(label)]

    def mask(self, labels):
        m = 0
        for x in labels:
            m |= 1 << self.index(x)
        return m

    def labels(self, mask):
        return [self.elements[i] for i in bits(mask)]

    def format_set(self, mask):
        return "{" + ",".join(sorted(self.labels(mask))) + "}"

    def covers(self):
        """Hasse diagram edges (i, j) with i < j and nothing strictly between."""
        strict = self.leq.copy()
        np.fill_diagonal(strict, False)
        out = []
        for i in range(self.n):
            for j in np.flatnonzero(strict[i]):
                if not (strict[i] & strict[:, j]).any():
                    out.append((i, int(j)))
        return out

    def dual(self):
        return FinitePoset(self.elements, self.leq.T, check=False)

    def relabel(self, perm):
        """Poset with element ``i`` moved to position ``perm[i]``."""
        perm = np.asarray(perm)
        inv = np.argsort(perm)
        return FinitePoset([self.elements[k] for k in inv], self.leq[np.ix_(inv, inv)], check=False)

    def subposet(self, mask):
        idx = bits(mask)
        return FinitePoset([self.elements[i] for i in idx], self.leq[np.ix_(idx, idx)], check=False)

    def to_text(self):
        lines = ["elements: " + " ".join(self.elements)]
        rel = " ".join(f"{self.elements[i]}<{self.elements[j]}" for i, j in self.covers())
        lines.append("order: " + rel if rel else "order:")
        return "\n".join(lines) + "\n"


def parse_poset(text):
    """Parse the line-based poset format into a closed FinitePoset."""
    elements = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"line {lineno}: expected 'elements:' or 'order:'")
        key = key.strip()
        if key == "elements":
            if elements is not None:
                raise ParseError(f"line {lineno}: duplicate elements line")
            elements = rest.split()
            for name in elements:
                if not NAME_RE.match(name):
                    raise ParseError(f"line {lineno}: bad element name {name!r}")
            if len(set(elements)) != len(elements):
                raise ParseError(f"line {lineno}: duplicate element names")
        elif key == "order":
            for tok in rest.split():
                x, lt, y = tok.partition("<")
                if not lt or not x or not y or "<" in y:
                    raise ParseError(f"line {lineno}: bad relation {tok!r}")
                pairs.append((x, y, lineno))
        else:
            raise ParseError(f"line {lineno}: unknown key {key!r}")
    if elements is None:
        raise ParseError("missing elements line")
    if not elements:
        raise ParseError("empty poset")
    known = set(elements)
    for x, y, lineno in pairs:
        for name in (x, y):
            if name not in known:
                raise ParseError(f"line {lineno}: unknown element {name!r}")
    return FinitePoset.from_relations(elements, [(x, y) for x, y, _ in pairs])


def load_poset(path):
    with open(path, encoding="utf-8") as fh:
        return parse_poset(fh.read())


def up_closure(P, S):
    out = 0
    for i in bits(S):
        out |= P.up[i]
    return out


def down_closure(P, S):
    out = 0
    for i in bits(S):
        out |= P.down[i]
    return out


def is_upper(P, S):
    return up_closure(P, S) == S


def minimal_elements(P, S):
    out = 0
    for i in bits(S):
        # strictly smaller members of S
        if (P.down[i] & S) == (1 << i):
            out |= 1 << i
    return out


def maximal_elements(P, S):
    out = 0
    for i in bits(S):
        if (P.up[i] & S) == (1 << i):
            out |= 1 << i
    return out


def is_directed(P, S):
    """Nonempty and every pair of members has an upper bound inside S."""
    idx = bits(S)
    if not idx:
        return False
    for a, i in enumerate(idx):
        for j in idx[a + 1:]:
            if not (P.up[i] & P.up[j] & S):
                return False
    return True


def upper_bounds(P, S):
    ub = P.full
    for i in bits(S):
        ub &= P.up[i]
    return ub


def lower_bounds(P, S):
    lb = P.full
    for i in bits(S):
        lb &= P.down[i]
    return lb


def sup(P, S):
    """Least upper bound of S in P, or None."""
    ub = upper_bounds(P, S)
    for c in bits(ub):
        if ub & ~P.up[c] == 0:
            return c
    return None


def inf(P, S):
    """Greatest lower bound of S in P, or None."""
    lb = lower_bounds(P, S)
    for c in bits(lb):
        if lb & ~P.down[c] == 0:
            return c
    return None


def is_chain(P, S):
    idx = bits(S)
    for a, i in enumerate(idx):
        for j in idx[a + 1:]:
            if not (P.leq[i, j] or P.leq[j, i]):
                return False
    return True


def linear_extension(P):
    """Indices sorted so that i precedes j whenever i < j."""
    return sorted(range(P.n), key=lambda i: (popcount(P.down[i]), i))


def export_dot(P, name="P"):
    """Hasse diagram (covers only) as Graphviz DOT text."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for e in P.elements:
        lines.append(f'  "{e}";')
    for i, j in P.covers():
        lines.append(f'  "{P.elements[i]}" -> "{P.elements[j]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
