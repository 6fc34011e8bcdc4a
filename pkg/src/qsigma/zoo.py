"""Decidable presentations of the infinite example posets, and bounded checks
of the claims and witness constructions attached to them.

Entries (CLI names):

``e23``            {a, b} below a descending chain -1 > -2 > -3 > ...
``e33``            {a, b} below every natural number (an infinite antichain)
``flat``           the flat naturals: bot below the antichain 1, 2, 3, ...
``e316-2``         chain 1 < 2 < ... < inf, inf below an N x N grid of
                   columns, every grid point below top
``johnstone``      Johnstone's dcpo J = N x (N + {w})
``johnstone-top``  J with a top element added

Element enumeration orders (fixed, so bounds are reproducible):

* ``e23``: a, b, -1, -2, ...;  ``e33``: a, b, 1, 2, ...;  ``flat``: bot, 1, 2, ...
* ``e316-2``: inf, top, then stage s = 1, 2, ...: chain element s followed by
  the grid points (m, n) with max(m, n) = s in lexicographic order
* ``johnstone``: stage s = 1, 2, ...: the points (m, n) with max(m, n) = s in
  lexicographic order, then (s, w); ``johnstone-top`` puts top first

Truncations list elements column by column with the w-row last.

Witnesses are data (generators plus escape functions); verification is
bounded model checking over the first ``element_bound`` enumerated elements.
Nothing here proves a claim about the infinite poset.
"""

import math
from dataclasses import dataclass, field
from itertools import chain as ichain
from itertools import combinations, count
from typing import Callable, Optional

from . import constants
from .analysis import PropertyReport, decomposition_failure, is_co_sober, is_KD, kirr
from .errors import PreconditionError, WitnessError
from .poset import FinitePoset, bits, up_closure
from .topology import co_compact_closed_sets, compute_Q, is_compact, is_saturated, is_TD, scott_opens

W = math.inf  # the w-row index of Johnstone's dcpo


@dataclass(frozen=True)
class SymbolicPoset:
    name: str
    description: str
    leq: Callable
    elements: Callable          # () -> infinite iterator in the documented order
    truncation: Callable        # **params -> list of elements
    label: Callable
    params: dict                # parameter name -> default
    caveats: tuple = ()

    def first(self, k):
        it = self.elements()
        return [next(it) for _ in range(k)]

    def truncate(self, **params):
        p = dict(self.params)
        for key, val in params.items():
            if key not in p:
                raise PreconditionError(f"{self.name}: unknown parameter {key!r}")
            p[key] = val
        for key, val in p.items():
            if not isinstance(val, int) or val < 1:
                raise PreconditionError(f"{self.name}: parameter {key} must be a positive integer")
        els = self.truncation(**p)
        return self.finite(els)

    def finite(self, els):
        """The finite induced subposet on ``els``."""
        leq = [[bool(self.leq(x, y)) for y in els] for x in els]
        P = FinitePoset([self.label(e) for e in els], leq, check=False)
        P.symbols = tuple(els)
        return P


# ---------------------------------------------------------------- entries

def _e23_leq(x, y):
    if x == y:
        return True
    if y[0] != "neg":
        return False
    return x[0] in ("a", "b") or (x[0] == "neg" and y[1] <= x[1])


def _e23_label(x):
    return x[0] if x[0] in ("a", "b") else f"-{x[1]}"


E23 = SymbolicPoset(
    name="e23",
    description="two points a, b below the chain -1 > -2 > -3 > ...",
    leq=_e23_leq,
    elements=lambda: ichain([("a",), ("b",)], (("neg", n) for n in count(1))),
    truncation=lambda depth: [("a",), ("b",)] + [("neg", n) for n in range(1, depth + 1)],
    label=_e23_label,
    params={"depth": 3},
    caveats=("truncation has a least chain element, so up(a) & up(b) becomes principal",
             "the co-compact topology of every truncation is sober"),
)


def _two_below_leq(x, y):
    return x == y or (x[0] in ("a", "b") and y[0] == "n")


E33 = SymbolicPoset(
    name="e33",
    description="two points a, b below every natural number",
    leq=_two_below_leq,
    elements=lambda: ichain([("a",), ("b",)], (("n", k) for k in count(1))),
    truncation=lambda width: [("a",), ("b",)] + [("n", k) for k in range(1, width + 1)],
    label=lambda x: x[0] if x[0] in ("a", "b") else str(x[1]),
    params={"width": 4},
    caveats=("every subset of a truncation is compact, so truncations are K_D",),
)


FLAT = SymbolicPoset(
    name="flat",
    description="bot below the antichain of natural numbers",
    leq=lambda x, y: x == y or (x[0] == "bot" and y[0] == "n"),
    elements=lambda: ichain([("bot",)], (("n", k) for k in count(1))),
    truncation=lambda width: [("bot",)] + [("n", k) for k in range(1, width + 1)],
    label=lambda x: "bot" if x[0] == "bot" else str(x[1]),
    params={"width": 5},
    caveats=("up(bot) minus bot is finite, hence compact, in every truncation",),
)


def _m_leq(x, y):
    if x == y:
        return True
    tx, ty = x[0], y[0]
    if tx == "c":
        return (ty == "c" and x[1] <= y[1]) or ty in ("inf", "g", "top")
    if tx == "inf":
        return ty in ("g", "top")
    if tx == "g":
        return (ty == "g" and x[1] == y[1] and x[2] <= y[2]) or ty == "top"
    return False


def _m_label(x):
    if x[0] == "c":
        return str(x[1])
    if x[0] == "g":
        return f"({x[1]}_{x[2]})"
    return x[0]


def _m_elements():
    yield ("inf",)
    yield ("top",)
    for s in count(1):
        yield ("c", s)
        for p in sorted((m, n) for m in range(1, s + 1) for n in range(1, s + 1) if max(m, n) == s):
            yield ("g",) + p


def _m_truncation(columns, rows, depth):
    return ([("c", k) for k in range(1, depth + 1)] + [("inf",)]
            + [("g", m, n) for m in range(1, columns + 1) for n in range(1, rows + 1)] + [("top",)])


E316_2 = SymbolicPoset(
    name="e316-2",
    description="chain of naturals topped by inf, inf below a grid of columns, grid below top",
    leq=_m_leq,
    elements=_m_elements,
    truncation=_m_truncation,
    label=_m_label,
    params={"columns": 3, "rows": 3, "depth": 3},
    caveats=("every compact saturated set of a truncation has finitely many minimal elements",
             "the failure of quasicontinuity above inf needs the infinite grid"),
)


def _j_leq(x, y):
    (j, k), (m, n) = x[1:], y[1:]
    return (j == m and k <= n) or (n == W and k <= m)


def _j_label(x):
    return f"({x[1]}_{'w' if x[2] == W else x[2]})"


def _j_elements():
    for s in count(1):
        for p in sorted((m, n) for m in range(1, s + 1) for n in range(1, s + 1) if max(m, n) == s):
            yield ("j",) + p
        yield ("j", s, W)


def _j_truncation(c, r):
    return ([("j", m, n) for m in range(1, c + 1) for n in range(1, r + 1)]
            + [("j", m, W) for m in range(1, c + 1)])


JOHNSTONE = SymbolicPoset(
    name="johnstone",
    description="Johnstone's dcpo: columns N x (N + {w}); (j,k) <= (m,w) whenever k <= m",
    leq=_j_leq,
    elements=_j_elements,
    truncation=_j_truncation,
    label=_j_label,
    params={"c": 3, "r": 3},
    caveats=("truncations are finite, hence well-filtered and sober in the Scott topology",
             "computed Q of a truncation contains sets outside the claimed family"),
)


def _s_leq(x, y):
    if y[0] == "top":
        return True
    if x[0] == "top":
        return False
    return _j_leq(x, y)


JOHNSTONE_TOP = SymbolicPoset(
    name="johnstone-top",
    description="Johnstone's dcpo with a top element",
    leq=_s_leq,
    elements=lambda: ichain([("top",)], _j_elements()),
    truncation=lambda c, r: _j_truncation(c, r) + [("top",)],
    label=lambda x: "top" if x[0] == "top" else _j_label(x),
    params={"c": 3, "r": 3},
    caveats=("truncations are finite, hence weakly well-filtered",),
)

ENTRIES = {S.name: S for S in (E23, E33, FLAT, E316_2, JOHNSTONE, JOHNSTONE_TOP)}


def get_entry(name):
    try:
        return ENTRIES[name]
    except KeyError:
        raise PreconditionError(f"unknown zoo entry {name!r}; choose from {sorted(ENTRIES)}") from None


# ---------------------------------------------------------------- order axioms

def verify_order_axioms(S, bound):
    els = S.first(bound)
    for x in els:
        if not S.leq(x, x):
            return PropertyReport("order-axioms", False, witness={"reflexivity": S.label(x)})
    for x, y in combinations(els, 2):
        if S.leq(x, y) and S.leq(y, x):
            return PropertyReport("order-axioms", False,
                                  witness={"antisymmetry": [S.label(x), S.label(y)]})
    for x in els:
        ups = [y for y in els if S.leq(x, y)]
        for y in ups:
            for z in els:
                if S.leq(y, z) and not S.leq(x, z):
                    return PropertyReport("order-axioms", False,
                                          witness={"transitivity": [S.label(x), S.label(y), S.label(z)]})
    return PropertyReport("order-axioms", True, bounds={"bound": bound},
                          notes=[f"all triples of the first {bound} elements"])


# ---------------------------------------------------------------- claimed Q

@dataclass(frozen=True)
class ClaimedQFamily:
    """Members claimed compact saturated, generated inside a truncation."""

    description: str
    generate: Callable          # finite poset (with .symbols) -> iterable of bitmasks


def _union_closure(masks):
    fam = set(masks)
    frontier = list(fam)
    while frontier:
        new = []
        for a in frontier:
            for b in list(fam):
                c = a | b
                if c not in fam:
                    fam.add(c)
                    new.append(c)
        frontier = new
    return fam


def _e23_claimed(P):
    yield P.full
    yield from P.up


def _flat_claimed(P):
    yield P.full
    naturals = [i for i, x in enumerate(P.symbols) if x[0] == "n"]
    for r in range(1, len(naturals) + 1):
        for F in combinations(naturals, r):
            yield sum(1 << i for i in F)


def _max_row(P):
    return [i for i, x in enumerate(P.symbols) if x[0] == "j" and x[2] == W]


def _finite_up_sets(P):
    lows = [i for i, x in enumerate(P.symbols) if x[0] == "j" and x[2] != W]
    return _union_closure(P.up[i] for i in lows)


def _subsets_of(idx):
    for r in range(len(idx) + 1):
        for F in combinations(idx, r):
            yield sum(1 << i for i in F)


def _johnstone_claimed(P):
    for A in _subsets_of(_max_row(P)):
        if A:
            yield A
    yield from _finite_up_sets(P)


def _johnstone_top_claimed(P):
    top = 1 << P.symbols.index(("top",))
    for A in _subsets_of(_max_row(P)):
        yield A | top
    yield from _finite_up_sets(P)


CLAIMED_Q = {
    "e23": ClaimedQFamily("the whole space and every principal filter", _e23_claimed),
    "flat": ClaimedQFamily("the whole space and every nonempty finite set of naturals", _flat_claimed),
    "johnstone": ClaimedQFamily("all nonempty sets of maximal points, and up-closures of finite "
                                "sets of non-maximal points", _johnstone_claimed),
    "johnstone-top": ClaimedQFamily("sets of maximal points of J with top added, and up-closures of "
                                    "finite sets of non-maximal points", _johnstone_top_claimed),
}


def verify_claimed_q_soundness(S, C, **params):
    """Each claimed member, restricted to the truncation, is compact saturated
    there. Completeness is not asserted; extra computed members are reported."""
    P = S.truncate(**params)
    T = scott_opens(P)
    claimed = sorted({K for K in C.generate(P) if K})
    unsound = [K for K in claimed if not (is_saturated(T, K) and is_compact(T, K))]
    Q = compute_Q(P)
    computed = set(Q.members)
    extras = sorted(computed - set(claimed))
    notes = [f"claimed members in truncation: {len(claimed)}",
             f"computed |Q|: {len(Q)}",
             f"computed equals claimed: {not extras and not unsound}",
             f"computed extras: {len(extras)}",
             "completeness not asserted: every subset of a finite space is compact"]
    notes += [f"caveat: {c}" for c in S.caveats]
    witness = None
    if unsound:
        witness = {"unsound": [P.format_set(K) for K in unsound[:10]]}
    elif extras:
        witness = {"extras_sample": [P.format_set(K) for K in extras[:10]]}
    return PropertyReport("claimed-q-soundness", not unsound, witness=witness, notes=notes,
                          bounds={"params": dict(params) or dict(S.params)})


# ---------------------------------------------------------------- non-compactness

@dataclass(frozen=True)
class NonCompactnessWitness:
    description: str
    target: Callable            # element -> bool
    cover: Callable             # index -> (element -> bool), a Scott-open set
    locate: Callable            # target element -> index of a cover member containing it
    escape: Callable            # frozenset of indices -> target element outside their union, or None


def _is_upper_on(S, member, frag):
    for x in frag:
        if member(x):
            for y in frag:
                if S.leq(x, y) and not member(y):
                    return (x, y)
    return None


def verify_noncompactness(S, W_, element_bound=constants.ELEMENT_BOUND,
                          subfamily_bound=constants.SUBFAMILY_BOUND):
    frag = S.first(element_bound)
    used = set(range(subfamily_bound))
    for x in frag:
        if W_.target(x):
            i = W_.locate(x)
            if not W_.cover(i)(x):
                return PropertyReport("non-compactness", False,
                                      witness={"uncovered": S.label(x), "cover_index": i})
            used.add(i)
    for i in sorted(used):
        bad = _is_upper_on(S, W_.cover(i), frag)
        if bad:
            return PropertyReport("non-compactness", False,
                                  witness={"not_upper": i, "pair": [S.label(bad[0]), S.label(bad[1])]})
    checked = 0
    for r in range(1, subfamily_bound + 1):
        for F in combinations(range(subfamily_bound), r):
            e = W_.escape(frozenset(F))
            if e is None:
                return PropertyReport("non-compactness", False,
                                      witness={"not_a_witness": list(F)})
            if not W_.target(e) or any(W_.cover(i)(e) for i in F):
                raise WitnessError(f"escape element {S.label(e)} for subfamily {F} is covered "
                                   "or outside the target")
            checked += 1
    return PropertyReport(
        "non-compactness", True,
        notes=[f"witnessed non-compactness at bounds: {W_.description}",
               f"{checked} finite subfamilies escaped",
               "fragment is finite: every directed subset has a greatest element"],
        bounds={"element_bound": element_bound, "subfamily_bound": subfamily_bound})


def _singleton_cover(kind):
    return NonCompactnessWitness(
        description="naturals covered by their singletons",
        target=lambda x: x[0] == kind,
        cover=lambda i: (lambda x, i=i: x == (kind, i + 1)),
        locate=lambda x: x[1] - 1,
        escape=lambda F: (kind, max(F) + 2),
    )


def _grid_cover(m_of=lambda n: 1):
    """Cover of the set K with one minimal grid point (n, m_n) per column:
    U_n removes the down-sets of the minimal points of every other column."""

    def below_other_columns(x, n):
        # x lies below (k, m_k) for some column k != n
        if x[0] in ("c", "inf"):
            return True
        if x[0] == "g":
            return x[1] != n and x[2] <= m_of(x[1])
        return False

    return NonCompactnessWitness(
        description="grid points (n, m_n) covered by U_n = M minus the down-sets of (k, m_k), k != n",
        target=lambda x: x[0] == "top" or (x[0] == "g" and x[2] >= m_of(x[1])),
        cover=lambda i: (lambda x, n=i + 1: not below_other_columns(x, n)),
        locate=lambda x: x[1] - 1 if x[0] == "g" and x[2] == m_of(x[1]) else 0,
        escape=lambda F: ("g", max(F) + 2, m_of(max(F) + 2)),
    )


NONCOMPACTNESS = {
    "flat": _singleton_cover("n"),
    "e33": _singleton_cover("n"),
    "e316-2": _grid_cover(),
}


# ---------------------------------------------------------------- filtered families

@dataclass(frozen=True)
class FilteredFamilyWitness:
    description: str
    member: Callable            # frozenset F -> (element -> bool)
    indices: Callable           # fragment -> index universe for F
    target: Callable            # element -> bool, an open set
    escape: Callable            # F -> element of K_F outside the target, or None
    target_empty: bool = False


def verify_wwf_failure(S, W_, bound=constants.SUBFAMILY_BOUND, element_bound=constants.ELEMENT_BOUND):
    frag = S.first(element_bound)
    prop = "well-filtered-failure" if W_.target_empty else "weakly-well-filtered-failure"
    universe = sorted(W_.indices(frag))
    index_sets = [frozenset(F) for r in range(min(bound, len(universe)) + 1)
                  for F in combinations(universe, r)]
    bounds = {"bound": bound, "element_bound": element_bound, "index_sets": len(index_sets)}
    bad = _is_upper_on(S, W_.target, frag)
    if bad:
        return PropertyReport(prop, False, bounds=bounds, witness={"target_not_upper": [S.label(v) for v in bad]})
    members = {F: [x for x in frag if W_.member(F)(x)] for F in index_sets}
    for F, xs in members.items():
        bad = _is_upper_on(S, W_.member(F), frag)
        if bad:
            return PropertyReport(prop, False, bounds=bounds,
                                  witness={"member_not_upper": sorted(F), "pair": [S.label(v) for v in bad]})
    # (i) filtered
    for F, G in combinations(index_sets, 2):
        both = W_.member(F | G)
        for x in frag:
            if both(x) and not (W_.member(F)(x) and W_.member(G)(x)):
                return PropertyReport(prop, False, bounds=bounds,
                                      witness={"not_filtered": [sorted(F), sorted(G)], "element": S.label(x)})
    # (ii) the intersection lies inside the target
    common = set(frag)
    for xs in members.values():
        common &= set(xs)
    stray = [x for x in frag if x in common and not W_.target(x)]
    if stray:
        return PropertyReport(prop, False, bounds=bounds,
                              witness={"intersection_escapes_target": S.label(stray[0])})
    # (iii) no member inside the target
    for F in index_sets:
        e = W_.escape(F)
        if e is None:
            return PropertyReport(prop, False, bounds=bounds, witness={"not_a_witness": sorted(F)})
        if not W_.member(F)(e) or W_.target(e):
            raise WitnessError(f"escape element {S.label(e)} for {sorted(F)} is not in K_F minus the target")
    notes = [f"witnessed {prop.replace('-failure', '')} failure at bounds: {W_.description}"]
    if W_.target_empty:
        notes.append("weak variant inapplicable: the target open set is empty")
    return PropertyReport(prop, True, bounds=bounds, notes=notes)


def _omega_indices(frag):
    return {x[1] for x in frag if x[0] == "j" and x[2] == W}


def _first_missing(F):
    return next(m for m in count(1) if m not in F)


FILTERED = {
    # K_F = up(max J minus F) = (max J minus F) + {top}; the intersection is {top}
    "johnstone-top": FilteredFamilyWitness(
        description="K_F = up(maxJ minus F) with target {top}",
        member=lambda F: (lambda x: x[0] == "top" or (x[2] == W and x[1] not in F)),
        indices=_omega_indices,
        target=lambda x: x[0] == "top",
        escape=lambda F: ("j", _first_missing(F), W),
    ),
    # in J the same family has empty intersection
    "johnstone": FilteredFamilyWitness(
        description="K_F = maxJ minus F with target the empty set",
        member=lambda F: (lambda x: x[2] == W and x[1] not in F),
        indices=_omega_indices,
        target=lambda x: False,
        escape=lambda F: ("j", _first_missing(F), W),
        target_empty=True,
    ),
}


# ---------------------------------------------------------------- non-principality

def verify_nonprincipal(S, target, bound=constants.NONPRINCIPAL_BOUND):
    """For each of the first ``bound`` elements x in the target, exhibit a
    target element outside up(x) (searched among the first 2*bound)."""
    horizon = S.first(2 * bound)
    found = {}
    for x in horizon[:bound]:
        if not target(x):
            continue
        y = next((y for y in horizon if target(y) and not S.leq(x, y)), None)
        if y is None:
            return PropertyReport("non-principal", False, witness={"principal at": S.label(x)},
                                  bounds={"bound": bound})
        found[S.label(x)] = S.label(y)
    return PropertyReport("non-principal", True, witness=found, bounds={"bound": bound},
                          notes=["target differs from up(x) for every inspected x"])


def e23_meet_target(x):
    return x[0] == "neg"


# ---------------------------------------------------------------- co-compact formula

def verify_cocompact_formula(depth=constants.SUBFAMILY_BOUND):
    """Co-compact closed sets of a depth-n truncation of ``e23`` are the empty
    set, the whole space, the principal filters and up(a) & up(b); the last
    collapses to up(-n) in a truncation."""
    P = E23.truncate(depth=depth)
    Q = compute_Q(P)
    C = co_compact_closed_sets(P, Q)
    a, b = P.index("a"), P.index("b")
    expected = {0, P.full, P.up[a] & P.up[b]} | set(P.up)
    meet_collapses = (P.up[a] & P.up[b]) == P.up[P.index(f"-{depth}")]
    ok = set(C.closed_sets) == expected and meet_collapses
    witness = None if ok else {"computed": [P.format_set(c) for c in C.closed_sets],
                               "expected": [P.format_set(c) for c in sorted(expected)]}
    return PropertyReport("co-compact-formula", ok, witness=witness, bounds={"depth": depth},
                          notes=[f"meet of up(a), up(b) collapses to up(-{depth}): {meet_collapses}"])


# ---------------------------------------------------------------- K_D replay on S

def replay_kd_cases(bound=30):
    """Residual up(x) minus x in johnstone-top, by case.

    top: empty. Maximal (m, w): {top}. Non-maximal (m, n): up(m, n+1) together
    with up(n, w), since (m, n) <= (n, w) while (m, n+1) is not. The residual
    is a union of at most two principal filters, hence compact. Elements where
    up(m, n+1) alone falls short are reported in the notes.
    """
    S = JOHNSTONE_TOP
    horizon = S.first(4 * bound)
    literal_misses = []
    for x in S.first(bound):
        residual = {y for y in horizon if S.leq(x, y) and y != x}
        if x[0] == "top":
            expect = set()
        elif x[2] == W:
            expect = {("top",)}
        else:
            nxt = ("j", x[1], x[2] + 1)
            literal = {y for y in horizon if S.leq(nxt, y)}
            expect = literal | {y for y in horizon if S.leq(("j", x[2], W), y)}
            if residual != literal:
                literal_misses.append(S.label(x))
        if residual != expect:
            return PropertyReport("kd-cases", False, witness={"element": S.label(x)},
                                  bounds={"bound": bound})
    notes = ["residuals match the three cases on the bounded horizon",
             "non-maximal case uses up(m, n+1) | up(n, w)"]
    if literal_misses:
        notes.append(f"up(m, n+1) alone misses (n, w) at {len(literal_misses)} elements, "
                     f"first {literal_misses[0]}")
    return PropertyReport("kd-cases", True, bounds={"bound": bound}, notes=notes)


# ---------------------------------------------------------------- catalog

@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    executable: bool
    truncation: str             # how truncation affects the claim
    check: Optional[Callable] = None
    reason: str = ""

    def run(self):
        if not self.executable:
            return PropertyReport(self.id, None, notes=[f"recorded only: {self.reason}",
                                                        f"truncation: {self.truncation}"])
        rep = self.check()
        return PropertyReport(rep.property if rep.property == self.id else self.id, rep.verdict,
                              witness=rep.witness, bounds=rep.bounds,
                              notes=[self.statement, f"truncation: {self.truncation}"] + list(rep.notes))


@dataclass(frozen=True)
class ZooEntry:
    poset: SymbolicPoset
    claimed_q: Optional[ClaimedQFamily]
    noncompactness: Optional[NonCompactnessWitness]
    filtered: Optional[FilteredFamilyWitness]
    claims: tuple = field(default_factory=tuple)


def _bool_report(name, value, witness=None, **bounds):
    return PropertyReport(name, bool(value), witness=None if value else (witness or "computed false"),
                          bounds=bounds)


def _truncated(S, fn, name, **params):
    def run():
        P = S.truncate(**params)
        return _bool_report(name, fn(P), **params)
    return run


def _kirr_is(S, expected_fn, **params):
    def run():
        P = S.truncate(**params)
        got = set(kirr(compute_Q(P)))
        want = set(expected_fn(P))
        return _bool_report("kirr", got == want,
                            witness={"computed": [P.format_set(K) for K in sorted(got)]}, **params)
    return run


def _flat_kirr(P):
    return {P.full} | {1 << i for i, x in enumerate(P.symbols) if x[0] == "n"}


def _chain_decomp_fails_at_bot(P):
    return decomposition_failure(P, "chain") == P.symbols.index(("bot",))


def _cocompact_td(P):
    return is_TD(co_compact_closed_sets(P, compute_Q(P)))


def zoo_catalog():
    """One entry per symbolic poset, each with its claim table."""
    eb, sb = constants.ELEMENT_BOUND, constants.SUBFAMILY_BOUND
    cat = {}
    cat["e23"] = ZooEntry(E23, CLAIMED_Q["e23"], None, None, (
        Claim("q-family", "Q is the whole space plus all principal filters", True,
              "preserved: equality holds on every truncation",
              lambda: verify_claimed_q_soundness(E23, CLAIMED_Q["e23"], depth=6)),
        Claim("kirr", "kIRR is exactly the principal filters", True, "preserved",
              _kirr_is(E23, lambda P: set(P.up), depth=6)),
        Claim("co-sober", "the Scott space is co-sober", True, "preserved",
              _truncated(E23, is_co_sober, "co-sober", depth=6)),
        Claim("co-compact-formula", "co-compact closed sets: whole space, principal filters, up(a) & up(b)",
              True, "preserved up to the collapse of up(a) & up(b) onto up(-n)",
              lambda: verify_cocompact_formula(6)),
        Claim("non-principal", "up(a) & up(b) is not the up-set of any point", True,
              "destroyed by truncation; checked on the symbolic poset",
              lambda: verify_nonprincipal(E23, e23_meet_target, constants.NONPRINCIPAL_BOUND)),
        Claim("co-compact-not-sober", "the co-compact topology is not sober", False,
              "destroyed: every truncation's co-compact space is sober",
              reason="needs the infinite chain; supported by the co-compact formula and non-principality checks"),
    ))
    cat["e33"] = ZooEntry(E33, None, NONCOMPACTNESS["e33"], None, (
        Claim("co-compact-td", "the co-compact topology is T_D", True, "holds on every truncation",
              _truncated(E33, _cocompact_td, "co-compact-td", width=4)),
        Claim("not-kd", "up(a) minus a is not compact", True, "destroyed; witnessed on the symbolic poset",
              lambda: verify_noncompactness(E33, NONCOMPACTNESS["e33"], eb, sb)),
        Claim("truncation-kd", "finite truncations are K_D (truncation artifact)", True, "artifact",
              _truncated(E33, is_KD, "kd", width=4)),
    ))
    cat["flat"] = ZooEntry(FLAT, CLAIMED_Q["flat"], NONCOMPACTNESS["flat"], None, (
        Claim("q-family", "Q is the whole space plus all nonempty finite sets of naturals", True,
              "preserved: equality holds on every truncation",
              lambda: verify_claimed_q_soundness(FLAT, CLAIMED_Q["flat"], width=5)),
        Claim("kirr", "kIRR is the whole space plus the singletons", True, "preserved",
              _kirr_is(FLAT, _flat_kirr, width=5)),
        Claim("co-sober", "the Scott space is co-sober", True, "preserved",
              _truncated(FLAT, is_co_sober, "co-sober", width=5)),
        Claim("chain-decomposition-fails", "the chain decomposition fails at bot", True,
              "preserved for width >= 2", _truncated(FLAT, _chain_decomp_fails_at_bot, "chain-decomposition-fails", width=5)),
        Claim("not-kd", "up(bot) minus bot is not compact", True, "destroyed; witnessed on the symbolic poset",
              lambda: verify_noncompactness(FLAT, NONCOMPACTNESS["flat"], eb, sb)),
        Claim("quasicontinuous", "the poset is a quasicontinuous domain", False, "trivially true on truncations",
              reason="infinite claim; every finite poset is quasicontinuous"),
    ))
    cat["e316-2"] = ZooEntry(E316_2, None, NONCOMPACTNESS["e316-2"], None, (
        Claim("finite-minimals", "compact saturated sets have finitely many minimal elements", True,
              "destroyed; the U_n escape construction is checked on the symbolic poset",
              lambda: verify_noncompactness(E316_2, NONCOMPACTNESS["e316-2"], 30, 3)),
        Claim("co-sober", "the Scott space is co-sober", True, "preserved",
              _truncated(E316_2, is_co_sober, "co-sober", columns=3, rows=3, depth=3)),
        Claim("not-quasicontinuous-above-inf", "the up-set above inf is not quasicontinuous", False,
              "destroyed", reason="no nonempty finite set is way below top only in the infinite grid"),
    ))
    cat["johnstone"] = ZooEntry(JOHNSTONE, CLAIMED_Q["johnstone"], None, FILTERED["johnstone"], (
        Claim("claimed-q-soundness", "the claimed members are compact saturated", True,
              "soundness checked; computed extras reported",
              lambda: verify_claimed_q_soundness(JOHNSTONE, CLAIMED_Q["johnstone"], c=4, r=4)),
        Claim("kirr", "kIRR is exactly the principal filters (co-sobriety)", True, "preserved",
              _kirr_is(JOHNSTONE, lambda P: set(P.up), c=4, r=4)),
        Claim("not-well-filtered", "J is not well-filtered", True, "destroyed; witnessed on the symbolic poset",
              lambda: verify_wwf_failure(JOHNSTONE, FILTERED["johnstone"], sb, eb)),
        Claim("weakly-well-filtered", "J is weakly well-filtered", False, "trivially true on truncations",
              reason="infinite claim"),
        Claim("not-quasicontinuous", "J is not quasicontinuous", False, "destroyed",
              reason="every finite truncation is quasicontinuous"),
    ))
    cat["johnstone-top"] = ZooEntry(JOHNSTONE_TOP, CLAIMED_Q["johnstone-top"], None,
                                    FILTERED["johnstone-top"], (
        Claim("kd-cases", "up(x) minus x is compact, by the three-case analysis", True,
              "replayed symbolically", lambda: replay_kd_cases(30)),
        Claim("kd-truncation", "truncations are K_D", True, "preserved",
              _truncated(JOHNSTONE_TOP, is_KD, "kd", c=3, r=3)),
        Claim("claimed-q-soundness", "the claimed members are compact saturated", True,
              "soundness checked; computed extras reported",
              lambda: verify_claimed_q_soundness(JOHNSTONE_TOP, CLAIMED_Q["johnstone-top"], c=3, r=3)),
        Claim("co-sober", "the Scott space is co-sober", True, "preserved",
              _truncated(JOHNSTONE_TOP, is_co_sober, "co-sober", c=3, r=3)),
        Claim("not-weakly-well-filtered", "the Scott space is not weakly well-filtered", True,
              "destroyed; witnessed on the symbolic poset",
              lambda: verify_wwf_failure(JOHNSTONE_TOP, FILTERED["johnstone-top"], sb, eb)),
    ))
    return cat


def run_claims(name):
    entry = zoo_catalog()[get_entry(name).name]
    return [c.run() for c in entry.claims]
