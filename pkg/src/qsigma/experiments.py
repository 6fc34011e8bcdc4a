"""Q-uniqueness scan, sufficient-condition reports and the implication matrix."""

import csv
import io
import json
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from . import constants
from .analysis import (PropertyReport, SP, check_KL_equivalence, decomposition_condition, has_property_KL,
                       is_co_sober, is_KD, is_Q_determined, kirr, well_filtered_report)
from .canon import are_isomorphic, backtrack_isomorphism, canonical_code
from .domain import fin, is_domain, is_quasicontinuous, way_below
from .enumerate import poset_levels
from .errors import ResourceLimitError
from .poset import bits, minimal_elements, up_closure
from .topology import compute_Q, scott_opens, upper_sets


@dataclass
class ScanResult:
    n_max: int
    classes: int
    counts: list                      # classes of each exact size 1..n_max
    collisions: list = field(default_factory=list)   # [code_a, code_b] hex pairs
    invariant_violations: list = field(default_factory=list)
    seconds: float = 0.0

    def to_dict(self, timing=False):
        d = {"n_max": self.n_max, "classes": self.classes, "counts": self.counts,
             "collisions": self.collisions, "invariant_violations": self.invariant_violations}
        if timing:
            d["seconds"] = round(self.seconds, 3)
        return d

    def summary(self):
        return f"{len(self.collisions)} collisions / {self.classes} classes"


def _hex(code):
    return f"{code.n}:{code.code.hex()}"


def _q_code(args):
    P, mutant = args
    Q = compute_Q(P, _skip_saturation=mutant)
    return canonical_code(Q.order)


def q_uniqueness_scan(n_max=constants.SCAN_N_MAX, workers=1, _mutant=False):
    """Group every poset class of size <= n_max by the canonical code of its
    Q-poset; any group with two members is a collision.

    ``_mutant`` disables the saturation screen in compute_Q (test-only).
    """
    if n_max > constants.SCAN_N_MAX + 1:
        raise ResourceLimitError(f"scan is capped at n <= {constants.SCAN_N_MAX + 1}")
    t0 = time.perf_counter()
    levels = poset_levels(n_max)
    posets = [P for level in levels for P in level]
    jobs = [(P, _mutant) for P in posets]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            codes = list(ex.map(_q_code, jobs, chunksize=16))
    else:
        codes = [_q_code(j) for j in jobs]

    groups = defaultdict(list)
    for i, c in enumerate(codes):
        groups[c].append(i)
    res = ScanResult(n_max, len(posets), [len(l) for l in levels])
    for c in sorted(groups):
        for i, j in combinations(groups[c], 2):
            P, M = posets[i], posets[j]
            pair = sorted([_hex(canonical_code(P)), _hex(canonical_code(M))])
            res.collisions.append(pair)
            QP = compute_Q(P, _skip_saturation=_mutant).order
            QM = compute_Q(M, _skip_saturation=_mutant).order
            if are_isomorphic(QP, QM) is None or are_isomorphic(P, M) is not None:
                res.invariant_violations.append(pair)
    res.collisions.sort()
    res.seconds = time.perf_counter() - t0
    return res


def validate_grouping(n_max=4):
    """Pairwise fallback: backtracking isomorphism of Q-posets agrees with
    the canonical-code grouping. Returns the list of disagreeing index pairs."""
    posets = [P for level in poset_levels(n_max) for P in level]
    qs = [compute_Q(P).order for P in posets]
    codes = [canonical_code(q) for q in qs]
    bad = []
    for i, j in combinations(range(len(posets)), 2):
        iso = backtrack_isomorphism(qs[i], qs[j]) is not None
        if iso != (codes[i] == codes[j]):
            bad.append((i, j))
    return bad


# ------------------------------------------------------------ hypothesis bundles

def _bundle(name, parts, source):
    verdict = all(parts.values())
    witness = None if verdict else {k: v for k, v in parts.items() if not v}
    return PropertyReport(name, verdict, witness=witness,
                          notes=["computed", source] + [f"{k}={v}" for k, v in parts.items()])


def hypothesis_report(P, qq_cap=constants.QQ_MAX_N):
    """One report per sufficient-condition bundle for Q-uniqueness."""
    Q = compute_Q(P)
    cs = is_co_sober(P, Q)
    out = [
        _bundle("quasicontinuous-domain", {"quasicontinuous": is_quasicontinuous(P)},
                "quasicontinuous domains"),
        _bundle("co-sober+quasicontinuous-decomposition",
                {"co-sober": cs, "quasicontinuous-decomposition": decomposition_condition(P, "quasicontinuous")},
                "directed decomposition into elements with quasicontinuous up-sets"),
        _bundle("co-sober+chain-decomposition",
                {"co-sober": cs, "chain-decomposition": decomposition_condition(P, "chain")},
                "directed decomposition into elements whose up-sets are chains"),
        _bundle("co-sober+kd-decomposition",
                {"co-sober": cs, "kd-decomposition": decomposition_condition(P, "kd")},
                "directed decomposition into elements with compact strict up-sets"),
        _bundle("kd+co-sober", {"kd": is_KD(P), "co-sober": cs}, "K_D posets"),
    ]
    if P.n <= qq_cap:
        out.append(_bundle("q-determined+co-sober", {"q-determined": is_Q_determined(P), "co-sober": cs},
                           "Q-determined posets"))
    else:
        out.append(PropertyReport("q-determined+co-sober", None,
                                  notes=["resource cap", f"Q(Q)-dependent check capped at n <= {qq_cap}"],
                                  bounds={"qq_max_n": qq_cap}))
    wwf = well_filtered_report(P, weak=True, Q=Q)
    out.append(_bundle("weakly-well-filtered+co-sober", {"weakly-well-filtered": bool(wwf.verdict), "co-sober": cs},
                       "weakly well-filtered posets"))
    try:
        out.append(_bundle("kl", {"kl": has_property_KL(P, Q)}, "Property (KL)"))
    except ResourceLimitError as e:
        out.append(PropertyReport("kl", None, notes=["resource cap", str(e)]))
    return out


# ------------------------------------------------------------ implication matrix

def _scott_is_upper(P):
    return set(scott_opens(P, definitional=True).opens) == set(upper_sets(P))


def _q_members_upper_min(P):
    Q = compute_Q(P)
    nonempty_upper = {u for u in upper_sets(P) if u}
    return set(Q.members) == nonempty_upper and all(
        up_closure(P, minimal_elements(P, K)) == K for K in Q.members)


def _kirr_principal(P):
    Q = compute_Q(P)
    return set(kirr(Q)) == set(P.up)


def _quasicontinuous_def(P):
    return is_quasicontinuous(P, definitional=True) and is_domain(P, definitional=True)


def _q_domain(P):
    return not is_quasicontinuous(P) or is_domain(compute_Q(P).order)


def _kl_equiv(P):
    return bool(check_KL_equivalence(P).verdict)


def _way_below_agree(P):
    for G in range(1, 1 << P.n):
        for H in range(1, 1 << P.n):
            if way_below(P, G, H) != way_below(P, G, H, definitional=True):
                return False
    return True


def _fin_agree(P):
    return all(fin(P, x) == fin(P, x, definitional=True) for x in range(P.n))


def _q_determined(P):
    return is_Q_determined(P)


def _well_filtered(P):
    Q = compute_Q(P)
    return (well_filtered_report(P, True, definitional=True, Q=Q).verdict
            and well_filtered_report(P, False, definitional=True, Q=Q).verdict)


def _sp_principal(P):
    Q = compute_Q(P)
    QQ = compute_Q(Q.order)
    return {Q.members[i] for i in bits(SP(Q.order, QQ))} == set(P.up)


# name -> (check, max n, description)
IMPLICATIONS = {
    "scott-opens=upper-sets": (_scott_is_upper, 5, "Scott opens are exactly the upper sets"),
    "q-members=up-min": (_q_members_upper_min, 5, "Q members are the nonempty upper sets and K = up(min K)"),
    "kirr=principal": (_kirr_principal, 5, "k-irreducibles are the principal filters"),
    "quasicontinuous+domain": (_quasicontinuous_def, 5, "definitional quasicontinuity and continuity"),
    "quasicontinuous=>q-domain": (_q_domain, 5, "quasicontinuous implies the Q-poset is a domain"),
    "kl<=>co-sober+chain": (_kl_equiv, 4, "(KL) iff co-sober with chain decomposition"),
    "way-below-fast=definitional": (_way_below_agree, 4, "fast way-below agrees with the directed-set definition"),
    "fin-fast=definitional": (_fin_agree, 4, "fast fin(x) agrees with the definition"),
    "q-determined": (_q_determined, constants.QQ_MAX_N, "every poset is Q-determined"),
    "well-filtered": (_well_filtered, 4, "weakly well-filtered and well-filtered by enumeration"),
    "sp(q)=principal": (_sp_principal, constants.QQ_MAX_N, "strongly primes of the Q-poset are the principal filters"),
}


def implication_matrix(n_max=4, names=None, caps=None):
    """Violation counts per implication and size. Cells above an
    implication's cap hold None."""
    names = list(IMPLICATIONS) if names is None else list(names)
    caps = dict(caps or {})
    levels = poset_levels(n_max)
    rows = {}
    for name in names:
        check, cap, _ = IMPLICATIONS[name]
        cap = caps.get(name, cap)
        row = []
        for n, level in enumerate(levels, start=1):
            if n > cap:
                row.append(None)
                continue
            row.append(sum(0 if check(P) else 1 for P in level))
        rows[name] = row
    return {"n_max": n_max, "sizes": list(range(1, n_max + 1)), "violations": rows,
            "caps": {k: caps.get(k, IMPLICATIONS[k][1]) for k in names}}


def matrix_all_zero(matrix):
    return all(v in (0, None) for row in matrix["violations"].values() for v in row)


def matrix_to_csv(matrix):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["implication"] + [f"n={n}" for n in matrix["sizes"]])
    for name, row in matrix["violations"].items():
        w.writerow([name] + ["" if v is None else v for v in row])
    return buf.getvalue()


def matrix_to_json(matrix):
    return json.dumps(matrix, sort_keys=True)
