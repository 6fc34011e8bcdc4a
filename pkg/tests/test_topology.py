import json

import numpy as np
import pytest
from hypothesis import given, settings

from oracles import brute_upper_sets, posets
from qsigma.enumerate import poset_levels
from qsigma.errors import PreconditionError, ResourceLimitError
from qsigma.poset import FinitePoset, minimal_elements, parse_poset, up_closure
from qsigma.topology import (FiniteTopology, co_compact_closed_sets, compute_Q, directed_subsets, is_compact,
                             is_irreducible_closed, is_saturated, is_sober, is_TD, q_as_poset, saturation,
                             scott_opens, smyth_leq, sobriety_witness, specialization_order, upper_sets)
from qsigma.zoo import E23, E33, FLAT


def names(P, fam):
    return sorted(P.format_set(s) for s in fam)


def test_scott_chain():
    P = parse_poset("elements: a b\norder: a<b")
    assert names(P, scott_opens(P).opens) == ["{a,b}", "{b}", "{}"]


def test_scott_antichain():
    for n in range(1, 6):
        assert len(scott_opens(FinitePoset.antichain(n)).opens) == 2 ** n


def test_scott_v(V):
    T = scott_opens(V)
    assert names(V, T.opens) == ["{a,b,z}", "{a,b}", "{a}", "{b}", "{}"]
    T.check()


def test_dump_format(V):
    assert scott_opens(V).dump().splitlines()[0] == "{}"


def test_scott_definitional_rejects_non_scott_upper_set():
    # the definitional test is live: feeding it a fake sup makes it reject
    from qsigma._accel import as_mask_array, kernels
    P = parse_poset("elements: a b\norder: a<b")
    ok = kernels.scott_test(as_mask_array([0b10]), np.array([0b01], dtype=np.int64),
                            np.array([1], dtype=np.int64))
    assert not ok[0]


def test_directed_subsets_v(V):
    ds = dict(directed_subsets(V))
    assert V.mask(["a", "b"]) not in ds
    assert ds[V.mask(["z", "a"])] == V.index("a")


def test_saturation_examples():
    P = parse_poset("elements: a b\norder: a<b")
    T = scott_opens(P)
    assert not is_saturated(T, P.mask(["a"]))
    assert saturation(T, P.mask(["a"])) == P.full
    for u in T.opens:
        assert is_saturated(T, u)


def test_compact_trivial_and_cover_path(V):
    T = scott_opens(V)
    for S in range(1 << V.n):
        assert is_compact(T, S)
        assert is_compact(T, S, use_covers=True)


def test_cover_path_cap():
    T = scott_opens(FinitePoset.antichain(5))
    with pytest.raises(ResourceLimitError):
        is_compact(T, 1, use_covers=True)


def test_smyth():
    P = parse_poset("elements: a b\norder: a<b")
    A = FinitePoset.antichain(2)
    assert smyth_leq(P, 1, 1)
    assert smyth_leq(P, P.mask(["a"]), P.mask(["b"]))
    assert not smyth_leq(A, 1, 2)


def test_q_antichain(anti2):
    Q = compute_Q(anti2)
    assert names(anti2, Q.members) == ["{a,b}", "{a}", "{b}"]
    bottom = Q.index(anti2.full)
    assert all(Q.order.leq[bottom, j] for j in range(len(Q)))
    Q.check()


def test_q_e23_truncation():
    for d in (1, 3, 5):
        L = E23.truncate(depth=d)
        Q = compute_Q(L)
        assert set(Q.members) == {L.full} | set(L.up)


def test_q_flat_truncation():
    for w in (1, 3, 5):
        L = FLAT.truncate(width=w)
        Q = compute_Q(L)
        assert len(Q) == 2 ** w
        tops = L.full & ~L.mask(["bot"])
        assert set(Q.members) == {L.full} | {S for S in range(1, 1 << L.n) if S & ~tops == 0}


def test_q_json(V):
    d = json.loads(compute_Q(V).to_json())
    assert sorted(map(tuple, d["members"])) == [("a",), ("a", "b"), ("a", "b", "z"), ("b",)]
    assert len(d["order_edges"]) == 3


def test_q_cap():
    with pytest.raises(ResourceLimitError):
        compute_Q(FinitePoset.antichain(6), cap=10)


def test_q_above_subset_scan_threshold_matches_upper_sets():
    P = FinitePoset.chain(18)
    Q = compute_Q(P)
    assert set(Q.members) == set(P.up)
    A = FinitePoset.antichain(17)
    QA = compute_Q(A, cap=2 ** 17)
    assert len(QA) == 2 ** 17 - 1
    with pytest.raises(ResourceLimitError):
        QA.order


def test_co_compact_antichain(anti2):
    C = co_compact_closed_sets(anti2, compute_Q(anti2))
    assert names(anti2, C.closed_sets) == ["{a,b}", "{a}", "{b}", "{}"]
    assert C.closed


def test_co_compact_chain():
    P = parse_poset("elements: a b\norder: a<b")
    C = co_compact_closed_sets(P, compute_Q(P))
    assert names(P, C.closed_sets) == ["{a,b}", "{b}", "{}"]


def test_co_compact_e23_collapse():
    L = E23.truncate(depth=4)
    C = co_compact_closed_sets(L, compute_Q(L))
    meet = L.up[L.index("a")] & L.up[L.index("b")]
    assert meet == L.up[L.index("-4")]
    assert set(C.closed_sets) == {0, L.full} | set(L.up)


def test_irreducible_closed():
    P = parse_poset("elements: a b\norder: a<b")
    T = scott_opens(P)
    for x in range(P.n):
        assert is_irreducible_closed(T, T.point_closure(x))
    D = FinitePoset.antichain(2)
    TD = scott_opens(D)
    assert not is_irreducible_closed(TD, D.full)
    with pytest.raises(PreconditionError):
        is_irreducible_closed(TD, 0)


def test_irreducible_closed_requires_closed(V):
    T = scott_opens(V)
    with pytest.raises(PreconditionError):
        is_irreducible_closed(T, V.mask(["a"]))


def test_e33_meet_irreducible_only_at_width_one():
    # in a truncation the maximal points are compact singletons, so the
    # antichain above a and b splits once it has two points
    for w, expected in [(1, True), (2, False), (4, False)]:
        L = E33.truncate(width=w)
        C = co_compact_closed_sets(L, compute_Q(L))
        A = L.up[L.index("a")] & L.up[L.index("b")]
        assert C.is_closed(A)
        assert is_irreducible_closed(C, A) is expected


def test_e33_co_compact_td():
    for w in (1, 3, 5):
        L = E33.truncate(width=w)
        assert is_TD(co_compact_closed_sets(L, compute_Q(L)))


def test_indiscrete_space():
    # every nonempty irreducible closed set of a finite space is a point
    # closure, so even the non-T0 indiscrete space passes; it has no
    # specialization partial order though
    P = FinitePoset.antichain(2)
    T = FiniteTopology(P, (0, P.full))
    assert is_sober(T) and sobriety_witness(T) is None
    with pytest.raises(PreconditionError):
        specialization_order(T)


def test_sierpinski_sober():
    P = parse_poset("elements: a b\norder: a<b")
    assert is_sober(scott_opens(P))


def test_topology_check_rejects_bad_family(V):
    with pytest.raises(ValueError):
        FiniteTopology(V, (0, 1, 2, V.full)).check()


# ---------------------------------------------------------------- exhaustive laws

def small(n_max=5):
    return [P for level in poset_levels(n_max) for P in level]


def test_scott_opens_are_upper_sets_n_le_5():
    for P in small():
        defin = set(scott_opens(P, definitional=True).opens)
        assert defin == set(brute_upper_sets(P)) == set(upper_sets(P))


def test_q_members_nonempty_upper_and_up_min_n_le_5():
    for P in small():
        Q = compute_Q(P)
        assert set(Q.members) == {S for S in brute_upper_sets(P) if S}
        for K in Q.members:
            assert up_closure(P, minimal_elements(P, K)) == K
        assert Q.order.leq.tolist() == [[b & ~a == 0 for b in Q.members] for a in Q.members]


def test_specialization_of_scott_is_P_n_le_5():
    for P in small():
        S = specialization_order(scott_opens(P))
        assert np.array_equal(S.leq, P.leq)


def test_scott_space_sober_n_le_5():
    for P in small():
        assert is_sober(scott_opens(P))


def test_co_compact_closure_and_dual_specialization_n_le_4():
    for P in small(4):
        C = co_compact_closed_sets(P, compute_Q(P))
        fam = set(C.closed_sets)
        for a in fam:
            for b in fam:
                assert a | b in fam and a & b in fam
        S = specialization_order(C)
        assert np.array_equal(S.leq, P.leq.T)


def test_q_as_poset_is_order(V):
    Q = compute_Q(V)
    assert q_as_poset(Q) is Q.order
    Q.order.check()


@settings(max_examples=30, deadline=None)
@given(posets(max_n=7))
def test_random_q_members_are_nonempty_upper_sets(P):
    Q = compute_Q(P)
    assert all(K and up_closure(P, K) == K for K in Q.members)
    assert len(Q) == len(upper_sets(P)) - 1


def test_skip_saturation_mutant_changes_q(V):
    assert len(compute_Q(V, _skip_saturation=True)) == 7
    with pytest.raises(PreconditionError):
        compute_Q(FinitePoset.chain(17), _skip_saturation=True)
