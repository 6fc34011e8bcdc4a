import dataclasses

import numpy as np
import pytest

from qsigma import zoo
from qsigma.analysis import decomposition_failure, is_KD
from qsigma.errors import PreconditionError, WitnessError
from qsigma.poset import FinitePoset
from qsigma.zoo import (E23, E33, E316_2, ENTRIES, FLAT, JOHNSTONE, JOHNSTONE_TOP, W, FilteredFamilyWitness,
                        NonCompactnessWitness, get_entry, replay_kd_cases, verify_claimed_q_soundness,
                        verify_noncompactness, verify_nonprincipal, verify_order_axioms, verify_wwf_failure,
                        zoo_catalog)


def test_six_entries():
    assert sorted(ENTRIES) == ["e23", "e316-2", "e33", "flat", "johnstone", "johnstone-top"]
    assert len(zoo_catalog()) == 6
    with pytest.raises(PreconditionError):
        get_entry("nope")


def test_truncation_examples():
    assert E23.truncate(depth=3).elements == ("a", "b", "-1", "-2", "-3")
    L = FLAT.truncate(width=4)
    assert L.n == 5 and all(L.leq[L.index("bot")])
    J = JOHNSTONE.truncate(c=2, r=2)
    assert J.n == 6
    for k in (1, 2):
        assert J.leq[J.index(f"(1_{k})"), J.index("(1_w)")]      # own column
        assert J.leq[J.index(f"(1_{k})"), J.index("(2_w)")] == (k <= 2)
        assert J.leq[J.index(f"(2_{k})"), J.index("(1_w)")] == (k <= 1)


def test_truncation_param_errors():
    with pytest.raises(PreconditionError):
        E23.truncate(depth=0)
    with pytest.raises(PreconditionError):
        E23.truncate(width=2)


@pytest.mark.parametrize("name", sorted(ENTRIES))
def test_order_axioms(name):
    r = verify_order_axioms(ENTRIES[name], 50)
    assert r.verdict, r.witness


def test_corrupted_order_fails_antisymmetry():
    bad = dataclasses.replace(JOHNSTONE, leq=lambda x, y: x[2] <= y[2])
    r = verify_order_axioms(bad, 10)
    assert r.verdict is False and "antisymmetry" in r.witness
    assert set(r.witness["antisymmetry"]) == {"(1_1)", "(2_1)"}


@pytest.mark.parametrize("name", sorted(ENTRIES))
def test_truncation_agrees_with_predicate_and_is_coherent(name):
    S = ENTRIES[name]
    small = {k: 2 for k in S.params}
    big = {k: 3 for k in S.params}
    Ps, Pb = S.truncate(**small), S.truncate(**big)
    for P in (Ps, Pb):
        P.check()
        for i, x in enumerate(P.symbols):
            for j, y in enumerate(P.symbols):
                assert P.leq[i, j] == S.leq(x, y)
    # induced subposet
    idx = [Pb.symbols.index(x) for x in Ps.symbols]
    assert np.array_equal(Pb.leq[np.ix_(idx, idx)], Ps.leq)


def test_e23_claimed_q_equals_computed():
    for d in (2, 4, 6):
        r = verify_claimed_q_soundness(E23, zoo.CLAIMED_Q["e23"], depth=d)
        assert r.verdict and "computed equals claimed: True" in r.notes


def test_flat_claimed_q_equals_computed():
    r = verify_claimed_q_soundness(FLAT, zoo.CLAIMED_Q["flat"], width=5)
    assert r.verdict and "computed equals claimed: True" in r.notes
    assert "computed |Q|: 32" in r.notes


def test_johnstone_claimed_q_sound_with_extras():
    r = verify_claimed_q_soundness(JOHNSTONE, zoo.CLAIMED_Q["johnstone"], c=3, r=3)
    assert r.verdict
    assert "computed equals claimed: False" in r.notes
    assert "extras_sample" in r.witness


def test_claimed_members_are_upper_sets_in_truncations():
    for name, C in zoo.CLAIMED_Q.items():
        S = ENTRIES[name]
        P = S.truncate()
        for K in C.generate(P):
            up = 0
            for i in range(P.n):
                if K >> i & 1:
                    up |= P.up[i]
            assert up == K


def test_noncompactness_flat_and_e33():
    for S in (FLAT, E33):
        r = verify_noncompactness(S, zoo.NONCOMPACTNESS[S.name], 50, 4)
        assert r.verdict and r.bounds == {"element_bound": 50, "subfamily_bound": 4}


def test_noncompactness_grid_cover():
    r = verify_noncompactness(E316_2, zoo.NONCOMPACTNESS["e316-2"], 30, 3)
    assert r.verdict


def test_noncompactness_broken_escape_is_hard_failure():
    W_ = zoo.NONCOMPACTNESS["flat"]
    broken = dataclasses.replace(W_, escape=lambda F: ("n", min(F) + 1))
    with pytest.raises(WitnessError):
        verify_noncompactness(FLAT, broken, 20, 2)


def test_noncompactness_bad_cover_reported():
    W_ = zoo.NONCOMPACTNESS["flat"]
    wrong = dataclasses.replace(W_, locate=lambda x: x[1])
    r = verify_noncompactness(FLAT, wrong, 20, 2)
    assert r.verdict is False and "uncovered" in r.witness


def test_wwf_failure_johnstone_top():
    r = verify_wwf_failure(JOHNSTONE_TOP, zoo.FILTERED["johnstone-top"], 4, 50)
    assert r.verdict and r.property == "weakly-well-filtered-failure"


def test_wf_failure_johnstone():
    r = verify_wwf_failure(JOHNSTONE, zoo.FILTERED["johnstone"], 4, 50)
    assert r.verdict and r.property == "well-filtered-failure"
    assert any("inapplicable" in n for n in r.notes)


def test_degenerate_family_is_not_a_witness():
    everything = FilteredFamilyWitness("whole space", member=lambda F: (lambda x: True),
                                       indices=zoo._omega_indices, target=lambda x: True,
                                       escape=lambda F: None)
    r = verify_wwf_failure(JOHNSTONE_TOP, everything, 2, 20)
    assert r.verdict is False and "not_a_witness" in r.witness


def test_wwf_escape_inside_target_is_hard_failure():
    W_ = zoo.FILTERED["johnstone-top"]
    broken = dataclasses.replace(W_, escape=lambda F: ("top",))
    with pytest.raises(WitnessError):
        verify_wwf_failure(JOHNSTONE_TOP, broken, 2, 20)


def test_nonprincipal():
    r = verify_nonprincipal(E23, zoo.e23_meet_target, 20)
    assert r.verdict
    assert r.witness["-1"] == "-2"
    principal = verify_nonprincipal(E23, lambda x: E23.leq(("neg", 2), x), 20)
    assert principal.verdict is False and principal.witness == {"principal at": "-2"}
    whole = verify_nonprincipal(FLAT, lambda x: True, 20)
    assert whole.verdict is False and whole.witness == {"principal at": "bot"}


def test_cocompact_formula():
    for d in (1, 3, 6):
        assert zoo.verify_cocompact_formula(d).verdict


def test_kd_cases_and_truncation():
    r = replay_kd_cases(30)
    assert r.verdict
    # the residual of a non-maximal point also contains (n, w)
    assert any("misses (n, w)" in n for n in r.notes)
    for c, rr in [(2, 2), (3, 3)]:
        assert is_KD(JOHNSTONE_TOP.truncate(c=c, r=rr))


def test_johnstone_residual_literal_formula_gap():
    x, nxt, extra = ("j", 1, 2), ("j", 1, 3), ("j", 2, W)
    assert JOHNSTONE.leq(x, extra) and not JOHNSTONE.leq(nxt, extra)


def test_flat_chain_decomposition_fails_at_bot_every_width():
    for w in range(2, 7):
        L = FLAT.truncate(width=w)
        assert decomposition_failure(L, "chain") == L.index("bot")


def test_catalog_claims():
    cat = zoo_catalog()
    for name, entry in cat.items():
        assert entry.poset.name == name
        for c in entry.claims:
            r = c.run()
            if c.executable:
                assert r.verdict is True, (name, c.id, r.witness)
            else:
                assert c.reason and r.verdict is None
            assert any(n.startswith("truncation:") for n in r.notes)
    ids = {c.id for c in cat["johnstone"].claims}
    assert "kirr" in ids
    assert "kd-cases" in {c.id for c in cat["johnstone-top"].claims}
    assert "co-compact-not-sober" in {c.id for c in cat["e23"].claims if not c.executable}


def test_enumerators_are_reproducible():
    for S in ENTRIES.values():
        assert S.first(40) == S.first(40)
        assert len(set(S.first(40))) == 40
