import numpy as np
import pytest
from hypothesis import given, settings

from oracles import posets
from qsigma.errors import CycleError, ParseError
from qsigma.poset import (FinitePoset, down_closure, export_dot, inf, is_chain, is_directed, load_poset,
                          maximal_elements, minimal_elements, parse_poset, sup, up_closure)
from qsigma.enumerate import poset_levels
from qsigma.zoo import E23, FLAT, JOHNSTONE


def test_parse_chain():
    P = parse_poset("elements: a b\norder: a<b")
    assert P.elements == ("a", "b")
    assert P.leq.tolist() == [[True, True], [False, True]]


def test_parse_singleton():
    P = parse_poset("elements: a\norder:")
    assert P.n == 1 and P.leq[0, 0]


def test_parse_closes_transitively(chain3):
    assert chain3.leq[chain3.index("a"), chain3.index("c")]


def test_parse_comments_and_multiple_order_lines():
    P = parse_poset("# a comment\nelements: x y z\n\norder: x<y\norder: y<z\n")
    assert P.leq[0, 2]


@pytest.mark.parametrize("text", [
    "order: a<b",                          # no elements line
    "elements: a b\nelements: c",          # twice
    "elements: a b\norder: a<c",           # unknown element
    "elements: a b\norder: a-b",           # malformed pair
    "elements: a b\nfoo: bar",             # unknown key
    "elements: a b\ngarbage",
    "elements: a$ b",                      # bad name
    "elements:",                           # empty poset
    "elements: a a",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_poset(text)


def test_cycle_error():
    with pytest.raises(CycleError):
        parse_poset("elements: a b c\norder: a<b b<c c<a")


def test_names_with_parens_and_dashes():
    P = parse_poset("elements: (1_w) -3 top\norder: -3<(1_w) (1_w)<top")
    assert P.leq[P.index("-3"), P.index("top")]


def test_roundtrip_text(tmp_path):
    P = parse_poset("elements: z a b\norder: z<a z<b")
    f = tmp_path / "v.poset"
    f.write_text(P.to_text())
    assert load_poset(f) == P


def test_closures(chain3, anti2):
    assert chain3.labels(up_closure(chain3, chain3.mask(["a"]))) == ["a", "b", "c"]
    assert anti2.labels(up_closure(anti2, anti2.mask(["a"]))) == ["a"]
    assert up_closure(chain3, 0) == 0
    L3 = E23.truncate(depth=3)
    assert L3.labels(up_closure(L3, L3.mask(["a"]))) == ["a", "-1", "-2", "-3"]


def test_minimal_elements(chain3, anti2):
    assert chain3.labels(minimal_elements(chain3, chain3.mask(["b", "c"]))) == ["b"]
    assert anti2.labels(minimal_elements(anti2, anti2.full)) == ["a", "b"]
    J = JOHNSTONE.truncate(c=3, r=3)
    x = J.index("(1_1)")
    assert J.labels(minimal_elements(J, J.up[x])) == ["(1_1)"]


def test_directed_and_sup(chain3, anti2):
    for S in range(1, 8):
        assert is_directed(chain3, S)
    assert not is_directed(anti2, anti2.full)
    assert sup(anti2, anti2.full) is None
    L = FLAT.truncate(width=5)
    bot = L.mask(["bot"])
    assert is_directed(L, bot) and sup(L, bot) == L.index("bot")
    assert not is_directed(L, 0)


def test_is_chain(anti2):
    L3 = E23.truncate(depth=3)
    assert is_chain(L3, L3.up[L3.index("-3")])
    assert L3.labels(L3.up[L3.index("-3")]) == ["-1", "-2", "-3"]
    assert not is_chain(anti2, anti2.full)
    assert is_chain(anti2, 1)


def test_inf(V):
    assert inf(V, V.mask(["a", "b"])) == V.index("z")
    assert inf(V, V.full) == V.index("z")
    assert sup(V, V.mask(["a", "b"])) is None


def test_invalid_relation_rejected():
    with pytest.raises(ValueError):
        FinitePoset(["a", "b"], [[True, True], [True, True]])
    with pytest.raises(ValueError):
        FinitePoset([], np.zeros((0, 0)))


def test_leq_is_read_only(V):
    with pytest.raises(ValueError):
        V.leq[0, 1] = False


def test_export_dot(V):
    text = export_dot(V)
    assert text.startswith("digraph P {")
    assert text.count("->") == 2
    assert sum(1 for line in text.splitlines() if line.strip().startswith('"') and "->" not in line) == 3


def test_covers_chain(chain3):
    assert len(chain3.covers()) == 2


# ---------------------------------------------------------------- invariants

def _all_small():
    return [P for level in poset_levels(5) for P in level]


def test_closure_idempotent_and_duality_exhaustive():
    for P in _all_small():
        D = P.dual()
        for S in range(1 << P.n):
            u = up_closure(P, S)
            assert up_closure(P, u) == u
            assert down_closure(P, S) == up_closure(D, S)


def test_directed_sets_have_a_max_exhaustive():
    for P in _all_small():
        for S in range(1, 1 << P.n):
            if is_directed(P, S):
                s = sup(P, S)
                assert s is not None and S >> s & 1
                assert maximal_elements(P, S) == 1 << s


@settings(max_examples=60, deadline=None)
@given(posets(max_n=7))
def test_random_poset_axioms(P):
    P.check()
    assert (P.leq & P.leq.T).sum() == P.n


@settings(max_examples=60, deadline=None)
@given(posets(max_n=6))
def test_relabel_preserves_order(P):
    perm = list(range(P.n))[::-1]
    R = P.relabel(perm)
    for i in range(P.n):
        for j in range(P.n):
            assert P.leq[i, j] == R.leq[perm[i], perm[j]]
