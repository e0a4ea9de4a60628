import pytest
from hypothesis import given, strategies as st

from crautomata.core import Dfa, defect, dupl, excl, full_image, image, preimage
from crautomata.errors import InvalidAutomaton

from conftest import paper


@st.composite
def dfa_and_words(draw, max_n=6, max_m=3, max_len=8):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    delta = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
                          min_size=m, max_size=m))
    word = st.lists(st.integers(0, m - 1), max_size=max_len).map(tuple)
    return Dfa(n, [f"x{r}" for r in range(m)], delta), draw(word), draw(word)


def test_e3_is_valid(e3):
    assert e3.n == 3 and e3.m == 4


def test_single_state_automaton():
    d = Dfa(1, ["a"], [[0]])
    assert full_image(d, (0,)) == {0}


@pytest.mark.parametrize("n, letters, delta, message", [
    (2, ["a"], [[0, 3]], "outside"),
    (2, ["a", "a"], [[0, 1], [1, 0]], "duplicate letter"),
    (2, [], [], "alphabet is empty"),
    (0, ["a"], [[]], "positive"),
    (2, ["a"], [[0]], "entries"),
    (2, ["a", "b"], [[0, 1]], "rows"),
])
def test_invalid_automata(n, letters, delta, message):
    with pytest.raises(InvalidAutomaton, match=message):
        Dfa(n, letters, delta)


def test_image(e3):
    assert image(e3, e3.states, e3.word("a_[1,2]")) == paper(3)
    assert image(e3, paper(1, 3), ()) == paper(1, 3)
    assert image(e3, paper(1, 3), e3.word("a_[3]")) == paper(1, 2)


def test_defect(e3, e5):
    assert defect(e3, e3.word("a_[1]")) == 1
    assert defect(e3, ()) == 0
    assert defect(e5, e5.word("a_[1,3]")) == 3


def test_excl_and_dupl(e3, e5):
    assert excl(e3, e3.word("a_[1]")) == paper(1)
    assert excl(e3, ()) == frozenset()
    assert excl(e3, e3.word("a_[1,2]")) == paper(1, 2)
    assert dupl(e3, e3.word("a_[1]")) == paper(2)
    assert dupl(e3, ()) == frozenset()
    assert dupl(e5, e5.word("a_[4,5]")) == paper(1, 3)


def test_preimage(e3):
    assert preimage(e3, e3.word("a_[1,2]"), paper(3)) == paper(1, 2, 3)
    assert preimage(e3, (), paper(1, 2)) == paper(1, 2)
    assert preimage(e3, e3.word("a_[2]"), paper(1)) == paper(1, 2)


def test_word_helpers(e3):
    w = e3.word("a_[3]", "a_[2]")
    assert e3.spell(w) == ["a_[3]", "a_[2]"]
    with pytest.raises(KeyError):
        e3.word("b")


@given(dfa_and_words())
def test_defect_monotone_along_prefixes(args):
    d, w, _ = args
    for i in range(len(w) + 1):
        assert defect(d, w[:i]) <= defect(d, w)


@given(dfa_and_words())
def test_excl_dupl_relations(args):
    d, w, _ = args
    img = full_image(d, w)
    assert len(excl(d, w)) == defect(d, w)
    assert not excl(d, w) & img
    assert dupl(d, w) <= img
    assert bool(dupl(d, w)) == (defect(d, w) >= 1)


@given(dfa_and_words(), st.data())
def test_preimage_laws(args, data):
    d, w, _ = args
    s = frozenset(data.draw(st.sets(st.integers(0, d.n - 1))))
    assert image(d, preimage(d, w, s), w) == s & full_image(d, w)
    pre = [preimage(d, w, {p}) for p in range(d.n)]
    for i in range(d.n):
        for j in range(i + 1, d.n):
            assert not pre[i] & pre[j]


@given(dfa_and_words(), st.data())
def test_image_composes(args, data):
    d, u, v = args
    p = frozenset(data.draw(st.sets(st.integers(0, d.n - 1))))
    assert image(d, image(d, p, u), v) == image(d, p, u + v)
