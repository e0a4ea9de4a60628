import json

import pytest
from hypothesis import given, strategies as st

from crautomata import families
from crautomata.errors import InvalidAutomaton, LevelOutOfRange, ParseError
from crautomata.gamma import decide
from crautomata.io import (
    bundled,
    dumps_automaton,
    dumps_report,
    emit_dot,
    loads_automaton,
    parse_automaton,
    report,
)


def write(tmp_path, doc):
    p = tmp_path / "a.json"
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return p


def test_bundled_files(e3, e5):
    d = parse_automaton(bundled("e3"))
    assert (d.n, d.m) == (3, 4)
    assert d == e3
    assert parse_automaton(bundled("e5")) == e5
    assert parse_automaton(bundled("e5_verbatim")) == families.e5(corrected=False)


def test_entry_out_of_range(tmp_path):
    p = write(tmp_path, {"states": 2, "letters": ["a"], "delta": [[0, 2]]})
    with pytest.raises(InvalidAutomaton, match="a.json"):
        parse_automaton(p)


def test_duplicate_letters(tmp_path):
    p = write(tmp_path, {"states": 2, "letters": ["a", "a"], "delta": [[0, 1], [1, 0]]})
    with pytest.raises(InvalidAutomaton, match="duplicate"):
        parse_automaton(p)


@pytest.mark.parametrize("doc, message", [
    ('{"states": 2,\n "letters": [}', ":2:"),
    ("[1, 2]", "object"),
    ({"letters": ["a"], "delta": [[0]]}, "states"),
    ({"states": "2", "letters": ["a"], "delta": [[0, 1]]}, "states"),
    ({"states": 2, "letters": "ab", "delta": [[0, 1]]}, "letters"),
    ({"states": 2, "letters": ["a"], "delta": [0, 1]}, "delta"),
    ({"states": 2, "letters": ["a"], "delta": [[0, 1]], "start": 0}, "start"),
])
def test_parse_errors(tmp_path, doc, message):
    with pytest.raises(ParseError, match=message):
        parse_automaton(write(tmp_path, doc))


def test_missing_file(tmp_path):
    with pytest.raises(ParseError):
        parse_automaton(tmp_path / "nope.json")


@given(st.integers(1, 7), st.integers(1, 4), st.sampled_from(["arbitrary", "permutation"]),
       st.integers(0, 2**63))
def test_round_trip(n, m, kind, seed):
    d = families.random(n, m, kind, seed)
    assert loads_automaton(dumps_automaton(d)) == d


def test_report_contents(e5):
    doc = report(decide(e5), e5)
    assert doc["status"] == "SUCCESS" and doc["k"] == 3
    assert doc["levels"] == {"2": [[0, 1], [3, 4]], "3": [[0, 1, 2]]}
    assert {"source": [0, 1, 2], "target": 3, "level": 3, "word": ["a_[1,3]"]} in doc["enforced_edges"]
    assert doc["failure_witnesses"] == []
    assert len(doc["sccs"]) == 1 and doc["sccs"][0]["rank"] == 5


def test_report_failure_witnesses():
    d = families.e_nk(4, 2, prime=True)
    doc = report(decide(d), d)
    assert doc["status"] == "FAILURE"
    assert doc["failure_witnesses"]
    assert all(w["provenance"] in ("proof-derived", "fallback") for w in doc["failure_witnesses"])


def test_report_is_byte_stable(e5):
    assert dumps_report(decide(e5), e5) == dumps_report(decide(families.e5()), families.e5())


def test_dot_gamma2_e3(e3):
    text = emit_dot(decide(e3).graph, 2, e3)
    lines = [x.strip() for x in text.splitlines()]
    assert sum("shape=" in x for x in lines) == 4
    solid = [x for x in lines if "->" in x and "dashed" not in x]
    dashed = [x for x in lines if "dashed" in x]
    assert len(solid) == 4 and len(dashed) == 2
    assert 'S_1_2 -> s_3 [label="2:a_[1,2]"];' in lines
    assert '[label="{1,2}", shape=box]' in text


def test_dot_permutation():
    d = families.random(4, 2, families.PERMUTATION, 1)
    text = emit_dot(decide(d).graph, 1, d)
    assert "->" not in text
    assert text.count("shape=circle") == 4


def test_dot_gamma3_e5(e5):
    lines = emit_dot(decide(e5).graph, 3, e5).splitlines()
    into = sorted(x.split(" -> ")[0].strip() for x in lines if "dashed" in x and "-> S_1_2_3" in x)
    assert into == ["S_1_2", "s_1", "s_2", "s_3"]


def test_dot_level_range(e5):
    g = decide(e5).graph
    with pytest.raises(LevelOutOfRange):
        emit_dot(g, 4)
    with pytest.raises(LevelOutOfRange):
        emit_dot(g, 0)
    assert emit_dot(g, 1) != emit_dot(g, 2)
