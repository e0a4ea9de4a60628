"""Automaton files, verdict reports and DOT export.

Automaton files are JSON objects::

    {"name": "E_3", "states": 3, "letters": ["a", "b"],
     "delta": [[1, 1, 2], [0, 0, 2]]}

with 0-based targets, ``delta[r][q]`` being the image of ``q`` under letter
``r``.  Reports are JSON as well and also use 0-based states.  DOT output
labels states 1-based so that pictures line up with the usual figures.
"""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Union

from .core import Dfa, subset_key
from .errors import InvalidAutomaton, LevelOutOfRange, ParseError
from .gamma import LayeredGraph, Verdict, vertex_key

PathLike = Union[str, Path]

FIELDS = ("name", "states", "letters", "delta")


def loads_automaton(text: str, source: str = "<string>") -> Dfa:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{source}: top level must be an object")
    unknown = sorted(set(doc) - set(FIELDS))
    if unknown:
        raise ParseError(f"{source}: unknown field {unknown[0]!r}")
    for key in ("states", "letters", "delta"):
        if key not in doc:
            raise ParseError(f"{source}: missing field {key!r}")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ParseError(f"{source}: field 'name' must be a string")
    n = doc["states"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise ParseError(f"{source}: field 'states' must be an integer")
    letters = doc["letters"]
    if not isinstance(letters, list):
        raise ParseError(f"{source}: field 'letters' must be an array")
    delta = doc["delta"]
    if not isinstance(delta, list) or not all(isinstance(r, list) for r in delta):
        raise ParseError(f"{source}: field 'delta' must be an array of arrays")
    try:
        return Dfa(n, letters, delta, name=name)
    except InvalidAutomaton as exc:
        raise InvalidAutomaton(f"{source}: {exc}") from None


def parse_automaton(path: PathLike) -> Dfa:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    return loads_automaton(text, str(path))


def dumps_automaton(dfa: Dfa) -> str:
    rows = ",\n".join("    " + json.dumps(list(row)) for row in dfa.delta)
    return (
        "{\n"
        f'  "name": {json.dumps(dfa.name)},\n'
        f'  "states": {dfa.n},\n'
        f'  "letters": {json.dumps(list(dfa.letters))},\n'
        f'  "delta": [\n{rows}\n  ]\n'
        "}\n"
    )


def bundled(name: str) -> Path:
    """Path of a bundled example automaton such as ``"e3"`` or ``"e5"``."""
    return Path(str(resources.files(__package__) / "data" / f"{name}.json"))


def _subset(s) -> list:
    return list(subset_key(s))


def report(verdict: Verdict, dfa: Dfa) -> dict:
    g = verdict.graph
    info = verdict.scc
    return {
        "automaton": dfa.name,
        "states": dfa.n,
        "status": verdict.status.value,
        "k": verdict.k,
        "levels": {str(j): [_subset(c) for c in g.levels[j]] for j in sorted(g.levels)},
        "enforced_edges": [
            {
                "source": _subset(e.source),
                "target": e.target,
                "level": e.level,
                "word": dfa.spell(e.word),
            }
            for e in g.enforced
        ],
        "inclusion_edges": [
            {"source": _subset(e.source), "target": _subset(e.target), "level": e.level}
            for e in g.inclusion
        ],
        "sccs": [
            {
                "vertices": [_subset(v) for v in comp],
                "support": _subset(info.supports[i]),
                "rank": len(info.supports[i]),
                "minimal": not info.successors[i],
            }
            for i, comp in enumerate(info.components)
        ],
        "failure_witnesses": [
            {"states": _subset(w.states), "provenance": w.provenance}
            for w in verdict.witnesses
        ],
    }


def dumps_report(verdict: Verdict, dfa: Dfa) -> str:
    return json.dumps(report(verdict, dfa), indent=2, sort_keys=True) + "\n"


def _node_id(v: frozenset) -> str:
    return "_".join(["s" if len(v) == 1 else "S"] + [str(q + 1) for q in sorted(v)])


def _node_label(v: frozenset) -> str:
    if len(v) == 1:
        return str(next(iter(v)) + 1)
    return "{" + ",".join(str(q + 1) for q in sorted(v)) + "}"


def emit_dot(graph: LayeredGraph, level: int, dfa: Dfa = None) -> str:
    """Γ_level as a DOT digraph: enforced edges solid, inclusion edges dashed."""
    if not 1 <= level <= graph.level:
        raise LevelOutOfRange(f"level {level} outside 1..{graph.level}")
    g = graph.at_level(level)
    lines = [f'digraph "Gamma_{level}" {{']
    for v in g.vertices:
        shape = "circle" if len(v) == 1 else "box"
        lines.append(f'  {_node_id(v)} [label="{_node_label(v)}", shape={shape}];')
    enforced = sorted(g.enforced, key=lambda e: (vertex_key(e.source), e.target, e.level))
    for e in enforced:
        word = " ".join(dfa.spell(e.word)) if dfa is not None else " ".join(map(str, e.word))
        label = f"{e.level}:{word}"
        lines.append(
            f'  {_node_id(e.source)} -> {_node_id(frozenset((e.target,)))} '
            f'[label="{label}"];'
        )
    inclusion = sorted(g.inclusion, key=lambda e: (vertex_key(e.source), vertex_key(e.target)))
    for e in inclusion:
        lines.append(f"  {_node_id(e.source)} -> {_node_id(e.target)} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"
