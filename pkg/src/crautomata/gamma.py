"""Layered graphs Γ_k(A), their strongly connected components and the verdict.

Vertices are state subsets: ``frozenset({q})`` stands for the state ``q`` and
larger subsets are the supports added at levels 2, 3, ....  Enforced edges go
from a vertex ``C`` to a state ``p`` and carry the word certifying them;
inclusion edges go from a vertex to a strictly larger support vertex.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, List, NamedTuple, Optional, Tuple

from .core import Dfa, Word, subset_key
from .enumeration import EnumerationIndex, pairs_at
from .errors import PreconditionViolated

PROOF_DERIVED = "proof-derived"
FALLBACK = "fallback"


class Status(str, Enum):
    SUCCESS = "SUCCESS"
    FAILURE = "FAILURE"


class EnforcedEdge(NamedTuple):
    source: frozenset
    target: int
    level: int
    word: Word


class InclusionEdge(NamedTuple):
    source: frozenset
    target: frozenset
    level: int


def vertex_key(v: frozenset):
    """States first, then subset vertices in lexicographic order."""
    return (len(v) > 1, subset_key(v))


@dataclass(frozen=True)
class LayeredGraph:
    n: int
    level: int
    vertex_level: Dict[frozenset, int]
    levels: Dict[int, Tuple[frozenset, ...]]
    enforced: Tuple[EnforcedEdge, ...]
    inclusion: Tuple[InclusionEdge, ...]

    @property
    def vertices(self) -> List[frozenset]:
        return sorted(self.vertex_level, key=vertex_key)

    def successors(self) -> Dict[frozenset, List[frozenset]]:
        adj: Dict[frozenset, List[frozenset]] = {v: [] for v in self.vertices}
        for e in self.enforced:
            adj[e.source].append(frozenset((e.target,)))
        for e in self.inclusion:
            adj[e.source].append(e.target)
        return adj

    def at_level(self, j: int) -> "LayeredGraph":
        """The graph Γ_j this graph was grown from."""
        if not 1 <= j <= self.level:
            raise ValueError(f"level {j} outside 1..{self.level}")
        return LayeredGraph(
            n=self.n,
            level=j,
            vertex_level={v: lv for v, lv in self.vertex_level.items() if lv <= j},
            levels={i: qs for i, qs in self.levels.items() if i <= j},
            enforced=tuple(e for e in self.enforced if e.level <= j),
            inclusion=tuple(e for e in self.inclusion if e.level <= j),
        )


@dataclass(frozen=True)
class SccInfo:
    components: Tuple[Tuple[frozenset, ...], ...]
    supports: Tuple[frozenset, ...]
    component_of: Dict[frozenset, int]
    successors: Tuple[frozenset, ...]

    @property
    def ranks(self) -> Tuple[int, ...]:
        return tuple(len(s) for s in self.supports)

    @property
    def strongly_connected(self) -> bool:
        return len(self.components) == 1

    @property
    def max_rank(self) -> int:
        return max(self.ranks, default=0)

    def minimal(self) -> List[int]:
        """Components from which no other component is reachable."""
        return [i for i, succ in enumerate(self.successors) if not succ]


class FailureWitness(NamedTuple):
    states: frozenset
    provenance: str


@dataclass(frozen=True)
class Verdict:
    status: Status
    k: int
    graph: LayeredGraph
    scc: SccInfo
    witnesses: Tuple[FailureWitness, ...] = field(default=())

    @property
    def success(self) -> bool:
        return self.status is Status.SUCCESS


def build_gamma1(dfa: Dfa, index: EnumerationIndex) -> LayeredGraph:
    edges = {}
    for ex, du, word in pairs_at(index, 1):
        (q,) = ex
        (p,) = du
        edges.setdefault((q, p), EnforcedEdge(frozenset((q,)), p, 1, word))
    return LayeredGraph(
        n=dfa.n,
        level=1,
        vertex_level={frozenset((q,)): 1 for q in range(dfa.n)},
        levels={},
        enforced=tuple(edges[key] for key in sorted(edges)),
        inclusion=(),
    )


def extend_to_level(graph: LayeredGraph, dfa: Dfa, index: EnumerationIndex, k: int) -> LayeredGraph:
    if k != graph.level + 1:
        raise PreconditionViolated(f"cannot extend Γ_{graph.level} to level {k}")
    info = sccs(graph)
    if info.strongly_connected:
        raise PreconditionViolated(f"Γ_{graph.level} is strongly connected")
    new_level = sorted((s for s in info.supports if len(s) >= k), key=subset_key)
    if not new_level:
        raise PreconditionViolated(f"no component of Γ_{graph.level} has rank >= {k}")
    signatures = pairs_at(index, k)

    vertex_level = dict(graph.vertex_level)
    earlier = [v for v in graph.vertex_level if len(v) > 1]
    inclusion = list(graph.inclusion)
    seen_inclusion = {(e.source, e.target) for e in inclusion}
    for c in new_level:
        vertex_level.setdefault(c, k)
        sources = [frozenset((q,)) for q in sorted(c)]
        sources += sorted((d for d in earlier if d < c), key=subset_key)
        for s in sources:
            if (s, c) not in seen_inclusion:
                seen_inclusion.add((s, c))
                inclusion.append(InclusionEdge(s, c, k))

    enforced = list(graph.enforced)
    seen_enforced = {(e.source, e.target, e.level) for e in enforced}
    for ex, du, word in signatures:
        for c in new_level:
            if ex <= c:
                for p in sorted(du):
                    if (c, p, k) not in seen_enforced:
                        seen_enforced.add((c, p, k))
                        enforced.append(EnforcedEdge(c, p, k, word))
                break  # members of Q_k are disjoint

    levels = dict(graph.levels)
    levels[k] = tuple(new_level)
    return replace(
        graph,
        level=k,
        vertex_level=vertex_level,
        levels=levels,
        enforced=tuple(enforced),
        inclusion=tuple(inclusion),
    )


def sccs(graph: LayeredGraph) -> SccInfo:
    """Tarjan's algorithm, iterative, over vertices in :func:`vertex_key` order."""
    adj = graph.successors()
    order = graph.vertices
    index: Dict[frozenset, int] = {}
    low: Dict[frozenset, int] = {}
    on_stack = set()
    stack: List[frozenset] = []
    found: List[List[frozenset]] = []
    counter = 0

    for root in order:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(adj[root]))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(adj[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                found.append(comp)

    comps = [tuple(sorted(c, key=vertex_key)) for c in found]
    comps.sort(key=lambda c: vertex_key(c[0]))
    component_of = {v: i for i, c in enumerate(comps) for v in c}
    supports = tuple(frozenset(next(iter(v)) for v in c if len(v) == 1) for c in comps)
    succ = [set() for _ in comps]
    for v, targets in adj.items():
        i = component_of[v]
        for w in targets:
            j = component_of[w]
            if i != j:
                succ[i].add(j)
    return SccInfo(
        components=tuple(comps),
        supports=supports,
        component_of=component_of,
        successors=tuple(frozenset(s) for s in succ),
    )


def decide(dfa: Dfa, max_states: Optional[int] = None) -> Verdict:
    """Grow Γ_1, Γ_2, ... until it is strongly connected or cannot grow."""
    index = EnumerationIndex(dfa, max_states=max_states).enumerate_to(1)
    graph = build_gamma1(dfa, index)
    k = 1
    while True:
        info = sccs(graph)
        if info.strongly_connected:
            return Verdict(Status.SUCCESS, k, graph, info)
        if info.max_rank < k + 1:
            verdict = Verdict(Status.FAILURE, k, graph, info)
            return replace(verdict, witnesses=tuple(failure_witness_sets(verdict, dfa)))
        k += 1
        index.enumerate_to(k)
        graph = extend_to_level(graph, dfa, index, k)


def failure_witness_sets(verdict: Verdict, dfa: Dfa) -> List[FailureWitness]:
    """Candidate unreachable subsets for a FAILURE verdict.

    Complements of the supports of minimal components are unreachable when the
    support is non-empty.  If every minimal component has an empty support,
    complements of all non-empty supports are returned in increasing rank
    order, tagged as fallback candidates that still need confirming.
    """
    if verdict.status is not Status.FAILURE:
        raise PreconditionViolated("failure witnesses requested for a SUCCESS verdict")
    info = verdict.scc
    full = dfa.states
    out: List[FailureWitness] = []
    seen = set()
    for i in info.minimal():
        d = info.supports[i]
        if d and full - d not in seen:
            seen.add(full - d)
            out.append(FailureWitness(full - d, PROOF_DERIVED))
    if out:
        return out
    ranked = sorted(
        (s for s in info.supports if s and s != full),
        key=lambda s: (len(s), subset_key(s)),
    )
    for d in ranked:
        if full - d not in seen:
            seen.add(full - d)
            out.append(FailureWitness(full - d, FALLBACK))
    return out
