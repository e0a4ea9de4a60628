"""Witness words for subsets of completely reachable automata.

Starting from the target ``P`` we repeatedly look for an enforced edge
``(C, p)`` with ``p`` in ``P`` and ``C`` disjoint from ``P``.  Its word ``w``
excludes nothing in ``P`` and merges two states into ``p``, so the full
preimage ``R`` of ``P`` under ``w`` is strictly larger and ``R.w = P``.
Iterating until ``R = Q`` yields a product of words of bounded defect.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import AbstractSet, List, NamedTuple, Tuple

from .core import Dfa, Word, preimage, subset_key
from .errors import EmptyTarget, NoEdgeFound, PreconditionViolated, ResourceLimit
from .gamma import Verdict

MAX_REPORT_STATES = 12


class Factor(NamedTuple):
    word: Word
    level: int
    source: frozenset
    target: int


@dataclass(frozen=True)
class WitnessPlan:
    target: frozenset
    factors: Tuple[Factor, ...]

    @property
    def total(self) -> Word:
        out: List[int] = []
        for f in self.factors:
            out.extend(f.word)
        return tuple(out)


def reach_word(dfa: Dfa, verdict: Verdict, target: AbstractSet[int]) -> WitnessPlan:
    if not verdict.success:
        raise PreconditionViolated("witness words need a SUCCESS verdict")
    target = frozenset(target)
    if not target:
        raise EmptyTarget("target subset is empty")
    edges = sorted(
        verdict.graph.enforced,
        key=lambda e: (e.level, subset_key(e.source), e.target),
    )
    full = dfa.states
    factors: List[Factor] = []
    current = target
    while current != full:
        for e in edges:
            if e.target in current and not (e.source & current):
                break
        else:
            raise NoEdgeFound(f"no enforced edge leads into {sorted(current)}")
        bigger = preimage(dfa, e.word, current)
        if len(bigger) <= len(current):
            raise NoEdgeFound(f"edge {e} does not enlarge {sorted(current)}")
        factors.append(Factor(e.word, e.level, e.source, e.target))
        current = bigger
    factors.reverse()
    return WitnessPlan(target, tuple(factors))


class DonEntry(NamedTuple):
    subset: frozenset
    length: int
    bound: int


@dataclass(frozen=True)
class DonReport:
    n: int
    entries: Tuple[DonEntry, ...]

    @property
    def max_ratio(self) -> float:
        ratios = [e.length / e.bound for e in self.entries if e.bound]
        return max(ratios, default=0.0)

    @property
    def max_length(self) -> int:
        return max((e.length for e in self.entries), default=0)

    @property
    def exceedances(self) -> List[DonEntry]:
        return [e for e in self.entries if e.length > e.bound]


def don_report(dfa: Dfa, verdict: Verdict, max_states: int = MAX_REPORT_STATES) -> DonReport:
    """Witness lengths against the n(n - |P|) bound for every non-empty P.

    Diagnostic only: the witnesses are not shortest words, so exceedances say
    nothing about the bound itself.
    """
    if dfa.n > max_states:
        raise ResourceLimit(f"{dfa.n} states exceeds the report bound of {max_states}")
    n = dfa.n
    entries = []
    for size in range(n, 0, -1):
        for subset in combinations(range(n), size):
            plan = reach_word(dfa, verdict, subset)
            entries.append(DonEntry(frozenset(subset), len(plan.total), n * (n - size)))
    return DonReport(n, tuple(entries))
