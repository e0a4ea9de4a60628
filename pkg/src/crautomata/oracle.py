"""Brute-force subset reachability over the power automaton."""
from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Dict, Iterator, List, Optional, Tuple

from . import kernels
from .core import Dfa, Word
from .errors import EmptyTarget, ResourceLimit

MAX_ORACLE_STATES = 20


def to_mask(states: AbstractSet[int]) -> int:
    mask = 0
    for q in states:
        mask |= 1 << q
    return mask


def from_mask(mask: int) -> frozenset:
    out = []
    q = 0
    while mask:
        if mask & 1:
            out.append(q)
        mask >>= 1
        q += 1
    return frozenset(out)


@dataclass(frozen=True)
class ReachabilityTable:
    """Every subset of the form Q.w, with the BFS parent that produced it."""

    n: int
    parent: Dict[int, Tuple[int, int]]

    @property
    def count(self) -> int:
        return len(self.parent)

    def __contains__(self, states) -> bool:
        return to_mask(states) in self.parent

    def subsets(self) -> Iterator[frozenset]:
        for mask in self.parent:
            yield from_mask(mask)

    def word_to(self, states: AbstractSet[int]) -> Optional[Word]:
        mask = to_mask(states)
        if mask not in self.parent:
            return None
        letters = []
        while True:
            prev, a = self.parent[mask]
            if a < 0:
                return tuple(reversed(letters))
            letters.append(a)
            mask = prev

    def unreachable(self) -> List[frozenset]:
        """Non-empty subsets missing from the table, in mask order."""
        return [from_mask(m) for m in range(1, 1 << self.n) if m not in self.parent]


def reachable_family(dfa: Dfa, max_states: int = MAX_ORACLE_STATES) -> ReachabilityTable:
    if dfa.n > max_states:
        raise ResourceLimit(f"{dfa.n} states exceeds the oracle bound of {max_states}")
    table = [list(row) for row in dfa.delta]
    full = (1 << dfa.n) - 1
    return ReachabilityTable(dfa.n, kernels.get().subset_closure(table, dfa.n, full))


def is_completely_reachable(dfa: Dfa, max_states: int = MAX_ORACLE_STATES) -> bool:
    return reachable_family(dfa, max_states).count == (1 << dfa.n) - 1


def shortest_word_to(dfa: Dfa, target: AbstractSet[int],
                     max_states: int = MAX_ORACLE_STATES) -> Optional[Word]:
    if not target:
        raise EmptyTarget("target subset is empty")
    return reachable_family(dfa, max_states).word_to(target)
