"""Exact enumeration of (excluded, duplicate) signatures by defect.

A word is abstracted by its *count vector*: for every state ``p`` the number
of states sent to ``p``, capped at 2.  Preimage counts add up under
composition and "two or more" is absorbing, so the abstraction of ``wa`` is a
function of the abstraction of ``w`` and the letter ``a``.  The count vector
determines ``excl(w)`` (class 0) and ``dupl(w)`` (class 2), hence a breadth
first search over count vectors finds every realizable signature together
with a word realizing it.

Defect never decreases along prefixes, so vectors whose defect exceeds the
current cap can be parked and expanded later when the cap is raised.
"""
from __future__ import annotations

import os
from collections import Counter
from typing import Dict, List, Sequence, Tuple

from . import kernels
from .core import Dfa, Word, subset_key
from .errors import IndexIncomplete, ResourceLimit

CountVector = Tuple[int, ...]
TWO_PLUS = 2

DEFAULT_MAX_STATES = 16
MAX_STATES_ENV = "CRAUTOMATA_MAX_STATES"


def default_max_states() -> int:
    value = os.environ.get(MAX_STATES_ENV)
    if value:
        try:
            return int(value)
        except ValueError:
            raise ResourceLimit(f"{MAX_STATES_ENV}={value!r} is not an integer") from None
    return DEFAULT_MAX_STATES


def pack(cv: Sequence[int]) -> int:
    code = 0
    for q, c in enumerate(cv):
        code |= c << (2 * q)
    return code


def unpack(code: int, n: int) -> CountVector:
    return tuple((code >> (2 * q)) & 3 for q in range(n))


def abstract(dfa: Dfa, word: Sequence[int]) -> CountVector:
    """Count vector of ``word`` computed from its full transformation."""
    counts = Counter(dfa.transformation(word))
    return tuple(min(TWO_PLUS, counts.get(p, 0)) for p in range(dfa.n))


def step(dfa: Dfa, cv: Sequence[int], letter: int) -> CountVector:
    acc = [0] * dfa.n
    row = dfa.delta[letter]
    for q, c in enumerate(cv):
        acc[row[q]] += c
    return tuple(min(TWO_PLUS, v) for v in acc)


def cv_defect(cv: Sequence[int]) -> int:
    return sum(1 for c in cv if c == 0)


def cv_excl(cv: Sequence[int]) -> frozenset:
    return frozenset(q for q, c in enumerate(cv) if c == 0)


def cv_dupl(cv: Sequence[int]) -> frozenset:
    return frozenset(q for q, c in enumerate(cv) if c == TWO_PLUS)


class EnumerationIndex:
    """Count vectors of ``dfa`` discovered so far, each with a witness word.

    Buckets ``0 .. cap`` are complete.  Vectors of larger defect that were
    already seen sit in the suspended frontier until :meth:`enumerate_to`
    raises the cap.
    """

    def __init__(self, dfa: Dfa, max_states: int | None = None):
        if max_states is None:
            max_states = default_max_states()
        if dfa.n > max_states:
            raise ResourceLimit(
                f"{dfa.n} states exceeds the enumeration bound of {max_states}"
            )
        self.dfa = dfa
        self.n = dfa.n
        self.cap = -1
        self._table = [list(row) for row in dfa.delta]
        self._identity = kernels.get().cv_identity(self.n)
        self._parent: Dict[int, Tuple[int, int]] = {self._identity: (-1, -1)}
        self._buckets: Dict[int, List[int]] = {0: [self._identity]}
        self._suspended: List[int] = [self._identity]

    @property
    def identity(self) -> CountVector:
        return unpack(self._identity, self.n)

    def __len__(self):
        return len(self._parent)

    def __contains__(self, cv) -> bool:
        return pack(cv) in self._parent

    def complete_through(self, k: int) -> bool:
        # no word has defect n or more, so cap n-1 completes every bucket
        return self.cap >= min(k, self.n - 1)

    def enumerate_to(self, cap: int) -> "EnumerationIndex":
        cap = min(cap, self.n - 1)
        if cap <= self.cap:
            return self
        k = kernels.get()
        n = self.n
        ready = [c for c in self._suspended if k.cv_defect(c, n) <= cap]
        waiting = [c for c in self._suspended if k.cv_defect(c, n) > cap]
        discovered, suspended = k.explore(self._table, n, ready, self._parent, cap)
        for code in discovered:
            self._buckets.setdefault(k.cv_defect(code, n), []).append(code)
        self._suspended = waiting + suspended
        self.cap = cap
        return self

    def witness(self, cv: Sequence[int]) -> Word:
        return self._witness_code(pack(cv))

    def _witness_code(self, code: int) -> Word:
        letters = []
        parent = self._parent
        while True:
            prev, a = parent[code]
            if a < 0:
                break
            letters.append(a)
            code = prev
        return tuple(reversed(letters))

    def vectors(self, d: int) -> List[CountVector]:
        """Discovered count vectors of defect ``d`` in discovery order."""
        if not self.complete_through(d):
            raise IndexIncomplete(f"defect {d} requested but enumeration cap is {self.cap}")
        return [unpack(c, self.n) for c in self._buckets.get(d, [])]

    def items(self):
        for code in self._parent:
            yield unpack(code, self.n), self._witness_code(code)


def enumerate_to(dfa: Dfa, index: EnumerationIndex | None, cap: int) -> EnumerationIndex:
    if index is None:
        index = EnumerationIndex(dfa)
    return index.enumerate_to(cap)


def pairs_at(index: EnumerationIndex, k: int) -> List[Tuple[frozenset, frozenset, Word]]:
    """Distinct (excl, dupl) signatures of defect ``k`` with one witness each.

    The first vector in discovery order wins; the result is sorted
    lexicographically by excl, then dupl.
    """
    if not index.complete_through(k):
        raise IndexIncomplete(f"defect {k} requested but enumeration cap is {index.cap}")
    seen = {}
    for code in index._buckets.get(k, []):
        cv = unpack(code, index.n)
        key = (cv_excl(cv), cv_dupl(cv))
        if key not in seen:
            seen[key] = index._witness_code(code)
    out = [(e, d, w) for (e, d), w in seen.items()]
    out.sort(key=lambda t: (subset_key(t[0]), subset_key(t[1])))
    return out
