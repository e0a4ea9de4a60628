"""Complete deterministic automata and the action of words on state subsets.

States are the integers ``0 .. n-1`` and letters are referred to by their
index in :attr:`Dfa.letters`.  A word is a tuple of letter indices and a state
subset is a :class:`frozenset` of states, which makes subsets hashable and
structurally comparable; use :func:`ordered` wherever a canonical ascending
sequence is needed.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import AbstractSet, Iterable, Sequence, Tuple

from .errors import InvalidAutomaton

StateSet = frozenset
Word = Tuple[int, ...]

EMPTY_WORD: Word = ()


@dataclass(frozen=True)
class Dfa:
    """A complete DFA given by its transition table.

    ``delta[r][q]`` is the state reached from ``q`` by letter ``r``.  The
    constructor normalises the table to nested tuples and validates it.
    """

    state_count: int
    letters: Tuple[str, ...]
    delta: Tuple[Tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        validate(self)

    @property
    def n(self) -> int:
        return self.state_count

    @property
    def m(self) -> int:
        return len(self.letters)

    @property
    def states(self) -> frozenset:
        return frozenset(range(self.state_count))

    def letter_index(self, name: str) -> int:
        try:
            return self.letters.index(name)
        except ValueError:
            raise KeyError(f"unknown letter {name!r}") from None

    def word(self, *names: str) -> Word:
        """Build a word from letter names, e.g. ``dfa.word("a_[3]", "a_[2]")``."""
        return tuple(self.letter_index(x) for x in names)

    def spell(self, word: Sequence[int]) -> list:
        return [self.letters[a] for a in word]

    def transformation(self, word: Sequence[int]) -> Tuple[int, ...]:
        """The map ``q -> q.word`` as a tuple indexed by state."""
        t = tuple(range(self.state_count))
        for a in word:
            row = self.delta[a]
            t = tuple(row[q] for q in t)
        return t


def validate(dfa: Dfa) -> None:
    """Raise :class:`InvalidAutomaton` naming the first broken invariant."""
    n = dfa.state_count
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidAutomaton(f"state count must be a positive integer, got {n!r}")
    if len(dfa.letters) == 0:
        raise InvalidAutomaton("alphabet is empty")
    for name in dfa.letters:
        if not isinstance(name, str) or not name:
            raise InvalidAutomaton(f"letter names must be non-empty strings, got {name!r}")
    dup = [x for x, c in Counter(dfa.letters).items() if c > 1]
    if dup:
        raise InvalidAutomaton(f"duplicate letter name {dup[0]!r}")
    if len(dfa.delta) != len(dfa.letters):
        raise InvalidAutomaton(
            f"transition table has {len(dfa.delta)} rows for {len(dfa.letters)} letters"
        )
    for r, row in enumerate(dfa.delta):
        if len(row) != n:
            raise InvalidAutomaton(
                f"row for letter {dfa.letters[r]!r} has {len(row)} entries, expected {n}"
            )
        for q, t in enumerate(row):
            if isinstance(t, bool) or not isinstance(t, int) or not 0 <= t < n:
                raise InvalidAutomaton(
                    f"target {t!r} of state {q} under letter {dfa.letters[r]!r} "
                    f"is outside [0, {n})"
                )


def ordered(states: Iterable[int]) -> Tuple[int, ...]:
    return tuple(sorted(states))


def subset_key(states: AbstractSet[int]):
    """Sort key giving the lexicographic order on canonical subsets."""
    return tuple(sorted(states))


def image(dfa: Dfa, states: AbstractSet[int], word: Sequence[int]) -> frozenset:
    current = frozenset(states)
    for a in word:
        row = dfa.delta[a]
        current = frozenset(row[q] for q in current)
    return current


def full_image(dfa: Dfa, word: Sequence[int]) -> frozenset:
    return image(dfa, dfa.states, word)


def defect(dfa: Dfa, word: Sequence[int]) -> int:
    return dfa.state_count - len(full_image(dfa, word))


def excl(dfa: Dfa, word: Sequence[int]) -> frozenset:
    """States missing from the image of the whole state set."""
    return dfa.states - full_image(dfa, word)


def dupl(dfa: Dfa, word: Sequence[int]) -> frozenset:
    """States with at least two preimages under ``word``."""
    counts = Counter(dfa.transformation(word))
    return frozenset(p for p, c in counts.items() if c >= 2)


def preimage(dfa: Dfa, word: Sequence[int], states: AbstractSet[int]) -> frozenset:
    t = dfa.transformation(word)
    return frozenset(q for q in range(dfa.state_count) if t[q] in states)
