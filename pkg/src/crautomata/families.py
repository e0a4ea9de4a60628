"""Named automata and seeded random generators.

The named families are usually written with states ``1 .. n``; here state
``i`` of those tables is state ``i - 1``.  Letter names keep the usual
subscripts, e.g. ``a_[1,2]``.
"""
from __future__ import annotations

import random as _random
from functools import lru_cache

from .core import Dfa
from .errors import InvalidParameters

ARBITRARY = "arbitrary"
PERMUTATION = "permutation"


def _from_columns(name, columns):
    """Build a Dfa from 1-based columns ``{letter: (1.a, 2.a, ...)}``."""
    letters = list(columns)
    n = len(next(iter(columns.values())))
    delta = [[t - 1 for t in columns[x]] for x in letters]
    return Dfa(n, letters, delta, name=name)


def e3() -> Dfa:
    return _from_columns("E_3", {
        "a_[1]": (2, 2, 3),
        "a_[2]": (1, 1, 3),
        "a_[3]": (1, 1, 2),
        "a_[1,2]": (3, 3, 3),
    })


def e5(corrected: bool = True) -> Dfa:
    """The five-state, eight-letter example automaton.

    The commonly printed table has ``5 . a_[2] = 4``, which contradicts the
    edge 2 -> 1 of its Γ_1.  With ``corrected=True`` the entry is 5, making
    ``a_[2]`` a defect-1 letter with excluded state 2 and duplicate state 1.
    """
    return _from_columns("E_5" if corrected else "E_5 (verbatim)", {
        "a_[1]": (2, 2, 3, 4, 5),
        "a_[2]": (1, 1, 3, 4, 5 if corrected else 4),
        "a_[3]": (1, 1, 2, 4, 5),
        "a_[4]": (1, 2, 3, 5, 5),
        "a_[5]": (1, 2, 3, 4, 4),
        "a_[1,2]": (3, 3, 3, 4, 5),
        "a_[4,5]": (1, 1, 2, 3, 3),
        "a_[1,3]": (4, 4, 4, 5, 5),
    })


def e_nk(n: int, k: int, prime: bool = False) -> Dfa:
    """Member of the family E_{n,k} (or E'_{n,k} when ``prime``).

    E_{n,k} is completely reachable and E'_{n,k} is not; for both the layered
    graph construction stops after exactly ``k`` levels.
    """
    if isinstance(n, bool) or isinstance(k, bool) or not (2 <= k < n):
        raise InvalidParameters(f"need 2 <= k < n, got n={n}, k={k}")
    ell = n - k + 1

    @lru_cache(maxsize=None)
    def act(i: int, j: int) -> int:
        # 1-based action of a_[j] on state i
        if (i != j and j <= ell) or (i > j > ell):
            return i
        if i == j < ell:
            return i + 1
        if i == j == ell:
            return 1
        if i == j > ell:
            return i - 1
        return act(i, j - 1)  # i < j and j > ell

    columns = {f"a_[{j}]": tuple(act(i, j) for i in range(1, n + 1)) for j in range(1, n + 1)}
    last = n - 1 if prime else n
    for j in range(ell, last):
        columns[f"a_[1,{j}]"] = tuple(j + 1 if i <= j else i for i in range(1, n + 1))
    name = f"E'_{{{n},{k}}}" if prime else f"E_{{{n},{k}}}"
    return _from_columns(name, columns)


def cerny(n: int) -> Dfa:
    """Cerny automaton: ``a`` is the cyclic shift, ``b`` merges 0 into 1."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InvalidParameters(f"Cerny automata need n >= 2, got {n!r}")
    a = [(q + 1) % n for q in range(n)]
    b = [1] + list(range(1, n))
    return Dfa(n, ["a", "b"], [a, b], name=f"C_{n}")


def random(n: int, m: int, kind: str = ARBITRARY, seed: int = 0) -> Dfa:
    """Deterministic pseudo-random automaton for ``(n, m, kind, seed)``."""
    if n < 1 or m < 1:
        raise InvalidParameters(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    if kind not in (ARBITRARY, PERMUTATION):
        raise InvalidParameters(f"unknown kind {kind!r}")
    rng = _random.Random(f"{n}:{m}:{kind}:{seed}")
    delta = []
    for _ in range(m):
        if kind == PERMUTATION:
            row = list(range(n))
            rng.shuffle(row)
        else:
            row = [rng.randrange(n) for _ in range(n)]
        delta.append(row)
    letters = [f"x{r}" for r in range(m)]
    return Dfa(n, letters, delta, name=f"random-{kind}-{n}-{m}-{seed}")
