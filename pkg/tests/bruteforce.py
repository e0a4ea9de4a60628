"""Independent reference computations used as test oracles.

Nothing here imports the search kernels or the layered-graph code; words are
enumerated explicitly and transformations composed directly.
"""
from collections import Counter
from itertools import product


def transformation(delta, word, n):
    t = list(range(n))
    for a in word:
        t = [delta[a][q] for q in t]
    return t


def signature(delta, word, n):
    counts = Counter(transformation(delta, word, n))
    excl = frozenset(p for p in range(n) if counts[p] == 0)
    dupl = frozenset(p for p in range(n) if counts[p] >= 2)
    return excl, dupl


def words(m, max_len):
    for length in range(max_len + 1):
        yield from product(range(m), repeat=length)


def signatures_by_defect(dfa, max_len):
    """{defect: set of (excl, dupl)} over all words up to ``max_len``."""
    out = {}
    for w in words(dfa.m, max_len):
        ex, du = signature(dfa.delta, w, dfa.n)
        out.setdefault(len(ex), set()).add((ex, du))
    return out


def reachable_subsets(dfa):
    """Closure of {Q} under letter images, on plain frozensets."""
    start = frozenset(range(dfa.n))
    seen = {start}
    todo = [start]
    while todo:
        s = todo.pop()
        for row in dfa.delta:
            t = frozenset(row[q] for q in s)
            if t not in seen:
                seen.add(t)
                todo.append(t)
    return seen


def shortest_lengths(dfa):
    """Length of a shortest word reaching each reachable subset (plain BFS)."""
    start = frozenset(range(dfa.n))
    dist = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for s in frontier:
            for row in dfa.delta:
                t = frozenset(row[q] for q in s)
                if t not in dist:
                    dist[t] = dist[s] + 1
                    nxt.append(t)
        frontier = nxt
    return dist
