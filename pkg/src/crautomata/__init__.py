"""Complete reachability of deterministic finite automata.

Decides whether every non-empty state subset is the image of the whole state
set under some word, by growing a layered graph level by level, and produces
witness words for every subset when it is.
"""
from .core import Dfa, defect, dupl, excl, image, preimage, validate
from .enumeration import EnumerationIndex, abstract, enumerate_to, pairs_at, step
from .errors import (
    CrautomataError,
    EmptyTarget,
    IndexIncomplete,
    InvalidAutomaton,
    InvalidParameters,
    LevelOutOfRange,
    NoEdgeFound,
    ParseError,
    PreconditionViolated,
    ResourceLimit,
)
from .gamma import Status, Verdict, build_gamma1, decide, extend_to_level, failure_witness_sets, sccs
from .oracle import is_completely_reachable, reachable_family, shortest_word_to
from .synthesis import don_report, reach_word

__version__ = "0.1.0"
