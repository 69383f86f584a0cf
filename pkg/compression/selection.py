"""Selected compression elements.

A left-to-right scan picks a set C of trie nodes such that every node
reaches a member of C within 2*tau reference steps while |C| <= 1 + n/tau.
Members carry payloads that let the search engines recover phrase lengths,
relevant prefixes and automaton transition sets without walking to the root.

C is kept in a plain dict, so lookups and inserts are expected O(1).
"""
import logging
from dataclasses import dataclass
from typing import Optional

from .exceptions import ParameterError, PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ApproxMode:
    """Approximate matching payloads: shortcut to the depth-(m+k) ancestor."""

    m: int
    k: int

    def __post_init__(self):
        if self.m < 1:
            raise ParameterError('pattern length must be at least 1')
        if not 0 <= self.k < self.m:
            raise ParameterError(f'error threshold must satisfy 0 <= k < m (k={self.k}, m={self.m})')

    @property
    def window(self):
        return self.m + self.k


@dataclass(frozen=True)
class RegexMode:
    """Regular expression payloads: per-state transition sets of the phrase."""

    tnfa: object


@dataclass(frozen=True)
class SelectionPayload:
    phrase_length: int
    shortcut: Optional[int] = None
    transition_sets: Optional[tuple] = None


class SelectedSet:
    def __init__(self, tau, mode=None):
        self.tau = tau
        self.mode = mode
        self.members = {}

    def __contains__(self, node):
        return node in self.members

    def __len__(self):
        return len(self.members)

    def __repr__(self):
        return f'<SelectedSet tau={self.tau} size={len(self)}>'

    def payload(self, node):
        return self.members[node]

    @property
    def window(self):
        if isinstance(self.mode, ApproxMode):
            return self.mode.window
        return None


def nearest_member(source, selected, node):
    """First member on the reference path from ``node``, and the path itself.

    The path lists nodes from ``node`` to the member, both included.
    """
    path = [node]
    while path[-1] not in selected.members:
        path.append(source.parent(path[-1]))
    return path[-1], path


def build_selected_set(source, tau, mode=None):
    if tau < 1:
        raise ParameterError(f'tau must be at least 1 (got {tau})')
    n = source.node_count - 1
    if tau > max(n, 1):
        logger.debug('tau=%d clamped to n=%d', tau, max(n, 1))
        tau = max(n, 1)
    selected = SelectedSet(tau, mode)
    selected.members[0] = _root_payload(mode)
    for node in range(1, source.node_count):
        member, path = nearest_member(source, selected, node)
        if len(path) - 1 == 2 * tau:
            chosen = path[tau]
            selected.members[chosen] = _payload(source, selected, path[tau:], mode)
    logger.debug('selected %d of %d nodes (tau=%d)', len(selected), source.node_count, tau)
    return selected


def _root_payload(mode):
    if isinstance(mode, RegexMode):
        tnfa = mode.tnfa
        sets = tuple(tnfa.closure({state}) for state in range(tnfa.state_count))
        return SelectionPayload(0, transition_sets=sets)
    return SelectionPayload(0)


def _payload(source, selected, path, mode):
    """Payload for path[0], given that path[-1] is its nearest member."""
    node = path[0]
    anchor = path[-1]
    base = selected.members[anchor]
    length = base.phrase_length + len(path) - 1
    if isinstance(mode, ApproxMode):
        return SelectionPayload(length, shortcut=_shortcut(path, base, length, mode.window))
    if isinstance(mode, RegexMode):
        labels = bytes(source.label(v) for v in reversed(path[:-1]))
        sets = tuple(mode.tnfa.run(states, labels) for states in base.transition_sets)
        return SelectionPayload(length, transition_sets=sets)
    return SelectionPayload(length)


def _shortcut(path, base, length, window):
    if length <= window:
        return None
    if base.phrase_length > window:
        return base.shortcut
    # The depth-`window` ancestor lies on the path, counted up from its member.
    return path[len(path) - 1 - (window - base.phrase_length)]


def depth_ancestor(selected, member, path):
    """Ancestor at depth ``selected.window`` of path[0], whose nearest member is ``member``."""
    window = selected.window
    if window is None:
        raise PreconditionError('selected set was built without approximate-matching payloads')
    base = selected.members[member]
    length = base.phrase_length + len(path) - 1
    if length <= window:
        raise PreconditionError(f'phrase of length {length} is not longer than {window}')
    return _shortcut(path, base, length, window)
