"""Approximate string matching on compressed text.

The text is processed one phrase at a time. For every phrase a description
is computed from the description of the previous phrase: its start and
length, its relevant prefix and suffix (at most m+k characters each), the
matches that lie entirely inside the phrase (M_I) and the matches of the
pattern in the previous relevant suffix followed by the relevant prefix
(M_O). Only the previous description and the non-empty M_I sets stay live.
"""
import heapq
import logging
from dataclasses import dataclass
from typing import Callable, List, Optional

from compression.exceptions import ParameterError, PreconditionError, UnsupportedConfigurationError
from compression.selection import ApproxMode, build_selected_set, depth_ancestor, nearest_member
from compression.trie import build_trie
from compression.zl78 import Scheme, path_labels

from .stats import SearchStats

logger = logging.getLogger(__name__)

UncompressedMatcher = Callable[[bytes, bytes, int], List[int]]
MatchReport = List[int]


def edit_distance_matches(a, s, k):
    """Ending positions (1-based) of substrings of ``s`` within edit distance ``k`` of ``a``.

    Column-by-column dynamic programming with a free starting position. Only
    rows up to the last one holding a value <= k are recomputed; rows below it
    cannot drop to k in the next column. The output is sorted by construction.
    """
    m = len(a)
    column = list(range(m + 1))
    last = min(k, m)
    matches = []
    for j, ch in enumerate(s, start=1):
        top = min(last + 1, m)
        diagonal = 0
        for i in range(1, top + 1):
            above = column[i] if i <= last else k + 1
            column[i] = min(diagonal + (a[i - 1] != ch), above + 1, column[i - 1] + 1)
            diagonal = above
        last = top
        while last and column[last] > k:
            last -= 1
        if last == m:
            matches.append(j)
    return matches


def match_start_interval(j, pattern_len, k, text_len):
    """Positions where a match ending at ``j`` may start."""
    if not 1 <= j <= text_len:
        raise PreconditionError(f'position {j} out of range [1, {text_len}]')
    lo = max(1, j - pattern_len + 1 - k)
    hi = min(text_len, j, j - pattern_len + 1 + k)
    return lo, max(lo, hi)


@dataclass(frozen=True)
class ApproxQuery:
    pattern: bytes
    k: int
    tau: int = 1

    def __post_init__(self):
        object.__setattr__(self, 'pattern', bytes(self.pattern))
        if not self.pattern:
            raise ParameterError('pattern must not be empty')
        if not 0 <= self.k < self.m:
            raise ParameterError(f'error threshold must satisfy 0 <= k < m (k={self.k}, m={self.m})')
        if self.tau < 1:
            raise ParameterError(f'tau must be at least 1 (got {self.tau})')

    @property
    def m(self):
        return len(self.pattern)

    @property
    def window(self):
        return self.m + self.k


@dataclass(frozen=True)
class ApproxDescription:
    index: int
    u: int
    l: int  # noqa: E741
    rpre: bytes = b''
    rsuf: bytes = b''
    m_i: tuple = ()
    m_o: tuple = ()


BASE_DESCRIPTION = ApproxDescription(index=0, u=1, l=0)


class InternalMatchStore:
    """Internal match sets (M_I) of trie nodes.

    A set is a chain of (offset, rest) cells; a node shares its parent's chain
    and adds at most one cell in front of it. Only non-empty sets are stored.
    """

    def __init__(self):
        self._sets = {}
        self.cell_count = 0

    def __len__(self):
        return len(self._sets)

    def get(self, node):
        return self._sets.get(node)

    def extend(self, node, parent, offset=None):
        chain = self._sets.get(parent)
        if offset is not None:
            chain = (offset, chain)
            self.cell_count += 1
        if chain is not None:
            self._sets[node] = chain
        return chain

    @staticmethod
    def offsets(chain):
        offsets = []
        while chain is not None:
            offset, chain = chain
            offsets.append(offset)
        offsets.reverse()
        return tuple(offsets)


def relevant_suffix(source, index, length):
    """The ``length`` characters of the text ending with piece ``index``.

    Walks from the piece towards the root and continues with the preceding
    pieces until enough characters are decoded.
    """
    labels = bytearray()
    remaining = length
    while remaining > 0:
        node = source.piece_node(index)
        decoded = 0
        while node and decoded < remaining:
            labels.append(source.label(node))
            node = source.parent(node)
            decoded += 1
        remaining -= decoded
        index -= 1
    labels.reverse()
    return bytes(labels)


def compute_description(source, selected, query, prev, index, store, matcher=edit_distance_matches):
    if prev.index != index - 1:
        raise PreconditionError(f'description {index} requires description {index - 1}, got {prev.index}')
    if not 1 <= index <= source.piece_count:
        raise PreconditionError(f'element index {index} out of range [1, {source.piece_count}]')
    if selected.window != query.window:
        raise PreconditionError('selected set was built for a different pattern window')
    window = query.window
    node = source.piece_node(index)
    member, path = nearest_member(source, selected, node)
    length = len(path) - 1 + selected.payload(member).phrase_length
    start = prev.u + prev.l

    if length <= window:
        rpre = path_labels(source, node, length)
    else:
        rpre = path_labels(source, depth_ancestor(selected, member, path), window)
    rsuf = relevant_suffix(source, index, min(window, start + length - 1))
    m_o = tuple(matcher(query.pattern, prev.rsuf + rpre, query.k))

    if source.is_fresh(index):
        if length < query.m - query.k:
            ends_here = False
        elif length <= window and len(prev.rsuf) + length not in m_o:
            # rpre is the whole phrase, so M_O already covers every match ending at its end.
            ends_here = False
        else:
            tail = rsuf[-min(window, length):]
            tail_matches = matcher(query.pattern, tail, query.k)
            ends_here = bool(tail_matches) and tail_matches[-1] == len(tail)
        chain = store.extend(node, source.parent(node), length if ends_here else None)
    else:
        chain = store.get(node)
    return ApproxDescription(
        index=index,
        u=start,
        l=length,
        rpre=rpre,
        rsuf=rsuf,
        m_i=store.offsets(chain),
        m_o=m_o,
    )


def assemble_matches(desc, prev_rsuf_len):
    """Text positions of the matches ending inside the phrase of ``desc``."""
    lo = desc.u
    hi = desc.u + desc.l - 1
    internal = [j + desc.u - 1 for j in desc.m_i]
    overlapping = [
        position
        for position in (j + desc.u - 1 - prev_rsuf_len for j in desc.m_o)
        if lo <= position <= hi
    ]
    merged = []
    for position in heapq.merge(internal, overlapping):
        if not merged or merged[-1] != position:
            merged.append(position)
    return merged


def phrase_source(z, explicit_trie=False):
    """The structure the engines read labels from."""
    if z.scheme == Scheme.ZLW and not explicit_trie:
        raise UnsupportedConfigurationError(
            'ZLW streams store no labels; approximate search on ZLW needs the explicit '
            'dictionary trie (Omega(n) space), enable explicit-trie mode'
        )
    if explicit_trie:
        return build_trie(z)
    return z


def iter_descriptions(source, selected, query, matcher=edit_distance_matches, stats=None):
    """Descriptions of pieces 1..n, computed left to right.

    Each description is dropped by the scan once its successor exists.
    """
    store = InternalMatchStore()
    prev = BASE_DESCRIPTION
    for index in range(1, source.piece_count + 1):
        desc = compute_description(source, selected, query, prev, index, store, matcher)
        if stats is not None:
            stats.observe(prev, desc)
            stats.internal_cells = store.cell_count
        yield desc
        prev = desc


def search_approx(z, pattern, k, tau, explicit_trie=False, matcher=None, stats: Optional[SearchStats] = None):
    """All ending positions of substrings of the text within edit distance ``k`` of ``pattern``."""
    query = ApproxQuery(pattern, k, tau)
    matcher = matcher or edit_distance_matches
    source = phrase_source(z, explicit_trie)
    selected = build_selected_set(source, query.tau, ApproxMode(query.m, query.k))
    if stats is not None:
        stats.n = z.n
        stats.trie_nodes = source.node_count - 1
        stats.tau = selected.tau
        stats.selected_size = len(selected)
    matches = []
    prev_rsuf_len = 0
    last = None
    for desc in iter_descriptions(source, selected, query, matcher, stats):
        matches.extend(assemble_matches(desc, prev_rsuf_len))
        prev_rsuf_len = len(desc.rsuf)
        last = desc
    if stats is not None and last is not None:
        stats.u = last.u + last.l - 1
    logger.debug('approx search: %d matches over %d phrases', len(matches), z.n)
    return matches
