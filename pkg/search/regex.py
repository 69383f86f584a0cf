"""Regular expression search on compressed text.

Patterns are compiled into Thompson automata and simulated on state sets.
Every trie node x gets, for each automaton state s, the set reached by reading
phrase(x) from s with the start state re-injected before every character; these
sets are recomputed from the nearest selected node, whose sets are cached. The
per-node ``lastmatch`` maps point at the deepest ancestor whose phrase drives a
state into an accepting state, and matches are read off those chains.

Supported syntax: literals, concatenation, ``|``, ``*``, parentheses and
backslash escapes. Characters outside ASCII stand for their UTF-8 bytes.
"""
import functools
import heapq
import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Optional

from compression.exceptions import CzgrepError, PreconditionError
from compression.selection import RegexMode, build_selected_set, nearest_member
from compression.trie import build_trie
from compression.zl78 import Scheme

from .stats import SearchStats

logger = logging.getLogger(__name__)

# Memoized (state set, byte) steps per automaton.
PREFIX_CACHE_SIZE = 1 << 16

METACHARACTERS = frozenset('|*()\\')


class RegexSyntaxError(CzgrepError):
    def __init__(self, message, position, source):
        self.message = message
        self.position = position
        self.source = source
        super().__init__(f'{message} at offset {position}')

    def caret(self):
        return f'{self.source}\n{" " * self.position}^'


@dataclass(frozen=True)
class Literal:
    byte: int

    @property
    def size(self):
        return 1


@dataclass(frozen=True)
class Concat:
    left: object
    right: object

    @property
    def size(self):
        return self.left.size + self.right.size + 1


@dataclass(frozen=True)
class Union:
    left: object
    right: object

    @property
    def size(self):
        return self.left.size + self.right.size + 1


@dataclass(frozen=True)
class Star:
    inner: object

    @property
    def size(self):
        return self.inner.size + 1


Regex = (Literal, Concat, Union, Star)


class _Parser:
    def __init__(self, source):
        self.source = source
        self.pos = 0

    def error(self, message, position=None):
        return RegexSyntaxError(message, self.pos if position is None else position, self.source)

    def peek(self):
        if self.pos < len(self.source):
            return self.source[self.pos]
        return None

    def parse(self):
        node = self.union()
        if self.pos < len(self.source):
            # Only an unmatched ')' stops the top-level alternation early.
            raise self.error("unbalanced ')'")
        return node

    def union(self):
        node = self.concat()
        while self.peek() == '|':
            self.pos += 1
            node = Union(node, self.concat())
        return node

    def concat(self):
        node = None
        while self.peek() not in (None, '|', ')'):
            item = self.star()
            node = item if node is None else Concat(node, item)
        if node is None:
            if self.peek() is None:
                raise self.error('expected an expression')
            raise self.error(f'expected an expression before {self.peek()!r}')
        return node

    def star(self):
        node = self.atom()
        while self.peek() == '*':
            self.pos += 1
            node = Star(node)
        return node

    def atom(self):
        ch = self.peek()
        if ch == '(':
            start = self.pos
            self.pos += 1
            node = self.union()
            if self.peek() != ')':
                raise self.error(f"missing ')' for group opened at offset {start}")
            self.pos += 1
            return node
        if ch == '*':
            raise self.error("nothing to repeat before '*'")
        if ch == '\\':
            if self.pos + 1 >= len(self.source):
                raise self.error('trailing escape')
            ch = self.source[self.pos + 1]
            self.pos += 2
        else:
            self.pos += 1
        return _literal(ch)


def _literal(ch):
    data = ch.encode('utf-8')
    node = Literal(data[0])
    for byte in data[1:]:
        node = Concat(node, Literal(byte))
    return node


def parse_regex(source):
    """Parse ``source`` into an AST; ``*`` binds tighter than concatenation, which binds tighter than ``|``."""
    if isinstance(source, Regex):
        return source
    return _Parser(source).parse()


def escape(text):
    return ''.join('\\' + ch if ch in METACHARACTERS else ch for ch in text)


class Tnfa:
    """Thompson automaton with a single accepting state.

    Every state has at most one labelled move; all other transitions are
    epsilon transitions. State sets are frozensets and are kept closed under
    epsilon transitions.
    """

    def __init__(self, moves, epsilon, start, final, prefix_cache_size=PREFIX_CACHE_SIZE):
        self.moves = tuple(moves)
        self.epsilon = tuple(tuple(targets) for targets in epsilon)
        self.start = start
        self.finals = frozenset({final})
        self.prefix_step = functools.lru_cache(maxsize=prefix_cache_size)(self._prefix_step)
        self.start_closure = self.closure({start})

    def __repr__(self):
        return f'<Tnfa states={self.state_count} transitions={self.transition_count}>'

    @property
    def state_count(self):
        return len(self.moves)

    @property
    def transition_count(self):
        return sum(move is not None for move in self.moves) + sum(len(t) for t in self.epsilon)

    @property
    def accepts_empty(self):
        return bool(self.start_closure & self.finals)

    def closure(self, states):
        seen = set(states)
        stack = list(seen)
        while stack:
            for target in self.epsilon[stack.pop()]:
                if target not in seen:
                    seen.add(target)
                    stack.append(target)
        return frozenset(seen)

    def step(self, states, byte):
        targets = set()
        for state in states:
            move = self.moves[state]
            if move is not None and move[0] == byte:
                targets.add(move[1])
        return self.closure(targets)

    def _prefix_step(self, states, byte):
        return self.step(self.closure(states | self.start_closure), byte)

    def run(self, states, data):
        """Read ``data`` from ``states`` with the start state re-injected before every byte."""
        states = frozenset(states)
        for byte in data:
            states = self.prefix_step(states, byte)
        return states

    def accepts(self, data):
        states = self.start_closure
        for byte in data:
            states = self.step(states, byte)
        return bool(states & self.finals)


def build_tnfa(regex):
    regex = parse_regex(regex)
    moves = []
    epsilon = []

    def new_state():
        moves.append(None)
        epsilon.append([])
        return len(moves) - 1

    def build(node):
        if isinstance(node, Literal):
            entry, exit_ = new_state(), new_state()
            moves[entry] = (node.byte, exit_)
            return entry, exit_
        if isinstance(node, Concat):
            left_entry, left_exit = build(node.left)
            right_entry, right_exit = build(node.right)
            epsilon[left_exit].append(right_entry)
            return left_entry, right_exit
        if isinstance(node, Union):
            entry = new_state()
            left_entry, left_exit = build(node.left)
            right_entry, right_exit = build(node.right)
            exit_ = new_state()
            epsilon[entry] += [left_entry, right_entry]
            epsilon[left_exit].append(exit_)
            epsilon[right_exit].append(exit_)
            return entry, exit_
        entry = new_state()
        inner_entry, inner_exit = build(node.inner)
        exit_ = new_state()
        epsilon[entry] += [inner_entry, exit_]
        epsilon[inner_exit] += [inner_entry, exit_]
        return entry, exit_

    start, final = build(regex)
    tnfa = Tnfa(moves, epsilon, start, final)
    logger.debug('built %r for regex of size %d', tnfa, regex.size)
    return tnfa


def state_set_transition(tnfa, states, byte):
    return tnfa.step(frozenset(states), byte)


def prefix_match_transition(tnfa, states, byte):
    return tnfa.prefix_step(frozenset(states), byte)


@dataclass(frozen=True)
class RegexDescription:
    index: int
    u: int
    l: int  # noqa: E741
    node: int
    state_set: frozenset
    lastmatch: dict = field(default_factory=dict, repr=False)


class RegexDescriptions(Sequence):
    """Descriptions of pieces 0..n together with the per-node tables they share."""

    def __init__(self, source, descriptions, depths, lastmatch):
        self.source = source
        self._descriptions = descriptions
        self.depths = depths
        self.lastmatch = lastmatch

    def __getitem__(self, index):
        return self._descriptions[index]

    def __len__(self):
        return len(self._descriptions)

    @property
    def text_length(self):
        last = self._descriptions[-1]
        return last.u + last.l - 1


def _path_labels_down(source, path):
    """Labels read from the last node of ``path`` down to its first."""
    return bytes(source.label(node) for node in reversed(path[:-1]))


def build_regex_descriptions(source, selected, tnfa):
    if not isinstance(selected.mode, RegexMode) or selected.mode.tnfa is not tnfa:
        raise PreconditionError('selected set was not built for this automaton')
    states = range(tnfa.state_count)
    depths = [0] * source.node_count
    lastmatch = [None] * source.node_count
    lastmatch[0] = {}
    for node in range(1, source.node_count):
        parent = source.parent(node)
        depths[node] = depths[parent] + 1
        member, path = nearest_member(source, selected, node)
        base = selected.payload(member).transition_sets
        labels = _path_labels_down(source, path)
        marks = lastmatch[parent]
        accepting = [s for s in states if tnfa.run(base[s], labels) & tnfa.finals]
        if accepting:
            marks = dict(marks)
            marks.update(dict.fromkeys(accepting, node))
        lastmatch[node] = marks

    prev = RegexDescription(index=0, u=1, l=0, node=0, state_set=tnfa.start_closure, lastmatch=lastmatch[0])
    descriptions = [prev]
    for index in range(1, source.piece_count + 1):
        node = source.piece_node(index)
        member, path = nearest_member(source, selected, node)
        base = selected.payload(member).transition_sets
        merged = set()
        for state in prev.state_set | {tnfa.start}:
            merged |= base[state]
        state_set = tnfa.run(merged, _path_labels_down(source, path))
        prev = RegexDescription(
            index=index,
            u=prev.u + prev.l,
            l=depths[node],
            node=node,
            state_set=state_set,
            lastmatch=lastmatch[node],
        )
        descriptions.append(prev)
    return RegexDescriptions(source, descriptions, depths, lastmatch)


def report_regex_matches(descs, tnfa):
    """Ending positions of all non-empty matches, or every position when the empty string matches."""
    if tnfa.accepts_empty:
        logger.warning('pattern matches the empty string; every position is reported')
        return list(range(1, descs.text_length + 1))
    source = descs.source
    matches = []
    for index in range(1, len(descs)):
        desc = descs[index]
        heap = []
        for state in descs[index - 1].state_set | {tnfa.start}:
            node = desc.lastmatch.get(state)
            if node is not None:
                heap.append((-descs.depths[node], state, node))
        heapq.heapify(heap)
        found = []
        while heap:
            key, state, node = heapq.heappop(heap)
            position = desc.u + descs.depths[node] - 1
            if not found or found[-1] != position:
                found.append(position)
            following = descs.lastmatch[source.parent(node)].get(state)
            if following is not None:
                heapq.heappush(heap, (-descs.depths[following], state, following))
        found.reverse()
        matches.extend(found)
    return matches


def search_regex(z, pattern, tau, explicit_trie=False, stats: Optional[SearchStats] = None):
    """All ending positions of substrings of the text that ``pattern`` matches."""
    tnfa = build_tnfa(parse_regex(pattern))
    if z.scheme == Scheme.ZLW or explicit_trie:
        source = build_trie(z)
    else:
        source = z
    selected = build_selected_set(source, tau, RegexMode(tnfa))
    descs = build_regex_descriptions(source, selected, tnfa)
    matches = report_regex_matches(descs, tnfa)
    if stats is not None:
        stats.n = z.n
        stats.trie_nodes = source.node_count - 1
        stats.u = descs.text_length
        stats.tau = selected.tau
        stats.selected_size = len(selected)
        stats.peak_live_descriptions = len(descs)
    logger.debug('regex search: %d matches over %d phrases', len(matches), z.n)
    return matches
