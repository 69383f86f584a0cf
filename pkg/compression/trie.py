"""Explicit dictionary trie (Omega(n) space).

Building the trie makes every label available in constant time. It is the
only way to search ZLW streams, whose labels are implicit, and an optional
speed-for-space mode for ZL78.
"""
import logging

from .exceptions import FormatError
from .zl78 import SEED_COUNT, Scheme, path_labels

logger = logging.getLogger(__name__)


class DictionaryTrie:
    """Parent links, labels, depths and child maps for every dictionary node."""

    def __init__(self, scheme, parents, labels, pieces, fresh):
        self.scheme = Scheme(scheme)
        self._parents = parents
        self._labels = labels
        self._pieces = pieces
        self._fresh = fresh
        self._depths = [0] * len(parents)
        self._children = {}
        for node in range(1, len(parents)):
            parent = parents[node]
            self._depths[node] = self._depths[parent] + 1
            self._children[(parent, labels[node])] = node

    def __repr__(self):
        return f'<DictionaryTrie {self.scheme.label} nodes={self.node_count} pieces={self.piece_count}>'

    @property
    def node_count(self):
        return len(self._parents)

    @property
    def piece_count(self):
        return len(self._pieces)

    def parent(self, node):
        return self._parents[node]

    def label(self, node):
        return self._labels[node]

    def depth(self, node):
        return self._depths[node]

    def child(self, node, byte):
        return self._children.get((node, byte))

    def child_labels(self, node):
        return sorted(label for (parent, label) in self._children if parent == node)

    def piece_node(self, index):
        return self._pieces[index - 1]

    def is_fresh(self, index):
        return self._fresh[index - 1]

    def phrase(self, node):
        return path_labels(self, node)

    def text(self):
        output = bytearray()
        for node in self._pieces:
            output += self.phrase(node)
        return bytes(output)


def build_trie(z):
    """Build the explicit trie of a ZL78 or ZLW compressed string in O(n) time."""
    if z.scheme == Scheme.ZLW:
        trie = _build_zlw(z)
    else:
        trie = _build_zl78(z)
    logger.debug('built %r', trie)
    return trie


def _build_zl78(z):
    parents = [0]
    labels = [None]
    pieces = []
    fresh = []
    for index, element in enumerate(z.elements, start=1):
        if element.label is None:
            pieces.append(element.reference)
            fresh.append(False)
            continue
        parents.append(element.reference)
        labels.append(element.label)
        pieces.append(index)
        fresh.append(True)
    return DictionaryTrie(Scheme.ZL78, parents, labels, pieces, fresh)


def _build_zlw(z):
    parents = [0] * (SEED_COUNT + 1)
    labels = [None] + list(range(SEED_COUNT))
    first = [None] + list(range(SEED_COUNT))
    pieces = []
    fresh = []
    seen = set()
    for index, element in enumerate(z.elements, start=1):
        code = element.reference
        pending = SEED_COUNT + index - 1
        if index > 1:
            # The entry created at the previous step is completed by the first
            # byte of this phrase; code == pending is the entry itself.
            previous = z.elements[index - 2].reference
            if code == pending:
                head = first[previous]
            elif code < pending:
                head = first[code]
            else:
                raise FormatError(f'code {code} is not yet defined', element_index=index)
            parents.append(previous)
            labels.append(head)
            first.append(first[previous])
        elif code > SEED_COUNT:
            raise FormatError(f'code {code} is not yet defined', element_index=index)
        pieces.append(code)
        fresh.append(code not in seen)
        seen.add(code)
    return DictionaryTrie(Scheme.ZLW, parents, labels, pieces, fresh)
