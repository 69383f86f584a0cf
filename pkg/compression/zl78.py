"""ZL78 and ZLW compressed strings.

A compressed string is a sequence of compression elements z_1..z_n. In ZL78
every element is a (reference, label) pair and the text is the concatenation
of the element phrases. In ZLW only the references are stored: they are the
codes emitted by an LZW parse over a dictionary seeded with the 256 single
bytes, and the text is the concatenation of the phrases of those codes.

Trie nodes are addressed by integers, 0 being the root. For ZL78 node i is
element i; for ZLW node b + 1 is the seed for byte b and node 256 + i is the
entry created at step i of the parse.
"""
import logging
import re
from dataclasses import dataclass, field
from typing import Optional, Protocol

from django.db import models

from .exceptions import FormatError, PreconditionError, UnsupportedConfigurationError

logger = logging.getLogger(__name__)

SEED_COUNT = 256


class Scheme(models.TextChoices):
    ZL78 = 'zl78', 'ZL78'
    ZLW = 'zlw', 'ZLW'


class PhraseSource(Protocol):
    """Read access to a dictionary trie and to the phrase sequence of the text.

    Pieces are the phrases of the text in order, numbered 1..piece_count; each
    piece is the phrase of one trie node. A piece is fresh when it is the first
    piece whose phrase is that node's phrase.
    """

    scheme: Scheme

    @property
    def node_count(self) -> int: ...

    @property
    def piece_count(self) -> int: ...

    def parent(self, node: int) -> int: ...

    def label(self, node: int) -> int: ...

    def piece_node(self, index: int) -> int: ...

    def is_fresh(self, index: int) -> bool: ...


@dataclass(frozen=True)
class CompressionElement:
    reference: int
    label: Optional[int] = None

    def __str__(self):
        if self.label is None:
            return f'({self.reference},)'
        return f'({self.reference},{chr(self.label)})'


@dataclass(frozen=True)
class CompressedString:
    scheme: Scheme
    elements: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, 'scheme', Scheme(self.scheme))
        object.__setattr__(self, 'elements', tuple(self.elements))
        if self.scheme == Scheme.ZL78:
            _validate_zl78(self.elements)
        else:
            _validate_zlw(self.elements)

    def __len__(self):
        return len(self.elements)

    def __str__(self):
        return format_elements(self)

    @property
    def n(self):
        return len(self.elements)

    @property
    def final_complete(self):
        return not self.elements or self.elements[-1].label is not None

    # PhraseSource, available for ZL78 streams only.

    @property
    def node_count(self):
        return self.n + 1 if self.final_complete else self.n

    @property
    def piece_count(self):
        return self.n

    def parent(self, node):
        self._require_labels()
        return self.elements[node - 1].reference

    def label(self, node):
        self._require_labels()
        return self.elements[node - 1].label

    def piece_node(self, index):
        element = self.elements[index - 1]
        if element.label is None:
            return element.reference
        return index

    def is_fresh(self, index):
        return self.elements[index - 1].label is not None

    def references(self):
        return [e.reference for e in self.elements]

    def _require_labels(self):
        if self.scheme != Scheme.ZL78:
            raise UnsupportedConfigurationError(
                'ZLW streams do not store labels; build the dictionary trie first'
            )


def _validate_zl78(elements):
    last = len(elements)
    for index, element in enumerate(elements, start=1):
        if not 0 <= element.reference < index:
            raise FormatError(
                f'reference {element.reference} out of range [0, {index - 1}]',
                element_index=index,
            )
        if element.label is None:
            if index != last:
                raise FormatError('only the final element may omit its label', element_index=index)
        elif not 0 <= element.label < 256:
            raise FormatError(f'label {element.label} is not a byte', element_index=index)


def _validate_zlw(elements):
    for index, element in enumerate(elements, start=1):
        limit = SEED_COUNT + index - 1
        if not 1 <= element.reference <= limit:
            raise FormatError(
                f'code {element.reference} out of range [1, {limit}]', element_index=index
            )
        if element.label is not None:
            raise FormatError('ZLW elements carry no label', element_index=index)


def compress(text, scheme=Scheme.ZL78):
    """Greedy left-to-right parse of ``text`` (bytes)."""
    scheme = Scheme(scheme)
    text = bytes(text)
    if scheme == Scheme.ZLW:
        elements = _compress_zlw(text)
    else:
        elements = _compress_zl78(text)
    logger.debug('compressed %d bytes into %d %s elements', len(text), len(elements), scheme.label)
    return CompressedString(scheme, elements)


def _compress_zl78(text):
    children = {}
    elements = []
    node = 0
    for byte in text:
        child = children.get((node, byte))
        if child is None:
            elements.append(CompressionElement(node, byte))
            children[(node, byte)] = len(elements)
            node = 0
        else:
            node = child
    if node:
        # The input ended inside an existing phrase.
        elements.append(CompressionElement(node, None))
    return elements


def _compress_zlw(text):
    if not text:
        return []
    children = {}
    next_code = SEED_COUNT + 1
    elements = []
    current = text[0] + 1
    for byte in text[1:]:
        child = children.get((current, byte))
        if child is not None:
            current = child
            continue
        elements.append(CompressionElement(current))
        children[(current, byte)] = next_code
        next_code += 1
        current = byte + 1
    elements.append(CompressionElement(current))
    return elements


def decompress(z):
    """Return the text represented by ``z``."""
    if z.scheme == Scheme.ZLW:
        from .trie import build_trie

        return build_trie(z).text()
    output = bytearray()
    for index in range(1, z.n + 1):
        output += path_labels(z, z.piece_node(index))
    return bytes(output)


def path_labels(source, node, count=None):
    """The last ``count`` characters of the phrase of ``node``, in text order.

    Decoding walks from ``node`` towards the root, one element per character.
    ``count=None`` decodes the whole phrase.
    """
    labels = bytearray()
    while node and (count is None or len(labels) < count):
        labels.append(source.label(node))
        node = source.parent(node)
    if count is not None and len(labels) < count:
        raise PreconditionError(f'phrase has only {len(labels)} characters, {count} requested')
    labels.reverse()
    return bytes(labels)


def _check_index(z, index):
    if not 0 <= index <= z.n:
        raise PreconditionError(f'element index {index} out of range [0, {z.n}]')


def phrase_length(z, index):
    """Number of characters in phrase(z_index), by walking references."""
    _check_index(z, index)
    if index == 0:
        return 0
    if z.scheme == Scheme.ZLW:
        # Parents of ZLW codes are known from the references alone.
        references = z.references()
        code = references[index - 1]
        length = 1
        while code > SEED_COUNT:
            code = references[code - SEED_COUNT - 1]
            length += 1
        return length
    node = z.piece_node(index)
    length = 0
    while node:
        length += 1
        node = z.elements[node - 1].reference
    return length


def decode_path_label(source, index, count):
    """The last ``count`` characters of the phrase of piece ``index``.

    ``source`` is a ZL78 CompressedString or a DictionaryTrie; raw ZLW strings
    are rejected because their labels are not stored.
    """
    if isinstance(source, CompressedString):
        source._require_labels()
        _check_index(source, index)
    elif not 0 <= index <= source.piece_count:
        raise PreconditionError(f'element index {index} out of range [0, {source.piece_count}]')
    if count < 0:
        raise PreconditionError('count must not be negative')
    if index == 0:
        node = 0
    else:
        node = source.piece_node(index)
    return path_labels(source, node, count)


_ZL78_PAIR = re.compile(r'\((\d+),(.?)\)', re.DOTALL)
_ZLW_CODE = re.compile(r'\((\d+)\)')


def format_elements(z):
    """Debug rendering: "(0,a)(0,n)(1,n)" for ZL78, "(98)(97)" for ZLW."""
    if z.scheme == Scheme.ZLW:
        return ''.join(f'({e.reference})' for e in z.elements)
    return ''.join(str(e) for e in z.elements)


def parse_elements(text, scheme=Scheme.ZL78):
    """Inverse of format_elements."""
    scheme = Scheme(scheme)
    pattern = _ZLW_CODE if scheme == Scheme.ZLW else _ZL78_PAIR
    elements = []
    position = 0
    while position < len(text):
        match = pattern.match(text, position)
        if match is None:
            raise FormatError(f'cannot parse element text at offset {position}', offset=position)
        if scheme == Scheme.ZLW:
            elements.append(CompressionElement(int(match.group(1))))
        else:
            label = match.group(2)
            elements.append(CompressionElement(int(match.group(1)), ord(label) if label else None))
        position = match.end()
    return CompressedString(scheme, elements)
