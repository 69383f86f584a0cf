"""Binary container for compressed strings.

Layout::

    magic    4 bytes   b"CZ78" or b"CZLW"
    version  1 byte    FORMAT_VERSION
    n        varint
    ZL78:    n x (varint reference, flag byte, label byte if flag == 1)
    ZLW:     n x (varint code), then the end-of-stream flag byte 0x01

Varints are unsigned LEB128.
"""
from pathlib import Path

from .exceptions import FormatError
from .zl78 import SEED_COUNT, CompressedString, CompressionElement, Scheme

FORMAT_VERSION = 1
MAGIC = {
    Scheme.ZL78: b'CZ78',
    Scheme.ZLW: b'CZLW',
}
SCHEMES = {magic: scheme for scheme, magic in MAGIC.items()}
STREAM_COMPLETE = 0x01
MAX_VARINT_BYTES = 10


def encode_varint(value):
    if value < 0:
        raise ValueError('varints are unsigned')
    out = bytearray()
    while True:
        byte = value & 0x7F
        value >>= 7
        if value:
            out.append(byte | 0x80)
        else:
            out.append(byte)
            return bytes(out)


def read_varint(data, offset, element_index=None):
    """Decode a varint at ``offset``; returns (value, next offset)."""
    value = 0
    shift = 0
    start = offset
    while True:
        if offset >= len(data):
            raise FormatError('truncated stream', offset=start, element_index=element_index)
        if offset - start >= MAX_VARINT_BYTES:
            raise FormatError('varint too long', offset=start, element_index=element_index)
        byte = data[offset]
        offset += 1
        value |= (byte & 0x7F) << shift
        if not byte & 0x80:
            return value, offset
        shift += 7


def dumps(z):
    out = bytearray(MAGIC[z.scheme])
    out.append(FORMAT_VERSION)
    out += encode_varint(z.n)
    for element in z.elements:
        out += encode_varint(element.reference)
        if z.scheme == Scheme.ZL78:
            if element.label is None:
                out.append(0)
            else:
                out.append(1)
                out.append(element.label)
    if z.scheme == Scheme.ZLW:
        out.append(STREAM_COMPLETE)
    return bytes(out)


def loads(data):
    data = bytes(data)
    if len(data) < 5:
        raise FormatError('truncated header', offset=len(data))
    scheme = SCHEMES.get(data[:4])
    if scheme is None:
        raise FormatError(f'bad magic {data[:4]!r}', offset=0)
    if data[4] != FORMAT_VERSION:
        raise FormatError(f'unsupported format version {data[4]}', offset=4)
    n, offset = read_varint(data, 5)
    if scheme == Scheme.ZL78:
        elements, offset = _read_zl78(data, offset, n)
    else:
        elements, offset = _read_zlw(data, offset, n)
    if offset != len(data):
        raise FormatError(f'{len(data) - offset} trailing bytes after the last element', offset=offset)
    return CompressedString(scheme, elements)


def _read_zl78(data, offset, n):
    elements = []
    for index in range(1, n + 1):
        start = offset
        reference, offset = read_varint(data, offset, element_index=index)
        if reference >= index:
            raise FormatError(
                f'reference {reference} out of range [0, {index - 1}]',
                offset=start,
                element_index=index,
            )
        if offset >= len(data):
            raise FormatError('truncated stream', offset=offset, element_index=index)
        flag = data[offset]
        offset += 1
        if flag == 1:
            if offset >= len(data):
                raise FormatError('truncated stream', offset=offset, element_index=index)
            elements.append(CompressionElement(reference, data[offset]))
            offset += 1
        elif flag == 0 and index == n:
            elements.append(CompressionElement(reference, None))
        else:
            raise FormatError(f'invalid label flag {flag}', offset=offset - 1, element_index=index)
    return elements, offset


def _read_zlw(data, offset, n):
    elements = []
    for index in range(1, n + 1):
        start = offset
        code, offset = read_varint(data, offset, element_index=index)
        if not 1 <= code <= SEED_COUNT + index - 1:
            raise FormatError(
                f'code {code} out of range [1, {SEED_COUNT + index - 1}]',
                offset=start,
                element_index=index,
            )
        elements.append(CompressionElement(code))
    if offset >= len(data):
        raise FormatError('missing end-of-stream flag', offset=offset)
    if data[offset] != STREAM_COMPLETE:
        raise FormatError(f'invalid end-of-stream flag {data[offset]}', offset=offset)
    return elements, offset + 1


def dump(z, path):
    Path(path).write_bytes(dumps(z))


def load(path):
    return loads(Path(path).read_bytes())
