import random
from collections import Counter

import pytest

from compression.exceptions import FormatError
from compression.trie import build_trie
from compression.zl78 import CompressedString, CompressionElement, Scheme, compress, decompress


def lzw_reference_phrases(codes):
    """Plain LZW decoder keeping the whole dictionary as strings."""
    table = {b + 1: bytes([b]) for b in range(256)}
    phrases = []
    previous = None
    for code in codes:
        if code in table:
            phrase = table[code]
        else:
            phrase = previous + previous[:1]
        if previous is not None:
            table[len(table) + 1] = previous + phrase[:1]
        phrases.append(phrase)
        previous = phrase
    return phrases


def test_bananas_trie(bananas_z):
    trie = build_trie(bananas_z)
    assert trie.node_count == 9
    assert trie.child_labels(0) == sorted(b'anbr')
    assert trie.phrase(6) == b'ana'
    assert trie.depth(6) == 3
    assert trie.child(3, ord('a')) == 6
    assert trie.child(3, ord('z')) is None
    assert trie.text() == b'ananasbananer'


def test_empty_trie():
    trie = build_trie(compress(b''))
    assert trie.node_count == 1
    assert trie.text() == b''


def test_incomplete_final_phrase_adds_no_node():
    trie = build_trie(compress(b'aaaa'))
    assert trie.node_count == 3
    assert trie.piece_node(3) == 1
    assert not trie.is_fresh(3)
    assert trie.text() == b'aaaa'


def test_depth_is_phrase_length_and_parent_is_prefix():
    rng = random.Random(3)
    text = bytes(rng.choice(b'abc') for _ in range(400))
    trie = build_trie(compress(text))
    for node in range(1, trie.node_count):
        phrase = trie.phrase(node)
        assert trie.depth(node) == len(phrase)
        assert trie.phrase(trie.parent(node)) == phrase[:-1]


def test_zlw_phrases_match_reference_decoder(bananas):
    z = compress(bananas, Scheme.ZLW)
    trie = build_trie(z)
    expected = lzw_reference_phrases(z.references())
    assert [trie.phrase(trie.piece_node(i)) for i in range(1, z.n + 1)] == expected
    assert Counter(trie.phrase(trie.piece_node(i)) for i in range(1, z.n + 1)) == Counter(expected)
    assert trie.text() == bananas


def test_zlw_code_defined_by_its_own_use():
    # Code 257 is emitted at the step that creates it.
    z = compress(b'aaaa', Scheme.ZLW)
    assert z.references() == [98, 257, 98]
    assert decompress(z) == b'aaaa'


@pytest.mark.parametrize('seed', range(5))
def test_zlw_random_roundtrip_through_trie(seed):
    rng = random.Random(seed)
    text = bytes(rng.choice(b'ab') for _ in range(rng.randint(1, 500)))
    z = compress(text, Scheme.ZLW)
    trie = build_trie(z)
    assert trie.text() == text
    assert [trie.phrase(trie.piece_node(i)) for i in range(1, z.n + 1)] == lzw_reference_phrases(z.references())


def test_zlw_first_code_must_be_a_seed():
    z = CompressedString(Scheme.ZLW, [CompressionElement(97)])
    assert build_trie(z).text() == b'`'
    with pytest.raises(FormatError):
        CompressedString(Scheme.ZLW, [CompressionElement(257)])
