import math
import random

import pytest

from compression.exceptions import ParameterError, PreconditionError
from compression.selection import ApproxMode, RegexMode, build_selected_set, depth_ancestor, nearest_member
from compression.trie import build_trie
from compression.zl78 import Scheme, compress, path_labels
from search.regex import build_tnfa


def assert_selection_bounds(source, selected, n):
    assert 0 in selected
    assert len(selected) <= 1 + n / selected.tau
    for node in range(source.node_count):
        member, path = nearest_member(source, selected, node)
        assert member in selected
        assert path[0] == node and path[-1] == member
        assert len(path) - 1 <= 2 * selected.tau


def test_bananas_tau_two_selects_only_the_root(bananas_z):
    selected = build_selected_set(bananas_z, 2)
    assert set(selected.members) == {0}


def test_nearest_member_walks_references(bananas_z):
    selected = build_selected_set(bananas_z, 2)
    assert nearest_member(bananas_z, selected, 6) == (0, [6, 3, 1, 0])
    assert nearest_member(bananas_z, selected, 0) == (0, [0])


def test_member_is_its_own_nearest_member():
    z = compress(b'a' * 200)
    selected = build_selected_set(z, 2)
    for member in selected.members:
        assert nearest_member(z, selected, member) == (member, [member])


@pytest.mark.parametrize('text', [b'ananasbananer', b'a' * 300, b'abracadabra' * 20, b''])
def test_tau_one_bounds(text):
    z = compress(text)
    assert_selection_bounds(z, build_selected_set(z, 1), z.n)


def test_unary_text_bounds():
    z = compress(b'a' * 10_000)
    assert z.n == 141
    for tau in (1, 3, 10, math.isqrt(z.n), 50):
        selected = build_selected_set(z, tau)
        assert_selection_bounds(z, selected, z.n)
        assert len(selected) <= 1 + z.n // tau


@pytest.mark.parametrize('seed', range(5))
@pytest.mark.parametrize('scheme', list(Scheme))
def test_random_bounds_against_trie(seed, scheme):
    rng = random.Random(seed)
    text = bytes(rng.choice(b'ab') for _ in range(rng.randint(0, 1500)))
    trie = build_trie(compress(text, scheme))
    for tau in (1, 2, 8, 32):
        assert_selection_bounds(trie, build_selected_set(trie, tau), trie.node_count - 1)


def test_larger_tau_never_selects_more():
    z = compress(b'a' * 3000)
    sizes = [len(build_selected_set(z, tau)) for tau in (1, 2, 4, 8, 16, 64)]
    assert sizes == sorted(sizes, reverse=True)


def test_tau_is_clamped(bananas_z):
    assert build_selected_set(bananas_z, 1000).tau == 8
    assert build_selected_set(compress(b''), 5).tau == 1


@pytest.mark.parametrize('tau', [0, -3])
def test_tau_must_be_positive(bananas_z, tau):
    with pytest.raises(ParameterError):
        build_selected_set(bananas_z, tau)


@pytest.mark.parametrize('m, k', [(4, 4), (3, 7), (0, 0), (4, -1)])
def test_approx_mode_parameters(m, k):
    with pytest.raises(ParameterError):
        ApproxMode(m, k)


@pytest.mark.parametrize('tau', [1, 2, 5])
def test_approx_payload_shortcuts(tau):
    z = compress(b'a' * 2000 + b'banana' * 50)
    mode = ApproxMode(4, 2)
    selected = build_selected_set(z, tau, mode)
    trie = build_trie(z)
    for member, payload in selected.members.items():
        assert payload.phrase_length == trie.depth(member)
        if payload.phrase_length > mode.window:
            assert trie.depth(payload.shortcut) == mode.window
            assert path_labels(z, payload.shortcut) == trie.phrase(member)[:mode.window]
        else:
            assert payload.shortcut is None


def test_depth_ancestor_from_any_node():
    z = compress(b'a' * 2000)
    selected = build_selected_set(z, 3, ApproxMode(3, 1))
    for node in range(1, z.node_count):
        member, path = nearest_member(z, selected, node)
        length = len(path) - 1 + selected.payload(member).phrase_length
        if length > 4:
            ancestor = depth_ancestor(selected, member, path)
            assert path_labels(z, ancestor) == path_labels(z, node)[:4]
        else:
            with pytest.raises(PreconditionError):
                depth_ancestor(selected, member, path)


@pytest.mark.parametrize('pattern', ['an', '(a|n)*s', 'a(na)*'])
def test_regex_payload_matches_naive_simulation(bananas, pattern):
    tnfa = build_tnfa(pattern)
    trie = build_trie(compress(bananas * 20))
    selected = build_selected_set(trie, 1, RegexMode(tnfa))
    assert len(selected) > 1
    for member, payload in selected.members.items():
        phrase = trie.phrase(member)
        assert payload.phrase_length == len(phrase)
        for state in range(tnfa.state_count):
            expected = tnfa.closure({state})
            for byte in phrase:
                expected = tnfa.step(tnfa.closure(expected | {tnfa.start}), byte)
            assert payload.transition_sets[state] == expected
