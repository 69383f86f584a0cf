"""Seeded random test cases for comparing the engines against the oracles."""
import random
from dataclasses import dataclass
from typing import Optional

PROFILES = ('binary', 'dna', 'english-like', 'pathological-unary')
MODES = ('approx', 'regex')
APPROX_TAUS = (1, 2, 8, 32, 1 << 30)
REGEX_TAUS = (1, 4, 1 << 30)

MAX_PATTERN_LENGTH = 20
MAX_ERRORS = 5
MAX_REGEX_SIZE = 12
MAX_REGEX_NESTING = 3

WORDS = (
    'the', 'of', 'and', 'to', 'in', 'is', 'that', 'for', 'it', 'as', 'was', 'with', 'be', 'by',
    'on', 'not', 'this', 'are', 'or', 'which', 'from', 'an', 'banana', 'ananas', 'base', 'phrase',
    'string', 'pattern', 'search', 'compressed', 'text', 'match',
)

ALPHABETS = {
    'binary': b'01',
    'dna': b'acgt',
    'english-like': bytes(sorted(set(' '.join(WORDS).encode()))),
    'pathological-unary': b'ab',
}


@dataclass(frozen=True)
class OracleCase:
    seed: int
    profile: str
    mode: str
    text: bytes
    pattern: object
    tau: int
    k: Optional[int] = None

    def __str__(self):
        query = f'pattern={self.pattern!r}'
        if self.k is not None:
            query += f' k={self.k}'
        return f'{self.mode}/{self.profile} seed={self.seed} u={len(self.text)} {query} tau={self.tau}'


def random_text(rng, profile, length):
    if profile == 'pathological-unary':
        return b'a' * length
    if profile == 'english-like':
        words = []
        size = 0
        while size < length:
            word = rng.choice(WORDS)
            words.append(word)
            size += len(word) + 1
        return ' '.join(words).encode()[:length]
    alphabet = ALPHABETS[profile]
    return bytes(rng.choice(alphabet) for _ in range(length))


def _random_pattern(rng, profile, text):
    m = rng.randint(1, MAX_PATTERN_LENGTH)
    if text and rng.random() < 0.5:
        start = rng.randrange(len(text))
        pattern = bytearray(text[start:start + m])
        # Perturb a copied substring so that approximate matches are common.
        for _ in range(rng.randint(0, 2)):
            if pattern:
                pattern[rng.randrange(len(pattern))] = rng.choice(ALPHABETS[profile])
        if pattern:
            return bytes(pattern)
    return bytes(rng.choice(ALPHABETS[profile]) for _ in range(m))


def random_regex(rng, alphabet, max_size=MAX_REGEX_SIZE, max_nesting=MAX_REGEX_NESTING):
    """Random pattern over literals, concatenation, ``|`` and ``*``; returns source text."""
    symbols = [chr(b) for b in alphabet if chr(b) not in '|*()\\']

    def literal():
        return rng.choice(symbols), 'lit'

    def operand(budget, nesting):
        text, kind = build(budget, nesting + 1)
        if kind == 'lit':
            return text
        return f'({text})'

    def build(budget, nesting):
        if budget <= 1 or nesting >= max_nesting:
            return literal()
        choices = ['lit', 'star']
        if budget >= 3:
            choices += ['cat', 'alt']
        kind = rng.choice(choices)
        if kind == 'lit':
            return literal()
        if kind == 'star':
            return operand(budget - 1, nesting) + '*', 'star'
        left = rng.randint(1, budget - 2)
        right = rng.randint(1, budget - 1 - left)
        separator = '|' if kind == 'alt' else ''
        return operand(left, nesting) + separator + operand(right, nesting), kind

    return build(rng.randint(1, max_size), 0)[0]


def random_case(seed, profile, mode='approx', max_length=None):
    """Build the case determined by (seed, profile, mode)."""
    if profile not in PROFILES:
        raise ValueError(f'unknown profile {profile!r}; choose from {", ".join(PROFILES)}')
    if mode not in MODES:
        raise ValueError(f'unknown mode {mode!r}; choose from {", ".join(MODES)}')
    if max_length is None:
        max_length = 2000 if mode == 'approx' else 1000
    rng = random.Random(f'{seed}:{profile}:{mode}')
    text = random_text(rng, profile, rng.randint(0, max_length))
    if mode == 'approx':
        pattern = _random_pattern(rng, profile, text)
        k = rng.randint(0, min(MAX_ERRORS, len(pattern) - 1))
        return OracleCase(seed, profile, mode, text, pattern, rng.choice(APPROX_TAUS), k)
    pattern = random_regex(rng, ALPHABETS[profile])
    return OracleCase(seed, profile, mode, text, pattern, rng.choice(REGEX_TAUS))
