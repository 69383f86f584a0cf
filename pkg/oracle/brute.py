"""Reference matchers on uncompressed text.

Nothing here imports the search engines: the regex oracle has its own
parser and uses a position automaton instead of a Thompson automaton, and the
approximate oracle fills the whole distance matrix.
"""


def oracle_approx(q, p, k):
    """Ending positions j (1-based) such that some substring q[i..j] is within distance ``k`` of ``p``."""
    m, u = len(p), len(q)
    # dist[i][j]: best distance between p[:i] and a substring of q ending at j.
    dist = [[0] * (u + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        dist[i][0] = i
        for j in range(1, u + 1):
            cost = 0 if p[i - 1] == q[j - 1] else 1
            dist[i][j] = min(dist[i - 1][j] + 1, dist[i][j - 1] + 1, dist[i - 1][j - 1] + cost)
    return [j for j in range(1, u + 1) if dist[m][j] <= k]


def edit_distance(a, b):
    previous = list(range(len(b) + 1))
    for i in range(1, len(a) + 1):
        current = [i] + [0] * len(b)
        for j in range(1, len(b) + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            current[j] = min(previous[j] + 1, current[j - 1] + 1, previous[j - 1] + cost)
        previous = current
    return previous[-1]


def brute_force_approx(q, p, k):
    """Same answer as oracle_approx by enumerating every substring; quadratic in len(q)."""
    matches = []
    for j in range(1, len(q) + 1):
        # The empty substring ending at j counts too.
        if any(edit_distance(p, q[i:j]) <= k for i in range(j + 1)):
            matches.append(j)
    return matches


class RegexParseError(ValueError):
    pass


def parse(pattern):
    """Parse into nested tuples: ('lit', byte), ('cat', a, b), ('alt', a, b), ('star', a)."""
    tokens = []
    position = 0
    while position < len(pattern):
        ch = pattern[position]
        if ch == '\\':
            if position + 1 == len(pattern):
                raise RegexParseError('trailing escape')
            tokens.extend(('lit', b) for b in pattern[position + 1].encode('utf-8'))
            position += 2
            continue
        if ch in '|*()':
            tokens.append(ch)
        else:
            tokens.extend(('lit', b) for b in ch.encode('utf-8'))
        position += 1

    def alternation(i):
        tree, i = sequence(i)
        while i < len(tokens) and tokens[i] == '|':
            right, i = sequence(i + 1)
            tree = ('alt', tree, right)
        return tree, i

    def sequence(i):
        tree = None
        while i < len(tokens) and tokens[i] not in ('|', ')'):
            item, i = repeat(i)
            tree = item if tree is None else ('cat', tree, item)
        if tree is None:
            raise RegexParseError('empty expression')
        return tree, i

    def repeat(i):
        if tokens[i] == '(':
            tree, i = alternation(i + 1)
            if i >= len(tokens) or tokens[i] != ')':
                raise RegexParseError('unbalanced group')
            i += 1
        elif tokens[i] == '*':
            raise RegexParseError('nothing to repeat')
        else:
            tree, i = tokens[i], i + 1
        while i < len(tokens) and tokens[i] == '*':
            tree, i = ('star', tree), i + 1
        return tree, i

    tree, end = alternation(0)
    if end != len(tokens):
        raise RegexParseError('unbalanced group')
    return tree


def _ends(tree, s, i):
    """End offsets e such that s[i:e] belongs to the language of ``tree``."""
    kind = tree[0]
    if kind == 'lit':
        return {i + 1} if i < len(s) and s[i] == tree[1] else set()
    if kind == 'cat':
        return {e for j in _ends(tree[1], s, i) for e in _ends(tree[2], s, j)}
    if kind == 'alt':
        return _ends(tree[1], s, i) | _ends(tree[2], s, i)
    reached = {i}
    frontier = [i]
    while frontier:
        for e in _ends(tree[1], s, frontier.pop()):
            if e not in reached:
                reached.add(e)
                frontier.append(e)
    return reached


def language_accepts(pattern, s):
    tree = parse(pattern) if isinstance(pattern, str) else pattern
    return len(s) in _ends(tree, bytes(s), 0)


def brute_force_regex(q, pattern):
    """Ending positions of accepted substrings, by trying every start offset."""
    tree = parse(pattern)
    q = bytes(q)
    if 0 in _ends(tree, b'', 0):
        return list(range(1, len(q) + 1))
    ends = set()
    for i in range(len(q)):
        ends.update(e for e in _ends(tree, q, i) if e > i)
    return sorted(ends)


def _positions(tree, labels):
    """Number the literals of ``tree`` and return (nullable, first, last, follow)."""
    kind = tree[0]
    if kind == 'lit':
        position = len(labels)
        labels.append(tree[1])
        return False, {position}, {position}, {}
    if kind == 'star':
        _, first, last, follow = _positions(tree[1], labels)
        for p in last:
            follow.setdefault(p, set()).update(first)
        return True, first, last, follow
    n1, f1, l1, fo1 = _positions(tree[1], labels)
    n2, f2, l2, fo2 = _positions(tree[2], labels)
    follow = {**fo1}
    for p, targets in fo2.items():
        follow.setdefault(p, set()).update(targets)
    if kind == 'alt':
        return n1 or n2, f1 | f2, l1 | l2, follow
    for p in l1:
        follow.setdefault(p, set()).update(f2)
    first = f1 | f2 if n1 else f1
    last = l1 | l2 if n2 else l2
    return n1 and n2, first, last, follow


def oracle_regex(q, pattern):
    """Scan ``q`` once with the position automaton, restarting at every byte."""
    tree = parse(pattern)
    labels = []
    nullable, first, last, follow = _positions(tree, labels)
    q = bytes(q)
    if nullable:
        return list(range(1, len(q) + 1))
    matches = []
    active = set()
    for j, byte in enumerate(q, start=1):
        candidates = set(first)
        for p in active:
            candidates |= follow.get(p, set())
        active = {p for p in candidates if labels[p] == byte}
        if active & last:
            matches.append(j)
    return matches
