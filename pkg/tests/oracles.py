"""Independent brute-force oracles for the rewriting layer.

Everything here works on plain tuples of (generator, exponent) pairs and
a commutation predicate, with no reliance on the package's rewriting
code: verdicts come from breadth-first search over elementary move
sequences, exactly as the definitions state them.
"""

from collections import deque


def elementary_moves(w, commutes):
    """All expressions reachable from ``w`` by one type I or II move."""
    out = []
    for i in range(len(w) - 1):
        (s, p), (t, q) = w[i], w[i + 1]
        if s == t:
            merged = ((s, p + q),) if p + q else ()
            out.append(w[:i] + merged + w[i + 2:])
        elif commutes(s, t):
            out.append(w[:i] + (w[i + 1], w[i]) + w[i + 2:])
    return out


def ii_closure(w, commutes):
    """The set of expressions reachable by type II moves alone."""
    seen = {w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        for i in range(len(u) - 1):
            s, t = u[i][0], u[i + 1][0]
            if s != t and commutes(s, t):
                v = u[:i] + (u[i + 1], u[i]) + u[i + 2:]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return seen


def oracle_ii_equivalent(w1, w2, commutes):
    return w2 in ii_closure(w1, commutes)


def oracle_is_m_reduced(w, commutes):
    """No move sequence shortens ``w``: no type-II rearrangement may
    bring two syllables of the same generator next to each other."""
    return all(
        all(u[i][0] != u[i + 1][0] for i in range(len(u) - 1))
        for u in ii_closure(w, commutes)
    )


def oracle_ends_in(w, commutes, s):
    """Some type-II rearrangement starts with generator ``s``."""
    return any(u and u[0][0] == s for u in ii_closure(w, commutes))


def oracle_is_trivial(w, commutes):
    """Plain breadth-first search for the empty expression."""
    seen = {w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        if not u:
            return True
        for v in elementary_moves(u, commutes):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return False


class TrivialityOracle:
    """Search for the empty expression, reorganized for bulk use.

    Two exact shortcuts speed up the plain search without changing any
    verdict: every elementary move preserves each generator's total
    exponent, so a word with a nonzero total is never trivial; and type
    II moves preserve reachability, so the search can run over whole
    II-classes (keyed by their minimal member) instead of single words,
    recursing through type I merges available anywhere in the class.
    A test in test_acceptance cross-checks this against oracle_is_trivial.
    """

    def __init__(self, commutes):
        self.commutes = commutes
        self._memo = {}

    def is_trivial(self, w):
        sums = {}
        for s, p in w:
            sums[s] = sums.get(s, 0) + p
        if any(sums.values()):
            return False
        return self._search(w)

    def _search(self, w):
        # Each recursion step passes through a type I merge, which
        # strictly shortens the word, so this terminates.
        if not w:
            return True
        cls = ii_closure(w, self.commutes)
        canon = min(cls)
        known = self._memo.get(canon)
        if known is not None:
            return known
        result = False
        for u in cls:
            for i in range(len(u) - 1):
                (s, p), (t, q) = u[i], u[i + 1]
                if s != t:
                    continue
                merged = ((s, p + q),) if p + q else ()
                if self._search(u[:i] + merged + u[i + 2:]):
                    result = True
                    break
            if result:
                break
        self._memo[canon] = result
        return result
