"""Exhaustive families of small graphs and expressions for the tests."""

import itertools

from artintwist import CoxeterGraph

_NAMES = "abcdefgh"


def _connected(n, edges):
    if n <= 1:
        return True
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == n


def edge_sets_up_to_iso(n, connected_only=False):
    """All simple graphs on n vertices up to isomorphism, as edge sets."""
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    seen = set()
    out = []
    for bits in range(2 ** len(pairs)):
        edges = [p for i, p in enumerate(pairs) if bits >> i & 1]
        canon = min(
            tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
            for perm in perms
        )
        if canon in seen:
            continue
        seen.add(canon)
        if connected_only and not _connected(n, edges):
            continue
        out.append(tuple(canon))
    return out


def small_type_graph(n, edges):
    """A small-type graph on the first n letter vertices with label 3 on
    the given index pairs."""
    verts = tuple(_NAMES[:n])
    return CoxeterGraph(verts, {(verts[a], verts[b]): 3 for a, b in edges})


def small_type_catalogue(max_n, connected_only=False):
    """One representative per isomorphism class, for 1 <= n <= max_n."""
    out = []
    for n in range(1, max_n + 1):
        for edges in edge_sets_up_to_iso(n, connected_only):
            out.append(small_type_graph(n, edges))
    return out


def all_expressions(generators, max_len, exponents):
    """Every expression of length <= max_len as a tuple of syllables."""
    alphabet = [(s, p) for s in generators for p in exponents]
    for length in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=length)
