"""Coxeter graphs and the graph-level constructions used by the rest of
the package.

A Coxeter graph is a finite totally ordered vertex set together with a
symmetric label m(s,t) in {2,3,4,...} or infinity for every pair of
distinct vertices; m(s,s) = 1 implicitly.  Two vertices are adjacent
exactly when their label differs from 2, so label-2 pairs are the
commuting ("invisible") ones.  Only the labels that differ from 2 are
stored; everything else defaults.

Besides the data model this module provides: vertex stars and relative
positions, the small-type test (all labels in {2,3}), connected
components, the hat transform (replace every infinite label by 3), the
bipartite double-path gadget used for folding, and the folding
construction itself, which blows a graph with finite labels up into a
small-type graph with one block of N vertices per original vertex.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import ContractViolation, ParseError

INFINITY = math.inf

# Vertex tokens must survive the graph/expression/path text formats.
_RESERVED_CHARS = set("#@^(),:")


def _valid_vertex(name) -> bool:
    if not isinstance(name, str) or not name:
        return False
    return not any(c.isspace() or c in _RESERVED_CHARS for c in name)


def _valid_label(m) -> bool:
    if m == INFINITY:
        return True
    return isinstance(m, int) and not isinstance(m, bool) and m >= 2


class CoxeterGraph:
    """Ordered vertex set with symmetric pair labels.

    ``labels`` maps pairs ``(s, t)`` (either orientation, or frozensets)
    to a label >= 2 or ``INFINITY``.  Pairs not mentioned get label 2.
    Instances are immutable by convention; all operations return new
    graphs.
    """

    __slots__ = ("vertices", "_index", "_labels")

    def __init__(self, vertices, labels=None):
        verts = tuple(vertices)
        if not verts:
            raise ContractViolation("a Coxeter graph needs at least one vertex")
        for v in verts:
            if not _valid_vertex(v):
                raise ContractViolation(f"invalid vertex name: {v!r}")
        index = {v: i for i, v in enumerate(verts)}
        if len(index) != len(verts):
            raise ContractViolation("vertex names must be pairwise distinct")

        stored: dict[tuple[str, str], int | float] = {}
        for pair, m in dict(labels or {}).items():
            s, t = tuple(pair)
            if s not in index or t not in index:
                raise ContractViolation(f"label given for unknown vertex pair {s!r}, {t!r}")
            if s == t:
                raise ContractViolation(f"diagonal label given for vertex {s!r}")
            if not _valid_label(m):
                raise ContractViolation(f"invalid label {m!r} for pair {s!r}, {t!r}")
            if (s, t) in stored and stored[(s, t)] != m:
                raise ContractViolation(f"conflicting labels for pair {s!r}, {t!r}")
            if m != 2:
                stored[(s, t)] = m
                stored[(t, s)] = m

        self.vertices = verts
        self._index = index
        self._labels = stored

    def __contains__(self, vertex) -> bool:
        return vertex in self._index

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoxeterGraph):
            return NotImplemented
        return self.vertices == other.vertices and self._labels == other._labels

    def __repr__(self) -> str:
        pairs = ", ".join(f"{s}-{t}:{m}" for s, t, m in self.labeled_pairs())
        return f"CoxeterGraph({' '.join(self.vertices)}{'; ' + pairs if pairs else ''})"

    def index(self, vertex) -> int:
        """Position of ``vertex`` in the graph order."""
        try:
            return self._index[vertex]
        except KeyError:
            raise ContractViolation(f"unknown vertex: {vertex!r}") from None

    def label(self, s, t) -> int | float:
        """The label m(s,t); 1 on the diagonal, 2 for unstored pairs."""
        if s not in self._index:
            raise ContractViolation(f"unknown vertex: {s!r}")
        if t not in self._index:
            raise ContractViolation(f"unknown vertex: {t!r}")
        if s == t:
            return 1
        return self._labels.get((s, t), 2)

    def commutes(self, s, t) -> bool:
        """True when the generators attached to distinct s, t commute."""
        return s != t and (s, t) not in self._labels

    def labeled_pairs(self):
        """Yield (s, t, label) for every pair with label != 2, s before t."""
        idx = self._index
        for (s, t), m in self._labels.items():
            if idx[s] < idx[t]:
                yield s, t, m

    def neighbors(self, s):
        """Vertices joined to ``s`` by an edge (label != 2), in order."""
        self.index(s)
        return tuple(t for t in self.vertices if (s, t) in self._labels)

    def subgraph(self, vertices) -> "CoxeterGraph":
        """Full subgraph on ``vertices``, keeping the ambient order."""
        keep = set(vertices)
        for v in keep:
            self.index(v)
        verts = tuple(v for v in self.vertices if v in keep)
        labels = {
            (s, t): m
            for (s, t), m in self._labels.items()
            if s in keep and t in keep
        }
        return CoxeterGraph(verts, labels)


def star(g: CoxeterGraph, s) -> tuple:
    """The vertex ``s`` together with its label-3 neighbors, in graph order."""
    g.index(s)
    return tuple(t for t in g.vertices if t == s or g._labels.get((s, t)) == 3)


def relative_position(g: CoxeterGraph, t, s) -> int:
    """Signed offset of ``t`` within star(g, s); 0 for ``t == s``."""
    members = star(g, s)
    if t not in members:
        raise ContractViolation(f"{t!r} is not in the star of {s!r}")
    return members.index(t) - members.index(s)


def is_small_type(g: CoxeterGraph) -> bool:
    """True when every off-diagonal label is 2 or 3."""
    return all(m == 3 for m in g._labels.values())


def components(g: CoxeterGraph) -> list[CoxeterGraph]:
    """Connected components under label-!=-2 adjacency.

    Components are ordered by their earliest vertex and inherit the
    ambient vertex order and labels.
    """
    seen: set = set()
    result = []
    for root in g.vertices:
        if root in seen:
            continue
        comp = {root}
        frontier = [root]
        while frontier:
            v = frontier.pop()
            for u in g.neighbors(v):
                if u not in comp:
                    comp.add(u)
                    frontier.append(u)
        seen |= comp
        result.append(g.subgraph(comp))
    return result


def is_connected(g: CoxeterGraph) -> bool:
    return len(components(g)) == 1


def hat(g: CoxeterGraph) -> CoxeterGraph:
    """Replace every infinite label by 3; finite labels are untouched."""
    labels = {
        (s, t): 3 if m == INFINITY else m for (s, t), m in g._labels.items()
    }
    return CoxeterGraph(g.vertices, labels)


@dataclass(frozen=True)
class FoldingGadget:
    """The bipartite gadget on 2(m-1) vertices used when folding an
    m-labeled pair: two disjoint simple paths with all path edges
    labeled 3, every edge crossing between the two sides."""

    graph: CoxeterGraph
    left: tuple
    right: tuple


def _gadget_pattern(m: int) -> list[tuple[int, int]]:
    """Label-3 pairs of the gadget as (left index, right index), 0-based.

    The first path alternates starting on the left side, the second
    starting on the right side with whatever indices remain; each path
    has m-1 vertices.
    """
    li = ri = 0
    paths = []
    for start_left in (True, False):
        seq = []
        for pos in range(m - 1):
            on_left = start_left == (pos % 2 == 0)
            if on_left:
                seq.append((True, li))
                li += 1
            else:
                seq.append((False, ri))
                ri += 1
        paths.append(seq)
    edges = []
    for seq in paths:
        for (a_left, a), (_, b) in zip(seq, seq[1:]):
            edges.append((a, b) if a_left else (b, a))
    return edges


def folding_gadget(m: int) -> FoldingGadget:
    """Build the gadget graph for label ``m`` with its bipartition."""
    if not isinstance(m, int) or m < 3:
        raise ContractViolation(f"gadget label must be an integer >= 3, got {m!r}")
    left = tuple(f"i{k}" for k in range(1, m))
    right = tuple(f"j{k}" for k in range(1, m))
    labels = {
        (left[a], right[b]): 3 for a, b in _gadget_pattern(m)
    }
    return FoldingGadget(CoxeterGraph(left + right, labels), left, right)


@dataclass(frozen=True)
class FoldedGraph:
    """A small-type graph produced by folding, with one block of
    ``n_value`` fresh vertices per original vertex."""

    graph: CoxeterGraph
    blocks: dict
    n_value: int

    def block(self, s) -> tuple:
        try:
            return self.blocks[s]
        except KeyError:
            raise ContractViolation(f"unknown original vertex: {s!r}") from None


def fold(g: CoxeterGraph) -> FoldedGraph:
    """Fold a connected graph with finite labels into a small-type graph.

    N is the least common multiple of {m(s,t) - 1}.  Each vertex s
    becomes a block of N vertices ``s.1 .. s.N``; a pair with label m >= 3
    is wired block-by-block: the two blocks are cut into N/(m-1)
    consecutive chunks of size m-1 and chunk b of s's block is joined to
    chunk b of t's block by the gadget pattern, s's side playing left.
    Label-2 pairs get no cross edges.  The wiring is one deterministic
    choice among several valid ones.
    """
    if len(g.vertices) < 2:
        raise ContractViolation("folding needs at least two vertices")
    if any(m == INFINITY for m in g._labels.values()):
        raise ContractViolation("folding requires finite labels; apply hat first")
    if not is_connected(g):
        raise ContractViolation("folding requires a connected graph")

    n = math.lcm(*(int(g.label(s, t)) - 1 for s, t, _ in _all_pairs(g)))
    blocks = {s: tuple(f"{s}.{k}" for k in range(1, n + 1)) for s in g.vertices}
    vertices = tuple(v for s in g.vertices for v in blocks[s])
    labels = {}
    for s, t, m in g.labeled_pairs():
        m = int(m)
        chunk = m - 1
        pattern = _gadget_pattern(m)
        for b in range(n // chunk):
            left = blocks[s][b * chunk:(b + 1) * chunk]
            right = blocks[t][b * chunk:(b + 1) * chunk]
            for a, c in pattern:
                labels[(left[a], right[c])] = 3
    return FoldedGraph(CoxeterGraph(vertices, labels), blocks, n)


def _all_pairs(g: CoxeterGraph):
    verts = g.vertices
    for i, s in enumerate(verts):
        for t in verts[i + 1:]:
            yield s, t, g.label(s, t)


def a_n(n: int) -> CoxeterGraph:
    """The path graph on vertices "1".."n" with consecutive labels 3."""
    if not isinstance(n, int) or n < 1:
        raise ContractViolation(f"need n >= 1, got {n!r}")
    verts = tuple(str(k) for k in range(1, n + 1))
    labels = {(verts[i], verts[i + 1]): 3 for i in range(n - 1)}
    return CoxeterGraph(verts, labels)


# --- text format -----------------------------------------------------------
#
#   # comments and blank lines are ignored
#   vertices: a b c          (declares the vertex order)
#   a b 3                    (label lines; omitted pairs default to 2)
#   b c inf

_LABEL_TOKEN = re.compile(r"^(?:inf|[0-9]+)$")


def parse_graph(text: str) -> CoxeterGraph:
    """Parse the graph text format; raises ParseError with line/column."""
    vertices = None
    labels: dict[tuple[str, str], int | float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if vertices is None:
            if not line.startswith("vertices:"):
                raise ParseError("expected a 'vertices:' line first", lineno, 1)
            names = line[len("vertices:"):].split()
            if not names:
                raise ParseError("no vertices declared", lineno, len(line) + 1)
            for name in names:
                if not _valid_vertex(name):
                    col = raw.index(name) + 1
                    raise ParseError(f"invalid vertex name {name!r}", lineno, col)
            if len(set(names)) != len(names):
                raise ParseError("duplicate vertex name", lineno, 1)
            vertices = names
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError("expected 's t m' with three fields", lineno, 1)
        s, t, mtok = parts
        for name in (s, t):
            if name not in vertices:
                col = raw.index(name) + 1
                raise ParseError(f"unknown vertex {name!r}", lineno, col)
        if s == t:
            raise ParseError(f"label line repeats vertex {s!r}", lineno, 1)
        col = raw.rindex(mtok) + 1
        if not _LABEL_TOKEN.match(mtok):
            raise ParseError(f"bad label {mtok!r} (integer >= 2 or 'inf')", lineno, col)
        m = INFINITY if mtok == "inf" else int(mtok)
        if m != INFINITY and m < 2:
            raise ParseError(f"label must be >= 2, got {mtok}", lineno, col)
        if (s, t) in labels or (t, s) in labels:
            raise ParseError(f"pair {s} {t} labeled twice", lineno, 1)
        labels[(s, t)] = m
    if vertices is None:
        raise ParseError("empty graph description", 1, 1)
    return CoxeterGraph(vertices, labels)


def format_graph(g: CoxeterGraph) -> str:
    """Inverse of parse_graph up to omitted default labels."""
    lines = ["vertices: " + " ".join(g.vertices)]
    pairs = sorted(g.labeled_pairs(), key=lambda e: (g.index(e[0]), g.index(e[1])))
    for s, t, m in pairs:
        lines.append(f"{s} {t} {'inf' if m == INFINITY else m}")
    return "\n".join(lines) + "\n"
