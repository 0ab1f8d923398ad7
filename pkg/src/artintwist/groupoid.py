"""Free-groupoid path algebra over the oriented graph of a small-type
Coxeter graph.

The oriented graph has one loop edge at every vertex and one arc edge
from s to t for every label-3 pair with s before t in the graph order.
Morphisms of the free groupoid are exactly the reduced paths: sequences
of signed edges that chain source-to-target with no letter immediately
followed by its inverse.  Paths are stored run-length encoded, as runs
(edge, nonzero exponent); loop runs may carry any exponent while arc
runs are forced to +-1 by composability.  Adjacent runs never share an
edge, which makes the encoding canonical: equal paths are equal values.

The reduced form of a path groups its loop runs: a path factors
uniquely as an arc-only path, then alternating loop powers and
non-constant arc-only paths.  Squares (loop runs with exponent of
absolute value >= 2) and the type projection that strips loop powers
down to their arc skeleton are both read off that factorization.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .coxeter import CoxeterGraph, is_connected, is_small_type
from .errors import ContractViolation, ParseError


@dataclass(frozen=True, slots=True)
class Edge:
    """A generator edge: kind "e" is the loop at a vertex (src == trg),
    kind "f" an arc between distinct vertices."""

    kind: str
    src: str
    trg: str

    def __post_init__(self):
        if self.kind == "e":
            if self.src != self.trg:
                raise ContractViolation("loop edges need equal endpoints")
        elif self.kind == "f":
            if self.src == self.trg:
                raise ContractViolation("arc edges need distinct endpoints")
        else:
            raise ContractViolation(f"unknown edge kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "e":
            return f"e({self.src})"
        return f"f({self.src},{self.trg})"


def _merge_runs(runs) -> tuple:
    """Free reduction on run-length encoded letters."""
    stack: list = []
    for edge, k in runs:
        if stack and stack[-1][0] == edge:
            total = stack[-1][1] + k
            if total:
                stack[-1] = (edge, total)
            else:
                stack.pop()
        else:
            stack.append((edge, k))
    return tuple(stack)


@dataclass(frozen=True, slots=True)
class GroupoidPath:
    """A reduced path, i.e. a free-groupoid morphism.

    Constant paths have no runs but still carry their vertex.  The
    constructor validates run-length encoding, composability, and
    reducedness; use compose/reduce_path to build paths from raw data.
    """

    source: str
    runs: tuple = ()
    target: str = field(init=False, compare=False)

    def __post_init__(self):
        pos = self.source
        previous = None
        for edge, k in self.runs:
            if not isinstance(k, int) or isinstance(k, bool) or k == 0:
                raise ContractViolation(f"run exponent must be a nonzero integer, got {k!r}")
            if edge == previous:
                raise ContractViolation(f"adjacent runs share the edge {edge}")
            previous = edge
            if edge.kind == "e":
                if pos != edge.src:
                    raise ContractViolation(f"run {edge}^{k} does not chain at {pos!r}")
            else:
                if abs(k) != 1:
                    raise ContractViolation(f"arc run {edge}^{k} is not composable")
                start, end = (edge.src, edge.trg) if k > 0 else (edge.trg, edge.src)
                if pos != start:
                    raise ContractViolation(f"run {edge}^{k} does not chain at {pos!r}")
                pos = end
        object.__setattr__(self, "target", pos)

    @property
    def is_constant(self) -> bool:
        return not self.runs

    def letter_length(self) -> int:
        """Number of signed letters in the unpacked path."""
        return sum(abs(k) for _, k in self.runs)

    def inverse(self) -> "GroupoidPath":
        return GroupoidPath(
            self.target, tuple((e, -k) for e, k in reversed(self.runs))
        )

    def __mul__(self, other: "GroupoidPath") -> "GroupoidPath":
        return compose(self, other)

    def __pow__(self, n: int) -> "GroupoidPath":
        if self.source != self.target:
            raise ContractViolation("only paths with equal endpoints have powers")
        if n == 0:
            return GroupoidPath(self.source)
        if len(self.runs) == 1:
            edge, k = self.runs[0]
            return GroupoidPath(self.source, ((edge, k * n),))
        base = self if n > 0 else self.inverse()
        out = base
        for _ in range(abs(n) - 1):
            out = compose(out, base)
        return out

    def __str__(self) -> str:
        return format_path(self)

    def __repr__(self) -> str:
        return f"GroupoidPath({format_path(self)!r})"


def constant_path(v) -> GroupoidPath:
    return GroupoidPath(v)


def loop_path(s, k: int = 1) -> GroupoidPath:
    """The loop generator at s, raised to the power k."""
    if k == 0:
        return GroupoidPath(s)
    return GroupoidPath(s, ((Edge("e", s, s), k),))


def arc_path(s, t, k: int = 1) -> GroupoidPath:
    """The arc generator from s to t (or its inverse for k = -1)."""
    if k not in (1, -1):
        raise ContractViolation(f"arc paths only exist with exponent +-1, got {k!r}")
    source = s if k == 1 else t
    return GroupoidPath(source, ((Edge("f", s, t), k),))


def compose(x: GroupoidPath, y: GroupoidPath) -> GroupoidPath:
    """Concatenate then freely reduce; defined when target(x) = source(y)."""
    if x.target != y.source:
        raise ContractViolation(
            f"paths do not compose: target {x.target!r} vs source {y.source!r}"
        )
    return GroupoidPath(x.source, _merge_runs(x.runs + y.runs))


def invert(x: GroupoidPath) -> GroupoidPath:
    return x.inverse()


def reduce_path(letters, source=None) -> GroupoidPath:
    """Freely reduce a composable run sequence into a path.

    ``letters`` is an iterable of (Edge, exponent) runs; ``source`` is
    only needed to disambiguate the empty sequence.
    """
    letters = tuple(letters)
    if not letters:
        if source is None:
            raise ContractViolation("empty letter sequence needs an explicit source")
        return GroupoidPath(source)
    first_edge, first_k = letters[0]
    start = first_edge.src if (first_k > 0 or first_edge.kind == "e") else first_edge.trg
    if source is not None and source != start:
        raise ContractViolation(f"letters start at {start!r}, not {source!r}")
    pos = start
    for edge, k in letters:
        if not isinstance(k, int) or isinstance(k, bool) or k == 0:
            raise ContractViolation(f"run exponent must be a nonzero integer, got {k!r}")
        if edge.kind == "e":
            if pos != edge.src:
                raise ContractViolation(f"letter {edge}^{k} does not chain at {pos!r}")
        else:
            if abs(k) != 1:
                raise ContractViolation(f"arc letter {edge}^{k} is not composable")
            a, b = (edge.src, edge.trg) if k > 0 else (edge.trg, edge.src)
            if pos != a:
                raise ContractViolation(f"letter {edge}^{k} does not chain at {pos!r}")
            pos = b
    return GroupoidPath(start, _merge_runs(letters))


class OrientedGraph:
    """The oriented graph of a connected small-type Coxeter graph."""

    __slots__ = ("coxeter", "vertices", "_loops", "_arcs")

    def __init__(self, g: CoxeterGraph):
        if not is_small_type(g):
            raise ContractViolation("the oriented graph requires a small-type graph")
        if not is_connected(g):
            raise ContractViolation("the oriented graph requires a connected graph")
        self.coxeter = g
        self.vertices = g.vertices
        self._loops = {s: Edge("e", s, s) for s in g.vertices}
        self._arcs = {
            (s, t): Edge("f", s, t) for s, t, _ in sorted(
                g.labeled_pairs(), key=lambda e: (g.index(e[0]), g.index(e[1]))
            )
        }

    def loop(self, s) -> Edge:
        try:
            return self._loops[s]
        except KeyError:
            raise ContractViolation(f"unknown vertex: {s!r}") from None

    def arc(self, s, t) -> Edge:
        try:
            return self._arcs[(s, t)]
        except KeyError:
            raise ContractViolation(f"no arc from {s!r} to {t!r}") from None

    def arc_pairs(self) -> tuple:
        return tuple(self._arcs)

    def edges(self) -> tuple:
        return tuple(self._loops.values()) + tuple(self._arcs.values())

    def constant(self, v) -> GroupoidPath:
        self.loop(v)
        return GroupoidPath(v)

    def loop_path(self, s, k: int = 1) -> GroupoidPath:
        self.loop(s)
        return loop_path(s, k)

    def arc_path(self, s, t, k: int = 1) -> GroupoidPath:
        self.arc(s, t)
        return arc_path(s, t, k)

    def generator_paths(self) -> tuple:
        """All loop generators, then all arc generators, in graph order."""
        loops = tuple(loop_path(s) for s in self.vertices)
        arcs = tuple(arc_path(s, t) for s, t in self._arcs)
        return loops + arcs

    def has_edge(self, edge: Edge) -> bool:
        if edge.kind == "e":
            return self._loops.get(edge.src) == edge
        return self._arcs.get((edge.src, edge.trg)) == edge


def build_graph(g: CoxeterGraph) -> OrientedGraph:
    """The oriented graph with a loop per vertex and an arc per ordered
    label-3 pair."""
    return OrientedGraph(g)


@dataclass(frozen=True)
class ReducedForm:
    """Unique factorization of a path into an arc-only prefix followed by
    alternating loop powers and arc-only connectors."""

    prefix: GroupoidPath
    blocks: tuple  # of (vertex, exponent, arc-only connector path)

    def reassemble(self) -> GroupoidPath:
        runs = list(self.prefix.runs)
        for s, k, mu in self.blocks:
            runs.append((Edge("e", s, s), k))
            runs.extend(mu.runs)
        return GroupoidPath(self.prefix.source, tuple(runs))


def reduced_form(x: GroupoidPath) -> ReducedForm:
    """Group the loop runs of ``x``; internal connectors are never
    constant because adjacent loop runs cannot chain."""
    runs = x.runs
    i = 0
    head = []
    while i < len(runs) and runs[i][0].kind == "f":
        head.append(runs[i])
        i += 1
    prefix = GroupoidPath(x.source, tuple(head))
    blocks = []
    while i < len(runs):
        edge, k = runs[i]
        i += 1
        connector = []
        while i < len(runs) and runs[i][0].kind == "f":
            connector.append(runs[i])
            i += 1
        blocks.append((edge.src, k, GroupoidPath(edge.src, tuple(connector))))
    return ReducedForm(prefix, tuple(blocks))


def has_square(x: GroupoidPath, s) -> bool:
    """Whether the reduced form of ``x`` contains a loop power at ``s``
    with exponent of absolute value >= 2."""
    return any(
        e.kind == "e" and e.src == s and abs(k) >= 2 for e, k in x.runs
    )


def square_generators(x: GroupoidPath) -> set:
    """All vertices at which ``x`` has a square."""
    return {e.src for e, k in x.runs if e.kind == "e" and abs(k) >= 2}


def is_b_path(x: GroupoidPath) -> bool:
    """Whether ``x`` lies in the arc-only subgroupoid."""
    return all(e.kind == "f" for e, _ in x.runs)


def type_projection(x: GroupoidPath, t, m: int):
    """Strip loop powers when they all sit at ``t`` with exponents that
    are multiples of ``m``; returns the reduced product of the arc-only
    pieces, or None when some loop run disqualifies the path."""
    if not isinstance(m, int) or isinstance(m, bool) or m == 0:
        raise ContractViolation(f"modulus must be a nonzero integer, got {m!r}")
    kept = []
    for edge, k in x.runs:
        if edge.kind == "e":
            if edge.src != t or k % m != 0:
                return None
        else:
            kept.append((edge, k))
    return GroupoidPath(x.source, _merge_runs(kept))


def random_path(og: OrientedGraph, rng, letters: int, arcs_only: bool = False,
                start=None) -> GroupoidPath:
    """Random reduced path built from a walk of at most ``letters`` signed
    letters (fewer after reduction).  With ``arcs_only`` the walk stays in
    the arc subgraph, producing an element of the arc-only subgroupoid."""
    v = start if start is not None else rng.choice(og.vertices)
    og.loop(v)
    first = v
    out = []
    for _ in range(letters):
        moves = [] if arcs_only else [(og.loop(v), 1), (og.loop(v), -1)]
        for s, t in og.arc_pairs():
            if s == v:
                moves.append((og.arc(s, t), 1))
            if t == v:
                moves.append((og.arc(s, t), -1))
        if not moves:
            break
        edge, k = rng.choice(moves)
        out.append((edge, k))
        v = edge.trg if k > 0 else edge.src
    return reduce_path(out, source=first)


# --- text format -----------------------------------------------------------
#
# "@v" is the constant path at v; otherwise letters "e(s)" and "f(s,t)"
# with optional integer exponents "^k", juxtaposed left to right.

_PATH_TOKEN = re.compile(
    r"\s*(?:(?P<const>@(?P<cv>[^\s^(),@#]+))"
    r"|(?P<kind>[ef])\((?P<a>[^\s^(),@#]+)(?:,(?P<b>[^\s^(),@#]+))?\)"
    r"(?:\^(?P<exp>-?\d+))?)"
)


def parse_path(og: OrientedGraph, text: str) -> GroupoidPath:
    """Parse the path text format over the edges of ``og``."""
    pos = 0
    letters: list = []
    const_vertex = None
    n = len(text)
    while pos < n:
        match = _PATH_TOKEN.match(text, pos)
        if not match or match.end() == match.start():
            if text[pos:].strip() == "":
                break
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected path syntax at {text[col - 1:].split()[0]!r}", 1, col)
        col = match.start() + len(match.group(0)) - len(match.group(0).lstrip()) + 1
        if match.group("const") is not None:
            if letters or const_vertex is not None or text[match.end():].strip():
                raise ParseError("'@v' must stand alone", 1, col)
            const_vertex = match.group("cv")
            if const_vertex not in og.vertices:
                raise ParseError(f"unknown vertex {const_vertex!r}", 1, col)
            pos = match.end()
            continue
        kind, a, b = match.group("kind"), match.group("a"), match.group("b")
        exp = 1 if match.group("exp") is None else int(match.group("exp"))
        if exp == 0:
            raise ParseError("zero exponent", 1, col)
        if kind == "e":
            if b is not None:
                raise ParseError("loop letters take one vertex", 1, col)
            if a not in og.vertices:
                raise ParseError(f"unknown vertex {a!r}", 1, col)
            edge = og.loop(a)
        else:
            if b is None:
                raise ParseError("arc letters take two vertices", 1, col)
            if (a, b) not in og._arcs:
                raise ParseError(f"no arc f({a},{b}) in this graph", 1, col)
            if abs(exp) != 1:
                raise ParseError(f"arc exponent must be +-1, got {exp}", 1, col)
            edge = og.arc(a, b)
        letters.append((edge, exp))
        pos = match.end()
    if const_vertex is not None:
        return GroupoidPath(const_vertex)
    if not letters:
        raise ParseError("empty path text (use '@v' for a constant path)", 1, 1)
    try:
        return reduce_path(letters)
    except ContractViolation as exc:
        raise ParseError(str(exc), 1, 1) from None


def format_path(x: GroupoidPath) -> str:
    """Inverse of parse_path on reduced paths."""
    if x.is_constant:
        return f"@{x.source}"
    return " ".join(
        str(e) if k == 1 else f"{e}^{k}" for e, k in x.runs
    )
