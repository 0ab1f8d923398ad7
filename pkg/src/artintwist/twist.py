"""The twist action on the free groupoid.

Each vertex t carries an automorphism family tau(t)^m of the groupoid,
one per nonzero integer m, given by an explicit case table on the edge
generators.  Writing a(s) for the loop generator at s and b(s,t) for
the arc generator of an ordered label-3 pair:

  tau(t)^m fixes a(s) when s = t or the pair commutes, and otherwise

      a(s)  ->  b(s,t) a(t)^m b(s,t)^-1 a(s)          when s < t,
      a(s)  ->  a(s) b(t,s)^-1 a(t)^-m b(t,s)         when t < s;

  tau(t)^m fixes b(r,s) unless r < t < s and t carries label 3 with
  r or with s (the stated crossing rule, encoded literally), and then

      b(r,s) -> b(r,t) a(t)^m b(r,t)^-1 b(r,s)                  (3 with r only),
      b(r,s) -> b(r,s) b(t,s)^-1 a(t)^-m b(t,s)                 (3 with s only),
      b(r,s) -> b(r,t) a(t)^m b(r,t)^-1 b(r,s) b(t,s)^-1 a(t)^-m b(t,s)  (both);

inverse letters map to the inverse of the image.  Applying a twist to a
path maps letters individually and freely reduces the concatenation;
endpoints never move.  These automorphisms satisfy the commutation and
braid relations matching the graph labels, which relation_failures
checks exhaustively on the generators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import CoxeterGraph, is_small_type
from .errors import ContractViolation
from .groupoid import Edge, GroupoidPath, _merge_runs, build_graph
from .words import ExponentAssignment, RaagExpression


@dataclass(frozen=True, slots=True)
class TwistWord:
    """Product of twist powers, leftmost factor applied last."""

    factors: tuple = ()

    def __post_init__(self):
        factors = tuple((t, m) for t, m in self.factors)
        for t, m in factors:
            if not isinstance(m, int) or isinstance(m, bool) or m == 0:
                raise ContractViolation(f"twist power for {t!r} must be a nonzero integer")
        object.__setattr__(self, "factors", factors)

    def __len__(self) -> int:
        return len(self.factors)

    def inverse(self) -> "TwistWord":
        return TwistWord(tuple((t, -m) for t, m in reversed(self.factors)))

    def __repr__(self) -> str:
        inner = " ".join(f"{t}^{m}" for t, m in self.factors)
        return f"TwistWord({inner!r})"


def _require_small_type(g: CoxeterGraph):
    # Connectivity is only checked where an oriented graph is built;
    # letters of a valid path stay inside one component anyway.
    if not is_small_type(g):
        raise ContractViolation("twists act only over small-type graphs")


def _validate_edge(g: CoxeterGraph, edge: Edge):
    if edge.kind == "e":
        g.index(edge.src)
        return
    if g.label(edge.src, edge.trg) != 3 or g.index(edge.src) >= g.index(edge.trg):
        raise ContractViolation(f"{edge} is not a generator of this graph")


def _loop_image_runs(g: CoxeterGraph, t, m: int, s) -> tuple | None:
    """Image runs of the positive loop letter at s, or None when fixed."""
    if s == t or g.label(s, t) != 3:
        return None
    if g.index(s) < g.index(t):
        return (
            (Edge("f", s, t), 1),
            (Edge("e", t, t), m),
            (Edge("f", s, t), -1),
            (Edge("e", s, s), 1),
        )
    return (
        (Edge("e", s, s), 1),
        (Edge("f", t, s), -1),
        (Edge("e", t, t), -m),
        (Edge("f", t, s), 1),
    )


def _arc_image_runs(g: CoxeterGraph, t, m: int, r, s) -> tuple | None:
    """Image runs of the positive arc letter b(r,s), or None when fixed."""
    if not g.index(r) < g.index(t) < g.index(s):
        return None
    with_r = g.label(r, t) == 3
    with_s = g.label(t, s) == 3
    if not (with_r or with_s):
        return None
    head = (
        (Edge("f", r, t), 1),
        (Edge("e", t, t), m),
        (Edge("f", r, t), -1),
    ) if with_r else ()
    tail = (
        (Edge("f", t, s), -1),
        (Edge("e", t, t), -m),
        (Edge("f", t, s), 1),
    ) if with_s else ()
    return head + ((Edge("f", r, s), 1),) + tail


def _invert_runs(runs: tuple) -> tuple:
    return tuple((e, -k) for e, k in reversed(runs))


def twist_letter(g: CoxeterGraph, t, m: int, edge: Edge, sign: int = 1) -> GroupoidPath:
    """Image of a single signed edge generator under tau(t)^m."""
    _require_small_type(g)
    g.index(t)
    if not isinstance(m, int) or isinstance(m, bool) or m == 0:
        raise ContractViolation(f"twist power must be a nonzero integer, got {m!r}")
    if sign not in (1, -1):
        raise ContractViolation(f"letter sign must be +-1, got {sign!r}")
    _validate_edge(g, edge)
    if edge.kind == "e":
        runs = _loop_image_runs(g, t, m, edge.src)
    else:
        runs = _arc_image_runs(g, t, m, edge.src, edge.trg)
    if runs is None:
        runs = ((edge, 1),)
    if sign < 0:
        runs = _invert_runs(runs)
    start = runs[0]
    pos = start[0].src if (start[1] > 0 or start[0].kind == "e") else start[0].trg
    return GroupoidPath(pos, _merge_runs(runs))


def apply_twist(g: CoxeterGraph, t, m: int, x: GroupoidPath) -> GroupoidPath:
    """Apply tau(t)^m to a path letter by letter and reduce."""
    _require_small_type(g)
    g.index(t)
    if not isinstance(m, int) or isinstance(m, bool) or m == 0:
        raise ContractViolation(f"twist power must be a nonzero integer, got {m!r}")
    out: list = []
    loop_cache: dict = {}
    for edge, k in x.runs:
        _validate_edge(g, edge)
        if edge.kind == "e":
            image = loop_cache.get(edge.src, False)
            if image is False:
                image = _loop_image_runs(g, t, m, edge.src)
                loop_cache[edge.src] = image
            if image is None:
                out.append((edge, k))
            else:
                rep = image if k > 0 else _invert_runs(image)
                out.extend(rep * abs(k))
        else:
            image = _arc_image_runs(g, t, m, edge.src, edge.trg)
            if image is None:
                out.append((edge, k))
            else:
                out.extend(image if k > 0 else _invert_runs(image))
    return GroupoidPath(x.source, _merge_runs(out))


def apply_word(g: CoxeterGraph, word: TwistWord, x: GroupoidPath) -> GroupoidPath:
    """Apply a twist word, rightmost factor first."""
    for t, m in reversed(word.factors):
        x = apply_twist(g, t, m, x)
    return x


def raag_action(g: CoxeterGraph, powers: ExponentAssignment, w: RaagExpression) -> TwistWord:
    """Turn an expression into the twist word realizing its action: the
    syllable s^p becomes the factor tau(s)^(p * m(s))."""
    for s, _ in w.syllables:
        g.index(s)
    return TwistWord(tuple((s, p * powers.of(s)) for s, p in w.syllables))


def relation_failures(g: CoxeterGraph) -> list[str]:
    """Check the commutation and braid relations of the twist action on
    every generator path; returns a description per failure."""
    og = build_graph(g)
    gens = og.generator_paths()
    failures = []
    verts = g.vertices
    for i, s in enumerate(verts):
        for t in verts[i + 1:]:
            m = g.label(s, t)
            if m == 2:
                seq_a, seq_b = (s, t), (t, s)
            else:
                seq_a, seq_b = (s, t, s), (t, s, t)
            for x in gens:
                lhs = rhs = x
                for u in reversed(seq_a):
                    lhs = apply_twist(g, u, 1, lhs)
                for u in reversed(seq_b):
                    rhs = apply_twist(g, u, 1, rhs)
                if lhs != rhs:
                    kind = "commutation" if m == 2 else "braid"
                    failures.append(f"{kind} relation broken for ({s}, {t}) on {x}")
    return failures
