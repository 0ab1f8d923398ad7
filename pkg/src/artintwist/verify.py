"""Nontriviality certificates and the checks that back them.

The pipeline decides whether a word in the power generators maps to the
identity of the ambient generalized braid group, and when it does not,
produces a checkable witness: a groupoid generator that the word's
twist action moves.  Graphs that are not already connected and small
type are handled by reduction steps that preserve nontriviality:
splitting into connected components, replacing infinite labels by 3,
and folding into a small-type graph while expanding each generator
across its block.

Also here: the alternating product of two words, the fundamental-element
identity check on path graphs, and an exact comparison of the actions
of two generator words, used to certify that the encoded relations
really hold in the target group.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .coxeter import (
    CoxeterGraph,
    FoldedGraph,
    a_n,
    components,
    fold,
    format_graph,
    hat,
    is_connected,
    is_small_type,
)
from .errors import ContractViolation, InternalInconsistencyError
from .groupoid import GroupoidPath, build_graph, format_path, loop_path
from .twist import TwistWord, apply_word, raag_action
from .words import (
    ExponentAssignment,
    RaagExpression,
    format_expression,
    is_m_reduced,
    m_reduce,
)


@dataclass(frozen=True, slots=True)
class ArtinWord:
    """A word in the standard generators, leftmost syllable applied last."""

    syllables: tuple = ()

    def __post_init__(self):
        syls = tuple((s, p) for s, p in self.syllables)
        for s, p in syls:
            if not isinstance(p, int) or isinstance(p, bool) or p == 0:
                raise ContractViolation(f"syllable {s}^{p!r}: exponent must be a nonzero integer")
        object.__setattr__(self, "syllables", syls)

    def __len__(self) -> int:
        return len(self.syllables)

    def inverse(self) -> "ArtinWord":
        return ArtinWord(tuple((s, -p) for s, p in reversed(self.syllables)))

    def __repr__(self) -> str:
        inner = " ".join(s if p == 1 else f"{s}^{p}" for s, p in self.syllables)
        return f"ArtinWord({inner!r})"


def prod_word(x, y, m: int):
    """Alternating product prod(x, y; m): (xy)^(m/2) for even m,
    x(yx)^((m-1)/2) for odd m.  Both inputs must share a type."""
    if type(x) is not type(y):
        raise ContractViolation("prod_word needs two words of the same type")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ContractViolation(f"prod_word needs m >= 1, got {m!r}")
    xs, ys = x.syllables, y.syllables
    if m % 2 == 0:
        out = (xs + ys) * (m // 2)
    else:
        out = xs + (ys + xs) * ((m - 1) // 2)
    return type(x)(out)


def artin_actions_agree(g: CoxeterGraph, w1: ArtinWord, w2: ArtinWord) -> bool:
    """Exact comparison of two generator words acting through twists.

    Works componentwise: each word is restricted to a component (its
    other syllables act trivially there) and compared on every generator
    path of that component's oriented graph.  Every component must be
    small type.
    """
    for w in (w1, w2):
        for s, _ in w.syllables:
            g.index(s)
    for comp in components(g):
        if not is_small_type(comp):
            raise ContractViolation("actions are only defined over small-type components")
        words = []
        for w in (w1, w2):
            kept = tuple(syl for syl in w.syllables if syl[0] in comp)
            words.append(TwistWord(kept))
        og = build_graph(comp)
        for x in og.generator_paths():
            if apply_word(comp, words[0], x) != apply_word(comp, words[1], x):
                return False
    return True


def check_garside(n: int) -> bool:
    """Check the fundamental-element identity on the path graph with n
    vertices: with P the product of odd-position generators and Q the
    even ones, prod(P, Q; n+1) and prod(Q, P; n+1) act identically."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ContractViolation(f"need n >= 1, got {n!r}")
    g = a_n(n)
    odd = ArtinWord(tuple((str(k), 1) for k in range(1, n + 1, 2)))
    even = ArtinWord(tuple((str(k), 1) for k in range(2, n + 1, 2)))
    lhs = prod_word(odd, even, n + 1)
    rhs = prod_word(even, odd, n + 1)
    return artin_actions_agree(g, lhs, rhs)


def expand_through_fold(folded: FoldedGraph, word):
    """Expand each syllable s^p across the block of s, highest block
    index leftmost; the block commutes internally so the order is a
    convention.  Accepts either word type and preserves it."""
    out = []
    for s, p in word.syllables:
        for v in reversed(folded.block(s)):
            out.append((v, p))
    return type(word)(tuple(out))


def lift_exponents(folded: FoldedGraph, powers: ExponentAssignment) -> ExponentAssignment:
    """Give every block vertex the power of its original vertex."""
    return ExponentAssignment(
        {v: powers.of(s) for s, block in folded.blocks.items() for v in block}
    )


@dataclass(frozen=True)
class NontrivialityCertificate:
    """A witness that a word acts nontrivially: the loop generator at
    ``witness_vertex`` maps to ``image`` != itself under the twist word
    of ``expression_used`` over ``graph_used``."""

    witness_vertex: str
    image: GroupoidPath
    graph_used: CoxeterGraph
    expression_used: RaagExpression
    stage: str = "direct"

    def check(self) -> bool:
        """Re-validate the stored witness; raises on any defect."""
        self.graph_used.index(self.witness_vertex)
        generator = loop_path(self.witness_vertex)
        if self.image == generator:
            raise ContractViolation("certificate image equals the generator it should move")
        if (self.image.source, self.image.target) != (generator.source, generator.target):
            raise ContractViolation("certificate image has wrong endpoints")
        return True

    def to_json_dict(self) -> dict:
        return {
            "witness": self.witness_vertex,
            "image": format_path(self.image),
            "graph": format_graph(self.graph_used),
            "expression": format_expression(self.expression_used),
            "stage": self.stage,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def certify_nontrivial_small_type(
    g: CoxeterGraph,
    powers: ExponentAssignment,
    w: RaagExpression,
    stage: str = "direct",
) -> NontrivialityCertificate:
    """Produce a moved generator for a nonempty M-reduced expression over
    a connected small-type graph with at least two vertices.

    The probe is the loop at the first label-3 neighbor (in graph order)
    of the leftmost syllable's generator; if that generator were fixed,
    every other one is scanned before declaring the library inconsistent,
    since a fixed action here would contradict the certified relations.
    """
    if len(g.vertices) < 2:
        raise ContractViolation("certification needs at least two vertices")
    if not is_small_type(g) or not is_connected(g):
        raise ContractViolation("certification needs a connected small-type graph")
    if not w.syllables:
        raise ContractViolation("the empty expression has nothing to certify")
    if not is_m_reduced(g, w):
        raise ContractViolation("certification needs an M-reduced expression")

    head = w.syllables[0][0]
    witness = next((v for v in g.vertices if g.label(head, v) == 3), None)
    if witness is None:
        raise InternalInconsistencyError(
            f"no label-3 neighbor for {head!r} in a connected graph with >= 2 vertices"
        )
    word = raag_action(g, powers, w)
    image = apply_word(g, word, loop_path(witness))
    if image != loop_path(witness):
        return NontrivialityCertificate(witness, image, g, w, stage)

    for v in g.vertices:
        image = apply_word(g, word, loop_path(v))
        if image != loop_path(v):
            return NontrivialityCertificate(v, image, g, w, stage)
    og = build_graph(g)
    for x in og.generator_paths():
        if apply_word(g, word, x) != x:
            raise InternalInconsistencyError(
                f"action of {w!r} fixes every loop generator but moves {x!r}"
            )
    raise InternalInconsistencyError(
        f"nonempty M-reduced expression {w!r} acts trivially on every generator"
    )


def _certify_component(
    comp: CoxeterGraph, powers: ExponentAssignment, w: RaagExpression
) -> NontrivialityCertificate:
    """Certify a nonempty M-reduced expression supported on one component."""
    if len(comp.vertices) == 1:
        # Infinite cyclic case: the word is a single nonzero power and
        # maps to a nonzero power of the generator, recorded as a loop
        # power so the certificate stays checkable.
        (s, p), = w.syllables
        return NontrivialityCertificate(
            s, loop_path(s, p * powers.of(s)), comp, w, "cyclic"
        )
    finite = hat(comp)
    hatted = finite != comp
    if is_small_type(finite):
        return certify_nontrivial_small_type(
            finite, powers, w, "hat" if hatted else "direct"
        )
    folded = fold(finite)
    expanded = expand_through_fold(folded, w)
    lifted = lift_exponents(folded, powers)
    head = expanded.syllables[0][0]
    target = next(c for c in components(folded.graph) if head in c)
    restricted = RaagExpression(
        tuple(syl for syl in expanded.syllables if syl[0] in target)
    )
    return certify_nontrivial_small_type(
        target, lifted, restricted, "hat+fold" if hatted else "fold"
    )


def decide_trivial_image(
    g: CoxeterGraph, powers: ExponentAssignment, w: RaagExpression
):
    """Decide whether the word's image in the ambient group is trivial.

    Returns (True, None) when the M-reduction of ``w`` is empty, and
    otherwise (False, certificate) where the certificate comes from the
    first component (in vertex order) on which the reduction survives.
    Arbitrary graphs are accepted; infinite labels and non-small labels
    are eliminated by the hat and fold reductions, which preserve
    nontriviality.
    """
    reduced = m_reduce(g, w)
    if not reduced.syllables:
        return True, None
    for comp in components(g):
        restricted = RaagExpression(
            tuple(syl for syl in reduced.syllables if syl[0] in comp)
        )
        if not restricted.syllables:
            continue
        return False, _certify_component(comp, powers, restricted)
    raise InternalInconsistencyError("nonempty reduction missed every component")
