"""Expressions in the power generators and their rewriting.

An expression is a finite sequence of syllables (generator, nonzero
exponent), stored leftmost-first, the leftmost syllable being the one
applied last when the expression acts on anything.  Two elementary
rewriting moves are available:

  * type I merges two adjacent syllables with the same generator into
    one (dropping it when the exponents cancel), and
  * type II swaps two adjacent syllables whose generators carry label 2.

An expression is M-reduced when no sequence of these moves shortens it;
II-equivalence is the relation generated by type II moves alone.  This
module decides both, computes a deterministic M-reduced form (with an
optional replayable move trace), decides the "ends in s" predicate, and
answers the word problem for the commutation-only presentation by
reducing to the empty expression.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .coxeter import CoxeterGraph
from .errors import ContractViolation, ParseError


@dataclass(frozen=True, slots=True)
class RaagExpression:
    """Sequence of (generator, nonzero exponent) syllables, leftmost first."""

    syllables: tuple = ()

    def __post_init__(self):
        syls = tuple((s, p) for s, p in self.syllables)
        for s, p in syls:
            if not isinstance(p, int) or isinstance(p, bool) or p == 0:
                raise ContractViolation(f"syllable {s}^{p!r}: exponent must be a nonzero integer")
        object.__setattr__(self, "syllables", syls)

    def __len__(self) -> int:
        return len(self.syllables)

    def __str__(self) -> str:
        return format_expression(self)

    def __repr__(self) -> str:
        return f"RaagExpression({format_expression(self)!r})"

    def inverse(self) -> "RaagExpression":
        return RaagExpression(tuple((s, -p) for s, p in reversed(self.syllables)))

    def concat(self, other: "RaagExpression") -> "RaagExpression":
        return RaagExpression(self.syllables + other.syllables)

    def generators(self) -> set:
        return {s for s, _ in self.syllables}


class ExponentAssignment:
    """A power m(s) >= 2 for each generator; defaults are supplied by
    callers, never here."""

    __slots__ = ("_powers",)

    def __init__(self, powers):
        powers = dict(powers)
        for s, m in powers.items():
            if not isinstance(m, int) or isinstance(m, bool) or m < 2:
                raise ContractViolation(f"power for {s!r} must be an integer >= 2, got {m!r}")
        self._powers = powers

    @classmethod
    def uniform(cls, g: CoxeterGraph, m: int = 2) -> "ExponentAssignment":
        return cls({s: m for s in g.vertices})

    def of(self, s) -> int:
        try:
            return self._powers[s]
        except KeyError:
            raise ContractViolation(f"no power assigned to generator {s!r}") from None

    def items(self):
        return self._powers.items()

    def __contains__(self, s) -> bool:
        return s in self._powers

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExponentAssignment):
            return NotImplemented
        return self._powers == other._powers

    def __repr__(self) -> str:
        inner = ", ".join(f"{s}={m}" for s, m in sorted(self._powers.items()))
        return f"ExponentAssignment({inner})"


def _check_generators(g: CoxeterGraph, w: RaagExpression):
    for s, _ in w.syllables:
        if s not in g:
            raise ContractViolation(f"generator {s!r} is not a vertex of the graph")


def is_m_reduced(g: CoxeterGraph, w: RaagExpression) -> bool:
    """True when no move sequence shortens ``w``.

    Checked combinatorially: between any two consecutive occurrences of
    the same generator there must be a syllable that does not commute
    with it.  (Non-consecutive occurrences are then witnessed by the
    occurrence in between.)
    """
    _check_generators(g, w)
    syls = w.syllables
    labels = g._labels
    last: dict = {}
    for j, (s, _) in enumerate(syls):
        i = last.get(s)
        if i is not None:
            for k in range(i + 1, j):
                if (s, syls[k][0]) in labels:
                    break
            else:
                return False
        last[s] = j
    return True


def _reduce(g: CoxeterGraph, syls: list, trace: list | None) -> list:
    """Merge the leftmost mergeable pair until none remains.

    A pair is mergeable when the same generator occurs twice with only
    commuting generators in between; the left syllable slides right and
    the two merge (type II moves followed by one type I move).
    """
    labels = g._labels
    changed = True
    while changed:
        changed = False
        for i in range(len(syls) - 1):
            s, p = syls[i]
            for j in range(i + 1, len(syls)):
                t, q = syls[j]
                if t == s:
                    if trace is not None:
                        trace.extend(("II", k) for k in range(i, j - 1))
                        trace.append(("I", j - 1))
                    merged = [(s, p + q)] if p + q else []
                    syls[i:j + 1] = syls[i + 1:j] + merged
                    changed = True
                    break
                if (s, t) in labels:
                    break
            if changed:
                break
    return syls


def m_reduce(g: CoxeterGraph, w: RaagExpression) -> RaagExpression:
    """A deterministic M-reduced expression for the same group element."""
    _check_generators(g, w)
    return RaagExpression(tuple(_reduce(g, list(w.syllables), None)))


def m_reduce_with_trace(g: CoxeterGraph, w: RaagExpression):
    """Like m_reduce, also returning the elementary moves performed.

    Each move is ("I", i) or ("II", i) acting at position i; replaying
    them through apply_type_i / apply_type_ii reproduces the result.
    """
    _check_generators(g, w)
    trace: list = []
    reduced = RaagExpression(tuple(_reduce(g, list(w.syllables), trace)))
    return reduced, tuple(trace)


def type_i_positions(g: CoxeterGraph, w: RaagExpression) -> tuple:
    """Positions i where syllables i, i+1 share a generator."""
    _check_generators(g, w)
    syls = w.syllables
    return tuple(i for i in range(len(syls) - 1) if syls[i][0] == syls[i + 1][0])


def type_ii_positions(g: CoxeterGraph, w: RaagExpression) -> tuple:
    """Positions i where syllables i, i+1 have commuting generators."""
    _check_generators(g, w)
    syls = w.syllables
    return tuple(
        i for i in range(len(syls) - 1) if g.commutes(syls[i][0], syls[i + 1][0])
    )


def apply_type_i(g: CoxeterGraph, w: RaagExpression, i: int) -> RaagExpression:
    """Merge syllables i and i+1 (same generator required)."""
    syls = w.syllables
    if not 0 <= i < len(syls) - 1:
        raise ContractViolation(f"position {i} out of range")
    (s, p), (t, q) = syls[i], syls[i + 1]
    if s != t:
        raise ContractViolation(f"type I needs equal generators at {i}, got {s!r}, {t!r}")
    merged = ((s, p + q),) if p + q else ()
    return RaagExpression(syls[:i] + merged + syls[i + 2:])


def apply_type_ii(g: CoxeterGraph, w: RaagExpression, i: int) -> RaagExpression:
    """Swap syllables i and i+1 (commuting generators required)."""
    _check_generators(g, w)
    syls = w.syllables
    if not 0 <= i < len(syls) - 1:
        raise ContractViolation(f"position {i} out of range")
    s, t = syls[i][0], syls[i + 1][0]
    if not g.commutes(s, t):
        raise ContractViolation(f"type II needs commuting generators at {i}, got {s!r}, {t!r}")
    return RaagExpression(syls[:i] + (syls[i + 1], syls[i]) + syls[i + 2:])


def _ends_in(labels: dict, syls: tuple, s) -> bool:
    # A syllable's relative order with non-commuting syllables is
    # invariant under type II moves, so s reaches the left end iff the
    # first syllable that is s or fails to commute with s is s itself.
    for t, _ in syls:
        if t == s:
            return True
        if (s, t) in labels:
            return False
    return False


def ends_in(g: CoxeterGraph, w: RaagExpression, s) -> bool:
    """Whether some II-equivalent expression has leftmost generator ``s``.

    Defined for M-reduced expressions only; anything else is rejected.
    """
    g.index(s)
    if not is_m_reduced(g, w):
        raise ContractViolation("ends_in is only defined for M-reduced expressions")
    return _ends_in(g._labels, w.syllables, s)


def ii_equivalent(g: CoxeterGraph, w1: RaagExpression, w2: RaagExpression) -> bool:
    """Whether type II moves alone connect the two expressions.

    Decided through pairwise projections: for each generator, and for
    each non-commuting generator pair, the corresponding subsequences of
    syllables must agree.
    """
    _check_generators(g, w1)
    _check_generators(g, w2)
    a, b = w1.syllables, w2.syllables
    if a == b:
        return True
    if len(a) != len(b):
        return False
    per_gen_a: dict = {}
    per_gen_b: dict = {}
    for syl in a:
        per_gen_a.setdefault(syl[0], []).append(syl)
    for syl in b:
        per_gen_b.setdefault(syl[0], []).append(syl)
    if per_gen_a != per_gen_b:
        return False
    labels = g._labels
    gens = sorted(per_gen_a, key=g.index)
    for i, s in enumerate(gens):
        for t in gens[i + 1:]:
            if (s, t) not in labels:
                continue
            pa = [syl for syl in a if syl[0] == s or syl[0] == t]
            pb = [syl for syl in b if syl[0] == s or syl[0] == t]
            if pa != pb:
                return False
    return True


def is_trivial_raag(g: CoxeterGraph, w: RaagExpression) -> bool:
    """Word problem for the commutation-only presentation."""
    return not m_reduce(g, w).syllables


def split_criterion(g: CoxeterGraph, w: RaagExpression, r: int) -> bool:
    """Cut-consistency test, equivalent to is_m_reduced for any cut.

    Syllables are counted from the right, 1-based, matching the
    convention that position 1 acts first; ``r`` may be 2..len(w).  The
    expression is cut before position r into U (the inverse of the left
    part) and V (the right part); the test succeeds when both halves are
    M-reduced and no generator lets both halves end in it.
    """
    _check_generators(g, w)
    n = len(w.syllables)
    if not 2 <= r <= n:
        raise ContractViolation(f"cut index must satisfy 2 <= r <= {n}, got {r}")
    cut = n - r + 1
    u = RaagExpression(tuple((s, -p) for s, p in reversed(w.syllables[:cut])))
    v = RaagExpression(w.syllables[cut:])
    if not is_m_reduced(g, u) or not is_m_reduced(g, v):
        return False
    labels = g._labels
    for s in g.vertices:
        if _ends_in(labels, u.syllables, s) and _ends_in(labels, v.syllables, s):
            return False
    return True


# --- text format -----------------------------------------------------------
#
# Whitespace-separated syllables "s" or "s^p" with p a nonzero integer;
# the leftmost syllable is the last applied.  The empty string denotes
# the empty expression.

_SYLLABLE = re.compile(r"^([^\s^]+)(?:\^(-?\d+))?$")


def parse_expression(text: str, g: CoxeterGraph | None = None) -> RaagExpression:
    """Parse the expression text format; optionally validate generators."""
    syllables = []
    for match in re.finditer(r"\S+", text):
        token = match.group(0)
        col = match.start() + 1
        parsed = _SYLLABLE.match(token)
        if not parsed:
            raise ParseError(f"bad syllable {token!r}", 1, col)
        s, power = parsed.group(1), parsed.group(2)
        p = 1 if power is None else int(power)
        if p == 0:
            raise ParseError(f"zero exponent in {token!r}", 1, col)
        if g is not None and s not in g:
            raise ParseError(f"unknown generator {s!r}", 1, col)
        syllables.append((s, p))
    return RaagExpression(tuple(syllables))


def format_expression(w: RaagExpression) -> str:
    """Inverse of parse_expression; the empty expression prints as ''."""
    return " ".join(s if p == 1 else f"{s}^{p}" for s, p in w.syllables)
