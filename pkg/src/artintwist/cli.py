"""Command line front end.

Every subcommand reads the graph from a file in the graph text format
and takes expressions, paths, and twist words as argument strings in
the corresponding text formats.  Exit codes: 0 for success (and for
"yes"/"trivial" verdicts), 1 for "no"/"nontrivial" verdicts or failed
checks, 2 for malformed input, 3 for operations called outside their
preconditions.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import coxeter, groupoid, twist, verify, words
from .errors import ContractViolation, ParseError


def _load_graph(path: str) -> coxeter.CoxeterGraph:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read graph file: {exc}") from None
    return coxeter.parse_graph(text)


def _parse_exponents(g, spec: str | None) -> words.ExponentAssignment:
    powers = {s: 2 for s in g.vertices}
    if spec:
        for item in spec.split(","):
            item = item.strip()
            if not item:
                continue
            name, _, value = item.partition("=")
            if not value:
                raise ParseError(f"bad exponent setting {item!r} (use s=m)")
            if name not in g:
                raise ParseError(f"unknown generator {name!r} in --exponents")
            try:
                powers[name] = int(value)
            except ValueError:
                raise ParseError(f"bad exponent value {value!r}") from None
    return words.ExponentAssignment(powers)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _cmd_reduce(args) -> int:
    g = _load_graph(args.graph)
    w = words.parse_expression(args.expression, g)
    reduced = words.m_reduce(g, w)
    _emit(args, {
        "command": "reduce",
        "input": words.format_expression(w),
        "reduced": words.format_expression(reduced),
        "trivial": not reduced.syllables,
    }, words.format_expression(reduced))
    return 0


def _cmd_is_trivial(args) -> int:
    g = _load_graph(args.graph)
    w = words.parse_expression(args.expression, g)
    powers = _parse_exponents(g, args.exponents)
    trivial, certificate = verify.decide_trivial_image(g, powers, w)
    payload = {
        "command": "is-trivial",
        "trivial": trivial,
        "certificate": certificate.to_json_dict() if certificate else None,
    }
    if trivial:
        _emit(args, payload, "trivial")
    else:
        line = f"nontrivial (moves the loop at {certificate.witness_vertex})"
        if args.certificate and not args.json:
            line += "\n" + certificate.to_json()
        _emit(args, payload, line)
    return 0 if trivial else 1


def _cmd_ends_in(args) -> int:
    g = _load_graph(args.graph)
    w = words.parse_expression(args.expression, g)
    if args.vertex not in g:
        raise ParseError(f"unknown vertex {args.vertex!r}")
    result = words.ends_in(g, w, args.vertex)
    _emit(args, {
        "command": "ends-in",
        "vertex": args.vertex,
        "result": result,
    }, "yes" if result else "no")
    return 0 if result else 1


def _cmd_act(args) -> int:
    g = _load_graph(args.graph)
    og = groupoid.build_graph(g)
    x = groupoid.parse_path(og, args.path)
    if args.twists is not None:
        factors = words.parse_expression(args.twists, g)
        word = twist.TwistWord(factors.syllables)
    else:
        expression = words.parse_expression(args.expression, g)
        powers = _parse_exponents(g, args.exponents)
        word = twist.raag_action(g, powers, expression)
    result = twist.apply_word(g, word, x)
    _emit(args, {
        "command": "act",
        "input": groupoid.format_path(x),
        "result": groupoid.format_path(result),
    }, groupoid.format_path(result))
    return 0


def _cmd_certify(args) -> int:
    g = _load_graph(args.graph)
    w = words.parse_expression(args.expression, g)
    powers = _parse_exponents(g, args.exponents)
    trivial, certificate = verify.decide_trivial_image(g, powers, w)
    payload = {
        "command": "certify",
        "trivial": trivial,
        "certificate": certificate.to_json_dict() if certificate else None,
    }
    if trivial:
        _emit(args, payload, "trivial; no certificate exists")
        return 1
    certificate.check()
    _emit(args, payload, certificate.to_json())
    return 0


def _cmd_fold(args) -> int:
    g = _load_graph(args.graph)
    folded = coxeter.fold(g)
    text = coxeter.format_graph(folded.graph)
    _emit(args, {
        "command": "fold",
        "n": folded.n_value,
        "blocks": {s: list(block) for s, block in folded.blocks.items()},
        "graph": text,
    }, text.rstrip("\n"))
    return 0


def _cmd_hat(args) -> int:
    g = _load_graph(args.graph)
    text = coxeter.format_graph(coxeter.hat(g))
    _emit(args, {"command": "hat", "graph": text}, text.rstrip("\n"))
    return 0


def _cmd_check_relations(args) -> int:
    g = _load_graph(args.graph)
    failures = []
    for comp in coxeter.components(g):
        failures.extend(twist.relation_failures(comp))
    swept = 0
    if args.sweep and not failures:
        rng = random.Random(args.seed)
        for comp in coxeter.components(g):
            og = groupoid.build_graph(comp)
            for _ in range(args.sweep):
                t = rng.choice(comp.vertices)
                m = rng.choice([k for k in range(-4, 5) if k])
                x = groupoid.random_path(og, rng, 20)
                y = groupoid.random_path(og, rng, 20, start=x.target)
                lhs = twist.apply_twist(comp, t, m, x * y)
                rhs = twist.apply_twist(comp, t, m, x) * twist.apply_twist(comp, t, m, y)
                swept += 1
                if lhs != rhs:
                    failures.append(f"automorphism law broken for twist {t}^{m}")
    ok = not failures
    _emit(args, {
        "command": "check-relations",
        "ok": ok,
        "failures": failures,
        "sweep": swept,
    }, "OK" if ok else "\n".join(failures))
    return 0 if ok else 1


def _cmd_check_garside(args) -> int:
    ok = verify.check_garside(args.n)
    _emit(args, {"command": "check-garside", "n": args.n, "ok": ok},
          "OK" if ok else "FAILED")
    return 0 if ok else 1


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="artintwist",
        description="Decide and certify relations among powers of "
                    "generalized braid group generators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    p = add("reduce", _cmd_reduce, "M-reduce an expression")
    p.add_argument("graph")
    p.add_argument("expression")

    p = add("is-trivial", _cmd_is_trivial, "decide the image word problem")
    p.add_argument("graph")
    p.add_argument("expression")
    p.add_argument("--exponents", help="comma list s=m (default all 2)")
    p.add_argument("--certificate", action="store_true",
                   help="print the certificate for nontrivial words")

    p = add("ends-in", _cmd_ends_in, "test the ends-in predicate")
    p.add_argument("graph")
    p.add_argument("expression")
    p.add_argument("vertex")

    p = add("act", _cmd_act, "apply a twist word or an expression to a path")
    p.add_argument("graph")
    p.add_argument("path")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--twists", help="twist word, e.g. 'b^2 a^-1'")
    group.add_argument("--expression", help="expression acting through its powers")
    p.add_argument("--exponents", help="comma list s=m (default all 2)")

    p = add("certify", _cmd_certify, "emit a nontriviality certificate")
    p.add_argument("graph")
    p.add_argument("expression")
    p.add_argument("--exponents", help="comma list s=m (default all 2)")

    p = add("fold", _cmd_fold, "fold into a small-type graph")
    p.add_argument("graph")

    p = add("hat", _cmd_hat, "replace infinite labels by 3")
    p.add_argument("graph")

    p = add("check-relations", _cmd_check_relations,
            "verify the twist action satisfies the graph relations")
    p.add_argument("graph")
    p.add_argument("--sweep", type=int, default=0,
                   help="extra randomized automorphism-law checks")
    p.add_argument("--seed", type=int, default=0)

    p = add("check-garside", _cmd_check_garside,
            "verify the fundamental-element identity")
    p.add_argument("n", type=int)

    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ContractViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
