"""Command-line front end.

Exit codes: 0 success / true, 1 false / negative verdict, 2 usage or parse
error, 3 limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import Poly
from .decide import UNDECIDED, YES, Presentation, check_automorphism, is_zero_in_quotient, quotient_basis
from .expr import ParseError, evaluate, parse_expr
from .gsb import LimitExceeded, Limits, minimalize
from .oracle import verify_axioms_for
from .presfile import parse_file

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class _Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, text_lines: list[str], payload: dict) -> None:
        if self.as_json:
            print(json.dumps(payload, indent=2, sort_keys=True, default=str))
        else:
            for line in text_lines:
                print(line)


def _load(path: str, args) -> Presentation:
    text = Path(path).read_text(encoding="utf-8")
    pf = parse_file(text)
    p = pf.presentation
    p.limits = _limits(args)
    args._file = pf
    return p


def _limits(args) -> Limits:
    d = Limits()
    return Limits(
        max_relations=getattr(args, "max_relations", None) or d.max_relations,
        max_leading_length=getattr(args, "max_len", None) or d.max_leading_length,
        max_steps=getattr(args, "max_steps", None) or d.max_steps,
    )


def _expr(p: Presentation, text: str) -> Poly:
    return evaluate(parse_expr(text), p.algebra)


def _trace_lines(p: Presentation, trace) -> list[str]:
    A = p.algebra
    out = []
    for i, st in enumerate(trace, 1):
        letters = ",".join(A.alphabet.name(x) for x in st.letters)
        mult = f"[s{st.relation},{letters}]" if letters else f"s{st.relation}"
        out.append(f"  {i}: {A.render(A.mono(st.monomial))}  -= {A.field.format(st.coefficient)} * {mult}")
    return out


def _trace_json(p: Presentation, trace) -> list[dict]:
    A = p.algebra
    return [
        {
            "relation": st.relation,
            "letters": [A.alphabet.name(x) for x in st.letters],
            "coefficient": A.field.format(st.coefficient),
            "monomial": A.render(A.mono(st.monomial)),
        }
        for st in trace
    ]


def _relation_index(p: Presentation) -> list[str]:
    return [f"  s{r.id}: {p.algebra.render(r.poly)}" for r in p.basis()]


def _relation_json(p: Presentation) -> dict:
    return {f"s{r.id}": p.algebra.render(r.poly) for r in p.basis()}


def cmd_normalize(args, out: _Out) -> int:
    p = _load(args.file, args)
    f = _expr(p, args.expr)
    s = p.algebra.render(f)
    out.emit([s], {"normal_form": s})
    return EXIT_TRUE


def cmd_complete(args, out: _Out) -> int:
    p = _load(args.file, args)
    basis = p.basis()
    if args.minimal:
        basis = minimalize(basis)
    text = basis.render()
    out.emit(
        text.rstrip("\n").split("\n"),
        {
            "field": str(p.field),
            "generators": list(p.alphabet.names),
            "complete": basis.complete,
            "minimal": basis.minimal,
            "reduced": basis.reduced,
            "relations": [p.algebra.render(r.poly) for r in basis],
        },
    )
    return EXIT_TRUE


def cmd_reduce(args, out: _Out) -> int:
    p = _load(args.file, args)
    f = _expr(p, args.expr)
    rem, trace = p.basis().reduce(f)
    lines = [p.algebra.render(rem)]
    if args.trace:
        lines += ["trace:"] + _trace_lines(p, trace) + ["relations:"] + _relation_index(p)
    payload = {"remainder": p.algebra.render(rem)}
    if args.trace:
        payload["trace"] = _trace_json(p, trace)
        payload["relations"] = _relation_json(p)
    out.emit(lines, payload)
    return EXIT_TRUE


def _membership(p: Presentation, f: Poly, out: _Out) -> int:
    res = is_zero_in_quotient(f, p)
    A = p.algebra
    if res.member:
        lines = ["yes", "certificate: reduction to 0"] + _trace_lines(p, res.trace)
        payload = {"verdict": "yes", "trace": _trace_json(p, res.trace)}
        if len(res.trace):
            lines += ["relations:"] + _relation_index(p)
            payload["relations"] = _relation_json(p)
    else:
        lines = ["no", f"remainder: {A.render(res.remainder)}"]
        payload = {"verdict": "no", "remainder": A.render(res.remainder)}
    out.emit(lines, payload)
    return EXIT_TRUE if res.member else EXIT_FALSE


def cmd_member(args, out: _Out) -> int:
    p = _load(args.file, args)
    return _membership(p, _expr(p, args.expr), out)


def cmd_equal(args, out: _Out) -> int:
    p = _load(args.file, args)
    return _membership(p, _expr(p, args.lhs) - _expr(p, args.rhs), out)


def cmd_quotient_basis(args, out: _Out) -> int:
    p = _load(args.file, args)
    mons = quotient_basis(p, args.enum_len)
    rendered = [p.algebra.render(m) for m in mons]
    out.emit(rendered, {"max_len": args.enum_len, "monomials": rendered})
    return EXIT_TRUE


def cmd_autocheck(args, out: _Out) -> int:
    p = _load(args.file, args)
    phi = args._file.endomorphism()
    v = check_automorphism(phi, p.limits)
    A = p.algebra
    lines = [v.status]
    payload = {"verdict": v.status, "determinant": A.field.format(v.determinant)}
    lines.append(f"determinant of linear part: {A.field.format(v.determinant)}")
    if v.reason:
        lines.append(f"reason: {v.reason}")
        payload["reason"] = v.reason
    if v.index is not None:
        g = phi.higher_parts()[v.index]
        rem, _ = v.basis.reduce(g)
        lines.append(f"failing generator: {A.alphabet.name(v.index)}")
        lines.append(f"remainder: {A.render(rem)}")
        payload["failing_generator"] = A.alphabet.name(v.index)
        payload["remainder"] = A.render(rem)
    out.emit(lines, payload)
    if v.status == YES:
        return EXIT_TRUE
    return EXIT_LIMIT if v.status == UNDECIDED else EXIT_FALSE


def cmd_axioms(args, out: _Out) -> int:
    rep = verify_axioms_for(args.generators, args.char, args.max_len)
    out.emit(rep.lines(), rep.as_dict())
    return EXIT_TRUE if rep.ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    limits = argparse.ArgumentParser(add_help=False)
    limits.add_argument("--max-relations", type=int, help="stop completion beyond this many relations")
    limits.add_argument("--max-len", type=int, help="stop completion on longer leading monomials")
    limits.add_argument("--max-steps", type=int, help="stop completion after this many queue steps")

    parser = argparse.ArgumentParser(
        prog="metapoisson", description="Metabelian Poisson algebras: normal forms, bases, word problem."
    )
    parser.add_argument("--json", action="store_true", dest="json_global", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("normalize", parents=[common], help="canonical form of an expression")
    s.add_argument("file")
    s.add_argument("expr")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("complete", parents=[common, limits], help="Gröbner–Shirshov basis of the relations")
    s.add_argument("file")
    s.add_argument("--minimal", action="store_true")
    s.set_defaults(func=cmd_complete)

    s = sub.add_parser("reduce", parents=[common, limits], help="normal form modulo the completed relations")
    s.add_argument("file")
    s.add_argument("expr")
    s.add_argument("--trace", action="store_true")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("member", parents=[common, limits], help="is the expression zero in the quotient?")
    s.add_argument("file")
    s.add_argument("expr")
    s.set_defaults(func=cmd_member)

    s = sub.add_parser("equal", parents=[common, limits], help="are two expressions equal in the quotient?")
    s.add_argument("file")
    s.add_argument("lhs")
    s.add_argument("rhs")
    s.set_defaults(func=cmd_equal)

    s = sub.add_parser("quotient-basis", parents=[common], help="irreducible monomials up to a length")
    s.add_argument("file")
    # --max-len bounds the enumeration here, not the completion
    s.add_argument("--max-len", dest="enum_len", type=int, required=True)
    s.add_argument("--max-relations", type=int)
    s.set_defaults(func=cmd_quotient_basis)

    s = sub.add_parser("autocheck", parents=[common, limits], help="is the endomorphism an automorphism?")
    s.add_argument("file")
    s.set_defaults(func=cmd_autocheck)

    s = sub.add_parser("axioms", parents=[common], help="exhaustive check of the multiplication table")
    s.add_argument("--generators", type=int, required=True)
    s.add_argument("--char", type=int, required=True, help="0 for Q, or a prime p")
    s.add_argument("--max-len", type=int, required=True)
    s.set_defaults(func=cmd_axioms)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = args.json or args.json_global
    out = _Out(args.json)
    try:
        return args.func(args, out)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LimitExceeded as exc:
        print(f"limit exceeded: {exc} (partial basis has {len(exc.basis)} relations)", file=sys.stderr)
        if args.json:
            print(json.dumps({"limit_exceeded": str(exc), "partial_relations": len(exc.basis)}))
        return EXIT_LIMIT


def run() -> None:
    sys.exit(main())
