"""Plain-text presentation files.

::

    # comments start with '#'
    field: GF(2)
    generators: a < b
    relations:
      {b,a}*b - a
      [b,a,a] = a*b*b        # 'lhs = rhs' means lhs - rhs
    queries:
      q1: a*a

Endomorphism files add one ``phi(x) = expr`` line per generator.  Basis
files written by ``complete`` carry a ``flags:`` line and parse back as
presentations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .algebra import Algebra, Poly
from .basis import Alphabet
from .coeff import FieldError, field_make, rationals
from .decide import Endomorphism, Presentation
from .expr import ParseError, evaluate, parse_expr

_HEADER = re.compile(r"^(field|generators|relations|queries|flags)\s*:(.*)$")
_PHI = re.compile(r"^phi\s*\(\s*([A-Za-z_][A-Za-z0-9_']*)\s*\)\s*=(.*)$")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")
_QUERY = re.compile(r"^([A-Za-z_][A-Za-z0-9_']*)\s*:(.*)$")


@dataclass
class PresentationFile:
    presentation: Presentation
    images: dict[str, Poly] = dc_field(default_factory=dict)
    flags: tuple[str, ...] = ()

    def endomorphism(self) -> Endomorphism:
        A = self.presentation.algebra
        missing = [n for n in A.alphabet.names if n not in self.images]
        if missing:
            raise ParseError(f"no image given for generator {missing[0]!r}")
        return Endomorphism(A, [self.images[n] for n in A.alphabet.names])


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def _eval_at(text: str, algebra: Algebra, lineno: int, col: int) -> Poly:
    if "=" in text:
        lhs, rhs = text.split("=", 1)
        left = evaluate(parse_expr(lhs, lineno, col), algebra, lineno, col)
        col2 = col + len(lhs) + 1
        right = evaluate(parse_expr(rhs, lineno, col2), algebra, lineno, col2)
        return left - right
    return evaluate(parse_expr(text, lineno, col), algebra, lineno, col)


def parse_generators(text: str, lineno: int = 1, col: int = 1) -> Alphabet:
    parts = [p.strip() for p in text.split("<")]
    for p in parts:
        if not _NAME.match(p):
            raise ParseError(f"bad generator name {p!r} (declare the order as 'a < b < c')", lineno, col)
    seen = set()
    for p in parts:
        if p in seen:
            raise ParseError(f"duplicate generator {p!r}", lineno, col)
        seen.add(p)
    return Alphabet(tuple(parts))


def parse_file(text: str) -> PresentationFile:
    field = None
    alphabet = None
    algebra = None
    section = None
    relations: list[Poly] = []
    queries: dict[str, Poly] = {}
    images: dict[str, Poly] = {}
    flags: tuple[str, ...] = ()

    def need_algebra(lineno):
        nonlocal algebra
        if alphabet is None:
            raise ParseError("expressions before the 'generators:' line", lineno, 1)
        if algebra is None:
            algebra = Algebra(alphabet, field or rationals())
        return algebra

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        body = line.strip()
        col = indent + 1
        m = _HEADER.match(body)
        if m:
            key, rest = m.group(1), m.group(2)
            vcol = col + m.start(2) + (len(rest) - len(rest.lstrip()))
            rest = rest.strip()
            if key == "field":
                if algebra is not None or field is not None:
                    raise ParseError("field declared twice or after expressions", lineno, col)
                try:
                    field = field_make(rest)
                except FieldError as exc:
                    raise ParseError(str(exc), lineno, vcol) from None
                section = None
            elif key == "generators":
                if alphabet is not None:
                    raise ParseError("generators declared twice", lineno, col)
                alphabet = parse_generators(rest, lineno, vcol)
                section = None
            elif key == "flags":
                flags = tuple(rest.split())
                section = None
            else:
                section = key
                if rest:
                    _section_line(key, rest, need_algebra(lineno), lineno, vcol, relations, queries)
            continue
        pm = _PHI.match(body)
        if pm:
            A = need_algebra(lineno)
            name = pm.group(1)
            if name not in A.alphabet.names:
                raise ParseError(f"unknown generator {name!r}", lineno, col)
            if name in images:
                raise ParseError(f"image of {name!r} given twice", lineno, col)
            images[name] = evaluate(parse_expr(pm.group(2), lineno, col + pm.start(2)), A, lineno, col + pm.start(2))
            continue
        if section is None:
            raise ParseError(f"line outside any section: {body!r}", lineno, col)
        _section_line(section, body, need_algebra(lineno), lineno, col, relations, queries)

    if alphabet is None:
        raise ParseError("missing 'generators:' line", 1, 1)
    A = need_algebra(1)
    pres = Presentation(A, [r for r in relations if r], queries)
    return PresentationFile(pres, images, flags)


def _section_line(section, body, A, lineno, col, relations, queries):
    if section == "relations":
        relations.append(_eval_at(body, A, lineno, col))
    else:
        qm = _QUERY.match(body)
        if not qm:
            raise ParseError("queries are written 'name: expr'", lineno, col)
        name = qm.group(1)
        if name in queries:
            raise ParseError(f"duplicate query name {name!r}", lineno, col)
        queries[name] = _eval_at(qm.group(2), A, lineno, col + qm.start(2))


def parse_presentation(text: str) -> Presentation:
    return parse_file(text).presentation


def render_presentation(p: Presentation) -> str:
    A = p.algebra
    lines = [f"field: {A.field}", f"generators: {A.alphabet}", "relations:"]
    lines += [f"  {A.render(r)}" for r in p.relations]
    if p.queries:
        lines.append("queries:")
        lines += [f"  {name}: {A.render(q)}" for name, q in p.queries.items()]
    return "\n".join(lines) + "\n"
