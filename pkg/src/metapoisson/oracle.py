"""Brute-force checks that do not depend on the completion machinery.

``verify_axioms`` tests the multiplication table against the Poisson and
metabelian identities on every tuple of basis monomials up to a total
length.  ``truncated_member`` decides membership in the length-``D``
truncation of an ideal by plain linear algebra: the ideal generated by
``S`` is the smallest subspace containing ``S`` that is closed under
``x -> x*a`` and ``x -> (x, a)`` for letters ``a``, and both actions raise
length by exactly one, so truncating at ``D`` commutes with them.

The truncated span is the projection of the ideal onto lengths ``<= D``,
which can be larger than the ideal's own length-``<= D`` part when the
relations are inhomogeneous: a truncated ideal element may have lost the
long terms that kept it out.  Truncating higher, at ``D + h``, and keeping
only the rows that live in lengths ``<= D`` shrinks the projection back.
``headroom`` picks ``h`` as the widest length spread among the relations;
that is a heuristic, exact for homogeneous relations and sufficient on
every inhomogeneous fixture tried.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Sequence

from .algebra import Algebra, Poly
from .basis import Alphabet, enumerate_monomials
from .coeff import Field, field_make
from .linalg import SpanMatrix

AXIOMS = (
    "canonical",
    "commutativity",
    "anticommutativity",
    "associativity",
    "jacobi",
    "leibniz",
    "metabelian",
)


@dataclass
class AxiomReport:
    alphabet: Alphabet
    field: Field
    max_total_len: int
    checked: dict = dc_field(default_factory=lambda: {k: 0 for k in AXIOMS})
    failed: dict = dc_field(default_factory=lambda: {k: 0 for k in AXIOMS})
    first_counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return not any(self.failed.values())

    def record(self, axiom: str, good: bool, describe) -> None:
        self.checked[axiom] += 1
        if not good:
            self.failed[axiom] += 1
            if self.first_counterexample is None:
                self.first_counterexample = f"{axiom}: {describe()}"

    def lines(self) -> list[str]:
        out = [f"axioms over {self.field}, generators {self.alphabet}, total length <= {self.max_total_len}"]
        for k in AXIOMS:
            status = "pass" if not self.failed[k] else "FAIL"
            out.append(f"  {k:18s} {status}  checked={self.checked[k]} failed={self.failed[k]}")
        if self.first_counterexample:
            out.append(f"first counterexample: {self.first_counterexample}")
        out.append("result: " + ("pass" if self.ok else "FAIL"))
        return out

    def as_dict(self) -> dict:
        return {
            "field": str(self.field),
            "generators": list(self.alphabet.names),
            "max_total_len": self.max_total_len,
            "checked": dict(self.checked),
            "failed": dict(self.failed),
            "first_counterexample": self.first_counterexample,
            "ok": self.ok,
        }


def verify_axioms(algebra: Algebra, max_total_len: int) -> AxiomReport:
    """Exhaustively check the table on monomial tuples of bounded total length."""
    if max_total_len < 3:
        raise ValueError("max_total_len must be at least 3")
    A = algebra
    R = lambda f: A.render(f)  # noqa: E731
    rep = AxiomReport(A.alphabet, A.field, max_total_len)
    mons = enumerate_monomials(len(A.alphabet), A.characteristic, max_total_len - 1)
    P = {m: A.mono(m) for m in mons}
    mul, br = A.mul, A.bracket

    for m1, m2 in product(mons, repeat=2):
        if m1.length + m2.length > max_total_len:
            continue
        u, v = P[m1], P[m2]
        uv, vu = mul(u, v), mul(v, u)
        b_uv, b_vu = br(u, v), br(v, u)
        rep.record("canonical", A.check_canonical(uv) and A.check_canonical(b_uv),
                   lambda: f"{R(u)} , {R(v)} gives a non-canonical term")
        rep.record("commutativity", uv == vu, lambda: f"{R(u)}*{R(v)} = {R(uv)} but {R(v)}*{R(u)} = {R(vu)}")
        rep.record("anticommutativity", b_uv == -b_vu and (m1 != m2 or not b_uv),
                   lambda: f"({R(u)},{R(v)}) = {R(b_uv)}, ({R(v)},{R(u)}) = {R(b_vu)}")
        if m1.length >= 2 and m2.length >= 2:
            rep.record("metabelian", not uv and not b_uv, lambda: f"{R(u)} , {R(v)} both in P^2 but product nonzero")

    for m1, m2, m3 in product(mons, repeat=3):
        if m1.length + m2.length + m3.length > max_total_len:
            continue
        u, v, w = P[m1], P[m2], P[m3]
        lhs, rhs = mul(mul(u, v), w), mul(u, mul(v, w))
        rep.record("associativity", lhs == rhs,
                   lambda: f"({R(u)}*{R(v)})*{R(w)} = {R(lhs)} != {R(rhs)}")
        jac = br(br(u, v), w) + br(br(v, w), u) + br(br(w, u), v)
        rep.record("jacobi", not jac, lambda: f"Jacobi on {R(u)}, {R(v)}, {R(w)} leaves {R(jac)}")
        l2 = br(mul(u, v), w)
        r2 = mul(br(u, w), v) + mul(br(v, w), u)
        rep.record("leibniz", l2 == r2,
                   lambda: f"({R(u)}*{R(v)}, {R(w)}) = {R(l2)} != {R(r2)}")
    return rep


def verify_axioms_for(n_generators: int, char: int, max_total_len: int) -> AxiomReport:
    names = tuple("abcdefghijklmnopqrstuvwxyz"[:n_generators]) if n_generators <= 26 else tuple(
        f"x{i}" for i in range(n_generators)
    )
    return verify_axioms(Algebra(Alphabet(names), field_make(char)), max_total_len)


def truncated_ideal(relations: Sequence[Poly], algebra: Algebra, max_len: int) -> SpanMatrix:
    """Row space of the ideal generated by ``relations``, truncated at ``max_len``."""
    span = SpanMatrix(algebra.field)
    queue = []
    for s in relations:
        t = s.truncate(max_len)
        if span.insert(t):
            queue.append(t)
    letters = list(algebra.alphabet)
    while queue:
        x = queue.pop()
        if x.min_length() >= max_len:
            continue
        for a in letters:
            g = algebra.gen(a)
            for y in (algebra.mul(x, g), algebra.bracket(x, g)):
                y = y.truncate(max_len)
                if y and span.insert(y):
                    queue.append(y)
    return span


def headroom(relations: Sequence[Poly]) -> int:
    return max((s.max_length() - s.min_length() for s in relations if s), default=0)


def truncated_member(
    f: Poly, relations: Sequence[Poly], algebra: Algebra, max_len: int, extra: int | None = None
) -> bool:
    """Is ``f`` in the ideal, judged at truncation ``max_len + extra``?

    ``extra`` defaults to :func:`headroom`; pass 0 for the plain projection.
    """
    if f and f.max_length() > max_len:
        raise ValueError(f"query longer than the truncation bound {max_len}")
    if extra is None:
        extra = headroom(relations)
    return truncated_ideal(relations, algebra, max_len + extra).contains(f)


def truncated_rank(relations: Sequence[Poly], algebra: Algebra, max_len: int, extra: int | None = None) -> int:
    """Dimension of the ideal's part in lengths ``<= max_len``, same caveat as above."""
    if extra is None:
        extra = headroom(relations)
    span = truncated_ideal(relations, algebra, max_len + extra)
    return span.rank_upto(max_len)
