"""Gröbner–Shirshov bases for metabelian Poisson algebras.

A relation ``s`` with leading monomial of length at least five has normal
multiples ``[s, a1, ..., an]``; their leading monomial keeps the head letter
of ``lm(s)`` and adds the letters ``a1..an`` to its tail multiset.  Shorter
relations only reduce their own leading monomial exactly; their power to
generate the ideal comes back through the extra multiplication
compositions ``(s, a)``.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterable, Iterator, Sequence

from .algebra import Algebra, Poly
from .basis import LIE, LIE_TIMES, Monomial, TailMultiset, enumerate_monomials, lie, lie_times
from .coeff import Scalar

log = logging.getLogger(__name__)

MIN_DIVISOR_LENGTH = 5

INPUT = "input"
MULT = "mult-composition"
GENERAL = "general-composition"


class LimitExceeded(RuntimeError):
    """Completion stopped by an operational limit; ``basis`` holds the partial state."""

    def __init__(self, message: str, basis: "GsbBasis"):
        super().__init__(message)
        self.basis = basis


@dataclass(frozen=True)
class Limits:
    max_relations: int = 5000
    max_leading_length: int = 64
    max_steps: int = 1_000_000

    @classmethod
    def unbounded(cls) -> "Limits":
        inf = 1 << 62
        return cls(inf, inf, inf)


@dataclass(frozen=True, eq=False)
class Relation:
    poly: Poly
    id: int
    origin: str = INPUT

    @property
    def lm(self) -> Monomial:
        return self.poly.lm

    @property
    def divides_properly(self) -> bool:
        return self.lm.length >= MIN_DIVISOR_LENGTH


@dataclass(frozen=True)
class ReductionStep:
    relation: int
    letters: tuple[int, ...]
    coefficient: Scalar
    monomial: Monomial


@dataclass
class ReductionTrace:
    steps: list[ReductionStep] = dc_field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def replay(self, f: Poly, basis: "GsbBasis") -> Poly:
        """``f`` minus every recorded multiple; equals the remainder."""
        out = f.copy()
        for st in self.steps:
            h = basis.normal_multiple(basis.by_id[st.relation], st.letters)
            out.iadd_scaled(h, basis.field.neg(st.coefficient))
        return out


def _class_key(m: Monomial) -> tuple[str, int]:
    return (m.kind, m.head)


def shape(kind: str, head: int, tail: Iterable[int]) -> Monomial:
    """The canonical monomial of a form class with given head and tail multiset."""
    t = sorted(tail)
    if kind == LIE:
        return lie(head, *t)
    return lie_times((head, *t[:-1]), t[-1])


class GsbBasis:
    """Monic relations keyed by leading monomial."""

    def __init__(self, algebra: Algebra, relations: Iterable[Relation] = (), *, minimal=False, reduced=False):
        self.algebra = algebra
        self.relations: dict[Monomial, Relation] = {}
        self.by_id: dict[int, Relation] = {}
        self._classes: dict[tuple[str, int], list[Relation]] = {}
        self._nm_cache: dict[tuple[int, tuple[int, ...]], Poly] = {}
        self.complete = False
        self.minimal = minimal
        self.reduced = reduced
        for r in relations:
            self.add(r)

    @property
    def field(self):
        return self.algebra.field

    @property
    def alphabet(self):
        return self.algebra.alphabet

    def __len__(self):
        return len(self.relations)

    def __iter__(self) -> Iterator[Relation]:
        """Relations ascending by leading monomial."""
        for m in sorted(self.relations):
            yield self.relations[m]

    def __contains__(self, m: Monomial):
        return m in self.relations

    def add(self, r: Relation) -> None:
        if not r.poly or not r.poly.is_monic():
            raise ValueError("relations must be nonzero and monic")
        lm = r.lm
        if lm in self.relations:
            raise ValueError(f"duplicate leading monomial {self.algebra.render(lm)}")
        self.relations[lm] = r
        self.by_id[r.id] = r
        if r.divides_properly:
            self._classes.setdefault(_class_key(lm), []).append(r)

    def polys(self) -> list[Poly]:
        return [r.poly for r in self]

    # -- normal multiples and reducers --------------------------------
    def normal_multiple(self, s: Relation, letters: Sequence[int] = ()) -> Poly:
        return normal_multiple(s, letters, self.algebra, self._nm_cache)

    def find_reducer(self, w: Monomial, choose=None):
        return find_reducer(w, self, choose)

    def reduce(self, f: Poly, full: bool = True, choose=None):
        return reduce(f, self, full=full, choose=choose)

    def render(self) -> str:
        return render_basis(self)


def normal_multiple(s: Relation, letters: Sequence[int], algebra: Algebra, cache: dict | None = None) -> Poly:
    """``[s, a1, ..., an]``, checking the predicted leading monomial."""
    letters = tuple(letters)
    if not letters:
        return s.poly
    lm = s.lm
    if lm.length < MIN_DIVISOR_LENGTH:
        raise ValueError(
            f"normal multiples need a leading monomial of length >= {MIN_DIVISOR_LENGTH}, got {lm.length}"
        )
    if cache is not None:
        hit = cache.get((s.id, letters))
        if hit is not None:
            return hit
    h = algebra.left_normed(s.poly, letters)
    expected = shape(lm.kind, lm.head, lm.letters[1:] + letters)
    got, c = h.leading()
    if got != expected or c != 1:
        raise AssertionError(
            f"normal multiple leading {algebra.render(got)} (coeff {c}) != predicted {algebra.render(expected)}"
        )
    if cache is not None:
        cache[(s.id, letters)] = h
    return h


def find_reducer(w: Monomial, basis: GsbBasis, choose: Callable | None = None):
    """A relation ``s`` and letters with ``lm([s, letters]) == w``, or ``None``.

    ``choose`` picks among several candidates (default: smallest leading
    monomial); tests pass a random chooser to probe confluence.
    """
    candidates = []
    exact = basis.relations.get(w)
    if exact is not None:
        candidates.append((exact, ()))
    if w.length > MIN_DIVISOR_LENGTH and w.kind in (LIE, LIE_TIMES):
        group = basis._classes.get(_class_key(w))
        if group:
            tw = TailMultiset.of(w)
            for s in group:
                lm = s.lm
                if lm.length < w.length:
                    ts = TailMultiset.of(lm)
                    if tw.contains(ts):
                        candidates.append((s, tw.minus(ts)))
    if not candidates:
        return None
    if choose is not None and len(candidates) > 1:
        return choose(candidates)
    return candidates[0] if exact is not None else min(candidates, key=lambda c: c[0].lm)


def reduce(f: Poly, basis: GsbBasis, full: bool = True, choose=None) -> tuple[Poly, ReductionTrace]:
    """Normal form of ``f`` modulo the basis.

    Head-only mode stops at the first irreducible leading monomial; full
    mode sets irreducible terms aside and keeps reducing lower ones.
    """
    F = basis.field
    work = f.copy()
    rem = Poly(F)
    trace = ReductionTrace()
    while work:
        w, c = work.leading()
        hit = find_reducer(w, basis, choose)
        if hit is None:
            if not full:
                rem.iadd_scaled(work, F.one())
                break
            rem.terms[w] = c
            del work.terms[w]
            continue
        s, letters = hit
        h = basis.normal_multiple(s, letters)
        work.iadd_scaled(h, F.neg(c))
        trace.steps.append(ReductionStep(s.id, tuple(letters), c, w))
    return rem, trace


# -- compositions ------------------------------------------------------------


def mult_compositions(s: Relation | Poly, algebra: Algebra) -> list[Poly]:
    """``s*a``, ``s*(a1,a2)``, ``(s,(a1,a2))`` and, for short leadings, ``(s,a)``."""
    f = s.poly if isinstance(s, Relation) else s
    k = len(algebra.alphabet)
    out = [algebra.mul_by_letter(f, a) for a in range(k)]
    for a1 in range(k):
        for a2 in range(a1):
            w = algebra.mono(lie(a1, a2))
            out.append(algebra.mul(f, w))
            out.append(algebra.bracket(f, w))
    if f.lm.length <= 4:
        out.extend(algebra.bracket_by_letter(f, a) for a in range(k))
    return out


def _lcm_extras(m1: Monomial, m2: Monomial):
    t1, t2 = TailMultiset.of(m1), TailMultiset.of(m2)
    lcm = t1.lcm(t2)
    return lcm.minus(t1), lcm.minus(t2), shape(m1.kind, m1.head, lcm.elements())


def general_compositions(s1: Relation, s2: Relation, algebra: Algebra, cache: dict | None = None) -> Poly | None:
    """Difference of the two normal multiples sharing the lcm leading monomial."""
    m1, m2 = s1.lm, s2.lm
    if m1 == m2:
        d = s1.poly - s2.poly
        return d if d else None
    if not (s1.divides_properly and s2.divides_properly):
        return None
    if _class_key(m1) != _class_key(m2):
        return None
    e1, e2, target = _lcm_extras(m1, m2)
    h1 = normal_multiple(s1, e1, algebra, cache)
    h2 = normal_multiple(s2, e2, algebra, cache)
    if h1.lm != target or h2.lm != target:
        log.warning("skipping pair %s/%s: leadings do not meet at lcm", s1.id, s2.id)
        return None
    d = h1 - h2
    return d if d else None


# -- completion --------------------------------------------------------------


class _Completion:
    def __init__(self, algebra: Algebra, limits: Limits):
        self.algebra = algebra
        self.limits = limits
        self.basis = GsbBasis(algebra)
        self.heap: list = []
        self.seq = 0
        self.next_id = 0
        self.steps = 0

    def push(self, key: Monomial, item) -> None:
        heapq.heappush(self.heap, (key, self.seq, item))
        self.seq += 1

    def insert(self, f: Poly, origin: str) -> Relation | None:
        r, _ = reduce(f, self.basis)
        if not r:
            return None
        r = r.make_monic()
        lm = r.lm
        assert lm not in self.basis, "fully reduced remainder collides with a leading monomial"
        lim = self.limits
        if len(self.basis) >= lim.max_relations:
            raise LimitExceeded(f"more than {lim.max_relations} relations", self.basis)
        if lm.length > lim.max_leading_length:
            raise LimitExceeded(f"leading monomial longer than {lim.max_leading_length}", self.basis)
        rel = Relation(r, self.next_id, origin)
        self.next_id += 1
        self.basis.add(rel)
        self.push(lm, ("mult", rel.id))
        if rel.divides_properly:
            for other in self.basis._classes[_class_key(lm)]:
                if other.id != rel.id:
                    _, _, target = _lcm_extras(lm, other.lm)
                    self.push(target, ("pair", other.id, rel.id))
        return rel

    def run(self, relations: Sequence[Poly]) -> GsbBasis:
        for f in sorted((f for f in relations if f), key=lambda f: f.lm):
            self.insert(f, INPUT)
        by_id = self.basis.by_id
        while self.heap:
            self.steps += 1
            if self.steps > self.limits.max_steps:
                raise LimitExceeded(f"more than {self.limits.max_steps} completion steps", self.basis)
            _, _, item = heapq.heappop(self.heap)
            if item[0] == "mult":
                for g in mult_compositions(by_id[item[1]], self.algebra):
                    if g:
                        self.insert(g, MULT)
            else:
                g = general_compositions(by_id[item[1]], by_id[item[2]], self.algebra, self.basis._nm_cache)
                if g:
                    self.insert(g, GENERAL)
        self.basis.complete = True
        log.debug("completion: %d relations after %d steps", len(self.basis), self.steps)
        return self.basis


def complete(relations: Iterable[Poly], algebra: Algebra, limits: Limits | None = None) -> GsbBasis:
    """Complete ``relations`` to a Gröbner–Shirshov basis.

    Every multiplication and general composition of the result reduces to
    zero.  Raises :class:`LimitExceeded` (carrying the partial basis) if a
    limit is hit.
    """
    return _Completion(algebra, limits or Limits()).run(list(relations))


def minimalize(basis: GsbBasis) -> GsbBasis:
    """Drop relations whose leading monomial a smaller kept relation reduces,
    then reduce the tails of the survivors."""
    kept = GsbBasis(basis.algebra)
    for r in basis:
        if find_reducer(r.lm, kept) is None:
            kept.add(r)
    out = GsbBasis(basis.algebra, minimal=True, reduced=True)
    for r in kept:
        lm, _ = r.poly.leading()
        tail = r.poly.copy()
        del tail.terms[lm]
        rem, _ = reduce(tail, kept)
        rem.terms[lm] = basis.field.one()
        out.add(Relation(rem, r.id, r.origin))
    out.complete = basis.complete
    return out


def lrr_enumerate(basis: GsbBasis, max_len: int) -> list[Monomial]:
    """Irreducible canonical monomials of length at most ``max_len``, ascending."""
    if max_len < 1:
        return []
    A = basis.algebra
    return [
        m
        for m in enumerate_monomials(len(A.alphabet), A.characteristic, max_len)
        if find_reducer(m, basis) is None
    ]


def check_compositions(basis: GsbBasis) -> list[Poly]:
    """Remainders of all compositions that fail to reduce to zero."""
    A = basis.algebra
    bad = []
    rels = list(basis)
    for s in rels:
        for g in mult_compositions(s, A):
            r, _ = reduce(g, basis)
            if r:
                bad.append(r)
    for i, s1 in enumerate(rels):
        for s2 in rels[i + 1 :]:
            g = general_compositions(s1, s2, A)
            if g is not None:
                r, _ = reduce(g, basis)
                if r:
                    bad.append(r)
    return bad


def render_basis(basis: GsbBasis) -> str:
    A = basis.algebra
    flags = [name for name, on in (("complete", basis.complete), ("minimal", basis.minimal), ("reduced", basis.reduced)) if on]
    lines = [
        f"field: {A.field}",
        f"generators: {A.alphabet}",
        f"flags: {' '.join(flags) if flags else 'none'}",
        "relations:",
    ]
    lines += [f"  {A.render(r.poly)}" for r in basis]
    return "\n".join(lines) + "\n"
