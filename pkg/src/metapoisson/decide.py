"""Word problem and automorphism criterion for finite presentations."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .algebra import Algebra, Poly
from .basis import Alphabet, Monomial
from .coeff import Field
from .gsb import GsbBasis, Limits, LimitExceeded, ReductionTrace, complete, lrr_enumerate
from .linalg import determinant


@dataclass
class Presentation:
    """Generators, field and defining relations; owns one lazily completed basis."""

    algebra: Algebra
    relations: list[Poly] = dc_field(default_factory=list)
    queries: dict[str, Poly] = dc_field(default_factory=dict)
    limits: Limits = dc_field(default_factory=Limits)

    def __post_init__(self):
        self._basis: GsbBasis | None = None
        self._lock = threading.Lock()

    @classmethod
    def of(cls, generators, field: Field, relations: Sequence[str | Poly] = (), **kw) -> "Presentation":
        A = Algebra(generators if isinstance(generators, Alphabet) else Alphabet.of(generators), field)
        rels = [A.eval(r) if isinstance(r, str) else r for r in relations]
        return cls(A, [r for r in rels if r], **kw)

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def alphabet(self) -> Alphabet:
        return self.algebra.alphabet

    def basis(self) -> GsbBasis:
        with self._lock:
            if self._basis is None:
                self._basis = complete(self.relations, self.algebra, self.limits)
            return self._basis

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return (
            self.field == other.field
            and self.alphabet == other.alphabet
            and self.relations == other.relations
            and self.queries == other.queries
        )


@dataclass
class Membership:
    member: bool
    remainder: Poly
    trace: ReductionTrace

    def __bool__(self):
        return self.member


def is_zero_in_quotient(f: Poly, p: Presentation) -> Membership:
    """Does ``f`` vanish modulo the relations?  Certificate: trace or remainder."""
    rem, trace = p.basis().reduce(f)
    return Membership(not rem, rem, trace)


def are_equal(f: Poly, g: Poly, p: Presentation) -> Membership:
    return is_zero_in_quotient(f - g, p)


def quotient_basis(p: Presentation, max_len: int) -> list[Monomial]:
    return lrr_enumerate(p.basis(), max_len)


# -- endomorphisms -----------------------------------------------------------


@dataclass
class Endomorphism:
    """An endomorphism of the free algebra given by generator images."""

    algebra: Algebra
    images: list[Poly]

    def __post_init__(self):
        if len(self.images) != len(self.algebra.alphabet):
            raise ValueError("an endomorphism needs one image per generator")

    def linear_matrix(self) -> list[list]:
        """``gamma[i][j]`` = coefficient of generator ``j`` in the image of ``i``."""
        A = self.algebra
        return [[f.coeff(A.gen(j).lm) for j in A.alphabet] for f in self.images]

    def higher_parts(self) -> list[Poly]:
        return [f.higher_part() for f in self.images]

    def __call__(self, f: Poly) -> Poly:
        return self.algebra.substitute(f, self.images)


YES, NO, UNDECIDED = "yes", "no", "undecided"


@dataclass
class AutomorphismVerdict:
    status: str
    reason: str = ""
    index: int | None = None
    determinant: object = None
    basis: GsbBasis | None = None

    def __bool__(self):
        return self.status == YES


def relation_set(phi: Endomorphism) -> list[Poly]:
    """Brackets and products of image pairs ``i <= j``, without zeros or repeats."""
    A = phi.algebra
    out: list[Poly] = []
    seen = set()
    f = phi.images
    for i in range(len(f)):
        for j in range(i, len(f)):
            cands = [A.mul(f[i], f[j])]
            if i != j:
                cands.append(A.bracket(f[i], f[j]))
            for g in cands:
                if g and g not in seen:
                    seen.add(g)
                    out.append(g)
    return out


def check_automorphism(phi: Endomorphism, limits: Limits | None = None) -> AutomorphismVerdict:
    A = phi.algebra
    det = determinant(phi.linear_matrix(), A.field)
    if det == 0:
        return AutomorphismVerdict(NO, "singular linear part", determinant=det)
    S = relation_set(phi)
    try:
        basis = complete(S, A, limits)
    except LimitExceeded as exc:
        return AutomorphismVerdict(UNDECIDED, str(exc), determinant=det, basis=exc.basis)
    for m, g in enumerate(phi.higher_parts()):
        rem, _ = basis.reduce(g)
        if rem:
            return AutomorphismVerdict(
                NO, f"higher part of image {A.alphabet.name(m)} not in the ideal", index=m, determinant=det, basis=basis
            )
    return AutomorphismVerdict(YES, determinant=det, basis=basis)
