"""Canonical monomials of the free metabelian Poisson algebra.

A monomial is stored as its weight ``(length, brackets, letters)``.  The
weight is injective on canonical monomials, so the tuple is both the
identity of the monomial and its sort key: plain tuple comparison is the
monomial order.

Three shapes occur:

* Lie words ``[a1,...,an]`` (left-normed; ``n == 1`` is a bare letter),
* short commutative products ``a1*a2`` and ``a1*a2*a3``,
* a Lie word times a letter, ``[a1,...,a_{n-1}]*a_n``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Iterator, NamedTuple, Sequence

LIE = "lie"
PROD = "prod"
LIE_TIMES = "lie_times"


class Monomial(NamedTuple):
    length: int
    pb: int
    letters: tuple[int, ...]

    @property
    def kind(self) -> str:
        if self.pb == self.length - 1:
            return LIE
        if self.pb == 0:
            return PROD
        return LIE_TIMES

    @property
    def head(self) -> int:
        return self.letters[0]

    @property
    def tail(self) -> tuple[int, ...]:
        """Letters after the head, as a sorted tuple (a multiset)."""
        return tuple(sorted(self.letters[1:]))

    @property
    def bracket(self) -> tuple[int, ...]:
        """The bracketed part of a ``LIE_TIMES`` monomial."""
        return self.letters[:-1]

    @property
    def times(self) -> int:
        return self.letters[-1]


def lie(*letters: int) -> Monomial:
    n = len(letters)
    if n == 0:
        raise ValueError("empty Lie word")
    return Monomial(n, n - 1, tuple(letters))


def letter(a: int) -> Monomial:
    return Monomial(1, 0, (a,))


def prod(*letters: int) -> Monomial:
    n = len(letters)
    if n not in (2, 3):
        raise ValueError("products have two or three letters")
    return Monomial(n, 0, tuple(sorted(letters)))


def lie_times(bracket: Sequence[int], x: int) -> Monomial:
    n = len(bracket) + 1
    if n < 3:
        raise ValueError("bracket part needs at least two letters")
    return Monomial(n, n - 2, tuple(bracket) + (x,))


def sort_tail(letters: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(letters))


@dataclass(frozen=True)
class Alphabet:
    """A finite well-ordered alphabet; ordinals follow declaration order."""

    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate generator in {self.names}")
        if not self.names:
            raise ValueError("alphabet must be nonempty")

    @classmethod
    def of(cls, names) -> "Alphabet":
        if isinstance(names, str):
            names = [n.strip() for n in names.replace("<", " ").replace(",", " ").split()]
        return cls(tuple(names))

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(range(len(self.names)))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None

    def name(self, ordinal: int) -> str:
        return self.names[ordinal]

    def __str__(self):
        return " < ".join(self.names)


def weight(m: Monomial) -> tuple:
    """``(length, number of brackets, a1, ..., an)``."""
    return (m.length, m.pb) + m.letters


def compare(m1: Monomial, m2: Monomial) -> int:
    return (m1 > m2) - (m1 < m2)


def _nondecreasing(seq) -> bool:
    return all(x <= y for x, y in zip(seq, seq[1:]))


def is_canonical(m: Monomial, char: int) -> bool:
    """Membership of ``m`` in the characteristic-dependent basis set."""
    a = m.letters
    n = m.length
    if n != len(a) or n < 1:
        return False
    kind = m.kind
    if kind == LIE:
        return n == 1 or (a[0] > a[1] and _nondecreasing(a[1:]))
    if kind == PROD:
        return n in (2, 3) and _nondecreasing(a)
    # LIE_TIMES
    if m.pb != n - 2 or n < 3:
        return False
    if n == 3:
        return a[0] > a[1]
    if char != 2:
        if n != 4:
            return False
        a1, a2, a3, a4 = a
        return a2 < a1 <= a4 and a2 <= a3 < a4
    return a[0] > a[1] and _nondecreasing(a[1:])


def validate(m: Monomial, char: int, alphabet_size: int | None = None) -> bool:
    if alphabet_size is not None:
        bad = [x for x in m.letters if not 0 <= x < alphabet_size]
        if bad:
            raise KeyError(f"letter ordinal {bad[0]} outside alphabet")
    return is_canonical(m, char)


def _lie_words(k: int, n: int) -> Iterator[Monomial]:
    if n == 1:
        for x in range(k):
            yield letter(x)
        return
    for head in range(k):
        for tail in combinations_with_replacement(range(k), n - 1):
            if head > tail[0]:
                yield lie(head, *tail)


def enumerate_monomials(k: int, char: int, max_len: int, min_len: int = 1) -> list[Monomial]:
    """All canonical monomials over ``k`` letters with ``min_len <= length <= max_len``, ascending."""
    out: list[Monomial] = []
    for n in range(max(min_len, 1), max_len + 1):
        out.extend(_lie_words(k, n))
        if n in (2, 3):
            out.extend(prod(*c) for c in combinations_with_replacement(range(k), n))
        if n == 3:
            out.extend(lie_times((x, y), z) for x, y, z in product(range(k), repeat=3) if x > y)
        elif n == 4 and char != 2:
            for a1, a2, a3, a4 in product(range(k), repeat=4):
                if a2 < a1 <= a4 and a2 <= a3 < a4:
                    out.append(lie_times((a1, a2, a3), a4))
        elif n >= 4 and char == 2:
            for m in _lie_words(k, n):
                out.append(lie_times(m.letters[:-1], m.letters[-1]))
    out.sort()
    return out


class TailMultiset(Counter):
    """Multiset of letters with containment, difference and lcm."""

    @classmethod
    def of(cls, m: Monomial) -> "TailMultiset":
        return cls(m.letters[1:])

    def contains(self, other: "TailMultiset") -> bool:
        return all(self[x] >= c for x, c in other.items())

    def minus(self, other: "TailMultiset") -> tuple[int, ...]:
        return tuple(sorted((self - other).elements()))

    def lcm(self, other: "TailMultiset") -> "TailMultiset":
        return TailMultiset(self | other)


def render_monomial(m: Monomial, alphabet: Alphabet) -> str:
    names = [alphabet.name(x) for x in m.letters]
    kind = m.kind
    if kind == LIE:
        return names[0] if m.length == 1 else "[" + ",".join(names) + "]"
    if kind == PROD:
        return "*".join(names)
    return "[" + ",".join(names[:-1]) + "]*" + names[-1]
