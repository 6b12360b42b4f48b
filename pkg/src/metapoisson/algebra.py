"""Arithmetic in the free metabelian Poisson algebra.

:class:`Algebra` holds the multiplication table for the commutative product
(``mul``) and the Poisson bracket (``bracket``) on canonical monomials.  Both
are extended bilinearly to :class:`Poly`.  Table entries are integer linear
combinations of canonical monomials; the characteristic only selects which
branch of the table applies and how integers map into the field.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

from .basis import (
    LIE,
    LIE_TIMES,
    PROD,
    Alphabet,
    Monomial,
    is_canonical,
    letter,
    lie,
    lie_times,
    prod,
    render_monomial,
)
from .coeff import Field, Scalar

LinComb = dict  # Monomial -> int, used inside the table


class Poly:
    """A finite linear combination of canonical monomials."""

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms: Mapping[Monomial, Scalar] | None = None):
        self.field = field
        self.terms: dict[Monomial, Scalar] = {}
        if terms:
            for m, c in terms.items():
                c = field(c)
                if c != 0:
                    self.terms[m] = c

    @classmethod
    def monomial(cls, field: Field, m: Monomial, c=1) -> "Poly":
        return cls(field, {m: c})

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field)

    def copy(self) -> "Poly":
        p = Poly(self.field)
        p.terms = dict(self.terms)
        return p

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __iter__(self) -> Iterator[tuple[Monomial, Scalar]]:
        """Terms in strictly descending monomial order."""
        for m in sorted(self.terms, reverse=True):
            yield m, self.terms[m]

    def monomials(self) -> list[Monomial]:
        return sorted(self.terms, reverse=True)

    def coeff(self, m: Monomial) -> Scalar:
        return self.terms.get(m, self.field.zero())

    # -- linear structure ----------------------------------------------
    def iadd_scaled(self, other: "Poly", c: Scalar) -> "Poly":
        """In-place ``self += c * other``."""
        F = self.field
        if c == 0:
            return self
        terms = self.terms
        for m, d in other.terms.items():
            v = F.add(terms.get(m, 0), F.mul(c, d))
            if v == 0:
                terms.pop(m, None)
            else:
                terms[m] = v
        return self

    def __add__(self, other: "Poly") -> "Poly":
        return self.copy().iadd_scaled(other, self.field.one())

    def __sub__(self, other: "Poly") -> "Poly":
        return self.copy().iadd_scaled(other, self.field.minus_one())

    def __neg__(self) -> "Poly":
        return self.scale(self.field.minus_one())

    def scale(self, c: Scalar) -> "Poly":
        F = self.field
        c = F(c)
        p = Poly(F)
        if c != 0:
            p.terms = {m: F.mul(c, d) for m, d in self.terms.items()}
        return p

    # -- leading data --------------------------------------------------
    def leading(self) -> tuple[Monomial, Scalar]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        m = max(self.terms)
        return m, self.terms[m]

    @property
    def lm(self) -> Monomial:
        return self.leading()[0]

    @property
    def lc(self) -> Scalar:
        return self.leading()[1]

    def make_monic(self) -> "Poly":
        return self.scale(self.field.inv(self.lc))

    def is_monic(self) -> bool:
        return bool(self.terms) and self.lc == 1

    def max_length(self) -> int:
        return max((m.length for m in self.terms), default=0)

    def min_length(self) -> int:
        return min((m.length for m in self.terms), default=0)

    def linear_part(self) -> "Poly":
        """Terms of length one."""
        p = Poly(self.field)
        p.terms = {m: c for m, c in self.terms.items() if m.length == 1}
        return p

    def higher_part(self) -> "Poly":
        """Terms of length at least two."""
        p = Poly(self.field)
        p.terms = {m: c for m, c in self.terms.items() if m.length >= 2}
        return p

    def truncate(self, max_len: int) -> "Poly":
        p = Poly(self.field)
        p.terms = {m: c for m, c in self.terms.items() if m.length <= max_len}
        return p

    def render(self, alphabet: Alphabet) -> str:
        return render_poly(self, alphabet)

    def __repr__(self):
        return f"Poly({self.field}, {dict(self)})"


def _render_coeff(F: Field, c: Scalar) -> tuple[str, str]:
    """Return (sign, magnitude) where magnitude is '' for unit coefficients."""
    if F.is_rational:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        return sign, "" if mag == 1 else str(mag)
    return "+", "" if c == 1 else str(c)


def render_poly(f: Poly, alphabet: Alphabet) -> str:
    if not f:
        return "0"
    parts = []
    for i, (m, c) in enumerate(f):
        sign, mag = _render_coeff(f.field, c)
        body = render_monomial(m, alphabet)
        if mag:
            body = f"{mag}*{body}"
        if i == 0:
            parts.append(("-" if sign == "-" else "") + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


# ---------------------------------------------------------------------------
# table helpers (integer combinations)


def _acc(acc: LinComb, m: Monomial, c: int) -> None:
    v = acc.get(m, 0) + c
    if v:
        acc[m] = v
    else:
        acc.pop(m, None)


def _acc_all(acc: LinComb, other: LinComb, c: int = 1) -> None:
    for m, d in other.items():
        _acc(acc, m, c * d)


def _letters_bracket(b: int, a: int) -> LinComb:
    if b > a:
        return {lie(b, a): 1}
    if b < a:
        return {lie(a, b): -1}
    return {}


def _lie_bracket_letter(w: tuple[int, ...], a: int) -> LinComb:
    """``{[a1,...,an], a}`` for a canonical Lie word with ``n >= 2``."""
    a1, a2, rest = w[0], w[1], w[2:]
    if a >= a2:
        return {lie(a1, a2, *sorted(rest + (a,))): 1}
    out: LinComb = {}
    _acc(out, lie(a1, a, a2, *rest), 1)
    _acc(out, lie(a2, a, *sorted((a1,) + rest)), -1)
    return out


def _times_sorted(a1: int, a2: int, rest: Iterable[int]) -> Monomial:
    """``[a1, a2, d1, ..., d_{k-1}] * d_k`` with ``d`` the sorted ``rest``."""
    d = sorted(rest)
    return lie_times((a1, a2, *d[:-1]), d[-1])


def _formal_times(comb: LinComb, x: int) -> LinComb:
    """Attach ``* x`` to every Lie word of ``comb`` without evaluating."""
    return {lie_times(m.letters, x): c for m, c in comb.items()}


class Algebra:
    """The free metabelian Poisson algebra on ``alphabet`` over ``field``."""

    def __init__(self, alphabet: Alphabet, field: Field):
        self.alphabet = alphabet
        self.field = field
        self.char2 = field.characteristic == 2
        self._mul_cache: dict = {}
        self._br_cache: dict = {}

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    def __repr__(self):
        return f"Algebra({self.alphabet}, {self.field})"

    # -- element construction ------------------------------------------
    def zero(self) -> Poly:
        return Poly(self.field)

    def gen(self, name_or_ordinal) -> Poly:
        a = name_or_ordinal if isinstance(name_or_ordinal, int) else self.alphabet.index(name_or_ordinal)
        return Poly.monomial(self.field, letter(a))

    def mono(self, m: Monomial, c=1) -> Poly:
        return Poly.monomial(self.field, m, c)

    def poly(self, comb: Mapping[Monomial, int]) -> Poly:
        return Poly(self.field, comb)

    def render(self, f: Poly | Monomial) -> str:
        if isinstance(f, Monomial):
            return render_monomial(f, self.alphabet)
        return render_poly(f, self.alphabet)

    # -- the table on monomials ----------------------------------------
    def mul_basis(self, w1: Monomial, w2: Monomial) -> LinComb:
        key = (w1, w2) if w1 <= w2 else (w2, w1)
        hit = self._mul_cache.get(key)
        if hit is None:
            hit = self._mul(*key)
            self._mul_cache[key] = hit
        return hit

    def bracket_basis(self, w1: Monomial, w2: Monomial) -> LinComb:
        key = (w1, w2)
        hit = self._br_cache.get(key)
        if hit is None:
            hit = self._bracket(w1, w2)
            self._br_cache[key] = hit
        return hit

    def _mul(self, w1: Monomial, w2: Monomial) -> LinComb:
        if w1.length >= 2 and w2.length >= 2:
            return {}
        if w1.length == 1 and w2.length == 1:
            return {prod(w1.head, w2.head): 1}
        w, a = (w1, w2.head) if w2.length == 1 else (w2, w1.head)
        return self.mul_letter(w, a)

    def mul_letter(self, w: Monomial, a: int) -> LinComb:
        """``w ∘ a`` for a monomial of length at least two."""
        kind, n, x = w.kind, w.length, w.letters
        if kind == PROD:
            return {prod(*x, a): 1} if n == 2 else {}
        if kind == LIE_TIMES:
            return {}
        if n == 2:
            return {lie_times(x, a): 1}
        if self.char2:
            return self._mul_lie_char2(x, a)
        if n == 3:
            return self._mul_lie3(x, a)
        return {}

    def _mul_lie_char2(self, x: tuple[int, ...], a: int) -> LinComb:
        a1, a2, rest = x[0], x[1], x[2:]
        if a >= a2:
            return {_times_sorted(a1, a2, rest + (a,)): 1}
        out: LinComb = {}
        _acc(out, lie_times((a1, a, a2, *rest[:-1]), rest[-1]), 1)
        _acc(out, _times_sorted(a2, a, (a1,) + rest), -1)
        return out

    def _bracket3(self, x: int, y: int, z: int) -> LinComb:
        """``{{x, y}, z}`` for letters."""
        out: LinComb = {}
        for m, c in _letters_bracket(x, y).items():
            _acc_all(out, _lie_bracket_letter(m.letters, z), c)
        return out

    def _mul_lie3(self, x: tuple[int, ...], a: int) -> LinComb:
        """``[a1,a2,a3] ∘ a`` outside characteristic two.

        The largest letter is moved outside the brackets.
        """
        a1, a2, a3 = x
        if a == a3:
            return {}
        if a > a3:
            if a >= a1:
                return {lie_times(x, a): 1}
            return _formal_times(self._bracket3(a, a3, a2), a1)
        # a < a3
        if a3 < a1:
            return _formal_times(self._bracket3(a, a3, a2), a1)
        if a3 > a1:
            return {m: -c for m, c in _formal_times(self._bracket3(a1, a2, a), a3).items()}
        # a3 == a1 > a
        if a >= a2:
            return {lie_times((a3, a2, a), a1): -1}
        return {lie_times((a3, a, a2), a1): -1}

    def _bracket(self, w1: Monomial, w2: Monomial) -> LinComb:
        if w1.length >= 2 and w2.length >= 2:
            return {}
        if w1.length == 1 and w2.length == 1:
            return _letters_bracket(w1.head, w2.head)
        if w1.length == 1:
            return {m: -c for m, c in self.bracket_letter(w2, w1.head).items()}
        return self.bracket_letter(w1, w2.head)

    def bracket_letter(self, w: Monomial, a: int) -> LinComb:
        """``{w, a}`` for a monomial of length at least two."""
        kind, n, x = w.kind, w.length, w.letters
        if kind == LIE:
            return _lie_bracket_letter(x, a)
        if kind == PROD:
            if n == 3:
                return {}
            a1, a2 = x
            out: LinComb = {}
            _acc_all(out, _formal_times(_letters_bracket(a1, a), a2))
            _acc_all(out, _formal_times(_letters_bracket(a2, a), a1))
            return out
        # LIE_TIMES
        if n == 3:
            out = {}
            for m, c in _lie_bracket_letter(x[:2], a).items():
                _acc_all(out, self.mul_letter(m, x[2]), c)
            return out
        if not self.char2:
            return {}
        a1, a2, rest = x[0], x[1], x[2:]
        if a >= a2:
            return {_times_sorted(a1, a2, rest + (a,)): 1}
        out = {}
        _acc(out, lie_times((a1, a) + x[1:-1], x[-1]), 1)
        _acc(out, _times_sorted(a2, a, rest + (a1,)), -1)
        return out

    # -- bilinear extension --------------------------------------------
    def _extend(self, f: Poly, g: Poly, table) -> Poly:
        F = self.field
        out = Poly(F)
        terms = out.terms
        for m1, c1 in f.terms.items():
            for m2, c2 in g.terms.items():
                if m1.length >= 2 and m2.length >= 2:
                    continue
                comb = table(m1, m2)
                if not comb:
                    continue
                c = F.mul(c1, c2)
                for m, k in comb.items():
                    v = F.add(terms.get(m, 0), F.mul(c, F(k)))
                    if v == 0:
                        terms.pop(m, None)
                    else:
                        terms[m] = v
        return out

    def mul(self, f: Poly, g: Poly) -> Poly:
        return self._extend(f, g, self.mul_basis)

    def bracket(self, f: Poly, g: Poly) -> Poly:
        return self._extend(f, g, self.bracket_basis)

    def mul_by_letter(self, f: Poly, a: int) -> Poly:
        return self.mul(f, self.gen(a))

    def bracket_by_letter(self, f: Poly, a: int) -> Poly:
        return self.bracket(f, self.gen(a))

    def left_normed(self, f: Poly, letters: Sequence[int]) -> Poly:
        """``[f, a1, ..., an]``: bracket with each letter in turn."""
        for a in letters:
            if not f:
                break
            f = self.bracket(f, self.gen(a))
        return f

    def product_all(self, factors: Sequence[Poly]) -> Poly:
        out = factors[0]
        for g in factors[1:]:
            out = self.mul(out, g)
        return out

    def left_normed_all(self, factors: Sequence[Poly]) -> Poly:
        out = factors[0]
        for g in factors[1:]:
            out = self.bracket(out, g)
        return out

    # -- expressions and substitution ----------------------------------
    def monomial_value(self, m: Monomial, images: Sequence[Poly]) -> Poly:
        """Image of ``m`` under the homomorphism sending letter ``i`` to ``images[i]``."""
        kind, x = m.kind, m.letters
        if kind == PROD:
            return self.product_all([images[i] for i in x])
        if kind == LIE:
            return self.left_normed_all([images[i] for i in x])
        return self.mul(self.left_normed_all([images[i] for i in x[:-1]]), images[x[-1]])

    def substitute(self, f: Poly, images: Sequence[Poly]) -> Poly:
        out = self.zero()
        for m, c in f.terms.items():
            out.iadd_scaled(self.monomial_value(m, images), c)
        return out

    def eval(self, expr) -> Poly:
        """Evaluate an expression tree or string into canonical form."""
        from .expr import evaluate, parse_expr

        if isinstance(expr, str):
            expr = parse_expr(expr)
        return evaluate(expr, self)

    def parse(self, text: str) -> Poly:
        return self.eval(text)

    def check_canonical(self, f: Poly) -> bool:
        return all(is_canonical(m, self.characteristic) for m in f.terms)


def leading(f: Poly) -> tuple[Monomial, Scalar]:
    return f.leading()


def make_monic(f: Poly) -> Poly:
    return f.make_monic()
