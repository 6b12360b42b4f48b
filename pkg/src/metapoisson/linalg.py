"""Exact linear algebra over a :class:`~metapoisson.coeff.Field`."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .algebra import Poly
from .coeff import Field, Scalar


def _bareiss(rows: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def determinant(matrix: Sequence[Sequence[Scalar]], field: Field) -> Scalar:
    n = len(matrix)
    if n == 0:
        return field.one()
    if any(len(r) != n for r in matrix):
        raise ValueError("determinant of a non-square matrix")
    if field.is_rational:
        scale = Fraction(1)
        rows = []
        for r in matrix:
            d = lcm(*(Fraction(x).denominator for x in r))
            rows.append([int(Fraction(x) * d) for x in r])
            scale /= d
        return Fraction(_bareiss(rows)) * scale
    # modular elimination
    p = field.p
    m = [[x % p for x in r] for r in matrix]
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det = det * m[k][k] % p
        inv = pow(m[k][k], -1, p)
        for i in range(k + 1, n):
            f = m[i][k] * inv % p
            if f:
                for j in range(k, n):
                    m[i][j] = (m[i][j] - f * m[k][j]) % p
    return det % p


class SpanMatrix:
    """Row space of polynomials, kept in reduced row-echelon form.

    Rows are sparse coordinate vectors (``Poly`` objects) indexed by their
    pivot, the largest monomial of the row; pivots are eliminated from every
    other row.
    """

    def __init__(self, field: Field):
        self.field = field
        self.rows: dict = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def rank_upto(self, length: int) -> int:
        """Dimension of the rows supported in lengths ``<= length``.

        Pivots are leading monomials and the order compares length first, so
        a row lives in lengths ``<= length`` exactly when its pivot does.
        """
        return sum(1 for piv in self.rows if piv.length <= length)

    def _reduce(self, v: Poly) -> Poly:
        F = self.field
        v = v.copy()
        for piv in sorted(set(v.terms) & self.rows.keys(), reverse=True):
            c = v.terms.get(piv)
            if c:
                v.iadd_scaled(self.rows[piv], F.neg(c))
        return v

    def insert(self, v: Poly) -> bool:
        """Add ``v``; return whether it enlarged the row space."""
        F = self.field
        v = self._reduce(v)
        if not v:
            return False
        v = v.make_monic()
        piv = v.lm
        for key, row in self.rows.items():
            c = row.terms.get(piv)
            if c:
                row.iadd_scaled(v, F.neg(c))
        self.rows[piv] = v
        return True

    def contains(self, v: Poly) -> bool:
        return not self._reduce(v)
