"""Free metabelian Poisson algebras: canonical basis, multiplication table,
Gröbner–Shirshov completion, the word problem and an automorphism check."""

from .algebra import Algebra, Poly
from .basis import Alphabet, Monomial, enumerate_monomials, lie, lie_times, letter, prod
from .coeff import Field, FieldError, field_make, prime_field, rationals
from .decide import (
    Endomorphism,
    Presentation,
    are_equal,
    check_automorphism,
    is_zero_in_quotient,
    quotient_basis,
)
from .expr import ParseError
from .gsb import GsbBasis, LimitExceeded, Limits, complete, minimalize, reduce
from .oracle import truncated_member, verify_axioms
from .presfile import parse_presentation, render_presentation

__all__ = [
    "Algebra", "Poly", "Alphabet", "Monomial", "enumerate_monomials", "lie", "lie_times", "letter", "prod",
    "Field", "FieldError", "field_make", "prime_field", "rationals",
    "Endomorphism", "Presentation", "are_equal", "check_automorphism", "is_zero_in_quotient", "quotient_basis",
    "ParseError", "GsbBasis", "LimitExceeded", "Limits", "complete", "minimalize", "reduce",
    "truncated_member", "verify_axioms", "parse_presentation", "render_presentation",
]
