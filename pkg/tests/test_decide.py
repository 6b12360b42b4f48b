import pytest

from metapoisson.algebra import Algebra
from metapoisson.basis import Alphabet, enumerate_monomials
from metapoisson.coeff import field_make, rationals
from metapoisson.decide import (
    NO,
    UNDECIDED,
    YES,
    Endomorphism,
    Presentation,
    are_equal,
    check_automorphism,
    is_zero_in_quotient,
    quotient_basis,
    relation_set,
)
from metapoisson.gsb import Limits
from metapoisson.linalg import determinant

from conftest import ENDOMORPHISMS, load, random_poly

a, b, c = 0, 1, 2


def test_membership_examples():
    p = Presentation.of("a<b", rationals(), ["(b,a)*b - a"])
    A = p.algebra
    assert is_zero_in_quotient(p.relations[0], p)
    res = is_zero_in_quotient(A.eval("a*a"), p)
    assert res.member and len(res.trace) >= 1
    free = Presentation.of("a<b", rationals())
    res = is_zero_in_quotient(A.gen("a"), free)
    assert not res and res.remainder == A.gen("a")


def test_equality_examples():
    p = Presentation.of("a<b", rationals(), ["(b,a)*b - a"])
    A = p.algebra
    f = A.eval("[b,a,b] + b*b")
    assert are_equal(f, f, p)
    assert not are_equal(A.gen("a"), A.zero(), Presentation.of("a<b", rationals()))
    assert are_equal(A.eval("a*a"), A.zero(), p)
    assert not are_equal(A.gen("b"), A.zero(), p)


def test_quotient_basis_examples():
    p = Presentation.of("a", rationals())
    A = p.algebra
    assert [A.render(m) for m in quotient_basis(p, 3)] == ["a", "a*a", "a*a*a"]
    assert quotient_basis(p, 0) == []
    q = Presentation.of("a<b", rationals(), ["a"])
    assert all(a not in m.letters for m in quotient_basis(q, 4))


def test_basis_is_computed_once():
    p = Presentation.of("a<b", rationals(), ["a*a"])
    assert p.basis() is p.basis()


def test_presentation_equality():
    p = Presentation.of("a<b", rationals(), ["a*a"])
    assert p == Presentation.of("a<b", rationals(), ["a*a"])
    assert p != Presentation.of("a<b", field_make(3), ["a*a"])


def test_determinant():
    Q, F5 = rationals(), field_make(5)
    assert determinant([], Q) == 1
    assert determinant([[2, 1], [1, 2]], Q) == 3
    assert determinant([[0, 1], [1, 0]], Q) == -1
    assert determinant([[1, 2], [2, 4]], Q) == 0
    assert determinant([[2, 1], [1, 3]], F5) == 0
    assert determinant([[0, 2, 1], [1, 0, 0], [0, 0, 3]], F5) == (-6) % 5
    with pytest.raises(ValueError):
        determinant([[1, 2]], Q)


def test_identity_is_automorphism():
    A = Algebra(Alphabet.of("a<b<c"), rationals())
    v = check_automorphism(Endomorphism(A, [A.gen(i) for i in range(3)]))
    assert v.status == YES and v.determinant == 1


def test_singular_linear_part():
    A = Algebra(Alphabet.of("a<b"), rationals())
    v = check_automorphism(Endomorphism(A, [A.eval("a*a"), A.gen("b")]))
    assert v.status == NO and v.determinant == 0 and "singular" in v.reason


def test_triangular_map_and_inverse():
    A = Algebra(Alphabet.of("a<b"), rationals())
    phi = Endomorphism(A, [A.gen("a"), A.eval("b + a*a")])
    assert A.eval("a*a") in relation_set(phi)
    assert check_automorphism(phi).status == YES
    psi = Endomorphism(A, [A.gen("a"), A.eval("b - a*a")])
    for g in (A.gen("a"), A.gen("b")):
        assert phi(psi(g)) == g and psi(phi(g)) == g


def test_endomorphism_needs_all_images():
    A = Algebra(Alphabet.of("a<b"), rationals())
    with pytest.raises(ValueError):
        Endomorphism(A, [A.gen("a")])


def test_limit_gives_undecided():
    A = Algebra(Alphabet.of("a<b<c"), rationals())
    phi = Endomorphism(A, [A.gen("a"), A.gen("b"), A.eval("c + b*b")])
    v = check_automorphism(phi, Limits(max_relations=2))
    assert v.status == UNDECIDED and v.basis is not None


INVERSES = {
    "auto_identity": ["a", "b"],
    "auto_triangular": ["a", "b - a*a"],
    "auto_triangular_gf2": ["a", "b", "c - [b,a]"],
    "auto_swap_gf3": ["b - a*a", "2*a"],
}


@pytest.mark.parametrize("name", ENDOMORPHISMS)
def test_endomorphism_files(name, rng):
    pf = load(name)
    phi = pf.endomorphism()
    A = phi.algebra
    v = check_automorphism(phi)
    if name in INVERSES:
        assert v.status == YES
        psi = Endomorphism(A, [A.eval(t) for t in INVERSES[name]])
        for _ in range(20):
            f = random_poly(A, rng, 5, terms=4)
            assert phi(psi(f)) == f and psi(phi(f)) == f
    else:
        assert v.status == NO and v.determinant == 0


def test_verdict_no_from_higher_part():
    # phi is injective on the linear part but b + [b,a] has no polynomial
    # inverse in the free algebra; the checker must not claim yes
    A = Algebra(Alphabet.of("a<b"), rationals())
    phi = Endomorphism(A, [A.gen("a"), A.eval("b + [b,a]")])
    v = check_automorphism(phi)
    assert v.status == NO and v.index == 1


def test_quotient_dimension_matches_reduction(rng):
    p = load("bracket_times_q").presentation
    A = p.algebra
    lrr = set(quotient_basis(p, 4))
    for m in enumerate_monomials(2, 0, 4):
        rem, _ = p.basis().reduce(A.mono(m))
        if m in lrr:
            assert rem == A.mono(m)
        else:
            assert all(x in lrr for x in rem.monomials())
