import random

import pytest
from hypothesis import given, settings, strategies as st

from metapoisson.algebra import Algebra
from metapoisson.basis import Alphabet, enumerate_monomials, lie, prod
from metapoisson.coeff import field_make
from metapoisson.gsb import (
    GsbBasis,
    LimitExceeded,
    Limits,
    Relation,
    check_compositions,
    complete,
    find_reducer,
    general_compositions,
    lrr_enumerate,
    minimalize,
    mult_compositions,
    normal_multiple,
    reduce,
)

from conftest import PRESENTATIONS, load, random_poly

a, b, c = 0, 1, 2


def alg(char=0, gens="a<b<c"):
    return Algebra(Alphabet.of(gens), field_make(char))


def rel(A, text, id=0):
    return Relation(A.eval(text).make_monic(), id)


def test_normal_multiple_examples():
    A = alg(0)
    s = rel(A, "[b,a,a,a,a] - a*b")
    assert normal_multiple(s, (), A) == s.poly
    h = normal_multiple(s, (c,), A)
    assert h.lm == lie(b, a, a, a, a, c) and h.lc == 1
    with pytest.raises(ValueError):
        normal_multiple(rel(A, "a*b"), (c,), A)


def test_find_reducer_examples():
    A = alg(0)
    s = rel(A, "[b,a,a,a,a]", 0)
    t = rel(A, "a*b*c + a", 1)
    B = GsbBasis(A, [s, t])
    assert find_reducer(t.lm, B) == (t, ())
    assert find_reducer(lie(b, a, a, a, a, c), B) == (s, (c,))
    assert find_reducer(prod(a, b), B) is None
    assert find_reducer(lie(c, a, a, a, a, a), B) is None


def test_basis_rejects_duplicates_and_non_monic():
    A = alg(0)
    B = GsbBasis(A, [rel(A, "a", 0)])
    with pytest.raises(ValueError):
        B.add(rel(A, "a", 1))
    with pytest.raises(ValueError):
        B.add(Relation(A.eval("2*b"), 2))


def test_reduce_examples():
    A = alg(0)
    s = rel(A, "[b,a]*b - a")
    B = GsbBasis(A, [s])
    assert reduce(s.poly, B)[0] == 0
    assert reduce(A.zero(), B)[0] == 0
    assert reduce(A.eval("[b,a]*b + b"), B)[0] == A.eval("a + b")
    head_only, _ = reduce(A.eval("c + [b,a]*b"), B, full=False)
    assert head_only == A.eval("c + a")


def test_bracket_times_membership_after_completion():
    for char in (0, 2):
        A = alg(char, "a<b")
        B = complete([A.eval("(b,a)*b - a")], A)
        assert reduce(A.eval("a*a"), B)[0] == 0


def test_mult_composition_counts():
    A = alg(0, "a<b")
    assert len(mult_compositions(rel(A, "[b,a]*b - a"), A)) == 6
    assert len(mult_compositions(rel(A, "[b,a,a,a,b]"), A)) == 4


def test_general_composition_example():
    A = alg(0)
    s1 = rel(A, "[b,a,a,a,a] - a*b", 0)
    s2 = rel(A, "[b,a,a,a,c] + a", 1)
    g = general_compositions(s1, s2, A)
    expected = A.left_normed(s1.poly, [c]) - A.left_normed(s2.poly, [a])
    assert g == expected
    assert g.lm < lie(b, a, a, a, a, c)
    assert general_compositions(s1, s1, A) is None
    assert general_compositions(s1, rel(A, "[c,a,a,a,a]", 2), A) is None


def test_complete_empty_and_letter():
    A = alg(0, "a<b")
    assert len(complete([], A)) == 0
    B = complete([A.gen("a")], A)
    assert reduce(A.eval("[b,a]"), B)[0] == 0
    for m in enumerate_monomials(2, 0, 4):
        if a in m.letters:
            assert reduce(A.mono(m), B)[0] == 0, A.render(m)
    assert reduce(A.eval("b*b + [b,a,b]"), B)[0] == A.eval("b*b")


def test_limits_report_partial_basis():
    A = alg(0)
    with pytest.raises(LimitExceeded) as exc:
        complete([A.eval("c*c - b")], A, Limits(max_relations=5))
    assert len(exc.value.basis) == 5
    with pytest.raises(LimitExceeded):
        complete([A.eval("c*c - b")], A, Limits(max_leading_length=3))
    with pytest.raises(LimitExceeded):
        complete([A.eval("c*c - b")], A, Limits(max_steps=2))


def test_minimalize():
    A = alg(0, "a<b")
    assert len(minimalize(GsbBasis(A))) == 0
    B = complete([A.gen("a")], A)
    M = minimalize(B)
    assert prod(a, b) in M and lie(b, a) in M and (0, 0, (a,)) not in M
    assert {r.lm for r in minimalize(M)} == {r.lm for r in M}
    assert M.minimal and M.reduced and M.complete


def test_minimal_drops_properly_divisible_leadings():
    A = alg(0, "a<b")
    B = complete([A.eval("[b,a,a,a,a]"), A.eval("[b,a,a,a,a,b] + [b,a,b]")], A)
    M = minimalize(B)
    assert all(find_reducer(r.lm, GsbBasis(A, [x for x in M if x is not r])) is None for r in M)
    for r in B:
        assert reduce(r.poly, M)[0] == 0


def test_lrr_examples():
    A = alg(0, "a")
    assert lrr_enumerate(GsbBasis(A), 3) == [(1, 0, (a,)), prod(a, a), prod(a, a, a)]
    assert lrr_enumerate(GsbBasis(A), 0) == []
    B = complete([A.gen("a")], A)
    assert (1, 0, (a,)) not in lrr_enumerate(B, 3)


def test_trace_replays_to_remainder(rng):
    for name in ("bracket_times_q", "square_c_q", "long_to_letter_q"):
        p = load(name).presentation
        B = p.basis()
        for _ in range(30):
            f = random_poly(p.algebra, rng, 6, terms=5)
            rem, trace = B.reduce(f)
            assert trace.replay(f, B) == rem


@pytest.mark.parametrize("name", PRESENTATIONS)
def test_remainders_are_irreducible_and_confluent(name, rng):
    p = load(name).presentation
    B, A = p.basis(), p.algebra
    for _ in range(25):
        f = random_poly(A, rng, 7, terms=6)
        rem, _ = B.reduce(f)
        assert all(find_reducer(m, B) is None for m in rem.monomials())
        alt, _ = B.reduce(f, choose=rng.choice)
        assert alt == rem


@pytest.mark.parametrize("name", PRESENTATIONS)
def test_completion_is_deterministic(name):
    p1, p2 = load(name).presentation, load(name).presentation
    assert p1.basis().render() == p2.basis().render()
    rels = list(reversed(p1.relations))
    if len({r.lm for r in rels}) == len(rels):
        assert complete(rels, p1.algebra).render() == p1.basis().render()


@pytest.mark.parametrize("name", PRESENTATIONS)
def test_minimal_basis_generates_same_ideal(name):
    p = load(name).presentation
    B = p.basis()
    M = minimalize(B)
    assert not check_compositions(M)
    for r in B:
        assert M.reduce(r.poly)[0] == 0
    for r in M:
        assert B.reduce(r.poly)[0] == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([0, 2, 3]))
def test_random_two_letter_presentations_complete(seed, char):
    rng = random.Random(seed)
    A = alg(char, "a<b")
    S = [random_poly(A, rng, 5, terms=rng.randint(1, 3)) for _ in range(rng.randint(1, 2))]
    B = complete(S, A, Limits(max_relations=400))
    assert not check_compositions(B)
    for s in S:
        assert B.reduce(s)[0] == 0
