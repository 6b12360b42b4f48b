import pytest

from metapoisson.algebra import Algebra, _formal_times
from metapoisson.basis import Alphabet
from metapoisson.coeff import field_make
from metapoisson.decide import Presentation, is_zero_in_quotient
from metapoisson.oracle import headroom, truncated_ideal, truncated_member, truncated_rank, verify_axioms, verify_axioms_for


def alg(char=0, gens="a<b<c"):
    return Algebra(Alphabet.of(gens), field_make(char))


class SignFlipped(Algebra):
    """Table with one case of the length-three product negated."""

    def _mul_lie3(self, x, a):
        a1, a2, a3 = x
        if a < a3 and a3 < a1:
            return {m: -c for m, c in _formal_times(self._bracket3(a, a3, a2), a1).items()}
        return super()._mul_lie3(x, a)


@pytest.mark.parametrize("k,char", [(2, 2), (2, 0), (3, 3)])
def test_axioms_pass(k, char):
    rep = verify_axioms_for(k, char, 5)
    assert rep.ok, rep.first_counterexample
    assert all(rep.checked[x] > 0 for x in rep.checked)


def test_mutated_table_is_caught():
    A = SignFlipped(Alphabet.of("a<b<c"), field_make(0))
    rep = verify_axioms(A, 5)
    assert not rep.ok
    assert rep.failed["jacobi"] and rep.failed["leibniz"]
    assert rep.first_counterexample
    assert "FAIL" in "\n".join(rep.lines())


def test_report_rejects_tiny_bound():
    with pytest.raises(ValueError):
        verify_axioms(alg(0), 2)


def test_truncated_member_examples():
    A = alg(0, "a<b")
    S = [A.eval("(b,a)*b - a")]
    assert truncated_member(S[0], S, A, 4)
    assert not truncated_member(A.gen("a"), [], A, 4)
    assert truncated_member(A.eval("a*a"), S, A, 4)
    with pytest.raises(ValueError):
        truncated_member(A.eval("[b,a,a,a,b]"), S, A, 4)


def test_projection_needs_headroom_for_inhomogeneous_relations():
    # truncating the relation at length 4 leaves just "-a", so the plain
    # projection claims a is in the ideal; the completed basis knows better
    A = alg(0)
    S = [A.eval("[c,b,b,b,b] - a")]
    assert headroom(S) == 4
    assert truncated_member(A.gen("a"), S, A, 4, extra=0)
    assert not is_zero_in_quotient(A.gen("a"), Presentation(A, S))
    assert not truncated_member(A.gen("a"), S, A, 4)


def test_homogeneous_relations_need_no_headroom():
    A = alg(0)
    S = [A.eval("[c,a]*b - [b,a]*c")]
    assert headroom(S) == 0
    assert truncated_rank(S, A, 4) == truncated_ideal(S, A, 4).rank


def test_rank_grows_with_bound():
    A = alg(2, "a<b")
    S = [A.eval("a*a")]
    ranks = [truncated_rank(S, A, d) for d in range(2, 6)]
    assert ranks == sorted(ranks) and ranks[0] >= 1
