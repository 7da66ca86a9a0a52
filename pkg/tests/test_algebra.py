from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nilblob import serialize as ser
from nilblob.algebra import (
    NILBLOB,
    BlobRules,
    Element,
    ExtElement,
    commutator,
    concatenate,
    element_degree,
    element_rank,
    exact_rank,
    gaussian_int,
    mul_blob,
    mul_extended,
    mul_nilblob,
)
from nilblob.checks import associativity_check, relation_checks
from nilblob.diagrams import enumerate_diagrams, identity
from nilblob.errors import SingularParameter, SizeMismatch, ZeroQ
from nilblob.presentation import evaluate, generator_diagram, generator_element, parse_word, word_degree

BLOB_SAMPLES = [(Fraction(2), 3), (Fraction(1, 3), 2), (Fraction(3), 5)]


def gauss_oracle(k, q):
    """[k] as the explicit sum of q^(k-1-2r), r = 0..k-1."""
    if k < 0:
        return -gauss_oracle(-k, q)
    return sum((Fraction(q) ** (k - 1 - 2 * r) for r in range(k)), Fraction(0))


def test_concatenate_identity():
    c = concatenate(identity(3), identity(3))
    assert c.loops == () and c.arc_marks == ()
    assert c.match == identity(3).match


def test_concatenate_cup_cap_makes_one_loop():
    u = generator_diagram(2, 1)
    c = concatenate(u, u)
    assert c.loops == (0,)


def test_concatenate_marked_line_twice():
    u0 = generator_diagram(1, 0)
    c = concatenate(u0, u0)
    assert c.loops == () and c.arc_marks == ((0, 2),)


def test_concatenate_size_mismatch():
    with pytest.raises(SizeMismatch):
        concatenate(identity(2), identity(3))


def test_nilblob_generator_examples():
    U = [generator_element(3, i) for i in range(3)]
    assert U[1] * U[1] == U[1].scale(-2)
    assert U[2] * U[2] == U[2].scale(-2)
    assert (U[1] * U[0] * U[1]).is_zero()
    assert U[1] * U[2] * U[1] == U[1] and U[2] * U[1] * U[2] == U[2]
    assert (U[0] * U[0]).is_zero()
    one = Element.one(3)
    assert one * one == one


def test_mul_size_mismatch():
    with pytest.raises(SizeMismatch):
        mul_nilblob(Element.one(2), Element.one(3))


def test_gaussian_examples():
    assert gaussian_int(1, 7) == 1
    assert gaussian_int(2, 1) == 2
    assert gaussian_int(4, 2) == Fraction(85, 8)
    assert gaussian_int(3, 2) == Fraction(21, 4)
    assert gaussian_int(0, 5) == 0
    with pytest.raises(ZeroQ):
        gaussian_int(3, 0)


@given(st.integers(-8, 8), st.fractions(min_value=-5, max_value=5).filter(lambda q: q != 0))
def test_gaussian_matches_sum(k, q):
    assert gaussian_int(k, q) == gauss_oracle(k, q)


def test_blob_scalars():
    q, m = Fraction(2), 3
    V0 = generator_element(1, 0, BlobRules(q, m))
    # V0 is normalized as -[m] times the marked identity, so V0^2 = -[m] V0
    assert mul_blob(V0, V0, q, m) == V0.scale(Fraction(-21, 4))
    V = [generator_element(2, i, BlobRules(q, m)) for i in range(2)]
    assert V[1] * V[0] * V[1] == V[1].scale(Fraction(5, 2))
    assert Element.one(2, BlobRules(q, m)) * V[1] == V[1]


def test_blob_singular_parameters():
    with pytest.raises(SingularParameter):
        BlobRules(Fraction(1), 2)
    with pytest.raises(SingularParameter):
        BlobRules(Fraction(0), 3)


@pytest.mark.parametrize("n", range(1, 8))
def test_nilblob_relations(n):
    for c in relation_checks(n):
        assert c.ok, c.line()


@pytest.mark.parametrize("q,m", BLOB_SAMPLES)
@pytest.mark.parametrize("n", range(1, 7))
def test_blob_relations(n, q, m):
    for c in relation_checks(n, BlobRules(q, m)):
        assert c.ok, c.line()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_nilblob_associativity(n):
    c = associativity_check(n)
    assert c.ok, c.line()


@pytest.mark.parametrize("q,m", BLOB_SAMPLES)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_blob_associativity(n, q, m):
    c = associativity_check(n, BlobRules(q, m))
    assert c.ok, c.line()


def elements(n, rules=NILBLOB):
    basis = enumerate_diagrams(n)
    term = st.tuples(st.sampled_from(basis), st.integers(-3, 3))
    return st.lists(term, min_size=1, max_size=4).map(
        lambda ts: sum((Element.basis(d, c, rules) for d, c in ts), Element.zero(n, rules))
    )


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_distributive_and_associative_random(data):
    n = data.draw(st.integers(1, 4))
    x, y, z = (data.draw(elements(n)) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z


def test_extended_examples():
    n = 3
    J = ExtElement.J(n)
    one = ExtElement.one(n)
    assert (J * J).is_zero()
    for i in range(n):
        u = ExtElement.lift(generator_element(n, i))
        assert commutator(J, u).is_zero()
    assert (one + J) * (one + J) == one + J.scale(2)
    with pytest.raises(SizeMismatch):
        mul_extended(ExtElement.J(2), ExtElement.J(3))


def test_extended_words():
    x = evaluate(parse_word("J U1 J", 3), extended=True)
    assert x.is_zero()
    y = evaluate(parse_word("U1 J", 3), extended=True)
    assert y == ExtElement(Element.zero(3), generator_element(3, 1))


def test_degrees():
    assert word_degree([0, 1, 0]) == 4
    assert word_degree([2, 1]) == 0
    assert element_degree(ExtElement.J(2)) == 2
    assert element_degree(generator_element(2, 0)) == 2
    assert element_degree(generator_element(2, 1) + generator_element(2, 0)) is None


def test_exact_rank():
    F = Fraction
    assert exact_rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert exact_rank([[F(1), F(0)], [F(0), F(1)]]) == 2
    assert element_rank(generator_element(3, i) for i in range(3)) == 3
    assert element_rank([generator_element(2, 1), generator_element(2, 1).scale(5)]) == 1


@given(elements(3))
def test_element_json_roundtrip(x):
    assert ser.element_from_json(ser.element_to_json(x), 3) == x
