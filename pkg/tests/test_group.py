import pytest
from hypothesis import given
from hypothesis import strategies as st

from twistedtorsion.group import (IDENTITY, FreeWord, GroupPresentation, GroupRingElement, ParseError,
                                  fox_derivative, parse_word, ring_multiply, word_reduce)

NAMES = ("x", "y", "z", "w")
X, Y = FreeWord.generator(0), FreeWord.generator(1)


def W(text):
    return parse_word(text, NAMES)


def E(*pairs):
    """Group-ring element from (coefficient, word text) pairs."""
    out = GroupRingElement()
    for c, text in pairs:
        out = out + GroupRingElement.word(W(text), c)
    return out


letters = st.lists(st.tuples(st.integers(0, 3), st.sampled_from([1, -1])), max_size=20)


def test_word_reduce_examples():
    assert W("x y y^-1") == X
    assert FreeWord.reduce([]) == IDENTITY
    assert W("x^-1 x") == IDENTITY


def test_parse_exponents():
    assert W("x^3").letters == ((0, 1),) * 3
    assert W("y^{-2}").letters == ((1, -1),) * 2
    assert W("1") == IDENTITY


@pytest.mark.parametrize("text", ["x^", "x^a", "q", "x*y"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        W(text)


def test_fox_examples():
    assert fox_derivative(X, 0) == 1
    assert fox_derivative(X.inverse(), 0) == E((-1, "x^-1"))
    assert fox_derivative(W("x y"), 1) == E((1, "x"))
    assert fox_derivative(W("x y x y^-1 x^-1 y^-1"), 0) == E((1, "1"), (1, "x y"), (-1, "x y x y^-1 x^-1"))


def test_ring_multiply_examples():
    one_minus_x = E((1, "1"), (-1, "x"))
    one_plus_x = E((1, "1"), (1, "x"))
    assert ring_multiply(one_minus_x, one_plus_x) == E((1, "1"), (-1, "x^2"))
    a = E((2, "x y"), (-1, "z"))
    assert ring_multiply(GroupRingElement.one(), a) == a
    assert ring_multiply(E((1, "x"), (1, "y")), E((1, "x^-1"))) == E((1, "1"), (1, "y x^-1"))


def test_presentation_shape():
    pres = GroupPresentation.parse(["x", "y"], ["x y x y^-1 x^-1 y^-1"])
    assert pres.deficiency == 1
    assert len(pres.fox_matrix()) == 1 and len(pres.fox_matrix()[0]) == 2
    with pytest.raises(ValueError):
        GroupPresentation.parse(["x", "x"], [])


@given(letters)
def test_fundamental_formula(raw):
    w = FreeWord.reduce(raw)
    total = GroupRingElement()
    for j in range(4):
        total = total + fox_derivative(w, j) * (GroupRingElement.word(FreeWord.generator(j)) - 1)
    assert total == GroupRingElement.word(w) - 1


@given(letters, letters, st.integers(0, 3))
def test_product_rule(a, b, j):
    u, v = FreeWord.reduce(a), FreeWord.reduce(b)
    assert fox_derivative(u * v, j) == fox_derivative(u, j) + u * fox_derivative(v, j)


@given(letters)
def test_reduce_idempotent_and_shrinking(raw):
    once = word_reduce(raw)
    assert word_reduce(once) == once
    assert len(once) <= len(raw)


@given(letters, letters)
def test_inverse_and_product(a, b):
    u, v = FreeWord.reduce(a), FreeWord.reduce(b)
    assert u * u.inverse() == IDENTITY
    assert (u * v).inverse() == v.inverse() * u.inverse()


def test_format_roundtrip():
    w = W("x y^-1 z^2 w")
    assert W(w.format(NAMES)) == w
