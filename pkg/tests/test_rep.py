from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistedtorsion.algebra import GF, QQ, ZZ, ExactMatrix, LaurentPolynomial, det_exact
from twistedtorsion.group import FreeWord, GroupPresentation, GroupRingElement, fox_derivative
from twistedtorsion.rep import (InvalidHomomorphism, InvalidRepresentation, TwistData, UnitSpec,
                                determinant_image_spec, mat_det, matrix_tensor_apply, tensor_apply,
                                unit_membership, validate_phi, validate_representation)

TREFOIL = GroupPresentation.parse(["x", "y"], ["x y x y^-1 x^-1 y^-1"])
PARABOLIC = ([[1, 1], [0, 1]], [[1, 0], [-1, 1]])


def sl2z():
    return TwistData((1, 1), 2, ZZ, PARABOLIC)


def test_validate_phi_examples():
    st_ = validate_phi(TREFOIL, (1, 1))
    assert st_.primitive
    with pytest.raises(InvalidHomomorphism):
        validate_phi(TREFOIL, (1, 2))
    st2 = validate_phi(TREFOIL, (2, 2))
    assert not st2.primitive and st2.divisor == 2


def test_validate_representation_examples():
    validate_representation(TREFOIL, sl2z())
    validate_representation(TREFOIL, TwistData.trivial((1, 1), ZZ, 2))
    bad = TwistData((1, 1), 2, ZZ, ([[1, 1], [0, 1]], [[1, 0], [0, 1]]))
    with pytest.raises(InvalidRepresentation):
        validate_representation(TREFOIL, bad)


def test_non_unit_determinant_rejected():
    with pytest.raises(InvalidRepresentation):
        TwistData((1, 1), 1, ZZ, ([[2]], [[1]]))
    TwistData((1, 1), 1, QQ, ([[2]], [[1]]))


def test_tensor_apply_examples():
    x = GroupRingElement.word(FreeWord.generator(0))
    triv = TwistData.trivial((1,), ZZ)
    t = LaurentPolynomial.monomial(ZZ, 1, 1)
    assert tensor_apply(x, triv) == ExactMatrix(ZZ, [[t]])
    assert tensor_apply(1 - x, triv) == ExactMatrix(ZZ, [[1 - t]])
    tw = TwistData((1,), 2, ZZ, ([[1, 1], [0, 1]],))
    assert tensor_apply(x, tw) == ExactMatrix(ZZ, [[t, t], [0, t]])


def test_matrix_tensor_apply_examples():
    triv = TwistData.trivial((1, 1), ZZ)
    x = GroupRingElement.word(FreeWord.generator(0))
    t = LaurentPolynomial.monomial(ZZ, 1, 1)
    assert matrix_tensor_apply([[x - 1]], triv) == ExactMatrix(ZZ, [[t - 1]])
    one, zero = GroupRingElement.one(), GroupRingElement()
    assert matrix_tensor_apply([[one, zero], [zero, one]], sl2z()) == ExactMatrix.identity(ZZ, 4)
    row = matrix_tensor_apply(TREFOIL.fox_matrix(), triv)
    # d r / d x = 1 + xy - xyxy^-1x^-1 -> 1 + t^2 - t
    assert row[0, 0] == LaurentPolynomial.from_dict(ZZ, {0: 1, 1: -1, 2: 1})


def test_determinant_image_examples():
    assert determinant_image_spec(sl2z()) == UnitSpec.plus_minus_one()
    three = TwistData((1,), 1, QQ, ([[3]],))
    assert determinant_image_spec(three) == UnitSpec("generated-by", (Fraction(3),))
    assert determinant_image_spec(TwistData.trivial((1, 1), ZZ)).kind == "plus-minus-one"


def test_unit_membership():
    spec = UnitSpec("generated-by", (Fraction(3), Fraction(2)))
    assert unit_membership(spec, Fraction(9, 2), QQ) is True
    assert unit_membership(spec, Fraction(5), QQ) is False
    assert unit_membership(spec, Fraction(3**7), QQ, search_bound=6) is None
    assert unit_membership(UnitSpec("generated-by", (2,)), 4, GF(7)) is True
    # +-<3> in GF(13) is {1, 3, 4, 9, 10, 12}
    assert unit_membership(UnitSpec("generated-by", (3,)), 4, GF(13)) is True
    assert unit_membership(UnitSpec("generated-by", (3,)), 2, GF(13)) is False
    assert unit_membership(UnitSpec.plus_minus_one(), -1, ZZ) is True


words = st.lists(st.tuples(st.integers(0, 1), st.sampled_from([1, -1])), max_size=8)
elements = st.lists(st.tuples(words, st.integers(-3, 3)), max_size=3)


def _elt(raw):
    out = GroupRingElement()
    for w, c in raw:
        out = out + GroupRingElement.word(FreeWord.reduce(w), c)
    return out


@settings(max_examples=40)
@given(elements, elements)
def test_tensor_apply_is_ring_homomorphism(a, b):
    tw = sl2z()
    x, y = _elt(a), _elt(b)
    assert tensor_apply(x * y, tw) == tensor_apply(x, tw) * tensor_apply(y, tw)
    assert tensor_apply(x + y, tw) == tensor_apply(x, tw) + tensor_apply(y, tw)


def test_det_of_generator_image():
    tw = TwistData((2, -1), 2, GF(5), ([[2, 0], [0, 1]], [[1, 3], [0, 4]]))
    for g in range(2):
        got = det_exact(tensor_apply(GroupRingElement.word(FreeWord.generator(g)), tw))
        want = LaurentPolynomial.monomial(GF(5), mat_det(tw.images[g], GF(5)), tw.k * tw.phi[g])
        assert got == want


@pytest.mark.parametrize("shift", range(6))
def test_validation_rotation_invariant(shift):
    rotated = GroupPresentation(TREFOIL.generators, (TREFOIL.relators[0].rotate(shift),))
    validate_representation(rotated, sl2z())
    bad = TwistData((1, 1), 2, ZZ, ([[1, 1], [0, 1]], [[1, 0], [0, 1]]))
    with pytest.raises(InvalidRepresentation):
        validate_representation(rotated, bad)


def test_fox_row_matches_fox_derivative():
    triv = TwistData.trivial((1, 1), ZZ)
    for j in range(2):
        direct = tensor_apply(fox_derivative(TREFOIL.relators[0], j), triv)
        assert matrix_tensor_apply(TREFOIL.fox_matrix(), triv)[0, j] == direct[0, 0]
