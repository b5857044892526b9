"""Rational functions in ``t`` modulo the monomial units, in a canonical form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _poly
from .domains import PRIME_FIELD
from .laurent import LaurentPolynomial


@dataclass(frozen=True)
class RationalFunctionValue:
    """``numerator / denominator`` over a field, both with lowest exponent 0.

    Build instances with :func:`normalize_value`; the constructor does not
    canonicalize.
    """

    numerator: LaurentPolynomial
    denominator: LaurentPolynomial

    @property
    def domain(self):
        return self.numerator.domain

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def degree(self):
        return degree_rational(self)

    def __neg__(self):
        return RationalFunctionValue(-self.numerator, self.denominator)

    def __mul__(self, other: RationalFunctionValue):
        return normalize_value(self.numerator * other.numerator,
                               self.denominator * other.denominator)

    def __truediv__(self, other: RationalFunctionValue):
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return normalize_value(self.numerator * other.denominator,
                               self.denominator * other.numerator)

    def equals_up_to_sign(self, other: RationalFunctionValue) -> bool:
        return self == other or self == -other

    def __str__(self):
        if self.denominator == 1:
            return str(self.numerator)
        num = str(self.numerator)
        den = str(self.denominator)
        if len(self.numerator.coeffs) > 1:
            num = f"({num})"
        if len(self.denominator.coeffs) > 1:
            den = f"({den})"
        return f"{num}/{den}"


def _dense(f: LaurentPolynomial):
    return list(f.coeffs)


def normalize_value(p: LaurentPolynomial, q: LaurentPolynomial) -> RationalFunctionValue:
    """Canonical representative of ``p/q`` up to multiplication by ``t^m``.

    Both parts are shifted to lowest exponent 0, common polynomial factors
    are cancelled over the quotient field, and the denominator is scaled so
    that its lowest coefficient is 1 (prime fields) or so that it is a
    primitive integer polynomial with positive lowest coefficient.
    """
    if q.is_zero():
        raise ZeroDivisionError("zero denominator")
    dom = p.domain.field
    if q.domain.field != dom:
        raise ValueError(f"domain mismatch: {p.domain} vs {q.domain}")
    one = LaurentPolynomial.constant(dom, 1)
    if p.is_zero():
        return RationalFunctionValue(LaurentPolynomial.zero(dom), one)

    a = [dom.convert(c) for c in p.coeffs]
    b = [dom.convert(c) for c in q.coeffs]

    if dom.kind == PRIME_FIELD:
        P = dom.p
        g = _poly.gcd_mod(a, b, P)
        if len(g) > 1:
            a = _poly.divmod_field(a, g, P)[0]
            b = _poly.divmod_field(b, g, P)[0]
        inv = pow(b[0], -1, P)
        a = [c * inv % P for c in a]
        b = [c * inv % P for c in b]
    else:
        if len(a) > 1 and len(b) > 1:
            g = _poly.gcd_int(_poly.primitive_int(a)[1], _poly.primitive_int(b)[1])
            if len(g) > 1:
                a = _poly.divmod_field(a, g)[0]
                b = _poly.divmod_field(b, g)[0]
        scale, b_int = _poly.primitive_int(b)
        if b_int[0] < 0:
            scale = -scale
        a = [Fraction(c) * scale for c in a]
        b = [Fraction(c) * scale for c in b]

    return RationalFunctionValue(LaurentPolynomial(dom, a, 0), LaurentPolynomial(dom, b, 0))


def degree_rational(f: RationalFunctionValue):
    """``deg(numerator) - deg(denominator)``; ``None`` for the zero function."""
    if f.numerator.is_zero():
        return None
    return f.numerator.degree() - f.denominator.degree()


def rational_constant(domain, c) -> RationalFunctionValue:
    dom = domain.field
    return normalize_value(LaurentPolynomial.constant(dom, c), LaurentPolynomial.constant(dom, 1))
