"""Exact coefficient domains, Laurent polynomials, rational functions and determinants."""

from .domains import GF, QQ, ZZ, CoefficientDomain, domain_from_tag, is_prime
from .laurent import LaurentPolynomial, as_laurent, degree_laurent, parse_laurent
from .matrix import ExactMatrix, det_exact
from .ratfunc import RationalFunctionValue, degree_rational, normalize_value

__all__ = [
    "CoefficientDomain", "ZZ", "QQ", "GF", "domain_from_tag", "is_prime",
    "LaurentPolynomial", "as_laurent", "degree_laurent", "parse_laurent",
    "ExactMatrix", "det_exact",
    "RationalFunctionValue", "degree_rational", "normalize_value",
]
