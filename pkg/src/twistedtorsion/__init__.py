"""Twisted Reidemeister torsion of 3-manifold groups and the fiberedness tests built on it."""

from .algebra import (GF, QQ, ZZ, CoefficientDomain, ExactMatrix, LaurentPolynomial,
                      RationalFunctionValue, det_exact, normalize_value, parse_laurent)
from .group import FreeWord, GroupPresentation, GroupRingElement, fox_derivative, parse_word
from .kernels import BACKEND
from .rep import TwistData, UnitSpec, ValidationError, validate_phi, validate_representation
from .topology import (DiagnosticsReport, FiberedVerdict, Monicity, MonodromyData, diagnose,
                       fibered_obstruction, fibered_torsion_formula, mapping_torus_presentation,
                       monicity_verdict, norm_lower_bound)
from .torsion import (BasedChainComplex, Selection, TorsionValue, UnsupportedPresentation,
                      all_selections_torsion, turaev_torsion, wada_torsion)

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "ZZ", "CoefficientDomain", "ExactMatrix", "LaurentPolynomial", "RationalFunctionValue",
    "det_exact", "normalize_value", "parse_laurent",
    "FreeWord", "GroupPresentation", "GroupRingElement", "fox_derivative", "parse_word",
    "BACKEND",
    "TwistData", "UnitSpec", "ValidationError", "validate_phi", "validate_representation",
    "DiagnosticsReport", "FiberedVerdict", "Monicity", "MonodromyData", "diagnose", "fibered_obstruction",
    "fibered_torsion_formula", "mapping_torus_presentation", "monicity_verdict", "norm_lower_bound",
    "BasedChainComplex", "Selection", "TorsionValue", "UnsupportedPresentation", "all_selections_torsion",
    "turaev_torsion", "wada_torsion",
]
