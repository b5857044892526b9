"""Monicity verdicts, Thurston-norm lower bounds, fiberedness obstructions,
and the closed formula for mapping tori of free-group automorphisms."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import ExactMatrix, LaurentPolynomial, det_exact, normalize_value
from .algebra import _poly
from .algebra.domains import INTEGERS
from .group import FreeWord, GroupPresentation, fox_derivative
from .rep import (PhiStatus, TwistData, ValidationError, determinant_image_spec, mat_det,
                  tensor_apply, unit_membership, validate_representation)
from .torsion import TorsionValue

DEFAULT_SEARCH_BOUND = 6


class Monicity(str, enum.Enum):
    MONIC = "Monic"
    NOT_MONIC = "NotMonic"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


def monicity_verdict(v: TorsionValue, search_bound: int = DEFAULT_SEARCH_BOUND) -> Monicity:
    """Does some representative ``+-r t^m * tau`` (``r`` a determinant) split as
    a quotient of two polynomials whose extreme coefficients are ``+-1``?

    Over a field the common factor of such a quotient is free, so only the
    ratios of extreme coefficients matter: ``lc(P) tc(Q) = +-tc(P) lc(Q)``
    and ``tc(Q)/tc(P)`` must be an allowed unit. Over the integers Gauss'
    lemma forces the primitive parts of ``P`` and ``Q`` themselves to have
    extreme coefficients ``+-1``.
    """
    if v.value is None:
        return Monicity.NOT_MONIC
    P, Q = v.value.numerator, v.value.denominator
    field_dom = P.domain
    ring = v.ring

    if ring.kind == INTEGERS:
        scale, p_int = _poly.primitive_int(list(P.coeffs))
        q_int = [int(c) for c in Q.coeffs]
        outer = (p_int[0], p_int[-1], q_int[0], q_int[-1])
        if any(c not in (1, -1) for c in outer):
            return Monicity.NOT_MONIC
        # P/Q = (1/scale) * p_int/q_int, so r must be +-scale
        ok = unit_membership(v.units, Fraction(scale), field_dom, search_bound)
    else:
        a, b = P.lowest_coefficient, P.highest_coefficient
        c, d = Q.lowest_coefficient, Q.highest_coefficient
        lhs = field_dom.mul(b, c)
        rhs = field_dom.mul(a, d)
        if lhs != rhs and lhs != field_dom.neg(rhs):
            return Monicity.NOT_MONIC
        ok = unit_membership(v.units, field_dom.div(c, a), field_dom, search_bound)
    if ok is None:
        return Monicity.UNKNOWN
    return Monicity.MONIC if ok else Monicity.NOT_MONIC


def norm_lower_bound(v: TorsionValue):
    """``ceil(deg(tau) / k)``, a lower bound for the Thurston norm; None when tau = 0."""
    deg = v.degree()
    if deg is None:
        return None
    return -(-deg // v.k)


@dataclass(frozen=True)
class FiberedVerdict:
    obstructed: bool
    reason: str | None = None  # "zero" | "non-monic" | "degree"

    def __str__(self):
        return f"Obstructed({self.reason})" if self.obstructed else "NoObstruction"

    @classmethod
    def parse(cls, text: str) -> FiberedVerdict:
        if text == "NoObstruction":
            return cls(False)
        if text.startswith("Obstructed(") and text.endswith(")"):
            return cls(True, text[len("Obstructed("):-1])
        raise ValueError(f"bad fibered verdict {text!r}")


NO_OBSTRUCTION = FiberedVerdict(False)


def fibered_obstruction(v: TorsionValue, search_bound: int = DEFAULT_SEARCH_BOUND,
                        known_norm: int | None = None) -> FiberedVerdict:
    """Contrapositive of the fibered-class theorem. NoObstruction does not mean fibered."""
    if v.value is None:
        return FiberedVerdict(True, "zero")
    if monicity_verdict(v, search_bound) is Monicity.NOT_MONIC:
        return FiberedVerdict(True, "non-monic")
    if known_norm is not None and v.degree() != v.k * known_norm:
        return FiberedVerdict(True, "degree")
    return NO_OBSTRUCTION


def agree_up_to_units(v: TorsionValue, w: TorsionValue, search_bound: int = DEFAULT_SEARCH_BOUND):
    """``v = +-r t^m w`` with ``r`` an allowed unit? True, False or None (undecided)."""
    if v.value is None or w.value is None:
        return v.value is None and w.value is None
    ratio = v.value / w.value
    if not (ratio.numerator.is_constant() and ratio.denominator.is_constant()):
        return False
    dom = ratio.numerator.domain
    c = dom.div(ratio.numerator.lowest_coefficient, ratio.denominator.lowest_coefficient)
    return unit_membership(v.units, c, dom, search_bound)


# -- reports ---------------------------------------------------------------

@dataclass
class DiagnosticsReport:
    torsion: TorsionValue
    degree: int | None
    monic: Monicity
    norm_lower_bound: int | None
    fibered_verdict: FiberedVerdict
    known_norm: int | None = None
    warnings: list = field(default_factory=list)


def diagnose(v: TorsionValue, search_bound: int = DEFAULT_SEARCH_BOUND,
             known_norm: int | None = None, phi_status: PhiStatus | None = None) -> DiagnosticsReport:
    warnings = []
    if phi_status is not None and not phi_status.primitive:
        warnings.append(f"phi is not primitive (divisible by {phi_status.divisor}); "
                        "the fibered-class theorem assumes a primitive class")
    if v.value is None and v.diagnostic:
        warnings.append(f"torsion is zero: {v.diagnostic}")
    return DiagnosticsReport(
        torsion=v,
        degree=v.degree(),
        monic=monicity_verdict(v, search_bound),
        norm_lower_bound=norm_lower_bound(v),
        fibered_verdict=fibered_obstruction(v, search_bound, known_norm),
        known_norm=known_norm,
        warnings=warnings,
    )


# -- mapping tori ----------------------------------------------------------

@dataclass(frozen=True)
class MonodromyData:
    """An endomorphism of the free group on ``fiber_generators`` given by images,
    which must abelianize to a matrix of determinant +-1."""

    fiber_generators: tuple
    images: tuple
    stable_letter: str = "mu"

    def __post_init__(self):
        n = len(self.fiber_generators)
        object.__setattr__(self, "fiber_generators", tuple(self.fiber_generators))
        object.__setattr__(self, "images", tuple(self.images))
        if n < 2:
            raise ValidationError("the fiber needs free rank at least 2")
        if len(self.images) != n:
            raise ValidationError(f"need {n} images, got {len(self.images)}")
        if self.stable_letter in self.fiber_generators:
            raise ValidationError("stable letter clashes with a fiber generator")
        for w in self.images:
            if any(not 0 <= i < n for i, _ in w.letters):
                raise ValidationError("monodromy image uses a non-fiber generator")
        d = self.abelianized_determinant()
        if d not in (1, -1):
            raise ValidationError(
                f"abelianized monodromy has determinant {d}; an automorphism needs +-1")

    @classmethod
    def parse(cls, fiber_generators, images: dict | list, stable_letter="mu"):
        from .group import parse_word

        gens = tuple(fiber_generators)
        if isinstance(images, dict):
            missing = [g for g in gens if g not in images]
            if missing:
                raise ValidationError(f"no monodromy image for {missing}")
            images = [images[g] for g in gens]
        return cls(gens, tuple(parse_word(s, gens) for s in images), stable_letter)

    @property
    def rank(self) -> int:
        return len(self.fiber_generators)

    @property
    def fiber_norm(self) -> int:
        """``chi_-`` of a bounded fiber with free fundamental group of rank n."""
        return self.rank - 1

    def abelianized_matrix(self):
        """Row ``i`` holds the exponent sums of ``f(x_i)``."""
        return [w.exponent_sums(self.rank) for w in self.images]

    def abelianized_determinant(self) -> int:
        from .algebra.domains import ZZ

        return int(mat_det(tuple(tuple(r) for r in self.abelianized_matrix()), ZZ))


def mapping_torus_presentation(m: MonodromyData):
    """``<x_1..x_n, mu | mu x_i mu^-1 f(x_i)^-1>`` with ``phi = (0, .., 0, 1)``."""
    n = m.rank
    mu = FreeWord.generator(n)
    relators = []
    for i, img in enumerate(m.images):
        relators.append(mu * FreeWord.generator(i) * mu.inverse() * img.inverse())
    pres = GroupPresentation(m.fiber_generators + (m.stable_letter,), tuple(relators))
    phi = (0,) * n + (1,)
    return pres, phi


def fibered_torsion_formula(m: MonodromyData, twist: TwistData, validate: bool = True) -> TorsionValue:
    """``det(t D_mu - J) / det(t alpha(mu) - I)``.

    ``D_mu`` is block diagonal with ``alpha(mu)`` blocks and ``J`` has
    ``(i, j)`` block ``alpha(d f(x_i) / d x_j)``. ``twist`` is indexed by the
    mapping-torus generators (fiber generators, then the stable letter).
    """
    pres, phi = mapping_torus_presentation(m)
    if tuple(twist.phi) != phi:
        raise ValidationError(f"phi must be {phi} on the mapping-torus generators")
    if validate:
        validate_representation(pres, twist)
    n, k, dom = m.rank, twist.k, twist.domain
    t = LaurentPolynomial.monomial(dom, 1, 1)
    a_mu = ExactMatrix(dom, twist.images[n])
    zero_k = ExactMatrix.zeros(dom, k, k)
    blocks = []
    for i, img in enumerate(m.images):
        row = []
        for j in range(n):
            jac = tensor_apply(fox_derivative(img, j), twist)
            diag = a_mu * t if i == j else zero_k
            row.append(diag - jac)
        blocks.append(row)
    num = det_exact(ExactMatrix.from_blocks(dom, blocks))
    den = det_exact(a_mu * t - ExactMatrix.identity(dom, k))
    units = determinant_image_spec(twist)
    if num.is_zero():
        return TorsionValue(None, units, k, dom, None, "numerator-vanishes")
    return TorsionValue(normalize_value(num, den), units, k, dom, chosen_column=n)
