"""Twisted torsion engines.

``wada_torsion`` works from a deficiency-one presentation via the Fox
Jacobian. ``turaev_torsion`` evaluates the row/column deletion formula
``det(A3)^-1 det(A2) det(A1)^-1`` on a based complex
``0 -> C3 -> C2 -> C1 -> C0 -> 0`` given by its boundary matrices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import ExactMatrix, LaurentPolynomial, RationalFunctionValue, det_exact, normalize_value
from .group import FreeWord, GroupPresentation, GroupRingElement
from .rep import (TwistData, UnitSpec, determinant_image_spec, matrix_tensor_apply, tensor_apply,
                  validate_representation)


class UnsupportedPresentation(ValueError):
    """The presentation does not have deficiency one (or has fewer than two generators)."""


class ChainComplexError(ValueError):
    """Boundary matrices with mismatched shapes or nonzero compositions."""


class SelectionFailure(Exception):
    """``det(A3)`` or ``det(A1)`` vanished for this selection; try another."""


NOT_ACYCLIC = "not-acyclic"
NUMERATOR_VANISHES = "numerator-vanishes"


@dataclass(frozen=True)
class TorsionValue:
    """A torsion value, or ZERO (``value is None``) for non-acyclic complexes.

    ``ring`` is the coefficient domain of the representation; monicity is
    judged over it.
    """

    value: RationalFunctionValue | None
    units: UnitSpec
    k: int
    ring: object
    chosen_column: int | None = None
    diagnostic: str | None = None

    @property
    def is_zero(self) -> bool:
        return self.value is None

    def degree(self):
        return None if self.value is None else self.value.degree()

    def __str__(self):
        return "0" if self.value is None else str(self.value)


# -- Wada ------------------------------------------------------------------

def _check_deficiency_one(pres: GroupPresentation):
    n = len(pres.generators)
    if n < 2 or len(pres.relators) != n - 1:
        raise UnsupportedPresentation(
            f"need a deficiency-one presentation with at least two generators; got "
            f"{n} generators and {len(pres.relators)} relators")


def wada_pieces(pres: GroupPresentation, twist: TwistData):
    """The tensored Fox Jacobian and the blocks ``(phi x alpha)(x_j - 1)``."""
    _check_deficiency_one(pres)
    fox = pres.fox_matrix()
    jac = matrix_tensor_apply(fox, twist)
    dens = []
    for j in range(len(pres.generators)):
        xj = GroupRingElement.word(FreeWord.generator(j)) - 1
        dens.append(tensor_apply(xj, twist))
    return jac, dens


def wada_column(jac: ExactMatrix, k: int, j: int) -> LaurentPolynomial:
    """``det`` of the tensored Jacobian with generator column block ``j`` removed."""
    return det_exact(jac.delete(cols=range(j * k, (j + 1) * k)))


def wada_torsion(pres: GroupPresentation, twist: TwistData, column: int | None = None,
                 validate: bool = True) -> TorsionValue:
    """Wada's invariant ``det(F_j) / det((phi x alpha)(x_j - 1))``.

    ``F_j`` is the tensored Fox Jacobian with the ``j``-th generator block
    deleted. By default ``j`` is the lowest index with nonzero denominator;
    pass ``column`` to force a particular one.
    """
    _check_deficiency_one(pres)
    if validate:
        validate_representation(pres, twist)
    k = twist.k
    units = determinant_image_spec(twist)
    jac, dens = wada_pieces(pres, twist)
    columns = [column] if column is not None else range(len(pres.generators))
    ring = twist.domain
    any_valid = False
    for j in columns:
        d = det_exact(dens[j])
        if d.is_zero():
            continue
        any_valid = True
        num = wada_column(jac, k, j)
        if num.is_zero():
            continue
        return TorsionValue(normalize_value(num, d), units, k, ring, chosen_column=j)
    if not any_valid:
        return TorsionValue(None, units, k, ring, None, NOT_ACYCLIC)
    return TorsionValue(None, units, k, ring, None, NUMERATOR_VANISHES)


def wada_all_columns(pres: GroupPresentation, twist: TwistData) -> dict:
    """Map each valid column index to its (possibly ZERO) canonical value."""
    validate_representation(pres, twist)
    jac, dens = wada_pieces(pres, twist)
    out = {}
    for j, block in enumerate(dens):
        d = det_exact(block)
        if d.is_zero():
            continue
        num = wada_column(jac, twist.k, j)
        out[j] = None if num.is_zero() else normalize_value(num, d)
    return out


# -- Turaev ----------------------------------------------------------------

@dataclass(frozen=True)
class BasedChainComplex:
    """``0 -> Q^n3 -B3-> Q^n2 -B2-> Q^n1 -B1-> Q^n0 -> 0``.

    ``B3`` is ``n2 x n3``, ``B2`` is ``n1 x n2`` and ``B1`` is ``n0 x n1``.
    Construction checks shapes and that consecutive boundaries compose to 0.
    """

    B3: ExactMatrix
    B2: ExactMatrix
    B1: ExactMatrix

    def __post_init__(self):
        n3, n2, n1, n0 = self.dims
        if self.B3.shape != (n2, n3) or self.B2.shape != (n1, n2) or self.B1.shape != (n0, n1):
            raise ChainComplexError(
                f"incompatible shapes B3={self.B3.shape}, B2={self.B2.shape}, B1={self.B1.shape}")
        if not (self.B3.domain == self.B2.domain == self.B1.domain):
            raise ChainComplexError("boundary matrices use different coefficient domains")
        for name, prod in (("B2*B3", self.B2 * self.B3), ("B1*B2", self.B1 * self.B2)):
            for i, row in enumerate(prod.entries):
                for j, x in enumerate(row):
                    if not x.is_zero():
                        raise ChainComplexError(f"{name} is nonzero at entry ({i}, {j}): {x}")

    @classmethod
    def from_dims(cls, domain, dims, B3, B2, B1):
        n3, n2, n1, n0 = dims
        mats = []
        for name, raw, shape in (("B3", B3, (n2, n3)), ("B2", B2, (n1, n2)), ("B1", B1, (n0, n1))):
            try:
                mats.append(ExactMatrix(domain, raw, *shape))
            except ValueError as exc:
                raise ChainComplexError(f"{name} must be {shape[0]}x{shape[1]}: {exc}") from None
        return cls(*mats)

    @property
    def dims(self):
        # n3 from B3's columns, n2 from B2's columns, n1 from B1's columns, n0 from B1's rows
        return (self.B3.ncols, self.B2.ncols, self.B1.ncols, self.B1.nrows)

    @property
    def domain(self):
        return self.B2.domain


@dataclass(frozen=True)
class Selection:
    """``rows3`` picks rows of B3 (basis of C2), ``cols1`` picks columns of B1 (basis of C1)."""

    rows3: tuple
    cols1: tuple

    def __post_init__(self):
        object.__setattr__(self, "rows3", tuple(sorted(self.rows3)))
        object.__setattr__(self, "cols1", tuple(sorted(self.cols1)))

    def check(self, C: BasedChainComplex):
        n3, n2, n1, n0 = C.dims
        if len(set(self.rows3)) != len(self.rows3) or len(set(self.cols1)) != len(self.cols1):
            raise ChainComplexError("selection indices must be distinct")
        if any(not 0 <= i < n2 for i in self.rows3) or any(not 0 <= j < n1 for j in self.cols1):
            raise ChainComplexError("selection index out of range")
        if len(self.rows3) != n3 or len(self.cols1) != n0:
            raise ChainComplexError(
                f"selection must pick {n3} rows of B3 and {n0} columns of B1")
        if n2 - n3 != n1 - n0:
            raise ChainComplexError(
                f"A2 would be {n1 - n0}x{n2 - n3}; need n2 - n3 == n1 - n0")


def turaev_torsion(C: BasedChainComplex, sel: Selection) -> RationalFunctionValue | None:
    """``det(A3)^-1 det(A2) det(A1)^-1`` in canonical form, or ``None`` (ZERO).

    Raises :class:`SelectionFailure` when ``det(A3)`` or ``det(A1)`` is zero.
    Empty determinants (``n3 = 0`` or ``n0 = 0``) count as 1.
    """
    sel.check(C)
    n3, n2, n1, n0 = C.dims
    A3 = C.B3.submatrix(sel.rows3, range(n3))
    A1 = C.B1.submatrix(range(n0), sel.cols1)
    d3 = det_exact(A3)
    if d3.is_zero():
        raise SelectionFailure("det(A3) = 0")
    d1 = det_exact(A1)
    if d1.is_zero():
        raise SelectionFailure("det(A1) = 0")
    A2 = C.B2.delete(rows=sel.cols1, cols=sel.rows3)
    d2 = det_exact(A2)
    if d2.is_zero():
        return None
    return normalize_value(d2, d3 * d1)


@dataclass
class TuraevOutcome:
    value: RationalFunctionValue | None
    selection: Selection | None
    diagnostic: str | None = None
    selections_tried: int = 0
    agreement: bool | None = None
    values: list = field(default_factory=list)


def iter_selections(C: BasedChainComplex):
    n3, n2, n1, n0 = C.dims
    for rows3 in itertools.combinations(range(n2), n3):
        for cols1 in itertools.combinations(range(n1), n0):
            yield Selection(rows3, cols1)


def all_selections_torsion(C: BasedChainComplex, verify: bool = False) -> TuraevOutcome:
    """First successful selection in lexicographic order.

    With ``verify``, every selection is evaluated and ``agreement`` records
    whether all successful ones agree up to sign.
    """
    n3, n2, n1, n0 = C.dims
    if n3 - n2 + n1 - n0 != 0:
        return TuraevOutcome(None, None, NOT_ACYCLIC)
    first = None
    tried = 0
    values = []
    for sel in iter_selections(C):
        tried += 1
        try:
            v = turaev_torsion(C, sel)
        except SelectionFailure:
            continue
        if first is None:
            first = (sel, v)
            if not verify:
                break
        values.append((sel, v))
    if first is None:
        return TuraevOutcome(None, None, NOT_ACYCLIC, tried)
    sel, v = first
    out = TuraevOutcome(v, sel, NOT_ACYCLIC if v is None else None, tried)
    if verify:
        ref = v
        out.values = values
        out.agreement = all(
            (w is None and ref is None) or (w is not None and ref is not None and w.equals_up_to_sign(ref))
            for _, w in values)
    return out
