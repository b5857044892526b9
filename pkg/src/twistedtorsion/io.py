"""JSON problem files, complex files, monodromy files and report serialization.

Laurent literals are accepted either as strings (``"t^-1 + 2 - t^3"``) or
as exponent maps (``{"-1": 1, "0": 2, "3": -1}``); output always uses the
map form plus a human-readable ``display`` string.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .algebra import ExactMatrix, LaurentPolynomial, RationalFunctionValue, as_laurent, domain_from_tag
from .algebra.domains import ZZ, CoefficientDomain
from .group import GroupPresentation, ParseError, parse_word
from .rep import PhiStatus, TwistData, UnitSpec, ValidationError, mat_identity
from .topology import (DEFAULT_SEARCH_BOUND, DiagnosticsReport, FiberedVerdict, Monicity,
                       MonodromyData)
from .torsion import BasedChainComplex, Selection, TorsionValue


class InputError(ValueError):
    """Schema problem in an input file; ``path`` points at the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path
        self.message = message


def load_json(path) -> dict:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno}, column {exc.colno}", exc.msg) from None
    if not isinstance(data, dict):
        raise InputError("", "top-level JSON value must be an object")
    return data


def _get(obj, key, path, kind=None, default=...):
    if not isinstance(obj, dict):
        raise InputError(path, "expected an object")
    if key not in obj:
        if default is not ...:
            return default
        raise InputError(f"{path}.{key}" if path else key, "missing field")
    val = obj[key]
    if kind is not None and not isinstance(val, kind):
        raise InputError(f"{path}.{key}" if path else key, f"expected {kind.__name__}")
    return val


# -- problem files -----------------------------------------------------------

@dataclass
class Options:
    search_bound: int = DEFAULT_SEARCH_BOUND
    known_norm: int | None = None
    engine: str = "wada"


@dataclass
class Problem:
    name: str
    presentation: GroupPresentation
    twist: TwistData
    options: Options
    phi_status: PhiStatus | None = None
    fibered: bool | None = None
    expected: dict = field(default_factory=dict)


def _parse_options(data, default_engine="wada") -> Options:
    raw = _get(data, "options", "", dict, {})
    opts = Options(engine=default_engine)
    sb = raw.get("search_bound", opts.search_bound)
    if not isinstance(sb, int) or isinstance(sb, bool) or sb < 0:
        raise InputError("options.search_bound", "expected a nonnegative integer")
    kn = raw.get("known_norm")
    if kn is not None and (not isinstance(kn, int) or isinstance(kn, bool) or kn < 0):
        raise InputError("options.known_norm", "expected a nonnegative integer")
    eng = raw.get("engine", opts.engine)
    if eng not in ("wada", "fibered", "both"):
        raise InputError("options.engine", "expected one of wada, fibered, both")
    return Options(sb, kn, eng)


def _parse_matrix_literal(raw, dom: CoefficientDomain, k: int, path: str):
    if not isinstance(raw, list) or len(raw) != k:
        raise InputError(path, f"expected a {k}x{k} matrix")
    out = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != k:
            raise InputError(f"{path}[{i}]", f"expected a row of length {k}")
        vals = []
        for j, x in enumerate(row):
            try:
                vals.append(dom.parse(x))
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise InputError(f"{path}[{i}][{j}]", str(exc)) from None
        out.append(tuple(vals))
    return tuple(out)


def parse_representation(data, generators, phi) -> TwistData:
    rep = _get(data, "representation", "", dict, None)
    if rep is None:
        return TwistData.trivial(phi, ZZ)
    try:
        dom = domain_from_tag(_get(rep, "ring", "representation", str, "integers"))
    except ValueError as exc:
        raise InputError("representation.ring", str(exc)) from None
    k = _get(rep, "k", "representation", int, 1)
    if k < 1:
        raise InputError("representation.k", "must be at least 1")
    images = _get(rep, "images", "representation", dict, {})
    unknown = [n for n in images if n not in generators]
    if unknown:
        raise InputError("representation.images", f"unknown generator(s) {unknown}")
    mats = []
    for g in generators:
        if g in images:
            mats.append(_parse_matrix_literal(images[g], dom, k, f"representation.images.{g}"))
        else:
            mats.append(mat_identity(k, dom))
    try:
        return TwistData(tuple(phi), k, dom, tuple(mats))
    except ValidationError as exc:
        raise InputError("representation.images", str(exc)) from None


def parse_presentation(data) -> GroupPresentation:
    pres = _get(data, "presentation", "", dict)
    gens = _get(pres, "generators", "presentation", list)
    rels = _get(pres, "relators", "presentation", list)
    if not all(isinstance(g, str) for g in gens):
        raise InputError("presentation.generators", "generator names must be strings")
    if len(set(gens)) != len(gens):
        raise InputError("presentation.generators", "generator names must be unique")
    words = []
    for i, r in enumerate(rels):
        if not isinstance(r, str):
            raise InputError(f"presentation.relators[{i}]", "expected a word string")
        try:
            words.append(parse_word(r, gens))
        except ParseError as exc:
            raise InputError(f"presentation.relators[{i}]", str(exc)) from None
    return GroupPresentation(tuple(gens), tuple(words))


def parse_problem(data: dict) -> Problem:
    pres = parse_presentation(data)
    raw_phi = _get(data, "phi", "", dict)
    missing = [g for g in pres.generators if g not in raw_phi]
    if missing:
        raise InputError("phi", f"no value for generator(s) {missing}")
    extra = [g for g in raw_phi if g not in pres.generators]
    if extra:
        raise InputError("phi", f"unknown generator(s) {extra}")
    for g in pres.generators:
        if not isinstance(raw_phi[g], int) or isinstance(raw_phi[g], bool):
            raise InputError(f"phi.{g}", "expected an integer")
    phi = tuple(raw_phi[g] for g in pres.generators)
    twist = parse_representation(data, pres.generators, phi)
    return Problem(
        name=data.get("name", "problem"),
        presentation=pres,
        twist=twist,
        options=_parse_options(data),
        fibered=data.get("fibered"),
        expected=data.get("expected", {}),
    )


# -- monodromy files ---------------------------------------------------------

@dataclass
class MonodromyProblem:
    name: str
    monodromy: MonodromyData
    twist: TwistData
    options: Options
    fibered: bool | None = True
    expected: dict = field(default_factory=dict)


def parse_monodromy_problem(data: dict) -> MonodromyProblem:
    gens = _get(data, "fiber_generators", "", list)
    mu = _get(data, "stable_letter", "", str, "mu")
    images = _get(data, "monodromy", "", dict)
    try:
        m = MonodromyData.parse(gens, images, mu)
    except ParseError as exc:
        raise InputError("monodromy", str(exc)) from None
    except ValidationError as exc:
        raise InputError("monodromy", str(exc)) from None
    phi = (0,) * len(gens) + (1,)
    twist = parse_representation(data, tuple(gens) + (mu,), phi)
    opts = _parse_options(data, default_engine="both")
    if opts.known_norm is None:
        opts.known_norm = m.fiber_norm
    return MonodromyProblem(data.get("name", "mapping-torus"), m, twist, opts,
                            data.get("fibered", True), data.get("expected", {}))


# -- complex files -----------------------------------------------------------

@dataclass
class ComplexProblem:
    name: str
    complex: BasedChainComplex
    selection: Selection | None
    expected: dict = field(default_factory=dict)


def _parse_laurent_matrix(raw, rows, cols, dom, path):
    if not isinstance(raw, list) or len(raw) != rows:
        raise InputError(path, f"expected {rows} rows")
    out = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != cols:
            raise InputError(f"{path}[{i}]", f"expected {cols} entries")
        vals = []
        for j, x in enumerate(row):
            try:
                vals.append(as_laurent(x, dom))
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise InputError(f"{path}[{i}][{j}]", str(exc)) from None
        out.append(vals)
    return ExactMatrix(dom, out, rows, cols)


def parse_complex(data: dict) -> ComplexProblem:
    try:
        dom = domain_from_tag(_get(data, "ring", "", str, "rationals"))
    except ValueError as exc:
        raise InputError("ring", str(exc)) from None
    dims = _get(data, "dimensions", "", list)
    if len(dims) != 4 or not all(isinstance(d, int) and not isinstance(d, bool) and d >= 0 for d in dims):
        raise InputError("dimensions", "expected [n3, n2, n1, n0] of nonnegative integers")
    n3, n2, n1, n0 = dims
    B3 = _parse_laurent_matrix(_get(data, "B3", ""), n2, n3, dom, "B3")
    B2 = _parse_laurent_matrix(_get(data, "B2", ""), n1, n2, dom, "B2")
    B1 = _parse_laurent_matrix(_get(data, "B1", ""), n0, n1, dom, "B1")
    C = BasedChainComplex(B3, B2, B1)
    sel = None
    raw_sel = data.get("selection")
    if raw_sel is not None:
        rows3 = _get(raw_sel, "rows3", "selection", list)
        cols1 = _get(raw_sel, "cols1", "selection", list)
        sel = Selection(tuple(rows3), tuple(cols1))
    return ComplexProblem(data.get("name", "complex"), C, sel, data.get("expected", {}))


# -- value / report serialization -------------------------------------------

def laurent_to_map(f: LaurentPolynomial) -> dict:
    dom = f.domain
    return {str(e): dom.format(c) for e, c in sorted(f.terms().items())}


def laurent_from_map(m: dict, dom: CoefficientDomain) -> LaurentPolynomial:
    return LaurentPolynomial.from_dict(dom, {int(e): dom.parse(c) for e, c in m.items()})


def value_to_dict(v: RationalFunctionValue | None) -> dict:
    if v is None:
        return {"zero": True, "display": "0"}
    return {
        "zero": False,
        "numerator": laurent_to_map(v.numerator),
        "denominator": laurent_to_map(v.denominator),
        "display": str(v),
    }


def value_from_dict(d: dict, dom: CoefficientDomain) -> RationalFunctionValue | None:
    if d.get("zero"):
        return None
    return RationalFunctionValue(laurent_from_map(d["numerator"], dom),
                                 laurent_from_map(d["denominator"], dom))


def units_to_dict(u: UnitSpec, dom: CoefficientDomain) -> dict:
    return {"kind": u.kind, "generators": [dom.field.format(g) for g in u.generators]}


def units_from_dict(d: dict, dom: CoefficientDomain) -> UnitSpec:
    return UnitSpec(d["kind"], tuple(dom.field.parse(g) for g in d.get("generators", [])))


def torsion_to_dict(v: TorsionValue) -> dict:
    out = {"ring": v.ring.tag, "field": v.ring.field.tag, "k": v.k}
    out.update(value_to_dict(v.value))
    out["chosen_column"] = v.chosen_column
    out["diagnostic"] = v.diagnostic
    out["units"] = units_to_dict(v.units, v.ring)
    return out


def torsion_from_dict(d: dict) -> TorsionValue:
    ring = domain_from_tag(d["ring"])
    return TorsionValue(
        value=value_from_dict(d, ring.field),
        units=units_from_dict(d["units"], ring),
        k=d["k"],
        ring=ring,
        chosen_column=d.get("chosen_column"),
        diagnostic=d.get("diagnostic"),
    )


def report_to_dict(r: DiagnosticsReport) -> dict:
    return {
        "torsion": torsion_to_dict(r.torsion),
        "degree": r.degree,
        "monic": r.monic.value,
        "norm_lower_bound": r.norm_lower_bound,
        "certified_lower_bound": r.norm_lower_bound is not None,
        "known_norm": r.known_norm,
        "fibered_verdict": str(r.fibered_verdict),
        "warnings": list(r.warnings),
    }


def report_from_dict(d: dict) -> DiagnosticsReport:
    return DiagnosticsReport(
        torsion=torsion_from_dict(d["torsion"]),
        degree=d["degree"],
        monic=Monicity(d["monic"]),
        norm_lower_bound=d["norm_lower_bound"],
        fibered_verdict=FiberedVerdict.parse(d["fibered_verdict"]),
        known_norm=d.get("known_norm"),
        warnings=list(d.get("warnings", [])),
    )


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"
