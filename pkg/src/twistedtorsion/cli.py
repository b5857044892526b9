"""Command line front end.

    twistedtorsion torsion --input knot.json
    twistedtorsion turaev --input complex.json --verify-selections
    twistedtorsion mapping-torus --input monodromy.json --engine both
    twistedtorsion corpus [--filter 5_2] [--fibered-only]

Exit codes: 0 success, 2 input or validation error, 3 unsupported
presentation, 4 internal property violation.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from importlib import resources
from pathlib import Path

from . import io
from .group import ParseError
from .rep import ValidationError, validate_phi, validate_representation
from .topology import (DEFAULT_SEARCH_BOUND, Monicity, agree_up_to_units, diagnose,
                       fibered_torsion_formula, mapping_torus_presentation)
from .torsion import (ChainComplexError, SelectionFailure, UnsupportedPresentation,
                      all_selections_torsion, turaev_torsion, wada_all_columns, wada_torsion)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3
EXIT_PROPERTY = 4


def _apply_overrides(opts: io.Options, args):
    if args.search_bound is not None:
        opts.search_bound = args.search_bound
    if args.known_norm is not None:
        opts.known_norm = args.known_norm
    if args.engine is not None:
        opts.engine = args.engine
    return opts


# -- commands ----------------------------------------------------------------

def run_torsion(data: dict, args=None) -> dict:
    prob = io.parse_problem(data)
    opts = _apply_overrides(prob.options, args) if args else prob.options
    if opts.engine != "wada":
        raise ValidationError("the fibered engine needs a monodromy file (use mapping-torus)")
    pres, twist = prob.presentation, prob.twist
    status = validate_phi(pres, twist.phi)
    validate_representation(pres, twist)
    v = wada_torsion(pres, twist, validate=False)
    report = diagnose(v, opts.search_bound, opts.known_norm, status)
    return {
        "command": "torsion",
        "name": prob.name,
        "generators": list(pres.generators),
        "relators": [pres.format_relator(i) for i in range(len(pres.relators))],
        "phi": dict(zip(pres.generators, twist.phi)),
        "phi_primitive": status.primitive,
        "engine": "wada",
        "search_bound": opts.search_bound,
        "report": io.report_to_dict(report),
    }


def run_mapping_torus(data: dict, args=None) -> dict:
    prob = io.parse_monodromy_problem(data)
    opts = _apply_overrides(prob.options, args) if args else prob.options
    m, twist = prob.monodromy, prob.twist
    pres, _ = mapping_torus_presentation(m)
    validate_representation(pres, twist)
    values = {}
    if opts.engine in ("wada", "both"):
        values["wada"] = wada_torsion(pres, twist, validate=False)
    if opts.engine in ("fibered", "both"):
        values["fibered"] = fibered_torsion_formula(m, twist, validate=False)
    agreement = None
    if len(values) == 2:
        agreement = agree_up_to_units(values["wada"], values["fibered"], opts.search_bound)
    main = values.get("fibered", values.get("wada"))
    report = diagnose(main, opts.search_bound, opts.known_norm)
    return {
        "command": "mapping-torus",
        "name": prob.name,
        "fiber_generators": list(m.fiber_generators),
        "stable_letter": m.stable_letter,
        "fiber_norm": m.fiber_norm,
        "relators": [pres.format_relator(i) for i in range(len(pres.relators))],
        "engine": opts.engine,
        "search_bound": opts.search_bound,
        "values": {name: io.torsion_to_dict(v) for name, v in values.items()},
        "agreement": agreement,
        "report": io.report_to_dict(report),
    }


def run_turaev(data: dict, args=None) -> dict:
    prob = io.parse_complex(data)
    C = prob.complex
    verify = bool(args and args.verify_selections)
    out = {"command": "turaev", "name": prob.name, "ring": C.domain.tag, "dimensions": list(C.dims)}
    if prob.selection is not None:
        try:
            v = turaev_torsion(C, prob.selection)
        except SelectionFailure as exc:
            raise ValidationError(f"selection {prob.selection}: {exc}") from None
        out.update(value=io.value_to_dict(v), diagnostic=None if v is not None else "not-acyclic",
                   selection=_selection_dict(prob.selection), selections_tried=1)
        if verify:
            check = all_selections_torsion(C, verify=True)
            out["verified"] = check.agreement and _same(v, check.value)
        else:
            out["verified"] = None
        return out
    res = all_selections_torsion(C, verify=verify)
    out.update(value=io.value_to_dict(res.value), diagnostic=res.diagnostic,
               selection=_selection_dict(res.selection), selections_tried=res.selections_tried,
               verified=res.agreement)
    return out


def _same(a, b):
    if a is None or b is None:
        return a is None and b is None
    return a.equals_up_to_sign(b)


def _selection_dict(sel):
    if sel is None:
        return None
    return {"rows3": list(sel.rows3), "cols1": list(sel.cols1)}


# -- text rendering ----------------------------------------------------------

def render_text(result: dict) -> str:
    lines = [f"{result['command']}: {result['name']}"]
    if result["command"] == "turaev":
        lines.append(f"  value: {result['value']['display']}")
        if result["diagnostic"]:
            lines.append(f"  diagnostic: {result['diagnostic']}")
        if result["selection"] is not None:
            lines.append(f"  selection: rows3={result['selection']['rows3']} cols1={result['selection']['cols1']}")
        if result.get("verified") is not None:
            lines.append(f"  all selections agree: {result['verified']}")
        return "\n".join(lines) + "\n"
    if result["command"] == "mapping-torus":
        for name, v in result["values"].items():
            lines.append(f"  {name}: {v['display']}")
        if result["agreement"] is not None:
            lines.append(f"  engines agree: {result['agreement']}")
    rep = result["report"]
    lines += [
        f"  torsion: {rep['torsion']['display']}",
        f"  degree: {rep['degree']}",
        f"  monic: {rep['monic']}",
        f"  norm lower bound: {rep['norm_lower_bound']}",
        f"  fibered obstruction: {rep['fibered_verdict']}",
    ]
    lines += [f"  warning: {w}" for w in rep["warnings"]]
    return "\n".join(lines) + "\n"


# -- corpus ------------------------------------------------------------------

def corpus_dir() -> Path:
    return Path(str(resources.files("twistedtorsion") / "corpus"))


def corpus_files(directory=None):
    d = Path(directory) if directory else corpus_dir()
    return sorted(d.glob("*.json"))


def _fixture_matches(expected: dict, got: dict, dom) -> bool:
    """Compare against a stored canonical value; torsion is only defined up to sign."""
    if not expected or "value" not in expected:
        return True
    want = io.value_from_dict(expected["value"], dom.field)
    have = io.value_from_dict(got, dom.field)
    return _same(want, have)


def check_entry(path) -> dict:
    """Run one corpus file and check its fixture and the fibered-class properties."""
    data = io.load_json(path)
    kind = data.get("kind", "problem")
    name = data.get("name", Path(path).stem)
    row = {"name": name, "kind": kind, "k": None, "degree": None, "monic": None, "bound": None,
           "known_norm": None, "verdict": None, "failures": []}
    fails = row["failures"]
    expected = data.get("expected", {})
    if kind == "complex":
        res = run_turaev(data, argparse.Namespace(verify_selections=True))
        row["verdict"] = res["value"]["display"]
        if not _fixture_matches(expected, res["value"], io.domain_from_tag(res["ring"])):
            fails.append("fixture")
        if res["verified"] is False:
            fails.append("selections")
        return row

    if kind == "mapping-torus":
        res = run_mapping_torus(data)
        fibered = data.get("fibered", True)
        if res["agreement"] is False:
            fails.append("cross-engine")
        got = res["values"]["fibered"]
    else:
        res = run_torsion(data)
        fibered = data.get("fibered")
        got = res["report"]["torsion"]
        prob = io.parse_problem(data)
        cols = wada_all_columns(prob.presentation, prob.twist)
        vals = [v for v in cols.values()]
        if any(not _same(vals[0], v) for v in vals[1:]):
            fails.append("columns")
    rep = res["report"]
    k = rep["torsion"]["k"]
    row.update(k=k, degree=rep["degree"], monic=rep["monic"], bound=rep["norm_lower_bound"],
               known_norm=rep["known_norm"], verdict=rep["fibered_verdict"])
    if not _fixture_matches(expected, got, io.domain_from_tag(got["ring"])):
        fails.append("fixture")
    for key in ("monic", "fibered_verdict", "degree"):
        if key in expected and expected[key] != rep[key]:
            fails.append(f"fixture-{key}")
    norm = rep["known_norm"]
    if fibered:
        if rep["monic"] != Monicity.MONIC.value:
            fails.append("fibered-not-monic")
        if norm is not None and rep["degree"] != k * norm:
            fails.append("fibered-degree")
        if rep["fibered_verdict"] != "NoObstruction":
            fails.append("soundness")
    if norm is not None and rep["norm_lower_bound"] is not None and rep["norm_lower_bound"] > norm:
        fails.append("norm-bound")
    return row


def _check_entry_safe(path):
    try:
        return check_entry(path)
    except Exception as exc:  # reported as a failing row
        return {"name": Path(path).stem, "kind": "?", "k": None, "degree": None, "monic": None,
                "bound": None, "known_norm": None, "verdict": None,
                "failures": [f"error: {type(exc).__name__}: {exc}"]}


def run_corpus(directory=None, name_filter=None, fibered_only=False, jobs=1):
    paths = []
    for p in corpus_files(directory):
        if name_filter and name_filter not in p.stem:
            continue
        if fibered_only:
            data = io.load_json(p)
            fib = data.get("fibered", data.get("kind") == "mapping-torus")
            if not fib:
                continue
        paths.append(p)
    if jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(_check_entry_safe, paths))
    return [_check_entry_safe(p) for p in paths]


def format_table(rows) -> str:
    header = ["name", "k", "degree", "monic", "bound", "norm", "verdict", "status"]
    body = []
    for r in rows:
        status = "PASS" if not r["failures"] else "FAIL(" + ",".join(r["failures"]) + ")"
        body.append([r["name"], r["k"], r["degree"], r["monic"], r["bound"], r["known_norm"],
                     r["verdict"], status])
    cells = [[("-" if c is None else str(c)) for c in row] for row in [header] + body]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n" for row in cells)


# -- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twistedtorsion",
                                     description="Twisted torsion invariants and fiberedness obstructions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        p.add_argument("--input", required=needs_input, help="problem file (JSON)")
        p.add_argument("--output", help="write the result here instead of stdout")
        p.add_argument("--search-bound", type=int, default=None,
                       help=f"unit search bound (default {DEFAULT_SEARCH_BOUND})")
        p.add_argument("--known-norm", type=int, default=None, help="known Thurston norm of phi")
        p.add_argument("--engine", choices=["wada", "fibered", "both"], default=None)
        p.add_argument("--verify-selections", action="store_true",
                       help="evaluate every Turaev selection and check agreement")
        p.add_argument("--format", choices=["json", "text"], default="json")

    common(sub.add_parser("torsion", help="Wada torsion and diagnostics for a presentation"))
    common(sub.add_parser("turaev", help="torsion of a based chain complex"))
    common(sub.add_parser("mapping-torus", help="mapping torus of a free-group automorphism"))
    cp = sub.add_parser("corpus", help="run the bundled corpus and check its properties")
    common(cp, needs_input=False)
    cp.set_defaults(format="text")
    cp.add_argument("--filter", default=None, help="only entries whose name contains this")
    cp.add_argument("--fibered-only", action="store_true")
    cp.add_argument("--jobs", type=int, default=1)
    return parser


def _emit(text: str, output):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "corpus":
            rows = run_corpus(args.input, args.filter, args.fibered_only, args.jobs)
            if args.format == "json":
                _emit(io.dumps(rows), args.output)
            else:
                _emit(format_table(rows), args.output)
            return EXIT_PROPERTY if any(r["failures"] for r in rows) else EXIT_OK

        data = io.load_json(args.input)
        runner = {"torsion": run_torsion, "turaev": run_turaev,
                  "mapping-torus": run_mapping_torus}[args.command]
        result = runner(data, args)
        _emit(io.dumps(result) if args.format == "json" else render_text(result), args.output)
        if result.get("agreement") is False or result.get("verified") is False:
            print("error: internal property violation (engines or selections disagree)", file=sys.stderr)
            return EXIT_PROPERTY
        return EXIT_OK
    except UnsupportedPresentation as exc:
        print(f"error: unsupported presentation: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (io.InputError, ValidationError, ChainComplexError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
