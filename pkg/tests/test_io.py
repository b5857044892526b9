import copy
import json
from fractions import Fraction

import pytest

from twistedtorsion import cli, io
from twistedtorsion.algebra import GF, QQ, LaurentPolynomial
from twistedtorsion.rep import TwistData
from twistedtorsion.topology import diagnose
from twistedtorsion.torsion import wada_torsion

CORPUS = cli.corpus_dir()


def entry(name):
    return json.loads((CORPUS / f"{name}.json").read_text())


def test_laurent_map_roundtrip():
    f = LaurentPolynomial.from_dict(QQ, {-2: 3, 0: 1, 4: -1})
    assert io.laurent_from_map(io.laurent_to_map(f), QQ) == f
    g = LaurentPolynomial.from_dict(GF(7), {0: 6, 1: 3})
    assert io.laurent_to_map(g) == {"0": 6, "1": 3}
    h = LaurentPolynomial.from_dict(QQ, {1: Fraction(1, 2)})
    assert io.laurent_to_map(h) == {"1": "1/2"}


@pytest.mark.parametrize("name", ["trefoil_trivial", "trefoil_sl2z", "figure8_gf7", "5_2_trivial"])
def test_report_roundtrip(name):
    prob = io.parse_problem(entry(name))
    rep = diagnose(wada_torsion(prob.presentation, prob.twist), known_norm=prob.options.known_norm)
    d = io.report_to_dict(rep)
    back = io.report_from_dict(json.loads(io.dumps(d)))
    assert io.report_to_dict(back) == d
    assert back.torsion.value == rep.torsion.value


def test_zero_value_serializes():
    assert io.value_to_dict(None) == {"zero": True, "display": "0"}
    assert io.value_from_dict({"zero": True}, QQ) is None


def test_problem_defaults_to_trivial_rep():
    data = entry("trefoil_trivial")
    data.pop("options")
    prob = io.parse_problem(data)
    assert isinstance(prob.twist, TwistData) and prob.twist.k == 1
    assert prob.options.search_bound == 6 and prob.options.engine == "wada"


def test_monodromy_defaults():
    prob = io.parse_monodromy_problem(entry("mt_rank3_gf7"))
    assert prob.options.engine == "both" and prob.options.known_norm == 2


def _mutated(name, fn):
    d = copy.deepcopy(entry(name))
    fn(d)
    return d


@pytest.mark.parametrize("fn,path", [
    (lambda d: d["presentation"]["relators"].__setitem__(0, "x q"), "presentation.relators[0]"),
    (lambda d: d.pop("phi"), "phi"),
    (lambda d: d["phi"].__setitem__("x", 1.5), "phi.x"),
    (lambda d: d["representation"]["images"].__setitem__("x", [[1, 2]]), "representation.images.x"),
    (lambda d: d["representation"].__setitem__("ring", "GF(9)"), "representation.ring"),
    (lambda d: d["options"].__setitem__("search_bound", "x"), "options.search_bound"),
])
def test_schema_errors_name_the_field(fn, path):
    with pytest.raises(io.InputError) as info:
        io.parse_problem(_mutated("trefoil_sl2z", fn))
    assert info.value.path == path


def test_complex_schema_errors():
    with pytest.raises(io.InputError) as info:
        io.parse_complex(_mutated("complex_scaled", lambda d: d.__setitem__("dimensions", [1, 2])))
    assert info.value.path == "dimensions"


def test_load_json_reports_position(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{\n  "a": 1,\n  "b": \n}')
    with pytest.raises(io.InputError, match="line 4, column 1"):
        io.load_json(p)
    p.write_text("[1, 2]")
    with pytest.raises(io.InputError, match="object"):
        io.load_json(p)


def test_output_is_deterministic():
    a = io.dumps(cli.run_torsion(entry("trefoil_sl2z")))
    b = io.dumps(cli.run_torsion(entry("trefoil_sl2z")))
    assert a == b and a.endswith("\n")
