"""The ten acceptance criteria. Each test prints one PASS/FAIL line (also
collected into the terminal summary by conftest)."""

import functools
import itertools
import random
import time

import sympy as sp

import conftest
import factories
import oracles
from twistedtorsion import cli, io
from twistedtorsion.algebra import GF, QQ, ZZ, ExactMatrix, det_exact, parse_laurent, normalize_value
from twistedtorsion.group import FreeWord, GroupRingElement, fox_derivative
from twistedtorsion.rep import TwistData, UnitSpec, determinant_image_spec
from twistedtorsion.topology import (Monicity, MonodromyData, agree_up_to_units, diagnose,
                                     fibered_obstruction, fibered_torsion_formula,
                                     mapping_torus_presentation)
from twistedtorsion.torsion import (BasedChainComplex, TorsionValue, all_selections_torsion,
                                    wada_all_columns, wada_torsion)

CORPUS = cli.corpus_dir()


def criterion(n, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run():
            start = time.perf_counter()
            try:
                detail = fn() or ""
            except BaseException as exc:
                conftest.ACCEPTANCE[n] = ("FAIL", title, f"{type(exc).__name__}: {exc}"[:200])
                print(f"criterion {n}: FAIL  {title}")
                raise
            detail = f"{detail}; {time.perf_counter() - start:.1f}s".lstrip("; ")
            conftest.ACCEPTANCE[n] = ("PASS", title, detail)
            print(f"criterion {n}: PASS  {title}  ({detail})")
        return run
    return wrap


def L(text):
    return parse_laurent(text, QQ)


def problem(name):
    return io.parse_problem(io.load_json(CORPUS / f"{name}.json"))


def report_for(name):
    prob = problem(name)
    v = wada_torsion(prob.presentation, prob.twist)
    return v, diagnose(v, prob.options.search_bound, prob.options.known_norm)


def numerator_up_to_units(v, text):
    want = L(text)
    got = v.value.numerator
    ratio = normalize_value(got, want)
    return ratio.numerator.is_constant() and ratio.denominator.is_constant() and \
        ratio.numerator.lowest_coefficient in (1, -1)


@criterion(1, "trefoil, trivial rep")
def test_criterion_1_trefoil():
    v, rep = report_for("trefoil_trivial")
    canon = normalize_value(L("t^2 - t + 1"), L("t - 1"))
    # torsion is defined up to +-t^m; the canonical pair is pinned, the sign is not
    assert v.value == canon or v.value == -canon
    assert v.value.denominator == canon.denominator
    assert rep.degree == 1 and rep.monic is Monicity.MONIC
    assert rep.norm_lower_bound == 1 and str(rep.fibered_verdict) == "NoObstruction"
    return f"tau = {v.value}"


@criterion(2, "figure-eight, trivial rep")
def test_criterion_2_figure_eight():
    v, rep = report_for("figure8_trivial")
    assert numerator_up_to_units(v, "t^2 - 3t + 1")
    assert rep.degree == 1 and rep.monic is Monicity.MONIC
    return f"tau = {v.value}"


@criterion(3, "5_2 knot, trivial rep")
def test_criterion_3_five_two():
    v, rep = report_for("5_2_trivial")
    assert numerator_up_to_units(v, "2t^2 - 3t + 2")
    assert rep.monic is Monicity.NOT_MONIC
    assert str(fibered_obstruction(v)) == "Obstructed(non-monic)"
    return f"tau = {v.value}"


@criterion(4, "trefoil, SL(2,Z) parabolic rep")
def test_criterion_4_trefoil_sl2z():
    prob = problem("trefoil_sl2z")
    v, rep = report_for("trefoil_sl2z")
    assert v.k == 2 and rep.degree == 2 == v.k * prob.options.known_norm
    assert rep.monic is Monicity.MONIC
    fixture = io.load_json(CORPUS / "trefoil_sl2z.json")["expected"]["value"]
    frozen = io.value_from_dict(fixture, QQ)
    assert v.value == frozen or v.value == -frozen
    return f"tau = {v.value}"


@criterion(5, "norm lower bound on the corpus")
def test_criterion_5_norm_bound():
    checked = 0
    for row in cli.run_corpus():
        if row["kind"] == "complex" or row["known_norm"] is None or row["degree"] is None:
            continue
        assert -(-row["degree"] // row["k"]) <= row["known_norm"], row["name"]
        checked += 1
    assert checked >= 10
    return f"{checked} entries"


@criterion(6, "Fox fundamental formula")
def test_criterion_6_fundamental_formula():
    rng = random.Random(6)
    n_words = 1200
    for _ in range(n_words):
        ngens = rng.randint(1, 4)
        w = FreeWord.reduce(factories.random_letters(rng, ngens, rng.randint(0, 20)))
        total = GroupRingElement()
        for j in range(ngens):
            total = total + fox_derivative(w, j) * (GroupRingElement.word(FreeWord.generator(j)) - 1)
        assert total == GroupRingElement.word(w) - 1, w
    return f"{n_words} words"


def _corpus_presentations():
    for path in cli.corpus_files():
        data = io.load_json(path)
        if data.get("kind", "problem") == "problem":
            prob = io.parse_problem(data)
            yield prob.name, prob.presentation, prob.twist
        elif data["kind"] == "mapping-torus":
            prob = io.parse_monodromy_problem(data)
            pres, _ = mapping_torus_presentation(prob.monodromy)
            yield prob.name, pres, prob.twist


@criterion(7, "Wada column independence on the corpus")
def test_criterion_7_columns():
    pairs = 0
    for name, pres, twist in _corpus_presentations():
        units = determinant_image_spec(twist)
        assert units == UnitSpec.plus_minus_one(), name
        cols = wada_all_columns(pres, twist)
        vals = [TorsionValue(v, units, twist.k, twist.domain) for v in cols.values()]
        for a, b in itertools.combinations(vals, 2):
            assert agree_up_to_units(a, b) is True, name
            pairs += 1
    assert pairs > 0
    return f"{pairs} column pairs"


def _twist(rep, gens, ring):
    ident = [[1, 0], [0, 1]]
    return TwistData((0,) * (len(gens) - 1) + (1,), 2, ring, tuple(rep.get(g, ident) for g in gens))


@criterion(8, "fibered formula against Wada on random monodromies")
def test_criterion_8_cross_engine():
    rng = random.Random(88)
    monodromies = comparisons = 0
    while monodromies < 24:
        rank = 2 + monodromies % 2
        imgs = factories.random_automorphism(rng, rank, moves=rng.randint(3, 7), max_len=10)
        gens = list(factories.NAMES[:rank])
        m = MonodromyData.parse(gens, [factories.word_string(w) for w in imgs])
        pres, phi = mapping_torus_presentation(m)
        all_gens = gens + ["mu"]
        twists = [TwistData.trivial(phi, ZZ), _twist(factories.stable_letter_rep(rng, rank), all_gens, ZZ)]
        affine = factories.affine_rep(rng, imgs, rank)
        if affine:
            twists.append(_twist(affine[1], all_gens, GF(affine[0])))
        for tw in twists:
            a = fibered_torsion_formula(m, tw)
            b = wada_torsion(pres, tw)
            assert agree_up_to_units(a, b) is True, (imgs, tw.images)
            comparisons += 1
        monodromies += 1
    return f"{monodromies} monodromies, {comparisons} comparisons"


def _sym(M, r, c):
    return sp.Matrix(r, c, lambda i, j: oracles.expr_from_map(M[i][j]))


@criterion(9, "Turaev selections and contraction oracle")
def test_criterion_9_turaev():
    rng = random.Random(99)
    n_complexes = 40
    for i in range(n_complexes):
        dims, B3, B2, B1 = factories.random_acyclic_complex(rng)
        n3, n2, n1, n0 = dims
        C = BasedChainComplex(ExactMatrix(QQ, B3, n2, n3), ExactMatrix(QQ, B2, n1, n2),
                              ExactMatrix(QQ, B1, n0, n1))
        out = all_selections_torsion(C, verify=True)
        assert out.agreement, dims
        want = oracles.canonical(*oracles.contraction_torsion(_sym(B3, n2, n3), _sym(B2, n1, n2),
                                                              _sym(B1, n0, n1), dims, seed=i))
        got = out.value
        num = [got.numerator[e] for e in range(got.numerator.high + 1)]
        den = [got.denominator[e] for e in range(got.denominator.high + 1)]
        assert oracles.same_up_to_sign((num, den), want), dims
    return f"{n_complexes} complexes"


@criterion(10, "determinant engine against cofactor expansion")
def test_criterion_10_determinants():
    rng = random.Random(1010)
    cases = [(ZZ, None, "integers"), (QQ, None, "rationals"), (GF(7), 7, "integers"),
             (GF(2_147_483_647), 2_147_483_647, "integers")]
    n_matrices = 240
    for i in range(n_matrices):
        dom, p, field = cases[i % len(cases)]
        n = rng.randint(1, 4)
        raw = factories.random_laurent_matrix(rng, n, field=field)
        got = det_exact(ExactMatrix(dom, raw))
        got_expr = sum((sp.Rational(str(c)) * oracles.t ** e for e, c in got.terms().items()), sp.Integer(0))
        want = oracles.cofactor_det([[oracles.expr_from_map(x) for x in row] for row in raw])
        assert oracles.laurent_equal(got_expr, want, p), (dom, raw)
    return f"{n_matrices} matrices"
