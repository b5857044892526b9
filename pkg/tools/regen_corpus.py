"""Rebuild the bundled corpus and its expected values from the sympy oracles.

    python3 tools/regen_corpus.py

Entry definitions live here; ``expected`` blocks are recomputed every run.
"""

import json
import random
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

import factories  # noqa: E402
import oracles  # noqa: E402
import sympy as sp  # noqa: E402

OUT = ROOT / "src" / "twistedtorsion" / "corpus"

TREFOIL = "x y x y^-1 x^-1 y^-1"
FIGURE8 = "a b a^-1 b^-1 a b^-1 a^-1 b a b^-1"
KNOT_5_2 = "a b a b^-1 a^-1 b a b^-1 a^-1 b^-1 a b a^-1 b^-1"


def knot(name, gens, rel, images=None, ring="integers", fibered=None, norm=None, phi=None):
    entry = {
        "name": name,
        "kind": "problem",
        "presentation": {"generators": gens, "relators": [rel]},
        "phi": phi or {g: 1 for g in gens},
    }
    if images:
        entry["representation"] = {"ring": ring, "k": len(next(iter(images.values()))), "images": images}
    entry["options"] = {"search_bound": 6, "known_norm": norm, "engine": "wada"}
    entry["fibered"] = fibered
    return entry


def _p(ring):
    return int(ring[3:-1]) if ring.startswith("GF(") else None


def _check_pm1(images, p):
    for m in (images or {}).values():
        d = int(sp.Matrix(m).det())
        assert (d % p in (1, p - 1)) if p else d in (1, -1), "corpus reps must have det +-1"


def _verdict(pair, monic, k, norm):
    if pair is None:
        return "Obstructed(zero)"
    if not monic:
        return "Obstructed(non-monic)"
    if norm is not None and oracles.degree(pair) != k * norm:
        return "Obstructed(degree)"
    return "NoObstruction"


def expected_for(gens, relators, phi, images, ring, norm, column=None):
    p = _p(ring)
    _check_pm1(images, p)
    raw = oracles.wada_oracle(gens, relators, phi, images, p, column)
    pair = None if raw is None else oracles.canonical(*raw, p=p)
    k = len(next(iter(images.values()))) if images else 1
    monic = pair is not None and oracles.monic_pm1(pair, ring == "integers", p)
    return {
        "value": oracles.value_dict(pair),
        "degree": oracles.degree(pair),
        "monic": "Monic" if monic else "NotMonic",
        "fibered_verdict": _verdict(pair, monic, k, norm),
    }


def fill_problem(entry):
    rep = entry.get("representation", {})
    entry["expected"] = expected_for(entry["presentation"]["generators"], entry["presentation"]["relators"],
                                     entry["phi"], rep.get("images"), rep.get("ring", "integers"),
                                     entry["options"]["known_norm"])
    return entry


def _inverse_word(word):
    out = []
    for name, e in reversed(oracles.tokens(word)):
        out.append(name if e < 0 else f"{name}^-1")
    return " ".join(out) or "1"


def mapping_torus(name, gens, monodromy, images=None, ring="integers"):
    entry = {"name": name, "kind": "mapping-torus", "fiber_generators": gens, "stable_letter": "mu",
             "monodromy": monodromy}
    if images:
        entry["representation"] = {"ring": ring, "k": len(next(iter(images.values()))), "images": images}
    entry["options"] = {"search_bound": 6, "known_norm": len(gens) - 1, "engine": "both"}
    entry["fibered"] = True
    all_gens = gens + ["mu"]
    rels = [f"mu {g} mu^-1 {_inverse_word(monodromy[g])}" for g in gens]
    phi = {g: 0 for g in gens} | {"mu": 1}
    full_images = None
    if images:
        full_images = {g: images.get(g, [[1 if i == j else 0 for j in range(2)] for i in range(2)])
                       for g in all_gens}
    entry["expected"] = expected_for(all_gens, rels, phi, full_images, ring, len(gens) - 1,
                                     column=len(gens))
    return entry


def complex_entry(name, dims, B3, B2, B1, selection=None):
    entry = {"name": name, "kind": "complex", "ring": "rationals", "dimensions": list(dims),
             "B3": B3, "B2": B2, "B1": B1}
    if selection:
        entry["selection"] = selection

    def sym(M, r, c):
        return sp.Matrix(r, c, lambda i, j: oracles.expr_from_map(_as_map(M[i][j])))

    n3, n2, n1, n0 = dims
    raw = oracles.contraction_torsion(sym(B3, n2, n3), sym(B2, n1, n2), sym(B1, n0, n1), dims)
    pair = None if raw is None else oracles.canonical(*raw)
    entry["expected"] = {"value": oracles.value_dict(pair)}
    return entry


def _as_map(x):
    if isinstance(x, dict):
        return x
    return {"0": x}


def build():
    entries = [
        knot("trefoil_trivial", ["x", "y"], TREFOIL, fibered=True, norm=1),
        knot("trefoil_sl2z", ["x", "y"], TREFOIL, {"x": [[1, 1], [0, 1]], "y": [[1, 0], [-1, 1]]},
             fibered=True, norm=1),
        knot("trefoil_phi2", ["x", "y"], TREFOIL, norm=2, phi={"x": 2, "y": 2}),
        knot("figure8_trivial", ["a", "b"], FIGURE8, fibered=True, norm=1),
        knot("figure8_gf7", ["a", "b"], FIGURE8, {"a": [[1, 1], [0, 1]], "b": [[1, 0], [5, 1]]},
             ring="GF(7)", fibered=True, norm=1),
        knot("5_2_trivial", ["a", "b"], KNOT_5_2, fibered=False, norm=1),
        knot("5_2_gf11", ["a", "b"], KNOT_5_2, {"a": [[1, 1], [0, 1]], "b": [[1, 0], [7, 1]]},
             ring="GF(11)", fibered=False, norm=1),
    ]
    entries = [fill_problem(e) for e in entries]

    entries.append(mapping_torus("mt_trefoil", ["a", "b"], {"a": "b", "b": "a^-1 b"}))
    entries.append(mapping_torus("mt_identity", ["a", "b"], {"a": "a", "b": "b"}))
    rng = random.Random(20240611)
    for rank in (2, 3):
        while True:
            imgs = factories.random_automorphism(rng, rank, moves=6, max_len=8)
            got = factories.affine_rep(rng, imgs, rank)
            moved = sum(1 for i, w in enumerate(imgs) if w != [(i, 1)])
            if got and moved == rank and sum(map(len, imgs)) >= 2 * rank + 2:
                break
        p, rep = got
        gens = list(factories.NAMES[:rank])
        mono = {g: factories.word_string(w) for g, w in zip(gens, imgs)}
        entries.append(mapping_torus(f"mt_rank{rank}_gf{p}", gens, mono, rep, ring=f"GF({p})"))

    entries.append(complex_entry("complex_contractible", (0, 1, 1, 0), [[]], [[1]], []))
    entries.append(complex_entry("complex_not_acyclic", (0, 1, 1, 0), [[]], [[0]], []))
    entries.append(complex_entry("complex_scaled", (1, 2, 1, 0), [[3], [0]], [[0, 5]], []))
    dims, B3, B2, B1 = factories.random_acyclic_complex(random.Random(7), (1, 3, 3, 1))
    entries.append(complex_entry("complex_laurent", dims, B3, B2, B1))
    return entries


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.json"):
        old.unlink()
    for e in build():
        (OUT / f"{e['name']}.json").write_text(json.dumps(e, indent=2) + "\n")
        print(e["name"], json.dumps(e["expected"]))


if __name__ == "__main__":
    main()
