"""Acceptance criteria, one test each.

Every test records a single ``PASS``/``FAIL`` line; the lines are printed
in the pytest terminal summary, and ``python tests/test_acceptance.py``
prints them directly.
"""

from __future__ import annotations

import sys
import time
from functools import lru_cache
from math import factorial
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import CORPUS_SEED, CORPUS_SIZE  # noqa: E402
from hue.complexes import box_complex, build_coloring_complex, subspace_complex  # noqa: E402
from hue.corpus import random_corpus, random_shrink, random_subgraph  # noqa: E402
from hue.enumerative import (  # noqa: E402
    METHODS,
    chromatic_f_vector,
    chromatic_polynomial,
    cube_h,
    cube_T,
    ehrhart_series_check,
    f_vector_of_poly,
    h_vector_of_poly,
    poly_from_f,
    truncated_bounds,
)
from hue.hypergraph import generate_family  # noqa: E402
from hue.topology import (  # noqa: E402
    connectedness_check,
    cup_product_analysis,
    integral_homology,
    partitionability_obstruction,
    rational_betti,
    reisner_cm_check,
)
from hue.wedge import wedge_decomposition  # noqa: E402

RESULTS: dict[int, str] = {}


@lru_cache(maxsize=None)
def corpus():
    hgs = random_corpus(CORPUS_SIZE, CORPUS_SEED)
    assert len(hgs) >= 200
    for hg in hgs:
        assert hg.n <= 7 and 1 <= hg.num_edges <= 6
        assert all(2 <= len(e) <= hg.n - 1 for e in hg.edges)
    return hgs


@lru_cache(maxsize=None)
def torus_complex():
    return build_coloring_complex(generate_family("torus9"))


def record(num: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    RESULTS[num] = line
    print(line)


# ----------------------------------------------------------------- criteria


def criterion_1():
    t0 = time.perf_counter()
    hg = generate_family("paper_6_nonpart")
    h_delta = build_coloring_complex(hg).h_vector
    h_box = box_complex(hg).h_vector
    elapsed = time.perf_counter() - t0
    ok = h_delta == (1, 33, 39, -1) and h_box == (1, 33, 39, -1, 0, 0) and elapsed < 10
    return ok, f"h(Δ)={h_delta}, h(□)={h_box}, {elapsed:.2f}s"


def criterion_2():
    expected = {3: (1, 11, 11, 1, 0, 0), 5: (1, -1, -1, 1, 0, 0), 6: (1, -3, 3, -1, 0, 0)}
    got = {}
    ok = True
    for size, want in expected.items():
        d = 6 - size + 1
        closed = tuple(cube_h(d, i, 4) for i in range(6))
        hg = generate_family("single_edge", 6, size)
        ehrhart = poly_from_f(subspace_complex(hg, hg.edges).f_vector)
        transformed = h_vector_of_poly(ehrhart, 4).values
        got[size] = closed
        ok &= closed == want == transformed
    return ok, "P_123, P_12345, P_123456 -> " + ", ".join(str(got[s]) for s in (3, 5, 6))


def criterion_3():
    K = torus_complex()
    t0 = time.perf_counter()
    hz = integral_homology(K)
    hq = rational_betti(K)
    elapsed = time.perf_counter() - t0
    ranks_q = hq.betti_vector(0, 3)
    ranks_z = hz.betti_vector(0, 3)
    ok = ranks_q == ranks_z == (0, 2, 28, 9) and elapsed < 600
    torsion = hz.to_json()["torsion"] or "none"
    return ok, f"Q ranks {ranks_q}, Z free ranks {ranks_z}, torsion {torsion}, {elapsed:.2f}s"


def criterion_4():
    res = cup_product_analysis(torus_complex())
    w = res["witness"]
    ok = w is not None and min(w["bidegree"]) >= 1 and res["wedge_of_spheres"] is False
    found = [(tuple(r["bidegree"]), r["nontrivial"], r["pairs"]) for r in res["products"]]
    return ok, f"witness bidegree {w and w['bidegree']}, nontrivial/pairs {found}"


def criterion_5():
    ok = True
    parts = []
    for n in (4, 5, 6):
        K = build_coloring_complex(generate_family("single_edge", n, 2))
        facets = len(K.facets())
        betti = integral_homology(K).betti
        sphere = betti == {d: int(d == n - 3) for d in range(-1, n - 2)}
        cm = reisner_cm_check(K)["verdict"]
        obstructed = partitionability_obstruction(K)["obstructed"]
        ok &= facets == factorial(n - 1) and sphere and cm == "CM-over-Q" and not obstructed
        parts.append(f"n={n}: {facets} facets, S^{n - 3}={sphere}, {cm}")
    return ok, "; ".join(parts)


def criterion_6():
    K = build_coloring_complex(generate_family("paper_6_noncm"))
    res = reisner_cm_check(K)
    b0 = (res["witness_link_betti"] or {}).get("0")
    ok = res["verdict"] == "not-CM" and res["witness"] == "123|456" and b0 == 1
    return ok, f"{res['verdict']}, witness {res['witness']}, link reduced b0 = {b0}"


def criterion_7():
    t0 = time.perf_counter()
    bad = []
    for hg in corpus():
        polys = [chromatic_polynomial(hg, m) for m in METHODS]
        if not (polys[0] == polys[1] == polys[2]) or polys[0](0) != 0 or polys[0](1) != 0:
            bad.append(str(hg))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 300
    return ok, f"{len(corpus())} hypergraphs, {len(bad)} disagreements, {elapsed:.1f}s"


def criterion_8():
    checks = bad = 0
    for hg in corpus():
        exact = chromatic_f_vector(hg)[1:]
        for i in range(hg.n + 1):
            for m in range(hg.num_edges + 1):
                lo, hi = truncated_bounds(hg, i, m)
                checks += 1
                if not lo <= exact[i] <= hi:
                    bad += 1
            if truncated_bounds(hg, i, hg.num_edges) != (exact[i], exact[i]):
                bad += 1
            if i >= hg.n - hg.min_edge_size + 2 and exact[i] != cube_T(hg.n, i):
                bad += 1
    return bad == 0, f"{checks} (i, m) pairs, {bad} violations"


def criterion_9():
    rng = np.random.default_rng(CORPUS_SEED)
    comparisons = bad = 0

    def fvec(h, n):
        return f_vector_of_poly(chromatic_polynomial(h), n).values[1:]

    for hg in corpus():
        f = fvec(hg, hg.n)
        smaller = [random_subgraph(rng, hg)]
        if hg.num_edges > 1:
            smaller += [hg.sub([e for e in hg.edges if e != drop]) for drop in hg.edges]
        for sub in smaller:
            comparisons += 1
            bad += any(a > b for a, b in zip(f, fvec(sub, hg.n)))
        star = random_shrink(rng, hg)
        comparisons += 1
        bad += any(b < 0 or b > a for a, b in zip(f, fvec(star, hg.n)))
    return bad == 0, f"{comparisons} comparisons, {bad} violations"


def criterion_10():
    bad = []
    t0 = time.perf_counter()
    for hg in corpus():
        if not wedge_decomposition(hg)["agree"]:
            bad.append(str(hg))
    corpus_time = time.perf_counter() - t0
    nonpart = wedge_decomposition(generate_family("paper_6_nonpart"))
    np_ok = (nonpart["agree"] and nonpart["predicted_euler"] == -1
             and [nonpart["predicted_betti"][k] for k in ("0", "1", "2")] == [0, 4, 3])
    torus = wedge_decomposition(generate_family("torus9"), complex_=torus_complex())
    ok = not bad and np_ok and torus["agree"]
    return ok, (f"corpus {len(corpus()) - len(bad)}/{len(corpus())} agree ({corpus_time:.1f}s), "
                f"([6],{{123,345,156}}) {np_ok}, torus9 {torus['agree']}")


def criterion_11():
    bad = []
    plain_checked = plain_differs = 0
    for hg in corpus():
        res = connectedness_check(hg)
        verdict_from_h0 = res["reduced_betti_0"] == 0 and res["component_count"] > 0
        if res["connected"] != verdict_from_h0 or not res["cross_check"]:
            bad.append(str(hg))
        if res["edge_graph_applies"]:
            plain_checked += 1
            if res["edge_graph_connected"] != verdict_from_h0:
                bad.append(str(hg))
        elif res["edge_graph_connected"] != verdict_from_h0:
            plain_differs += 1
    families_ok = True
    for sizes in ((2, 2), (3, 1), (2, 2, 1), (3, 2, 2, 1)):
        res = connectedness_check(generate_family("multi_component", *sizes))
        families_ok &= res["component_count"] == len(sizes) and res["cross_check"]
        families_ok &= sorted(map(len, res["components"])) == sorted(sizes)
    ok = not bad and families_ok
    return ok, (f"{len(corpus()) - len(bad)}/{len(corpus())} verdicts match; plain edge graph exact on "
                f"{plain_checked} inputs without (n-1)-edges, off on {plain_differs} with them; "
                f"multi_component {families_ok}")


def criterion_12():
    bad = []
    graphs = intro_ok = 0
    for hg in corpus():
        r = ehrhart_series_check(hg, hg.n + 5)
        if not r.passed:
            bad.append(str(hg))
        if hg.min_edge_size == 2:
            graphs += 1
            intro_ok += r.intro_form is True
    ok = not bad and intro_ok == graphs
    return ok, f"{len(corpus()) - len(bad)}/{len(corpus())} series checks pass; intro form {intro_ok}/{graphs} with m_min=2"


CRITERIA = {
    1: ("h-vector reproduction", criterion_1),
    2: ("cube h-vectors", criterion_2),
    3: ("torus homology", criterion_3),
    4: ("cup-product witness", criterion_4),
    5: ("sphere examples", criterion_5),
    6: ("non-CM witness", criterion_6),
    7: ("chromatic method agreement", criterion_7),
    8: ("Bonferroni sandwich", criterion_8),
    9: ("monotonicity", criterion_9),
    10: ("wedge cross-validation", criterion_10),
    11: ("connectedness", criterion_11),
    12: ("series identity", criterion_12),
}


def run_criterion(num: int) -> bool:
    title, fn = CRITERIA[num]
    ok, detail = fn()
    record(num, title, ok, detail)
    return ok


@pytest.mark.parametrize("num", sorted(CRITERIA))
def test_criterion(num):
    assert run_criterion(num), RESULTS[num]


if __name__ == "__main__":
    results = [run_criterion(num) for num in sorted(CRITERIA)]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
