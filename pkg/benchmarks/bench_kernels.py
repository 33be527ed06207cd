"""Numba against pure numpy for the two hot kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each row times one call after a warm-up call (so JIT compilation is not
counted) and checks both backends return the same answer.
"""

from __future__ import annotations

import argparse
import time

from hue.hypergraph import generate_family
from hue.kernels import count_proper_colorings, cube_faces_outside_box


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def cases():
    torus = generate_family("torus9")
    nonpart = generate_family("paper_6_nonpart")
    k6 = generate_family("complete_graph", 6)
    yield "colorings torus9 k=4", lambda b: count_proper_colorings(9, torus.masks, 4, backend=b)
    yield "colorings torus9 k=5", lambda b: count_proper_colorings(9, torus.masks, 5, backend=b)
    yield "colorings K6 k=6", lambda b: count_proper_colorings(6, k6.masks, 6, backend=b)
    yield "colorings nonpart k=8", lambda b: count_proper_colorings(6, nonpart.masks, 8, backend=b)
    yield "cube dp torus9", lambda b: cube_faces_outside_box(9, torus.masks, backend=b)
    for n in (10, 12):
        hg = generate_family("single_edge", n, 2)
        yield f"cube dp single_edge({n},2)", lambda b, hg=hg: cube_faces_outside_box(n, hg.masks, backend=b)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"{'case':32s} {'numpy s':>10s} {'numba s':>10s} {'speedup':>8s}")
    for name, run in cases():
        t_np, r_np = best_of(lambda: run("numpy"), args.repeat)
        t_nb, r_nb = best_of(lambda: run("numba"), args.repeat)
        assert r_np == r_nb, f"{name}: backends disagree"
        print(f"{name:32s} {t_np:10.4f} {t_nb:10.4f} {t_np / t_nb:8.1f}x")


if __name__ == "__main__":
    main()
