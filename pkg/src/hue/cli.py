"""Command-line entry point: ``hue <command> <input> [options]``.

Every command prints one JSON report on stdout. Integers in the payload are
written as decimal strings and rationals as ``"p/q"`` so nothing is lost to
floating point. Exit codes: 0 success, 2 invalid input or flags, 3 budget
exceeded, 4 an internal cross-check disagreed.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
import time
import warnings
from fractions import Fraction

from . import __version__
from .complexes import box_complex, build_coloring_complex, f_h_vectors
from .enumerative import (
    METHODS,
    chromatic_f_vector,
    chromatic_polynomial,
    coloring_complex_size,
    ehrhart_series_check,
    h_vector_of_poly,
    truncated_bounds,
)
from .hypergraph import Hypergraph, HypergraphError, parse_hypergraph, s_table
from .kernels import BudgetExceeded
from .polynomial import RationalPolynomial
from .topology import (
    DEFAULT_BUDGET,
    connectedness_check,
    cup_product_analysis,
    integral_homology,
    partitionability_obstruction,
    rational_betti,
    reisner_cm_check,
)
from .wedge import MAX_EDGES, wedge_decomposition

COMMANDS = ("validate", "complex", "chromatic", "bounds", "homology", "cup", "cm",
            "connectedness", "wedge", "report")

EXIT_OK, EXIT_INVALID, EXIT_BUDGET, EXIT_DISAGREE = 0, 2, 3, 4


class CrossCheckFailed(RuntimeError):
    """Two independent computations of the same quantity disagreed."""


def stringify(obj):
    """Integers to decimal strings, fractions to ``"p/q"``; bools, None and floats (infinities) kept apart."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, float):
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        return repr(obj)
    if isinstance(obj, dict):
        return {str(k): stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [stringify(v) for v in obj]
    return obj


# ------------------------------------------------------------------ helpers


class Context:
    def __init__(self, hg: Hypergraph, args):
        self.hg = hg
        self.args = args
        self.budget = args.budget
        self.notes: list[str] = []
        self._K = None

    def complex(self):
        if self._K is None:
            size = coloring_complex_size(self.hg)
            if self.budget is not None and size > self.budget:
                raise BudgetExceeded(f"coloring complex would have {size} faces, budget is {self.budget}")
            if self.budget is not None:
                self.notes.append(f"coloring complex: {size} faces of a {self.budget}-face budget")
            self._K = build_coloring_complex(self.hg)
            if self._K.num_faces != size:
                raise CrossCheckFailed(f"built {self._K.num_faces} faces, face count predicted {size}")
        return self._K


def _poly_json(p) -> list:
    return list(p.coeffs) or [0]


# ----------------------------------------------------------------- commands


def cmd_validate(ctx: Context) -> dict:
    hg = ctx.hg
    return {
        "hypergraph": hg.to_json(),
        "num_edges": hg.num_edges,
        "min_edge_size": hg.min_edge_size if hg.edges else None,
        "max_edge_size": hg.max_edge_size if hg.edges else None,
        "uniform": hg.is_uniform() if hg.edges else None,
        "isolated_vertices": list(hg.isolated_vertices()),
        "valid": True,
    }


def cmd_complex(ctx: Context) -> dict:
    K = ctx.complex()
    fh = f_h_vectors(K)
    out = {
        "dim": K.dim,
        "f_vector": list(fh.f),
        "h_vector": list(fh.h),
        "pure": K.is_pure(),
        "num_facets": len(K.facets()),
        "complex": K.to_json(),
    }
    if ctx.args.box:
        B = box_complex(ctx.hg)
        out["box"] = {"dim": B.dim, "f_vector": list(B.f_vector), "h_vector": list(B.h_vector)}
    return out


def _chromatic_all(hg: Hypergraph) -> dict:
    polys = {m: chromatic_polynomial(hg, m) for m in METHODS}
    first = polys[METHODS[0]]
    if any(p != first for p in polys.values()):
        raise CrossCheckFailed("chromatic methods disagree: " + "; ".join(f"{m}={p!r}" for m, p in polys.items()))
    return polys


def cmd_chromatic(ctx: Context) -> dict:
    hg, method = ctx.hg, ctx.args.method
    if method == "all":
        p = _chromatic_all(hg)[METHODS[0]]
        f = chromatic_f_vector(hg, "faces")
    else:
        p = chromatic_polynomial(hg, method)
        f = chromatic_f_vector(hg, method)
    n_prime = hg.n if ctx.args.normalization is None else ctx.args.normalization
    if n_prime < hg.n:
        raise HypergraphError(f"normalization {n_prime} is below the degree {hg.n}")
    h = h_vector_of_poly(p.compose_shift(1), n_prime)
    d = hg.n - hg.min_edge_size + 1
    box = RationalPolynomial.monomial(hg.n).compose_shift(1) - p.compose_shift(1)
    return {
        "method": method,
        "power_basis": _poly_json(p),
        "f_vector": list(f),
        "h_vector": {"n_prime": n_prime, "values": list(h.values)},
        "box_h_vector": {"n_prime": d, "values": list(h_vector_of_poly(box, d).values)},
        "values_at_0_1": [p(0), p(1)],
    }


def _bounds_table(hg: Hypergraph, levels) -> list:
    table = s_table(hg)
    exact = chromatic_f_vector(hg, "faces")[1:]
    rows = []
    for m in levels:
        entries = []
        for i in range(hg.n + 1):
            lo, hi = truncated_bounds(hg, i, m, table)
            entries.append({"i": i, "lower": lo, "upper": hi, "exact": exact[i],
                            "holds": lo <= exact[i] <= hi})
        rows.append({"m": m, "bounds": entries})
    if not all(e["holds"] for r in rows for e in r["bounds"]):
        raise CrossCheckFailed("a truncated inclusion-exclusion bound is violated")
    return rows


def cmd_bounds(ctx: Context) -> dict:
    hg = ctx.hg
    m = ctx.args.truncation
    if m is not None and not 0 <= m <= hg.num_edges:
        raise HypergraphError(f"truncation {m} outside 0..{hg.num_edges}")
    levels = range(hg.num_edges + 1) if m is None else [m]
    return {"s_table": s_table(hg), "levels": _bounds_table(hg, levels)}


def cmd_homology(ctx: Context) -> dict:
    K = ctx.complex()
    coeff = ctx.args.coefficients
    hz = integral_homology(K) if coeff == "Z" else None
    hq = rational_betti(K)
    if hz is not None and hz.betti != hq.betti:
        raise CrossCheckFailed(f"Smith form ranks {hz.betti} differ from rational ranks {hq.betti}")
    summary = hz if hz is not None else hq
    out = {"coefficients": coeff, **summary.to_json()}
    b0 = summary.betti.get(0, 0)
    out["reduced_betti_0"] = b0
    out["components"] = b0 + 1 if K.dim >= 0 else 0
    out["euler_reduced"] = summary.euler()
    if coeff == "Q":
        out.pop("torsion", None)
    return out


def cmd_cup(ctx: Context) -> dict:
    K = ctx.complex()
    return cup_product_analysis(K, budget=ctx.budget)


def cmd_cm(ctx: Context) -> dict:
    K = ctx.complex()
    res = reisner_cm_check(K, budget=ctx.budget if ctx.budget is not None else DEFAULT_BUDGET)
    if res["verdict"] == "budget-exceeded":
        raise BudgetExceeded(res["reason"])
    res["partitionability"] = partitionability_obstruction(K)
    return res


def cmd_connectedness(ctx: Context) -> dict:
    res = connectedness_check(ctx.hg, budget=ctx.budget, K=ctx.complex())
    if res["cross_check"] is False:
        raise CrossCheckFailed("connectedness verdict disagrees with reduced H_0")
    return res


def cmd_wedge(ctx: Context) -> dict:
    if ctx.hg.num_edges > MAX_EDGES:
        raise BudgetExceeded(f"{ctx.hg.num_edges} edges exceed the wedge subset budget 2^{MAX_EDGES}")
    res = wedge_decomposition(ctx.hg, complex_=ctx.complex())
    if not res["agree"]:
        raise CrossCheckFailed("wedge prediction differs from direct homology")
    return res


def cmd_report(ctx: Context) -> dict:
    hg = ctx.hg
    K = ctx.complex()
    polys = _chromatic_all(hg)
    chi = polys[METHODS[0]]
    series = ehrhart_series_check(hg, chi=chi, complex_=K)
    if not series.passed:
        raise CrossCheckFailed("generating-function identity failed")
    obstruction = partitionability_obstruction(K)
    homology = cmd_homology(ctx)
    cup = cmd_cup(ctx)
    cm = cmd_cm(ctx)
    cm.pop("partitionability", None)
    return {
        "validation": cmd_validate(ctx),
        "dim": K.dim,
        "f_vector": list(K.f_vector),
        "h_vector": list(K.h_vector),
        "pure": K.is_pure(),
        "chromatic": {"power_basis": _poly_json(chi), "methods_agree": True,
                      "f_vector": list(chromatic_f_vector(hg, "faces"))},
        "series": series.to_json(),
        "bounds": _bounds_table(hg, range(hg.num_edges + 1)),
        "homology": homology,
        "cup": cup,
        "cm": cm,
        "partitionable_obstructed": obstruction["obstructed"],
        "partitionability": obstruction,
        "connectedness": cmd_connectedness(ctx),
        "wedge": cmd_wedge(ctx),
    }


HANDLERS = {name: globals()[f"cmd_{name}"] for name in COMMANDS}


# ------------------------------------------------------------------- output


def _pretty(payload, prefix="") -> list[str]:
    """Flat ``path: value`` lines rendered from the JSON payload."""
    lines = []
    if isinstance(payload, dict):
        for k, v in payload.items():
            lines += _pretty(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(payload, list) and any(isinstance(v, (dict, list)) for v in payload):
        for i, v in enumerate(payload):
            lines += _pretty(v, f"{prefix}[{i}]")
    else:
        value = "(" + ", ".join(map(str, payload)) + ")" if isinstance(payload, list) else payload
        lines.append(f"{prefix}: {value}")
    return lines


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hue", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"hue {__version__}")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("input", help="hypergraph file (JSON or 'n'/'edge' text), or - for stdin")
    ap.add_argument("--method", choices=METHODS + ("all",), default="all",
                    help="chromatic polynomial method (default: all three, cross-checked)")
    ap.add_argument("--truncation", type=int, default=None, help="bounds: truncation level m (default: all)")
    ap.add_argument("--coefficients", choices=("Q", "Z"), default="Z")
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximum number of faces to process")
    ap.add_argument("--reduce-to-minimal", action="store_true", help="drop non-minimal edges instead of failing")
    ap.add_argument("--normalization", type=int, default=None, help="chromatic: n' for the h-vector (default n)")
    ap.add_argument("--box", action="store_true", help="complex: also summarize the box complex")
    ap.add_argument("--pretty", action="store_true", help="print a flat table derived from the JSON")
    return ap


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    t0 = time.perf_counter()
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "input", "pretty")}
    report = {"tool": "hue", "version": __version__, "command": args.command, "input": args.input,
              "params": params}
    code = EXIT_OK
    try:
        raw = _read_input(args.input)
        report["input_sha256"] = hashlib.sha256(raw).hexdigest()
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            hg = parse_hypergraph(raw.decode("utf-8"), reduce_to_minimal=args.reduce_to_minimal)
        for w in caught:
            print(f"hue: warning: {w.message}", file=sys.stderr)
        if args.budget is not None and args.budget <= 0:
            raise HypergraphError("--budget must be positive")
        if args.command != "validate" and not hg.edges:
            raise HypergraphError("hypergraph has no edges; the coloring complex is undefined")
        ctx = Context(hg, args)
        report["payload"] = stringify(HANDLERS[args.command](ctx))
        report["budget_notes"] = ctx.notes
    except (HypergraphError, OSError, UnicodeDecodeError) as exc:
        code = EXIT_INVALID
        report["error"] = {"kind": "invalid-input", "message": str(exc)}
    except (BudgetExceeded, MemoryError) as exc:
        code = EXIT_BUDGET
        report["error"] = {"kind": "budget-exceeded", "message": str(exc) or type(exc).__name__}
    except (CrossCheckFailed, AssertionError, ArithmeticError) as exc:
        code = EXIT_DISAGREE
        report["error"] = {"kind": "cross-check", "message": str(exc)}
    except Exception as exc:  # a bug, not a user error: keep the JSON contract and exit 1
        code = 1
        report["error"] = {"kind": "internal", "message": f"{type(exc).__name__}: {exc}"}
    report["elapsed_seconds"] = round(time.perf_counter() - t0, 6)
    if "error" in report:
        print(f"hue: {report['error']['kind']}: {report['error']['message']}", file=sys.stderr)
    if args.pretty:
        print("\n".join(_pretty(report)))
    else:
        print(json.dumps(report, ensure_ascii=False, indent=2))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
