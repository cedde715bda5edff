"""``trispectra`` command line.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or out-of-domain input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence

from . import families as fam
from .board import DomainError, sum_vectors, tri_number
from .graphs import build_clique, build_complete_bipartite, build_queens, build_triangular
from .numeric import check_conjecture, integer_snap, symmetric_eigenvalues
from .queens import bipartite_groups, decompose, verify_decomposition
from .reconcile import TARGETS, reconcile, to_markdown
from .spectra import (
    Spectrum,
    exact_multiplicity,
    spectrum_bipartite,
    spectrum_clique,
    spectrum_g12,
    spectrum_g13,
    spectrum_g23x,
    spectrum_triangular,
)
from .surd import SurdValue
from .weyl import best_bounds, bound_table, chained_bound

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ plumbing

def max_workers() -> int:
    cap = os.environ.get("TRISPECTRA_THREADS")
    n = os.cpu_count() or 1
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            raise UsageError(f"TRISPECTRA_THREADS must be an integer, got {cap!r}")
    return n


def fan_out(fn: Callable, items: Sequence, parallel: bool) -> list:
    """Map ``fn`` over ``items``; results come back in input order either way."""
    workers = max_workers() if parallel else 1
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def rows_to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def n_values(args) -> list[int]:
    if getattr(args, "n", None) is not None:
        return [args.n]
    lo, hi = args.n_min, args.n_max
    if lo is None or hi is None:
        raise UsageError("give --n, or both --n-min and --n-max")
    if lo > hi:
        raise UsageError(f"--n-min {lo} exceeds --n-max {hi}")
    return list(range(lo, hi + 1))


# ------------------------------------------------------------------ commands

def cmd_build(args) -> tuple[str, int]:
    if args.graph == "tri":
        g = build_triangular(_need(args.n, "--n"))
    elif args.graph == "queens":
        g = build_queens(_need(args.n, "--n"))
    elif args.graph == "clique":
        g = build_clique(_need(args.n, "--n"))
    else:
        g = build_complete_bipartite(_need(args.a, "--a"), _need(args.b, "--b"))
    if args.format == "dot":
        return g.to_dot(), EXIT_OK
    if args.format == "mtx":
        return g.to_matrix_market(), EXIT_OK
    payload = {
        "kind": g.kind,
        "n": g.n,
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "tags": [list(t) if isinstance(t, tuple) else t for t in (g.tags or range(g.vertex_count))],
        "edge_list": [[u, v] for u, v in g.edges()],
    }
    return dump_json(payload), EXIT_OK


def _need(x, flag: str):
    if x is None:
        raise UsageError(f"{flag} is required here")
    return x


def _closed_spectrum(args) -> Spectrum:
    kind = args.graph
    if kind == "tri":
        return spectrum_triangular(_need(args.n, "--n"))
    if kind == "g12":
        return spectrum_g12(_need(args.n, "--n"))
    if kind == "g13":
        return spectrum_g13(_need(args.n, "--n"))
    if kind in ("g23h", "g23v"):
        return spectrum_g23x(_need(args.n, "--n"))
    if kind == "clique":
        return spectrum_clique(_need(args.n, "--n"))
    return spectrum_bipartite(_need(args.a, "--a"), _need(args.b, "--b"))


def cmd_spectrum(args) -> tuple[str, int]:
    if args.graph == "queens":
        n = _need(args.n, "--n")
        ns = symmetric_eigenvalues(build_queens(n).adjacency, args.tol)
        snap = integer_snap(ns, args.eps)
        payload = {
            "graph": "queens",
            "n": n,
            "values": [round(x, 12) for x in ns.values],
            "integers": [{"value": v, "mult": m} for v, m in snap.integers],
            "sweeps": ns.sweeps,
        }
        return dump_json(payload), EXIT_OK
    s = _closed_spectrum(args)
    code = EXIT_OK
    extra = {}
    if args.verify:
        if args.graph != "tri":
            raise UsageError("--verify is available for --graph tri")
        g = build_triangular(args.n)
        checks = []
        for v, m in s.entries:
            got = exact_multiplicity(g, v)
            checks.append({"value": int(v), "closed_form": m, "exact": got, "ok": got == m})
        extra = {"verification": checks, "total": s.total, "order": tri_number(args.n)}
        if not all(c["ok"] for c in checks) or s.total != tri_number(args.n):
            code = EXIT_FAIL
    if args.k is not None:
        extra["kth"] = {"k": args.k, "value": s.kth(args.k).to_json()}
    if args.format == "csv":
        return s.to_csv(), code
    payload = {"graph": args.graph, "n": args.n, "spectrum": s.to_json(), "text": str(s), **extra}
    return dump_json(payload), code


def cmd_family(args) -> tuple[str, int]:
    if args.family == "t":
        if not args.at:
            raise UsageError("t-vectors need --at X Y")
        fv = fam.vector_t(args.n, *args.at)
    else:
        fv = fam.family_vector(args.family, args.n, _need(args.lam, "--lam"))
    if args.format == "ascii":
        return fv.data.render() + "\n", EXIT_OK
    payload = fv.to_json()
    if fv.family is not fam.Family.T:
        payload["sums"] = sum_vectors(fv.data).to_json()
    return dump_json(payload), EXIT_OK


def _verify_family_item(item) -> list[list]:
    family, n = item
    g = build_triangular(n)
    rows = []
    for p in fam.family_parameters(family, n):
        if family == "t":
            fv = fam.vector_t(n, *p)
            sums_ok, cross_ok = "", ""
        else:
            fv = fam.family_vector(family, n, p)
            sums_ok = fam.sums_match(fv)
            if family == "u":
                cross_ok = fam.u_from_lines(n, p) == fv.data
            elif family == "x":
                cross_ok = fam.x_from_lines(n, p) == fv.data
            elif family == "y":
                cross_ok = fam.y3_from_v(n, p) == fam.y_parts(n, p)[2]
            else:
                cross_ok = ""
        check = fam.verify_eigenvector(g, fv.data, fv.eigenvalue)
        param = f"{p[0]};{p[1]}" if isinstance(p, tuple) else p
        rows.append([family, n, param, fv.eigenvalue, check.ok, sums_ok, cross_ok, len(check.mismatches)])
    return rows


def cmd_verify_family(args) -> tuple[str, int]:
    items = [(args.family, n) for n in n_values(args)]
    for _, n in items:
        if n < 4:
            raise UsageError(f"families need n >= 4, got {n}")
    rows = [r for chunk in fan_out(_verify_family_item, items, args.parallel) for r in chunk]
    ok = all(r[4] and r[5] in (True, "") and r[6] in (True, "") for r in rows)
    header = ["family", "n", "parameter", "eigenvalue", "eigen_ok", "sums_ok", "cross_ok", "mismatches"]
    if args.format == "json":
        return dump_json({"ok": ok, "rows": [dict(zip(header, r)) for r in rows]}), EXIT_OK if ok else EXIT_FAIL
    return rows_to_csv(header, rows), EXIT_OK if ok else EXIT_FAIL


def cmd_basis_least(args) -> tuple[str, int]:
    n = args.n
    basis = fam.basis_least(n)
    g = build_triangular(n)
    eigen_ok = all(fam.verify_eigenvector(g, t.data, -3).ok for t in basis)
    rank = fam.check_independent([t.data for t in basis])
    ok = eigen_ok and rank == len(basis) == tri_number(n - 3)
    payload = {
        "n": n,
        "count": len(basis),
        "rank": rank,
        "expected": tri_number(n - 3),
        "eigen_ok": eigen_ok,
        "ok": ok,
    }
    if args.vectors:
        payload["vectors"] = [t.to_json() for t in basis]
    return dump_json(payload), EXIT_OK if ok else EXIT_FAIL


def cmd_decompose(args) -> tuple[str, int]:
    d = decompose(args.n)
    if args.format == "dot":
        q = build_queens(args.n)
        q = type(q)(q.adjacency, tags=q.tags, kind=q.kind, n=q.n, colors=d.colors)
        return q.to_dot(f"Q{args.n}"), EXIT_OK
    payload = d.to_json()
    payload["bipartite_groups"] = {
        name: [{"line": g["line"], "blue": [list(c) for c in g["blue"]], "red": [list(c) for c in g["red"]]} for g in bipartite_groups(d, name)]
        for name in ("G3H", "G3V")
    }
    return dump_json(payload), EXIT_OK


def _verify_decomposition_item(n: int) -> dict:
    return verify_decomposition(decompose(n)).to_json()


def cmd_verify_decomposition(args) -> tuple[str, int]:
    ns = n_values(args)
    if min(ns) < 4:
        raise UsageError("the decomposition needs n >= 4")
    reports = fan_out(_verify_decomposition_item, ns, args.parallel)
    ok = all(r["ok"] for r in reports)
    return dump_json({"ok": ok, "reports": reports}), EXIT_OK if ok else EXIT_FAIL


def cmd_weyl_bounds(args) -> tuple[str, int]:
    entries = [best_bounds(args.n, args.k)] if args.k is not None else bound_table(args.n)
    if args.format == "csv":
        rows = [
            [e.k, str(e.lower), str(e.upper), f"{float(e.lower):.12f}", f"{float(e.upper):.12f}",
             " ".join(map(str, e.lower_witness)), " ".join(map(str, e.upper_witness))]
            for e in entries
        ]
        return rows_to_csv(["k", "lower", "upper", "lower_decimal", "upper_decimal", "lower_witness", "upper_witness"], rows), EXIT_OK
    return dump_json({"n": args.n, "bounds": [e.to_json() for e in entries]}), EXIT_OK


def _conjecture_item(item) -> dict:
    n, eps = item
    return check_conjecture(n, eps).to_json()


def cmd_check_conjecture(args) -> tuple[str, int]:
    ns = list(range(args.n_min, args.n_max + 1))
    if not ns:
        raise UsageError("empty n range")
    verdicts = fan_out(_conjecture_item, [(n, args.eps) for n in ns], args.parallel)
    violated = [v["n"] for v in verdicts if v["status"] == "violated"]
    payload = {"eps": args.eps, "violated": violated, "verdicts": verdicts}
    if args.format == "csv":
        rows = [[v["n"], v["status"], v["numeric_agrees"], json.dumps(v["observed"], sort_keys=True)] for v in verdicts]
        return rows_to_csv(["n", "status", "numeric_agrees", "observed"], rows), EXIT_FAIL if violated else EXIT_OK
    return dump_json(payload), EXIT_FAIL if violated else EXIT_OK


ROOT3 = SurdValue.sqrt(3)


def _spec(entries) -> Spectrum:
    return Spectrum(entries)


def golden_checks() -> list[dict]:
    """Recompute the reference values and compare."""
    checks = []

    def add(name: str, expected, actual) -> None:
        checks.append({"name": name, "expected": expected, "actual": actual, "ok": expected == actual})

    add("spectrum T(3)", str(_spec([(4, 1), (0, 3), (-2, 2)])), str(spectrum_triangular(3)))
    add("spectrum T(4)", str(_spec([(6, 1), (1, 3), (0, 2), (-2, 3), (-3, 1)])), str(spectrum_triangular(4)))
    add("spectrum G12, n=4", str(_spec([(6, 1), (4, 1), (1, 3), (0, 5), (-2, 5), (-3, 1)])), str(spectrum_g12(4)))
    add("spectrum G13, n=4", str(_spec([(3, 1), (2, 2), (1, 2), (0, 2), (-1, 9)])), str(spectrum_g13(4)))
    add(
        "spectrum G23H/G23V, n=4",
        str(_spec([(2, 1), (ROOT3, 2), (0, 10), (-ROOT3, 2), (-2, 1)])),
        str(spectrum_g23x(4)),
    )
    add("spectrum K(1,3)", str(_spec([(ROOT3, 1), (0, 2), (-ROOT3, 1)])), str(spectrum_bipartite(1, 3)))
    add("spectrum K(2,2)", str(_spec([(2, 1), (0, 2), (-2, 1)])), str(spectrum_bipartite(2, 2)))
    add("lambda_3(G12), n=4", 1, int(spectrum_g12(4).kth(3)))
    add("lambda_16(G13), n=4", -1, int(spectrum_g13(4).kth(16)))
    add("upper chain (3,1,4,4) -> k", 9, chained_bound(4, (3, 1, 4, 4), "upper").k)
    add("upper chain (3,1,4,4) -> bound", 4, int(chained_bound(4, (3, 1, 4, 4), "upper").value))
    add("lower chain (15,16,13,13) -> k", 9, chained_bound(4, (15, 16, 13, 13), "lower").k)
    add("lower chain (15,16,13,13) -> bound", -3, int(chained_bound(4, (15, 16, 13, 13), "lower").value))
    e = best_bounds(4, 9)
    add("best lower bound lambda_9(Q(4)) >= -3", True, e.lower >= -3)
    add("best upper bound lambda_9(Q(4)) <= 4", True, e.upper <= 4)
    d = decompose(4)
    g13_sizes = sorted(len(x) for x in _antidiagonals(4))
    add("G13 clique sizes, n=4", [1, 1, 2, 2, 3, 3, 4], g13_sizes)
    add(
        "G3H groups, n=4",
        [[1, 3], [2, 2], [3, 1], [4, 0]],
        [list(grp["shape"]) for grp in bipartite_groups(d, "G3H")],
    )
    add("decomposition identity, n=4", True, verify_decomposition(d).ok)
    add("basis of -3 eigenspace, n=4", 1, len(fam.basis_least(4)))
    add("stencil t", [0, 1, -1, -1, 0, 1, 0, 1, -1, 0], list(fam.vector_t(4, 1, 1).data.entries))
    add("multiplicity of -4 in Q(6)", 9, exact_multiplicity(build_queens(6), -4))
    return checks


def _antidiagonals(n: int) -> list[list[tuple[int, int]]]:
    return [[(r, s - r) for r in range(1, n + 1) if 1 <= s - r <= n] for s in range(2, 2 * n + 1)]


def cmd_reproduce(args) -> tuple[str, int]:
    checks = golden_checks()
    ok = all(c["ok"] for c in checks)
    return dump_json({"ok": ok, "checks": checks}), EXIT_OK if ok else EXIT_FAIL


def cmd_reconcile(args) -> tuple[str, int]:
    targets = args.target or list(TARGETS)
    reports = fan_out(_reconcile_item, [(t, args.n_max) for t in targets], args.parallel)
    ok = all(r.unique for r in reports)
    if args.format == "markdown":
        return to_markdown(reports, args.n_max), EXIT_OK if ok else EXIT_FAIL
    return dump_json({"ok": ok, "n_max": args.n_max, "targets": [r.to_json() for r in reports]}), EXIT_OK if ok else EXIT_FAIL


def _reconcile_item(item):
    target, n_max = item
    return reconcile(target, n_max)


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="trispectra", description="Exact spectra of triangular and n-Queens graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="write the result to this file (UTF-8) instead of stdout")
    common.add_argument("--parallel", action="store_true", help="fan independent work items out to processes (capped by TRISPECTRA_THREADS)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("build", parents=[common], help="emit a graph")
    s.add_argument("--graph", choices=["tri", "queens", "clique", "bipartite"], required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--a", type=int)
    s.add_argument("--b", type=int)
    s.add_argument("--format", choices=["json", "dot", "mtx"], default="json")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("spectrum", parents=[common], help="closed-form spectrum (numeric for queens)")
    s.add_argument("--graph", choices=["tri", "g12", "g13", "g23h", "g23v", "clique", "bipartite", "queens"], required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--a", type=int)
    s.add_argument("--b", type=int)
    s.add_argument("--k", type=int, help="also report the k-th largest eigenvalue")
    s.add_argument("--verify", action="store_true", help="confirm each multiplicity by exact nullity (tri only)")
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.add_argument("--tol", type=float, default=1e-12, help="Jacobi off-diagonal tolerance (queens; default 1e-12)")
    s.add_argument("--eps", type=float, default=1e-6, help="integer snapping radius (queens; default 1e-6)")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("family", parents=[common], help="emit one closed-form eigenvector")
    s.add_argument("--family", choices=["t", "u", "v", "x", "y"], required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--lam", type=int, help="eigenvalue (u, v, x, y)")
    s.add_argument("--at", type=int, nargs=2, metavar=("X", "Y"), help="stencil placement (t)")
    s.add_argument("--format", choices=["json", "ascii"], default="json")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("verify-family", parents=[common], help="exact pass/fail table for a family")
    s.add_argument("--family", choices=["t", "u", "v", "x", "y"], required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--n-min", type=int)
    s.add_argument("--n-max", type=int)
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.set_defaults(func=cmd_verify_family)

    s = sub.add_parser("basis-least", parents=[common], help="stencil basis of the -3 eigenspace")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--vectors", action="store_true", help="include the vectors themselves")
    s.set_defaults(func=cmd_basis_least)

    s = sub.add_parser("decompose", parents=[common], help="five-part split of the queens graph")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=["json", "dot"], default="json")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("verify-decomposition", parents=[common], help="check the queens split exactly")
    s.add_argument("--n", type=int)
    s.add_argument("--n-min", type=int)
    s.add_argument("--n-max", type=int)
    s.set_defaults(func=cmd_verify_decomposition)

    s = sub.add_parser("weyl-bounds", parents=[common], help="tightest chained Weyl bounds for Q(n)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.add_argument("--json", dest="format", action="store_const", const="json")
    s.add_argument("--csv", dest="format", action="store_const", const="csv")
    s.set_defaults(func=cmd_weyl_bounds)

    s = sub.add_parser("check-conjecture", parents=[common], help="integer eigenvalues of Q(n) against the prediction")
    s.add_argument("--n-min", type=int, default=4)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--eps", type=float, default=1e-6, help="integer snapping radius (default 1e-6)")
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.add_argument("--json", dest="format", action="store_const", const="json")
    s.set_defaults(func=cmd_check_conjecture)

    s = sub.add_parser("reproduce-examples", parents=[common], help="recompute the reference values and diff")
    s.set_defaults(func=cmd_reproduce)

    s = sub.add_parser("reconcile", parents=[common], help="search readings of the x and y formulas")
    s.add_argument("--target", choices=list(TARGETS), action="append")
    s.add_argument("--n-max", type=int, default=11)
    s.add_argument("--format", choices=["json", "markdown"], default="json")
    s.set_defaults(func=cmd_reconcile)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        text, code = args.func(args)
    except (UsageError, DomainError) as e:
        print(f"trispectra {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
