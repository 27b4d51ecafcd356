"""Command line front end.

Commands: spectrum, bound, table, search, verify. Graphs are named in the
shared expression grammar (see `blowup spectrum --help`). Exit codes:
0 success, 1 verification or table failure, 2 usage or parse error,
3 numeric failure, 10 a search result beating an open or recorded
threshold (witness written to the working directory).
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import bounds as B
from . import search as S
from .errors import (
    GraphParseError,
    InfeasibleIntersectionArray,
    InfeasibleSrgParameters,
    InternalConsistencyError,
    NumericError,
    TableMismatchError,
)
from .exact import Quadratic
from .families import Explicit, parse_expression
from .graphs import g6_decode
from .spectra import Spectrum, eigen_spectrum, spectrum_invariant_checks

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_EXCEEDED = 10

GRAMMAR_HELP = (
    "expression grammar: complete:n | cycle:n | johnson:m,r | paley:q | "
    "petersen | icosahedron | gosset | srg:v,k,l,m | drg:b0,..;c1,.. | "
    "g6:<string> | union:<a>+<b> | complement:<a> | blowup:<a>,t"
)


def _sig6(x: float) -> str:
    return f"{x:.6g}"


# -- spectrum ---------------------------------------------------------------


def cmd_spectrum(args) -> int:
    desc = parse_expression(args.expr)
    spectrum = desc.spectrum
    note = None
    if args.numeric and spectrum.is_exact:
        spectrum = Spectrum((float(v), m) for v, m in spectrum.entries)
    elif args.exact and not spectrum.is_exact:
        note = "exact form unavailable; numeric values shown (eigensolver, 1e-9 accuracy)"
    if args.json:
        obj = {
            "name": desc.name,
            "n": desc.n,
            "exact": spectrum.is_exact,
            "spectrum": spectrum.to_json_obj(),
        }
        if note:
            obj["note"] = note
        print(json.dumps(obj))
    else:
        print(f"{desc.name}  n={desc.n}")
        print(spectrum.display())
        if note:
            print(f"note: {note}")
    return EXIT_OK


# -- bound ------------------------------------------------------------------


def cmd_bound(args) -> int:
    desc = parse_expression(args.expr)
    k = args.k
    cert = B.certify(desc, k)
    if args.t == "sup":
        ratio, attained, t_label = cert.ratio, cert.attained, "sup"
    else:
        t = int(args.t)
        if t < 1:
            raise ValueError("t must be >= 1 or 'sup'")
        ratio = B.finite_ratio(desc, t, k)
        attained = True
        t_label = str(t)
    if args.json:
        obj = cert.to_json_obj()
        obj["t"] = t_label
        if t_label != "sup":
            obj["ratio"] = {
                "exact": str(ratio) if isinstance(ratio, Quadratic) else None,
                "float": float(ratio),
            }
            obj["attained"] = True
        print(json.dumps(obj))
    else:
        exact = str(ratio) if isinstance(ratio, Quadratic) else None
        shown = f"{exact} ~ {_sig6(float(ratio))}" if exact else _sig6(float(ratio))
        head = f"c_{k} >=" if t_label == "sup" else f"blowup t={t_label} ratio for k={k}:"
        print(f"{head} {shown}")
        print(f"base: {desc.name} (n={desc.n})  verification: {cert.verification}")
        if t_label == "sup" and not attained:
            print("supremum 0 is not attained: lambda_k <= -1")
        if k >= 2:
            print(f"proven ceiling: {_sig6(B.nikiforov_upper(k))}")
    return EXIT_OK


# -- table ------------------------------------------------------------------


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError("range must look like 4..24")
    return int(lo), int(hi)


def cmd_table(args) -> int:
    k_lo, k_hi = _parse_range(args.range) if args.range else (B.TABLE_K_MIN, B.TABLE_K_MAX)
    try:
        rows = B.reproduce_table(k_lo, k_hi)
    except TableMismatchError as e:
        if args.json:
            print(json.dumps({"ok": False, "rows": [r.to_json_obj() for r in (e.rows or [])]}))
        else:
            print(f"table mismatch: {e}", file=sys.stderr)
            for r in e.rows or []:
                if not r.match:
                    got = ", ".join(str(c.ratio) for c in r.certificates)
                    print(f"  k={r.k}: expected {r.expected}, got {got}", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    if args.json:
        print(json.dumps({"ok": True, "rows": [r.to_json_obj() for r in rows]}))
        return EXIT_OK
    print(f"{'k':>3}  {'ratio':<22} {'decimal':<10} {'source':<34} {'status':<24} ceiling")
    for r in rows:
        names = " + ".join(c.base.name for c in r.certificates)
        status = ",".join(sorted({c.verification for c in r.certificates}))
        print(
            f"{r.k:>3}  {str(r.expected):<22} {_sig6(float(r.expected)):<10} "
            f"{names:<34} {status:<24} {_sig6(B.nikiforov_upper(r.k))}"
        )
    return EXIT_OK


# -- search -----------------------------------------------------------------


def _exceedance_threshold(k: int) -> float | None:
    """Open threshold at k=3, recorded best ratio for table rows, else None."""
    if k == 3:
        return S.C3_THRESHOLD
    best = B.best_known_ratio(k)
    return float(best) if best is not None else None


def cmd_search(args) -> int:
    if args.method == "stream":
        if args.g6_file == "-":
            result = S.stream_max(args.k, sys.stdin, on_error=args.on_error)
        else:
            with open(args.g6_file, encoding="ascii") as fh:
                result = S.stream_max(args.k, fh, on_error=args.on_error)
    elif args.method == "exhaustive":
        if args.n is None:
            raise ValueError("exhaustive search needs --n")
        result = S.exhaustive_max(args.k, args.n, allow_large=args.allow_n8)
    else:
        if args.n is None:
            raise ValueError("local search needs --n")
        cfg = S.SearchConfig(
            k=args.k,
            n=args.n,
            method=args.method,
            seed=args.seed,
            budget=args.budget,
            restarts=args.restarts,
            t0=args.t0,
            cooling=args.cooling,
        )
        result = S.local_search(cfg)

    threshold = _exceedance_threshold(args.k)
    exceeded = threshold is not None and result.best_ratio > threshold + S.THRESHOLD_TOL
    payload = result.to_json_obj()
    payload["threshold"] = threshold
    payload["exceeded"] = exceeded
    if args.json:
        print(json.dumps(payload))
    else:
        print(f"best ratio {result.best_ratio!r} at k={result.k} after {result.evaluations} evaluations")
        print(f"witness graph6: {result.best_graph}")
        if threshold is not None:
            rel = "EXCEEDS" if exceeded else "does not exceed"
            print(f"{rel} the reference threshold {_sig6(threshold)}")
    if exceeded:
        path = f"witness_k{args.k}.json"
        g = g6_decode(result.best_graph)
        block = {
            "result": payload,
            "spectrum": eigen_spectrum(g).to_json_obj(),
        }
        with open(path, "w", encoding="ascii") as fh:
            json.dump(block, fh, indent=2)
        print(f"witness written to {path}", file=sys.stderr)
        return EXIT_EXCEEDED
    return EXIT_OK


# -- verify -----------------------------------------------------------------


def _check_family_spectra():
    from .families import (
        icosahedron_descriptor,
        johnson_descriptor,
        paley_descriptor,
        petersen_descriptor,
    )

    fams = [icosahedron_descriptor(), petersen_descriptor()]
    fams += [johnson_descriptor(m, 2) for m in range(4, 17)]
    fams += [paley_descriptor(q) for q in (5, 9, 13)]
    worst = 0.0
    for d in fams:
        g = d.provenance.graph
        resid = float(
            np.max(np.abs(d.spectrum.float_values() - eigen_spectrum(g).float_values()))
        )
        worst = max(worst, resid)
    return worst <= 1e-8, f"max residual {worst:.2e}"


def _check_blowups():
    from .graphs import Graph, closed_blowup_graph
    from .spectra import blowup_transform

    rng = np.random.default_rng(20240314)
    worst = 0.0
    for _ in range(50):
        n = int(rng.integers(4, 11))
        a = np.triu(rng.random((n, n)) < 0.5, 1)
        g = Graph(a | a.T)
        base = eigen_spectrum(g)
        for t in (1, 2, 3):
            analytic = blowup_transform(base, t).float_values()
            numeric = eigen_spectrum(closed_blowup_graph(g, t)).float_values()
            worst = max(worst, float(np.max(np.abs(analytic - numeric))))
    return worst <= 1e-8, f"max residual {worst:.2e}"


def _check_power_sums():
    from .graphs import Graph

    rng = np.random.default_rng(8128)
    bad = 0
    for _ in range(100):
        n = int(rng.integers(2, 13))
        a = np.triu(rng.random((n, n)) < 0.5, 1)
        g = Graph(a | a.T)
        if not spectrum_invariant_checks(g, eigen_spectrum(g)).ok:
            bad += 1
    return bad == 0, f"{bad} failures of 100"


def _check_table():
    rows = B.reproduce_table()
    return True, f"{len(rows)} rows match"


_VERIFY_CHECKS = (
    ("family spectra vs eigensolver", _check_family_spectra),
    ("analytic vs numeric closed blowups", _check_blowups),
    ("power sum identities", _check_power_sums),
    ("reference table rows 4..24", _check_table),
)


def _verify_checks():
    """Yield (name, ok, detail); a check that raises counts as failed."""
    for name, fn in _VERIFY_CHECKS:
        try:
            ok, detail = fn()
        except Exception as e:  # noqa: BLE001 - verify must report, not crash
            ok, detail = False, f"{type(e).__name__}: {e}"
        yield (name, ok, detail)


def cmd_verify(args) -> int:
    results = list(_verify_checks())
    ok = all(r[1] for r in results)
    if args.json:
        print(
            json.dumps(
                {
                    "ok": ok,
                    "checks": [{"name": n, "ok": o, "detail": d} for n, o, d in results],
                }
            )
        )
    else:
        for name, good, detail in results:
            print(f"{'PASS' if good else 'FAIL'}  {name}: {detail}")
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="blowup",
        description="Adjacency spectra, closed blowups, and eigenvalue ratio bounds.",
        epilog=GRAMMAR_HELP,
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="print the spectrum of a graph expression")
    sp.add_argument("expr", help=GRAMMAR_HELP)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="prefer the exact form")
    mode.add_argument("--numeric", action="store_true", help="force float values")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_spectrum)

    bp = sub.add_parser("bound", help="certified lower bound from a base graph")
    bp.add_argument("expr", help=GRAMMAR_HELP)
    bp.add_argument("--k", type=int, required=True)
    bp.add_argument("--t", default="sup", help="blowup factor, or 'sup' for the limit")
    bp.add_argument("--json", action="store_true")
    bp.set_defaults(func=cmd_bound)

    tp = sub.add_parser("table", help="reproduce the reference table of records")
    tp.add_argument("--range", help="row range like 4..24 (default all)")
    tp.add_argument("--json", action="store_true")
    tp.set_defaults(func=cmd_table)

    qp = sub.add_parser("search", help="hunt for graphs with a large limit ratio")
    qp.add_argument("--k", type=int, required=True)
    qp.add_argument("--n", type=int)
    qp.add_argument(
        "--method",
        choices=("exhaustive", "stream", "hillclimb", "anneal"),
        default="anneal",
    )
    qp.add_argument("--seed", type=int, default=S.DEFAULT_SEED,
                    help=f"RNG seed for local search (default {S.DEFAULT_SEED})")
    qp.add_argument("--budget", type=int, default=10_000)
    qp.add_argument("--restarts", type=int, default=10)
    qp.add_argument("--t0", type=float, default=0.05)
    qp.add_argument("--cooling", type=float, default=0.999)
    qp.add_argument("--g6-file", help="graph6 lines for --method stream, '-' for stdin")
    qp.add_argument("--on-error", choices=("raise", "skip"), default="raise")
    qp.add_argument("--allow-n8", action="store_true", help="acknowledge 2^28 eigensolves at n=8")
    qp.add_argument("--json", action="store_true")
    qp.set_defaults(func=cmd_search)

    vp = sub.add_parser("verify", help="run the cross-check suite")
    vp.add_argument("--json", action="store_true")
    vp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except NumericError as e:
        print(f"numeric failure: {e}", file=sys.stderr)
        return EXIT_NUMERIC
    except (InternalConsistencyError, TableMismatchError) as e:
        print(f"consistency failure: {e}", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    except (InfeasibleSrgParameters, InfeasibleIntersectionArray, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
