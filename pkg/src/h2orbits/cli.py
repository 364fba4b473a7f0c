"""Command-line interface: ``h2orbits <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .errors import BudgetExceeded, OrigamiError
from .graph import MultiGraph, export_dot, export_json, is_planar, spectral_probe
from .minors import check_family_degree, normalize_family, verify_family
from .orbit import enumerate_orbit, normalize_orbit_label, orbits_for, standard_seed
from .origami import (
    canonical_form,
    equivalent,
    format_origami,
    monodromy_class,
    parse_origami,
    stratum,
)
from .sl2 import apply_word, parse_word

DEFAULT_ROW_SECONDS = 120.0
DEFAULT_ROW_BYTES = 2 * 1024**3

_FAMILY_OF = {"unique": "even", "A": "A", "B": "B"}


def _max_vertices(n: int, budget_bytes: int) -> int:
    # canonical key tuple + index entry + four edges, roughly
    per_vertex = 16 * n + 400
    return max(1, budget_bytes // per_vertex)


def expected_planar(n: int, orbit: str, gens: str) -> bool:
    if gens == "TS":
        return (n, orbit) in ((3, "unique"), (5, "B"))
    return n <= 7 or (n, orbit) == (9, "B")


def _family_for(n: int, orbit: str):
    family = _FAMILY_OF[orbit]
    try:
        check_family_degree(family, n)
    except OrigamiError:
        return None
    return family


# -- commands -------------------------------------------------------------------

def cmd_classify(args) -> int:
    o = parse_origami(args.origami)
    st = stratum(o)
    mc = monodromy_class(o)
    info = {
        "origami": format_origami(o),
        "n": o.n,
        "stratum": list(st.zero_orders),
        "genus": st.genus,
        "in_H2": st.is_h2(),
        "primitive": mc.is_primitive,
        "h_even": mc.h_even,
        "v_even": mc.v_even,
        "monodromy": mc.label.value,
        "jordan_certified": mc.jordan_certified,
        "canonical": canonical_form(o).serialize(),
    }
    if args.json:
        print(json.dumps(info, indent=2))
        return 0
    print(f"origami     {info['origami']}")
    print(f"squares     {o.n}")
    print(f"stratum     {st}  (genus {st.genus}){'' if st.is_h2() else '  -- not H(2)'}")
    print(f"primitive   {'yes' if mc.is_primitive else 'no'}")
    print(f"parities    h {'even' if mc.h_even else 'odd'}, v {'even' if mc.v_even else 'odd'}")
    evidence = "Jordan-certified" if mc.jordan_certified else "evidence only"
    print(f"monodromy   {mc.label.value} ({evidence})")
    print(f"canonical   {info['canonical']}")
    return 0


def _orbit_from_args(args):
    orbit = normalize_orbit_label(args.orbit)
    seed = standard_seed(args.n, orbit)
    deadline = time.monotonic() + args.budget_seconds
    return enumerate_orbit(
        seed, args.gens, orbit, deadline=deadline, max_vertices=_max_vertices(args.n, DEFAULT_ROW_BYTES)
    )


def _write(text: str, path) -> None:
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_orbit(args) -> int:
    g = _orbit_from_args(args)
    if args.format == "dot":
        _write(export_dot(g), args.out)
    elif args.format == "json":
        _write(export_json(g), args.out)
    else:
        r = g.report()
        _write(
            f"n={r['n']} orbit={r['orbit']} gens={r['generators']} vertices={r['vertex_count']} "
            f"edges={r['edge_count']} loops={r['loop_count']}\n",
            args.out,
        )
    return 0


def cmd_planarity(args) -> int:
    g = _orbit_from_args(args)
    result = is_planar(MultiGraph.from_orbit(g))
    verdict = "planar" if result.planar else "non-planar"
    if args.json:
        out = dict(g.report(), planar=result.planar)
        if args.embedding and result.embedding is not None:
            out["embedding"] = {str(k): v for k, v in result.embedding.items()}
        print(json.dumps(out, indent=2))
    else:
        print(f"n={g.n} orbit={g.orbit} gens={g.generator_set} vertices={g.vertex_count}: {verdict}")
        if args.embedding and result.embedding is not None:
            for v, ring in sorted(result.embedding.items()):
                print(f"  {v}: {' '.join(map(str, ring))}")
    if args.expect is not None and (args.expect == "planar") != result.planar:
        print(f"expected {args.expect}, got {verdict}", file=sys.stderr)
        return 1
    return 0


def cmd_verify_minor(args) -> int:
    report = verify_family(args.family, args.n)
    if args.json:
        print(json.dumps(report.to_dict(timings=args.timings), indent=2))
    else:
        status = "verified" if report.verified else "FAILED"
        print(f"family={report.family} n={report.n} orbit vertices={report.orbit.vertex_count}: {status}")
        if not report.certificate_ok:
            print(f"  certificate: {report.certificate_diagnostic}")
        for c in report.checks:
            mark = "ok  " if c.passed else ("FAIL" if c.kind == "claim" else "note")
            print(f"  [{mark}] {c.name}" + ("" if c.passed else f": {c.detail}"))
        if args.timings:
            for k, v in report.timings.items():
                print(f"  {k}: {v * 1000:.1f} ms")
    return 0 if report.verified else 1


def scan_row(n: int, orbit: str, gens: str, spectral: bool = False,
             budget_seconds: float = DEFAULT_ROW_SECONDS, budget_bytes: int = DEFAULT_ROW_BYTES) -> dict:
    """One scan row; budget overruns are recorded in the row, not raised."""
    t0 = time.perf_counter()
    row = {"n": n, "orbit": orbit, "generators": gens}
    try:
        deadline = time.monotonic() + budget_seconds
        g = enumerate_orbit(standard_seed(n, orbit), gens, orbit, deadline=deadline,
                            max_vertices=_max_vertices(n, budget_bytes))
        mg = MultiGraph.from_orbit(g)
        row.update(vertex_count=g.vertex_count, edge_count=g.edge_count, loop_count=g.loop_count)
        planar = is_planar(mg).planar
        row["planar"] = planar
        expected = expected_planar(n, orbit, gens)
        row["expected_planar"] = expected
        ok = planar == expected
        if gens == "TS":
            family = _family_for(n, orbit)
            if family is None:
                row["certificate_verified"] = None
            else:
                report = verify_family(family, n, orbit=g)
                row["certificate_verified"] = report.verified
                ok = ok and report.verified and not planar
        if spectral:
            row["spectral_gap"] = round(spectral_probe(mg).gap, 12)
        if time.monotonic() > deadline:
            raise BudgetExceeded(f"row exceeded {budget_seconds} s")
        row["status"] = "ok" if ok else "failed"
    except BudgetExceeded as exc:
        row["status"] = "budget_exceeded"
        row["error"] = str(exc)
    row["wall_time_ms"] = round((time.perf_counter() - t0) * 1000, 1)
    return row


def _row_task(job):
    return scan_row(*job)


def run_scan(gens: str, n_min: int, n_max: int, jobs: int = 1, spectral: bool = False,
             budget_seconds: float = DEFAULT_ROW_SECONDS) -> list:
    if not 3 <= n_min <= n_max:
        raise OrigamiError(f"need 3 <= n-min <= n-max, got {n_min}..{n_max}")
    tasks = [(n, o, gens, spectral, budget_seconds) for n in range(n_min, n_max + 1) for o in orbits_for(n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_row_task, tasks))
    else:
        rows = [_row_task(t) for t in tasks]
    order = {"unique": 0, "A": 1, "B": 2}
    rows.sort(key=lambda r: (r["generators"], r["n"], order[r["orbit"]]))
    return rows


def _scan_table(rows, timings: bool) -> str:
    head = f"{'gens':4} {'n':>3} {'orbit':6} {'V':>6} {'E':>6} {'planar':7} {'expect':7} {'cert':5} {'gap':>10} status"
    if timings:
        head += "   ms"
    lines = [head]
    for r in rows:
        cert = r.get("certificate_verified")
        cert = "-" if cert is None else ("yes" if cert else "NO")
        gap = r.get("spectral_gap")
        gap = f"{gap:.6f}" if gap is not None else "-"
        planar = {True: "yes", False: "no"}.get(r.get("planar"), "?")
        expect = {True: "yes", False: "no"}.get(r.get("expected_planar"), "?")
        line = (f"{r['generators']:4} {r['n']:>3} {r['orbit']:6} {r.get('vertex_count', '?'):>6} "
                f"{r.get('edge_count', '?'):>6} {planar:7} {expect:7} {cert:5} {gap:>10} {r['status']}")
        if timings:
            line += f" {r['wall_time_ms']:>8.1f}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def cmd_scan(args) -> int:
    rows = run_scan(args.gens, args.n_min, args.n_max, args.jobs, args.spectral, args.budget_seconds)
    if not args.timings:
        rows = [{k: v for k, v in r.items() if k != "wall_time_ms"} for r in rows]
    report = {"generators": args.gens, "n_min": args.n_min, "n_max": args.n_max, "rows": rows}
    if args.spectral:
        report["spectral_convention"] = "gap = 1 - lambda_2/4, lambda_2 second-largest by value"
    text = json.dumps(report, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    if args.json:
        sys.stdout.write(text)
    else:
        sys.stdout.write(_scan_table(rows, args.timings))
    return 0 if all(r["status"] == "ok" for r in rows) else 1


def cmd_act(args) -> int:
    word = parse_word(args.word)
    o = parse_origami(args.origami)
    out = apply_word(word, o)
    print(format_origami(out))
    if args.show_equivalence:
        print("equivalent to input" if equivalent(out, o) else "not equivalent to input")
    return 0


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="h2orbits", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="invariants of an origami literal")
    c.add_argument("--origami", required=True, help='e.g. "h=(1,2,3); v=(1,3); n=3"')
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_classify)

    def orbit_args(sp):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--orbit", default="unique", help="unique, A or B")
        sp.add_argument("--gens", default="TS", choices=["TS", "PR"])
        sp.add_argument("--budget-seconds", type=float, default=DEFAULT_ROW_SECONDS)

    c = sub.add_parser("orbit", help="enumerate and export an orbit graph")
    orbit_args(c)
    c.add_argument("--format", default="text", choices=["text", "dot", "json"])
    c.add_argument("--out", help="output file (default stdout)")
    c.set_defaults(func=cmd_orbit)

    c = sub.add_parser("planarity", help="planarity verdict for an orbit graph")
    orbit_args(c)
    c.add_argument("--embedding", action="store_true", help="print the rotation system when planar")
    c.add_argument("--expect", choices=["planar", "non-planar"], help="exit 1 unless the verdict matches")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_planarity)

    c = sub.add_parser("verify-minor", help="machine-check a K_{3,3} construction")
    c.add_argument("--family", required=True, type=normalize_family, help="even, A or B")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--json", action="store_true")
    c.add_argument("--timings", action="store_true")
    c.set_defaults(func=cmd_verify_minor)

    c = sub.add_parser("scan", help="planarity table over a range of n")
    c.add_argument("--gens", default="TS", choices=["TS", "PR"])
    c.add_argument("--n-min", type=int, default=3)
    c.add_argument("--n-max", type=int, required=True)
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--spectral", action="store_true")
    c.add_argument("--timings", action="store_true", help="include wall times (breaks byte-stability)")
    c.add_argument("--budget-seconds", type=float, default=DEFAULT_ROW_SECONDS)
    c.add_argument("--out", help="write the JSON report here")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_scan)

    c = sub.add_parser("act", help="apply an SL(2,Z) word to an origami")
    c.add_argument("--word", required=True, help='e.g. "T^-3 S T" (rightmost acts first)')
    c.add_argument("--origami", required=True)
    c.add_argument("--show-equivalence", action="store_true")
    c.set_defaults(func=cmd_act)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OrigamiError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
