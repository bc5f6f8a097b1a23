"""Command-line front end: ``spectral-lab construct|spectrum|certify|search``.

graph6 is read from stdin (or ``--input``) and written to stdout.  Exit codes:
0 on success, 1 when a non-probe certificate is violated or a search check
fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import certify as certify_mod
from .certify import VIOLATED
from .claims import REGISTRY, ALIASES, ClaimParams, get_claim
from .enumeration import enumeration_cap
from .graph import BASES, Graph, construct_basic
from .graph6 import Graph6Error, from_graph6, read_graph6_lines, to_graph6
from .search import counterexample_scan, equality_census, extremal_radius_search
from .spectral import ZERO_TOL, spectrum

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

CONSTRUCT_KINDS = ("empty", "path", "cycle", "complete", "star", "bipartite", "rk", "blowup", "split", "ttree")


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"construct {args.kind} requires {' '.join(missing)}")
    return [getattr(args, n) for n in names]


def build_graph(args) -> Graph:
    kind = args.kind
    if kind in ("empty", "path", "cycle", "complete", "star"):
        (n,) = _need(args, "n")
        return construct_basic(kind, n=n)
    if kind == "bipartite":
        s, t = _need(args, "s", "t")
        return construct_basic("complete_bipartite", s=s, t=t)
    if kind == "rk":
        k, s, t = _need(args, "k", "s", "t")
        return construct_basic("rk_bipartite", k=k, s=s, t=t)
    if kind == "blowup":
        base, sizes = _need(args, "base", "sizes")
        return construct_basic("blow_up", base=base, sizes=sizes)
    if kind == "split":
        n, k = _need(args, "n", "k")
        return construct_basic("split", n=n, k=k)
    if kind == "ttree":
        (sizes,) = _need(args, "sizes")
        if len(sizes) != 3:
            raise UsageError("construct ttree takes --sizes a,b,c")
        return construct_basic("t_tree", a=sizes[0], b=sizes[1], c=sizes[2])
    raise UsageError(f"unknown kind {kind!r}")


def format_eigenvalue(x: float) -> str:
    if abs(x) <= ZERO_TOL:
        return "0"
    return f"{x:.9f}"


def _open_input(args) -> TextIO:
    if args.input in (None, "-"):
        return sys.stdin
    return open(args.input, encoding="ascii")


def _read_graphs(args, err: TextIO):
    """Yield parsed graphs; record bad lines and stop unless --continue-on-error."""
    stream = _open_input(args)
    args._bad_lines = 0
    for lineno, rec in read_graph6_lines(stream):
        try:
            yield rec, from_graph6(rec)
        except Graph6Error as exc:
            print(f"line {lineno}: {exc}", file=err)
            args._bad_lines += 1
            if not args.continue_on_error:
                return


def _write_csv(path: str, header: Sequence[str], rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


# ---------------------------------------------------------------------------
# subcommands


def cmd_construct(args, out: TextIO, err: TextIO) -> int:
    try:
        g = build_graph(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    print(to_graph6(g), file=out)
    return EXIT_OK


def cmd_spectrum(args, out: TextIO, err: TextIO) -> int:
    table = []
    for rec, g in _read_graphs(args, err):
        values = spectrum(g).values if g.n else ()
        if args.format == "json":
            print(json.dumps({"graph6": rec, "eigenvalues": [float(f"{x:.12g}") for x in values]}), file=out)
        elif args.format == "csv":
            print(",".join([rec] + [format_eigenvalue(x) for x in values]), file=out)
        else:
            print(", ".join(format_eigenvalue(x) for x in values), file=out)
        table.extend((rec, i + 1, format_eigenvalue(x)) for i, x in enumerate(values))
    if args.emit_csv:
        _write_csv(args.emit_csv, ("graph6", "index", "eigenvalue"), table)
    return EXIT_USAGE if args._bad_lines else EXIT_OK


def cmd_certify(args, out: TextIO, err: TextIO) -> int:
    try:
        claim = get_claim(args.claim)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=err)
        return EXIT_USAGE
    params = ClaimParams(k=args.k, r=args.r)
    violated = False
    table = []
    for rec, g in _read_graphs(args, err):
        try:
            certs = claim.run(g, params)
        except ValueError as exc:
            print(f"error: {rec}: {exc}", file=err)
            return EXIT_USAGE
        for c in certs:
            if c.verdict == VIOLATED and not (c.probe or claim.probe):
                violated = True
            if args.format == "text":
                print(f"{c.claim_id}\t{rec}\t{c.verdict}\t{json.dumps(c.to_dict()['margin'])}", file=out)
            else:
                print(c.to_json(), file=out)
            d = c.to_dict()
            table.append((d["claim_id"], rec, json.dumps(d["inputs"], ensure_ascii=False), d["verdict"],
                          d["lhs"], d["rhs"], d["margin"]))
    if args.emit_csv:
        _write_csv(args.emit_csv, ("claim_id", "graph6", "inputs", "verdict", "lhs", "rhs", "margin"), table)
    if args._bad_lines:
        return EXIT_USAGE
    return EXIT_VIOLATION if violated else EXIT_OK


def _sidecars(out_path: Path, report) -> None:
    stem = out_path.with_suffix("")
    for name, items in (("extremal", report.extremal_graphs), ("equality", report.equality_graphs),
                        ("counterexamples", report.counterexamples)):
        Path(f"{stem}.{name}.g6").write_text("".join(s + "\n" for s in items), encoding="ascii")


def cmd_search(args, out: TextIO, err: TextIO) -> int:
    try:
        if args.n is None:
            raise UsageError("search requires --n")
        prune = not args.no_prune
        if args.mode == "extremal":
            report = extremal_radius_search(args.n, args.k, workers=args.workers, prune=prune)
        elif args.mode == "census":
            report = equality_census(args.n, args.k, workers=args.workers, prune=prune)
        else:
            if args.claim is None:
                raise UsageError("search scan requires --claim")
            report = counterexample_scan(args.n, args.k, args.claim, r=args.r, workers=args.workers, prune=prune)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=err)
        return EXIT_USAGE
    report.params["rtol"] = certify_mod.EQ_RTOL
    report.params["max_n"] = enumeration_cap()
    text = report.to_json(include_runtime=args.timing)
    if args.out:
        out_path = Path(args.out)
        out_path.parent.mkdir(parents=True, exist_ok=True)
        out_path.write_text(text + "\n", encoding="utf-8")
        _sidecars(out_path, report)
    else:
        print(text, file=out)
    if args.emit_csv:
        rows = [("extremal", s) for s in report.extremal_graphs]
        rows += [("equality", s) for s in report.equality_graphs]
        rows += [("counterexample", s) for s in report.counterexamples]
        _write_csv(args.emit_csv, ("list", "graph6"), rows)
    probe = report.params.get("probe", False)
    if report.counterexamples and not probe:
        return EXIT_VIOLATION
    if any(v is False for v in report.checks.values()):
        return EXIT_VIOLATION
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spectral-lab", description="Spectral bounds workbench for graphs without short odd cycles.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, stream=True, k_default=1, fmt="json"):
        p.add_argument("--k", type=int, default=k_default)
        p.add_argument("--tolerance", type=float, default=None, help="relative equality tolerance (default 1e-8)")
        p.add_argument("--format", choices=("json", "csv", "text"), default=fmt)
        p.add_argument("--emit-csv", metavar="PATH", default=None, help="also write a flat CSV table")
        if stream:
            p.add_argument("--input", metavar="PATH", default=None, help="graph6 file (default stdin)")
            p.add_argument("--continue-on-error", action="store_true")

    p = sub.add_parser("construct", help="print one graph6 line for a named family")
    p.add_argument("kind", choices=CONSTRUCT_KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--base", choices=sorted(BASES))
    p.add_argument("--sizes", type=_int_list)
    common(p, stream=False, k_default=None, fmt="text")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("spectrum", help="eigenvalues of each graph6 line")
    common(p, fmt="text")
    p.set_defaults(func=cmd_spectrum)

    claims = sorted(REGISTRY) + sorted(ALIASES)
    p = sub.add_parser("certify", help="certificates for each graph6 line")
    p.add_argument("--claim", required=True, choices=claims)
    p.add_argument("--r", type=int, default=2)
    common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("search", help="exhaustive search over isomorphism classes")
    p.add_argument("mode", choices=("extremal", "census", "scan"))
    p.add_argument("--n", type=int)
    p.add_argument("--claim", choices=claims)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", metavar="PATH", help="write the JSON report here, plus graph6 sidecars")
    p.add_argument("--no-prune", action="store_true", help="scan every class instead of the hereditary family")
    p.add_argument("--timing", action="store_true", help="include runtime_ms (breaks byte-stable output)")
    common(p, stream=False)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.tolerance is not None and not args.tolerance > 0:
        print("error: --tolerance must be positive", file=err)
        return EXIT_USAGE
    if getattr(args, "workers", 1) < 1:
        print("error: --workers must be >= 1", file=err)
        return EXIT_USAGE
    saved = certify_mod.EQ_RTOL
    if args.tolerance is not None:
        certify_mod.EQ_RTOL = args.tolerance
    try:
        return args.func(args, out, err)
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    finally:
        certify_mod.EQ_RTOL = saved


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
