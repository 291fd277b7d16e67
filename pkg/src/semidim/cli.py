"""Command-line front end.

Exit codes: 0 ok, 1 semantic failure, 2 parse/IO error, 3 cap exceeded,
4 unsupported case.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import product as product_mod
from .campaign import default_campaign, verify_campaign
from .errors import SemidimError, SemiringFormatError
from .formats import dumps_semiring, load_campaign, load_target
from .graph import build_total_graph, export_dot
from .metric import ORACLE_CAP, metric_dimension_exact, metric_dimension_oracle
from .product import ProductSemiring
from .semiring import AXIOMS, enumerate_semirings, verify_axioms
from .theory import Case, classify_product

JOBS_ENV = "SEMIDIM_JOBS"


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def _print_report(t, report, title: str) -> None:
    print(f"semiring {title} (order {t.order})")
    for axiom in AXIOMS:
        v = report[axiom]
        extra = "" if v.ok else f"  counterexample {v.counterexample}"
        print(f"  {axiom:<18} {'PASS' if v.ok else 'FAIL'}{extra}")
    print("admissible" if report.admissible else "NOT admissible")


def cmd_check(args) -> int:
    s = load_target(args.path)
    # Hypotheses are stated per factor; a product of two or more factors is
    # never Z-closed itself, so products are checked factor by factor.
    tables = list(s.factors) if isinstance(s, ProductSemiring) else [s]
    ok = True
    for i, t in enumerate(tables):
        report = verify_axioms(t)
        title = t.name or args.path
        if len(tables) > 1:
            title = f"factor {i + 1}: {title}"
        _print_report(t, report, title)
        ok = ok and report.admissible
    return 0 if ok else 1


def cmd_dim(args) -> int:
    s = load_target(args.path)
    g = build_total_graph(s, restricted=not args.unrestricted)
    t0 = time.perf_counter()
    res = metric_dimension_exact(g)
    elapsed = time.perf_counter() - t0
    witness = [g.labels[g.position(w)] for w in res.witness]
    out = {
        "dimension": res.dimension,
        "witness": witness,
        "method": res.method.value,
        "vertices": len(g),
        "seconds": round(elapsed, 6),
    }
    agree = True
    if args.oracle:
        if len(g) > ORACLE_CAP:
            out["oracle"] = None
            out["oracle_note"] = f"skipped: {len(g)} vertices exceed oracle cap {ORACLE_CAP}"
        else:
            o = metric_dimension_oracle(g)
            out["oracle"] = o.dimension
            agree = o.dimension == res.dimension
            out["agree"] = agree
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        line = f"dim={res.dimension} witness=[{', '.join(witness)}] method={res.method.value}"
        if "oracle" in out:
            line += f" oracle={out['oracle']}"
            if "agree" in out:
                line += f" agree={'yes' if agree else 'NO'}"
        print(line)
    return 0 if agree else 1


def cmd_predict(args) -> int:
    s = load_target(args.path)
    if not isinstance(s, ProductSemiring):
        s = ProductSemiring([s])
    c = classify_product(s, strict=args.strict)
    head = f"{c.case.value} m={c.m} n={c.n_z} |Z|={c.zs} |S|={c.s}"
    if c.r is not None:
        head += f" |R|={c.r}"
    if c.supported:
        head += f" dim={c.predicted_dim}"
    print(head)
    print(f"  factors: {s.name}")
    print("  kinds: " + ", ".join(f"{k.kind.value}(z={k.z},u={k.u})" for k in c.kinds))
    if c.formula:
        print(f"  formula: {c.formula}")
    for note in c.notes:
        print(f"  note: {note}")
    if c.case is Case.UNSUPPORTED:
        print("  !! no closed form applies to this product", file=sys.stderr)
        return 4
    return 0


def cmd_verify(args) -> int:
    if args.campaign == "default":
        products = default_campaign()
    else:
        products = load_campaign(args.campaign)
    report = verify_campaign(products, use_oracle=not args.no_oracle, strict=args.strict, jobs=args.jobs)
    if args.format == "csv":
        text = report.to_csv()
    elif args.format == "json":
        text = json.dumps(report.to_dict(), indent=2) + "\n"
    else:
        text = report.to_text()
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return report.exit_code


def cmd_graph(args) -> int:
    s = load_target(args.path)
    g = build_total_graph(s, restricted=not args.unrestricted)
    text = export_dot(g)
    if args.dot:
        _write(args.dot, text)
        print(f"wrote {args.dot}: {len(g)} nodes, {g.edge_count()} edges")
    else:
        sys.stdout.write(text)
    return 0


def cmd_enumerate(args) -> int:
    flags = dict(
        commutative=args.commutative or args.all_filters,
        antinegative=args.antinegative or args.all_filters,
        zclosed=args.zclosed or args.all_filters,
    )
    out = Path(args.out) if args.out else None
    if out is not None:
        try:
            out.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise SemiringFormatError(f"{out}: cannot create directory ({exc.strerror})") from exc
    count = 0
    for t in enumerate_semirings(args.order, **flags):
        count += 1
        if out is not None:
            _write(out / f"semiring_{args.order}_{count:05d}.json", dumps_semiring(t))
    print(f"order={args.order} count={count}")
    return 0


def _write(path, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise SemiringFormatError(f"{path}: cannot write ({exc.strerror})") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semidim",
        description="Metric dimension of total graphs of finite semirings.",
    )
    parser.add_argument(
        "--cap", type=int, default=product_mod.MATERIALIZE_CAP,
        help="materialization cap for products (default %(default)s)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify semiring axioms and hypotheses")
    p.add_argument("path", help="semiring file or catalog:NAME")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("dim", help="exact metric dimension of the total graph")
    p.add_argument("path", help="semiring/product file, catalog:NAME or catalog:A,B,...")
    p.add_argument("--unrestricted", action="store_true", help="use all of S, not just Z(S)")
    p.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("predict", help="closed-form prediction for a product")
    p.add_argument("path")
    p.add_argument("--strict", action="store_true", help="require m*n != 0 for HAUPT2")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("campaign", help="campaign file, or 'default' for the bundled campaign")
    p.add_argument("--no-oracle", action="store_true")
    p.add_argument("--strict", action="store_true")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    p.set_defaults(format="text")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--jobs", type=int, default=_default_jobs(), help=f"worker processes (env {JOBS_ENV})")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("graph", help="export the total graph as DOT")
    p.add_argument("path")
    p.add_argument("--unrestricted", action="store_true")
    p.add_argument("--dot", help="output file (stdout if omitted)")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("enumerate", help="enumerate small semirings")
    p.add_argument("order", type=int)
    p.add_argument("--commutative", action="store_true")
    p.add_argument("--antinegative", action="store_true")
    p.add_argument("--zclosed", action="store_true")
    p.add_argument("--all-filters", action="store_true")
    p.add_argument("--out", help="directory for the numbered semiring files")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SemidimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
