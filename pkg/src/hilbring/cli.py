"""Command-line entry point: ``hilbring <subcommand> ...``.

Text grammar for arguments and JSON output::

    cycle type   [l2,l3,...]        counts of 2-cycles, 3-cycles, ...; [] is the identity
    monomial     X1^e1*X2^e2*...    X_i stands for gamma_{i+1}; exponent 1 is omitted
    rational     p or p/q           coefficients are emitted as strings

Every JSON document carries ``"schema_version"`` and is written with sorted
keys, so identical inputs give byte-identical output whatever the job
count or cache state.  Schemas (version 1)::

    theta          {schema_version, eps, alpha, beta, value[, derivation]}
    multiply       {schema_version, d, alpha, beta, product: [[cycle type, rational], ...]}
    presentation   {schema_version, d, m, generators, relations: [{norm, monomials, coefficients}],
                    counts: {n: r}, total}
    relation-table {schema_version, columns: [1..n], rows: [{d, counts, total, seconds?}]}
    verify         {schema_version, d, source, passed, results: [{relation, ok, residue | error}],
                    ambiguous?: [{reading, relation, ok}], oracle?: {...}}
    identities     {schema_version, suite, passed, reports: [...]}

Exit status is 0 when every check passes, 1 when a check fails and 2 on
usage or parse errors.

The structure-constant memo is persisted in ``--cache-dir`` (default
``$HILBRING_CACHE_DIR`` or ``~/.cache/hilbring``); ``--no-cache`` disables it.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import cache
from .algebra import basis_product
from .identities import run_suite
from .oracle import DEFAULT_CAP, OracleCapExceeded, compare_with_recursion, valid_triples
from .partitions import CycleType, format_cycle_type, parse_cycle_type
from .presentation import SCHEMA_VERSION, PresentationResult, minimal_presentation, verify_presentation
from .reference import AMBIGUOUS_A8_READINGS, RELATION_TABLE, generator_names, reference_relations
from .structure_constants import explain, theta

log = logging.getLogger("hilbring")

# beyond this d the relation table is a long run and must be asked for explicitly
LONG_RUN_D = 11


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, **obj}, sort_keys=True, indent=2)


def _cycle_type(text: str) -> CycleType:
    try:
        return parse_cycle_type(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        val = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if val < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {val}")
    return val


# ---------- subcommands


def cmd_theta(args, out) -> int:
    eps, alpha, beta = args.eps, args.alpha, args.beta
    value = theta(eps, alpha, beta)
    if args.format == "json" or args.explain:
        doc = {
            "eps": format_cycle_type(eps),
            "alpha": format_cycle_type(alpha),
            "beta": format_cycle_type(beta),
            "value": value,
        }
        if args.explain:
            doc["derivation"] = explain(eps, alpha, beta, depth=args.explain)
        print(_dump(doc), file=out)
    else:
        print(value, file=out)
    return 0


def cmd_multiply(args, out) -> int:
    for lam in (args.alpha, args.beta):
        if lam.support > args.d:
            raise UsageError(f"{format_cycle_type(lam)} has support {lam.support} > d={args.d}")
    prod = basis_product(args.alpha, args.beta, args.d)
    rows = [[format_cycle_type(eps), str(c)] for eps, c in sorted(prod.items())]
    if args.format == "text":
        for eps, c in rows:
            print(f"{c}\tg{eps}", file=out)
    else:
        doc = {"d": args.d, "alpha": format_cycle_type(args.alpha), "beta": format_cycle_type(args.beta),
               "product": rows}
        print(_dump(doc), file=out)
    return 0


def latex_presentation(res: PresentationResult) -> str:
    """One coefficient array per norm, monomials as column headers."""
    names = generator_names(res.d)
    lines = [f"% minimal relations of A({res.d}), generators " +
             ", ".join(f"{names[i]} = \\gamma_{{{i + 2}}}" for i in range(res.m))]
    for n in sorted(res.relations):
        rels = res.relations[n]
        if not rels:
            continue
        used = sorted({mon for r in rels for mon, _ in r.items()}, reverse=True)
        header = " & ".join(_latex_monomial(mon, names) for mon in used)
        lines.append(f"% norm {n}")
        lines.append("\\[\\begin{array}{" + "r" * len(used) + "}")
        lines.append(header + " \\\\ \\hline")
        for r in rels:
            coeffs = dict(r.items())
            lines.append(" & ".join(str(coeffs.get(mon, 0)) for mon in used) + " \\\\")
        lines.append("\\end{array}\\]")
    return "\n".join(lines)


def _latex_monomial(mon, names) -> str:
    parts = []
    for i, e in enumerate(mon, start=1):
        if e:
            parts.append(names[i - 1] + (f"^{{{e}}}" if e > 1 else ""))
    return "".join(parts) or "1"


def cmd_presentation(args, out) -> int:
    res = minimal_presentation(args.d)
    if args.format == "json":
        print(json.dumps(res.to_json(), sort_keys=True, indent=2), file=out)
    elif args.format == "latex":
        print(latex_presentation(res), file=out)
    else:
        names = generator_names(args.d) if args.d <= 10 else None
        gens = ", ".join(
            f"{names[i - 1] if names else f'X{i}'} = gamma_{i + 1}"
            for i in range(1, res.m + 1)
        )
        print(f"A({res.d}): generators {gens or '(none)'}; {res.total} minimal relations", file=out)
        for rel in res.all_relations():
            print(f"  norm {rel.norm}: {rel.to_text(names)}", file=out)
    return 0


def _table_row(d: int) -> dict:
    start = time.perf_counter()
    res = minimal_presentation(d)
    return {"d": d, "counts": res.counts, "total": res.total, "seconds": time.perf_counter() - start}


def cmd_relation_table(args, out) -> int:
    if args.max_d > LONG_RUN_D and not args.long_run:
        raise UsageError(f"--max-d above {LONG_RUN_D} takes a long time; pass --long-run to confirm")
    ds = list(range(args.min_d, args.max_d + 1))
    if not ds:
        raise UsageError("--min-d exceeds --max-d")
    if args.jobs > 1 and len(ds) > 1:
        # largest d first so the slow rows start early; results are re-sorted
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_table_row, sorted(ds, reverse=True)))
        rows.sort(key=lambda r: r["d"])
    else:
        rows = [_table_row(d) for d in ds]
    width = max([n for r in rows for n, c in r["counts"].items() if c] + [max(len(v) for v in RELATION_TABLE.values())])
    columns = list(range(1, width + 1))
    if args.format == "json":
        doc_rows = []
        for r in rows:
            row = {"d": r["d"], "counts": [r["counts"].get(n, 0) for n in columns], "total": r["total"]}
            if args.timings:
                row["seconds"] = round(r["seconds"], 3)
            doc_rows.append(row)
        print(_dump({"columns": columns, "rows": doc_rows}), file=out)
    else:
        print("\t".join(["d"] + [str(n) for n in columns] + ["total"] + (["seconds"] if args.timings else [])),
              file=out)
        for r in rows:
            cells = [str(r["d"])] + [str(r["counts"].get(n, 0)) for n in columns] + [str(r["total"])]
            if args.timings:
                cells.append(f"{r['seconds']:.3f}")
            print("\t".join(cells), file=out)
    return 0


def cmd_verify(args, out) -> int:
    doc: dict = {"d": args.d, "source": args.source}
    if args.source == "reference":
        try:
            relations = reference_relations(args.d)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        report = verify_presentation(args.d, relations)
        passed = report["passed"]
        if args.d == 8:
            # this line lacks an operator; check both readings
            amb = []
            for sign, text in sorted(AMBIGUOUS_A8_READINGS.items()):
                r = verify_presentation(8, [text])["results"][0]
                amb.append({"reading": sign, "relation": text, "ok": r["ok"]})
            doc["ambiguous"] = amb
            passed = passed and any(a["ok"] for a in amb)
    else:
        res = minimal_presentation(args.d)
        names = generator_names(args.d) if args.d <= 10 else None
        report = verify_presentation(args.d, [r.to_text(names) for r in res.all_relations()], names)
        passed = report["passed"]
    doc["results"] = report["results"]
    if args.oracle_support:
        d = args.oracle_support
        try:
            oracle = compare_with_recursion(valid_triples(d), d, args.oracle_cap)
        except OracleCapExceeded as exc:
            raise UsageError(str(exc)) from None
        doc["oracle"] = oracle
        passed = passed and oracle["passed"]
    doc["passed"] = passed
    if args.format == "json":
        print(_dump(doc), file=out)
    else:
        for r in doc["results"]:
            status = "ok  " if r["ok"] else "FAIL"
            extra = "" if r["ok"] else f"  ({r.get('error') or 'nonzero residue'})"
            print(f"{status} {r['relation']}{extra}", file=out)
        for a in doc.get("ambiguous", []):
            print(f"{'ok  ' if a['ok'] else 'FAIL'} [reading {a['reading']}] {a['relation']}", file=out)
        if "oracle" in doc:
            o = doc["oracle"]
            print(f"{'ok  ' if o['passed'] else 'FAIL'} oracle equivalence, {o['checked']} triples in S_{o['d']}",
                  file=out)
        print("PASS" if passed else "FAIL", file=out)
    return 0 if passed else 1


def cmd_identities(args, out) -> int:
    reports = run_suite(args.suite)
    passed = all(r["passed"] for r in reports)
    if args.format == "json":
        print(_dump({"suite": args.suite, "passed": passed, "reports": reports}), file=out)
    else:
        for r in reports:
            keys = {k: v for k, v in r.items() if k in ("n", "j", "h", "m", "rows", "n_max")}
            print(f"{'ok  ' if r['passed'] else 'FAIL'} {r['name']} {keys}", file=out)
        print("PASS" if passed else "FAIL", file=out)
    return 0 if passed else 1


# ---------- parser


def _add_format(p: argparse.ArgumentParser, choices: tuple[str, ...], default: str) -> None:
    g = p.add_mutually_exclusive_group()
    for c in choices:
        g.add_argument(f"--{c}", dest="format", action="store_const", const=c, help=f"{c} output")
    g.add_argument("--format", dest="format", choices=choices)
    p.set_defaults(format=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbring",
        description="Exact products, structure constants and presentations of the algebras A(d).",
    )
    parser.add_argument("--cache-dir", type=Path, default=None,
                        help=f"theta memo directory (default ${cache.ENV_VAR} or ~/.cache/hilbring)")
    parser.add_argument("--no-cache", action="store_true", help="neither read nor write the on-disk memo")
    parser.add_argument("--jobs", "-j", type=_positive, default=1, help="worker processes (default 1)")
    parser.add_argument("--oracle-cap", type=_positive, default=DEFAULT_CAP,
                        help=f"largest d for brute-force enumeration (default {DEFAULT_CAP})")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("theta", help="structure constant theta(eps; alpha, beta)")
    p.add_argument("eps", type=_cycle_type)
    p.add_argument("alpha", type=_cycle_type)
    p.add_argument("beta", type=_cycle_type)
    p.add_argument("--explain", type=int, nargs="?", const=2, default=0, metavar="DEPTH",
                   help="include the derivation tree (JSON)")
    _add_format(p, ("text", "json"), "text")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("multiply", help="expand g_alpha * g_beta in A(d)")
    p.add_argument("alpha", type=_cycle_type)
    p.add_argument("beta", type=_cycle_type)
    p.add_argument("--d", type=_positive, required=True)
    _add_format(p, ("text", "json"), "json")
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("presentation", help="minimal presentation of A(d)")
    p.add_argument("--d", type=_positive, required=True)
    _add_format(p, ("text", "json", "latex"), "text")
    p.set_defaults(func=cmd_presentation)

    p = sub.add_parser("relation-table", help="numbers r_{d,n} of minimal relations")
    p.add_argument("--max-d", type=_positive, required=True)
    p.add_argument("--min-d", type=_positive, default=1)
    p.add_argument("--long-run", action="store_true", help=f"allow --max-d above {LONG_RUN_D}")
    p.add_argument("--timings", action="store_true", help="add per-row wall times (not reproducible)")
    _add_format(p, ("tsv", "json"), "tsv")
    p.set_defaults(func=cmd_relation_table)

    p = sub.add_parser("verify", help="check that relations vanish in A(d)")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--source", choices=("reference", "computed"), default="reference",
                   help="reference relations (d <= 10) or the computed minimal ones")
    p.add_argument("--oracle-support", type=_positive, default=0, metavar="S",
                   help="also compare theta with brute force for all triples of support <= S")
    _add_format(p, ("text", "json"), "text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("identities", help="combinatorial identity suites")
    p.add_argument("--suite", choices=("pascal", "ys", "mixed", "all"), default="all")
    _add_format(p, ("text", "json"), "json")
    p.set_defaults(func=cmd_identities)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if args.command == "verify" and args.oracle_support > args.oracle_cap:
        parser.error(f"--oracle-support {args.oracle_support} exceeds --oracle-cap {args.oracle_cap}")
    cache_dir = None if args.no_cache else (args.cache_dir or cache.default_dir())
    if cache_dir is not None:
        n = cache.load(cache_dir)
        log.info("loaded %d cached theta values from %s", n, cache_dir)
    try:
        status = args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"hilbring {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if cache_dir is not None:
        try:
            path = cache.save(cache_dir)
            log.info("saved theta cache to %s", path)
        except OSError as exc:
            log.warning("could not write theta cache: %s", exc)
    return status


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
