"""Command-line front end.

Subcommands: ``classify``, ``albert``, ``domains``, ``verify-isogeny``, ``kb``.
Exit codes: 0 success, 1 internal classification inconsistency, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .albert import AlbertType, enumerate_albert_classes, enumerate_signatures
from .domains import domain_spec
from .errors import InconsistencyError, UsageError
from .isogeny import verify_inclusion_Y_in_Z
from .obstructions import KnowledgeBase, decomposable_codim, gci_feasible, generic_signature
from .report import classify

EXIT_OK, EXIT_INCONSISTENT, EXIT_USAGE = 0, 1, 2


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def render_table(headers: Sequence[str], rows: Sequence[Sequence]) -> str:
    cells = [[str(h) for h in headers]] + [["" if c is None else str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = []
    for j, r in enumerate(cells):
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        if j == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _emit(out, fmt: str, headers, table_rows, json_rows) -> None:
    if fmt == "json":
        for row in json_rows:
            out.write(_dumps(row) + "\n")
    else:
        out.write(render_table(headers, table_rows))


def _load_kb(path: str | None) -> KnowledgeBase:
    kb = KnowledgeBase.builtin()
    if path is None:
        return kb
    try:
        return kb.extended(KnowledgeBase.load(path).records)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot load knowledge base {path!r}: {exc}") from exc


def cmd_classify(args, out) -> int:
    report = classify(args.genus, _load_kb(args.kb))
    if args.format == "json":
        out.write(json.dumps(report.to_dict(), sort_keys=True, ensure_ascii=False, indent=2) + "\n")
        return EXIT_OK
    out.write(f"genus {report.genus}: {len(report.rows)} outcomes, "
              f"{len(report.excluded)} decompositions excluded\n\n")
    headers = ["shape", "endomorphisms", "domain", "monodromy", "over C", "GCI", "locus"]
    rows = [[r.shape, r.endomorphism_class, f"{r.domain} (dim {r.domain_dimension})", r.monodromy,
             r.complexified_label, {True: "yes", False: "no", None: "unknown"}[r.gci], r.locus or "-"]
            for r in report.rows]
    out.write(render_table(headers, rows))
    counts: dict[str, int] = {}
    for e in report.excluded:
        counts[e.verdict.rule_id] = counts.get(e.verdict.rule_id, 0) + 1
    out.write("\nexcluded: " + ", ".join(f"{k} x{v}" for k, v in sorted(counts.items())) + "\n")
    for i, note in enumerate(report.footnotes, 1):
        out.write(f"[{i}] {note}\n")
    out.write(f"engine {report.engine_version}, knowledge base {report.kb_fingerprint}\n")
    return EXIT_OK


def cmd_albert(args, out) -> int:
    classes = enumerate_albert_classes(args.n)
    headers = ["type", "l", "q", "[L:Q]", "m", "description"]
    table = [[c.albert_type.value, c.l, c.q, c.degree_L, c.m, c.description] for c in classes]
    _emit(out, args.format, headers, table, [c.to_dict() for c in classes])
    return EXIT_OK


def cmd_domains(args, out) -> int:
    classes = enumerate_albert_classes(args.n)
    if args.type:
        classes = [c for c in classes if c.albert_type is AlbertType(args.type)]
    if args.l is not None:
        classes = [c for c in classes if c.l == args.l]
    table, records = [], []
    for c in classes:
        if c.albert_type is AlbertType.IV:
            sigs = enumerate_signatures(c) if args.signatures else [generic_signature(c)]
        else:
            sigs = [None]
        for sig in sigs:
            spec = domain_spec(c, sig)
            codim = decomposable_codim(c, args.n, sig)
            table.append([c.albert_type.value, c.l, c.q, c.m, "" if sig is None else str(sig),
                          spec.label, spec.total_dimension, "yes" if spec.total_dimension == 0 else "no", codim])
            records.append({
                "albert": c.to_dict(),
                "signature": None if sig is None else [list(p) for p in sig.pairs],
                "domain": spec.to_dict(),
                "cm": spec.total_dimension == 0,
                "decomposable_codim": codim,
            })
    headers = ["type", "l", "q", "m", "signature", "domain", "dim", "CM", "dec codim"]
    _emit(out, args.format, headers, table, records)
    return EXIT_OK


def cmd_verify_isogeny(args, out) -> int:
    res = verify_inclusion_Y_in_Z(args.alphabet)
    if args.format == "json":
        out.write(_dumps({
            "alphabet": args.alphabet,
            "holds": res.holds,
            "pairs_checked": res.pairs_checked,
            "mixing_pairs": res.mixing_pairs,
            "counterexamples": [[str(p), str(q)] for p, q in res.counterexamples],
        }) + "\n")
    else:
        status = "OK" if res.holds else "FAILED"
        out.write(f"{status}, {len(res.counterexamples)} counterexamples "
                  f"({res.pairs_checked} pairs, {res.mixing_pairs} mixing)\n")
        for p, q in res.counterexamples:
            out.write(f"  {p}  ->  {q}\n")
    return EXIT_OK if res.holds else EXIT_INCONSISTENT


def cmd_kb(args, out) -> int:
    kb = _load_kb(args.kb)
    if args.export:
        out.write(kb.to_json())
        return EXIT_OK
    headers = ["name", "g", "dim", "dec codim", "bdry codim", "GCI", "verified"]
    table = [[r.name, r.ambient_genus, r.dim, r.decomposable_codim, r.boundary_codim,
              "yes" if gci_feasible(r) else "no", "yes" if r.verified else "no"] for r in kb]
    records = [dict(r.to_dict(), gci_feasible=gci_feasible(r), verified=r.verified) for r in kb]
    _emit(out, args.format, headers, table, records)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kodaira-monodromy", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("classify", help="possible connected monodromy groups for a fibre genus")
    p.add_argument("--genus", type=int, required=True, help="fibre genus (>= 3)")
    p.add_argument("--kb", metavar="PATH", help="extra locus records (JSON)")
    add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("albert", help="endomorphism-algebra classes for dimension 2n")
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_albert)

    p = sub.add_parser("domains", help="Mumford-Tate domains of each class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--type", choices=[t.value for t in AlbertType])
    p.add_argument("--l", type=int, help="only classes with this [F:Q]")
    p.add_argument("--signatures", action="store_true", help="list every Type IV signature")
    add_format(p)
    p.set_defaults(func=cmd_domains)

    p = sub.add_parser("verify-isogeny", help="brute-force check of the mixing-isogeny inclusion")
    p.add_argument("--alphabet", type=int, default=4)
    add_format(p)
    p.set_defaults(func=cmd_verify_isogeny)

    p = sub.add_parser("kb", help="show or export the locus knowledge base")
    p.add_argument("--kb", metavar="PATH", help="extra locus records (JSON)")
    p.add_argument("--export", action="store_true", help="write the knowledge base file format")
    add_format(p)
    p.set_defaults(func=cmd_kb)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "n", 1) is not None and getattr(args, "n", 1) < 1:
        parser.print_usage(sys.stderr)
        sys.stderr.write("error: --n must be positive\n")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except InconsistencyError as exc:
        sys.stderr.write(f"internal inconsistency: {exc}\n")
        return EXIT_INCONSISTENT
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
