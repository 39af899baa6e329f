"""Command-line surface: group-spec parsing, analysis, verification, tables.

Subcommands:
    analyze <spec>   classification flags, both central series, theorem verdicts
    verify  <spec>   run the property suite; exit code 0 iff no fail verdicts
    table   <spec>   print the exact character table

Group specs follow the grammar ``spec := atom | spec "x" spec`` with
``atom := family ":" params | "cayley=" path | "perm=" path``.  Output is
byte-deterministic for a fixed spec, seed, and tool version.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from functools import reduce

from . import __version__
from .chartable import character_table
from .cyclotomic import serialize as cyc_serialize
from .errors import GroupSpecError, GvzkitError
from .families import build_builtin, load_cayley_file, load_permutation_file
from .groups import MAX_GROUP_ORDER, Group, Subgroup, center, direct_product, exponent
from .series import classify, epsilon_series, upsilon_series
from .vanishing import lattice_dot, normal_lattice
from .verify import SUITE_NAMES, PropertyReport, check_theorems, run_suite

MAX_PRODUCT_FACTORS = 4


@dataclass(frozen=True)
class GroupSpec:
    """A parsed group specification: one or more atoms joined by products."""

    atoms: tuple[tuple[str, ...], ...]
    text: str

    def canonical(self) -> str:
        return " x ".join(":".join(atom) if atom[0] != "file" else atom[1] for atom in self.atoms)


def parse_group_spec(text: str) -> GroupSpec:
    """Parse the product grammar; raises GroupSpecError with a position."""
    tokens = []
    pos = 0
    for raw in text.split(" "):
        if raw:
            tokens.append((raw, pos))
        pos += len(raw) + 1
    if not tokens:
        raise GroupSpecError("empty group spec", 0)
    atoms: list[tuple[str, ...]] = []
    expect_atom = True
    for tok, at in tokens:
        if expect_atom:
            if tok == "x":
                raise GroupSpecError(f"expected a group atom at position {at}", at)
            atoms.append(_parse_atom(tok, at))
            expect_atom = False
        else:
            if tok != "x":
                raise GroupSpecError(f"expected 'x' between atoms at position {at}", at)
            expect_atom = True
    if expect_atom:
        raise GroupSpecError("dangling 'x' at the end of the spec", len(text))
    if len(atoms) > MAX_PRODUCT_FACTORS:
        raise GroupSpecError(
            f"products are limited to {MAX_PRODUCT_FACTORS} factors (got {len(atoms)})", 0
        )
    return GroupSpec(tuple(atoms), text.strip())


def _parse_atom(tok: str, at: int) -> tuple[str, ...]:
    if tok.startswith("cayley=") or tok.startswith("perm="):
        kind, path = tok.split("=", 1)
        if not path:
            raise GroupSpecError(f"empty path in {kind}= atom at position {at}", at)
        return ("file", tok)
    parts = tok.split(":")
    if not parts[0]:
        raise GroupSpecError(f"missing family name at position {at}", at)
    return tuple(parts)


def build_group_from_spec(
    spec: GroupSpec, max_order: int = MAX_GROUP_ORDER, exhaustive_assoc: bool | None = None, seed: int = 0
) -> Group:
    factors = []
    for atom in spec.atoms:
        if atom[0] == "file":
            kind, path = atom[1].split("=", 1)
            g = load_cayley_file(path) if kind == "cayley" else load_permutation_file(path)
        else:
            g = build_builtin(atom[0], atom[1:])
        factors.append(g)
    group = reduce(lambda a, b: direct_product(a, b, max_order=max_order), factors)
    if group.order > max_order:
        raise GroupSpecError(f"group order {group.order} exceeds --max-order {max_order}", 0)
    if exhaustive_assoc:
        from .groups import _check_associativity

        _check_associativity(group.mul, True, seed)
    return group


# -- report assembly -----------------------------------------------------------


def _subgroup_dict(s: Subgroup) -> dict:
    return {"order": s.order, "members": [s.parent.labels[g] for g in s.members]}


def _tool_dict() -> dict:
    return {"name": "gvzkit", "version": __version__}


def analysis_report(spec: GroupSpec, g: Group, seed: int = 0) -> dict:
    table = character_table(g)
    lattice = normal_lattice(g, table)
    cls = classify(g, table)
    ups = upsilon_series(g, table=table)
    eps = epsilon_series(g, table)
    theorem_verdicts = check_theorems(g, table, lattice, seed=seed)
    return {
        "schema": "gvzkit/analyze-report/v1",
        "tool": _tool_dict(),
        "group": {
            "spec": spec.text,
            "descriptor": g.descriptor,
            "order": g.order,
            "provenance": g.provenance,
            "exponent": exponent(g),
            "dixon_prime": table.p,
            "class_count": table.classes.count,
            "center_order": center(g).order,
        },
        "classification": {
            "abelian": cls.abelian,
            "vz": cls.vz,
            "gvz": cls.gvz,
            "nested": cls.nested,
            "nested_gvz": cls.nested_gvz,
            "cd": list(cls.cd),
            "chain_of_centers": [_subgroup_dict(x) for x in cls.chain_of_centers]
            if cls.chain_of_centers is not None
            else None,
            "non_nested_witness": list(cls.non_nested_witness)
            if cls.non_nested_witness is not None
            else None,
        },
        "series": {
            "ascending": {
                "terms": [_subgroup_dict(t) for t in ups.terms],
                "reached": ups.reached,
            },
            "descending": {
                "terms": [_subgroup_dict(t) for t in eps.terms],
                "reached": eps.reached,
            },
        },
        "theorems": [v.to_dict() for v in theorem_verdicts],
        "normal_subgroup_count": len(lattice),
        "degrees": list(table.degrees()),
        "lattice": lattice,  # stripped before serialization
        "table": table,
    }


def _analysis_text(report: dict) -> str:
    g = report["group"]
    cls = report["classification"]
    lines = [
        f"group: {g['spec']} -> {g['descriptor']}",
        f"order {g['order']}, exponent {g['exponent']}, {g['class_count']} classes, "
        f"dixon prime {g['dixon_prime']}, |Z(G)| = {g['center_order']}",
        f"degrees: {', '.join(str(d) for d in report['degrees'])}",
        "classification: "
        + " ".join(
            f"{k}={str(cls[k]).lower()}" for k in ("abelian", "vz", "gvz", "nested", "nested_gvz")
        ),
        f"cd(G) = {{{', '.join(str(d) for d in cls['cd'])}}}",
    ]
    if cls["chain_of_centers"] is not None:
        chain = " > ".join(_fmt_subgroup(x) for x in cls["chain_of_centers"])
        lines.append(f"chain of centers: {chain}")
    else:
        i, j = cls["non_nested_witness"]
        lines.append(f"not nested: characters {i} and {j} have incomparable centers")
    asc = report["series"]["ascending"]
    desc = report["series"]["descending"]
    lines.append(
        "ascending series: "
        + " < ".join(_fmt_subgroup(t) for t in asc["terms"])
        + ("  [reached G]" if asc["reached"] else "  [stalled]")
    )
    lines.append(
        "descending series: "
        + " > ".join(_fmt_subgroup(t) for t in desc["terms"])
        + ("  [reached 1]" if desc["reached"] else "  [stalled]")
    )
    lines.append(f"normal subgroups: {report['normal_subgroup_count']}")
    lines.append("theorem checks:")
    for v in report["theorems"]:
        lines.append(f"  [{v['verdict']:>14s}] {v['name']}: {v['statement']}")
    return "\n".join(lines) + "\n"


def _fmt_subgroup(d: dict, max_labels: int = 16) -> str:
    labels = d["members"][:max_labels]
    extra = d["order"] - len(labels)
    body = ", ".join(labels) + (f", ...(+{extra} more)" if extra > 0 else "")
    return f"order {d['order']}: {{{body}}}"


def _verify_text(report: PropertyReport) -> str:
    lines = [
        f"group: {report.group}",
        f"lattice members: {report.lattice_members}, pairs: {report.pair_count}"
        + (" (sampled)" if report.sampled else " (exhaustive)")
        + f", seed {report.seed}",
    ]
    for v in report.verdicts:
        mark = {"pass": "PASS", "fail": "FAIL", "not-applicable": "n/a "}[v.verdict]
        lines.append(f"  [{mark}] {v.name} ({v.instances} instances): {v.statement}")
        if v.notes:
            lines.append(f"         note: {v.notes}")
        if v.witness is not None:
            lines.append(f"         witness: {json.dumps(v.witness, sort_keys=True)}")
    lines.append(f"failures: {report.failures}")
    return "\n".join(lines) + "\n"


def table_report(spec: GroupSpec, g: Group) -> dict:
    table = character_table(g)
    classes = table.classes
    return {
        "schema": "gvzkit/table-report/v1",
        "tool": _tool_dict(),
        "group": {
            "spec": spec.text,
            "descriptor": g.descriptor,
            "order": g.order,
            "provenance": g.provenance,
        },
        "e": table.e,
        "dixon_prime": table.p,
        "classes": [
            {
                "rep": g.labels[classes.reps[c]],
                "size": classes.sizes[c],
                "rep_order": int(g.element_orders()[classes.reps[c]]),
            }
            for c in range(classes.count)
        ],
        "characters": [
            {"degree": ch.degree, "values": [cyc_serialize(v) for v in ch.values]}
            for ch in table.chars
        ],
    }


def _table_text(report: dict) -> str:
    headers = [f"{c['rep']}({c['size']})" for c in report["classes"]]
    value_rows = []
    for ch in report["characters"]:
        row = []
        for v in ch["values"]:
            coeffs = v["coeffs"]
            if not any(coeffs[1:]):
                row.append(str(coeffs[0]))
            else:
                row.append(_poly_str(report["e"], coeffs) + f" (~{v['approx']})")
        value_rows.append(row)
    widths = [
        max(len(headers[c]), *(len(r[c]) for r in value_rows)) for c in range(len(headers))
    ]
    lines = [
        f"character table of {report['group']['descriptor']}",
        f"exponent {report['e']}, dixon prime {report['dixon_prime']}; "
        f"z{report['e']} denotes exp(2*pi*i/{report['e']})",
        "  ".join(h.rjust(w) for h, w in zip(headers, widths)),
    ]
    for row in value_rows:
        lines.append("  ".join(s.rjust(w) for s, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def _poly_str(e: int, coeffs) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        base = "1" if k == 0 else (f"z{e}" if k == 1 else f"z{e}^{k}")
        if k == 0:
            parts.append(f"{c:+d}")
        elif c == 1:
            parts.append(f"+{base}")
        elif c == -1:
            parts.append(f"-{base}")
        else:
            parts.append(f"{c:+d}*{base}")
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


# -- entry point -----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gvzkit",
        description="Exact character-theoretic analysis of finite groups.",
    )
    parser.add_argument("--version", action="version", version=f"gvzkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("spec", help="group spec, e.g. 'dihedral:8' or 'extraspecial:3:1:p x cyclic:4'")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--max-order", type=int, default=MAX_GROUP_ORDER)
        p.add_argument(
            "--exhaustive-assoc",
            action="store_true",
            help="force exhaustive associativity validation regardless of order",
        )
        p.add_argument("--seed", type=int, default=0, help="seed for deterministic pair sampling")

    p_analyze = sub.add_parser("analyze", help="classification flags, series, theorem verdicts")
    common(p_analyze)
    p_analyze.add_argument(
        "--lattice-dot", metavar="PATH", help="also write the normal lattice as a DOT digraph"
    )

    p_verify = sub.add_parser("verify", help="run the property suite; exit 0 iff clean")
    common(p_verify)
    p_verify.add_argument(
        "--suite",
        default="all",
        help="comma-separated suite or property names (default: all); "
        f"suites: {', '.join(SUITE_NAMES)}",
    )
    p_verify.add_argument(
        "--with-timings",
        action="store_true",
        help="include wall-clock timings in JSON output (breaks byte determinism)",
    )

    p_table = sub.add_parser("table", help="print the exact character table")
    common(p_table)
    return parser


def run_cli(argv) -> tuple[int, str]:
    """Parse and execute; returns (exit_code, output).  Errors go to stderr."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    spec = parse_group_spec(args.spec)
    g = build_group_from_spec(
        spec, max_order=args.max_order, exhaustive_assoc=args.exhaustive_assoc, seed=args.seed
    )
    if args.command == "analyze":
        report = analysis_report(spec, g, seed=args.seed)
        if args.lattice_dot:
            with open(args.lattice_dot, "w", encoding="utf-8") as fh:
                fh.write(lattice_dot(g, report["lattice"], report["table"]))
        report.pop("lattice")
        report.pop("table")
        if args.format == "json":
            return 0, json.dumps(report, indent=2, sort_keys=True) + "\n"
        return 0, _analysis_text(report)
    if args.command == "verify":
        report = run_suite(g, args.suite, seed=args.seed)
        code = 0 if report.failures == 0 else 1
        if args.format == "json":
            payload = report.to_dict(with_timings=args.with_timings)
            payload["tool"] = _tool_dict()
            return code, json.dumps(payload, indent=2, sort_keys=True) + "\n"
        return code, _verify_text(report)
    if args.command == "table":
        report = table_report(spec, g)
        if args.format == "json":
            return 0, json.dumps(report, indent=2, sort_keys=True) + "\n"
        return 0, _table_text(report)
    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    try:
        code, output = run_cli(argv if argv is not None else sys.argv[1:])
    except GvzkitError as exc:
        print(f"gvzkit: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"gvzkit: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
