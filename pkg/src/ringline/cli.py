"""Command-line front end.

Commands: ``ring info``, ``ring validate``, ``line compute``,
``line export``, ``condense``, ``table2``.  Output is plain text by
default and JSON (stable key order) with ``--json``; repeated runs of the
same command print byte-identical output.  Exit codes: 0 when every
requested check passes, 1 when a check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from .condense import condensate_distant_analysis, identify_condensate
from .constructors import SUPPORTED_FIELD_ORDERS, construct, load_ring_file
from .errors import EmptySector, NotPartition, NonUniquePartition, RinglineError
from .geometry import (
    SECTORS,
    cross_sector_check,
    export_graph,
    max_distant_cliques,
    max_neighbour_cliques,
    unimodular_partition,
)
from .line import compute_line, line_to_json
from .rings import FiniteRing, ISOMORPHISM_MAX_ORDER, are_isomorphic, ideal_size_census


def _census_text(ring: FiniteRing) -> str:
    census = ideal_size_census(ring)
    return ", ".join(f"{size}:{count}" for size, count in census.items())


def _named_candidates(order: int) -> list[str]:
    specs = [f"Z({order})"]
    if order in SUPPORTED_FIELD_ORDERS:
        specs.append(f"GF({order})")
    for q in SUPPORTED_FIELD_ORDERS:
        if q * q == order:
            specs.append(f"D({q})")
        if q * q * q == order:
            specs.append(f"T({q})")
    return specs


def _identify_ring(ring: FiniteRing) -> list[str]:
    if ring.order > ISOMORPHISM_MAX_ORDER:
        return []
    matches = []
    for spec in _named_candidates(ring.order):
        try:
            candidate = construct(spec)
        except RinglineError:
            continue
        if are_isomorphic(candidate, ring) is not None:
            matches.append(spec)
    return matches


def cmd_ring_info(args) -> int:
    ring = construct(args.spec)
    data = {
        "schema": "ringline.ring_info/1",
        "ring": ring.label,
        "order": ring.order,
        "units": len(ring.units),
        "zero_divisors": len(ring.zero_divisors),
        "commutative": ring.is_commutative,
        "ideals_by_size": {str(k): v for k, v in ideal_size_census(ring).items()},
    }
    is_file_spec = args.spec.strip().startswith("file:")
    if is_file_spec:
        data["isomorphic_to"] = _identify_ring(ring)
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
        return 0
    print(f"ring: {ring.label}")
    print(f"order: {ring.order}")
    print(f"units: {len(ring.units)}")
    print(f"zero divisors: {len(ring.zero_divisors)}")
    print(f"commutative: {'yes' if ring.is_commutative else 'no'}")
    print(f"ideals by size: {_census_text(ring)}")
    if is_file_spec:
        found = data["isomorphic_to"]
        print(f"isomorphic to: {', '.join(found) if found else 'no named construction of this order'}")
    return 0


def cmd_ring_validate(args) -> int:
    try:
        ring = load_ring_file(args.file)
    except RinglineError as exc:
        if args.json:
            print(json.dumps(
                {"schema": "ringline.ring_validate/1", "valid": False, "error": str(exc)},
                indent=2, sort_keys=True,
            ))
        else:
            print(f"INVALID: {exc}")
        return 1
    if args.json:
        print(json.dumps(
            {
                "schema": "ringline.ring_validate/1",
                "valid": True,
                "order": ring.order,
                "units": len(ring.units),
                "zero_divisors": len(ring.zero_divisors),
            },
            indent=2, sort_keys=True,
        ))
    else:
        print(
            f"VALID: order {ring.order}, {len(ring.units)} units,"
            f" {len(ring.zero_divisors)} zero divisors"
        )
    return 0


@dataclass
class LineReport:
    """Everything the ``line compute`` command prints."""

    ring: str
    order: int
    units: int
    zero_divisors: int
    commutative: bool
    unimodular: int
    nonunimodular: int
    max_distant: dict[str, int | None]
    max_neighbour: dict[str, int | None]
    partition_class_sizes: tuple[int, ...] | None
    partition_anchor_sets: int | None
    partition_unique: bool | None
    cross_sector_all_neighbour: bool | None
    condensate_status: str
    condensate_matches: tuple[str, ...]
    condensate_classes: int
    condensate_edges: int


def build_line_report(ring: FiniteRing, catalog: tuple[str, ...] | None = None) -> LineReport:
    line = compute_line(ring)
    max_distant: dict[str, int | None] = {}
    max_neighbour: dict[str, int | None] = {}
    for sector in SECTORS:
        try:
            max_distant[sector] = len(max_distant_cliques(line, sector)[0])
            max_neighbour[sector] = len(max_neighbour_cliques(line, sector)[0])
        except EmptySector:
            max_distant[sector] = None
            max_neighbour[sector] = None
    try:
        partition = unimodular_partition(line)
        sizes: tuple[int, ...] | None = partition.class_sizes
        anchor_sets: int | None = partition.anchor_sets_checked
        unique: bool | None = True
    except NonUniquePartition:
        sizes, anchor_sets, unique = None, None, False
    except (NotPartition, EmptySector):
        sizes, anchor_sets, unique = None, None, None
    try:
        cross, _ = cross_sector_check(line)
    except EmptySector:
        cross = None
    ident = identify_condensate(line, catalog)
    return LineReport(
        ring=ring.label,
        order=ring.order,
        units=len(ring.units),
        zero_divisors=len(ring.zero_divisors),
        commutative=ring.is_commutative,
        unimodular=len(line.unimodular_points),
        nonunimodular=len(line.nonunimodular_points),
        max_distant=max_distant,
        max_neighbour=max_neighbour,
        partition_class_sizes=sizes,
        partition_anchor_sets=anchor_sets,
        partition_unique=unique,
        cross_sector_all_neighbour=cross,
        condensate_status=ident.status,
        condensate_matches=ident.matches,
        condensate_classes=len(ident.condensate.vertices),
        condensate_edges=len(ident.condensate.edges),
    )


def _clique_line(values: dict[str, int | None]) -> str:
    parts = []
    for sector in SECTORS:
        shown = "n/a" if values[sector] is None else str(values[sector])
        name = "non-unimodular" if sector == "nonunimodular" else sector
        parts.append(f"{name} {shown}")
    return ", ".join(parts)


def render_line_report(report: LineReport) -> str:
    out = [
        f"ring: {report.ring}",
        f"order: {report.order}",
        f"units: {report.units}",
        f"zero divisors: {report.zero_divisors}",
        f"commutative: {'yes' if report.commutative else 'no'}",
        f"points: {report.unimodular + report.nonunimodular}"
        f" = {report.unimodular} unimodular + {report.nonunimodular} non-unimodular",
        f"max distant clique: {_clique_line(report.max_distant)}",
        f"max neighbour clique: {_clique_line(report.max_neighbour)}",
    ]
    if report.partition_class_sizes is not None:
        sizes = "+".join(str(s) for s in report.partition_class_sizes)
        out.append(
            f"partition: class sizes {sizes}, identical for all"
            f" {report.partition_anchor_sets} maximum distant cliques"
        )
    elif report.partition_unique is False:
        out.append("partition: NOT unique across maximum distant cliques")
    else:
        out.append("partition: n/a")
    if report.cross_sector_all_neighbour is None:
        out.append("cross-sector: n/a (a sector is empty)")
    else:
        pairs = report.unimodular * report.nonunimodular
        verdict = "all" if report.cross_sector_all_neighbour else "NOT all"
        out.append(
            f"cross-sector: {verdict} {pairs} non-unimodular x unimodular pairs are neighbour"
        )
    if report.condensate_status == "empty":
        out.append("condensate: empty")
    else:
        matched = (
            f"matches {', '.join(report.condensate_matches)}"
            if report.condensate_matches
            else "no catalog match"
        )
        out.append(
            f"condensate: {report.condensate_classes} classes,"
            f" {report.condensate_edges} edges, {matched}"
        )
    return "\n".join(out)


def line_report_json(report: LineReport) -> str:
    partition = None
    if report.partition_class_sizes is not None:
        partition = {
            "class_sizes": list(report.partition_class_sizes),
            "anchor_sets_checked": report.partition_anchor_sets,
            "unique": True,
        }
    elif report.partition_unique is False:
        partition = {"unique": False}
    data = {
        "schema": "ringline.line_report/1",
        "ring": report.ring,
        "order": report.order,
        "units": report.units,
        "zero_divisors": report.zero_divisors,
        "commutative": report.commutative,
        "unimodular_points": report.unimodular,
        "nonunimodular_points": report.nonunimodular,
        "max_distant": report.max_distant,
        "max_neighbour": report.max_neighbour,
        "partition": partition,
        "cross_sector_all_neighbour": report.cross_sector_all_neighbour,
        "condensate": {
            "status": report.condensate_status,
            "matches": list(report.condensate_matches),
            "classes": report.condensate_classes,
            "edges": report.condensate_edges,
        },
    }
    return json.dumps(data, indent=2, sort_keys=True)


def _label_slug(label: str) -> str:
    table = str.maketrans({"*": "x", "(": "_", ")": "", ":": "_", "/": "_", " ": ""})
    return label.translate(table)


def cmd_line_compute(args) -> int:
    started = time.perf_counter()
    ring = construct(args.spec)
    report = build_line_report(ring)
    if args.json:
        print(line_report_json(report))
    else:
        print(render_line_report(report))
    if args.fixtures:
        os.makedirs(args.fixtures, exist_ok=True)
        path = os.path.join(args.fixtures, f"{_label_slug(ring.label)}.line.json")
        _atomic_write(path, line_to_json(compute_line(ring)))
        print(f"fixture written to {path}", file=sys.stderr)
    if args.timing:
        print(f"elapsed: {time.perf_counter() - started:.3f}s", file=sys.stderr)
    return 0


_SECTOR_FLAGS = {"u": "unimodular", "n": "nonunimodular", "all": "whole"}


def _atomic_write(path: str, content: str) -> None:
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as handle:
        handle.write(content)
    os.replace(tmp, path)


def cmd_line_export(args) -> int:
    ring = construct(args.spec)
    line = compute_line(ring)
    document = export_graph(line, _SECTOR_FLAGS[args.sector], args.format)
    _atomic_write(args.out, document)
    print(f"wrote {args.out}")
    return 0


def cmd_condense(args) -> int:
    ring = construct(args.spec)
    line = compute_line(ring)
    catalog = tuple(s.strip() for s in args.catalog.split(",")) if args.catalog else None
    ident = identify_condensate(line, catalog)
    structure = ident.condensate
    distant = None if structure.is_empty else condensate_distant_analysis(structure)
    if args.json:
        data = {
            "schema": "ringline.condensate/1",
            "ring": ring.label,
            "status": ident.status,
            "matches": list(ident.matches),
            "classes": [
                {
                    "members": [list(v) for v in vc.members],
                    "points": sorted(vc.signature),
                }
                for vc in structure.vertices
            ],
            "edges": [list(edge) for edge in structure.edges],
            "max_distant_set": distant,
        }
        print(json.dumps(data, indent=2, sort_keys=True))
        return 0
    print(f"ring: {ring.label}")
    if ident.status == "empty":
        print("condensate: empty (no non-unimodular points)")
        return 0
    print(f"condensate: {len(structure.vertices)} classes, {len(structure.edges)} edges")
    for index, vc in enumerate(structure.vertices):
        members = " ".join(f"({a},{b})" for a, b in vc.members)
        print(f"class {index}: {members} | on {len(vc.signature)} point(s)")
    for index, edge in enumerate(structure.edges):
        print(f"edge {index}: classes {' '.join(str(v) for v in edge)}")
    print(f"max distant set: {distant}")
    matched = ", ".join(ident.matches) if ident.matches else "no catalog match"
    print(f"matches: {matched}")
    return 0


@dataclass
class _Table2Row:
    name: str
    source: str | None  # construction spec, or None when a file is needed
    file_flag: str | None
    expect_unimodular: int
    expect_nonunimodular: int
    expect_matches: frozenset[str]


_TABLE2_ROWS = (
    _Table2Row("T(2)", "T(2)", None, 18, 3, frozenset({"GF(2)"})),
    _Table2Row("16/12A", None, "--ring-a", 36, 6, frozenset({"Z(4)", "D(2)"})),
    _Table2Row("16/12B", None, "--ring-b", 36, 9, frozenset()),
    _Table2Row("GF(2)*T(2)", "GF(2)*T(2)", None, 54, 9, frozenset({"GF(2)*GF(2)"})),
    _Table2Row("GF(3)*T(2)", "GF(3)*T(2)", None, 72, 12, frozenset({"Z(6)", "GF(2)*GF(3)"})),
)


def _table2_results(ring_a: str | None, ring_b: str | None) -> list[dict]:
    files = {"--ring-a": ring_a, "--ring-b": ring_b}
    results = []
    for row in _TABLE2_ROWS:
        entry: dict = {
            "row": row.name,
            "expected": {
                "unimodular": row.expect_unimodular,
                "nonunimodular": row.expect_nonunimodular,
                "matches": sorted(row.expect_matches),
            },
        }
        if row.source is not None:
            ring = construct(row.source)
        elif files[row.file_flag]:
            ring = load_ring_file(files[row.file_flag])
        else:
            entry["verdict"] = "SKIPPED"
            entry["note"] = f"pass {row.file_flag} FILE to enable"
            results.append(entry)
            continue
        line = compute_line(ring)
        ident = identify_condensate(line)
        computed = {
            "unimodular": len(line.unimodular_points),
            "nonunimodular": len(line.nonunimodular_points),
            "matches": sorted(ident.matches),
        }
        entry["computed"] = computed
        ok = (
            computed["unimodular"] == row.expect_unimodular
            and computed["nonunimodular"] == row.expect_nonunimodular
            and frozenset(ident.matches) == row.expect_matches
        )
        entry["verdict"] = "PASS" if ok else "FAIL"
        results.append(entry)
    return results


def cmd_table2(args) -> int:
    results = _table2_results(args.ring_a, args.ring_b)
    failed = sum(1 for r in results if r["verdict"] == "FAIL")
    passed = sum(1 for r in results if r["verdict"] == "PASS")
    skipped = sum(1 for r in results if r["verdict"] == "SKIPPED")
    if args.json:
        data = {
            "schema": "ringline.table2/1",
            "rows": results,
            "passed": passed,
            "failed": failed,
            "skipped": skipped,
            "all_pass": failed == 0,
        }
        print(json.dumps(data, indent=2, sort_keys=True))
        return 1 if failed else 0
    header = f"{'row':<12} {'unimodular':>10} {'non-unimodular':>14}  {'condensate':<24} verdict"
    print("summary of the built-in catalog lines")
    print(header)
    for entry in results:
        if entry["verdict"] == "SKIPPED":
            print(f"{entry['row']:<12} {'-':>10} {'-':>14}  {'-':<24} SKIPPED ({entry['note']})")
            continue
        computed = entry["computed"]
        matches = ", ".join(computed["matches"]) if computed["matches"] else "no catalog match"
        verdict = entry["verdict"]
        if verdict == "FAIL":
            expected = entry["expected"]
            wanted = ", ".join(expected["matches"]) if expected["matches"] else "no catalog match"
            verdict = (
                f"FAIL (expected {expected['unimodular']}/{expected['nonunimodular']}"
                f" with {wanted})"
            )
        print(
            f"{entry['row']:<12} {computed['unimodular']:>10} {computed['nonunimodular']:>14}"
            f"  {matches:<24} {verdict}"
        )
    print(f"result: {'FAIL' if failed else 'PASS'} ({passed} passed, {failed} failed, {skipped} skipped)")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringline",
        description="Projective lines over small finite rings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="ring-level reports")
    ring_sub = ring.add_subparsers(dest="ring_command", required=True)
    info = ring_sub.add_parser("info", help="order, units, zero divisors, ideals")
    info.add_argument("spec")
    info.add_argument("--json", action="store_true")
    info.set_defaults(handler=cmd_ring_info)
    validate = ring_sub.add_parser("validate", help="check a Cayley-table file")
    validate.add_argument("file")
    validate.add_argument("--json", action="store_true")
    validate.set_defaults(handler=cmd_ring_validate)

    line = sub.add_parser("line", help="projective-line pipeline")
    line_sub = line.add_subparsers(dest="line_command", required=True)
    compute = line_sub.add_parser("compute", help="full line report")
    compute.add_argument("spec")
    compute.add_argument("--json", action="store_true")
    compute.add_argument("--fixtures", metavar="DIR", help="also write the line JSON fixture here")
    compute.add_argument("--timing", action="store_true", help="print elapsed time to stderr")
    compute.set_defaults(handler=cmd_line_compute)
    export = line_sub.add_parser("export", help="vector co-residence graph")
    export.add_argument("spec")
    export.add_argument("--sector", choices=sorted(_SECTOR_FLAGS), required=True)
    export.add_argument("--format", choices=("dot", "json"), required=True)
    export.add_argument("--out", required=True)
    export.set_defaults(handler=cmd_line_export)

    condense_cmd = sub.add_parser("condense", help="condense the non-unimodular sector")
    condense_cmd.add_argument("spec")
    condense_cmd.add_argument("--catalog", help="comma-separated reference specs")
    condense_cmd.add_argument("--json", action="store_true")
    condense_cmd.set_defaults(handler=cmd_condense)

    table2 = sub.add_parser("table2", help="recompute the catalog summary table")
    table2.add_argument("--ring-a", dest="ring_a", metavar="FILE", help="order-16 tables for the 16/12A row")
    table2.add_argument("--ring-b", dest="ring_b", metavar="FILE", help="order-16 tables for the 16/12B row")
    table2.add_argument("--json", action="store_true")
    table2.set_defaults(handler=cmd_table2)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except RinglineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
