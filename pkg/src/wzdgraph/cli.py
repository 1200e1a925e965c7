"""Command-line surface.

Subcommands: ``spectrum``, ``graph``, ``verify``, ``table``, ``join``.
Exit codes: 0 for success or an informative degenerate result, 1 when a
verification check fails, 2 for usage or input errors.  Output is
deterministic: identical invocations produce byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from . import graphcore, oracle, spectra
from .errors import ContractViolation, DomainError, OrderCapError
from .graphcore import Kind

DEFAULT_INTEGRAL_TOL = oracle.INTEGRAL_TOL


def _positive_n(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 2:
        raise argparse.ArgumentTypeError(f"n must be >= 2, got {n}")
    return n


def _range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo < 2:
        raise argparse.ArgumentTypeError(f"range lower bound must be >= 2, got {lo}")
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {lo}..{hi}")
    return lo, hi


def _positive_float(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if x <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return x


def _positive_int(text: str) -> int:
    try:
        x = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if x < 1:
        raise argparse.ArgumentTypeError("value must be >= 1")
    return x


def _default_order_cap() -> int:
    env = os.environ.get("WZD_MAX_ORDER")
    if env is not None:
        try:
            cap = int(env)
            if cap >= 1:
                return cap
        except ValueError:
            pass
        print(f"ignoring bad WZD_MAX_ORDER={env!r}", file=sys.stderr)
    return oracle.DEFAULT_ORDER_CAP


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wzd",
        description="Weakly zero-divisor graphs of Z_n and their Laplacian spectra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="closed-form Laplacian spectrum of one n")
    p.add_argument("n", type=_positive_n)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("graph", help="build and serialize the graph for one n")
    p.add_argument("n", type=_positive_n)
    p.add_argument("--format", choices=("text", "json", "dot", "csv"), default="text")
    p.add_argument(
        "--classes",
        action="store_true",
        help="also emit the divisor-class decomposition (text/json formats)",
    )

    p = sub.add_parser("verify", help="run all checks over a range of n")
    p.add_argument("range", type=_range, metavar="lo..hi")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--tol", type=_positive_float, default=DEFAULT_INTEGRAL_TOL,
                   help="integrality tolerance (default %(default)g)")
    p.add_argument("--jobs", type=_positive_int, default=1,
                   help="parallel workers over independent n")
    p.add_argument("--max-order", type=_positive_int, default=None,
                   help="skip the exact charpoly check above this order "
                        "(default: WZD_MAX_ORDER or 256)")

    p = sub.add_parser("table", help="summary rows over a range of n")
    p.add_argument("range", type=_range, metavar="lo..hi")
    p.add_argument("--format", choices=("text", "csv", "json"), default="csv")

    p = sub.add_parser("join", help="spectrum of a generalized join from a JSON file")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--check", action="store_true",
                   help="assemble the explicit join and compare numerically")
    return parser


def _spectrum_text(s: spectra.SpectrumMultiset) -> str:
    if s.order == 0:
        return "no zero-divisors; spectrum empty\n"
    pairs = s.items_sorted()
    cells = [(str(e), str(m)) for e, m in pairs]
    widths = [max(len(a), len(b)) for a, b in cells]
    row_e = " ".join(a.rjust(w) for (a, _), w in zip(cells, widths))
    row_m = " ".join(b.rjust(w) for (_, b), w in zip(cells, widths))
    return f"eigenvalue    {row_e}\nmultiplicity  {row_m}\n"


def _class_symbol(c: graphcore.DivisorClass) -> str:
    bar = "̄"
    return (f"K{bar}_{c.size}" if c.kind is Kind.EMPTY else f"K_{c.size}")


def cmd_spectrum(n: int, fmt: str) -> int:
    s = spectra.wzd_spectrum_closed_form(n)
    if fmt == "json":
        print(json.dumps(s.to_json_dict()))
    else:
        sys.stdout.write(_spectrum_text(s))
    return 0


def cmd_graph(n: int, fmt: str, classes: bool) -> int:
    g = graphcore.build_structural_wzd(n)
    part = graphcore.divisor_classes(n)
    if fmt == "text":
        note = " (no zero-divisors)" if g.vertex_count == 0 else ""
        print(f"WΓ(Z_{n}): {g.vertex_count} vertices, {g.edge_count} edges{note}")
        if classes and not part.degenerate:
            print("classes:")
            for c in part.classes:
                members = " ".join(str(x) for x in c.members)
                print(f"  {c.divisor}: {_class_symbol(c)}  {{{members}}}")
        return 0
    if fmt == "json":
        payload = json.loads(graphcore.export_graph(g, "json"))
        if classes:
            payload["classes"] = [
                {"divisor": c.divisor, "kind": c.kind.value, "members": list(c.members)}
                for c in part.classes
            ]
        print(json.dumps(payload))
        return 0
    if classes:
        print(f"--classes is not supported with --format {fmt}", file=sys.stderr)
        return 2
    sys.stdout.write(graphcore.export_graph(g, fmt))
    return 0


def _verify_worker(args: tuple[int, float, int]) -> oracle.VerificationReport:
    n, tol, cap = args
    return oracle.verify_spectrum(n, integral_tol=tol, order_cap=cap)


def _verify_line(rep: oracle.VerificationReport) -> str:
    if rep.status == oracle.STATUS_DEGENERATE:
        return f"n={rep.n} {rep.status} (prime; no zero-divisors)"
    spec = ",".join(f"{e}:{m}" for e, m in rep.spectrum.items_sorted())
    parts = [f"n={rep.n}", rep.status, f"spectrum={spec}"]
    for name in ("construction_equal", "trace_edges", "charpoly_match",
                 "numeric_match", "integral"):
        short = name.split("_")[0]
        if name == "charpoly_match" and rep.charpoly_skipped:
            parts.append(f"{short}=skipped")
        else:
            parts.append(f"{short}={'ok' if rep.checks[name] else 'FAIL'}")
    return " ".join(parts)


def cmd_verify(lo: int, hi: int, fmt: str, tol: float, jobs: int, cap: int) -> int:
    ns = list(range(lo, hi + 1))
    work = [(n, tol, cap) for n in ns]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_worker, work, chunksize=4))
    else:
        reports = [_verify_worker(w) for w in work]
    fails = 0
    passes = 0
    degenerate = 0
    for rep in reports:
        if fmt == "json":
            print(json.dumps(rep.to_json_dict()))
        else:
            print(_verify_line(rep))
        if rep.status == oracle.STATUS_FAIL:
            fails += 1
        elif rep.status == oracle.STATUS_DEGENERATE:
            degenerate += 1
        else:
            passes += 1
    if fmt == "text":
        print(
            f"checked {len(reports)} values in {lo}..{hi}: "
            f"{passes} pass, {degenerate} degenerate, {fails} fail"
        )
    return 1 if fails else 0


def _table_row(n: int) -> dict:
    s = spectra.wzd_spectrum_closed_form(n)
    eigs = [e for e, _ in s.items_sorted()]
    mults = [m for _, m in s.items_sorted()]
    return {
        "n": n,
        "vertices": s.order,
        "edges": s.trace() // 2,
        "eigenvalues": eigs,
        "multiplicities": mults,
        "algebraic_connectivity": spectra.algebraic_connectivity(s) if s.order >= 2 else None,
        "spectral_radius": spectra.spectral_radius(s) if s.order >= 1 else None,
        "integral": all(isinstance(e, int) for e in eigs),
    }


def cmd_table(lo: int, hi: int, fmt: str) -> int:
    for n in range(lo, hi + 1):
        row = _table_row(n)
        if fmt == "json":
            print(json.dumps(row))
        else:
            cells = [
                str(row["n"]),
                str(row["vertices"]),
                str(row["edges"]),
                "|".join(str(e) for e in row["eigenvalues"]),
                "|".join(str(m) for m in row["multiplicities"]),
                "" if row["algebraic_connectivity"] is None else str(row["algebraic_connectivity"]),
                "" if row["spectral_radius"] is None else str(row["spectral_radius"]),
                "true" if row["integral"] else "false",
            ]
            print(",".join(cells))
    return 0


def _component_from_json(entry: dict, index: int) -> spectra.SpectrumMultiset:
    if "spectrum" in entry:
        pairs = [
            (item["eigenvalue"], item["multiplicity"])
            for item in entry["spectrum"]["entries"]
        ]
        if all(float(e).is_integer() for e, _ in pairs):
            return spectra.SpectrumMultiset.exact((int(e), m) for e, m in pairs)
        return spectra.SpectrumMultiset.floating(pairs)
    kind = entry.get("kind")
    if kind not in ("complete", "empty"):
        if "edges" in entry and "order" in entry:
            g = graphcore.Graph(
                labels=tuple(range(entry["order"])),
                edges=frozenset(
                    (min(u, v), max(u, v)) for u, v in entry["edges"]
                ),
            )
            eigs = oracle.symmetric_eigenvalues(oracle.laplacian_matrix(g))
            return spectra.SpectrumMultiset.floating((e, 1) for e in eigs)
        raise DomainError(
            f"component {index} needs a kind, a spectrum, or edges with an order"
        )
    return spectra.component_spectrum(entry["order"], Kind(kind))


def _component_edges(entry: dict, order: int, index: int) -> list[tuple[int, int]]:
    if "edges" in entry:
        return [(min(u, v), max(u, v)) for u, v in entry["edges"]]
    kind = entry.get("kind")
    if kind == "complete":
        return [(i, j) for i in range(order) for j in range(i + 1, order)]
    if kind == "empty":
        return []
    raise DomainError(f"component {index} has no edge list; cannot assemble the join")


def cmd_join(path: str, fmt: str, check: bool) -> int:
    try:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
        host_spec = payload["host"]
        labels = tuple(host_spec["labels"])
        weights = tuple(int(w) for w in host_spec["weights"])
        index = {u: i for i, u in enumerate(labels)}
        edges = set()
        for u, v in host_spec["edges"]:
            i, j = index[u], index[v]
            edges.add((i, j) if i < j else (j, i))
        host = spectra.WeightedHostGraph(labels=labels, weights=weights,
                                         edges=frozenset(edges))
        comp_specs = payload["components"]
        components = [
            _component_from_json(entry, i) for i, entry in enumerate(comp_specs)
        ]
        result = spectra.join_spectrum(host, components)
    except (OSError, json.JSONDecodeError, KeyError, TypeError,
            DomainError, ContractViolation) as exc:
        print(f"bad join input: {exc}", file=sys.stderr)
        return 2
    result.n = payload.get("n")

    check_ok = True
    if check:
        try:
            parts = [
                (weights[i], _component_edges(entry, weights[i], i))
                for i, entry in enumerate(comp_specs)
            ]
        except DomainError as exc:
            print(f"bad join input: {exc}", file=sys.stderr)
            return 2
        assembled = graphcore.assemble_join(set(edges), parts)
        numeric = oracle.symmetric_eigenvalues(oracle.laplacian_matrix(assembled))
        expected = result.expand()
        tol = 1e-8 * max(1, result.order)
        check_ok = len(numeric) == len(expected) and all(
            abs(a - b) <= tol for a, b in zip(numeric, expected)
        )

    if fmt == "json":
        print(json.dumps(result.to_json_dict()))
    else:
        sys.stdout.write(_spectrum_text(result))
        if check:
            print(f"check: {'ok' if check_ok else 'MISMATCH'} ({result.order} vertices)")
    if not check_ok:
        print("join check failed: numeric eigenvalues disagree", file=sys.stderr)
        return 1
    return 0


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "spectrum":
            return cmd_spectrum(args.n, args.format)
        if args.command == "graph":
            return cmd_graph(args.n, args.format, args.classes)
        if args.command == "verify":
            cap = args.max_order if args.max_order is not None else _default_order_cap()
            lo, hi = args.range
            return cmd_verify(lo, hi, args.format, args.tol, args.jobs, cap)
        if args.command == "table":
            lo, hi = args.range
            return cmd_table(lo, hi, args.format)
        if args.command == "join":
            return cmd_join(args.file, args.format, args.check)
    except (DomainError, ContractViolation, OrderCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
