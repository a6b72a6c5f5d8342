"""Command-line front end.

Subcommands: validate | spectrum | report | histogram | cospectral |
dash | trees | bounds | graph. Outputs are machine readable and byte
stable: JSON with fixed field order, counts as decimal strings, CSV
with a header row. Exit codes: 0 ok, 1 domain failure, 2 I/O, 3 dashing
stuck, 4 dashing inconsistent.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from qcube import codes, counting, dashing, graphs, spectra, thermo
from qcube.errors import QCubeError

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_IO = 2
EXIT_STUCK = 3
EXIT_INCONSISTENT = 4


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _IOFailure(f"cannot read {path}: {exc.strerror or exc}") from exc


class _IOFailure(Exception):
    pass


def _emit(doc) -> None:
    print(json.dumps(doc, indent=2))


def _fraction_doc(q: Fraction) -> dict:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def _spectrum_doc(code: codes.GeneratorMatrix, table: spectra.SpectrumTable) -> dict:
    return {
        "n": code.n,
        "k": code.k,
        "eigenvalues": [
            {"lambda": lam, "multiplicity": table[lam]} for lam in sorted(table)
        ],
    }


def _spectrum_csv(table: spectra.SpectrumTable) -> str:
    lines = ["lambda,multiplicity"]
    lines += [f"{lam},{table[lam]}" for lam in sorted(table)]
    return "\n".join(lines) + "\n"


def _load_valid_code(path: str) -> codes.GeneratorMatrix:
    code = codes.parse_code(_read_text(path))
    report = codes.validate_doubly_even(code)
    if not report.ok:
        raise QCubeError(
            f"{path}: code is not a valid doubly even code "
            f"({len(report.weight_violations)} weight violations, "
            f"{len(report.dependencies)} row dependencies)"
        )
    return code


def _bounds_doc(b: counting.BaobabBounds) -> dict:
    return {
        "trees": str(b.trees),
        "naive": str(b.naive),
        "lower": _fraction_doc(b.lower),
        "upper": _fraction_doc(b.upper),
        "skipped_wedges": [list(s) for s in b.zero_wedge_terms_skipped],
    }


# --- subcommands ---

def cmd_validate(args) -> int:
    code = codes.parse_code(_read_text(args.codefile))
    report = codes.validate_doubly_even(code)
    limit = codes.kmax(code.length)
    ok = report.ok and code.k <= limit
    doc = {
        "ok": ok,
        "n": code.n,
        "k": code.k,
        "length": code.length,
        "k_max": limit,
        "weight_violations": [codes.word_to_bits(w, code.length) for w in report.weight_violations],
        "row_dependencies": [list(d) for d in report.dependencies],
    }
    if report.ok and code.k > limit:
        doc["error"] = f"k={code.k} exceeds k_max={limit}"
    _emit(doc)
    return EXIT_OK if ok else EXIT_DOMAIN


def cmd_spectrum(args) -> int:
    code = _load_valid_code(args.codefile)
    table = spectra.spectrum_closed_form(code)
    doc = _spectrum_doc(code, table)
    agree = True
    if args.oracle:
        graph = graphs.build_quotient(code)
        numeric = spectra.spectrum_numeric(graph, tol=args.tol)
        mp = spectra.multiplicity_table(code)
        anti_diagonal: dict[int, int] = {}
        for (m, p), count in mp.items():
            lam = 2 * (m + p)
            anti_diagonal[lam] = anti_diagonal.get(lam, 0) + count
        rng = random.Random(args.seed)
        permuted_ok = True
        for _ in range(5):
            perm = list(range(code.length))
            rng.shuffle(perm)
            shuffled = codes.GeneratorMatrix(
                n=code.n,
                k=code.k,
                rows=tuple(codes.apply_column_permutation(r, perm, code.length) for r in code.rows),
            )
            if spectra.spectrum_closed_form(shuffled) != table:
                permuted_ok = False
        agree = numeric == table == anti_diagonal and permuted_ok
        doc["oracle"] = {
            "numeric": [
                {"lambda": lam, "multiplicity": numeric[lam]} for lam in sorted(numeric)
            ],
            "agree": agree,
        }
    if args.format == "csv":
        sys.stdout.write(_spectrum_csv(table))
    else:
        _emit(doc)
    return EXIT_OK if agree else EXIT_DOMAIN


def cmd_trees(args) -> int:
    code = _load_valid_code(args.codefile)
    table = spectra.spectrum_closed_form(code)
    count = counting.tree_count_from_spectrum(table)
    doc = {"n": code.n, "k": code.k, "trees": str(count)}
    if args.oracle:
        graph = graphs.build_quotient(code)
        oracle = counting.tree_count_determinant(graph)
        doc["determinant"] = str(oracle)
        doc["agree"] = oracle == count
        if not doc["agree"]:
            _emit(doc)
            return EXIT_DOMAIN
    _emit(doc)
    return EXIT_OK


def cmd_bounds(args) -> int:
    code = _load_valid_code(args.codefile)
    table = spectra.spectrum_closed_form(code)
    bounds = counting.baobab_bounds(code, table)
    _emit(_bounds_doc(bounds))
    return EXIT_OK


def cmd_report(args) -> int:
    code = _load_valid_code(args.codefile)
    table = spectra.spectrum_closed_form(code)
    bounds = counting.baobab_bounds(code, table)
    entropy = thermo.entropy_bounds(bounds, k_b=args.kb)
    heat = thermo.latent_heat(entropy.s_approx, args.temperature)
    doc = {
        "n": code.n,
        "k": code.k,
        "length": code.length,
        "k_max": codes.kmax(code.length),
        "spectrum": _spectrum_doc(code, table),
        "lambda_mode": spectra.spectral_mode(table),
        "bounds": _bounds_doc(bounds),
        "entropy": {
            "k_b": entropy.k_b,
            "s_lower": entropy.s_lower,
            "s_upper": entropy.s_upper,
            "s_approx": entropy.s_approx,
            "delta_q_min_at_T": {"T": args.temperature, "q": heat},
        },
    }
    _emit(doc)
    return EXIT_OK


def cmd_histogram(args) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    print("file,lambda_mode")
    failures = 0
    for path in args.codefiles:
        try:
            code = _load_valid_code(path)
            table = spectra.spectrum_closed_form(code)
        except (_IOFailure, QCubeError) as exc:
            print(f"{path},ERROR: {exc}", file=sys.stderr)
            failures += 1
            continue
        target = out_dir / (Path(path).stem + "_spectrum.csv")
        target.write_text(_spectrum_csv(table), encoding="utf-8")
        print(f"{path},{spectra.spectral_mode(table)}")
    return EXIT_DOMAIN if failures else EXIT_OK


def cmd_cospectral(args) -> int:
    loaded = [_load_valid_code(path) for path in args.codefiles]
    partition = spectra.meta_equivalence_scan(loaded)
    doc = {
        "files": list(args.codefiles),
        "groups": [
            {
                "spectrum": [{"lambda": lam, "multiplicity": mult} for lam, mult in group.spectrum],
                "classes": [list(cls) for cls in group.classes],
                "meta_witness": group.is_meta_witness,
            }
            for group in partition.groups
        ],
    }
    _emit(doc)
    return EXIT_OK


def cmd_graph(args) -> int:
    code = _load_valid_code(args.codefile)
    graph = graphs.build_quotient(code)
    edges = graph.edges()
    header = {"n": graph.n, "k": graph.k, "vertices": graph.vertex_count, "edges": len(edges)}
    print(json.dumps(header))
    for u, v, c in edges:
        print(f"{u} {v} {c}")
    return EXIT_OK


def cmd_dash(args) -> int:
    code = _load_valid_code(args.codefile)
    graph = graphs.build_quotient(code)
    try:
        partial = dashing.parse_dashing(_read_text(args.dashfile))
        partial.check_domain(graph)
    except (ValueError, KeyError) as exc:
        raise QCubeError(f"{args.dashfile}: {exc}") from exc
    result = dashing.complete_dashing(graph, partial)
    if result.status == "complete":
        for line in result.assignment.to_lines():
            print(line)
        return EXIT_OK
    if result.status == "stuck":
        _emit({
            "status": "stuck",
            "unknown_edges": [list(e) for e in result.unknown_edges],
        })
        return EXIT_STUCK
    _emit({
        "status": "inconsistent",
        "quadrilateral": [list(e) for e in result.witness.key],
    })
    return EXIT_INCONSISTENT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcube",
        description="Spectra, tree counts, thermodynamics and dashings of "
        "hypercubes quotiented by doubly even codes.",
    )
    parser.add_argument("--format", choices=("json", "csv", "text"), default="json",
                        help="output format where supported (default json)")
    parser.add_argument("--tol", type=float, default=1e-8,
                        help="numeric even-integer tolerance (default 1e-8)")
    parser.add_argument("--kb", type=float, default=1.0,
                        help="entropy scale constant k_b (default 1)")
    parser.add_argument("-T", "--temperature", type=float, default=1.0,
                        help="temperature for latent heat (default 1)")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized oracle spot checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a code file for doubly evenness and k <= k_max")
    p.add_argument("codefile")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("spectrum", help="closed-form Laplace spectrum of the quotient graph")
    p.add_argument("codefile")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the numeric eigensolver, the (m,p) "
                        "table and seeded random column permutations")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("trees", help="exact spanning-tree count")
    p.add_argument("codefile")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the Kirchhoff determinant")
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("bounds", help="baobab multiplicity bounds")
    p.add_argument("codefile")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("report", help="spectrum, counts, bounds, entropy and heat in one document")
    p.add_argument("codefile")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("histogram", help="write a lambda,multiplicity CSV per code file")
    p.add_argument("codefiles", nargs="+")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_histogram)

    p = sub.add_parser("cospectral", help="group codes by spectrum and permutation class")
    p.add_argument("codefiles", nargs="+")
    p.set_defaults(func=cmd_cospectral)

    p = sub.add_parser("graph", help="emit the quotient graph as a JSON header plus edge list")
    p.add_argument("codefile")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("dash", help="complete a partial edge dashing via NDXOR propagation")
    p.add_argument("codefile")
    p.add_argument("dashfile")
    p.set_defaults(func=cmd_dash)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _IOFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except QCubeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
