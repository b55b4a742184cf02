"""Command-line front end: analyze bases, build them, export matrices,
cross-check the computation routes, and scan small cases exhaustively."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import gf2, graphs, pst, spectral

DEFAULT_CAP = 8
HARD_CAP = 12

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_PREMISE = 2
EXIT_VERIFY = 3


class CommandError(Exception):
    """Input or usage problem reported to the user; exits with code 1."""


def _load_basis(path: str) -> gf2.Basis:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc}") from exc
    try:
        return gf2.basis_from_json(text)
    except (ValueError, json.JSONDecodeError) as exc:
        raise CommandError(f"invalid basis file {path}: {exc}") from exc


def _parse_time(text: str) -> spectral.Time:
    if text.startswith("tau:"):
        try:
            return spectral.tau(int(text[4:]))
        except ValueError as exc:
            raise CommandError(f"time exponent must be an integer, got {text!r}") from exc
    try:
        return float(text)
    except ValueError as exc:
        raise CommandError(f"time must be 'tau:K' or a decimal, got {text!r}") from exc


def _numeric_cap(allow_large: bool) -> int:
    return HARD_CAP if allow_large else DEFAULT_CAP


def _require_matrix_size(n: int, allow_large: bool) -> None:
    if n > HARD_CAP:
        raise CommandError(f"n={n} exceeds the hard cap {HARD_CAP} for matrix operations")
    if n > _numeric_cap(allow_large):
        raise CommandError(
            f"n={n} exceeds the default cap {DEFAULT_CAP}; pass --allow-large for n up to {HARD_CAP}"
        )


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_analyze(args: argparse.Namespace) -> int:
    basis = _load_basis(args.omega)
    time_override = _parse_time(args.time) if args.time is not None else None
    report = pst.analyze_basis(
        basis,
        tol=args.tol,
        numeric_cap=_numeric_cap(args.allow_large),
        time_override=time_override,
    )
    _emit(report.to_json(), args.out)
    if not report.all_premises_hold:
        return EXIT_PREMISE
    if not report.all_claims_verified:
        return EXIT_VERIFY
    return EXIT_OK


def cmd_construct_basis(args: argparse.Namespace) -> int:
    try:
        basis = gf2.construct_basis(args.n, args.k)
    except ValueError as exc:
        raise CommandError(
            f"{exc} (construct-basis requires n >= 2 and an odd k < n)"
        ) from exc
    Path(args.out).write_text(gf2.basis_to_json(basis), encoding="utf-8")
    weights = sorted({gf2.weight(row) for row in basis.rows})
    print(
        f"wrote {args.out}: n={basis.n} rows={basis.m} "
        f"weights={weights} rank={gf2.rank_gf2(basis)}"
    )
    return EXIT_OK


def cmd_transition(args: argparse.Namespace) -> int:
    basis = _load_basis(args.omega)
    _require_matrix_size(basis.n, args.allow_large)
    t = _parse_time(args.time)
    h = spectral.product_transition(basis, t)
    _emit(spectral.complex_matrix_to_json(h), args.out)
    print(f"unitarity residual: {spectral.unitarity_residual(h):.3e}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    basis = _load_basis(args.omega)
    _require_matrix_size(basis.n, args.allow_large)
    k, _ = gf2.min_weight_subset(basis)
    adjacency = graphs.neps_adjacency(basis)
    decomp = spectral.eigendecompose(adjacency)
    checks: list[tuple[str, float, float]] = []

    for label, t in (("tau_k", spectral.tau(k)), ("t=0.7", 0.7), ("t=1.3", 1.3)):
        h_prod = spectral.product_transition(basis, t)
        h_spec = spectral.transition_matrix(decomp, t)
        h_series = spectral.expm_oracle(adjacency, t)
        checks.append((f"product vs spectral @ {label}", spectral.max_entry_diff(h_prod, h_spec), 1e-9))
        checks.append((f"product vs series @ {label}", spectral.max_entry_diff(h_prod, h_series), 1e-9))
        checks.append((f"spectral vs series @ {label}", spectral.max_entry_diff(h_spec, h_series), 1e-9))
        checks.append((f"unitarity @ {label}", spectral.unitarity_residual(h_prod), 1e-10))
        checks.append((f"symmetry @ {label}", spectral.symmetry_residual(h_prod), 1e-10))

    for row in basis.rows:
        s = gf2.weight(row)
        t_row = spectral.tau(s)
        h_row = spectral.factor_transition(row, t_row)
        expected = -(pst.FLIP if row.bit(basis.n - 1) else np.eye(3))
        checks.append(
            (
                f"row {row} center block",
                spectral.max_entry_diff(pst.center_block(h_row), expected.astype(complex)),
                1e-10,
            )
        )
        h_rev = spectral.factor_transition(row, t_row.negated())
        checks.append((f"row {row} time reversal", spectral.max_entry_diff(h_row, h_rev), 1e-10))

    weights = {gf2.weight(row) for row in basis.rows}
    if len(weights) == 1:
        for j in range(1, basis.n + 1):
            swapped = gf2.swap_coordinates(basis, j)
            numeric = pst.center_block(spectral.product_transition(swapped, spectral.tau(k)))
            predicted = pst.predicted_center_block(basis, j).astype(complex)
            checks.append(
                (f"predicted center block j={j}", spectral.max_entry_diff(numeric, predicted), 1e-9)
            )
    else:
        print("predicted center block: skipped (row weights not uniform)")

    if gf2.parity_class(basis) is not gf2.ParityClass.MIXED:
        _, residual = pst.min_weight_reduction(basis)
        checks.append(("minimum-weight reduction", residual, 1e-9))
    else:
        print("minimum-weight reduction: skipped (mixed parity)")

    failed = 0
    for name, residual, tol in checks:
        ok = residual <= tol
        failed += 0 if ok else 1
        print(f"{name}: residual {residual:.3e} (tol {tol:g}) {'PASS' if ok else 'FAIL'}")
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_PREMISE


def cmd_components(args: argparse.Namespace) -> int:
    basis = _load_basis(args.omega)
    _require_matrix_size(basis.n, args.allow_large)
    count, _ = graphs.connected_components(graphs.neps_adjacency(basis))
    rank = gf2.rank_gf2(basis)
    payload = {
        "components": count,
        "connected": count == 1,
        "n": basis.n,
        "order": 3**basis.n,
        "rank": rank,
        "rank_criterion_agrees": (count == 1) == (rank == basis.n),
    }
    print(json.dumps(payload, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    if not 1 <= args.n <= 3:
        raise CommandError(f"scan supports 1 <= n <= 3, got {args.n}")
    n = args.n
    vectors = sorted(
        (gf2.BitVector(n, word) for word in range(1, 2**n)), key=gf2.BitVector.to_string
    )
    lines = [
        "omega,m,k,parity,rank,connected,premises_hold,pst_pair_count,pst_pairs,missed_by_condition"
    ]
    for mask in range(1, 2 ** len(vectors)):
        rows = tuple(v for i, v in enumerate(vectors) if mask >> i & 1)
        if args.max_m is not None and len(rows) > args.max_m:
            continue
        basis = gf2.Basis(n, rows)
        report = pst.analyze_basis(basis, tol=args.tol, numeric_cap=3)
        h = spectral.product_transition(basis, spectral.tau(report.k))
        pairs = []
        for u in range(3**n):
            for v in range(u + 1, 3**n):
                if abs(abs(h[u, v]) - 1.0) <= args.tol:
                    pairs.append(f"{u}-{v}")
        count, _ = graphs.connected_components(graphs.neps_adjacency(basis))
        connected = count == 1
        missed = bool(pairs) and connected and not report.all_premises_hold
        lines.append(
            ",".join(
                [
                    "|".join(basis.row_strings()),
                    str(basis.m),
                    str(report.k),
                    report.parity.value,
                    str(report.rank),
                    str(connected).lower(),
                    str(report.all_premises_hold).lower(),
                    str(len(pairs)),
                    "|".join(pairs),
                    str(missed).lower(),
                ]
            )
        )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="neps-pst",
        description="Perfect state transfer analysis for NEPS products of the 3-vertex path.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="premise and claim report for a basis file")
    p.add_argument("--omega", required=True, help="basis JSON file")
    p.add_argument("--tol", type=float, default=pst.DEFAULT_TOL, help="verification tolerance")
    p.add_argument("--time", help="verification time, 'tau:K' or a decimal (default tau of the minimum weight)")
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.add_argument("--allow-large", action="store_true", help="raise the numeric cap from n=8 to n=12")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct-basis", help="build a full-rank uniform-weight basis")
    p.add_argument("--n", type=int, required=True, help="number of coordinates (>= 2)")
    p.add_argument("--k", type=int, required=True, help="row weight (odd, < n)")
    p.add_argument("--out", required=True, help="output basis JSON file")
    p.set_defaults(func=cmd_construct_basis)

    p = sub.add_parser("transition", help="write the transition matrix at a given time")
    p.add_argument("--omega", required=True, help="basis JSON file")
    p.add_argument("--time", required=True, help="'tau:K' or a decimal")
    p.add_argument("--out", required=True, help="output complex-matrix JSON file")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_transition)

    p = sub.add_parser("verify", help="cross-check all computation routes on one basis")
    p.add_argument("--omega", required=True, help="basis JSON file")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("components", help="connected components versus the rank criterion")
    p.add_argument("--omega", required=True, help="basis JSON file")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("scan", help="exhaustively classify every basis for small n")
    p.add_argument("--n", type=int, required=True, help="number of coordinates (1 to 3)")
    p.add_argument("--max-m", type=int, help="only scan bases with at most this many rows")
    p.add_argument("--tol", type=float, default=pst.DEFAULT_TOL)
    p.add_argument("--out", help="write the CSV table here instead of stdout")
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
