"""Command-line interface.

Subcommands:
    table        octonion multiplication table as JSON
    derivations  the 14 basis derivations and structure constants as JSON
    roots        the 12 roots with exact lengths as JSON
    classify     orbit-type report for one Cartan element
    scan         lattice census over a ball of given radius
    check        run the full verification suite

Exit codes: 0 success, 2 invalid input, 3 internal invariant violation
(or a failing verification in `check`).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cayley import MULT_TABLE, Octonion
from .derivations import derivation_basis
from .errors import InternalInvariantError, SumNonzeroError
from .orbits import CONVENTION_DEFAULT, classify, conventions, scan
from .roots import CartanElement, root_system


class _InputError(Exception):
    """Invalid command-line input (exit code 2)."""


def _parse_tau(text: str, project: bool) -> CartanElement:
    parts = text.split(",")
    if len(parts) != 3:
        raise _InputError(f"--tau needs 3 comma-separated rationals, got {text!r}")
    try:
        vals = [Fraction(p.strip()) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise _InputError(f"bad rational in --tau: {exc}") from None
    total = sum(vals)
    if total != 0:
        if not project:
            # surfaced as SUM_NONZERO with exit code 2
            raise SumNonzeroError(
                f"components sum to {total}; pass --project to remove the mean"
            )
        mean = total / 3
        vals = [v - mean for v in vals]
    return CartanElement(vals)


def _octonion_strings(x: Octonion):
    return [str(c) for c in x.coords]


def cmd_table(args) -> int:
    basis_names = [f"e{i}" for i in range(8)]
    display = [
        [("" if s > 0 else "-") + basis_names[k] for k, s in row] for row in MULT_TABLE
    ]
    products = [
        [_octonion_strings(Octonion.basis(i) * Octonion.basis(j)) for j in range(8)]
        for i in range(8)
    ]
    print(json.dumps({"basis": basis_names, "display": display, "products": products}, indent=2))
    return 0


def cmd_derivations(args) -> int:
    b = derivation_basis()
    matrices = [
        [[str(d.matrix.entry(i, j)) for j in range(8)] for i in range(8)] for d in b.basis
    ]
    constants = []
    c = b.structure_constants
    for i in range(b.dim):
        for j in range(b.dim):
            for k in range(b.dim):
                if c[i][j][k]:
                    constants.append({"i": i, "j": j, "k": k, "c": str(c[i][j][k])})
    print(json.dumps({"dimension": b.dim, "basis": matrices, "structure_constants": constants}, indent=2))
    return 0


def cmd_roots(args) -> int:
    roots = root_system()
    payload = [
        {
            "coeffs": list(r.coeffs),
            "killing_sq_length": str(r.killing_sq_length),
            "length_class": r.length_class,
        }
        for r in roots
    ]
    print(json.dumps({"roots": payload}, indent=2))
    return 0


def cmd_classify(args) -> int:
    tau = _parse_tau(args.tau, args.project)
    report = classify(tau, convention=args.convention)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        d = report.to_json_dict()
        print("tau:             " + ", ".join(d["tau"]))
        print(f"stabilizer_dim:  {d['stabilizer_dim']}")
        print(f"orbit_type:      {d['orbit_type']}")
        print(f"orbit_label:     {d['orbit_label']}")
        print(f"vanishing_roots: {d['vanishing_roots']}")
        s = d["structure"]
        print(
            "structure:       dim=%d derived_dim=%d center_dim=%d"
            % (s["dim"], s["derived_dim"], s["center_dim"])
        )
        print(f"convention:      {d['convention']}")
    return 0


def cmd_scan(args) -> int:
    if args.radius < 1:
        raise _InputError("--radius must be at least 1")
    census = scan(args.radius, convention=args.convention)
    if args.format == "json":
        print(json.dumps(census.to_json_dict(), indent=2))
    else:
        for line in census.csv_rows():
            print(line)
    return 0


def cmd_check(args) -> int:
    from .checks import run_all

    return 0 if run_all() else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g2orbits",
        description="Exact octonion derivation algebra and adjoint orbit classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="octonion multiplication table")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("derivations", help="basis derivations and structure constants")
    p.set_defaults(func=cmd_derivations)

    p = sub.add_parser("roots", help="the 12 roots with exact Killing lengths")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("classify", help="orbit type of one Cartan element")
    p.add_argument("--tau", required=True, help="three rationals, e.g. 1,0,-1 or 1/2,1/2,-1")
    p.add_argument("--project", action="store_true", help="subtract the mean if the sum is nonzero")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--convention", choices=conventions(), default=CONVENTION_DEFAULT,
                   help="label pairing for the two 4-dimensional stabilizer classes")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("scan", help="classify all lattice points with max |tau_i| <= radius")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--convention", choices=conventions(), default=CONVENTION_DEFAULT)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("check", help="run the full verification suite")
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SumNonzeroError as exc:
        print(f"SUM_NONZERO: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        print(f"INTERNAL: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
