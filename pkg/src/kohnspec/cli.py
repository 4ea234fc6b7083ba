"""Command-line front end.

Every subcommand emits either a human table (default), RFC-4180 CSV, or JSON
with a fixed key order, so reproduction scripts can be one-liners.  Exit
codes: 0 success, 1 user error (bad spec string or family constraint),
2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import group_catalog as gc
from . import sobolev as sb
from .errors import (
    ClosureMismatch,
    ConstraintError,
    KohnspecError,
    NonFreeAction,
    NonIntegralDimension,
    ParseError,
    SizeLimit,
    TraceLookupError,
    TruncationError,
    UnsupportedFamily,
)
from .genfun import dim_h0_polynomial, exponent, pg_polynomial
from .group_catalog import QuotientGroup, angle_str
from .invariant_dims import dim_invariant
from .oracle import oracle_check
from .spectrum import (
    compare_spectra,
    counting_function,
    multiplicity,
    weyl_report,
    xi_bound,
)

_USER_ERRORS = (ParseError, ConstraintError, NonFreeAction, UnsupportedFamily, SizeLimit, ValueError)
_INTERNAL_ERRORS = (NonIntegralDimension, TruncationError, ClosureMismatch, TraceLookupError)


def parse_group_spec(spec: str) -> QuotientGroup:
    """Parse a group spec string; the resulting group's name is the canonical
    form of the spec."""
    spec = spec.strip()
    if "xC:" in spec:
        base_spec, _, l_text = spec.rpartition("xC:")
        base = parse_group_spec(base_spec)
        return gc.make_product_with_center(base, _int(l_text, "l"))
    if spec == "Q":
        return gc.make_binary_dihedral(2)
    if spec == "2T":
        return gc.make_binary_tetrahedral()
    if spec == "2O":
        return gc.make_binary_octahedral()
    if spec == "2I":
        return gc.make_binary_icosahedral()
    head, _, rest = spec.partition(":")
    if head == "cyclic":
        return gc.make_cyclic(_int(rest, "m"))
    if head == "lens":
        m_text, _, qs_text = rest.partition(":")
        if not qs_text:
            raise ParseError(f"lens spec needs rotations: lens:m:q1,...,qn (got {spec!r})")
        qs = [_int(tok, "rotation") for tok in qs_text.split(",")]
        return gc.make_lens(_int(m_text, "m"), qs)
    if head == "bindih":
        order2m = _int(rest, "2m")
        if order2m % 2 != 0 or order2m < 4:
            raise ConstraintError(f"bindih parameter is 2m with m >= 2; got {order2m}")
        return gc.make_binary_dihedral(order2m // 2)
    if head == "qsemi":
        return gc.make_q_semidirect(_int(rest, "l"))
    if head == "cycsemi":
        m_text, _, l_text = rest.partition(":")
        if not l_text:
            raise ParseError(f"cycsemi spec is cycsemi:m:l (got {spec!r})")
        return gc.make_cyclic_semidirect(_int(m_text, "m"), _int(l_text, "l"))
    raise ParseError(f"unrecognized group spec {spec!r}")


def _int(text: str, label: str) -> int:
    try:
        return int(text)
    except (TypeError, ValueError):
        raise ParseError(f"expected an integer for {label}, got {text!r}") from None


# ---------------------------------------------------------------------------
# output helpers


def _emit_json(doc: dict) -> str:
    return json.dumps(doc, separators=(",", ":"), allow_nan=False)


def _emit_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _emit_table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(x) for x in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def _tabular(args, header: list[str], rows: list[list], doc: dict) -> str:
    if args.format == "json":
        return _emit_json(doc)
    if args.format == "csv":
        return _emit_csv(header, rows)
    return _emit_table(header, rows)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_catalog(args) -> str:
    if args.action == "list":
        header = ["family", "constraints", "order"]
        rows = [list(row) for row in gc.CATALOG_FAMILIES]
        doc = {"families": [dict(zip(header, row)) for row in rows]}
        return _tabular(args, header, rows, doc)
    group = parse_group_spec(args.spec)
    doc = {
        "name": group.name,
        "n": group.n,
        "order": group.order,
        "classes": [
            {"angles": [angle_str(a) for a in c.angles], "mult": c.mult}
            for c in group.classes
        ],
    }
    return _emit_json(doc)


def _cmd_dims(args) -> str:
    group = parse_group_spec(args.group)
    if args.pq_max is None:
        if args.p is None or args.q is None:
            raise ParseError("dims needs either --p and --q, or --pq-max")
        d = dim_invariant(group, args.p, args.q)
        doc = {"group": group.name, "p": args.p, "q": args.q, "dim": d}
        return _tabular(args, ["p", "q", "dim"], [[args.p, args.q, d]], doc)
    rows = []
    for s in range(args.pq_max + 1):
        for p in range(s + 1):
            q = s - p
            rows.append([p, q, dim_invariant(group, p, q)])
    doc = {"group": group.name, "pq_max": args.pq_max, "entries": [list(r) for r in rows]}
    return _tabular(args, ["p", "q", "dim"], rows, doc)


def _cmd_spectrum(args) -> str:
    group = parse_group_spec(args.group)
    table = counting_function(group, args.lambda_max)
    rows = [[e.eigenvalue, e.mult, " ".join(f"({p},{q})" for p, q in e.contributors)]
            for e in table.entries]
    doc = {
        "group": group.name,
        "lambda_max": table.lambda_max,
        "entries": [
            {"lambda": e.eigenvalue, "mult": e.mult, "contributors": [[p, q] for p, q in e.contributors]}
            for e in table.entries
        ],
    }
    return _tabular(args, ["lambda", "mult", "contributors"], rows, doc)


def _cmd_multiplicity(args) -> str:
    group = parse_group_spec(args.group)
    mult, contributors = multiplicity(group, getattr(args, "lambda"))
    doc = {
        "group": group.name,
        "lambda": getattr(args, "lambda"),
        "mult": mult,
        "contributors": [[p, q] for p, q in contributors],
    }
    rows = [[getattr(args, "lambda"), mult, " ".join(f"({p},{q})" for p, q in contributors)]]
    return _tabular(args, ["lambda", "mult", "contributors"], rows, doc)


def _cmd_compare(args) -> str:
    a = parse_group_spec(args.group_a)
    b = parse_group_spec(args.group_b)
    res = compare_spectra(a, b, args.lambda_max)
    doc = {
        "group_a": a.name,
        "group_b": b.name,
        "lambda_max": res.lambda_max,
        "isospectral": res.isospectral,
        "lambda": res.eigenvalue,
        "mult_a": res.mult_a,
        "mult_b": res.mult_b,
    }
    if args.format == "json":
        return _emit_json(doc)
    if res.isospectral:
        return f"isospectral up to lambda_max={res.lambda_max}\n"
    return (f"distinguishing eigenvalue {res.eigenvalue}: "
            f"mult[{a.name}]={res.mult_a} mult[{b.name}]={res.mult_b}\n")


def _cmd_weyl(args) -> str:
    group = parse_group_spec(args.group)
    k = args.grid
    grid = [args.lambda_max * (i + 1) // k for i in range(k)] if k > 1 else [args.lambda_max]
    grid = sorted(set(grid))
    rep = weyl_report(group, grid)
    rows = [
        [lam, ng, ns, f"{r:.6f}", xi, ok]
        for lam, ng, ns, r, xi, ok in zip(rep.grid, rep.n_quotient, rep.n_sphere, rep.ratios, rep.xi, rep.bound_ok)
    ]
    doc = {
        "group": group.name,
        "n": group.n,
        "order": group.order,
        "grid": rep.grid,
        "n_quotient": rep.n_quotient,
        "n_sphere": rep.n_sphere,
        "ratios": rep.ratios,
        "xi": rep.xi,
        "bound_ok": rep.bound_ok,
        "weyl_constant": rep.weyl_constant,
        "expected_limit": rep.expected_limit,
        "empirical_limit": rep.empirical_limit,
        "richardson_limit": rep.richardson_limit,
    }
    out = _tabular(args, ["lambda", "N_quotient", "N_sphere", "ratio", "xi", "bound_ok"], rows, doc)
    if args.format == "table":
        out += (f"weyl constant C = {rep.weyl_constant!r}; expected limit {rep.expected_limit:.8f}; "
                f"empirical {rep.empirical_limit:.8f}; extrapolated {rep.richardson_limit:.8f}\n")
    return out


def _cmd_xi(args) -> str:
    val = xi_bound(getattr(args, "lambda"), args.n)
    doc = {"n": args.n, "lambda": getattr(args, "lambda"), "xi": val}
    return _tabular(args, ["n", "lambda", "xi"], [[args.n, getattr(args, "lambda"), val]], doc)


def _cmd_genfun(args) -> str:
    group = parse_group_spec(args.group)
    poly = pg_polynomial(group, args.ceiling)
    coeffs = [
        [a, b, int(poly.coeffs[a, b])]
        for a in range(poly.degree + 1)
        for b in range(poly.degree + 1)
        if poly.coeffs[a, b] != 0
    ]
    doc = {"e": poly.e, "degree": poly.degree, "coeffs": coeffs}
    return _tabular(args, ["a", "b", "c_ab"], coeffs, doc)


def _cmd_sobolev(args) -> str:
    group = parse_group_spec(args.group)
    const = sb.c_group(group, args.ceiling, args.convention)
    doc = {
        "value": const.value,
        "p": const.p,
        "q": const.q,
        "certified": const.certified,
        "convention": const.convention,
    }
    rows = [[f"{const.value!r}", const.p, const.q, const.certified, const.convention]]
    header = ["value", "p", "q", "certified", "convention"]
    if args.witness:
        witness = sb.greens_lower_witness(group, args.witness, args.convention)
        doc["witness"] = [[m, v] for m, v in witness]
        if args.format != "json":
            rows += [[f"{v!r}", 0, m * exponent(group), "witness", args.convention] for m, v in witness]
    return _tabular(args, header, rows, doc)


def _cmd_oracle_check(args) -> str:
    group = parse_group_spec(args.group)
    rows = oracle_check(group, args.pq_max)
    doc = {
        "group": group.name,
        "pq_max": args.pq_max,
        "results": [[p, q, bf, av, ok] for p, q, bf, av, ok in rows],
        "all_ok": all(ok for *_, ok in rows),
    }
    out_rows = [[p, q, bf, av, "ok" if ok else "MISMATCH"] for p, q, bf, av, ok in rows]
    return _tabular(args, ["p", "q", "bruteforce", "averaged", "status"], out_rows, doc)


def _cmd_h0(args) -> str:
    group = parse_group_spec(args.group)
    rows = [[m, dim_h0_polynomial(group, m)] for m in range(args.m_max + 1)]
    doc = {"group": group.name, "e": exponent(group), "entries": [list(r) for r in rows]}
    return _tabular(args, ["m", "dim"], rows, doc)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kohnspec",
        description="Spectra of the Kohn Laplacian on quotients of odd spheres by finite unitary groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["table", "csv", "json"], default="table")

    p = sub.add_parser("catalog", help="list families or show a group's classes")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("spec", nargs="?")
    add_format(p)
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("dims", help="invariant dimensions")
    p.add_argument("--group", required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--pq-max", dest="pq_max", type=int)
    add_format(p)
    p.set_defaults(func=_cmd_dims)

    p = sub.add_parser("spectrum", help="eigenvalue table up to a cutoff")
    p.add_argument("--group", required=True)
    p.add_argument("--lambda-max", dest="lambda_max", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("multiplicity", help="multiplicity of one eigenvalue")
    p.add_argument("--group", required=True)
    p.add_argument("--lambda", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_multiplicity)

    p = sub.add_parser("compare", help="first distinguishing eigenvalue of two groups")
    p.add_argument("--group-a", dest="group_a", required=True)
    p.add_argument("--group-b", dest="group_b", required=True)
    p.add_argument("--lambda-max", dest="lambda_max", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("weyl", help="counting-function comparison against the sphere")
    p.add_argument("--group", required=True)
    p.add_argument("--lambda-max", dest="lambda_max", type=int, required=True)
    p.add_argument("--grid", type=int, default=4, help="number of grid points")
    add_format(p)
    p.set_defaults(func=_cmd_weyl)

    p = sub.add_parser("xi", help="exact counting tail bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", type=float, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_xi)

    p = sub.add_parser("genfun", help="quotient generating polynomial coefficients")
    p.add_argument("--group", required=True)
    p.add_argument("--ceiling", type=int, default=None)
    add_format(p)
    p.set_defaults(func=_cmd_genfun)

    p = sub.add_parser("sobolev", help="Sobolev constant of the complex Green's operator")
    p.add_argument("--group", required=True)
    p.add_argument("--ceiling", type=int, required=True)
    p.add_argument("--convention", type=int, choices=[2, 4], default=2)
    p.add_argument("--witness", type=int, default=0, help="also emit the first m_max witness values")
    add_format(p)
    p.set_defaults(func=_cmd_sobolev)

    p = sub.add_parser("oracle-check", help="brute-force vs averaged dimensions")
    p.add_argument("--group", required=True)
    p.add_argument("--pq-max", dest="pq_max", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_oracle_check)

    p = sub.add_parser("h0dims", help="dimensions at bidegree (0, m*e) via the generating polynomial")
    p.add_argument("--group", required=True)
    p.add_argument("--m-max", dest="m_max", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_h0)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
        sys.stdout.write(out if out.endswith("\n") else out + "\n")
    except _USER_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except _INTERNAL_ERRORS as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 2
    except KohnspecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())
