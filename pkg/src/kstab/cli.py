"""Command-line interface: ``kstab preset|xi|roots|degree``.

Exit codes: 0 success with xi > 0, 1 success with xi <= 0, 2 bad input,
3 a mathematical precondition failed (dominance or support).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from math import lcm
from typing import Any, Optional, Sequence

from .arith import as_rational, factorize, format_rational
from .config import PRESETS, config_to_dict, load_config, preset
from .flag_degree import WeightError, degree
from .k_stability import ConfigError, DominanceError, InvariantReport, Verdict, report
from .polynomial import UniPoly
from .root_system import DiagramError, build

EXIT_OK, EXIT_NONPOSITIVE, EXIT_INPUT, EXIT_MATH = 0, 1, 2, 3


class InputError(Exception):
    pass


def linear_form(p: UniPoly) -> str:
    """Render ``a + b*x`` the way the tables print it: ``(24-x)/2``, ``3x``, ``8``."""
    if p.degree > 1:
        return str(p)
    a, b = p.coefficient(0), p.coefficient(1)
    q = lcm(a.denominator, b.denominator)
    A, B = int(a * q), int(b * q)
    xs = "x" if abs(B) == 1 else f"{abs(B)}x"
    if B == 0:
        body = str(A)
    elif A == 0:
        body = xs if B > 0 else "-" + xs
    else:
        body = f"{A}{'+' if B > 0 else '-'}{xs}"
    if q == 1:
        return body
    return f"({body})/{q}" if A and B else f"{body}/{q}"


def format_vector(v: Sequence) -> str:
    return "(" + ",".join(format_rational(Fraction(c)) for c in v) + ")"


def _use_color(stream) -> bool:
    return not os.environ.get("KSTAB_NO_COLOR") and hasattr(stream, "isatty") and stream.isatty()


def _style(text: str, verdict: Verdict, color: bool) -> str:
    if not color:
        return text
    code = "32" if verdict is Verdict.POSITIVE else "31"
    return f"\033[1;{code}m{text}\033[0m"


def report_to_json(rep: InvariantReport) -> dict[str, Any]:
    return {
        "name": rep.name,
        "xi": {
            "value": format_rational(rep.xi),
            "factored": str(rep.xi_factored) if rep.xi_factored is not None else None,
        },
        "beta": format_rational(rep.beta),
        "S": format_rational(rep.S),
        "A": format_rational(rep.A),
        "L_to_n": format_rational(rep.L_to_n),
        "volume_poly": str(rep.volume_poly),
        "integrand_poly": str(rep.integrand_poly),
        "table": [
            {
                "root": list(row.root),
                "numerator": linear_form(row.numerator),
                "denominator": format_rational(row.denominator),
            }
            for row in rep.table
        ],
        "verdict": rep.verdict.value,
    }


def render_text(rep: InvariantReport, table: bool, factor: bool, color: bool = False) -> str:
    lines = [
        f"{rep.name}",
        f"  xi(Z)       = {format_rational(rep.xi)}",
    ]
    if factor and rep.xi_factored is not None:
        lines.append(f"              = {rep.xi_factored}")
    lines += [
        f"  beta(E)     = {format_rational(rep.beta)}",
        f"  A(E)        = {format_rational(rep.A)}",
        f"  S(E)        = {format_rational(rep.S)}",
        f"  L^n         = {format_rational(rep.L_to_n)}",
    ]
    if factor and rep.L_to_n.denominator == 1:
        lines.append(f"              = {factorize(rep.L_to_n.numerator)}")
    lines += [
        f"  vol(L - xE) = {rep.volume_poly}   (0 <= x <= epsilon)",
        f"  integrand   = {rep.integrand_poly}",
        f"  verdict     : {_style(rep.verdict.value, rep.verdict, color)} ({rep.verdict.describe()})",
    ]
    if table:
        rows = [(format_vector(r.root), linear_form(r.numerator), format_rational(r.denominator)) for r in rep.table]
        heads = ("root", "(L-xE|_E, -)", "(rho, -)")
        widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(heads)]
        fmt = "  {:<%d} | {:<%d} | {:<%d}" % tuple(widths)
        lines.append("")
        lines.append(fmt.format(*heads).rstrip())
        lines.append("  " + "-+-".join("-" * w for w in widths))
        lines += [fmt.format(*r).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def _emit_report(rep: InvariantReport, args, table: bool, factor: bool) -> int:
    if args.json:
        sys.stdout.write(json.dumps(report_to_json(rep), indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(render_text(rep, table, factor, _use_color(sys.stdout)))
    return EXIT_OK if rep.verdict is Verdict.POSITIVE else EXIT_NONPOSITIVE


def cmd_preset(args) -> int:
    if args.action == "list":
        for name in sorted(PRESETS):
            sys.stdout.write(name + "\n")
        return EXIT_OK
    if args.name is None:
        raise InputError(f"preset {args.action} needs a preset name")
    if args.name not in PRESETS:
        raise InputError(f"unknown preset {args.name!r}; known: {', '.join(sorted(PRESETS))}")
    cfg = preset(args.name)
    if args.action == "show":
        sys.stdout.write(json.dumps(config_to_dict(cfg), indent=2) + "\n")
        return EXIT_OK
    return _emit_report(report(cfg), args, table=True, factor=True)


def cmd_xi(args) -> int:
    try:
        cfg = load_config(args.config)
    except OSError as exc:
        raise InputError(f"cannot read {args.config}: {exc.strerror}") from exc
    return _emit_report(report(cfg), args, table=args.table, factor=args.factor)


def _format_roots(rs) -> str:
    lines = [f"{rs.diagram}: {len(rs.positive_roots)} positive roots (simple-root coordinates)"]
    lines += [f"  {format_vector(r)}" for r in rs.positive_roots]
    lines.append("fundamental weights")
    for i, row in enumerate(rs.fundamental_weights, start=1):
        lines.append(f"  omega_{i} = {format_vector(row)}")
    lines.append(f"rho = {format_vector(rs.to_simple_basis(rs.rho()))}")
    return "\n".join(lines) + "\n"


def _parse_diagram(text: str):
    try:
        return build(text)
    except DiagramError as exc:
        raise InputError(str(exc)) from exc


def cmd_roots(args) -> int:
    sys.stdout.write(_format_roots(_parse_diagram(args.diagram)))
    return EXIT_OK


def _csv(text: str, what: str, parse) -> list:
    try:
        return [parse(part) for part in text.split(",") if part.strip()]
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad {what} list {text!r}") from exc


def cmd_degree(args) -> int:
    rs = _parse_diagram(args.diagram)
    marked = _csv(args.marked, "node", int)
    weight = _csv(args.weight, "weight", as_rational)
    if any(not 1 <= m <= rs.rank for m in marked) or not marked:
        raise InputError(f"marked nodes must be in 1..{rs.rank}")
    if len(weight) != rs.rank:
        raise InputError(f"weight needs {rs.rank} coefficients")
    value = degree(rs, [m - 1 for m in marked], weight)
    sys.stdout.write(format_rational(value) + "\n")
    if value.denominator == 1:
        sys.stdout.write(f"= {factorize(value.numerator)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kstab", description="Exact xi/beta invariants of two-orbit blow-ups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def report_flags(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--table", action="store_true", help="include the per-root table")
        p.add_argument("--factor", action="store_true", help="factor integer outputs")

    p = sub.add_parser("preset", help="list, show or run a built-in configuration")
    p.add_argument("action", choices=["list", "run", "show"])
    p.add_argument("name", nargs="?")
    report_flags(p)
    p.set_defaults(func=cmd_preset)

    p = sub.add_parser("xi", help="compute the invariants for a JSON config")
    p.add_argument("--config", required=True)
    report_flags(p)
    p.set_defaults(func=cmd_xi)

    p = sub.add_parser("roots", help="positive roots, fundamental weights and rho")
    p.add_argument("diagram")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("degree", help="degree of a line bundle on G/P")
    p.add_argument("diagram")
    p.add_argument("--marked", required=True, help="comma-separated 1-based nodes")
    p.add_argument("--weight", required=True, help="comma-separated coefficients over the fundamental weights")
    p.set_defaults(func=cmd_degree)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ConfigError) as exc:
        sys.stderr.write(f"kstab: error: {exc}\n")
        return EXIT_INPUT
    except (DominanceError, WeightError) as exc:
        sys.stderr.write(f"kstab: precondition failed: {exc}\n")
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
