"""Command-line front end.

    casimir-reg density --system em_plates --grid 101 --out plates.csv
    casimir-reg energy --system scalar_quartic --alpha 1 --order both
    casimir-reg verify

Exit codes: 0 success, 1 invalid configuration or flag, 2 I/O failure,
3 the requested single order of operations diverges.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import densities, energies
from .config import SystemKind, load_config
from .exceptions import CasimirError, ConfigError
from .verify import run_checks

__all__ = ["SweepRecord", "sweep", "write_density_csv", "main"]

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_IO = 2
EXIT_DIVERGENT = 3

CSV_HEADER = ("theta", "z", "u_E", "u_B", "u_total")


@dataclass(frozen=True)
class SweepRecord:
    theta: float
    z: float
    u_E: float | None
    u_B: float | None
    u_total: float


def sweep(config):
    """Density profile on ``grid_points`` uniform angles in ``[guard, pi - guard]``.

    ``u_total`` is evaluated from its own closed form (exactly constant for
    the free systems) rather than by adding the two divergent halves.
    """
    L, guard = config.L, config.guard
    if config.grid_points == 1:
        thetas = np.array([math.pi / 2])
    else:
        thetas = np.linspace(guard, math.pi - guard, config.grid_points)
    records = []
    for theta in thetas:
        theta = float(theta)
        z = theta * L / math.pi
        kind = config.system
        if kind is SystemKind.SCALAR_1D:
            u_e = densities.scalar_uE(theta, L, guard=0.0)
            u_b = densities.scalar_uB(theta, L, guard=0.0)
            total = densities.as_structured("scalar_total", L)(theta)
        elif kind is SystemKind.EM_PLATES:
            u_e = 0.5 * densities.em_E2(theta, L, guard=0.0)
            u_b = 0.5 * densities.em_B2(theta, L, guard=0.0)
            total = densities.as_structured("em_total", L)(theta)
        elif kind is SystemKind.EM_HALFSPACE:
            fluct = densities.halfspace_fluctuations(z)
            u_e, u_b, total = 0.5 * fluct.E2, 0.5 * fluct.B2, fluct.energy_density
        elif kind is SystemKind.SCALAR_QUARTIC:
            u_e = u_b = None
            total = densities.eh_scalar_density(theta, L, config.alpha, config.m, guard=0.0)
        else:
            raise ConfigError("system", f"no density profile is available for {kind.value}")
        records.append(SweepRecord(theta, z, u_e, u_b, total))
    return records


def _fmt(value):
    return "" if value is None else format(value, ".17g")


def write_density_csv(records, stream):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow([_fmt(r.theta), _fmt(r.z), _fmt(r.u_E), _fmt(r.u_B), _fmt(r.u_total)])


def cmd_density(config, out):
    records = sweep(config)
    try:
        if out is None or out == "-":
            write_density_csv(records, sys.stdout)
        else:
            with open(out, "w", encoding="utf-8", newline="") as fh:
                write_density_csv(records, fh)
    except OSError as exc:
        print(f"error: cannot write {out}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _report_lines(report):
    if not report.divergent:
        return [f"regularize-first: {_fmt(report.finite_if_convergent)}"]
    fitted = "n/a" if report.fitted_exponent is None else f"{report.fitted_exponent:.4f}"
    return [
        "regularize-first: divergent",
        f"  leading exponent: {report.leading_exponent}",
        f"  leading coefficient (per plate): {_fmt(report.leading_coefficient)}",
        f"  fitted exponent: {fitted}",
    ]


def cmd_energy(config, order, part="total"):
    print(f"system: {config.system.value}")
    print(f"L: {_fmt(config.L)}")
    if config.system.interacting:
        print(f"alpha: {_fmt(config.alpha)}")
        print(f"m: {_fmt(config.m)}")
    if part != "total":
        print(f"part: {part}")
    if order == "integrate-first":
        if part == "total":
            value = energies.integrate_first_energy(config)
        else:
            value = energies.compare_orders(config, part).integrate_then_regularize
        print(f"integrate-first: {_fmt(value)}")
        return EXIT_OK
    report = energies.compare_orders(config, part)
    if order == "regularize-first":
        for line in _report_lines(report.regularize_then_integrate):
            print(line)
        return EXIT_DIVERGENT if report.regularize_then_integrate.divergent else EXIT_OK
    print(f"integrate-first: {_fmt(report.integrate_then_regularize)}")
    for line in _report_lines(report.regularize_then_integrate):
        print(line)
    print(f"commute: {str(report.commute).lower()}")
    return EXIT_OK


def cmd_verify():
    results = run_checks()
    for result in results:
        print(result.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_CONFIG


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _add_config_flags(parser):
    parser.add_argument("--config", help="flat key=value config file; flags override it")
    parser.add_argument("--system", choices=[k.value for k in SystemKind])
    parser.add_argument("--L", type=float, help="plate separation (default 1)")
    parser.add_argument("--alpha", type=float, help="quartic coupling (default 0)")
    parser.add_argument("--m", type=float, help="heavy mass (default 1)")
    parser.add_argument("--grid", type=int, help="number of theta samples (default 201)")
    parser.add_argument("--guard", type=float, help="excluded band around theta=0, pi (default 1e-3)")


def build_parser():
    parser = _Parser(prog="casimir-reg", description="Regularized Casimir energies and densities.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    density = sub.add_parser("density", help="write a density profile as CSV")
    _add_config_flags(density)
    density.add_argument("--out", help="output CSV path (default: stdout)")

    energy = sub.add_parser("energy", help="total energy under either order of operations")
    _add_config_flags(energy)
    energy.add_argument(
        "--order",
        choices=["integrate-first", "regularize-first", "both"],
        default="both",
    )
    energy.add_argument("--part", choices=["E", "B", "total"], default="total",
                        help="scalar_1d only: electric, magnetic or full density")

    sub.add_parser("verify", help="run the cross-module self-checks")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        return cmd_verify()
    try:
        config = load_config(
            args.config,
            system=args.system,
            L=args.L,
            alpha=args.alpha,
            m=args.m,
            grid_points=args.grid,
            guard=args.guard,
        )
    except OSError as exc:
        print(f"error: cannot read config {args.config}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    except ConfigError as exc:
        print(f"error: invalid config: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        if args.command == "density":
            return cmd_density(config, args.out)
        return cmd_energy(config, args.order, args.part)
    except CasimirError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
