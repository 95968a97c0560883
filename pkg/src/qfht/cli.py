"""Command-line front end: ``qfht verify | kernel-table | transform | bargmann | make-signal``.

Exit status is 0 on success, 1 when ``verify`` finds a failing property and 2
on bad arguments or unreadable input.  Quaternions are written ``w,x,y,z``;
use ``--theta=-1,0,0,0`` for values starting with a minus sign.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import fileio
from .bargmann import SliceRegularSeries, bargmann_forward, bargmann_inverse, build_disc_rule, frht_via_bargmann
from .errors import QfhtError
from .hilbert import DEFAULT_M, DEFAULT_N, MAX_M, CoeffVector, GaussLaguerreRule, RadialSignal, build_rule, synthesize
from .kernel import r_closed_grid
from .quaternion import I, J, K, Quaternion, parse_quaternion
from .transform import FrhtOperator
from .verify import default_seed, run_suite

__all__ = ["main", "build_parser", "CliConfig"]

UNITS = {"i": I, "j": J, "k": K}
DEFAULT_GRID = "0.1,1,5,10"


class UsageError(Exception):
    """Bad configuration detected after argument parsing (exit status 2)."""


@dataclass(frozen=True)
class CliConfig:
    """Validated settings shared by the transform-style subcommands."""

    alpha: float
    theta: Quaternion
    M: int
    N: int

    def __post_init__(self) -> None:
        if not self.alpha > 0:
            raise UsageError(f"--alpha must be > 0, got {self.alpha}")
        if not 1 <= self.M <= MAX_M:
            raise UsageError(f"--m must be in [1, {MAX_M}], got {self.M}")
        if not 0 <= self.N < self.M:
            raise UsageError(f"--n must satisfy 0 <= N < M = {self.M}, got {self.N}")


def _quaternion_arg(text: str) -> Quaternion:
    try:
        return parse_quaternion(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _grid_arg(text: str) -> np.ndarray:
    try:
        values = np.array([float(v) for v in text.split(",")])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None
    if values.size == 0 or np.any(values < 0):
        raise argparse.ArgumentTypeError("grid points must be >= 0")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qfht", description="Quaternionic fractional Hankel transform tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the property suite and print a JSON report")
    p.add_argument("--seed", type=int, default=None, help="random seed (default: $QFHT_SEED or 42)")
    p.add_argument("--criteria-only", action="store_true", help="skip the per-module invariants")

    p = sub.add_parser("kernel-table", help="tabulate the kernel on an x-y grid as CSV")
    p.add_argument("--theta", type=_quaternion_arg, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--x", type=_grid_arg, default=_grid_arg(DEFAULT_GRID), help="comma-separated x values")
    p.add_argument("--y", type=_grid_arg, default=_grid_arg(DEFAULT_GRID), help="comma-separated y values")
    p.add_argument("--unweighted", action="store_true", help="emit R instead of x^alpha e^-x R")
    p.add_argument("--output", type=Path, default=None, help="CSV path (default: standard output)")

    p = sub.add_parser("transform", help="apply the transform to a signal CSV")
    p.add_argument("--theta", type=_quaternion_arg, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("--output", type=Path, required=True)
    p.add_argument("--path", choices=("spectral", "quadrature", "bargmann"), default="spectral")
    p.add_argument("--n", type=int, default=DEFAULT_N, help="coefficient cutoff N (default %(default)s)")

    p = sub.add_parser("bargmann", help="forward or inverse Bargmann transform")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--input", type=Path, help="signal CSV (forward)")
    p.add_argument("--coeffs", type=Path, help="coefficient JSON (inverse)")
    p.add_argument("--unit", choices=sorted(UNITS), default="i", help="slice used by the inverse")
    p.add_argument("--m", type=int, default=DEFAULT_M, help="rule size for the inverse output")
    p.add_argument("--n", type=int, default=DEFAULT_N, help="coefficient cutoff N (forward)")
    p.add_argument("--out", type=Path, required=True)

    p = sub.add_parser("make-signal", help="write a signal CSV on a Gauss-Laguerre rule")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--m", type=int, default=DEFAULT_M)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--basis", type=int, help="samples of phi_n")
    src.add_argument("--random", type=int, metavar="COUNT", help="random quaternion coefficients c_0..c_{COUNT-1}")
    src.add_argument("--coeffs", type=Path, help="Laguerre coefficients from a JSON file")
    p.add_argument("--seed", type=int, default=None, help="seed for --random (default: $QFHT_SEED or 42)")
    p.add_argument("--output", type=Path, required=True)
    return parser


def _load_signal(path: Path, alpha: float) -> RadialSignal:
    nodes, _, values = fileio.read_signal_csv(path)
    M = nodes.size
    if M > MAX_M:
        raise UsageError(f"{path}: {M} rows exceed the maximum rule size {MAX_M}")
    rule = build_rule(alpha, M)
    if not np.allclose(nodes, rule.nodes, rtol=1e-12, atol=0.0):
        raise UsageError(f"{path}: x column is not the {M}-node Gauss-Laguerre rule for alpha={alpha}")
    return RadialSignal(rule, values)


def _save_signal(path: Path, f: RadialSignal) -> None:
    fileio.write_signal_csv(path, f.rule.nodes, f.rule.weights, f.values)


def _cmd_verify(args) -> int:
    seed = default_seed() if args.seed is None else args.seed
    results = run_suite(seed, include_invariants=not args.criteria_only)
    print(json.dumps([r.to_dict() for r in results], indent=2))
    failed = [r.name for r in results if not r.passed]
    if failed:
        print("failing properties: " + ", ".join(failed), file=sys.stderr)
        return 1
    return 0


def _cmd_kernel_table(args) -> int:
    CliConfig(args.alpha, args.theta, DEFAULT_M, 0)
    values, unit = r_closed_grid(args.theta, args.alpha, args.x, args.y)
    xs, ys = np.meshgrid(args.x, args.y, indexing="ij")
    if not args.unweighted:
        with np.errstate(divide="ignore"):
            values = values * np.exp(args.alpha * np.log(xs) - xs)
    out = args.output if args.output is not None else sys.stdout
    fileio.write_kernel_csv(out, xs, ys, values, unit.vector)
    return 0


def _cmd_transform(args) -> int:
    f = _load_signal(args.input, args.alpha)
    cfg = CliConfig(args.alpha, args.theta, f.rule.count, min(args.n, f.rule.count - 1))
    if abs(cfg.theta) > 1.0 + 1e-12:
        raise UsageError(f"|theta| = {abs(cfg.theta):.17g} > 1 is not admissible here")
    if args.path == "bargmann":
        out = f if cfg.theta == Quaternion(1.0) else frht_via_bargmann(f, cfg.theta, N=cfg.N)
    else:
        out = FrhtOperator(cfg.theta, f.rule).apply(f, args.path, cfg.N)
    _save_signal(args.output, out)
    return 0


def _cmd_bargmann(args) -> int:
    if args.inverse:
        if args.coeffs is None:
            raise UsageError("--inverse needs --coeffs")
        cfg = CliConfig(args.alpha, Quaternion(1.0), args.m, 0)
        F = SliceRegularSeries(fileio.read_coeffs_json(args.coeffs))
        rule = build_rule(cfg.alpha, cfg.M)
        out = bargmann_inverse(F, rule, build_disc_rule(cfg.alpha), UNITS[args.unit])
        _save_signal(args.out, out)
        return 0
    if args.input is None:
        raise UsageError("forward transform needs --input")
    f = _load_signal(args.input, args.alpha)
    cfg = CliConfig(args.alpha, Quaternion(1.0), f.rule.count, min(args.n, f.rule.count - 1))
    fileio.write_coeffs_json(args.out, bargmann_forward(f, cfg.N).coeffs)
    return 0


def _cmd_make_signal(args) -> int:
    CliConfig(args.alpha, Quaternion(1.0), args.m, 0)
    rule: GaussLaguerreRule = build_rule(args.alpha, args.m)
    if args.basis is not None:
        if args.basis < 0:
            raise UsageError("--basis must be >= 0")
        c = CoeffVector.basis(args.basis)
    elif args.random is not None:
        if args.random < 1:
            raise UsageError("--random needs at least one coefficient")
        rng = np.random.default_rng(default_seed() if args.seed is None else args.seed)
        c = CoeffVector(rng.standard_normal((args.random, 4)))
    else:
        c = CoeffVector(fileio.read_coeffs_json(args.coeffs))
    _save_signal(args.output, synthesize(c, rule))
    return 0


COMMANDS = {
    "verify": _cmd_verify,
    "kernel-table": _cmd_kernel_table,
    "transform": _cmd_transform,
    "bargmann": _cmd_bargmann,
    "make-signal": _cmd_make_signal,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, QfhtError, ValueError, OSError) as exc:
        print(f"qfht {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
