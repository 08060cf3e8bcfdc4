"""
Command-line front end.

    steklov-models warp --constant 1 --tmax 4 --format json
    steklov-models steklov --case 2 --n 2 --r 1
    steklov-models torus --case 2 --r-min 0.05 --r-max 1.5 --r-count 20
    steklov-models wentzell --n 2 --c 1 --K 3 --beta 0.7 --lambda1c 2
    steklov-models wentzell --batch settings.csv --format csv

Data goes to stdout (or ``--output``), diagnostics to stderr. Exit codes are
0 on success, 2 for configuration errors, 3 for solver failures, 4 for
ill-posed geometry and 5 when no Wentzell setting is valid.
"""

import argparse
import logging
import sys

import numpy as np

from .core import EXIT_BOUNDS, EXIT_SOLVER, FORMATS, ConfigError, RunConfig, Toolkit, load_settings
from .profiles import load_profile
from .records import BackendError, LogBackend, backend_for, emit
from .steklov import ModelBall, steklov_record, steklov_v1
from .surfaces import case_profile, torus_comparison
from .trace import trace_inequality_check
from .warping import CurvatureProfile, solve_warping, space_form_warping
from .wentzell import (
    SETTING_FIELDS,
    InvalidRadicand,
    bounds_row,
    read_settings_csv,
)

logger = logging.getLogger("steklov_models.cli")

toolkit = Toolkit()
toolkit.handle(InvalidRadicand, EXIT_BOUNDS)
toolkit.handle(BackendError, EXIT_SOLVER)

TORUS_FIELDS = ("r", "v1_variable_bound", "v1_escobar_bound", "margin")


def _backends(config: RunConfig):
    return [backend_for(config.format), LogBackend()]


def _profile(config: RunConfig, span: float) -> CurvatureProfile:
    if config.constant is not None:
        return CurvatureProfile.constant(config.constant, span)
    if config.case is not None:
        return case_profile(config.case, config.alpha)
    return load_profile(config.profile)


@toolkit.command
def warp(config: RunConfig, out):
    """Samples the warping function of a profile."""
    if config.constant is not None:
        w = space_form_warping(config.constant, config.t_max)
    else:
        k = _profile(config, config.t_max or 0.0)
        w = solve_warping(k, config.t_max or k.t_max, config.tol)
    rows = [{"t": t, "f": f, "fprime": fp} for t, f, fp in w.rows()]
    meta = {"first_zero": w.first_zero, "steps": w.steps, "method": w.method}
    emit("warp", rows, out, _backends(config), meta)


@toolkit.command
def steklov(config: RunConfig, out):
    """First non-zero Steklov eigenvalue of a model ball."""
    k = _profile(config, config.r)
    ball = ModelBall.from_profile(k, config.n, config.r, config.tol)
    result = steklov_v1(ball, config.max_mode, config.tol)
    meta = dict(result.diagnostics)
    if config.trace_trials:
        report = trace_inequality_check(
            ball, config.trace_trials, config.seed, v1=result.v1
        )
        logger.info(
            f"Trace check over {report.trials} trials: max ratio "
            f"{report.max_ratio:.12g}, passed={report.passed}."
        )
        meta.update(trace_max_ratio=report.max_ratio, trace_passed=report.passed)
    emit("steklov", [steklov_record(result, ball)], out, _backends(config), meta)


@toolkit.command
def torus(config: RunConfig, out):
    """Variable-curvature vs constant-curvature bounds over an r-grid."""
    rows = []
    for r in config.r_grid:
        row = torus_comparison(config.case, r, config.alpha, config.tol)
        rows.append({name: row[name] for name in TORUS_FIELDS})
    emit("torus", rows, out, _backends(config), {"case": config.case})


@toolkit.command
def wentzell(config: RunConfig, out):
    """Wentzell eigenvalue bounds for one setting or a batch file."""
    if config.batch is None:
        settings = [{name: getattr(config, name) for name in SETTING_FIELDS}]
    else:
        try:
            settings = read_settings_csv(config.batch)
        except OSError as e:
            raise ConfigError(f"Cannot read batch file: {e}") from e
    rows = [bounds_row(row) for row in settings]
    emit("wentzell", rows, out, _backends(config))
    if rows and not any(row["valid"] for row in rows):
        logger.warning("No valid Wentzell setting.")
        return EXIT_BOUNDS
    return None


def _r_grid(args) -> list[float]:
    if args.r_grid:
        try:
            return [float(r) for r in args.r_grid.split(",") if r.strip()]
        except ValueError as e:
            raise ConfigError(f"Bad --r-grid: {e}") from e
    if args.r_min is not None or args.r_max is not None:
        if args.r_min is None or args.r_max is None:
            raise ConfigError("--r-min and --r-max go together.")
        return np.linspace(args.r_min, args.r_max, args.r_count).tolist()
    if args.r is not None:
        return [args.r]
    return []


def run_config(args: argparse.Namespace) -> RunConfig:
    """Turns parsed arguments into a :py:class:`RunConfig`."""
    return RunConfig(
        command=args.command,
        constant=getattr(args, "constant", None),
        profile=getattr(args, "profile", None),
        case=getattr(args, "case", None),
        alpha=getattr(args, "alpha", None),
        t_max=getattr(args, "tmax", None),
        n=getattr(args, "n", None),
        r=getattr(args, "r", None),
        format=args.format,
        tol=args.tol,
        seed=getattr(args, "seed", 0),
        max_mode=getattr(args, "max_mode", toolkit.max_mode),
        trace_trials=getattr(args, "trace_trials", 0),
        r_grid=_r_grid(args) if args.command == "torus" else [],
        c=getattr(args, "c", None),
        K=getattr(args, "K", None),
        beta=getattr(args, "beta", None),
        lambda1c=getattr(args, "lambda1c", None),
        batch=getattr(args, "batch", None),
        output=args.output,
        verbose=args.verbose,
    )


def _add_source(parser):
    parser.add_argument("--constant", type=float, help="constant curvature k0")
    parser.add_argument("--profile", help="profile file (.toml or .json)")
    parser.add_argument("--case", type=int, choices=(1, 2, 3), help="torus case")
    parser.add_argument("--alpha", type=float, help="base point angle for case 3")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--tol", type=float, default=toolkit.tol)
    common.add_argument("--output", help="write data here instead of stdout")
    common.add_argument("--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="steklov-models",
        description="Steklov eigenvalue bounds on model manifolds.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("warp", parents=[common], help="sample a warping function")
    _add_source(p)
    p.add_argument("--tmax", type=float)

    p = commands.add_parser("steklov", parents=[common], help="first Steklov eigenvalue")
    _add_source(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--max-mode", type=int, default=toolkit.max_mode)
    p.add_argument("--trace-trials", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)

    p = commands.add_parser("torus", parents=[common], help="torus bound comparison")
    p.add_argument("--case", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--alpha", type=float)
    p.add_argument("--r", type=float)
    p.add_argument("--r-grid", help="comma separated radii")
    p.add_argument("--r-min", type=float)
    p.add_argument("--r-max", type=float)
    p.add_argument("--r-count", type=int, default=20)

    p = commands.add_parser("wentzell", parents=[common], help="Wentzell bounds")
    p.add_argument("--n", type=int)
    p.add_argument("--c", type=float)
    p.add_argument("--K", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--lambda1c", type=float)
    p.add_argument("--batch", help="CSV with columns n, lambda1c, c, K, beta")
    return parser


def main(argv=None) -> int:
    try:
        settings = load_settings()
    except ConfigError as e:
        print(f"steklov-models: {e}", file=sys.stderr)
        return 2
    toolkit.configure(settings)
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings["LOG_LEVEL"],
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        config = run_config(args)
    except ConfigError as e:
        logger.error(str(e))
        return 2
    if config.output:
        with open(config.output, "w", encoding="utf-8", newline="") as out:
            return toolkit.run(config, out)
    return toolkit.run(config, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
