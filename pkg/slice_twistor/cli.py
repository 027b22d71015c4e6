"""
Command Line Front End
Runs the verification commands and emits machine-readable reports
"""

import argparse
import math
import sys
from typing import Callable, Dict, List, Optional

import numpy as np

import grass
import ocs
import surfaces
from acceptance import resolve_tolerances, run_suite
from config import config
from data_export import DataExporter
from env_config import get_environment_status, validate_environment
from error_handler import EXIT_NUMERICAL, EXIT_OK, UsageError, handle_exceptions
from logger import log_structured, logger, set_level
from performance import performance_context
from qcore import Quaternion, decompose, recompose
from sampling import make_rng
from schema import CheckResult, RunReport
from slice_function import SliceFunction, eval_slice, load_function
from twistor import commuting_square_residuals, lift
from utils import complex_pairs, create_check, format_quaternion, parse_complex, parse_quaternion
from validators import (
    validate_box,
    validate_complex_literal,
    validate_grid,
    validate_quaternion_literal,
    validate_samples,
    validate_scan_box,
    validate_seed,
    validate_tolerance,
)


def _require(result) -> None:
    ok, message = result
    if not ok:
        raise UsageError(message)


def _tol(args, default: float) -> float:
    return default if getattr(args, "tol", None) is None else args.tol


def _fd_tol(args) -> float:
    return config.FD_TOL if getattr(args, "fd_tol", None) is None else args.fd_tol


def _tolerances(args) -> Dict[str, float]:
    """Configured table with the finite-difference override applied"""
    table = config.tolerances()
    table["fd"] = _fd_tol(args)
    return table


def _function(args) -> SliceFunction:
    if not getattr(args, "fn", None):
        raise UsageError("--fn is required")
    return load_function(args.fn)


def _echo(args, **extra) -> Dict:
    """Config echo stored in every report"""
    echo = {"tolerances": _tolerances(args)}
    for key in ("seed", "samples", "grid", "box", "tol", "fd_tol"):
        value = getattr(args, key, None)
        if value is not None:
            echo[key] = value
    echo.update(extra)
    return echo


# ============================================================================
# COMMANDS
# ============================================================================


def cmd_eval(args) -> RunReport:
    f = _function(args)
    _require(validate_quaternion_literal(args.x))
    x = parse_quaternion(args.x)
    value = eval_slice(f, x)
    return RunReport(
        command="eval",
        config=_echo(args),
        data={
            "function": f.name,
            "x": x.to_json(),
            "value": value.to_json(),
            "text": format_quaternion(value),
        },
    )


def cmd_lift(args) -> RunReport:
    f = _function(args)
    _require(validate_complex_literal(args.v))
    v = parse_complex(args.v)
    u = None if args.u.strip().lower() in ("inf", "infinity") else parse_complex(args.u)
    point = lift(f, u, v)
    checks: List[CheckResult] = []
    if u is not None:
        residual = float(commuting_square_residuals(f, np.array([u]), np.array([v]))[0])
        checks.append(create_check("commuting square", residual, _tol(args, config.CHORDAL_TOL)))
    return RunReport(
        command="lift",
        config=_echo(args),
        checks=checks,
        data={"function": f.name, "u": args.u, "v": complex_pairs([v])[0], "point": point.as_json()},
    )


def cmd_contains(args) -> RunReport:
    _require(validate_seed(args.seed))
    _require(validate_samples(args.samples))
    f = _function(args)
    if not args.surface:
        raise UsageError("--surface is required")
    P = surfaces.load_surface(args.surface)
    rng = make_rng(args.seed)
    tol = _tol(args, config.MEMBERSHIP_TOL)
    report = surfaces.contains_lift(P, f, samples=args.samples, rng=rng, tol=tol)
    symbolic = surfaces.symbolic_crosscheck(P, f, rng=rng) if args.symbolic else None
    data = {
        "surface": P.name,
        "function": f.name,
        "samples": report.samples,
        "worst_v": complex_pairs([report.worst_v])[0] if report.worst_v is not None else None,
    }
    if symbolic is not None:
        data["symbolic"] = {"status": symbolic.status, "points": symbolic.points}
    checks = [create_check("lift membership", report.residual, tol)]
    if symbolic is not None and symbolic.status == "failed":
        checks.append(create_check("symbolic membership", math.inf, tol))
    return RunReport(command="contains", config=_echo(args), checks=checks, data=data)


def cmd_scan(args) -> RunReport:
    if not args.surface:
        raise UsageError("--surface is required")
    _require(validate_scan_box(args.box))
    _require(validate_grid(args.grid, maximum=256))
    P = surfaces.load_surface(args.surface)
    report = surfaces.discriminant_scan(P, args.box, args.grid)
    if args.csv:
        DataExporter.write(DataExporter.to_csv(report.rows(), report.CSV_HEADER), args.csv)
    return RunReport(
        command="scan",
        config=_echo(args),
        data={"surface": P.name, "summary": report.summary(), "csv": args.csv},
    )


def cmd_transform(args) -> RunReport:
    f = _function(args)
    curve = grass.transform(f)
    rng = make_rng(0 if args.seed is None else args.seed)
    v = rng.uniform(-2, 2, 64) + 1j * rng.uniform(0.2, 2, 64)
    with np.errstate(all="ignore"):
        klein = curve.klein_residual(v)
    klein = klein[np.isfinite(klein)]
    residual = float(np.max(klein)) if len(klein) else math.nan
    return RunReport(
        command="transform",
        config=_echo(args),
        checks=[create_check("Klein relation", residual, _tol(args, config.STRUCTURAL_TOL))],
        data={"function": f.name, "coordinates": curve.to_sources()},
    )


def _curve(args) -> grass.TransformCurve:
    if args.quaddiag is not None:
        lam, mu, nu = args.quaddiag
        return grass.transform(surfaces.solve_quaddiag_splitting(lam, mu, nu))
    return grass.transform(_function(args))


def cmd_twistor_lines(args) -> RunReport:
    _require(validate_box(args.box))
    _require(validate_grid(args.grid))
    curve = _curve(args)
    tol = _tol(args, config.TWISTOR_LINE_TOL)
    lines = grass.find_twistor_lines(curve, box=args.box, grid=args.grid, tol=tol)
    return RunReport(
        command="twistor-lines",
        config=_echo(args),
        data={"curve": curve.name, "lines": [line.as_json() for line in lines]},
    )


def cmd_affine_check(args) -> RunReport:
    f = _function(args)
    _require(validate_complex_literal(args.A))
    _require(validate_complex_literal(args.B))
    A = parse_complex(args.A)
    B = parse_complex(args.B)
    rng = make_rng(0 if args.seed is None else args.seed)
    result = grass.check_affine_transform(f, A, B, rng=rng, fit_tol=config.MEMBERSHIP_TOL)
    herm = result.hermitian_residual
    return RunReport(
        command="affine-check",
        config=_echo(args),
        checks=[
            create_check("affine cleared transform", result.fit_residual, config.MEMBERSHIP_TOL),
            create_check("hermitian condition", abs(herm), _tol(args, config.STRUCTURAL_TOL)),
        ],
        data={
            "function": f.name,
            "hermitian_residual": [herm.real, herm.imag],
            "f_plus": result.f_plus.to_json(),
            "f_minus": result.f_minus.to_json(),
            "g_plus": result.g_plus.to_json(),
            "g_minus": result.g_minus.to_json(),
        },
    )


def cmd_ocs_intertwine(args) -> RunReport:
    _require(validate_seed(args.seed))
    _require(validate_samples(args.samples))
    rng = make_rng(args.seed)
    Q = rng.normal(size=(args.samples, 4))
    Q[:, 1] = np.abs(Q[:, 1]) + 0.05
    residual = float(np.max(ocs.verify_intertwine_many(Q)))
    fd = 0.0
    for row in Q[:10]:
        closed = ocs.dg(Quaternion.from_array(row))
        gap = np.max(np.abs(closed - ocs.dg_fd(Quaternion.from_array(row))))
        fd = max(fd, float(gap) / max(1.0, float(np.max(np.abs(closed)))))
    return RunReport(
        command="ocs verify-intertwine",
        config=_echo(args),
        checks=[
            create_check("dg J^f = J_i dg", residual, _tol(args, config.STRUCTURAL_TOL)),
            create_check("closed-form dg vs finite differences", fd, _fd_tol(args)),
        ],
    )


def cmd_ocs_preimage(args) -> RunReport:
    _require(validate_quaternion_literal(args.q))
    q = parse_quaternion(args.q)
    coords = ocs.preimage(q)
    x = recompose(coords)
    residual = ocs.image_point(x).distance(q) / (1.0 + q.norm())
    return RunReport(
        command="ocs preimage",
        config=_echo(args),
        checks=[create_check("round trip", residual, _tol(args, config.STRUCTURAL_TOL))],
        data={
            "q": q.to_json(),
            "x": x.to_json(),
            "x_text": format_quaternion(x),
            "alpha": coords.alpha,
            "beta": coords.beta,
            "I": coords.I.as_vector().tolist(),
        },
    )


def cmd_ocs_pushforward(args) -> RunReport:
    f = _function(args)
    _require(validate_quaternion_literal(args.x))
    x = parse_quaternion(args.x)
    decompose(x)
    d = ocs.differential(f, x)
    pushed = ocs.pushforward(f, x)
    return RunReport(
        command="ocs pushforward",
        config=_echo(args),
        checks=[
            create_check("push-forward equals I_x", pushed.residual, _tol(args, config.PUSHFORWARD_TOL)),
            create_check("differential vs finite differences", d.fd_residual(), _fd_tol(args)),
        ],
        data={"function": f.name, "x": x.to_json(), "rank": d.rank(), "matrix": pushed.to_json()},
    )


def cmd_suite(args) -> RunReport:
    _require(validate_seed(args.seed))
    overrides = {"fd": _fd_tol(args)}
    if args.tol is not None:
        overrides["structural"] = args.tol
    checks, timings = run_suite(args.seed, tol=overrides)
    data = {"groups": timings} if args.timing else None
    return RunReport(
        command="suite", config=_echo(args, tolerances=resolve_tolerances(overrides)), checks=checks, data=data
    )


# ============================================================================
# PARSER
# ============================================================================


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="Write the report to FILE instead of stdout.")
    common.add_argument("--pretty", action="store_true", help="Human-readable table instead of JSON.")
    common.add_argument("--timing", action="store_true", help="Include wall time in the report.")
    common.add_argument("--tol", type=float, default=None, help="Override the command's main tolerance.")
    common.add_argument(
        "--fd-tol", type=float, default=None, help="Override the finite-difference tolerance (FD_TOL)."
    )
    common.add_argument("--seed", type=int, default=None, help="Random seed (required for sampling commands).")
    common.add_argument("--log-level", default=None, help="Logging level for stderr.")

    fn = argparse.ArgumentParser(add_help=False)
    fn.add_argument("--fn", help="Function file, catalog name or inline JSON.")

    p = argparse.ArgumentParser(
        prog="slice-twistor",
        description="Slice regular functions and their twistor lifts: numerical verification.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", parents=[common, fn], help="Evaluate f at a quaternion.")
    s.add_argument("--x", required=True, help="Quaternion such as '1+2j-k' or '1,2,-1,0'.")
    s.set_defaults(handler=cmd_eval)

    s = sub.add_parser("lift", parents=[common, fn], help="Twistor lift of f at (u, v).")
    s.add_argument("--u", required=True, help="Fiber coordinate, or 'inf'.")
    s.add_argument("--v", required=True, help="Point of the upper half-plane.")
    s.set_defaults(handler=cmd_lift)

    s = sub.add_parser("contains", parents=[common, fn], help="Check that the lift of f lies on a surface.")
    s.add_argument("--surface", help="Surface file, catalog name or inline JSON.")
    s.add_argument("--samples", type=int, default=500)
    s.add_argument("--symbolic", action="store_true", help="Add the exact sympy cross-check.")
    s.set_defaults(handler=cmd_contains)

    s = sub.add_parser("scan", parents=[common], help="Fiber cardinality over a grid in H.")
    s.add_argument("--surface", help="Surface file, catalog name or inline JSON.")
    s.add_argument("--box", type=float, nargs=8, default=[-1, 1, -1, 1, -1, 1, -1, 1],
                   help="lo hi for each of q0..q3.")
    s.add_argument("--grid", type=int, default=8, help="Grid points per axis.")
    s.add_argument("--csv", help="Write per-cell rows to this CSV file.")
    s.set_defaults(handler=cmd_scan)

    s = sub.add_parser("transform", parents=[common, fn], help="Twistor transform of f into CP^5.")
    s.set_defaults(handler=cmd_transform)

    s = sub.add_parser("twistor-lines", parents=[common, fn], help="Fixed points of sigma on a transform curve.")
    s.add_argument("--quaddiag", type=float, nargs=3, metavar=("LAM", "MU", "NU"), default=None,
                   help="Use the diagonal-quadric splitting instead of --fn.")
    s.add_argument("--box", type=float, nargs=4, default=[-3.0, 3.0, -3.0, 3.0], help="x0 x1 y0 y1")
    s.add_argument("--grid", type=int, default=400)
    s.set_defaults(handler=cmd_twistor_lines)

    s = sub.add_parser("affine-check", parents=[common, fn], help="Hermitian criterion for affine curves.")
    s.add_argument("--A", default="1", help="Complex A of the factor A + xB.")
    s.add_argument("--B", default="0", help="Complex B of the factor A + xB.")
    s.set_defaults(handler=cmd_affine_check)

    o = sub.add_parser("ocs", help="Orthogonal complex structure checks.")
    osub = o.add_subparsers(dest="ocs_command", required=True)
    s = osub.add_parser("verify-intertwine", parents=[common])
    s.add_argument("--samples", type=int, default=1000)
    s.set_defaults(handler=cmd_ocs_intertwine)
    s = osub.add_parser("preimage", parents=[common])
    s.add_argument("--q", required=True, help="Target quaternion with positive i-component.")
    s.set_defaults(handler=cmd_ocs_preimage)
    s = osub.add_parser("pushforward", parents=[common, fn])
    s.add_argument("--x", required=True, help="Base point off the real axis.")
    s.set_defaults(handler=cmd_ocs_pushforward)

    s = sub.add_parser("suite", parents=[common], help="Run the full acceptance battery.")
    s.set_defaults(handler=cmd_suite)

    return p


# ============================================================================
# OUTPUT
# ============================================================================


def render(report: RunReport, pretty: bool) -> str:
    payload = report.model_dump(exclude_none=True)
    if not pretty:
        return DataExporter.to_json(payload)
    lines = [f"# {report.command}"]
    overrides = [
        f"{name}={entry['value']}"
        for name, entry in get_environment_status()["optional_vars"].items()
        if entry["is_set"]
    ]
    if overrides:
        lines.append("environment: " + ", ".join(overrides))
    lines.append("")
    if report.checks:
        lines.append(DataExporter.to_markdown([c.model_dump() for c in report.checks]))
        lines.append("")
    if report.data is not None:
        lines.append(DataExporter.to_json(report.data))
    if report.wall_time is not None:
        lines.append(f"wall time: {report.wall_time:.3f}s")
    return "\n".join(lines)


@handle_exceptions
def _dispatch(args) -> int:
    if args.log_level:
        set_level(args.log_level.upper())
    env_ok, malformed = validate_environment()
    config_ok, problems = config.validate()
    if not env_ok or not config_ok:
        raise UsageError("; ".join(malformed + problems))
    _require(validate_tolerance(args.tol))
    _require(validate_tolerance(args.fd_tol))
    handler: Callable[[argparse.Namespace], RunReport] = args.handler
    with performance_context(args.command) as timer:
        report = handler(args)
    if args.timing:
        report.wall_time = timer.elapsed
    DataExporter.write(render(report, args.pretty), args.out)
    if report.passed:
        return EXIT_OK
    log_structured(logger, "error", "checks failed", command=report.command, failing=",".join(report.failing()))
    return EXIT_NUMERICAL


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments and run one command

    Args:
        argv: argument list without the program name

    Returns:
        0 when every check passes, 1 on numerical failure, 2 on usage errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return _dispatch(args)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
