"""Command-line interface.

Subcommands: kernel-eval, roots, trace, rouche, even-odd, s-alpha, measure,
verify.  Validation failures exit with status 2, numerical failures with 3,
both with a one-line JSON diagnostic on stderr.  Relative output paths are
resolved against $BERGZEROS_OUT when that variable is set.
"""

import argparse
import json
import os
import re
import sys
from pathlib import Path

import numpy as np

from . import export
from .curves import BetaGrid, parity_count_scan, root_measure_points, solve_s_alpha, trace_zero_curves
from .errors import BergzerosError, NumericalError, ParameterError
from .kernel import eval_kernel_xi
from .params import KernelParams
from .poly import binomial_power
from .quadrature import gauss_jacobi_rule, norm_moment_residual, verify_reproducing
from .rouche import rouche_window
from .series import (
    convolution_identity_residual,
    dual_construction_gap,
    numerator_series,
    beta_weight_derivative_residual,
    numerator_ode_residual,
    p_alpha,
)
from .roots import find_roots

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3


@dataclass
class RunConfig:
    """One CLI invocation, resolved and validated."""

    command: str
    alpha: float | None = None
    alphas: list = field(default_factory=list)
    beta: float | None = None
    r0: float = 1.0
    xi: complex | None = None
    grid_points: int = 400
    grid_offset: float = 1e-6
    out: str | None = None
    json_out: str | None = None
    svg: str | None = None
    fmt: str = "csv"
    quick: bool = False


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise ParameterError("E_COMPLEX", f"cannot parse complex value from {text!r}")


def _parse_alpha_range(text: str) -> list[int]:
    if ":" in text:
        lo, hi = text.split(":", 1)
        lo_i, hi_i = int(lo), int(hi)
        if hi_i < lo_i:
            raise ParameterError("E_ALPHA_RANGE", f"empty alpha range {text!r}")
        return list(range(lo_i, hi_i + 1))
    return [int(text)]


def _resolve(path: str | None) -> Path | None:
    if path is None:
        return None
    p = Path(path)
    base = os.environ.get("BERGZEROS_OUT")
    if base and not p.is_absolute():
        p = Path(base) / p
    return p


def _require_int_alpha(value) -> int:
    if value is None:
        raise ParameterError("E_ALPHA_RANGE", "alpha is required")
    if float(value) != int(float(value)) or float(value) < 0:
        raise ParameterError("E_ALPHA_INTEGER", f"alpha must be a nonnegative integer, got {value}")
    return int(float(value))


def _require_series_beta(beta) -> float:
    if beta is None:
        raise ParameterError("E_BETA_RANGE", "beta is required")
    beta = float(beta)
    if beta <= -1.0:
        raise ParameterError("E_BETA_RANGE", f"beta must be > -1, got {beta}")
    if not beta < 0.0:
        raise ParameterError("E_BETA_INTEGER", f"this command needs -1 < beta < 0, got {beta}")
    return beta


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bergzeros", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kernel-eval", help="evaluate the kernel profile at one argument")
    p.add_argument("--alpha", required=True, type=float)
    p.add_argument("--beta", required=True, type=float)
    p.add_argument("--xi", required=True, help="complex as 're' or 're,im'")
    p.add_argument("--out", default=None, help="optional JSON record path")

    p = sub.add_parser("roots", help="roots of the kernel numerator")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True, type=float)
    p.add_argument("--out", default=None)
    p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")

    p = sub.add_parser("trace", help="trace all zero curves over beta in (-1,0)")
    p.add_argument("--alpha", required=True)
    p.add_argument("--grid", default="default", help="'default' or 'N:offset'")
    p.add_argument("--out", default=None)
    p.add_argument("--json", dest="json_out", default=None)

    p = sub.add_parser("rouche", help="dominance window endpoints for the binomial family")
    p.add_argument("--alpha", required=True, help="integer or range 'a:b'")
    p.add_argument("--r0", type=float, default=1.0)
    p.add_argument("--out", default=None)
    p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")

    p = sub.add_parser("even-odd", help="even/odd kernel zero counts across beta")
    p.add_argument("--alpha", required=True)
    p.add_argument("--out", default=None, help="JSON report path")
    p.add_argument("--csv", dest="csv_out", default=None, help="scan rows as CSV")

    p = sub.add_parser("s-alpha", help="beta at which the real zero curve crosses -1")
    p.add_argument("--alpha", required=True, help="integer or range 'a:b'")
    p.add_argument("--out", default=None)

    p = sub.add_parser("measure", help="numerator root set with uniform weights")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True, type=float)
    p.add_argument("--out", default=None)
    p.add_argument("--svg", default=None)

    p = sub.add_parser("verify", help="run the built-in verification battery")
    p.add_argument("--quick", action="store_true")

    # accept scientific notation in negative option values (e.g. --beta -1e-4)
    matcher = re.compile(r"^-\d+$|^-\d*\.\d+$|^-\d+\.?\d*[eE][-+]?\d+$")
    for sp in [parser, *sub.choices.values()]:
        sp._negative_number_matcher = matcher
    return parser


def _cmd_kernel_eval(args) -> int:
    params = KernelParams(args.alpha, args.beta)
    xi = _parse_complex(args.xi)
    value = eval_kernel_xi(params, xi)
    if value.imag == 0.0:
        print(export.format_float(value.real))
    else:
        print(f"{export.format_float(value.real)} {export.format_float(value.imag)}")
    out = _resolve(args.out)
    if out is not None:
        row = {
            "alpha": params.alpha,
            "beta": params.beta,
            "xi_re": xi.real,
            "xi_im": xi.imag,
            "re": value.real,
            "im": value.imag,
        }
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(export.rows_to_json("kernel", 1, [row]))
    return EXIT_OK


def _cmd_roots(args) -> int:
    alpha = _require_int_alpha(args.alpha)
    beta = _require_series_beta(args.beta)
    roots = find_roots(numerator_series(alpha, beta).as_poly()).roots
    rows = [
        {"alpha": alpha, "beta": beta, "index": i, "re": z.real, "im": z.imag, "weight": 1.0 / len(roots)}
        for i, z in enumerate(roots)
    ]
    text = export.rows_to_csv("points", rows) if args.fmt == "csv" else export.rows_to_json("points", 1, rows)
    out = _resolve(args.out)
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return EXIT_OK


def _parse_grid(text: str) -> BetaGrid:
    if text == "default":
        return BetaGrid.default()
    try:
        n, offset = text.split(":", 1)
        return BetaGrid.default(int(n), float(offset))
    except ValueError as exc:
        raise ParameterError("E_GRID", f"cannot parse grid spec {text!r}") from exc


def _cmd_trace(args) -> int:
    alpha = _require_int_alpha(args.alpha)
    grid = _parse_grid(args.grid)
    curves = trace_zero_curves(alpha, grid)
    out = _resolve(args.out)
    if out is None:
        sys.stdout.write(export.rows_to_csv("curves", export.curves_rows(curves)))
    else:
        export.export_curves(curves, out, mirror_json=_resolve(args.json_out))
    return EXIT_OK


def _cmd_rouche(args) -> int:
    alphas = _parse_alpha_range(args.alpha)
    if args.r0 <= 0:
        raise ParameterError("E_R0_RANGE", f"r0 must be > 0, got {args.r0}")
    rows = []
    for alpha in alphas:
        if alpha < 0:
            raise ParameterError("E_ALPHA_RANGE", f"alpha must be >= 0, got {alpha}")
        window = rouche_window(p_alpha(alpha), args.r0)
        rows.append(
            {
                "alpha": alpha,
                "r0": args.r0,
                "beta1": window.beta1,
                "beta2": window.beta2,
                "midpoint": window.midpoint,
            }
        )
    text = export.rows_to_csv("rouche", rows) if args.fmt == "csv" else export.rows_to_json("rouche", 1, rows)
    out = _resolve(args.out)
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return EXIT_OK


def _cmd_even_odd(args) -> int:
    alpha = _require_int_alpha(args.alpha)
    report = parity_count_scan(alpha)
    doc = {
        "alpha": report.alpha,
        "tau": report.tau,
        "r": report.r,
        "betas": list(map(float, report.betas)),
        "even_counts": list(map(int, report.even_counts)),
        "odd_counts": list(map(int, report.odd_counts)),
        "thresholds": {k: (None if v is None else float(v)) for k, v in report.thresholds.items()},
        "limit_checks": {k: bool(v) for k, v in report.limit_checks.items()},
        "skipped": list(report.skipped),
        "eta": report.eta,
        "scaled_counts": {k: list(v) if isinstance(v, tuple) else int(v) for k, v in report.scaled_counts.items()},
    }
    text = json.dumps(doc, sort_keys=True, indent=1) + "\n"
    out = _resolve(args.out)
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    if args.csv_out:
        rows = [
            {"alpha": alpha, "beta": float(b), "even_count": int(e), "odd_count": int(o)}
            for b, e, o in zip(report.betas, report.even_counts, report.odd_counts)
        ]
        with open(_resolve(args.csv_out), "w", encoding="utf-8", newline="\n") as fh:
            fh.write(export.rows_to_csv("parity_counts", rows))
    return EXIT_OK


def _cmd_s_alpha(args) -> int:
    alphas = _parse_alpha_range(args.alpha)
    rows = [{"alpha": a, "s_alpha": solve_s_alpha(a)} for a in alphas]
    text = export.rows_to_csv("s_alpha", rows)
    out = _resolve(args.out)
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return EXIT_OK


def _cmd_measure(args) -> int:
    alpha = _require_int_alpha(args.alpha)
    beta = _require_series_beta(args.beta)
    points = root_measure_points(alpha, beta)
    weight = 1.0 / len(points)
    rows = [
        {"alpha": alpha, "beta": beta, "index": i, "re": z.real, "im": z.imag, "weight": weight}
        for i, z in enumerate(points)
    ]
    text = export.rows_to_csv("points", rows)
    out = _resolve(args.out)
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    if args.svg:
        export.export_svg_scatter(points, _resolve(args.svg), export.SvgStyle(title=f"alpha={alpha} beta={beta:g}"))
    return EXIT_OK


def _cmd_verify(args) -> int:
    rng = np.random.default_rng(20240817)
    failures = 0

    def report(name, ok, detail=""):
        nonlocal failures
        line = f"{'PASS' if ok else 'FAIL'} {name}"
        if detail:
            line += f" ({detail})"
        print(line)
        failures += 0 if ok else 1

    trials = 5 if args.quick else 25
    worst = 0.0
    for _ in range(trials):
        alpha = float(rng.uniform(-0.5, 6.0)) if rng.random() < 0.6 else int(rng.integers(0, 9))
        beta = float(rng.uniform(-0.95, -0.05))
        if float(alpha).is_integer() and alpha >= 0:
            worst = max(worst, dual_construction_gap(KernelParams(alpha, beta)))
        samples = rng.uniform(-0.6, 0.6, 5) + 1j * rng.uniform(-0.6, 0.6, 5)
        res, bound = numerator_ode_residual(alpha, beta, samples, tol=1e-6)
        scale = 1.0 + (1.0 + float(np.max(np.abs(samples)))) ** (alpha + 1.0)
        ok_ode = res <= max(bound, 1e-12 * scale)
        if not ok_ode:
            report("ode-identity", False, f"alpha={alpha} beta={beta} residual={res:.2e}")
            break
        f = binomial_power(alpha + 1.0, n_terms=200)
        resid = beta_weight_derivative_residual(f, beta, samples)
        if resid > 1e-10 * (1.0 + scale):
            report("derivative-identity", False, f"alpha={alpha} residual={resid:.2e}")
            break
    else:
        report("identity-suite", True, f"{trials} randomized parameter pairs")
        report("dual-construction", worst < 1e-11, f"worst gap {worst:.2e}")

    conv = convolution_identity_residual(1.0, -0.5, 12 if args.quick else 20)
    report("convolution-identity", conv < 1e-10, f"residual {conv:.2e}")

    params = KernelParams(1.0, -0.5)
    rule = gauss_jacobi_rule(1.0, -0.5, 64)
    res = verify_reproducing(params, 0.4, 3, rule)
    report("reproducing-property", res < 1e-8, f"residual {res:.2e}")
    moments = max(norm_moment_residual(params, n, rule) for n in range(31))
    report("norm-moments", moments < 1e-12, f"worst {moments:.2e}")

    s0 = solve_s_alpha(0)
    report("curve-crossing", abs(s0 + 0.5) < 1e-9, f"s_0 = {s0:.12f}")
    return EXIT_OK if failures == 0 else EXIT_NUMERICAL


_DISPATCH = {
    "kernel-eval": _cmd_kernel_eval,
    "roots": _cmd_roots,
    "trace": _cmd_trace,
    "rouche": _cmd_rouche,
    "even-odd": _cmd_even_odd,
    "s-alpha": _cmd_s_alpha,
    "measure": _cmd_measure,
    "verify": _cmd_verify,
}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except ParameterError as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}), file=sys.stderr)
        return EXIT_VALIDATION
    except NumericalError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_NUMERICAL
    except BergzerosError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_NUMERICAL


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
