"""Command line interface.

Subcommands
-----------
q          table of exact norms and companions over a probability grid
bound      tail-bound report for a weighted indicator sum vs its oracles
verify     run a verification sweep (kearns-saul, sharpness, domination, argmax)
example32  normalized fair-coin sum: exact tail vs the Gaussian-style bound

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 verification failure, 2 usage or parse error, 3 infeasible request.
The SUBGAUSS_THREADS environment variable caps worker parallelism; output
is deterministic regardless of its value.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from ._version import __version__
from .core import gls_norm, lambda_star, q_asymptotic, q_norm
from .errors import CapExceededError, DomainError, SubgaussError
from .oracles import exact_tail, poisson_binomial_table
from .report import build_bound_report, report_to_csv, report_to_json
from .sums import WeightedIndicatorSum, hoeffding_reference_tail
from .verify import SUITES, SweepResult, run_suite

_EXIT_OK = 0
_EXIT_VERIFY_FAIL = 1
_EXIT_USAGE = 2
_EXIT_INFEASIBLE = 3


class _UsageError(Exception):
    """Bad user-supplied value outside argparse's own checks."""


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise _UsageError(f"expected comma-separated floats, got {text!r}") from None


def _parse_grid(text: str) -> list[float]:
    """start:stop:count linear grid, or a comma list of values."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise _UsageError(f"grid must be start:stop:count, got {text!r}")
        try:
            start, stop = float(parts[0]), float(parts[1])
            count = int(parts[2])
        except ValueError:
            raise _UsageError(f"grid must be start:stop:count, got {text!r}") from None
        if count < 1:
            raise _UsageError("grid count must be >= 1")
        if count == 1:
            return [start]
        step = (stop - start) / (count - 1)
        return [start + k * step for k in range(count)]
    return _parse_floats(text)


def _fmt17(value: float | None) -> str:
    return "" if value is None else f"{value:.17g}"


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _note(text: str) -> None:
    sys.stderr.write(text + "\n")


def _read_sum_spec(path: str) -> WeightedIndicatorSum:
    """Parse the sum spec file: optional 'independent:' header, 'c p' lines."""
    independent = True
    coeffs: list[float] = []
    probs: list[float] = []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise _UsageError(f"cannot read sum spec {path!r}: {exc}") from None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("independent:"):
            flag = line.split(":", 1)[1].strip().lower()
            if flag not in ("true", "false"):
                raise _UsageError(
                    f"{path}:{lineno}: independent must be true or false, got {flag!r}"
                )
            independent = flag == "true"
            continue
        parts = line.split()
        if len(parts) != 2:
            raise _UsageError(
                f"{path}:{lineno}: expected 'coefficient probability', got {line!r}"
            )
        try:
            coeffs.append(float(parts[0]))
            probs.append(float(parts[1]))
        except ValueError:
            raise _UsageError(f"{path}:{lineno}: not numeric: {line!r}") from None
    if not coeffs:
        raise _UsageError(f"{path}: no terms found")
    return WeightedIndicatorSum(coeffs, probs, independent=independent)


def _cmd_q(args: argparse.Namespace) -> int:
    if args.p is not None:
        ps = _parse_floats(args.p)
    else:
        ps = _parse_grid(args.grid)
    rows = []
    for p in ps:
        q = q_norm(p).value
        lam0 = lambda_star(p) if 0.0 < p < 1.0 else None
        asym = q_asymptotic(p) if p not in (0.0, 0.5, 1.0) else None
        gls = gls_norm(p)
        rows.append({
            "p": p,
            "q_norm": q,
            "lambda_star": lam0,
            "q_asymptotic": asym,
            "gls_norm": gls,
        })
    if args.format == "json":
        _emit(json.dumps(rows, indent=2))
    else:
        header = "p,q_norm,lambda_star,q_asymptotic,gls_norm"
        lines = [header] + [
            ",".join(_fmt17(r[k]) for k in
                     ("p", "q_norm", "lambda_star", "q_asymptotic", "gls_norm"))
            for r in rows
        ]
        _emit("\n".join(lines))
    return _EXIT_OK


def _cmd_bound(args: argparse.Namespace) -> int:
    if args.spec is not None:
        if args.coeffs is not None or args.probs is not None:
            raise _UsageError("give either a spec file or --coeffs/--probs, not both")
        s = _read_sum_spec(args.spec)
    else:
        if args.probs is None:
            raise _UsageError("need a sum: either a spec file or --probs")
        probs = _parse_floats(args.probs)
        coeffs = _parse_floats(args.coeffs) if args.coeffs else [1.0] * len(probs)
        s = WeightedIndicatorSum(coeffs, probs, independent=not args.dependent)
    if args.x_grid is not None:
        xs = _parse_grid(args.x_grid)
    else:
        hi = s.abs_range
        xs = _parse_grid(f"0:{hi}:17")
    report = build_bound_report(
        s,
        xs,
        seed=args.seed,
        mc_samples=args.mc_samples,
        exact_required=args.exact_required,
    )
    if not s.independent:
        _note("note: dependent sum, triangle bound only (no exact/MC columns)")
    _emit(report_to_json(report) if args.format == "json" else report_to_csv(report))
    return _EXIT_OK


def _verify_kwargs(args: argparse.Namespace, suite: str) -> dict:
    kwargs: dict = {}
    if args.tol is not None:
        if suite == "argmax":
            kwargs["tol_arg"] = args.tol
        else:
            kwargs["tol"] = args.tol
    if args.seed is not None and suite == "domination":
        kwargs["seed"] = args.seed
    if args.grid is not None:
        parts = args.grid.split(":")
        try:
            counts = [int(tok) for tok in parts]
        except ValueError:
            raise _UsageError(f"--grid must be integer counts, got {args.grid!r}") from None
        if suite == "kearns-saul":
            kwargs["p_count"] = counts[0]
            if len(counts) > 1:
                kwargs["lambda_count"] = counts[1]
        elif suite in ("sharpness", "argmax"):
            n = counts[0]
            ps = [(k + 1) / (n + 1) for k in range(n)]
            if suite == "argmax":
                ps = [p for p in ps if p != 0.5]
            kwargs["p_values"] = ps
        elif suite == "domination":
            kwargs["n_random"] = counts[0]
            if len(counts) > 1:
                kwargs["grid_points"] = counts[1]
    return kwargs


def _cmd_verify(args: argparse.Namespace) -> int:
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    results: list[SweepResult] = []
    for name in suites:
        results.append(run_suite(name, **_verify_kwargs(args, name)))
    if args.format == "json":
        _emit(json.dumps(
            [
                {
                    "suite": r.suite,
                    "passed": r.passed,
                    "worst": r.worst,
                    "witness": r.witness,
                    "detail": r.detail,
                }
                for r in results
            ],
            indent=2,
        ))
    else:
        lines = ["suite,passed,worst,witness"]
        for r in results:
            witness = ";".join(f"{k}={v:.6g}" if isinstance(v, float) else f"{k}={v}"
                               for k, v in r.witness.items())
            lines.append(f"{r.suite},{str(r.passed).lower()},{_fmt17(r.worst)},{witness}")
        _emit("\n".join(lines))
    for r in results:
        _note(r.summary())
    return _EXIT_OK if all(r.passed for r in results) else _EXIT_VERIFY_FAIL


def _cmd_example32(args: argparse.Namespace) -> int:
    n = args.n
    if n < 1:
        raise _UsageError(f"need n >= 1, got {n}")
    xs = _parse_grid(args.x_grid)
    kept = [x for x in xs if x > 0.0]
    if len(kept) < len(xs):
        _note("note: dropped x <= 0 grid points (ratio undefined at 0)")
    table = poisson_binomial_table([0.5] * n)
    rn = math.sqrt(n)
    rows = []
    for x in kept:
        tail = exact_tail(table, x * rn / 2.0, side="upper")
        gauss = hoeffding_reference_tail(n, x)
        rows.append({
            "x": x,
            "scaled_tail": tail,
            "gauss_bound": gauss,
            "ratio": tail * x * math.exp(x * x / 2.0),
        })
    if args.format == "json":
        _emit(json.dumps(rows, indent=2))
    else:
        lines = ["x,scaled_tail,gauss_bound,ratio"] + [
            ",".join(_fmt17(r[k]) for k in ("x", "scaled_tail", "gauss_bound", "ratio"))
            for r in rows
        ]
        _emit("\n".join(lines))
    return _EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subgauss",
        description="Exact subgaussian norms of centered indicators and "
                    "tail bounds for their weighted sums.",
    )
    parser.add_argument("--version", action="version", version=f"subgauss {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("csv", "json"), default="csv",
                       help="output format (default csv)")

    p_q = sub.add_parser("q", help="norm table over a probability grid")
    p_q.add_argument("-p", "--p", default=None,
                     help="comma-separated probabilities (overrides --grid)")
    p_q.add_argument("--grid", default="0:1:21",
                     help="probability grid start:stop:count (default 0:1:21)")
    add_format(p_q)
    p_q.set_defaults(fn=_cmd_q)

    p_b = sub.add_parser("bound", help="tail-bound report for a weighted sum")
    p_b.add_argument("spec", nargs="?", default=None,
                     help="sum spec file: optional 'independent: true|false' "
                          "header, then one 'coefficient probability' per line, "
                          "'#' comments")
    p_b.add_argument("--coeffs", default=None, help="inline comma-separated coefficients")
    p_b.add_argument("--probs", default=None, help="inline comma-separated probabilities")
    p_b.add_argument("--dependent", action="store_true",
                     help="declare the inline terms arbitrarily dependent")
    p_b.add_argument("--x-grid", default=None,
                     help="thresholds start:stop:count or comma list "
                          "(default 0:ess-sup:17)")
    p_b.add_argument("--seed", type=int, default=0, help="Monte Carlo seed (default 0)")
    p_b.add_argument("--mc-samples", type=int, default=200_000,
                     help="Monte Carlo sample count (default 200000)")
    p_b.add_argument("--exact-required", action="store_true",
                     help="fail (exit 3) instead of falling back to Monte Carlo")
    add_format(p_b)
    p_b.set_defaults(fn=_cmd_bound)

    p_v = sub.add_parser("verify", help="run verification sweeps")
    p_v.add_argument("--suite", choices=(*SUITES, "all"), default="all",
                     help="which sweep to run (default all)")
    p_v.add_argument("--tol", type=float, default=None, help="tolerance override")
    p_v.add_argument("--seed", type=int, default=None,
                     help="seed override (domination suite)")
    p_v.add_argument("--grid", default=None,
                     help="grid-size override; kearns-saul P:L, domination N:X, "
                          "sharpness/argmax N")
    add_format(p_v)
    p_v.set_defaults(fn=_cmd_verify)

    p_e = sub.add_parser("example32",
                         help="normalized fair-coin sum vs the exp(-x^2/2) bound")
    p_e.add_argument("--n", type=int, default=4096, help="number of coins (default 4096)")
    p_e.add_argument("--x-grid", default="0.5:3:6",
                     help="threshold grid start:stop:count or comma list "
                          "(default 0.5:3:6)")
    add_format(p_e)
    p_e.set_defaults(fn=_cmd_example32)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _UsageError as exc:
        _note(f"error: {exc}")
        return _EXIT_USAGE
    except CapExceededError as exc:
        _note(f"infeasible: {exc}")
        return _EXIT_INFEASIBLE
    except (DomainError, SubgaussError, ValueError) as exc:
        _note(f"error: {exc}")
        return _EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
