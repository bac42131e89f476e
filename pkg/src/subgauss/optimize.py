"""Golden-section search for the maximum of a unimodal scalar function."""

from __future__ import annotations

import math
from typing import Callable, NamedTuple

# 1/phi and 1/phi^2, the classic section ratios.
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_INVPHI2 = (3.0 - math.sqrt(5.0)) / 2.0


class GoldenSectionResult(NamedTuple):
    argmax: float
    value: float
    iterations: int
    width: float
    converged: bool


def golden_section_argmax(
    fn: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-12,
    max_iter: int = 200,
) -> GoldenSectionResult:
    """Locate the maximizer of a unimodal ``fn`` on [lo, hi].

    Returns the bracket midpoint and the best function value seen, which
    for a unimodal function is within ``tol`` of the true argmax once
    ``converged`` is True.  Non-convergence is reported through the
    ``converged`` flag together with the achieved interval ``width``;
    callers that require convergence should check the flag.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)) or hi < lo:
        raise ValueError(f"invalid bracket [{lo}, {hi}]")
    a, b = lo, hi
    h = b - a
    if h <= tol:
        mid = 0.5 * (a + b)
        return GoldenSectionResult(mid, fn(mid), 0, h, True)

    c = a + _INVPHI2 * h
    d = a + _INVPHI * h
    fc = fn(c)
    fd = fn(d)
    best_x, best_f = (c, fc) if fc >= fd else (d, fd)

    iterations = 0
    for iterations in range(1, max_iter + 1):
        if fc >= fd:
            b, d, fd = d, c, fc
            h = b - a
            c = a + _INVPHI2 * h
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + _INVPHI * h
            fd = fn(d)
        if fc >= best_f:
            best_x, best_f = c, fc
        if fd >= best_f:
            best_x, best_f = d, fd
        if h <= tol:
            return GoldenSectionResult(best_x, best_f, iterations, h, True)
    return GoldenSectionResult(best_x, best_f, iterations, h, False)
