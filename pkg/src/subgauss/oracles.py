"""Exact and Monte Carlo reference oracles for weighted indicator sums.

Everything the bound side of the package claims is checkable against the
routines here: exact Poisson-binomial laws by dynamic-programming
convolution, brute-force enumeration of small weighted sums, seeded Monte
Carlo tail estimates with Wilson confidence intervals, the golden-section
argmax used to verify extremal points, and the exact log-MGF of an
independent weighted sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np

from .core import ProbabilityLike, as_probability, log_mgf_values
from .errors import CapExceededError, DependenceError, DomainError
from .optimize import GoldenSectionResult, golden_section_argmax
from .parallel import ordered_map
from .sums import WeightedIndicatorSum

__all__ = [
    "DistributionTable",
    "McEstimate",
    "Side",
    "WILSON_Z_99",
    "MC_BLOCK_SIZE",
    "poisson_binomial_table",
    "exact_tail",
    "tail_curve",
    "exhaustive_outcome_table",
    "exhaustive_weighted_tail",
    "monte_carlo_tail",
    "wilson_interval",
    "golden_section_argmax",
    "GoldenSectionResult",
    "exact_sum_log_mgf",
    "sum_log_mgf_curve",
]

Side = Literal["upper", "lower", "max_both"]

# Two-sided 99% normal quantile, Phi^-1(0.995), frozen.
WILSON_Z_99 = 2.5758293035489004

# Samples per logical Monte Carlo block.  Fixed by contract: substreams are
# derived per block, so estimates depend only on (seed, n_samples) and never
# on how the blocks are batched or scheduled.
MC_BLOCK_SIZE = 65536

_EXHAUSTIVE_CAP = 20
_DP_CAP = 100_000

_MASS_TOL = 1e-12
_MEAN_TOL = 1e-10


@dataclass(frozen=True)
class DistributionTable(object):
    """A finite centered law: strictly increasing support with point masses.

    Masses must be nonnegative and sum to 1 within 1e-12; the mean must
    vanish within 1e-10.  Arrays are stored read-only.
    """

    support: np.ndarray
    masses: np.ndarray

    def __post_init__(self) -> None:
        support = np.asarray(self.support, dtype=float)
        masses = np.asarray(self.masses, dtype=float)
        if support.ndim != 1 or support.shape != masses.shape or support.size == 0:
            raise DomainError("support and masses must be matching 1-d arrays")
        if not np.all(np.isfinite(support)):
            raise DomainError("support must be finite")
        if np.any(np.diff(support) <= 0.0):
            raise DomainError("support must be strictly increasing")
        if np.any(masses < 0.0) or not np.all(np.isfinite(masses)):
            raise DomainError("masses must be finite and nonnegative")
        total = math.fsum(masses.tolist())
        if abs(total - 1.0) > _MASS_TOL:
            raise DomainError(f"masses sum to {total!r}, not 1 within {_MASS_TOL}")
        mean = math.fsum((support * masses).tolist())
        if abs(mean) > _MEAN_TOL:
            raise DomainError(f"table mean {mean!r} exceeds the {_MEAN_TOL} tolerance")
        support.setflags(write=False)
        masses.setflags(write=False)
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "masses", masses)

    @property
    def n_atoms(self) -> int:
        return int(self.support.size)

    def total_mass(self) -> float:
        return math.fsum(self.masses.tolist())

    def mean(self) -> float:
        return math.fsum((self.support * self.masses).tolist())


@dataclass(frozen=True)
class McEstimate(object):
    """A Monte Carlo proportion with its Wilson-score 99% interval."""

    point: float
    ci_low: float
    ci_high: float
    n_samples: int
    seed: int

    def covers(self, value: float) -> bool:
        return self.ci_low <= value <= self.ci_high


def poisson_binomial_table(
    probs: Iterable[ProbabilityLike],
    cap: int = _DP_CAP,
) -> DistributionTable:
    """Exact law of a sum of independent centered indicators, unit weights.

    Convolves term by term (O(n^2) dynamic program) in float64.  The
    support is {k - sum p(i) : k = 0..n} with the shift accumulated by
    fsum, so atoms line up bitwise with the enumeration oracle.
    """
    ps = [as_probability(p).p for p in probs]
    n = len(ps)
    if n < 1:
        raise DomainError("need at least one probability")
    if n > cap:
        raise CapExceededError(f"n = {n} exceeds the DP cap {cap}")

    mass = np.zeros(n + 1, dtype=float)
    mass[0] = 1.0
    for k, p in enumerate(ps):
        q = 1.0 - p
        mass[k + 1] = mass[k] * p
        if k > 0:
            mass[1:k + 1] = mass[1:k + 1] * q + mass[:k] * p
        mass[0] *= q

    shift = math.fsum(ps)
    support = np.arange(n + 1, dtype=float) - shift
    return DistributionTable(support, mass)


def _side_masses(
    support: np.ndarray, masses: np.ndarray, x: float, side: Side, strict: bool
) -> np.ndarray:
    if side == "upper":
        sel = support > x if strict else support >= x
    elif side == "lower":
        sel = support < -x if strict else support <= -x
    else:
        raise DomainError(f"unknown side {side!r}")
    return masses[sel]


def exact_tail(
    table: DistributionTable, x: float, side: Side = "max_both", strict: bool = True
) -> float:
    """Exact tail mass of a tabulated law.

    upper is P(S > x), lower is P(S < -x) (the mirrored threshold, so
    max_both is exactly the quantity the subgaussian tail bound controls).
    Comparisons are strict by default; strict=False gives the weak variants
    P(S >= x) and P(S <= -x).  Selected masses are accumulated
    smallest-first with compensated summation.
    """
    if math.isnan(x):
        raise DomainError("threshold must not be NaN")
    if side == "max_both":
        return max(
            exact_tail(table, x, "upper", strict),
            exact_tail(table, x, "lower", strict),
        )
    sel = _side_masses(table.support, table.masses, x, side, strict)
    if sel.size == 0:
        return 0.0
    return math.fsum(np.sort(sel).tolist())


def tail_curve(
    table: DistributionTable, xs, side: Side = "max_both", strict: bool = True
) -> np.ndarray:
    """Vectorized tails over a threshold grid via cumulative sums.

    Accumulates from the extreme ends of the support inward (the small
    masses first for unimodal laws); agrees with exact_tail to a few 1e-16
    absolute, which is what the bound-domination sweeps need.  Use
    exact_tail for single thresholds where exact rounding matters.
    """
    xs = np.asarray(xs, dtype=float)
    if np.any(np.isnan(xs)):
        raise DomainError("thresholds must not be NaN")
    support, masses = table.support, table.masses
    suffix = np.concatenate((np.cumsum(masses[::-1])[::-1], [0.0]))
    prefix = np.concatenate(([0.0], np.cumsum(masses)))
    sel = "right" if strict else "left"
    upper = suffix[np.searchsorted(support, xs, side=sel)]
    sel_lo = "left" if strict else "right"
    lower = prefix[np.searchsorted(support, -xs, side=sel_lo)]
    if side == "upper":
        return upper
    if side == "lower":
        return lower
    if side == "max_both":
        return np.maximum(upper, lower)
    raise DomainError(f"unknown side {side!r}")


def _enumerate_outcomes(s: WeightedIndicatorSum, cap: int) -> tuple[np.ndarray, np.ndarray]:
    """All 2^m outcome values and product probabilities of a small sum."""
    if not s.independent:
        raise DependenceError("enumeration requires independent terms")
    m = s.n_terms
    if m > cap:
        raise CapExceededError(f"m = {m} exceeds the enumeration cap {cap}")
    size = 1 << m
    idx = np.arange(size, dtype=np.uint32)
    raw = np.zeros(size, dtype=float)
    prob = np.ones(size, dtype=float)
    for j, (c, pr) in enumerate(zip(s.coeffs, s.probs)):
        bit = ((idx >> np.uint32(j)) & np.uint32(1)).astype(bool)
        raw += np.where(bit, c, 0.0)
        prob *= np.where(bit, pr.p, 1.0 - pr.p)
    shift = math.fsum(c * pr.p for c, pr in zip(s.coeffs, s.probs))
    return raw - shift, prob


def exhaustive_outcome_table(s: WeightedIndicatorSum, cap: int = _EXHAUSTIVE_CAP) -> DistributionTable:
    """Exact law of a small independent weighted sum by full enumeration.

    Atoms with bitwise-equal values are merged.  For unit weights the atom
    values match poisson_binomial_table exactly, which is what makes the
    two oracles comparable at strict thresholds.
    """
    values, probs = _enumerate_outcomes(s, cap)
    support, inverse = np.unique(values, return_inverse=True)
    masses = np.bincount(inverse, weights=probs, minlength=support.size)
    return DistributionTable(support, masses)


def exhaustive_weighted_tail(
    s: WeightedIndicatorSum,
    x: float,
    side: Side = "max_both",
    strict: bool = True,
    cap: int = _EXHAUSTIVE_CAP,
) -> float:
    """Exact tail of a small independent weighted sum (max of both sides).

    Enumerates all 2^m outcomes with exact product probabilities; m is
    capped (default 20) because the enumeration is exponential.
    """
    if math.isnan(x):
        raise DomainError("threshold must not be NaN")
    values, probs = _enumerate_outcomes(s, cap)

    def one_side(sd: Side) -> float:
        sel = _side_masses(values, probs, x, sd, strict)
        return math.fsum(np.sort(sel).tolist()) if sel.size else 0.0

    if side == "max_both":
        return max(one_side("upper"), one_side("lower"))
    return one_side(side)


def wilson_interval(successes: int, n: int, z: float = WILSON_Z_99) -> tuple[float, float]:
    """Wilson-score interval for a binomial proportion."""
    if n < 1 or successes < 0 or successes > n:
        raise DomainError(f"invalid counts {successes}/{n}")
    phat = successes / n
    z2n = z * z / n
    denom = 1.0 + z2n
    center = (phat + 0.5 * z2n) / denom
    half = z * math.sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n)) / denom
    # at the boundary counts the exact endpoint is phat itself; the sqrt
    # rounds center - half to ~1e-17 off, on the wrong side of phat
    lo = 0.0 if successes == 0 else max(center - half, 0.0)
    hi = 1.0 if successes == n else min(center + half, 1.0)
    return (lo, hi)


def monte_carlo_tail(
    s: WeightedIndicatorSum,
    x: float,
    n_samples: int,
    seed: int,
    side: Side = "max_both",
) -> McEstimate:
    """Seeded Monte Carlo tail estimate with a Wilson-score 99% interval.

    Sampling runs in fixed blocks of MC_BLOCK_SIZE, each drawn from its own
    Philox substream keyed by (seed, block index).  Philox is a counter
    based generator whose bitstream numpy keeps stable across releases, so
    the estimate is a pure function of (seed, n_samples) regardless of how
    blocks are batched across workers; the same call is bit-identical every
    time.

    For max_both the point estimate is the larger one-sided proportion and
    the interval is the Wilson interval of that side's count; the one-sided
    variants are plain binomial proportions.
    """
    if not s.independent:
        raise DependenceError("Monte Carlo sampling requires independent terms")
    if math.isnan(x):
        raise DomainError("threshold must not be NaN")
    if n_samples < 100:
        raise DomainError(f"need n_samples >= 100, got {n_samples}")
    if int(seed) != seed or seed < 0:
        raise DomainError(f"seed must be a nonnegative integer, got {seed!r}")
    seed = int(seed)

    coeffs = np.asarray(s.coeffs, dtype=float)
    ps = np.asarray(s.p_values, dtype=float)
    shift = math.fsum(c * p for c, p in zip(s.coeffs, s.p_values))
    n_blocks = (n_samples + MC_BLOCK_SIZE - 1) // MC_BLOCK_SIZE

    def run_block(block: int) -> tuple[int, int]:
        rows = min(MC_BLOCK_SIZE, n_samples - block * MC_BLOCK_SIZE)
        rng = np.random.Generator(
            np.random.Philox(np.random.SeedSequence((seed, block)))
        )
        u = rng.random((rows, coeffs.size))
        vals = (u < ps) @ coeffs - shift
        return int(np.count_nonzero(vals > x)), int(np.count_nonzero(vals < -x))

    counts = ordered_map(run_block, range(n_blocks))
    up = sum(c[0] for c in counts)
    lo = sum(c[1] for c in counts)
    if side == "upper":
        k = up
    elif side == "lower":
        k = lo
    elif side == "max_both":
        k = max(up, lo)
    else:
        raise DomainError(f"unknown side {side!r}")
    ci_low, ci_high = wilson_interval(k, n_samples)
    return McEstimate(k / n_samples, ci_low, ci_high, n_samples, seed)


def exact_sum_log_mgf(s: WeightedIndicatorSum, lam) -> np.ndarray:
    """Exact log-MGF of an independent weighted sum at points lam.

    log E exp(t * nu) = sum over j of log-MGF of the j-th centered
    indicator at c(j) * t.  Identical terms are grouped, so iid sums cost
    one vectorized evaluation.
    """
    if not s.independent:
        raise DependenceError("the sum log-MGF factorizes only under independence")
    lam = np.asarray(lam, dtype=float)
    groups: dict[tuple[float, float], int] = {}
    for c, pr in zip(s.coeffs, s.probs):
        key = (c, pr.p)
        groups[key] = groups.get(key, 0) + 1
    total = np.zeros_like(lam)
    for (c, p), count in groups.items():
        total += count * log_mgf_values(p, c * lam)
    return total


def sum_log_mgf_curve(s: WeightedIndicatorSum, scale: float = 1.0):
    """LogMgfCurve of scale * sum, with its exact variance attached."""
    from .core import LogMgfCurve  # local import avoids a cycle at module load

    scaled = s.scaled(scale) if scale != 1.0 else s
    variance = math.fsum(
        (c * c) * pr.p * (1.0 - pr.p) for c, pr in zip(scaled.coeffs, scaled.probs)
    )
    return LogMgfCurve(
        fn=lambda lam: exact_sum_log_mgf(scaled, lam),
        variance=variance,
        lambda_hint=None,
    )
