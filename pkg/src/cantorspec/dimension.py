"""Interval model of the Cantor set, gap ratios, and dimension estimators.

The set attached to (B, D) rescales to a nested family of closed intervals
in [0, 1]: each parent splits into d_{n+1} children of equal length
r_{n+1} |parent| separated by equal gaps, first child left-aligned, last
right-aligned.  The ratios r_n are quotients of the tails
sum_{j>=n} (d_j - 1)/(d_j rho_j), computed here as exact rationals from
certified truncations.  The Hausdorff dimension is the liminf of
sum ln d_j / sum ln(1/r_j); a box-count fit over the constructed intervals
cross-checks it, and a windowed-count fit estimates the upper Beurling
dimension of a frequency set.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .core import BudgetExceededError, ScalePair
from .spectra import SpectrumLevel, TreeMapping, enumerate_level


def _tail_numerators(pair: ScalePair, n_max: int, rel_tol: float = 1e-15) -> tuple[list[int], int, int]:
    """Integer numerators U_n = rho_{M+1} * sum_{j=n..M} (d_j-1)/(d_j rho_j).

    d_j rho_j divides rho_{M+1}, so the truncated tails are exact integers
    over the common denominator rho_{M+1}.  M is grown until the omitted tail
    (< 2/rho_{M+1} by geometric domination) is below rel_tol relative to the
    smallest tail used, i.e. until U_{n_max+1} >= 2/rel_tol.
    Returns (U_1..U_{n_max+1}, rho_{M+1}, M).
    """
    need = math.ceil(2.0 / rel_tol)
    m = n_max + 4
    while True:
        rho = pair.rho_list(m)  # rho_1..rho_{m+1}
        rho_top = rho[m]
        u = [0] * (m + 2)
        for j in range(m, 0, -1):
            d_j = pair.d(j)
            u[j] = u[j + 1] + (d_j - 1) * (rho_top // (d_j * rho[j - 1]))
        if u[n_max + 1] >= need:
            return u[1: n_max + 2], rho_top, m
        m += 8


def gap_ratios(pair: ScalePair, n_max: int, rel_tol: float = 1e-15) -> list[Fraction]:
    """Ratios r_1..r_{n_max} as exact rationals of certified truncations.

    Each r_n = U_{n+1}/U_n is accurate to rel_tol relative error against the
    untruncated ratio (the shared omitted tail only lowers the quotient), and
    r_n d_n <= 1 holds for every returned ratio.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    u, _, _ = _tail_numerators(pair, n_max, rel_tol)
    ratios = []
    for n in range(1, n_max + 1):
        r = Fraction(u[n], u[n - 1])
        if r * pair.d(n) > 1:
            raise AssertionError(f"r_{n} d_{n} > 1; inadmissible pair slipped through")
        ratios.append(r)
    return ratios


def rescale_constant(pair: ScalePair, rel_tol: float = 1e-15) -> Fraction:
    """The factor sum_n (d_n - 1)/(d_n rho_n) mapping the unit-interval model
    onto the pair's Cantor set, as a certified truncation."""
    u, rho_top, _ = _tail_numerators(pair, 1, rel_tol)
    return Fraction(u[0], rho_top)


@dataclass(frozen=True)
class IntervalFamily:
    """Closed intervals J_word for every word up to ``depth``, exact endpoints.

    ``levels[n]`` lists (word, left, right) for all length-n words in
    lexicographic order; ``levels[0]`` is the root [0, 1].  ``rescale`` maps
    the model onto the pair's Cantor set.
    """

    pair: ScalePair
    depth: int
    levels: tuple[tuple[tuple[tuple[int, ...], Fraction, Fraction], ...], ...]
    ratios: tuple[Fraction, ...]
    rescale: Fraction

    def intervals(self, n: int):
        return self.levels[n]

    def length(self, n: int) -> Fraction:
        word, left, right = self.levels[n][0]
        return right - left


def build_intervals(pair: ScalePair, depth: int, budget: int = 10**6) -> IntervalFamily:
    """Construct the interval family down to ``depth`` in exact arithmetic."""
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    count = 1
    for n in range(1, depth + 1):
        count *= pair.d(n)
        if count > budget:
            raise BudgetExceededError(
                f"depth {depth} needs {count}+ intervals, over the budget of {budget}",
                required=count)
    ratios = gap_ratios(pair, depth) if depth else []
    levels = [(((), Fraction(0), Fraction(1)),)]
    for n in range(1, depth + 1):
        d = pair.d(n)
        r = ratios[n - 1]
        children = []
        for word, left, right in levels[-1]:
            parent_len = right - left
            child_len = r * parent_len
            gap = (parent_len - d * child_len) / (d - 1)  # >= 0 since r d <= 1
            for k in range(d):
                lo = left + k * (child_len + gap)
                children.append((word + (k,), lo, lo + child_len))
        levels.append(tuple(children))
    return IntervalFamily(pair=pair, depth=depth, levels=tuple(levels),
                          ratios=tuple(ratios), rescale=rescale_constant(pair))


@dataclass(frozen=True)
class DimensionFormula:
    """Partial ratios s_N = sum_{j<=N} ln d_j / sum_{j<=N} ln(1/r_j)."""

    partials: tuple[tuple[int, float], ...]
    liminf_proxy: float    # infimum over the trailing window [N/2, N]
    n_max: int


def _log_fraction(fr: Fraction) -> float:
    # log of a positive rational with huge terms, via integer logs
    return math.log(fr.numerator) - math.log(fr.denominator)


def hausdorff_dim_formula(pair: ScalePair, n_max: int) -> DimensionFormula:
    """Dimension ratios of the interval model, with a trailing-window infimum.

    A true liminf is not computable from finitely many levels; the infimum
    over N in [n_max/2, n_max] is reported as its proxy and stabilizes
    whenever the level ratios converge.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    ratios = gap_ratios(pair, n_max)
    num = 0.0
    den = 0.0
    partials = []
    for n in range(1, n_max + 1):
        num += math.log(pair.d(n))
        den += -_log_fraction(ratios[n - 1])
        if n >= 2:
            partials.append((n, num / den))
    window_start = max(2, n_max // 2)
    liminf_proxy = min(s for n, s in partials if n >= window_start)
    return DimensionFormula(partials=tuple(partials), liminf_proxy=liminf_proxy, n_max=n_max)


@dataclass(frozen=True)
class BoxCountFit:
    slope: float
    residual: float             # RMS residual of the log-log fit
    levels_used: int
    interval_count: int         # intervals at the deepest level


def _least_squares(xs: Sequence[float], ys: Sequence[float]) -> tuple[float, float]:
    x = np.asarray(xs)
    y = np.asarray(ys)
    xbar, ybar = x.mean(), y.mean()
    denom = float(np.sum((x - xbar) ** 2))
    slope = float(np.sum((x - xbar) * (y - ybar)) / denom) if denom > 0 else 0.0
    fit = ybar + slope * (x - xbar)
    residual = float(np.sqrt(np.mean((y - fit) ** 2)))
    return slope, residual


def box_counting_dim(pair: ScalePair, depth: int, budget: int = 10**6) -> BoxCountFit:
    """Log-log slope of interval count against inverse interval length.

    Counts and lengths are read off the constructed family rather than from
    the defining products, so this is an independent cross-check of the
    dimension formula.  Needs at least 2 levels for a fit.
    """
    if depth < 2:
        raise ValueError(f"depth must be >= 2 for a slope fit, got {depth}")
    family = build_intervals(pair, depth, budget=budget)
    xs = []
    ys = []
    for n in range(1, depth + 1):
        length = family.length(n)
        xs.append(-_log_fraction(length))          # log(1/length)
        ys.append(math.log(len(family.intervals(n))))
    slope, residual = _least_squares(xs, ys)
    return BoxCountFit(slope=slope, residual=residual, levels_used=depth,
                       interval_count=len(family.intervals(depth)))


@dataclass(frozen=True)
class BeurlingEstimate:
    slope: float
    counts: tuple[tuple[float, int], ...]   # (window half-width h, sup count)


def beurling_upper_dim(level_or_elements, window_grid: Sequence[float] | None = None) -> BeurlingEstimate:
    """Windowed-count slope estimating the upper Beurling dimension.

    For each half-width h, takes the supremum over window centers drawn from
    the set itself of #(set intersect [x-h, x+h]), then fits log sup-count
    against log h.  A finite-window heuristic for a limsup: evidence, not
    proof.
    """
    if isinstance(level_or_elements, SpectrumLevel):
        elements = list(level_or_elements.elements)
    else:
        elements = sorted(int(x) for x in level_or_elements)
    if not elements:
        raise ValueError("empty frequency set")
    span = elements[-1] - elements[0]
    if window_grid is None:
        # start wide enough that windows hold several points, stop before
        # edge saturation flattens the counts
        h = max(1.0, span / 64.0)
        window_grid = []
        while h <= max(1.0, span / 4.0):
            window_grid.append(h)
            h *= 2.0
        if not window_grid:
            window_grid = [1.0]
    hs = sorted(set(float(h) for h in window_grid))
    if any(h <= 0 for h in hs):
        raise ValueError("window grid must be positive")
    counts = []
    for h in hs:
        sup = 0
        for x in elements:
            lo = bisect.bisect_left(elements, x - h)
            hi = bisect.bisect_right(elements, x + h)
            sup = max(sup, hi - lo)
        counts.append((h, sup))
    if len(hs) >= 2:
        slope, _ = _least_squares([math.log(h) for h, _ in counts],
                                  [math.log(c) for _, c in counts])
    else:
        slope = 0.0
    return BeurlingEstimate(slope=slope, counts=tuple(counts))


@dataclass(frozen=True)
class DimensionComparison:
    beurling: float
    hausdorff: float
    slack: float
    passed: bool
    level: int


def beurling_vs_hausdorff(tm: TreeMapping, level: int, n_max: int = 40,
                          slack: float = 0.1, budget: int = 10**6) -> DimensionComparison:
    """Check the counting estimate against the formula value plus slack.

    The window grid is tied to the scales (h_j = rho_j / 2), where the
    windowed counts of canonical spectra are exactly the level cardinalities.
    """
    pair = tm.pair
    lev = enumerate_level(tm, level, budget=budget)
    rho = pair.rho_list(level)
    grid = [rho[j] / 2.0 for j in range(1, level) if rho[j].bit_length() < 500]
    est = beurling_upper_dim(lev, window_grid=grid)
    formula = hausdorff_dim_formula(pair, n_max).liminf_proxy
    return DimensionComparison(beurling=est.slope, hausdorff=formula, slack=slack,
                               passed=est.slope <= formula + slack, level=level)
