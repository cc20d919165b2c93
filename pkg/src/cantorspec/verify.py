"""The three verification pillars: orthogonality, partition identity, completeness.

Orthogonality of the exponentials at a frequency set is equivalent to the
product transform vanishing at every pairwise difference; that is decided in
exact integer arithmetic.  The level-L partition identity
sum_delta |prod_{n<=L} G_n((xi + lambda)/(d_n rho_n))|^2 = 1 holds for every
real xi and every valid tree mapping, so its numerical defect must sit at
roundoff scale.  Completeness is certified only as a trend: the partial sums
Q_L(xi) = sum_{lambda in Lambda_L} |muhat(xi + lambda)|^2 increase with L and
stay below 1 plus the accumulated certified evaluation slack.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import BudgetExceededError, ScalePair
from .fourier import (FilterFamily, eval_H, eval_H_array, eval_filter,
                      mu_hat, mu_hat_array, mu_hat_exact_zero, uniform_family)
from .spectra import SpectrumLevel, TreeMapping, enumerate_level, word_count

_PAIRWISE_CUTOFF = 600  # above this, all-pairs scanning switches to the residue tree


@dataclass(frozen=True)
class OrthogonalityReport:
    passed: bool
    element_count: int
    pair_count: int
    violations: tuple[tuple[int, int], ...]  # capped; sorted
    violation_count: int
    method: str


def _elements_of(level_or_elements) -> list[int]:
    if isinstance(level_or_elements, SpectrumLevel):
        return list(level_or_elements.elements)
    return sorted(int(x) for x in level_or_elements)


def _pairwise_orthogonality(elements: list[int], pair: ScalePair, cap: int):
    violations = []
    count = 0
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            if not mu_hat_exact_zero(pair, elements[j] - elements[i]).is_zero:
                count += 1
                if len(violations) < cap:
                    violations.append((elements[i], elements[j]))
    return violations, count


def _grouped_orthogonality(elements: list[int], pair: ScalePair, cap: int):
    """Residue-tree equivalent of the all-pairs divisibility scan.

    For two frequencies with difference nu and first undecided level n (all
    earlier levels gave d_k | nu/rho_k and b_k | nu/rho_k), write u =
    (x - y)/rho_n.  The transform vanishes at nu iff d_n does not divide u
    (witness at level n) or b_n | u and a later level witnesses.  If d_n | u
    but b_n does not divide u, no level at all can witness and the pair
    violates orthogonality.  Grouping by residues mod b_n classifies every
    pair at once, and same-residue groups recurse on u // b_n; differences
    shrink by a factor b_n >= 4 per level, so the recursion terminates.
    Exact integer arithmetic throughout, same verdict and violation set as
    the literal per-pair scan.
    """
    violations = []
    count = 0

    def recurse(values: list[tuple[int, int]], n: int):
        # values: (current residue-reduced value, original frequency)
        nonlocal count
        if len(values) < 2:
            return
        b_n, d_n = pair.b(n), pair.d(n)
        groups: dict[int, list[tuple[int, int]]] = {}
        for v, orig in values:
            groups.setdefault(v % b_n, []).append((v, orig))
        residues = sorted(groups)
        for i, r in enumerate(residues):
            for r2 in residues[i + 1:]:
                if (r2 - r) % d_n == 0:
                    # d_n | u but b_n does not divide u: no vanishing level exists
                    for _, x in groups[r]:
                        for _, y in groups[r2]:
                            count += 1
                            if len(violations) < cap:
                                violations.append((min(x, y), max(x, y)))
        for r in residues:
            grp = groups[r]
            if len(grp) > 1:
                recurse([(v // b_n, orig) for v, orig in grp], n + 1)

    recurse([(x, x) for x in elements], 1)
    return violations, count


def orthogonality_check(level_or_elements, pair: ScalePair, max_elements: int = 4096,
                        method: str = "auto", violation_cap: int = 256) -> OrthogonalityReport:
    """Exact pairwise orthogonality of a frequency set.

    Every unordered pair of distinct frequencies must have its difference
    annihilated by the transform (decided by :func:`mu_hat_exact_zero`).
    ``method='pairwise'`` runs that scan literally; ``method='grouped'`` runs
    the equivalent residue-tree classification, which is linear in the set
    size per level and is required for large sets; ``'auto'`` picks by size.
    No floating point either way.
    """
    elements = _elements_of(level_or_elements)
    m = len(elements)
    if m > max_elements:
        raise BudgetExceededError(
            f"{m} elements need {m * (m - 1) // 2} pairwise checks, over the "
            f"budget implied by max_elements={max_elements}",
            required=m * (m - 1) // 2)
    if len(set(elements)) != m:
        raise ValueError("frequency set contains duplicates; deduplicate and "
                         "treat duplicates as orthogonality violations upstream")
    if method == "auto":
        method = "pairwise" if m <= _PAIRWISE_CUTOFF else "grouped"
    if method == "pairwise":
        violations, count = _pairwise_orthogonality(elements, pair, violation_cap)
    elif method == "grouped":
        violations, count = _grouped_orthogonality(elements, pair, violation_cap)
    else:
        raise ValueError(f"unknown method {method!r}")
    return OrthogonalityReport(passed=count == 0, element_count=m,
                               pair_count=m * (m - 1) // 2,
                               violations=tuple(sorted(violations)),
                               violation_count=count, method=method)


# ---------------------------------------------------------------------------
# Partition identity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PartitionResult:
    total: float
    defect: float
    level: int
    xi: float
    terms: int


def _level_weights_vectorized(pair: ScalePair, filters: FilterFamily, xi: float, level: int):
    # squared-modulus weights per word, expanded level by level; the factor
    # argument may drop multiples of d_n rho_n because every G_n is 1-periodic
    sigma = np.zeros(1, dtype=np.int64)
    weights = np.ones(1, dtype=float)
    rho_n = 1
    for n in range(1, level + 1):
        d = pair.d(n)
        digits = np.arange(d, dtype=np.int64)
        sigma = (sigma[:, None] + digits[None, :] * rho_n).reshape(-1)
        args = (xi + sigma.astype(float)) / float(d * rho_n)
        if filters.is_uniform(n):
            factors = eval_H_array(d, args)
        else:
            factors = eval_filter(np.asarray(filters.coefficients(n)), args)
        weights = (np.repeat(weights, d)) * np.abs(factors) ** 2
        rho_n *= pair.b(n)
    return weights


def _level_weights_python(tm: TreeMapping, filters: FilterFamily, xi: float, level: int):
    pair = tm.pair
    weights = []

    def walk(word, sigma, w, rho_n, n):
        if n > level:
            weights.append(w)
            return
        d = pair.d(n)
        g = None if filters.is_uniform(n) else np.asarray(filters.coefficients(n))
        for dig in range(d):
            child = word + (dig,)
            s = sigma + tm.tau(child) * rho_n
            arg = (xi + s) / (d * rho_n)
            f = eval_H(d, arg) if g is None else complex(eval_filter(g, np.array([arg]))[0])
            walk(child, s, w * abs(f) ** 2, rho_n * pair.b(n), n + 1)

    walk((), 0, 1.0, 1, 1)
    return np.asarray(weights)


def partition_identity(tm: TreeMapping, xi: float, level: int,
                       filters: FilterFamily | None = None, budget: int = 10**6) -> PartitionResult:
    """Defect of sum over level-L words of |prod_{n<=L} G_n(...)|^2 = 1.

    The identity telescopes through the QMF channel sums, holds exactly for
    every xi and every valid mapping, and is evaluated here by direct
    summation over the word tree.
    """
    pair = tm.pair
    if filters is None:
        filters = uniform_family(pair)
    count = word_count(pair, level)
    if count > budget:
        raise BudgetExceededError(
            f"level {level} needs {count} words, over the budget of {budget}", required=count)
    if not tm.table and pair.rho(level + 1) < 2**52:
        weights = _level_weights_vectorized(pair, filters, float(xi), level)
    else:
        weights = _level_weights_python(tm, filters, float(xi), level)
    total = float(np.sum(weights))
    return PartitionResult(total=total, defect=abs(total - 1.0), level=level,
                           xi=float(xi), terms=count)


# ---------------------------------------------------------------------------
# Completeness trend
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QRow:
    xi: float
    level: int
    q: float
    certified_slack: float
    monotone_ok: bool


@dataclass(frozen=True)
class CompletenessReport:
    rows: tuple[QRow, ...]
    l_max: int
    tol: float
    monotone: bool          # Q_{L+1} >= Q_L - 1e-12 at every grid point
    bounded: bool           # Q_L <= 1 + certified slack everywhere
    worst_gap: float        # max over the grid of 1 - Q_{L_max}
    worst_gap_xi: float

    def gaps(self) -> dict[float, float]:
        return {r.xi: 1.0 - r.q for r in self.rows if r.level == self.l_max}


_MONOTONE_SLACK = 1e-12


def completeness_Q(tm: TreeMapping, xi_grid: Sequence[float], l_max: int,
                   tol: float = 1e-10, budget: int = 10**6) -> CompletenessReport:
    """Partial completeness sums Q_L(xi) for L = 1..l_max on a grid in [0, 1/2].

    Each new frequency's |muhat(xi + lambda)|^2 is evaluated once with a
    certified truncation radius; Q_L accumulates those nonnegative terms, so
    the reported values are monotone in L by construction.  The certified
    slack per row is sum over terms of 2 r |v| + r^2, an upper bound for how
    far the reported Q may exceed the true partial sum.  Reduction order is
    fixed (frequencies sorted ascending), so reports are reproducible.
    """
    pair = tm.pair
    xis = [float(x) for x in xi_grid]
    for x in xis:
        if not 0.0 <= x <= 0.5:
            raise ValueError(f"grid point {x} outside [0, 1/2]")
    seen: set[int] = set()
    new_per_level: list[list[int]] = []
    for level in range(1, l_max + 1):
        lev = enumerate_level(tm, level, budget=budget)
        fresh = sorted(set(lev.elements) - seen)
        seen.update(fresh)
        new_per_level.append(fresh)

    rows = []
    monotone = True
    bounded = True
    worst_gap = -math.inf
    worst_xi = xis[0] if xis else 0.0
    for x in xis:
        q = 0.0
        slack = 0.0
        prev = 0.0
        for level, fresh in enumerate(new_per_level, start=1):
            if fresh:
                if abs(fresh[0]) < 2**52 and abs(fresh[-1]) < 2**52:
                    args = np.asarray([x + lam for lam in fresh], dtype=float)
                    vals, radii, _ = mu_hat_array(pair, args, tol=tol)
                    mods = np.abs(vals)
                    q += float(np.sum(mods**2))
                    slack += float(np.sum(2.0 * radii * mods + radii**2))
                else:
                    for lam in fresh:  # frequencies beyond exact float range
                        tv = mu_hat(pair, x + lam, tol=tol)
                        q += tv.modulus**2
                        slack += 2.0 * tv.radius * tv.modulus + tv.radius**2
            ok = q >= prev - _MONOTONE_SLACK
            monotone = monotone and ok
            if q > 1.0 + slack:
                bounded = False
            rows.append(QRow(xi=x, level=level, q=q, certified_slack=slack, monotone_ok=ok))
            prev = q
        gap = 1.0 - q
        if gap > worst_gap:
            worst_gap, worst_xi = gap, x
    return CompletenessReport(rows=tuple(rows), l_max=l_max, tol=tol,
                              monotone=monotone, bounded=bounded,
                              worst_gap=worst_gap, worst_gap_xi=worst_xi)
