"""Monte-Carlo realization of the measure as a random digit series.

A sample is x = sum_{n<=depth} j_n / (d_n rho_n) with j_n drawn uniformly
from {0, ..., d_n - 1}.  Truncating at ``depth`` perturbs each sample by at
most the tail sum, which is below 2 / rho_{depth+1}; the default depth pushes
that radius under 1e-15, so samples are exact at double resolution.  Digits
come from counter-based generators keyed by (seed, level), so streams are
reproducible regardless of evaluation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import ScalePair
from .dimension import rescale_constant


def default_depth(pair: ScalePair, radius_target: float = 1e-15) -> int:
    """Smallest depth whose truncation radius bound 2/rho_{depth+1} is below target."""
    need = math.ceil(2.0 / radius_target)
    depth = 1
    rho_next = pair.b(1)
    while rho_next < need:
        depth += 1
        rho_next *= pair.b(depth)
    return depth


def truncation_radius(pair: ScalePair, depth: int) -> float:
    """Upper bound 2/rho_{depth+1} for the per-sample truncation error."""
    rho_next = pair.rho(depth + 1)
    if rho_next.bit_length() > 1020:
        return 0.0
    return 2.0 / rho_next


@dataclass(frozen=True)
class SampleSet:
    values: np.ndarray
    pair: ScalePair
    depth: int
    seed: int
    radius: float

    def __len__(self) -> int:
        return len(self.values)


def _digit_matrix(pair: ScalePair, count: int, depth: int, seed: int) -> np.ndarray:
    """Digits[i, n-1] = j_n of sample i, from per-level keyed Philox streams."""
    digits = np.empty((count, depth), dtype=np.int64)
    for n in range(1, depth + 1):
        gen = np.random.Generator(np.random.Philox(key=np.array([seed, n], dtype=np.uint64)))
        digits[:, n - 1] = gen.integers(0, pair.d(n), size=count, dtype=np.int64)
    return digits


def _accumulate(pair: ScalePair, digits: np.ndarray) -> np.ndarray:
    values = np.zeros(digits.shape[0])
    rho_n = 1
    for n in range(1, digits.shape[1] + 1):
        scale = pair.d(n) * rho_n
        if scale.bit_length() > 1020:
            break  # weight underflows double precision entirely
        values += digits[:, n - 1] * (1.0 / scale)
        rho_n *= pair.b(n)
    return values


def sample_measure(pair: ScalePair, count: int, depth: int | None = None, seed: int = 0) -> SampleSet:
    """Draw ``count`` samples of the measure, deterministic under ``seed``."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if seed < 0:
        raise ValueError(f"seed must be >= 0, got {seed}")
    if depth is None:
        depth = default_depth(pair)
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    digits = _digit_matrix(pair, count, depth, seed)
    values = _accumulate(pair, digits)
    return SampleSet(values=values, pair=pair, depth=depth, seed=seed,
                     radius=truncation_radius(pair, depth))


def _values_of(samples) -> np.ndarray:
    if isinstance(samples, SampleSet):
        return samples.values
    arr = np.asarray(samples, dtype=float)
    if arr.size == 0:
        raise ValueError("empty sample list")
    return arr


def empirical_char(samples, xi: float) -> complex:
    """Empirical transform (1/N) sum_k e^{-2 pi i xi x_k}.

    numpy's pairwise mean gives a fixed reduction order for a fixed sample
    array, so repeated calls reproduce bit-identically.
    """
    values = _values_of(samples)
    return complex(np.mean(np.exp(-2j * np.pi * xi * values)))


def empirical_moments(samples, k: int) -> float:
    """k-th raw moment of the samples, k in 1..4."""
    if not 1 <= k <= 4:
        raise ValueError(f"moment order must be in 1..4, got {k}")
    values = _values_of(samples)
    return float(np.mean(values**k))


def exact_mean(pair: ScalePair) -> Fraction:
    """The measure's mean sum_n (d_n - 1) / (2 d_n rho_n), certified truncation."""
    return rescale_constant(pair) / 2
