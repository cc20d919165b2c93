import math
from fractions import Fraction

import pytest

from cantorspec import (TreeMapping, beurling_upper_dim,
                        beurling_vs_hausdorff, box_counting_dim,
                        build_intervals, canonical_tau, constant_pair,
                        dimension_targeting_pair, enumerate_level, gap_ratios,
                        hausdorff_dim_formula, rescale_constant, rho)

MU42 = constant_pair(4, 2)
MU82 = constant_pair(8, 2)
MU93 = constant_pair(9, 3)


def geometric_ratio_oracle(b: int, d: int) -> Fraction:
    """Closed form for constant pairs: the tails are geometric series with
    ratio 1/b, so every gap ratio is exactly 1/b."""
    # sum_{j>=n} (d-1)/(d b^{j-1}) = (d-1)/(d b^{n-1}) * b/(b-1); quotient 1/b
    return Fraction(1, b)


@pytest.mark.parametrize("b,d", [(4, 2), (9, 3), (8, 2), (16, 4)])
def test_gap_ratios_constant_pairs(b, d):
    pair = constant_pair(b, d)
    oracle = geometric_ratio_oracle(b, d)
    for n, r in enumerate(gap_ratios(pair, 10), start=1):
        assert abs(r / oracle - 1) < Fraction(1, 10**15)
        assert r * d <= 1


def test_gap_ratio_times_b_tends_to_one():
    pair = dimension_targeting_pair(0.5)
    ratios = gap_ratios(pair, 12)
    assert abs(float(ratios[9] * pair.b(10)) - 1) < 0.01
    # and the convergence is monotone improving over the tested range
    errs = [abs(float(r * pair.b(n)) - 1) for n, r in enumerate(ratios, start=1)]
    assert errs[9] < errs[2]


def test_build_intervals_examples():
    family = build_intervals(MU42, 2)
    (w0, l0, r0), (w1, l1, r1) = family.intervals(1)
    assert w0 == (0,) and w1 == (1,)
    tolerance = Fraction(1, 10**14)
    assert l0 == 0 and abs(r0 - Fraction(1, 4)) < tolerance
    assert abs(l1 - Fraction(3, 4)) < tolerance and r1 == 1
    level2 = family.intervals(2)
    assert len(level2) == 4
    for _, lo, hi in level2:
        assert abs((hi - lo) - Fraction(1, 16)) < tolerance
    root = build_intervals(MU42, 0)
    assert root.intervals(0) == (((), Fraction(0), Fraction(1)),)


@pytest.mark.parametrize("pair,depth", [(MU42, 4), (MU93, 3),
                                        (dimension_targeting_pair(0.5), 3)])
def test_interval_family_invariants_exact(pair, depth):
    family = build_intervals(pair, depth)
    for n in range(1, depth + 1):
        d = pair.d(n)
        r = family.ratios[n - 1]
        parents = family.intervals(n - 1)
        children = family.intervals(n)
        assert len(children) == len(parents) * d
        for p_idx, (pword, pleft, pright) in enumerate(parents):
            kids = children[p_idx * d:(p_idx + 1) * d]
            plen = pright - pleft
            gaps = []
            for k, (kword, kleft, kright) in enumerate(kids):
                assert kword == pword + (k,)
                assert kright - kleft == r * plen          # exact equal lengths
                assert pleft <= kleft and kright <= pright  # containment
                if k > 0:
                    gaps.append(kleft - kids[k - 1][2])
            assert kids[0][1] == pleft                      # left endpoint pinned
            assert kids[-1][2] == pright                    # right endpoint pinned
            assert len(set(gaps)) <= 1                      # equal gaps
            assert all(g >= 0 for g in gaps)                # disjoint children
        # lengths at depth n equal the exact ratio product
        expected = math.prod(family.ratios[:n], start=Fraction(1))
        assert family.length(n) == expected


def test_rescale_constant_values():
    # sum (d-1)/(d rho_n): for (4,2) it is (1/2)(4/3) = 2/3
    c = rescale_constant(MU42)
    assert abs(c - Fraction(2, 3)) < Fraction(1, 10**14)
    c93 = rescale_constant(MU93)
    assert abs(c93 - Fraction(2, 3) * Fraction(9, 8)) < Fraction(1, 10**14)


def test_hausdorff_formula_constant_pairs():
    for pair, expected in ((MU42, 0.5), (MU93, 0.5), (MU82, 1 / 3)):
        formula = hausdorff_dim_formula(pair, 40)
        for _, s in formula.partials:
            assert abs(s - expected) <= 1e-12
        assert abs(formula.liminf_proxy - expected) <= 1e-12


@pytest.mark.parametrize("alpha", [0, 0.25, 0.5, 1])
def test_hausdorff_formula_alpha_pairs(alpha):
    pair = dimension_targeting_pair(alpha)
    formula = hausdorff_dim_formula(pair, 40)
    s40 = dict(formula.partials)[40]
    assert abs(s40 - alpha) <= 0.02
    # independent envelope: log(1/r_n) = log b_n - log(r_n b_n) with
    # 1 <= r_n b_n <= d_n/(d_n - 1), so the denominator shortfall against the
    # raw exponent sum is at most sum 2/d_n
    num = sum(math.log(pair.d(j)) for j in range(1, 41))
    den = sum(math.log(pair.b(j)) for j in range(1, 41))
    envelope = sum(2.0 / min(pair.d(j), 2**60) for j in range(1, 41))
    assert num / den - 1e-12 <= s40 <= num / (den - envelope) + 1e-12


def test_box_counting_examples():
    assert box_counting_dim(MU42, 8).slope == pytest.approx(0.5, abs=0.02)
    assert box_counting_dim(MU93, 6).slope == pytest.approx(0.5, abs=0.02)
    assert box_counting_dim(MU82, 8).slope == pytest.approx(1 / 3, abs=0.02)
    fit = box_counting_dim(MU42, 10)
    assert fit.interval_count == 1024 and fit.residual < 1e-9
    with pytest.raises(ValueError):
        box_counting_dim(MU42, 1)


def window_count_oracle(elements, h):
    """Literal sup over centers of the window count."""
    return max(sum(1 for y in elements if x - h <= y <= x + h) for x in elements)


def test_beurling_counts_match_oracle():
    elements = list(enumerate_level(canonical_tau(MU42), 5).elements)
    est = beurling_upper_dim(elements, window_grid=[2, 8, 32, 128])
    for h, count in est.counts:
        assert count == window_count_oracle(elements, h)


def test_beurling_examples():
    lev8 = enumerate_level(canonical_tau(MU42), 8)
    grid = [rho(MU42, j) / 2 for j in range(2, 9)]
    est = beurling_upper_dim(lev8, window_grid=grid)
    assert est.slope == pytest.approx(0.5, abs=0.02)
    # window counts are exactly the level cardinalities on this grid
    assert [c for _, c in est.counts] == [2**j for j in range(1, 8)]

    progression = beurling_upper_dim(list(range(256)))
    assert progression.slope == pytest.approx(1.0, abs=0.1)

    singleton = beurling_upper_dim([0])
    assert singleton.slope == 0.0


def test_beurling_vs_hausdorff():
    assert beurling_vs_hausdorff(canonical_tau(MU42), 8).passed
    rep82 = beurling_vs_hausdorff(canonical_tau(MU82), 8)
    assert rep82.passed
    assert rep82.beurling == pytest.approx(1 / 3, abs=0.02)
    deviated = TreeMapping(MU42, {(1,): -1, (1, 1): -1})
    assert beurling_vs_hausdorff(deviated, 6).passed


def test_degenerate_window_grid_rejected():
    with pytest.raises(ValueError):
        beurling_upper_dim([0, 1, 2], window_grid=[-1.0, 2.0])
    with pytest.raises(ValueError):
        beurling_upper_dim([])
