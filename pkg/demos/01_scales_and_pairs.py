#!/usr/bin/env python3
"""Scale pairs (b_n, d_n) and their exact integer scales.

A pair of digit/base sequences drives everything else in the package: the
scales rho_n multiply up exactly (Python integers, no overflow ever), and a
dimension-targeting pair picks dyadic exponents so the level ratios
ln d_n / ln b_n converge to any prescribed value in [0, 1].
"""

from cantorspec import (constant_pair, dimension_targeting_pair,
                        explicit_pair, rho, validate_pair)

# --- constant pairs: the classical quarter-Cantor setup -------------------
pair = constant_pair(4, 2)
print("constant (4,2):", [(pair.b(n), pair.d(n)) for n in range(1, 5)])
print("scales rho_1..rho_8:", [rho(pair, n) for n in range(1, 9)])

# rho_n exceeds 64-bit range quickly; exactness is the point
print("rho_40 has", rho(pair, 40).bit_length(), "bits")

# --- validation reports, not exceptions, for explicit sequences -----------
broken = explicit_pair([4, 5], [2, 2])
report = validate_pair(broken, depth=2)
print("\nexplicit (4,5)/(2,2) valid?", report.ok)
for issue in report.issues:
    print("   ", issue.condition, "at", issue.location, "—", issue.message)

# --- dimension targeting ---------------------------------------------------
import math

for alpha in (0, 0.25, 0.5, 1):
    p = dimension_targeting_pair(alpha)
    ratios = [math.log(p.d(n)) / math.log(p.b(n)) for n in (1, 5, 20, 40)]
    print(f"\nalpha={alpha}: (b_1,d_1)=({p.b(1)},{p.d(1)})",
          "ratios at n=1,5,20,40:", [round(r, 4) for r in ratios])
