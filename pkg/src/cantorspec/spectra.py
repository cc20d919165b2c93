"""Words on the digit tree, tree mappings, and level-wise frequency sets.

A tree mapping labels every finite word delta_1...delta_n with an integer
tau(delta_1...delta_n) congruent to delta_n mod d_n and confined to the
centered digit range of width b_n.  Mappings are represented as a finite
deviation table over the canonical default tau(word) = last digit, which
makes the root/zero-branch condition and the eventual-zero condition
structural and leaves only the congruence/range condition to check.

The level-L frequency set collects lambda(delta) = sum_n tau(.)*rho_n over
all words delta of length L, as exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .core import BudgetExceededError, Issue, ScalePair, ValidationReport

Word = tuple[int, ...]


@dataclass(frozen=True)
class TreeMapping:
    """Finite deviation table over the canonical rule tau(w) = w[-1].

    ``table`` maps words to integer labels; words absent from the table get
    the canonical default.  tau of the empty word is 0, and zero-extensions
    beyond the table default to 0, so every branch is eventually zero.
    """

    pair: ScalePair
    table: Mapping[Word, int] = field(default_factory=dict)

    def tau(self, word: Word) -> int:
        if not word:
            return 0
        if word in self.table:
            return self.table[word]
        return word[-1]

    @property
    def table_depth(self) -> int:
        return max((len(w) for w in self.table), default=0)

    def restriction(self, word: Word, n: int) -> Word:
        """R_n of the zero-extension of ``word``."""
        if n <= len(word):
            return word[:n]
        return word + (0,) * (n - len(word))


def canonical_tau(pair: ScalePair) -> TreeMapping:
    """The canonical mapping: tau(delta_1...delta_n) = delta_n, empty table."""
    return TreeMapping(pair=pair, table={})


def tree_mapping_from_config(pair: ScalePair, entries: Iterable[dict]) -> TreeMapping:
    """Table from its JSON form [{"word": [d1,...,dn], "value": v}, ...]."""
    table = {}
    for e in entries:
        table[tuple(int(x) for x in e["word"])] = int(e["value"])
    return TreeMapping(pair=pair, table=table)


def _digit_range(pair: ScalePair, n: int) -> tuple[int, int]:
    # inclusive label range {-floor(b/2), ..., b - 1 - floor(b/2)} at level n
    half = pair.b(n) // 2
    return -half, pair.b(n) - 1 - half


def validate_tree_mapping(tm: TreeMapping, depth: int) -> ValidationReport:
    """Check the three mapping conditions on words reachable at depth <= depth.

    (i) the root and the all-zero words map to 0; (ii) every label is
    congruent to its last digit mod d_n and lies in the centered range of
    width b_n; (iii) every table word's zero-extension leaves the table after
    finitely many steps and then defaults to 0 (structural for finite tables,
    confirmed by walking each extension).
    """
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    pair = tm.pair
    issues = []
    if tm.tau(()) != 0:
        issues.append(Issue("i", "word=()", "root must map to 0"))
    for word, value in sorted(tm.table.items()):
        n = len(word)
        if n == 0:
            continue  # root handled above
        if n > depth:
            continue
        bad_digit = next((k for k, dig in enumerate(word, start=1)
                          if not 0 <= dig < pair.d(k)), None)
        if bad_digit is not None:
            issues.append(Issue("word", f"word={word}",
                                f"digit at position {bad_digit} outside 0..{pair.d(bad_digit) - 1}"))
            continue
        if all(dig == 0 for dig in word) and value != 0:
            issues.append(Issue("i", f"word={word}", "all-zero word must map to 0"))
            continue
        lo, hi = _digit_range(pair, n)
        if (value - word[-1]) % pair.d(n) != 0:
            issues.append(Issue("ii", f"word={word}",
                                f"value {value} not congruent to {word[-1]} mod d_{n}={pair.d(n)}"))
        elif not lo <= value <= hi:
            issues.append(Issue("ii", f"word={word}",
                                f"value {value} outside {{{lo},...,{hi}}}"))
    # (iii): walk each table word's zero-extension until it exits the table.
    max_depth = tm.table_depth
    for word in tm.table:
        probe = word
        while len(probe) <= max_depth:
            probe = probe + (0,)
        if tm.tau(probe) != 0:  # cannot happen with the canonical default
            issues.append(Issue("iii", f"word={word}", "zero-extension does not vanish"))
    return ValidationReport(ok=not issues, issues=tuple(issues), checked_depth=depth)


def lambda_of_word(tm: TreeMapping, delta: Word) -> int:
    """Exact frequency sum_n tau(R_n(delta 0^inf)) * rho_n.

    The sum runs to max(len(delta), table depth); all later labels vanish by
    the canonical default on zero-extensions.
    """
    pair = tm.pair
    depth = max(len(delta), tm.table_depth)
    total = 0
    rho_n = 1
    for n in range(1, depth + 1):
        total += tm.tau(tm.restriction(delta, n)) * rho_n
        rho_n *= pair.b(n)
    return total


@dataclass(frozen=True)
class SpectrumLevel:
    """Deduplicated frequencies at one tree depth, with any collisions."""

    level: int
    elements: tuple[int, ...]                    # sorted, exact integers
    collisions: tuple[tuple[int, int], ...] = () # (value, multiplicity > 1)

    def __len__(self) -> int:
        return len(self.elements)


def word_count(pair: ScalePair, level: int) -> int:
    count = 1
    for n in range(1, level + 1):
        count *= pair.d(n)
    return count


def enumerate_level(tm: TreeMapping, level: int, budget: int = 10**6) -> SpectrumLevel:
    """All frequencies lambda(delta) for words delta of length ``level``.

    Distinct words mapping to the same frequency are deduplicated but
    reported as collisions: a repeated frequency witnesses non-orthogonality
    and must surface rather than vanish silently.
    """
    if level < 0:
        raise ValueError(f"level must be >= 0, got {level}")
    pair = tm.pair
    count = word_count(pair, level)
    if count > budget:
        raise BudgetExceededError(
            f"level {level} needs {count} words, over the budget of {budget}", required=count)
    rho = pair.rho_list(max(level, tm.table_depth))
    if not tm.table:
        # Canonical labels depend only on the digit, so partial sums expand
        # level by level without any per-word table walk.
        sums = [0]
        for n in range(1, level + 1):
            rho_n = rho[n - 1]
            sums = [s + dig * rho_n for s in sums for dig in range(pair.d(n))]
        values = sums
    else:
        values = []
        tail_depth = tm.table_depth

        def extend(word: Word, partial: int, n: int):
            if n > level:
                # zero-extension tail: only table entries can contribute
                total = partial
                probe = word
                for k in range(level + 1, tail_depth + 1):
                    probe = probe + (0,)
                    total += tm.tau(probe) * rho[k - 1]
                values.append(total)
                return
            rho_n = rho[n - 1]
            for dig in range(pair.d(n)):
                w = word + (dig,)
                extend(w, partial + tm.tau(w) * rho_n, n + 1)

        extend((), 0, 1)
    seen: dict[int, int] = {}
    for v in values:
        seen[v] = seen.get(v, 0) + 1
    collisions = tuple(sorted((v, c) for v, c in seen.items() if c > 1))
    return SpectrumLevel(level=level, elements=tuple(sorted(seen)), collisions=collisions)


@dataclass(frozen=True)
class GrowthReport:
    """Tail-sum statistics behind the sufficient spectrum conditions.

    ``sup_sum`` is the supremum over reachable words delta (length n) of
    sum_j (|tau(delta 0^j)| / b_{n+j})^2, and ``max_nonzero_count`` the
    largest number of nonzero labels along a zero-extension.  Both are
    exactly computable for finite tables: only table entries of the form
    delta 0^j can contribute, and tails beyond the table vanish.
    """

    sup_sum: float
    max_nonzero_count: int
    sup_sum_exact: Fraction
    witness: Word | None


def check_growth_conditions(tm: TreeMapping, depth: int) -> GrowthReport:
    pair = tm.pair
    sums: dict[Word, Fraction] = {}
    counts: dict[Word, int] = {}
    for word, value in tm.table.items():
        if value == 0 or len(word) < 2:
            continue
        m = len(word)
        b_m = pair.b(m)
        # word equals prefix + zeros exactly for splits at or past the last
        # nonzero digit, so those are the prefixes whose tail this entry feeds
        last_nonzero = max((k for k in range(1, m + 1) if word[k - 1] != 0), default=0)
        for n in range(max(1, last_nonzero), m):
            if n > depth:
                break
            prefix = word[:n]
            sums[prefix] = sums.get(prefix, Fraction(0)) + Fraction(value, b_m) ** 2
            counts[prefix] = counts.get(prefix, 0) + 1
    if not sums:
        return GrowthReport(0.0, 0, Fraction(0), None)
    witness = max(sums, key=lambda w: sums[w])
    return GrowthReport(sup_sum=float(sums[witness]),
                        max_nonzero_count=max(counts.values()),
                        sup_sum_exact=sums[witness],
                        witness=witness)
