"""Batch surveys over coprime grid sizes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .counting import diag_count_tree
from .hamiltonicity import is_hamiltonian_fast


@dataclass(frozen=True)
class PairRecord:
    n: int
    m: int
    diag: int
    hamiltonian: bool
    method: str


@dataclass(frozen=True)
class DistributionReport:
    """Diagonal-count distribution over coprime pairs up to a horizon."""

    h: int
    pairs: int
    count1: int
    count2: int
    count3: int

    @property
    def p1(self) -> Fraction:
        return Fraction(self.count1, self.pairs)

    @property
    def p2(self) -> Fraction:
        return Fraction(self.count2, self.pairs)

    @property
    def p3(self) -> Fraction:
        return Fraction(self.count3, self.pairs)


def exceptional_pairs(max_m: int) -> list[PairRecord]:
    """Coprime pairs n < m <= max_m with several diagonals yet no cycle.

    Single-diagonal grids are never Hamiltonian, so these are the
    genuinely exceptional sizes.  Sorted lexicographically.
    """
    if max_m < 2:
        raise ValueError(f"need max_m >= 2, got {max_m}")
    records = []
    for n in range(1, max_m):
        for m in range(n + 1, max_m + 1):
            if math.gcd(n, m) != 1:
                continue
            diag = diag_count_tree(n, m)
            if diag >= 2 and not is_hamiltonian_fast(n, m):
                records.append(PairRecord(n, m, diag, False, "link"))
    return records


def diag_distribution(h: int) -> DistributionReport:
    """Exact diagonal-count distribution over coprime pairs m > n, m <= h."""
    if h < 2:
        raise ValueError(f"need h >= 2, got {h}")
    gcd = math.gcd
    count = diag_count_tree
    pairs = 0
    tally = [0, 0, 0, 0]
    for m in range(2, h + 1):
        for n in range(1, m):
            if gcd(n, m) != 1:
                continue
            pairs += 1
            d = count(n, m)
            if d <= 3:
                tally[d] += 1
    return DistributionReport(h, pairs, tally[1], tally[2], tally[3])
