"""Cross-check suites wiring the independent computation routes together.

Each check compares two routes that must agree; a failure is an
internal inconsistency, not bad input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .counting import (
    DELTA,
    GAMMA,
    LAMBDA,
    apply_tree_string,
    diag_count_reduction,
    diag_count_string,
    diag_count_tree,
    string_intervals,
    string_powers,
)
from .diagonals import diag_count_naive
from .hamiltonicity import (
    _dec,
    is_hamiltonian_brute,
    is_hamiltonian_fast,
    orientation_k,
    periodicity_check,
    trace_components,
)
from .links import loop_count, orientation_link


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str


def _coprime_pairs(limit: int, strict: bool = False):
    for n in range(1, limit + 1):
        start = n + 1 if strict else 1
        for m in range(start, limit + 1):
            if math.gcd(n, m) == 1:
                yield n, m


def check_tier_equivalence(limit: int) -> CheckResult:
    """Brute-force tier and link tier agree on every grid."""
    limit = min(limit, 10)
    bad = []
    for n in range(1, limit + 1):
        for m in range(n, limit + 1):
            brute, _ = is_hamiltonian_brute(n, m)
            if brute != is_hamiltonian_fast(n, m):
                bad.append((n, m))
    return CheckResult(
        "tier-equivalence",
        not bad,
        f"n,m <= {limit}" + (f", mismatches {bad}" if bad else ""),
    )


def check_counting_agreement(limit: int) -> CheckResult:
    """All four diagonal counters agree on coprime pairs."""
    bad = []
    for n, m in _coprime_pairs(limit):
        ref = diag_count_naive(n, m)
        if not (
            ref == diag_count_string(n, m) == diag_count_reduction(n, m) == diag_count_tree(n, m)
        ):
            bad.append((n, m))
    return CheckResult(
        "counting-agreement",
        not bad,
        f"coprime pairs <= {limit}" + (f", mismatches {bad}" if bad else ""),
    )


def check_string_construction(limit: int) -> CheckResult:
    """The two crossing-string constructions are conjugate as written."""
    bad = []
    for n, m in _coprime_pairs(limit):
        if n <= 1 or m <= 1:
            continue
        s = string_intervals(n, m)
        if string_powers(n, m) != "d" + s[:-1]:
            bad.append((n, m))
    return CheckResult(
        "string-construction",
        not bad,
        f"coprime 1 < n,m <= {limit}" + (f", mismatches {bad}" if bad else ""),
    )


def check_cycle_link_equivalence(limit: int) -> CheckResult:
    """Component count of each orientation equals its link's loop count."""
    limit = min(limit, 8)
    bad = []
    for n, m in _coprime_pairs(limit):
        dec = _dec(n, m)
        for omega in product("UR", repeat=len(dec.diagonals)):
            omega = "".join(omega)
            if len(trace_components(dec.grid, omega)) != loop_count(
                orientation_link(dec, omega)
            ):
                bad.append((n, m, omega))
    return CheckResult(
        "cycle-link-equivalence",
        not bad,
        f"coprime n,m <= {limit}, all orientations" + (f", mismatches {bad[:3]}" if bad else ""),
    )


def check_link_balance(limit: int) -> CheckResult:
    """-a+b+2c+2d = (4-k)n for every orientation, k integral."""
    bad = []
    for n, m in _coprime_pairs(limit):
        dec = _dec(n, m)
        for omega in product("UR", repeat=len(dec.diagonals)):
            omega = "".join(omega)
            link = orientation_link(dec, omega)
            k = orientation_k(dec, omega)
            if link.t != (4 - k) * n or not 0 <= k <= 4:
                bad.append((n, m, omega))
    return CheckResult(
        "link-balance",
        not bad,
        f"coprime n,m <= {limit}, all orientations" + (f", mismatches {bad[:3]}" if bad else ""),
    )


def check_periodicity(limit: int) -> CheckResult:
    """Hamiltonicity is unchanged by adding 12n columns."""
    bad = []
    for n in range(1, min(limit, 3) + 1):
        for m in range(1, limit + 1):
            if math.gcd(n, m) != 1:
                continue
            if not periodicity_check(n, m):
                bad.append((n, m))
    return CheckResult(
        "periodicity",
        not bad,
        f"coprime n <= 3, m <= {limit}" + (f", mismatches {bad}" if bad else ""),
    )


def check_canon_rules(limit: int) -> CheckResult:
    """The five tree-string head rules preserve the direct count."""

    def count_at(pair):
        a, b = pair
        return diag_count_naive(min(a, b), max(a, b))

    bad = []
    for n, m in _coprime_pairs(limit, strict=True):
        if (m + n) % 2 == 0:
            continue
        pair = (m, n)
        base = count_at(pair)
        rules = [
            (1, apply_tree_string(DELTA, pair), apply_tree_string(GAMMA, pair)),
            (3, apply_tree_string(GAMMA + DELTA, pair), apply_tree_string(LAMBDA, pair)),
            (4, apply_tree_string(GAMMA + LAMBDA, pair), apply_tree_string(GAMMA, pair)),
        ]
        for kappa in (GAMMA, DELTA, LAMBDA):
            rules.append((2, apply_tree_string(LAMBDA + kappa, pair), pair))
            rules.append((5, apply_tree_string(GAMMA + GAMMA + kappa, pair), pair))
        for rule_no, lhs, rhs in rules:
            if count_at(lhs) != (base if rhs == pair else count_at(rhs)):
                bad.append((rule_no, n, m))
    return CheckResult(
        "canon-rules",
        not bad,
        f"even-odd pairs m <= {limit}" + (f", mismatches {bad[:3]}" if bad else ""),
    )


def run_verify(limit: int = 10) -> list[CheckResult]:
    if limit < 2:
        raise ValueError(f"need limit >= 2, got {limit}")
    return [
        check_tier_equivalence(limit),
        check_counting_agreement(limit),
        check_string_construction(limit),
        check_cycle_link_equivalence(limit),
        check_link_balance(min(limit, 15)),
        check_periodicity(limit),
        check_canon_rules(limit),
    ]
