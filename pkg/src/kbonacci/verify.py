"""Invariant suites behind the CLI's verify subcommand.

Each suite sweeps a (k, n) grid, counts the checks it ran and collects a
line per failure.  Suites are deterministic: cells are visited in sorted
(k, n) order and results do not depend on execution interleaving.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .closed_form import (
    SUM_FORMULA,
    TERM_FORMULA,
    kbonacci_closed,
    partial_sum_dunkel,
    partial_sum_dunkel_extended,
    term_breakdown,
)
from .matrix_power import kbonacci_matrix, partial_sum_matrix
from .sequence import kbonacci_prefix, kbonacci_recurrence, partial_sum_direct
from .tilings import (
    iter_bounded_tilings,
    iter_tilings,
    iter_unrestricted,
    count_by_rightmost_tile,
    tiling_from_marks,
    verify_intersection_identity,
)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, condition: bool, detail: str) -> None:
        self.checks += 1
        if not condition:
            self.failures.append(detail)


def suite_engines(ks: range, ns: range, cap: int | None = None) -> SuiteResult:
    """Every engine agrees with the recurrence baseline, values and sums."""
    result = SuiteResult("engines")
    for k in ks:
        for n in ns:
            value = kbonacci_recurrence(k, n)
            result.expect(
                kbonacci_closed(k, n) == value, f"value closed-form mismatch at k={k} n={n}"
            )
            result.expect(
                kbonacci_matrix(k, n) == value, f"value matrix mismatch at k={k} n={n}"
            )
            total = partial_sum_direct(k, n)
            result.expect(
                partial_sum_dunkel(k, n) == total, f"sum closed-form mismatch at k={k} n={n}"
            )
            result.expect(
                partial_sum_matrix(k, n) == total, f"sum matrix mismatch at k={k} n={n}"
            )
    return result


def suite_closed_form(ks: range, ns: range, cap: int | None = None) -> SuiteResult:
    """Identities internal to the closed forms: base case, raised limits,
    difference identity, term folding and integrality."""
    result = SuiteResult("closed-form")
    for k in ks:
        for n in ns:
            if n <= k:
                result.expect(
                    partial_sum_dunkel(k, n) == 1 << n, f"base case 2^n fails at k={k} n={n}"
                )
            base = partial_sum_dunkel(k, n)
            for m in range(n // (k + 1), n // k + 1):
                result.expect(
                    partial_sum_dunkel_extended(k, n, m) == base,
                    f"extended limit m={m} changes the sum at k={k} n={n}",
                )
            if n >= 1:
                result.expect(
                    kbonacci_closed(k, n) == base - partial_sum_dunkel(k, n - 1),
                    f"difference identity fails at k={k} n={n}",
                )
            for which, total in ((SUM_FORMULA, base), (TERM_FORMULA, kbonacci_closed(k, n))):
                terms = term_breakdown(k, n, which)
                result.expect(
                    sum(t.value for t in terms) == total,
                    f"{which} terms do not fold back at k={k} n={n}",
                )
                result.expect(
                    all(t.magnitude >= 0 and t.sign == (-1) ** t.j for t in terms),
                    f"{which} term shape violated at k={k} n={n}",
                )
    return result


def suite_tilings(ks: range, ns: range, cap: int | None = None) -> SuiteResult:
    """Enumeration counts match the sequence engines tile for tile."""
    result = SuiteResult("tilings")
    top = max(ns, default=-1)
    if top < 0:
        return result
    for k in ks:
        prefix = kbonacci_prefix(k, top)
        for n in ns:
            exact = list(iter_tilings(k, n, cap))
            result.expect(
                len(exact) == prefix[n], f"exact tiling count mismatch at k={k} n={n}"
            )
            result.expect(
                len(set(exact)) == len(exact), f"duplicate tilings at k={k} n={n}"
            )
            result.expect(
                all(t.total == n and all(1 <= x <= k for x in t.tiles) for t in exact),
                f"invalid tiling emitted at k={k} n={n}",
            )
            result.expect(
                exact == sorted(exact), f"tilings not in lexicographic order at k={k} n={n}"
            )
            bounded = sum(1 for _ in iter_bounded_tilings(k, n, cap))
            result.expect(
                bounded == sum(prefix[: n + 1]),
                f"bounded tiling count mismatch at k={k} n={n}",
            )
            if n >= 1:
                parts = count_by_rightmost_tile(k, n, cap)
                result.expect(
                    parts == [(l, prefix[n - l]) for l in range(1, min(k, n) + 1)],
                    f"rightmost-tile partition mismatch at k={k} n={n}",
                )
    return result


def suite_hash_marks(ks: range, ns: range, cap: int | None = None) -> SuiteResult:
    """|U| = 2^n and the mark-subset -> tiling map is a bijection.

    Independent of k; the k range is ignored.
    """
    result = SuiteResult("hash-marks")
    for n in ns:
        tilings = list(iter_unrestricted(n, cap))
        result.expect(len(tilings) == 1 << n, f"|U| != 2^{n}")
        result.expect(len(set(tilings)) == len(tilings), f"duplicate unrestricted tilings at n={n}")
        from_subsets = {
            tiling_from_marks(marks)
            for r in range(n + 1)
            for marks in combinations(range(1, n + 1), r)
        }
        result.expect(
            from_subsets == set(tilings) and len(from_subsets) == 1 << n,
            f"mark-subset map is not a bijection at n={n}",
        )
    return result


def suite_inclusion_exclusion(ks: range, ns: range, cap: int | None = None) -> SuiteResult:
    """The subtraction skeleton and the intersection-count identity."""
    result = SuiteResult("inclusion-exclusion")
    for k in ks:
        for n in ns:
            with_oversized = sum(
                1 for t in iter_unrestricted(n, cap) if any(x > k for x in t.tiles)
            )
            result.expect(
                (1 << n) - with_oversized == partial_sum_direct(k, n),
                f"2^n minus oversized count misses the partial sum at k={k} n={n}",
            )
            for i in range(1, n // (k + 1) + 1):
                report = verify_intersection_identity(k, n, i, cap)
                result.expect(
                    report.lhs == report.rhs,
                    f"intersection counts differ at k={k} n={n} i={i}: "
                    f"{report.lhs} != {report.rhs}",
                )
    return result


def suite_bijection(ks: range, ns: range, cap: int | None = None) -> SuiteResult:
    """Mark expansion is injective and fills the counted union exactly."""
    result = SuiteResult("bijection")
    for k in ks:
        for n in ns:
            for i in range(1, n // (k + 1) + 1):
                report = verify_intersection_identity(k, n, i, cap)
                result.expect(
                    report.injective, f"expand_marks not injective at k={k} n={n} i={i}"
                )
                result.expect(
                    report.image_matches,
                    f"expand_marks image mismatch at k={k} n={n} i={i}",
                )
                result.expect(
                    report.configurations == report.rhs,
                    f"configuration count != C(n-ik,i)*2^(n-i(k+1)) at k={k} n={n} i={i}",
                )
    return result


SUITES = {
    "engines": suite_engines,
    "closed-form": suite_closed_form,
    "tilings": suite_tilings,
    "hash-marks": suite_hash_marks,
    "inclusion-exclusion": suite_inclusion_exclusion,
    "bijection": suite_bijection,
}


def run_suites(names, ks: range, ns: range, cap: int | None = None) -> list[SuiteResult]:
    return [SUITES[name](ks, ns, cap) for name in names]
