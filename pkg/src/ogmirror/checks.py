"""Named verification checks backing the verify command.

Each check covers one structural or restriction identity for a given rank;
run_checks executes the whole battery and returns flat records that the CLI
renders as text or JSON.  Everything here is recomputed from scratch
through the public construction functions, so a passing battery really does
exercise the box calculus, the pair recursion, the derivation and the
path-sum restriction together.
"""

from dataclasses import dataclass

from .diagrams import (
    addable_positions,
    add_unique_box,
    all_diagrams,
    box_count,
    check_rank,
    full_columns,
    removable_positions,
    staircase_prefix,
)
from .potential import (
    box_derivation,
    denominator_pair_levels,
    numerator_pair_levels,
    superpotential,
)
from .torus import (
    laurent_potential,
    predicted_denominator_restriction,
    restrict_polynomial,
    restricted_term_sum,
    term_restriction_residual,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    n: int
    index: int | None
    passed: bool
    detail: str = ""


def all_passed(results) -> bool:
    return all(result.passed for result in results)


def _diagram_count(n):
    count = len(all_diagrams(n))
    return CheckResult("diagram_count", n, None, count == 2**n, f"{count} diagrams")


def _unique_positions(n):
    bad = []
    for rows in all_diagrams(n):
        for label in range(1, n + 2):
            if len(addable_positions(n, rows, label)) > 1:
                bad.append(("addable", rows, label))
            if len(removable_positions(n, rows, label)) > 1:
                bad.append(("removable", rows, label))
    return CheckResult(
        "unique_positions", n, None, not bad, f"violations: {bad}" if bad else ""
    )


def _pair_recursion(n, i, denominator_levels):
    bound = i * (i - 1) // 2 + 1
    issues = []
    if len(denominator_levels) > bound:
        issues.append(f"{len(denominator_levels)} levels exceed bound {bound}")
    first_boxes = box_count(staircase_prefix(n, i - 1))
    second_boxes = box_count(full_columns(n, i))
    for j, level in enumerate(denominator_levels):
        if not level:
            issues.append(f"empty level {j}")
        for first, second in level:
            if box_count(first) != first_boxes - j or box_count(second) != second_boxes + j:
                issues.append(f"level {j} grading broken at ({first}, {second})")
    return CheckResult(
        "pair_recursion", n, i, not issues, "; ".join(issues)
    )


def _numerator_seed(n, i, numerator_levels):
    expected = ((add_unique_box(n, staircase_prefix(n, i - 1)), full_columns(n, i)),)
    ok = numerator_levels[0] == expected
    return CheckResult(
        "numerator_seed", n, i, ok, "" if ok else f"level 0 is {numerator_levels[0]}"
    )


def _derivation_identity(n, term):
    derived = box_derivation(n, term.index, term.denominator)
    ok = derived == term.numerator
    return CheckResult(
        "derivation_identity", n, term.index, ok,
        "" if ok else f"derived {derived} != numerator {term.numerator}",
    )


def _degree_sum(n, terms):
    total = sum(term.denominator.plucker_degree() for term in terms)
    return CheckResult("degree_sum", n, None, total == 2 * n, f"sum {total}")


def _denominator_restriction(n, term):
    restricted = restrict_polynomial(n, term.denominator)
    predicted = predicted_denominator_restriction(n, term.index)
    ok = restricted == predicted
    return CheckResult(
        "denominator_restriction", n, term.index, ok,
        "" if ok else f"restricted {restricted} != predicted {predicted}",
    )


def _term_restriction(n, i):
    residual = term_restriction_residual(n, i)
    ok = not residual
    return CheckResult(
        "term_restriction", n, i, ok, "" if ok else f"residual {residual}"
    )


def _laurent_assembly(n):
    ok = restricted_term_sum(n) == laurent_potential(n)
    return CheckResult("laurent_assembly", n, None, ok)


def run_checks(n: int) -> list[CheckResult]:
    """Run the full battery for one rank, in deterministic order."""
    check_rank(n)
    results = [_diagram_count(n), _unique_positions(n)]
    for i in range(2, n):
        denominator_levels = denominator_pair_levels(n, i)
        numerator_levels = numerator_pair_levels(n, i, denominator_levels)
        results.append(_pair_recursion(n, i, denominator_levels))
        results.append(_numerator_seed(n, i, numerator_levels))
    terms = superpotential(n)
    for term in terms[: n + 1]:
        results.append(_derivation_identity(n, term))
    results.append(_degree_sum(n, terms))
    for term in terms:
        results.append(_denominator_restriction(n, term))
    for i in range(n + 1):
        results.append(_term_restriction(n, i))
    results.append(_laurent_assembly(n))
    return results
