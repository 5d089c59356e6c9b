"""Restriction of Plücker variables and potential terms to the torus chart.

The torus chart carries one coordinate a[label, column] per staircase box,
ordered by reading the boxes row by row, left to right (the reduced word).
The restriction of a Plücker variable is a weighted sum over the ways of
building its diagram by scanning that word once and adding the current box
or skipping it: each admissible subsequence contributes the product of the
coordinates it used.  A single forward pass over the word computes the
restriction of every diagram simultaneously.
"""

from functools import lru_cache

from .diagrams import (
    add_box,
    box_count,
    box_label,
    check_rank,
    diagram,
    empty_diagram,
    staircase,
    staircase_prefix,
)
from .polynomials import (
    QUANTUM,
    Polynomial,
    RationalExpression,
    is_plucker,
    is_quantum,
    torus_var,
)
from .potential import potential_term, superpotential


def reduced_word(n: int) -> tuple[tuple[int, int], ...]:
    """(label, column) pairs of the staircase boxes in reading order."""
    check_rank(n)
    word = []
    for r in range(1, n + 1):
        for c in range(1, r + 1):
            word.append((box_label(n, r, c), c))
    return tuple(word)


@lru_cache(maxsize=None)
def restrict_all(n: int) -> dict:
    """Restrictions of all Plücker variables, keyed by diagram.

    Forward dynamic program over the reduced word: the state maps each
    diagram to the accumulated weight of the subsequences building it,
    starting from {empty: 1}; at each word position every diagram keeps its
    weight (box skipped) and, when the box is addable, also feeds weight
    times a[label, column] to the grown diagram.  Treat the returned dict
    as read-only; it is cached and shared.
    """
    check_rank(n)
    state = {empty_diagram(n): Polynomial.one()}
    for label, col in reduced_word(n):
        weight = Polynomial.variable(torus_var(label, col))
        grown_state = dict(state)
        for rows, poly in state.items():
            grown = add_box(n, rows, label)
            if grown is not None:
                grown_state[grown] = grown_state.get(grown, Polynomial.zero()) + poly * weight
        state = grown_state
    return state


def restrict_plucker(n: int, rows) -> Polynomial:
    """Path-sum restriction of one Plücker variable."""
    return restrict_all(n)[diagram(n, rows)]


def restrict_polynomial(n: int, poly: Polynomial) -> Polynomial:
    """Restrict a polynomial in Plücker variables (q passes through).

    Every Plücker variable is replaced by its restriction and the result is
    expanded exactly; polynomials already containing torus variables are
    rejected.
    """
    table = restrict_all(n)

    def image(var):
        if is_plucker(var):
            return table[var[1]]
        if is_quantum(var):
            return Polynomial.variable(QUANTUM)
        raise ValueError(f"input already contains the torus variable {var!r}")

    return poly.substitute(image)


def predicted_denominator_restriction(n: int, i: int) -> Polynomial:
    """Closed-form monomial the restricted i-th denominator must equal.

    Writing ell_k = k(k+1)/2 for the number of boxes in the first k rows:
    index 0 gives 1, index 1 the product over column-1 positions, index n
    the product over the first ell_{n-1} positions, index n+1 the product
    over all positions, and a middle index i the product over the first
    ell_{i-1} positions times the product over positions with column <= i.
    """
    check_rank(n)
    if not 0 <= i <= n + 1:
        raise ValueError(f"term index {i} outside 0..{n + 1}")
    word = reduced_word(n)
    exponents: dict = {}

    def take(positions):
        for t in positions:
            label, col = word[t]
            var = torus_var(label, col)
            exponents[var] = exponents.get(var, 0) + 1

    if i == 0:
        pass
    elif i == 1:
        take(t for t in range(len(word)) if word[t][1] == 1)
    elif i == n:
        take(range((n - 1) * n // 2))
    elif i == n + 1:
        take(range(len(word)))
    else:
        take(range((i - 1) * i // 2))
        take(t for t in range(len(word)) if word[t][1] <= i)
    return Polynomial.term(1, exponents)


def label_columns(n: int, label: int) -> tuple[int, ...]:
    """Distinct staircase columns where the label occurs, ascending."""
    check_rank(n)
    cols = {
        c
        for r in range(1, n + 1)
        for c in range(1, r + 1)
        if box_label(n, r, c) == label
    }
    return tuple(sorted(cols))


def term_restriction_factor(n: int, i: int) -> Polynomial:
    """Sum of a[n+1-i, column] over the columns where label n+1-i occurs."""
    check_rank(n)
    if not 0 <= i <= n:
        raise ValueError(f"term index {i} outside 0..{n}")
    label = n + 1 - i
    total = Polynomial.zero()
    for col in label_columns(n, label):
        total = total + Polynomial.variable(torus_var(label, col))
    return total


def term_restriction_residual(n: int, i: int) -> Polynomial:
    """restrict(numerator) minus restrict(denominator) times the column sum.

    Zero iff the i-th term restricts to the predicted sum of torus
    coordinates; nonzero residuals are returned for diagnosis.
    """
    term = potential_term(n, i)
    return restrict_polynomial(n, term.numerator) - restrict_polynomial(
        n, term.denominator
    ) * term_restriction_factor(n, i)


def verify_term_restriction(n: int, i: int) -> bool:
    """True iff the restricted i-th term equals its predicted column sum."""
    return not term_restriction_residual(n, i)


def coordinate_sum(n: int) -> Polynomial:
    """The sum of all torus coordinates a[label, column]."""
    total = Polynomial.zero()
    for label, col in reduced_word(n):
        total = total + Polynomial.variable(torus_var(label, col))
    return total


def laurent_potential(n: int) -> RationalExpression:
    """The restricted potential in closed form, as one rational expression.

    The non-quantum part is the plain sum of all torus coordinates; the
    quantum part is q times the restriction of the row-prefix n-2 diagram
    over the full staircase monomial, so the whole expression is a Laurent
    polynomial in the torus coordinates.
    """
    check_rank(n)
    full = restrict_plucker(n, staircase(n))
    quantum_numerator = Polynomial.variable(QUANTUM) * restrict_plucker(
        n, staircase_prefix(n, n - 2)
    )
    return RationalExpression(coordinate_sum(n) * full + quantum_numerator, full)


def restricted_term_sum(n: int) -> RationalExpression:
    """Sum over all terms of restrict(numerator)/restrict(denominator)."""
    check_rank(n)
    total = RationalExpression(Polynomial.zero(), Polynomial.one())
    for term in superpotential(n):
        total = total + RationalExpression(
            restrict_polynomial(n, term.numerator),
            restrict_polynomial(n, term.denominator),
        )
    return total


def monomial_box_counts_hold(n: int) -> bool:
    """Every restriction monomial uses exactly one coordinate per box added."""
    for rows, poly in restrict_all(n).items():
        target = box_count(rows)
        for mono, coeff in poly.sorted_terms():
            if coeff < 1 or sum(exp for _, exp in mono) != target:
                return False
    return True
