"""Closed formula and recurrences for the UD/UUD coefficient triangle.

w(n, k, m) counts Dyck paths of semilength n with k UD-factors and m
UUD-factors; W_{n,k}(x) is its generating polynomial in m.  Three
independent routes are provided: the closed product formula, a three-term
recurrence in n for fixed k, and a three-term recurrence in k for fixed n.
Every recurrence runs in exact rational arithmetic and loudly asserts that
its output is an integer polynomial that matches the closed formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dyck import CoeffTriangle, Provenance
from .polyarith import (
    InternalCheckError,
    Poly,
    X,
    binomial,
    exact_div,
)


class AgreementError(InternalCheckError):
    """A recurrence disagreed with the closed formula."""


def catalan(n: int) -> int:
    """Number of Dyck paths of semilength n."""
    if n < 0:
        raise ValueError("catalan is defined for n >= 0")
    return exact_div(binomial(2 * n, n), n + 1)


def narayana(n: int, k: int) -> int:
    """Number of Dyck paths of semilength n with exactly k UD-factors."""
    if n < 1:
        raise ValueError("narayana is defined for n >= 1")
    return exact_div(binomial(n, k - 1) * binomial(n, k), n)


def w_formula(n: int, k: int, m: int) -> int:
    """Closed formula for w(n, k, m); 0 outside the support."""
    if 0 < m <= k and k + m <= n:
        return exact_div(binomial(n, k - 1) * binomial(n - k - 1, m - 1) * binomial(k, m), k)
    if m == 0 and n == k and n >= 0:
        return 1
    return 0


@dataclass(frozen=True)
class WPoly:
    """The generating polynomial W_{n,k}(x) with provenance-independent
    structural invariants checked at construction."""

    n: int
    k: int
    poly: Poly

    def __post_init__(self):
        n, k, p = self.n, self.k, self.poly
        p.as_integral()
        if any(c < 0 for c in p.coeffs):
            raise InternalCheckError(f"W[{n},{k}] has a negative coefficient: {p!r}")
        if n == k:
            if p != Poly((1,)):
                raise InternalCheckError(f"W[{n},{n}] must be 1, got {p!r}")
        elif k == 0:
            if not p.is_zero:
                raise InternalCheckError(f"W[{n},0] must vanish for n > 0, got {p!r}")
        else:
            if p[0] != 0 or p.degree != min(k, n - k):
                raise InternalCheckError(f"W[{n},{k}] violates the degree law: {p!r}")


def w_poly(n: int, k: int) -> WPoly:
    """W_{n,k}(x) built coefficient-by-coefficient from the closed formula."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"w_poly requires 0 <= k <= n, got (n, k) = ({n}, {k})")
    return WPoly(n, k, Poly(tuple(w_formula(n, k, m) for m in range(k + 1))))


def formula_triangle(n: int) -> CoeffTriangle:
    """The full (k, m) triangle at semilength n from the closed formula."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    entries = {}
    for k in range(n + 1):
        for m in range(k + 1):
            v = w_formula(n, k, m)
            if v:
                entries[(k, m)] = v
    return CoeffTriangle(n, entries, Provenance.FORMULA)


# -- fixed k: three-term recurrence in n -----------------------------------


@dataclass(frozen=True)
class FixedKRecCoeffs:
    """Multipliers A, B with W_{k+j+2,k} = A * W_{k+j+1,k} + B * W_{k+j,k}."""

    k: int
    j: int
    A: Poly
    B: Poly


def fixed_k_rec_coeffs(k: int, j: int) -> FixedKRecCoeffs:
    """Exact rational multipliers of the fixed-k recurrence at offset j = n - k."""
    if k < 1 or j < 0:
        raise ValueError(f"need k >= 1 and j >= 0, got ({k}, {j})")
    a_scale = Fraction(k + j + 2, (j + 2) * (j + 3))
    A = Poly((2 * (j + 1), -(j - k + 1))) * a_scale
    b_scale = Fraction((k + j + 1) * (k + j + 2) * j, (j + 2) ** 2 * (j + 3))
    B = Poly((-1, 1)) * b_scale
    return FixedKRecCoeffs(k, j, A, B)


def w_poly_rec_fixed_k(k: int, n_max: int) -> list[WPoly]:
    """W_{n,k} for n = k..n_max, seeded from the closed formula at n = k, k+1
    and then iterated through the fixed-k recurrence."""
    if k < 1:
        raise ValueError("the fixed-k recurrence needs k >= 1")
    if n_max < k:
        raise ValueError(f"n_max must be at least k, got ({k}, {n_max})")
    out = [w_poly(k, k)]
    if n_max == k:
        return out
    out.append(w_poly(k + 1, k))
    for n in range(k, n_max - 1):
        co = fixed_k_rec_coeffs(k, n - k)
        nxt = co.A * out[-1].poly + co.B * out[-2].poly
        out.append(WPoly(n + 2, k, nxt.as_integral()))
    return out


# -- fixed n: three-term recurrence in k -----------------------------------


@dataclass(frozen=True)
class FixedNRecCoeffs:
    """Multipliers with W_{n,k+2} = (a*x + b) * W_{n,k+1} - c * W_{n,k}."""

    n: int
    k: int
    a: Fraction
    b: Fraction
    c: Fraction


def fixed_n_valid_k_max(n: int) -> int:
    """Largest k for which the fixed-n recurrence step is valid."""
    return (n + 1) // 2 - 2


def fixed_n_rec_coeffs(n: int, k: int) -> FixedNRecCoeffs:
    """Exact a, b, c of the fixed-n recurrence.

    Refuses k outside 1 <= k <= floor((n+1)/2) - 2: beyond it the displayed
    denominators can vanish and nothing is claimed there.
    """
    if not 1 <= k <= fixed_n_valid_k_max(n):
        raise ValueError(
            f"fixed-n multipliers are only valid for 1 <= k <= {fixed_n_valid_k_max(n)} "
            f"at n = {n}, got k = {k}"
        )
    a = Fraction((n - k) * (n - 2 * k - 2) * (n - 2 * k - 3), (k + 1) * (k + 2) * (n - k - 2))
    b = Fraction(2 * (n - k) * (n - k - 1) * (n - 2 * k - 2), (k + 2) * (n - k - 2) * (n - 2 * k - 1))
    c = Fraction(
        (n - k + 1) * (n - k) ** 2 * (n - 2 * k - 3),
        (k + 1) * (k + 2) * (n - k - 2) * (n - 2 * k - 1),
    )
    return FixedNRecCoeffs(n, k, a, b, c)


def w_poly_rec_fixed_n(n: int) -> list[WPoly]:
    """W_{n,k} for k = 1..floor((n+1)/2), seeded from the closed formula at
    k = 1, 2 and iterated through the fixed-n recurrence.

    Each step is asserted integral and equal to the closed formula, so a
    defect in either route fails loudly.
    """
    if n < 5:
        raise ValueError("the fixed-n recurrence needs n >= 5 for a valid step")
    out = [w_poly(n, 1), w_poly(n, 2)]
    for k in range(1, fixed_n_valid_k_max(n) + 1):
        co = fixed_n_rec_coeffs(n, k)
        nxt = (co.a * X + Poly((co.b,))) * out[k].poly - co.c * out[k - 1].poly
        got = WPoly(n, k + 2, nxt.as_integral())
        if got.poly != w_poly(n, k + 2).poly:
            raise AgreementError(f"fixed-n recurrence diverges from the formula at W[{n},{k + 2}]")
        out.append(got)
    return out


# -- scalar identity checkers ------------------------------------------------


def fixed_k_identity_holds(n: int, k: int, m: int) -> bool:
    """Does the fixed-k coefficient recurrence hold exactly at (n, k, m)?

    Valid for n >= k - 1 >= 0; m may be anything (out-of-support terms vanish).
    """
    if k < 1 or n < k - 1:
        raise ValueError(f"identity is stated for n >= k - 1 >= 0, got ({n}, {k})")
    d = (n - k + 2) * (n - k + 3)
    lhs = Fraction(w_formula(n + 2, k, m))
    rhs = (
        Fraccion_zero := Fraction(0)
    )  # placeholder removed below
    return lhs == (
        Fraction(2 * (n + 2) * (n - k + 1), d) * w_formula(n + 1, k, m)
        - Fraction((n + 2) * (n - 2 * k + 1), d) * w_formula(n + 1, k, m - 1)
        + Fraction((n + 1) * (n + 2) * (n - k), (n - k + 2) * d)
        * (w_formula(n, k, m - 1) - w_formula(n, k, m))
    )


def fixed_n_identity_holds(n: int, k: int, m: int) -> bool:
    """Does the fixed-n coefficient recurrence hold exactly at (n, k, m)?"""
    co = fixed_n_rec_coeffs(n, k)
    return Fraction(w_formula(n, k + 2, m)) == (
        co.a * w_formula(n, k + 1, m - 1)
        + co.b * w_formula(n, k + 1, m)
        - co.c * w_formula(n, k, m)
    )


# -- symmetry -----------------------------------------------------------------


def check_symmetry(k: int) -> tuple[bool, int | None]:
    """Check w(2k+1, k, m) == w(2k+1, k, k+1-m) for 1 <= m <= k.

    Returns (True, None) or (False, first violating m).
    """
    if k < 1:
        raise ValueError("symmetry is stated for k >= 1")
    n = 2 * k + 1
    for m in range(1, k + 1):
        if w_formula(n, k, m) != w_formula(n, k, k + 1 - m):
            return False, m
    return True, None


# -- triangles from the recurrences (CLI cross-check sources) ----------------


def rec_fixed_k_triangle(n: int) -> CoeffTriangle:
    """Triangle at semilength n with every row produced by its own fixed-k
    recurrence run."""
    if n < 1:
        raise ValueError("the fixed-k triangle source needs n >= 1")
    entries = {}
    for k in range(1, n + 1):
        wp = w_poly_rec_fixed_k(k, n)[-1]
        for m, v in enumerate(wp.poly.coeffs):
            if v:
                entries[(k, m)] = v
    return CoeffTriangle(n, entries, Provenance.REC_FIXED_K)


def rec_fixed_n_triangle(n: int) -> CoeffTriangle:
    """Triangle rows k = 1..floor((n+1)/2) from the fixed-n recurrence run
    (its validity range; the remaining rows are outside the recurrence)."""
    entries = {}
    for wp in w_poly_rec_fixed_n(n):
        for m, v in enumerate(wp.poly.coeffs):
            if v:
                entries[(wp.k, m)] = v
    return CoeffTriangle(n, entries, Provenance.REC_FIXED_N)
