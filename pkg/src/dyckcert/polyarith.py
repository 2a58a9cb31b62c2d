"""Exact scalar and univariate polynomial arithmetic.

Scalars are Python ints and ``fractions.Fraction`` values; floats are
rejected outright so that every downstream certificate stays exact.
Polynomials are dense, stored in ascending degree order with trailing
zeros stripped.  The zero polynomial has an empty coefficient tuple and
degree -1, which keeps degree comparisons total.

All values are immutable and all operations are pure, so everything here
can be shared freely across threads or processes.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class InternalCheckError(AssertionError):
    """An internal exactness invariant failed: always an implementation bug,
    never a user error."""


class IntegralityError(InternalCheckError):
    """A division that must be exact left a remainder."""


def _canon(c) -> Scalar:
    """Canonicalize a coefficient: integral Fractions collapse to int."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"exact coefficient required, got {type(c).__name__}")


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), 0 whenever the pair is out of range."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def exact_div(a: int, b: int) -> int:
    """a // b, raising IntegralityError unless b divides a exactly."""
    q, r = divmod(a, b)
    if r:
        raise IntegralityError(f"inexact division {a}/{b}")
    return q


class Poly:
    """Dense univariate polynomial with exact coefficients.

    ``coeffs[i]`` is the coefficient of x^i.  Instances are immutable by
    convention; every operation returns a fresh Poly.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_canon(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Scalar, ...] = tuple(cs)

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> "Poly":
        """Monic polynomial with the given roots (with multiplicity)."""
        p = cls((1,))
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Scalar:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_integral(self) -> bool:
        """True iff every coefficient is an integer."""
        return all(isinstance(c, int) for c in self.coeffs)

    @property
    def valuation(self) -> int:
        """Multiplicity of the root 0 (0 for nonzero constant, -1 for zero)."""
        if self.is_zero:
            return -1
        v = 0
        while self.coeffs[v] == 0:
            v += 1
        return v

    def __getitem__(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("x" if c == 1 else f"{c}*x")
            else:
                terms.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
        return " + ".join(terms)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return Poly()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly(out)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "Poly":
        c = _canon(c)
        if c == 0:
            return Poly()
        return Poly(tuple(c * a for a in self.coeffs))

    def shift_down(self, v: int) -> "Poly":
        """Divide by x^v; the dropped low coefficients must be zero."""
        if any(c != 0 for c in self.coeffs[:v]):
            raise IntegralityError("shift_down would drop nonzero coefficients")
        return Poly(self.coeffs[v:])

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def __call__(self, x: Scalar) -> Scalar:
        """Evaluate by Horner's rule, exactly."""
        x = _canon(x)
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _canon(acc)

    def compose_neg(self) -> "Poly":
        """p(-x)."""
        return Poly(tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)))

    # -- Euclidean structure -------------------------------------------------

    def divrem(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Exact long division: self = q * other + r with deg r < deg other."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by the zero polynomial")
        if self.degree < other.degree:
            return Poly(), self
        rem = list(self.coeffs)
        dq = self.degree - other.degree
        q = [0] * (dq + 1)
        inv_lc = Fraction(1, 1) / Fraction(other.lc)
        d = other.degree
        for i in range(dq, -1, -1):
            c = rem[i + d] * inv_lc
            q[i] = c
            if c != 0:
                for j, oc in enumerate(other.coeffs):
                    rem[i + j] -= c * oc
        return Poly(q), Poly(rem[:d])

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divrem(other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divrem(other)[0]

    def __truediv__(self, other) -> "Poly":
        """Exact division: scalar divisor, or a Poly that divides evenly."""
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero scalar")
            return self.scale(Fraction(1, 1) / Fraction(other))
        if isinstance(other, Poly):
            q, r = self.divrem(other)
            if not r.is_zero:
                raise IntegralityError(f"{self!r} is not divisible by {other!r}")
            return q
        return NotImplemented

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ZeroDivisionError("the zero polynomial has no monic form")
        return self / self.lc

    def as_integral(self) -> "Poly":
        """Assert every coefficient is an integer and return self."""
        if not self.is_integral:
            raise IntegralityError(f"expected integer coefficients, got {self!r}")
        return self


X = Poly((0, 1))
ONE = Poly((1,))
ZERO = Poly()


def content(p: Poly) -> Fraction:
    """Positive rational c such that p / c is a primitive integer polynomial."""
    if p.is_zero:
        raise ZeroDivisionError("the zero polynomial has no content")
    num = 0
    den = 1
    for c in p.coeffs:
        f = Fraction(c)
        num = math.gcd(num, abs(f.numerator))
        den = den * f.denominator // math.gcd(den, f.denominator)
    return Fraction(num, den)


def primitive_int(p: Poly) -> Poly:
    """p divided by its (positive) content: integer coefficients, gcd 1,
    sign of every value preserved."""
    if p.is_zero:
        return p
    return (p / content(p)).as_integral()


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor (primitive-remainder Euclid, exact)."""
    if p.is_zero and q.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    a, b = primitive_int(p), primitive_int(q)
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = a % b
        a, b = b, (primitive_int(r) if not r.is_zero else r)
    return a.monic()
