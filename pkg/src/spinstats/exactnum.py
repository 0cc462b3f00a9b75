"""Exact arithmetic over sums of square roots of rationals.

Every amplitude handled by this package is a finite sum ``sum_i q_i * sqrt(r_i)``
with rational ``q_i`` and distinct squarefree positive integer radicands
``r_i``.  Such sums form a vector space over the rationals in which equality
is decidable by comparing canonical term maps (square roots of distinct
squarefree integers are linearly independent over Q).  Multiplication stays
inside the space; division is supported only by single-term values, which is
all the coupling algorithms ever need.

Rationals are :class:`fractions.Fraction` (arbitrary precision, always
reduced, positive denominator), re-exported here as :data:`Rational`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Rational = Fraction

__all__ = [
    "Rational",
    "RadicalSum",
    "ComplexExact",
    "make_rational",
    "sqrt_rational",
    "format_rational",
    "squarefree_split",
]

# cache of n -> (g, r) with n == g*g*r and r squarefree
_SPLIT_CACHE: dict[int, tuple[int, int]] = {}


def squarefree_split(n: int) -> tuple[int, int]:
    """Factor a positive integer as ``g*g*r`` with ``r`` squarefree.

    Trial division up to sqrt(n); radicands in this package stay small.
    """
    if n < 1:
        raise ValueError(f"radicand must be a positive integer, got {n}")
    hit = _SPLIT_CACHE.get(n)
    if hit is not None:
        return hit
    g, r, m, d = 1, 1, n, 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            g *= d ** (e // 2)
            if e % 2:
                r *= d
        d += 1 if d == 2 else 2
    r *= m
    _SPLIT_CACHE[n] = (g, r)
    return g, r


def make_rational(numerator: int, denominator: int = 1) -> Fraction:
    """Reduced rational with positive denominator; zero denominator is a domain error."""
    if denominator == 0:
        raise ValueError("zero denominator")
    return Fraction(numerator, denominator)


def format_rational(q: Fraction) -> str:
    """Render ``p/q``, eliding the denominator when it is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class RadicalSum:
    """Canonical sum of rational multiples of square roots of squarefree integers.

    The term map never stores zero coefficients; radicand 1 carries the
    rational part.  Instances are immutable and hashable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Fraction | int] | None = None):
        canonical: dict[int, Fraction] = {}
        if terms:
            for radicand, coeff in terms.items():
                coeff = Fraction(coeff)
                if not coeff:
                    continue
                g, r = squarefree_split(radicand)
                merged = canonical.get(r, Fraction(0)) + coeff * g
                if merged:
                    canonical[r] = merged
                else:
                    canonical.pop(r, None)
        self._terms = canonical

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "RadicalSum":
        return cls()

    @classmethod
    def from_rational(cls, q: Fraction | int) -> "RadicalSum":
        return cls({1: Fraction(q)})

    @classmethod
    def term(cls, coeff: Fraction | int, radicand: int) -> "RadicalSum":
        """The single term ``coeff * sqrt(radicand)`` (radicand canonicalized)."""
        return cls({radicand: Fraction(coeff)})

    # -- inspection ---------------------------------------------------

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """Terms as (radicand, coefficient) pairs in ascending radicand order."""
        return iter(sorted(self._terms.items()))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_rational(self) -> bool:
        return not self._terms or set(self._terms) == {1}

    def as_fraction(self) -> Fraction:
        """The value as an exact rational; error if any irrational term remains."""
        if not self._terms:
            return Fraction(0)
        if set(self._terms) != {1}:
            raise ValueError(f"not a rational value: {self}")
        return self._terms[1]

    @property
    def term_count(self) -> int:
        return len(self._terms)

    def single_term(self) -> tuple[Fraction, int]:
        """Coefficient and radicand of a one-term value; error otherwise."""
        if len(self._terms) != 1:
            raise ValueError(f"not a single radical term: {self}")
        ((r, q),) = self._terms.items()
        return q, r

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "RadicalSum | Fraction | int") -> "RadicalSum":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self._terms)
        for r, q in other._terms.items():
            s = merged.get(r, Fraction(0)) + q
            if s:
                merged[r] = s
            else:
                merged.pop(r, None)
        return _raw(merged)

    __radd__ = __add__

    def __neg__(self) -> "RadicalSum":
        return _raw({r: -q for r, q in self._terms.items()})

    def __sub__(self, other: "RadicalSum | Fraction | int") -> "RadicalSum":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "RadicalSum | Fraction | int") -> "RadicalSum":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: "RadicalSum | Fraction | int") -> "RadicalSum":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for r1, q1 in self._terms.items():
            for r2, q2 in other._terms.items():
                # both radicands squarefree: r1*r2 == d^2 * (r1/d)*(r2/d)
                d = math.gcd(r1, r2)
                r = (r1 // d) * (r2 // d)
                q = q1 * q2 * d
                s = acc.get(r, Fraction(0)) + q
                if s:
                    acc[r] = s
                else:
                    acc.pop(r, None)
        return _raw(acc)

    __rmul__ = __mul__

    def inverse(self) -> "RadicalSum":
        """Inverse of a single-term value: 1/(q sqrt(r)) = (1/(q r)) sqrt(r)."""
        q, r = self.single_term()
        if not q:
            raise ZeroDivisionError("inverse of zero")
        return _raw({r: Fraction(1) / (q * r)})

    def __truediv__(self, other: "RadicalSum | Fraction | int") -> "RadicalSum":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def sqrt(self) -> "RadicalSum":
        """Square root of a nonnegative rational value as a single radical term."""
        return sqrt_rational(self.as_fraction())

    # -- conversions and comparisons -----------------------------------

    def to_float(self) -> float:
        return sum(float(q) * math.sqrt(r) for r, q in sorted(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RadicalSum.from_rational(other)
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for r, q in sorted(self._terms.items()):
            body = format_rational(q) if r == 1 else f"{format_rational(q)}√{r}"
            if parts and q > 0:
                parts.append("+")
            parts.append(body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"RadicalSum({dict(sorted(self._terms.items()))!r})"


def _raw(terms: dict[int, Fraction]) -> RadicalSum:
    # bypass canonicalization for maps already keyed by squarefree radicands
    out = RadicalSum.__new__(RadicalSum)
    out._terms = terms
    return out


def _coerce(value: object) -> "RadicalSum":
    if isinstance(value, RadicalSum):
        return value
    if isinstance(value, (int, Fraction)):
        return RadicalSum.from_rational(value)
    return NotImplemented


def sqrt_rational(q: Fraction | int) -> RadicalSum:
    """Exact square root of a nonnegative rational as ``c * sqrt(r)``, c >= 0.

    sqrt(p/q) = sqrt(p*q)/q, then the perfect-square part of p*q moves into
    the coefficient.
    """
    q = Fraction(q)
    if q < 0:
        raise ValueError(f"square root of negative rational {q}")
    if not q:
        return RadicalSum.zero()
    g, r = squarefree_split(q.numerator * q.denominator)
    return _raw({r: Fraction(g, q.denominator)})


class ComplexExact:
    """Complex number with exact :class:`RadicalSum` real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: RadicalSum | Fraction | int = 0, im: RadicalSum | Fraction | int = 0):
        self.re = re if isinstance(re, RadicalSum) else RadicalSum.from_rational(re)
        self.im = im if isinstance(im, RadicalSum) else RadicalSum.from_rational(im)

    @classmethod
    def zero(cls) -> "ComplexExact":
        return cls()

    @classmethod
    def one(cls) -> "ComplexExact":
        return cls(1)

    @classmethod
    def i(cls) -> "ComplexExact":
        return cls(0, 1)

    @property
    def is_zero(self) -> bool:
        return self.re.is_zero and self.im.is_zero

    def conjugate(self) -> "ComplexExact":
        return ComplexExact(self.re, -self.im)

    def abs2(self) -> RadicalSum:
        """Squared modulus, an exact (real) value."""
        return self.re * self.re + self.im * self.im

    def __add__(self, other: "ComplexExact") -> "ComplexExact":
        other = _coerce_complex(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexExact(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "ComplexExact":
        return ComplexExact(-self.re, -self.im)

    def __sub__(self, other: "ComplexExact") -> "ComplexExact":
        other = _coerce_complex(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "ComplexExact") -> "ComplexExact":
        other = _coerce_complex(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: "ComplexExact | RadicalSum | Fraction | int") -> "ComplexExact":
        other = _coerce_complex(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexExact(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: "RadicalSum | Fraction | int") -> "ComplexExact":
        # real single-term divisors only; enough for ladder normalization
        if isinstance(other, (int, Fraction)):
            other = RadicalSum.from_rational(other)
        if not isinstance(other, RadicalSum):
            return NotImplemented
        inv = other.inverse()
        return ComplexExact(self.re * inv, self.im * inv)

    def to_complex(self) -> complex:
        return complex(self.re.to_float(), self.im.to_float())

    def __eq__(self, other: object) -> bool:
        other = _coerce_complex(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __str__(self) -> str:
        if self.im.is_zero:
            return str(self.re)
        if self.re.is_zero:
            return f"{self.im}i"
        im = str(self.im)
        joiner = "" if im.startswith("-") else "+"
        return f"{self.re}{joiner}{im}i"

    def __repr__(self) -> str:
        return f"ComplexExact({self.re!r}, {self.im!r})"


def _coerce_complex(value: object) -> "ComplexExact":
    if isinstance(value, ComplexExact):
        return value
    if isinstance(value, (int, Fraction, RadicalSum)):
        return ComplexExact(value)
    return NotImplemented
