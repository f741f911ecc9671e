"""Univariate polynomials with rational coefficients.

Characteristic and minimal polynomials land here. Eigenvalues are never
computed; instead squarefreeness and the number of distinct real roots
(via Sturm chains) characterize the spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple

from lierig.errors import ZeroPolynomialError

ZERO = Fraction(0)
ONE = Fraction(1)


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class RatPolynomial:
    """Coefficients lowest degree first; the zero polynomial has no coefficients."""

    coeffs: Tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _strip(Fraction(c) for c in coeffs))

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls([0] * degree + [coeff])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return self.degree <= 0

    def __add__(self, other: RatPolynomial) -> RatPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (ZERO,) * (n - len(other.coeffs))
        return RatPolynomial(x + y for x, y in zip(a, b))

    def __neg__(self) -> RatPolynomial:
        return RatPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: RatPolynomial) -> RatPolynomial:
        return self + (-other)

    def __mul__(self, other) -> RatPolynomial:
        if not isinstance(other, RatPolynomial):
            c = Fraction(other)
            return RatPolynomial(c * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return RatPolynomial()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPolynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other: RatPolynomial):
        if other.is_zero():
            raise ZeroPolynomialError("division by the zero polynomial")
        rem = list(self.coeffs)
        quot = [ZERO] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.leading
        d = other.degree
        while len(rem) - 1 >= d and rem:
            shift = len(rem) - 1 - d
            factor = rem[-1] / lead
            quot[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
            rem = list(_strip(rem))
        return RatPolynomial(quot), RatPolynomial(rem)

    def __mod__(self, other: RatPolynomial) -> RatPolynomial:
        return divmod(self, other)[1]

    def __floordiv__(self, other: RatPolynomial) -> RatPolynomial:
        return divmod(self, other)[0]

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> RatPolynomial:
        return RatPolynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def monic(self) -> RatPolynomial:
        if self.is_zero():
            raise ZeroPolynomialError("the zero polynomial has no monic form")
        return self * (1 / self.leading)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def poly_gcd(p: RatPolynomial, q: RatPolynomial) -> RatPolynomial:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) is 0."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a if a.is_zero() else a.monic()


def is_squarefree(p: RatPolynomial) -> bool:
    if p.is_zero():
        raise ZeroPolynomialError("squarefreeness of the zero polynomial is undefined")
    return poly_gcd(p, p.derivative()).is_constant()


def squarefree_part(p: RatPolynomial) -> RatPolynomial:
    """p / gcd(p, p'), made monic; same distinct roots as p, each simple."""
    if p.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no squarefree part")
    if p.is_constant():
        return RatPolynomial([1])
    return (p // poly_gcd(p, p.derivative())).monic()


def sturm_sequence(p: RatPolynomial) -> List[RatPolynomial]:
    if p.is_zero():
        raise ZeroPolynomialError("no Sturm sequence for the zero polynomial")
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    return chain[:-1]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: RatPolynomial) -> int:
    """Number of distinct real roots, from sign variations at -inf and +inf."""
    if p.is_zero():
        raise ZeroPolynomialError("the zero polynomial has infinitely many roots")
    chain = sturm_sequence(p)
    at_plus = [_sign(q.leading) for q in chain]
    at_minus = [_sign(q.leading) * (-1) ** q.degree for q in chain]
    return _variations(at_minus) - _variations(at_plus)


def has_only_real_roots(p: RatPolynomial) -> bool:
    sf = squarefree_part(p)
    return count_real_roots(sf) == sf.degree
