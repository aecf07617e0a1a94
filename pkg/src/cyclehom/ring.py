"""Commutative ring weights: exact integers and degree-truncated polynomials.

Plain Python ints serve as the exact-integer ring.  TruncatedPolynomial is
Z[z] with every term of degree greater than the truncation bound discarded
on multiplication.  Mixed int/polynomial arithmetic works in both orders, so
accumulators can start at the int 0 regardless of the ring in use.
"""

from __future__ import annotations


class TruncatedPolynomial:
    """Polynomial over arbitrary-precision ints, truncated above ``trunc``."""

    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs, trunc: int):
        if trunc < 0:
            raise ValueError("truncation bound must be nonnegative")
        cs = list(coeffs[: trunc + 1])
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.trunc = trunc

    @staticmethod
    def term(coefficient: int, degree: int, trunc: int) -> "TruncatedPolynomial":
        if degree > trunc:
            return TruncatedPolynomial((), trunc)
        return TruncatedPolynomial((0,) * degree + (coefficient,), trunc)

    def coefficient(self, degree: int) -> int:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return 0

    def at_one(self) -> int:
        """Evaluate at z = 1."""
        return sum(self.coeffs)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            if other == 0:
                return not self.coeffs
            return self.coeffs == (other,)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self
            other = TruncatedPolynomial((other,), self.trunc)
        elif not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        a = self.coeffs
        b = other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        t = self.trunc if self.trunc >= other.trunc else other.trunc
        return _raw(out, t)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return 0
            return _raw([c * other for c in self.coeffs], self.trunc)
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        a = self.coeffs
        b = other.coeffs
        if not a or not b:
            return _raw([], self.trunc)
        t = self.trunc if self.trunc >= other.trunc else other.trunc
        la = len(a)
        lb = len(b)
        if la == 1:
            c = a[0]
            return _raw([x * c for x in b[: t + 1]], t)
        if lb == 1:
            c = b[0]
            return _raw([x * c for x in a[: t + 1]], t)
        top = la + lb - 1
        if top > t + 1:
            top = t + 1
        out = [0] * top
        for i in range(la):
            ca = a[i]
            if ca == 0:
                continue
            stop = top - i
            if stop <= 0:
                break
            if stop > lb:
                stop = lb
            for j in range(stop):
                out[i + j] += ca * b[j]
        return _raw(out, t)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"TruncatedPolynomial({list(self.coeffs)}, trunc={self.trunc})"


def _raw(coeffs: list, trunc: int) -> TruncatedPolynomial:
    """Internal constructor: takes ownership of a pre-truncated list."""
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    poly = TruncatedPolynomial.__new__(TruncatedPolynomial)
    poly.coeffs = tuple(coeffs)
    poly.trunc = trunc
    return poly


RingWeight = int | TruncatedPolynomial


def ring_coefficient(value: RingWeight, degree: int) -> int:
    """Coefficient of z**degree, treating a bare int as a constant."""
    if isinstance(value, int):
        return value if degree == 0 else 0
    return value.coefficient(degree)


def ring_at_one(value: RingWeight) -> int:
    if isinstance(value, int):
        return value
    return value.at_one()
