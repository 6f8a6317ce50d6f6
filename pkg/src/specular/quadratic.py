"""Exact arithmetic in a real quadratic field ``Q(√D)``."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering


def _squarefree(D: int) -> bool:
    if D < 0:
        return False
    for p in range(2, math.isqrt(D) + 1):
        if D % (p * p) == 0:
            return False
    return True


@total_ordering
class QuadraticNumber:
    """The number ``p + q·√D`` with rational ``p, q`` and squarefree ``D >= 0``.

    Numbers with different radicands only mix when one of them is rational.
    """

    __slots__ = ("p", "q", "D")

    def __init__(self, p=0, q=0, D: int = 0):
        p, q = Fraction(p), Fraction(q)
        if D in (0, 1):
            p, q, D = p + q * D, Fraction(0), 0
        elif not _squarefree(D):
            raise ValueError(f"radicand {D} is not squarefree")
        if q == 0:
            D = 0
        self.p, self.q, self.D = p, q, D

    @classmethod
    def coerce(cls, x, D: int = 0) -> "QuadraticNumber":
        if isinstance(x, QuadraticNumber):
            return x
        if isinstance(x, (list, tuple)):
            p, q = x
            return cls(Fraction(p), Fraction(q), D)
        return cls(Fraction(x), 0, 0)

    def _radicand(self, other: "QuadraticNumber") -> int:
        if self.D and other.D and self.D != other.D:
            raise ValueError(f"mixing Q(√{self.D}) and Q(√{other.D})")
        return self.D or other.D

    def __add__(self, other):
        other = QuadraticNumber.coerce(other)
        return QuadraticNumber(self.p + other.p, self.q + other.q, self._radicand(other))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.p, -self.q, self.D)

    def __sub__(self, other):
        return self + (-QuadraticNumber.coerce(other))

    def __rsub__(self, other):
        return QuadraticNumber.coerce(other) - self

    def __mul__(self, other):
        other = QuadraticNumber.coerce(other)
        D = self._radicand(other)
        return QuadraticNumber(
            self.p * other.p + self.q * other.q * D,
            self.p * other.q + self.q * other.p,
            D,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QuadraticNumber.coerce(other)
        D = self._radicand(other)
        norm = other.p * other.p - other.q * other.q * D
        if norm == 0:
            raise ZeroDivisionError("division by zero")
        conj = QuadraticNumber(other.p, -other.q, D)
        num = self * conj
        return QuadraticNumber(num.p / norm, num.q / norm, D)

    def sign(self) -> int:
        p, q = self.p, self.q
        if q == 0:
            return (p > 0) - (p < 0)
        sq = (q > 0) - (q < 0)
        if p == 0 or (p > 0) == (q > 0):
            return sq if p == 0 else (1 if p > 0 else -1)
        # p and q·√D have opposite signs
        lhs, rhs = p * p, q * q * self.D
        if lhs == rhs:
            return 0
        return (1 if p > 0 else -1) if lhs > rhs else sq

    def __eq__(self, other):
        try:
            other = QuadraticNumber.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return (self - other).sign() == 0

    def __lt__(self, other):
        return (self - QuadraticNumber.coerce(other)).sign() < 0

    def __hash__(self):
        return hash((self.p, self.q, self.D))

    def __float__(self):
        return float(self.p) + float(self.q) * math.sqrt(self.D)

    def __repr__(self):
        if self.q == 0:
            return f"QuadraticNumber({self.p})"
        return f"QuadraticNumber({self.p}, {self.q}, D={self.D})"

    def __str__(self):
        if self.q == 0:
            return str(self.p)
        return f"{self.p}{'+' if self.q > 0 else '-'}{abs(self.q)}√{self.D}"

    def to_json(self) -> list[str]:
        return [str(self.p), str(self.q)]
