"""Weighted-grading arithmetic for P(a,b,c) and the class lattice of its blow-up."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import NamedTuple


class FrobeniusUndefinedError(ValueError):
    """Raised when the two-generator Frobenius number does not exist."""


@dataclass(frozen=True)
class WeightTriple:
    """Pairwise coprime positive weights (a, b, c) with deg(x,y,z) = (a,b,c)."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        for w in (self.a, self.b, self.c):
            if w < 1:
                raise ValueError(f"weights must be positive, got {self.as_tuple()}")
        for p, q, names in (
            (self.a, self.b, "(a,b)"),
            (self.b, self.c, "(b,c)"),
            (self.a, self.c, "(a,c)"),
        ):
            g = gcd(p, q)
            if g != 1:
                raise ValueError(f"weights must be pairwise coprime: gcd{names} = {g}")

    def as_tuple(self):
        return (self.a, self.b, self.c)

    @property
    def abc(self):
        return self.a * self.b * self.c


class ClassElement(NamedTuple):
    """A divisor class d*H + mu*E on the blown-up surface."""

    d: int
    mu: int


@lru_cache(maxsize=None)
def _monomials_of_degree(a, b, c, d):
    out = []
    for i in range(d // a + 1):
        rem_i = d - a * i
        for j in range(rem_i // b + 1):
            rem_j = rem_i - b * j
            if rem_j % c == 0:
                out.append((i, j, rem_j // c))
    return tuple(out)


def monomials_of_degree(w, d):
    """All exponent vectors (i,j,k) with a*i + b*j + c*k = d, in lex order."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    return list(_monomials_of_degree(w.a, w.b, w.c, d))


def monoid_member(n, p, q):
    """True iff n = alpha*p + beta*q for some non-negative integers alpha, beta."""
    if p < 1 or q < 1:
        raise ValueError("monoid generators must be positive")
    for alpha in range(n // p + 1):
        if (n - alpha * p) % q == 0:
            return True
    return False


def frobenius(p, q):
    """Largest integer not representable as a non-negative combination of p and q."""
    if p < 2 or q < 2:
        raise FrobeniusUndefinedError(
            f"no Frobenius number for ({p},{q}): all large integers are representable"
        )
    if gcd(p, q) != 1:
        raise FrobeniusUndefinedError(f"generators must be coprime, gcd = {gcd(p, q)}")
    return p * q - p - q


def intersection(w, u, v):
    """Intersection number (u.d*H + u.mu*E) . (v.d*H + v.mu*E), an exact rational.

    Uses H^2 = 1/(abc), H.E = 0, E^2 = -1.
    """
    return Fraction(u.d * v.d, w.abc) - Fraction(u.mu * v.mu)
