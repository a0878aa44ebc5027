"""Dense univariate polynomials over cyclotomic fields or over such polynomial rings.

``Poly`` coefficients are stored lowest degree first and are either
CycloElements (a field, so division and gcd are available) or Polys
themselves (K[Z][X], used for resultants in X with coefficients in K[Z]).
"""

from __future__ import annotations

from .cyclotomic import CycloElement, field
from .errors import DivisionByZero, ZeroLeadingCoefficient


class Poly:
    __slots__ = ("coeffs", "zero")

    def __init__(self, coeffs, zero):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = cs
        self.zero = zero

    @classmethod
    def over(cls, N: int, coeffs) -> "Poly":
        F = field(N)
        return cls([c if isinstance(c, CycloElement) else F.rational(c) for c in coeffs], F.zero())

    @classmethod
    def constant(cls, c, zero) -> "Poly":
        return cls([c], zero)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            raise ZeroLeadingCoefficient("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        return Poly([other], self.zero)

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + [self.zero] * (n - len(self.coeffs))
        b = other.coeffs + [self.zero] * (n - len(other.coeffs))
        return Poly([x + y for x, y in zip(a, b)], self.zero)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-x for x in self.coeffs], self.zero)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([x * other for x in self.coeffs], self.zero)
        if self.is_zero() or other.is_zero():
            return Poly([], self.zero)
        out = [self.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if _is_zero(x):
                continue
            for j, y in enumerate(other.coeffs):
                if not _is_zero(y):
                    out[i + j] = out[i + j] + x * y
        return Poly(out, self.zero)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        acc = Poly([_one_like(self.zero)], self.zero)
        for _ in range(k):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = self._lift(other)
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(x == y for x, y in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __call__(self, x):
        acc = self.zero * 0 if not isinstance(self.zero, Poly) else self.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([c * k for k, c in enumerate(self.coeffs)][1:], self.zero)

    def map_coeffs(self, f, zero=None) -> "Poly":
        return Poly([f(c) for c in self.coeffs], self.zero if zero is None else zero)

    def divmod(self, other: "Poly"):
        """Euclidean division; the leading coefficient of ``other`` must be invertible."""
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        lb = other.lc()
        q = [self.zero] * max(len(r) - db, 1)
        for k in range(len(r) - 1 - db, -1, -1):
            c = _exact_div(r[k + db], lb)
            q[k] = c
            if not _is_zero(c):
                for j, b in enumerate(other.coeffs):
                    r[k + j] = r[k + j] - c * b
        return Poly(q, self.zero), Poly(r[:db], self.zero)

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "Poly":
        return self * self.lc().inverse()

    def __repr__(self):
        return f"Poly({self.coeffs!r})"


def _is_zero(x) -> bool:
    if isinstance(x, (CycloElement, Poly)):
        return x.is_zero()
    return x == 0


def _one_like(zero):
    if isinstance(zero, Poly):
        return Poly([_one_like(zero.zero)], zero.zero)
    return zero + 1


def _exact_div(a, b):
    if isinstance(a, Poly):
        return a.exact_div(b)
    return a / b


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over a cyclotomic field (zero if both are zero)."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a if a.is_zero() else a.monic()


def bareiss_det(rows, zero, one):
    """Fraction-free determinant; entries must support exact division."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            swap = next((i for i in range(k + 1, n) if not _is_zero(m[i][k])), None)
            if swap is None:
                return zero
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = _exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def sylvester_matrix(p: Poly, q: Poly):
    m, n = p.degree, q.degree
    size = m + n
    zero = p.zero
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([zero] * i + pc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + qc + [zero] * (size - n - 1 - i))
    return rows


def resultant(p: Poly, q: Poly):
    """Determinant of the Sylvester matrix of p and q."""
    if p.is_zero() or q.is_zero():
        raise ZeroLeadingCoefficient("resultant of a zero polynomial")
    zero = p.zero
    one = _one_like(zero)
    if p.degree == 0 and q.degree == 0:
        return one
    return bareiss_det(sylvester_matrix(p, q), zero, one)
