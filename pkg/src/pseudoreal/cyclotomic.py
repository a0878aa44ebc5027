"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are dense coefficient vectors in the power basis 1, z, ..., z^(d-1)
with z = exp(2*pi*i/N) and d = phi(N), reduced modulo the N-th cyclotomic
polynomial.  Internally a vector is stored as integer numerators over one
positive common denominator, normalised so the representation is unique.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

import mpmath

from .errors import DivisionByZero, FieldMismatch, NotASubfield, ParseError

DEFAULT_PRECISION = 128


# --- integer helpers ---------------------------------------------------------

def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def totient(n: int) -> int:
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def lcm(*ns: int) -> int:
    out = 1
    for n in ns:
        out = out * n // math.gcd(out, n)
    return out


def _poly_exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    # both low -> high, den monic
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            q[k - dd] = c
            for j in range(dd + 1):
                num[k - dd + j] -= c * den[j]
    assert not any(num), "inexact cyclotomic division"
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("conductor must be >= 1")
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num = _poly_exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


# --- fields ------------------------------------------------------------------

class CycloField:
    """The field Q(zeta_N).  Use :func:`field` to get the shared instance."""

    def __init__(self, N: int):
        if N < 1:
            raise ValueError("conductor must be >= 1")
        self.N = N
        self.modulus = cyclotomic_polynomial(N)
        self.degree = len(self.modulus) - 1
        d = self.degree
        # z^k mod Phi_N for d <= k <= 2d - 2
        red = []
        cur = [-c for c in self.modulus[:d]]
        for _ in range(max(d - 1, 0)):
            red.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(d):
                    cur[j] -= top * self.modulus[j]
        self._reduction = red
        # z^k for 0 <= k < N
        powers = []
        cur = [0] * d
        cur[0] = 1
        for _ in range(N):
            powers.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(d):
                    cur[j] -= top * self.modulus[j]
        self._powers = powers
        # normalised trace Tr(z^k)/d, a Ramanujan sum; invariant under embedding
        weights = []
        for k in range(d):
            m = N // math.gcd(k, N)
            weights.append(Fraction(mobius(m), totient(m)))
        self._trace_weights = tuple(weights)

    def __repr__(self):
        return f"CycloField({self.N})"

    def __eq__(self, other):
        return isinstance(other, CycloField) and other.N == self.N

    def __hash__(self):
        return hash(("CycloField", self.N))

    # constructors
    def zero(self) -> "CycloElement":
        return CycloElement._raw(self, (0,) * self.degree, 1)

    def one(self) -> "CycloElement":
        return self.rational(1)

    def rational(self, r) -> "CycloElement":
        r = Fraction(r)
        nums = [0] * self.degree
        nums[0] = r.numerator
        return CycloElement._raw(self, tuple(nums), r.denominator)

    def zeta(self, k: int = 1) -> "CycloElement":
        """zeta_N ** k."""
        return CycloElement._raw(self, self._powers[k % self.N], 1)

    def root_of_unity(self, n: int, k: int = 1) -> "CycloElement":
        """zeta_n ** k, which requires n | N."""
        if self.N % n:
            raise NotASubfield(f"zeta_{n} is not in Q(zeta_{self.N})")
        return self.zeta((self.N // n) * k)

    def i(self) -> "CycloElement":
        return self.root_of_unity(4)

    def from_coeffs(self, coeffs) -> "CycloElement":
        """Element from power-basis coefficients (any length; reduced mod Phi_N)."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = lcm(den, c.denominator)
        acc = [0] * self.degree
        for k, c in enumerate(fr):
            if c:
                v = c.numerator * (den // c.denominator)
                for j, p in enumerate(self._powers[k % self.N]):
                    if p:
                        acc[j] += v * p
        return CycloElement._make(self, acc, den)

    def __call__(self, value) -> "CycloElement":
        if isinstance(value, CycloElement):
            if value.field.N != self.N:
                raise FieldMismatch(f"element of Q(zeta_{value.field.N}) used in Q(zeta_{self.N})")
            return value
        return self.rational(value)


@lru_cache(maxsize=None)
def field(N: int) -> CycloField:
    """Shared CycloField instance for conductor N."""
    return CycloField(N)


field_create = field


def _lift_scalar(x, F: CycloField) -> "CycloElement":
    if isinstance(x, CycloElement):
        if x.field.N != F.N:
            raise FieldMismatch(f"Q(zeta_{x.field.N}) vs Q(zeta_{F.N}); embed into a common field first")
        return x
    if isinstance(x, (int, Fraction)):
        return F.rational(x)
    return NotImplemented


# --- elements ----------------------------------------------------------------

class CycloElement:
    """Immutable element of Q(zeta_N)."""

    __slots__ = ("field", "nums", "den", "_hash")

    def __init__(self, F: CycloField | int, coeffs):
        if isinstance(F, int):
            F = field(F)
        e = F.from_coeffs(coeffs)
        self.field, self.nums, self.den = F, e.nums, e.den
        self._hash = None

    @classmethod
    def _raw(cls, F, nums, den):
        self = object.__new__(cls)
        self.field = F
        self.nums = nums
        self.den = den
        self._hash = None
        return self

    @classmethod
    def _make(cls, F, nums, den):
        g = math.gcd(den, *nums)
        if g != 1:
            nums = [n // g for n in nums]
            den //= g
        if den < 0:
            nums = [-n for n in nums]
            den = -den
        return cls._raw(F, tuple(nums), den)

    # basic accessors
    @property
    def N(self) -> int:
        return self.field.N

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self.den) for n in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    # arithmetic
    def __add__(self, other):
        other = _lift_scalar(other, self.field)
        if other is NotImplemented:
            return other
        d1, d2 = self.den, other.den
        return CycloElement._make(self.field, [a * d2 + b * d1 for a, b in zip(self.nums, other.nums)], d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return CycloElement._raw(self.field, tuple(-a for a in self.nums), self.den)

    def __sub__(self, other):
        other = _lift_scalar(other, self.field)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return CycloElement._make(self.field, [a * other.numerator for a in self.nums],
                                      self.den * other.denominator)
        other = _lift_scalar(other, self.field)
        if other is NotImplemented:
            return other
        F = self.field
        d = F.degree
        a, b = self.nums, other.nums
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                for j, r in enumerate(F._reduction[k - d]):
                    if r:
                        out[j] += c * r
        return CycloElement._make(F, out, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return _inverse(self.field.N, self.nums, self.den)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self * (1 / Fraction(other))
        other = _lift_scalar(other, self.field)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _lift_scalar(other, self.field) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        acc = self.field.one()
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    # Galois action
    def galois(self, k: int) -> "CycloElement":
        """Image under the automorphism z -> z^k (gcd(k, N) = 1)."""
        F = self.field
        if math.gcd(k, F.N) != 1:
            raise ValueError("k must be coprime to the conductor")
        acc = [0] * F.degree
        for j, a in enumerate(self.nums):
            if a:
                for t, p in enumerate(F._powers[(j * k) % F.N]):
                    if p:
                        acc[t] += a * p
        return CycloElement._make(F, acc, self.den)

    def conj(self) -> "CycloElement":
        """Complex conjugation z -> z^(N-1)."""
        if self.field.N <= 2:
            return self
        return self.galois(-1)

    def is_real(self) -> bool:
        return self.conj() == self

    def embed(self, M: int) -> "CycloElement":
        """Image in Q(zeta_M) under zeta_N -> zeta_M^(M/N)."""
        N = self.field.N
        if M == N:
            return self
        if M % N:
            raise NotASubfield(f"Q(zeta_{N}) is not a subfield of Q(zeta_{M})")
        G = field(M)
        step = M // N
        acc = [0] * G.degree
        for j, a in enumerate(self.nums):
            if a:
                for t, p in enumerate(G._powers[(j * step) % M]):
                    if p:
                        acc[t] += a * p
        return CycloElement._make(G, acc, self.den)

    def restrict(self, N: int) -> "CycloElement":
        """Preimage in Q(zeta_N) for N | self.N; NotASubfield if x is not there."""
        M = self.field.N
        if M % N:
            raise NotASubfield(f"Q(zeta_{N}) is not a subfield of Q(zeta_{M})")
        if N == M:
            return self
        if self.is_rational():
            return field(N).rational(self.rational_value())
        F = field(N)
        basis = [F.zeta(k).embed(M).coeffs for k in range(F.degree)]
        sol = _solve_rational(basis, self.coeffs)
        if sol is None:
            raise NotASubfield(f"{self} does not lie in Q(zeta_{N})")
        return F.from_coeffs(sol)

    def trace_normalized(self) -> Fraction:
        """Tr(x)/[Q(zeta_N):Q]; unchanged by embedding into larger fields."""
        w = self.field._trace_weights
        return sum((w[k] * a for k, a in enumerate(self.nums) if a), Fraction(0)) / self.den

    # numerics
    def to_complex(self, precision: int = DEFAULT_PRECISION) -> mpmath.mpc:
        if precision < 53:
            raise ValueError("precision must be at least 53 bits")
        N = self.field.N
        with mpmath.workprec(precision + 16):
            acc = mpmath.mpc(0)
            for k, a in enumerate(self.nums):
                if a:
                    acc += a * mpmath.expjpi(mpmath.mpf(2 * k) / N)
            acc = acc / self.den
        with mpmath.workprec(precision):
            return +acc

    def __complex__(self):
        return complex(self.to_complex(53))

    def re_im(self) -> tuple["CycloElement", "CycloElement"]:
        return re_im(self)

    # comparison / hashing
    def __eq__(self, other):
        if isinstance(other, CycloElement):
            if other.field.N == self.field.N:
                return self.nums == other.nums and self.den == other.den
            M = lcm(self.field.N, other.field.N)
            return self.embed(M) == other.embed(M)
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.nums[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            h = self.trace_normalized()
            self._hash = hash(h) if self.is_rational() else hash(("cyclo", h))
        return self._hash

    def key(self):
        """Exact hashable key, only meaningful within one conductor."""
        return (self.nums, self.den)

    def __repr__(self):
        return f"CycloElement({self.field.N}, {format_element(self)!r})"

    def __str__(self):
        return format_element(self)


@lru_cache(maxsize=65536)
def _inverse(N: int, nums: tuple[int, ...], den: int) -> CycloElement:
    # extended Euclid in Q[x] against Phi_N
    F = field(N)
    a = _trim([Fraction(n, den) for n in nums])
    m = [Fraction(c) for c in F.modulus]
    r0, r1 = m, a
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1 or r1[0] == 0:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1))
    # r1 is a nonzero constant
    c = r1[0]
    return F.from_coeffs([x / c for x in s1])


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _pdivmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lb
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    return _trim(q), _trim(a[:len(b) - 1] or [Fraction(0)])


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _psub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _solve_rational(columns, target):
    """Solve sum_k x_k * columns[k] = target over Q; None if inconsistent."""
    n = len(columns)
    m = len(target)
    rows = [[Fraction(columns[k][r]) for k in range(n)] + [Fraction(target[r])] for r in range(m)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(rows[i][n] != 0 for i in range(r, m)):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        x[c] = rows[i][n]
    return x


# --- module-level operations -------------------------------------------------

def common_field(*xs) -> CycloField:
    return field(lcm(*(x.field.N for x in xs if isinstance(x, CycloElement))))


def arith(x: CycloElement, y: CycloElement, op: str) -> CycloElement:
    if x.field.N != y.field.N:
        raise FieldMismatch(f"Q(zeta_{x.field.N}) vs Q(zeta_{y.field.N})")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown op {op!r}")


def embed(x: CycloElement, M: int) -> CycloElement:
    return x.embed(M)


def conj(x: CycloElement) -> CycloElement:
    return x.conj()


def is_real(x: CycloElement) -> bool:
    return x.is_real()


def re_im(x: CycloElement) -> tuple[CycloElement, CycloElement]:
    """(Re x, Im x), both living in Q(zeta_lcm(4, N))."""
    M = lcm(4, x.field.N)
    y = x.embed(M)
    yc = y.conj()
    i = field(M).i()
    return (y + yc) * Fraction(1, 2), (y - yc) * Fraction(1, 2) * (-i)


def to_complex(x: CycloElement, precision: int = DEFAULT_PRECISION) -> mpmath.mpc:
    return x.to_complex(precision)


def cos_2pi(k: int, n: int, M: int | None = None) -> CycloElement:
    """cos(2*pi*k/n) as an element of Q(zeta_M), M defaulting to n."""
    F = field(M or n)
    z = F.root_of_unity(n, k)
    return (z + z.conj()) * Fraction(1, 2)


def sin_2pi(k: int, n: int, M: int | None = None) -> CycloElement:
    """sin(2*pi*k/n) in Q(zeta_M); M must be divisible by lcm(4, n)."""
    F = field(M or lcm(4, n))
    z = F.root_of_unity(n, k)
    return (z - z.conj()) * Fraction(1, 2) * (-F.i())


# --- text and JSON -----------------------------------------------------------

def format_element(x: CycloElement, var: str = "z") -> str:
    terms = []
    for k, c in enumerate(x.coeffs):
        if not c:
            continue
        if k == 0:
            body = str(c)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if c == 1:
                body = mono
            elif c == -1:
                body = "-" + mono
            else:
                body = f"{c}*{mono}"
        terms.append(body)
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += (" - " + t[1:]) if t.startswith("-") else (" + " + t)
    return out


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(?:(z|i)(?:\s*\^\s*(-?\d+))?)?\s*"
)


def parse_element(expr: str, N: int) -> CycloElement:
    """Parse expressions like ``1/2*z^3 - 2`` or ``2 - i`` into Q(zeta_N).

    ``z`` is zeta_N; ``i`` is zeta_4 and needs 4 | N.
    """
    F = field(N)
    s = expr.strip()
    if not s:
        raise ParseError("empty expression")
    pos = 0
    acc = F.zero()
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse {expr!r} near position {pos}")
        sign, coef, var, exp = m.groups()
        if coef is None and var is None:
            raise ParseError(f"cannot parse {expr!r} near position {pos}")
        if sign is None and not first:
            raise ParseError(f"missing operator in {expr!r} near position {pos}")
        c = Fraction(coef) if coef is not None else Fraction(1)
        if sign == "-":
            c = -c
        if var is None:
            term = F.rational(c)
        else:
            k = int(exp) if exp is not None else 1
            if var == "z":
                base = F.zeta(k)
            else:
                if N % 4:
                    raise ParseError("'i' needs a conductor divisible by 4")
                base = F.i() ** k
            term = base * c
        acc = acc + term
        pos = m.end()
        first = False
    return acc


def _fmt_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def element_to_json(x: CycloElement) -> dict:
    return {"N": x.field.N, "coeffs": [_fmt_fraction(c) for c in x.coeffs]}


def element_from_json(obj: dict) -> CycloElement:
    N = int(obj["N"])
    F = field(N)
    coeffs = [Fraction(c) for c in obj["coeffs"]]
    if len(coeffs) != F.degree:
        raise ParseError(f"expected {F.degree} coefficients for N={N}, got {len(coeffs)}")
    return F.from_coeffs(coeffs)
