"""3x3 matrices over cyclotomic fields and their classes in PGL3.

A :class:`ProjElement` carries one lift plus a canonical scaling (first
nonzero entry, row-major, equal to 1), which makes projective equality a
plain entrywise comparison.

Eigenvalues are never computed.  Everything eigenvalue-flavoured goes
through characteristic polynomials and the action f(t) -> c^3 f(t/c) of
rescaling the lift, which keeps all arithmetic inside Q(zeta_N).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

import mpmath

from .cyclotomic import (CycloElement, field, format_element, lcm, element_to_json, element_from_json,
                         parse_element)
from .errors import DivisionByZero, NotFiniteOrder, OrderNotFound, ParseError

DEFAULT_MAX_ORDER = 360


def _coerce(x, N: int) -> CycloElement:
    if isinstance(x, CycloElement):
        return x.embed(N)
    return field(N).rational(x)


def _conductor_of(values) -> int:
    N = 1
    for v in values:
        if isinstance(v, CycloElement):
            N = lcm(N, v.field.N)
    return N


class Matrix3:
    """Exact 3x3 matrix, all entries in one field Q(zeta_N)."""

    __slots__ = ("N", "entries")

    def __init__(self, rows, N: int | None = None):
        flat = [x for row in rows for x in row]
        if len(flat) != 9:
            raise ValueError("need a 3x3 array")
        if N is None:
            N = _conductor_of(flat)
        self.N = N
        self.entries = tuple(_coerce(x, N) for x in flat)

    @classmethod
    def _from_flat(cls, N, flat):
        self = object.__new__(cls)
        self.N = N
        self.entries = tuple(flat)
        return self

    @classmethod
    def identity(cls, N: int = 1) -> "Matrix3":
        return cls.diag(1, 1, 1, N=N)

    @classmethod
    def diag(cls, a, b, c, N: int | None = None) -> "Matrix3":
        return cls([[a, 0, 0], [0, b, 0], [0, 0, c]], N)

    @classmethod
    def permutation(cls, spec: str, N: int = 1) -> "Matrix3":
        """Matrix of [X:Z:Y]-style substitutions, e.g. ``permutation("YZX")``."""
        spec = spec.replace(":", "").replace("[", "").replace("]", "").upper()
        if sorted(spec) != ["X", "Y", "Z"]:
            raise ValueError(f"bad permutation {spec!r}")
        rows = [[1 if "XYZ".index(v) == j else 0 for j in range(3)] for v in spec]
        return cls(rows, N)

    def rows(self):
        e = self.entries
        return [list(e[0:3]), list(e[3:6]), list(e[6:9])]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[3 * i + j]

    def embed(self, M: int) -> "Matrix3":
        if M == self.N:
            return self
        return Matrix3._from_flat(M, [x.embed(M) for x in self.entries])

    def _common(self, other: "Matrix3"):
        if other.N == self.N:
            return self, other
        M = lcm(self.N, other.N)
        return self.embed(M), other.embed(M)

    def __mul__(self, other):
        if isinstance(other, Matrix3):
            a, b = self._common(other)
            x, y = a.entries, b.entries
            out = []
            for i in range(3):
                r0, r1, r2 = x[3 * i], x[3 * i + 1], x[3 * i + 2]
                for j in range(3):
                    out.append(r0 * y[j] + r1 * y[3 + j] + r2 * y[6 + j])
            return Matrix3._from_flat(a.N, out)
        if isinstance(other, CycloElement):
            M = lcm(self.N, other.field.N)
            s = other.embed(M)
            return Matrix3._from_flat(M, [x.embed(M) * s for x in self.entries])
        if isinstance(other, (int, Fraction)):
            return Matrix3._from_flat(self.N, [x * other for x in self.entries])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycloElement)):
            return self * other
        return NotImplemented

    def __add__(self, other: "Matrix3") -> "Matrix3":
        a, b = self._common(other)
        return Matrix3._from_flat(a.N, [x + y for x, y in zip(a.entries, b.entries)])

    def __sub__(self, other: "Matrix3") -> "Matrix3":
        a, b = self._common(other)
        return Matrix3._from_flat(a.N, [x - y for x, y in zip(a.entries, b.entries)])

    def __neg__(self):
        return Matrix3._from_flat(self.N, [-x for x in self.entries])

    def __pow__(self, k: int) -> "Matrix3":
        if k < 0:
            return self.inverse() ** (-k)
        acc = Matrix3.identity(self.N)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __eq__(self, other):
        if not isinstance(other, Matrix3):
            return NotImplemented
        return all(x == y for x, y in zip(self.entries, other.entries))

    def __hash__(self):
        return hash(self.entries)

    def det(self) -> CycloElement:
        a, b, c, d, e, f, g, h, i = self.entries
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def trace(self) -> CycloElement:
        e = self.entries
        return e[0] + e[4] + e[8]

    def adjugate(self) -> "Matrix3":
        a, b, c, d, e, f, g, h, i = self.entries
        return Matrix3._from_flat(self.N, [
            e * i - f * h, c * h - b * i, b * f - c * e,
            f * g - d * i, a * i - c * g, c * d - a * f,
            d * h - e * g, b * g - a * h, a * e - b * d,
        ])

    def inverse(self) -> "Matrix3":
        det = self.det()
        if det.is_zero():
            raise DivisionByZero("singular matrix")
        return self.adjugate() * det.inverse()

    def transpose(self) -> "Matrix3":
        e = self.entries
        return Matrix3._from_flat(self.N, [e[0], e[3], e[6], e[1], e[4], e[7], e[2], e[5], e[8]])

    def conj(self) -> "Matrix3":
        return Matrix3._from_flat(self.N, [x.conj() for x in self.entries])

    def is_real(self) -> bool:
        return all(x.is_real() for x in self.entries)

    def is_scalar(self) -> bool:
        e = self.entries
        return (all(e[k].is_zero() for k in (1, 2, 3, 5, 6, 7))
                and e[0] == e[4] == e[8] and not e[0].is_zero())

    def is_diagonal(self) -> bool:
        e = self.entries
        return all(e[k].is_zero() for k in (1, 2, 3, 5, 6, 7))

    def to_numeric(self, precision: int = 53):
        return [[x.to_complex(precision) for x in row] for row in self.rows()]

    def __repr__(self):
        return f"Matrix3(N={self.N}, {[[format_element(x) for x in r] for r in self.rows()]})"


class ProjElement:
    """pi(lift): the class of an invertible matrix modulo nonzero scalars."""

    __slots__ = ("lift", "canonical", "_key", "_hash")

    def __init__(self, lift: Matrix3):
        if not isinstance(lift, Matrix3):
            lift = Matrix3(lift)
        if lift.det().is_zero():
            raise DivisionByZero("projective element needs an invertible lift")
        self.lift = lift
        first = next(x for x in lift.entries if not x.is_zero())
        if first == 1:
            self.canonical = lift
        else:
            inv = first.inverse()
            self.canonical = Matrix3._from_flat(lift.N, [x * inv for x in lift.entries])
        self._key = None
        self._hash = None

    @property
    def N(self) -> int:
        return self.lift.N

    @property
    def key(self):
        """Exact dictionary key (conductor plus canonical entries)."""
        if self._key is None:
            self._key = (self.lift.N, tuple(x.key() for x in self.canonical.entries))
        return self._key

    def embed(self, M: int) -> "ProjElement":
        return ProjElement(self.lift.embed(M)) if M != self.N else self

    def __mul__(self, other: "ProjElement") -> "ProjElement":
        return ProjElement(self.lift * other.lift)

    def inverse(self) -> "ProjElement":
        return ProjElement(self.lift.adjugate())

    def __pow__(self, k: int) -> "ProjElement":
        if k < 0:
            return self.inverse() ** (-k)
        return ProjElement(self.lift ** k)

    def conjugate_by(self, psi: "ProjElement") -> "ProjElement":
        """psi^-1 * self * psi."""
        return ProjElement(psi.lift.adjugate() * self.lift * psi.lift)

    def sigma(self) -> "ProjElement":
        return ProjElement(self.lift.conj())

    def is_identity(self) -> bool:
        return self.lift.is_scalar()

    def is_real(self) -> bool:
        """True iff the class contains a real matrix (the canonical lift is then real)."""
        return self.canonical.is_real()

    def order(self, max_order: int = DEFAULT_MAX_ORDER) -> int:
        return proj_order(self, max_order)

    def __eq__(self, other):
        if not isinstance(other, ProjElement):
            return NotImplemented
        if other.N == self.N:
            return self.key == other.key
        M = lcm(self.N, other.N)
        return self.embed(M).key == other.embed(M).key

    def __hash__(self):
        # CycloElement hashes are embedding-invariant, so this agrees with __eq__
        if self._hash is None:
            self._hash = hash(self.canonical.entries)
        return self._hash

    def __repr__(self):
        return f"ProjElement({[[format_element(x) for x in r] for r in self.canonical.rows()]}, N={self.N})"


def proj(rows, N: int | None = None) -> ProjElement:
    return ProjElement(Matrix3(rows, N))


def proj_mul(g: ProjElement, h: ProjElement) -> ProjElement:
    return g * h


def proj_eq(g: ProjElement, h: ProjElement) -> bool:
    return g == h


def galois_sigma(g: ProjElement) -> ProjElement:
    return g.sigma()


def proj_order(g: ProjElement, max_order: int = DEFAULT_MAX_ORDER) -> int:
    """Least k <= max_order with lift^k scalar."""
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    acc = g.lift
    for k in range(1, max_order + 1):
        if acc.is_scalar():
            return k
        acc = acc * g.lift
    raise OrderNotFound(max_order)


# --- characteristic polynomials ---------------------------------------------

def charpoly(M: Matrix3) -> tuple[CycloElement, ...]:
    """det(tI - M) as (1, c2, c1, c0), highest degree first."""
    e = M.entries
    e1 = M.trace()
    e2 = (e[0] * e[4] - e[1] * e[3]) + (e[0] * e[8] - e[2] * e[6]) + (e[4] * e[8] - e[5] * e[7])
    e3 = M.det()
    one = field(M.N).one()
    return (one, -e1, e2, -e3)


def _as_common(p, q):
    M = lcm(*(x.field.N for x in p), *(x.field.N for x in q))
    return [x.embed(M) for x in p], [x.embed(M) for x in q]


def charpoly_class_eq(p, q) -> bool:
    """Whether q(t) = c^3 p(t/c) for some complex c != 0.

    With p = t^3 + p2 t^2 + p1 t + p0 this reads q2 = c p2, q1 = c^2 p1,
    q0 = c^3 p0.  Whenever c is pinned down by a ratio it lies in the field
    and is checked exactly; otherwise only a square or cube root of a nonzero
    ratio is needed, which always exists over C.
    """
    p, q = _as_common(p, q)
    if not (p[0] == 1 and q[0] == 1):
        raise ValueError("monic cubics expected")
    _, p2, p1, p0 = p
    _, q2, q1, q0 = q
    zp = [x.is_zero() for x in (p2, p1, p0)]
    zq = [x.is_zero() for x in (q2, q1, q0)]
    if zp != zq:
        return False
    if not zp[0]:
        c = q2 / p2
        return q1 == c * c * p1 and q0 == c * c * c * p0
    if not zp[1] and not zp[2]:
        c = (q0 * p1) / (p0 * q1)
        return q1 == c * c * p1 and q0 == c * c * c * p0
    # at most one of p1, p0 is nonzero: a single root extraction, always solvable
    return True


class CharPolyClass:
    """Orbit of a monic cubic under f(t) -> c^3 f(t/c)."""

    def __init__(self, representative):
        self.representative = tuple(representative)

    @classmethod
    def of(cls, g) -> "CharPolyClass":
        lift = g.lift if isinstance(g, ProjElement) else g
        return cls(charpoly(lift))

    def __eq__(self, other):
        if not isinstance(other, CharPolyClass):
            return NotImplemented
        return charpoly_class_eq(self.representative, other.representative)

    __hash__ = None

    def is_real(self) -> bool:
        return all(x.is_real() for x in self.representative)


def charpoly_class(g) -> CharPolyClass:
    return CharPolyClass.of(g)


def diagonal_charpoly(n: int, exps, N: int | None = None):
    """charpoly of diag(zeta_n^e for e in exps) in Q(zeta_N), N defaulting to n."""
    F = field(N or n)
    return charpoly(Matrix3.diag(*(F.root_of_unity(n, e) for e in exps), N=F.N))


def _check_order_divides(g: ProjElement, n: int):
    if n < 1 or not (g.lift ** n).is_scalar():
        raise NotFiniteOrder(f"element does not have order dividing {n}")


def eigenratio_class(g: ProjElement, n: int) -> list[tuple[int, int]]:
    """All (a, b) in [0, n)^2 with eigenvalues of the lift equal to c{1, z^a, z^b}.

    z = zeta_n.  Every anchor and ordering of the same eigenvalue multiset
    appears, so the list is the full exponent-pair orbit of that multiset.
    """
    _check_order_divides(g, n)
    M = lcm(g.N, n)
    target = charpoly(g.lift.embed(M))
    F = field(M)
    z = [F.root_of_unity(n, k) for k in range(n)]
    one = F.one()
    out = []
    for a in range(n):
        for b in range(n):
            za, zb, zab = z[a], z[b], z[(a + b) % n]
            p = (one, -(one + za + zb), za + zb + zab, -zab)
            if charpoly_class_eq(p, target):
                out.append((a, b))
    return out


def eigen_scalar_search(src, dst, n: int) -> list[int]:
    """Scalars c = zeta_n^k with c*{zeta_n^s} == {zeta_n^d} as multisets.

    ``src`` and ``dst`` are exponent triples.  Any c matching the multisets
    must send src[0] to some element of dst, so the candidates are the
    differences d - src[0]; each is checked by sorting exponents mod n.
    """
    want = sorted(d % n for d in dst)
    hits = []
    for k in sorted({(d - src[0]) % n for d in dst}):
        if sorted((s + k) % n for s in src) == want:
            hits.append(k)
    return hits


def conjugacy_necessary(g: ProjElement, h: ProjElement, n: int) -> bool:
    """Eigenvalue multisets of the lifts agree up to one common scalar.

    False certifies that g and h are not conjugate in PGL3(C).  Both have
    finite order, so their lifts are diagonalisable up to scale and the test
    is also sufficient; callers in this package only rely on the False side.
    """
    _check_order_divides(g, n)
    _check_order_divides(h, n)
    return charpoly_class_eq(charpoly(g.lift), charpoly(h.lift))


# --- serialisation and display ----------------------------------------------

def matrix_to_json(M: Matrix3) -> dict:
    return {"field_N": M.N,
            "rows": [[element_to_json(x) for x in row] for row in M.rows()]}


def _entry(x, N: int) -> CycloElement:
    # entries may also be written by hand: integers or expressions in z = zeta_N
    if isinstance(x, dict):
        return element_from_json(x)
    if isinstance(x, int):
        return field(N).rational(x)
    if isinstance(x, str):
        return parse_element(x, N)
    raise ParseError(f"cannot read matrix entry {x!r}")


def matrix_from_json(obj: dict) -> Matrix3:
    try:
        N = int(obj["field_N"])
        rows = [[_entry(x, N) for x in row] for row in obj["rows"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad matrix JSON: {exc}") from exc
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise ParseError("matrix JSON must have 3 rows of 3 entries")
    for x in (x for r in rows for x in r):
        if N % x.field.N:
            raise ParseError(f"entry conductor {x.field.N} does not divide field_N {N}")
    return Matrix3(rows, N)


def numeric_string(x: CycloElement, digits: int = 6, precision: int = 64) -> str:
    """Decimal rendering; exactly real or imaginary values drop the other part."""
    z = x.to_complex(max(precision, 53))
    if x.is_real():
        return mpmath.nstr(z.real, digits)
    if (x + x.conj()).is_zero():
        return f"{mpmath.nstr(z.imag, digits)}i"
    sign = "-" if z.imag < 0 else "+"
    return f"{mpmath.nstr(z.real, digits)}{sign}{mpmath.nstr(abs(z.imag), digits)}i"


def format_matrix(M: Matrix3, numeric: bool = True) -> str:
    """Exact entries (z = zeta_N) and, optionally, 6-significant-digit values."""
    rows = M.rows()
    exact = [[format_element(x) for x in r] for r in rows]
    width = max(len(s) for r in exact for s in r)
    lines = [f"over Q(zeta_{M.N}), z = zeta_{M.N}:"]
    lines += ["  [ " + "  ".join(s.rjust(width) for s in r) + " ]" for r in exact]
    if numeric:
        nums = [[numeric_string(x) for x in r] for r in rows]
        w2 = max(len(s) for r in nums for s in r)
        lines.append("numeric:")
        lines += ["  [ " + "  ".join(s.rjust(w2) for s in r) + " ]" for r in nums]
    return "\n".join(lines)


def all_permutation_matrices(N: int = 1) -> list[Matrix3]:
    return [Matrix3.permutation("".join(p), N) for p in permutations("XYZ")]


def charpoly_class_key(p):
    """Hashable normal form of the rescaling class of a monic cubic.

    Two cubics share a key iff :func:`charpoly_class_eq` holds.  Keys are
    exact but conductor-specific, so compare keys only within one field.
    """
    _, p2, p1, p0 = p
    if not p2.is_zero():
        c = p2.inverse()
        return ("e1", (c * c * p1).key(), (c * c * c * p0).key())
    if not p1.is_zero() and not p0.is_zero():
        return ("e2e3", (p1 * p1 * p1 / (p0 * p0)).key())
    return ("zeros", p1.is_zero(), p0.is_zero())
