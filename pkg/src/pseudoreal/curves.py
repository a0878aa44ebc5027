"""Plane curves F(X,Y,Z) = 0 over cyclotomic fields.

Forms act on the left by substitution: ``transform(F, g)`` is F(A v) for
a lift A of g, so transform(transform(F, g), h) = transform(F, g*h).

The quintic family X^5+Y^5+Z^5 + i*a*X(YZ)^2 + i*b*X^3(YZ) lives over
Q(zeta_20), which holds both i and zeta_5.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product

from .cyclotomic import CycloElement, element_from_json, element_to_json, field, format_element, lcm
from .errors import BadParameters, PreconditionFailed
from .finitegroup import FiniteSubgroup, closure, sigma_image
from .polynomial import Poly, gcd, resultant
from .projlinear import Matrix3, ProjElement

QUINTIC_CONDUCTOR = 20
VARS = "XYZ"


class HomogeneousPolynomial:
    """Ternary form of degree d; ``terms`` maps (i, j, k) to a nonzero coefficient."""

    __slots__ = ("degree", "N", "terms")

    def __init__(self, degree: int, terms: dict, N: int | None = None):
        if N is None:
            N = lcm(1, *(c.N for c in terms.values() if isinstance(c, CycloElement)))
        F = field(N)
        clean = {}
        for exps, c in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != 3 or sum(exps) != degree or min(exps) < 0:
                raise ValueError(f"monomial {exps} is not of degree {degree}")
            c = c.embed(N) if isinstance(c, CycloElement) else F.rational(c)
            if not c.is_zero():
                clean[exps] = clean[exps] + c if exps in clean else c
                if clean[exps].is_zero():
                    del clean[exps]
        self.degree = degree
        self.N = N
        self.terms = clean

    @classmethod
    def monomial(cls, exps, coeff=1, N: int = 1) -> "HomogeneousPolynomial":
        return cls(sum(exps), {tuple(exps): coeff}, N)

    @classmethod
    def linear(cls, coeffs, N: int) -> "HomogeneousPolynomial":
        return cls(1, {(1, 0, 0): coeffs[0], (0, 1, 0): coeffs[1], (0, 0, 1): coeffs[2]}, N)

    def embed(self, M: int) -> "HomogeneousPolynomial":
        if M == self.N:
            return self
        return HomogeneousPolynomial(self.degree, {e: c.embed(M) for e, c in self.terms.items()}, M)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exps) -> CycloElement:
        return self.terms.get(tuple(exps), field(self.N).zero())

    def _common(self, other):
        M = lcm(self.N, other.N)
        return self.embed(M), other.embed(M), M

    def __add__(self, other: "HomogeneousPolynomial"):
        a, b, M = self._common(other)
        if a.degree != b.degree and a.terms and b.terms:
            raise ValueError("adding forms of different degrees")
        out = dict(a.terms)
        for e, c in b.terms.items():
            out[e] = out[e] + c if e in out else c
        return HomogeneousPolynomial(max(a.degree, b.degree) if a.terms and b.terms else
                                     (a.degree if a.terms else b.degree), out, M)

    def __neg__(self):
        return HomogeneousPolynomial(self.degree, {e: -c for e, c in self.terms.items()}, self.N)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, HomogeneousPolynomial):
            return self.scale(other)
        a, b, M = self._common(other)
        out: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return HomogeneousPolynomial(a.degree + b.degree, out, M)

    def scale(self, c) -> "HomogeneousPolynomial":
        if isinstance(c, CycloElement):
            M = lcm(self.N, c.N)
            c = c.embed(M)
            return HomogeneousPolynomial(self.degree, {e: x.embed(M) * c for e, x in self.terms.items()}, M)
        return HomogeneousPolynomial(self.degree, {e: x * c for e, x in self.terms.items()}, self.N)

    def __eq__(self, other):
        if not isinstance(other, HomogeneousPolynomial):
            return NotImplemented
        a, b, _ = self._common(other)
        return a.degree == b.degree and a.terms.keys() == b.terms.keys() and all(
            a.terms[e] == b.terms[e] for e in a.terms)

    __hash__ = None

    def conj(self) -> "HomogeneousPolynomial":
        return HomogeneousPolynomial(self.degree, {e: c.conj() for e, c in self.terms.items()}, self.N)

    def partial(self, var: int | str) -> "HomogeneousPolynomial":
        v = VARS.index(var) if isinstance(var, str) else var
        out = {}
        for e, c in self.terms.items():
            if e[v]:
                ne = list(e)
                ne[v] -= 1
                out[tuple(ne)] = c * e[v]
        return HomogeneousPolynomial(self.degree - 1, out, self.N)

    def evaluate(self, point):
        """Exact value at a point of CycloElements (or rationals)."""
        M = lcm(self.N, *(p.N for p in point if isinstance(p, CycloElement)))
        K = field(M)
        pt = [p.embed(M) if isinstance(p, CycloElement) else K.rational(p) for p in point]
        acc = K.zero()
        for (i, j, k), c in self.terms.items():
            acc = acc + c.embed(M) * pt[0] ** i * pt[1] ** j * pt[2] ** k
        return acc

    def numeric_terms(self, precision: int = 53):
        return [(e, complex(c.to_complex(precision))) for e, c in self.terms.items()]

    def __repr__(self):
        return f"HomogeneousPolynomial({format_polynomial(self)})"

    def __str__(self):
        return format_polynomial(self)


def format_polynomial(F: HomogeneousPolynomial) -> str:
    if not F.terms:
        return "0"
    parts = []
    for e in sorted(F.terms, reverse=True):
        mono = "*".join(f"{v}^{k}" if k > 1 else v for v, k in zip(VARS, e) if k)
        c = format_element(F.terms[e])
        if not mono:
            parts.append(f"({c})")
        elif c == "1":
            parts.append(mono)
        else:
            parts.append(f"({c})*{mono}")
    return " + ".join(parts)


def polynomial_to_json(F: HomogeneousPolynomial) -> dict:
    return {
        "degree": F.degree,
        "terms": [{"exps": list(e), "coeff": element_to_json(F.terms[e])} for e in sorted(F.terms, reverse=True)],
    }


def polynomial_from_json(obj: dict) -> HomogeneousPolynomial:
    terms = {}
    N = 1
    for t in obj["terms"]:
        c = element_from_json(t["coeff"])
        N = lcm(N, c.N)
        terms[tuple(t["exps"])] = c
    return HomogeneousPolynomial(int(obj["degree"]), terms, N)


# --- group action ------------------------------------------------------------

def transform(F: HomogeneousPolynomial, g) -> HomogeneousPolynomial:
    """F(A v) for a lift A of g (a ProjElement or a Matrix3)."""
    A = g.lift if isinstance(g, ProjElement) else g
    M = lcm(F.N, A.N)
    A = A.embed(M)
    F = F.embed(M)
    forms = [HomogeneousPolynomial.linear(A.rows()[r], M) for r in range(3)]
    one = HomogeneousPolynomial(0, {(0, 0, 0): 1}, M)
    powers = []
    for L in forms:
        pw = [one]
        for _ in range(F.degree):
            pw.append(pw[-1] * L)
        powers.append(pw)
    out = HomogeneousPolynomial(F.degree, {}, M)
    for (i, j, k), c in F.terms.items():
        out = out + (powers[0][i] * powers[1][j] * powers[2][k]).scale(c)
    return out


def proportionality(F: HomogeneousPolynomial, G: HomogeneousPolynomial):
    """The scalar c with F = c*G, or None."""
    F, G, _ = F._common(G)
    if F.degree != G.degree or F.terms.keys() != G.terms.keys():
        return None
    if not G.terms:
        return None
    e0 = next(iter(G.terms))
    c = F.terms[e0] / G.terms[e0]
    if all(F.terms[e] == c * G.terms[e] for e in G.terms):
        return c
    return None


def is_invariant(F: HomogeneousPolynomial, g) -> bool:
    return proportionality(transform(F, g), F) is not None


def aut_contains(F: HomogeneousPolynomial, G) -> bool:
    elements = G if isinstance(G, FiniteSubgroup) else list(G)
    return all(is_invariant(F, g) for g in elements)


def sigma_curve(F: HomogeneousPolynomial) -> HomogeneousPolynomial:
    return F.conj()


def aut_sigma_compat(F: HomogeneousPolynomial, G: FiniteSubgroup) -> bool:
    """Check that sigma(G) acts on sigma(F) whenever G acts on F."""
    if not aut_contains(F, G):
        raise PreconditionFailed("the group does not preserve the curve")
    return aut_contains(sigma_curve(F), sigma_image(G))


# --- specialisations used by the resultant and gcd computations ----------------

def dehomogenize_y(F: HomogeneousPolynomial) -> Poly:
    """F(X, 1, Z) as a polynomial in X whose coefficients are polynomials in Z."""
    K = field(F.N)
    zz = Poly([], K.zero())
    by_x: dict = {}
    for (i, _j, k), c in F.terms.items():
        by_x.setdefault(i, {})[k] = c
    coeffs = []
    for i in range(F.degree + 1):
        row = by_x.get(i, {})
        cs = [row.get(k, K.zero()) for k in range(max(row, default=-1) + 1)]
        coeffs.append(Poly(cs, K.zero()))
    return Poly(coeffs, zz)


def fiber(F: HomogeneousPolynomial, z: CycloElement) -> Poly:
    """F(X, 1, z) in Q(zeta_N)[X]."""
    z = z.embed(lcm(F.N, z.N))
    M = z.N
    K = field(M)
    coeffs = [K.zero()] * (F.degree + 1)
    for (i, _j, k), c in F.terms.items():
        coeffs[i] = coeffs[i] + c.embed(M) * z ** k
    return Poly(coeffs, K.zero())


def binary_restriction(F: HomogeneousPolynomial, var: int) -> HomogeneousPolynomial:
    """F with the variable ``var`` set to 0."""
    return HomogeneousPolynomial(F.degree, {e: c for e, c in F.terms.items() if e[var] == 0}, F.N)


def binary_common_zero(forms, var: int) -> bool:
    """Do binary forms (variable ``var`` already zero) share a zero in P^1?"""
    others = [v for v in range(3) if v != var]
    u, w = others
    K = field(lcm(1, *(f.N for f in forms)))
    forms = [f.embed(K.N) for f in forms]
    # the point where w = 0
    if all(f.coeff(tuple(f.degree if v == u else 0 for v in range(3))).is_zero() for f in forms):
        return True
    # the affine chart w = 1, polynomial in u
    g = Poly([], K.zero())
    for f in forms:
        cs = [K.zero()] * (f.degree + 1)
        for e, c in f.terms.items():
            cs[e[u]] = c
        g = gcd(g, Poly(cs, K.zero()))
    return g.degree >= 1 or g.is_zero()


# --- the quintic family ------------------------------------------------------

@dataclass(frozen=True)
class QuinticFamilyMember:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.a == 0 or self.b == 0:
            raise BadParameters("the quintic family needs a and b nonzero")

    @property
    def polynomial(self) -> HomogeneousPolynomial:
        return quintic_polynomial(self.a, self.b)


def quintic_polynomial(a, b) -> HomogeneousPolynomial:
    """X^5+Y^5+Z^5 + i*a*X*Y^2*Z^2 + i*b*X^3*Y*Z (no parameter checks)."""
    K = field(QUINTIC_CONDUCTOR)
    i = K.i()
    return HomogeneousPolynomial(5, {
        (5, 0, 0): 1, (0, 5, 0): 1, (0, 0, 5): 1,
        (1, 2, 2): i * Fraction(a),
        (3, 1, 1): i * Fraction(b),
    }, QUINTIC_CONDUCTOR)


def fermat(d: int, N: int = 1) -> HomogeneousPolynomial:
    return HomogeneousPolynomial(d, {(d, 0, 0): 1, (0, d, 0): 1, (0, 0, d): 1}, N)


def rho1(N: int = QUINTIC_CONDUCTOR) -> ProjElement:
    K = field(N)
    return ProjElement(Matrix3.diag(1, K.root_of_unity(5), K.root_of_unity(5, -1), N))


def rho2(N: int = QUINTIC_CONDUCTOR) -> ProjElement:
    return ProjElement(Matrix3.permutation("XZY", N))


def dihedral10(N: int = QUINTIC_CONDUCTOR) -> FiniteSubgroup:
    return closure([rho1(N), rho2(N)], cap=10)


def expected_resultant(b) -> Poly:
    """-125*i*b^3*(Z^5-1)^3 as a polynomial in Z."""
    K = field(QUINTIC_CONDUCTOR)
    z5m1 = Poly([K.rational(-1), K.zero(), K.zero(), K.zero(), K.zero(), K.one()], K.zero())
    return (z5m1 ** 3) * (K.i() * (-125 * Fraction(b) ** 3))


def quintic_resultant(member: QuinticFamilyMember) -> Poly:
    """Res_X(F_Y(X,1,Z), F_Z(X,1,Z)) as a polynomial in Z."""
    F = member.polynomial
    return resultant(dehomogenize_y(F.partial("Y")), dehomogenize_y(F.partial("Z")))


@dataclass
class SmoothnessCertificate:
    smooth: bool
    y_zero_clear: bool
    resultant_matches: bool
    resultant: Poly
    fibers: list = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "smooth": self.smooth,
            "no_singular_point_on_Y0": self.y_zero_clear,
            "resultant_matches": self.resultant_matches,
            "resultant_coeffs_in_Z": [element_to_json(c) for c in self.resultant.coeffs],
            "fibers": self.fibers,
        }


def _as_member(x) -> QuinticFamilyMember:
    if isinstance(x, QuinticFamilyMember):
        return x
    a, b = x
    return QuinticFamilyMember(a, b)


def smoothness_check_quintic(member) -> SmoothnessCertificate:
    """Exact two-step smoothness test.

    Step 1 shows F_X and F_Z have no common zero on Y = 0.  Step 2 computes
    Res_X(F_Y, F_Z) in the chart Y = 1; every common zero lies over a root
    of that resultant, i.e. over z = zeta_5^k, and on each such fiber the
    gcd of F_Y, F_Z, F, F_X decides whether a singular point exists.
    """
    member = _as_member(member)
    F = member.polynomial
    FX, FY, FZ = F.partial("X"), F.partial("Y"), F.partial("Z")

    y_zero_clear = not binary_common_zero([binary_restriction(FX, 1), binary_restriction(FZ, 1)], 1)
    if not y_zero_clear:
        # fall back to the full gradient on the line Y = 0
        y_zero_clear = not binary_common_zero([binary_restriction(P, 1) for P in (F, FX, FY, FZ)], 1)

    res = resultant(dehomogenize_y(FY), dehomogenize_y(FZ))
    matches = res == expected_resultant(member.b)
    if not matches:
        raise PreconditionFailed("resultant differs from -125*i*b^3*(Z^5-1)^3")

    K = field(QUINTIC_CONDUCTOR)
    fibers = []
    smooth = y_zero_clear
    for k in range(5):
        z = K.root_of_unity(5, k)
        g1, g2, g3 = fiber_gcd_chain(F, z)
        fibers.append({"k": k, "gcd_FY_FZ_degree": g1.degree, "with_F_degree": g2.degree,
                       "with_FX_degree": g3.degree})
        if g3.degree >= 1:
            smooth = False
    return SmoothnessCertificate(smooth, y_zero_clear, matches, res, fibers)


def fiber_gcd_chain(F: HomogeneousPolynomial, z: CycloElement):
    """gcd(F_Y, F_Z), then with F, then with F_X, all on the line Y = 1, Z = z."""
    g1 = gcd(fiber(F.partial("Y"), z), fiber(F.partial("Z"), z))
    g2 = gcd(g1, fiber(F, z))
    g3 = gcd(g2, fiber(F.partial("X"), z))
    return g1, g2, g3


def _candidate_maps(N: int = QUINTIC_CONDUCTOR):
    K = field(N)
    for shape in ("diag", "swap"):
        for s, t in product(range(5), repeat=2):
            al, be = K.root_of_unity(5, s), K.root_of_unity(5, t)
            if shape == "diag":
                m = Matrix3.diag(1, al, be, N)
            else:
                z = K.zero()
                m = Matrix3([[1, z, z], [z, z, al], [z, be, z]], N)
            yield shape, s, t, ProjElement(m)


def _first_mismatch(P: HomogeneousPolynomial, Q: HomogeneousPolynomial):
    """First monomial where P and Q differ (P = Q would need c = 1 from X^5)."""
    for e in sorted(set(P.terms) | set(Q.terms), reverse=True):
        if P.coeff(e) != Q.coeff(e):
            return e, P.coeff(e), Q.coeff(e)
    return None


@dataclass
class ObstructionTrace:
    obstructed: bool
    checkpoints: list
    candidates: list
    matches: list

    def to_json(self) -> dict:
        return {"obstructed": self.obstructed, "checkpoints": self.checkpoints,
                "tested": len(self.candidates), "matches": self.matches,
                "candidates": self.candidates}


def moduli_obstruction_quintic(member, target: HomogeneousPolynomial | None = None) -> ObstructionTrace:
    """Search the 50 maps diag(1,al,be) and [X : al*Z : be*Y], al, be fifth roots of unity.

    ``obstructed`` is True when none of them carries the curve to sigma(C)
    (or to ``target`` when given).
    """
    member = _as_member(member)
    F = member.polynomial
    if not aut_contains(F, dihedral10()):
        raise PreconditionFailed("curve is not invariant under D10")
    target = sigma_curve(F) if target is None else target.embed(lcm(target.N, F.N))
    checkpoints = [
        "phi normalises <rho1, rho2>, so phi is diagonal or swaps Y and Z up to scaling",
        "X^5 coefficient: both sides are 1, so the scalar is c = 1",
        "Y^5 and Z^5 coefficients: al^5 = be^5 = 1",
    ]
    for e in ((5, 0, 0), (0, 5, 0), (0, 0, 5)):
        if target.coeff(e) != F.coeff(e):
            checkpoints.append(f"warning: target {e} coefficient differs from F")
    candidates, matches = [], []
    for shape, s, t, phi in _candidate_maps():
        image = transform(F, phi)
        c = proportionality(image, target)
        row = {"shape": shape, "alpha_exp": s, "beta_exp": t}
        if c is not None:
            row["result"] = "match"
            row["scalar"] = element_to_json(c)
            matches.append({"shape": shape, "alpha_exp": s, "beta_exp": t})
        else:
            e, lhs, rhs = _first_mismatch(image, target)
            row["result"] = "fail"
            row["monomial"] = list(e)
            row["lhs"] = format_element(lhs)
            row["rhs"] = format_element(rhs)
        candidates.append(row)
    return ObstructionTrace(not matches, checkpoints, candidates, matches)


def diagonal_rho3_check(member) -> dict:
    """Which diagonal diag(1,al,be) of order 5 outside <rho1> preserve the curve."""
    member = _as_member(member)
    F = member.polynomial
    K = field(QUINTIC_CONDUCTOR)
    found = []
    tested = 0
    for s, t in product(range(5), repeat=2):
        if (s + t) % 5 == 0:
            continue  # inside <rho1>
        tested += 1
        g = ProjElement(Matrix3.diag(1, K.root_of_unity(5, s), K.root_of_unity(5, t), QUINTIC_CONDUCTOR))
        if is_invariant(F, g):
            found.append([s, t])
    return {"tested": tested, "extra_invariances": found, "passed": not found,
            "note": "Aut contains D10; larger-group exclusion per cited stratification plus this diagonal check"}


def resultant_x(p: Poly, q: Poly):
    """Res_X(p, q) for p, q in K[Z][X] (or K[X]); Sylvester determinant."""
    return resultant(p, q)
