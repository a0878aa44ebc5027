"""Real fields of moduli and real models for cyclic and dihedral groups.

A finite cyclic subgroup of PGL3(C) of order n is conjugate to the group
generated by diag(1, z^a, z^b), z = zeta_n, 0 <= a < b < n, gcd(a, b) = 1.
It always has a real field of moduli, and it is definable over R exactly
when n = 2 or one of a + b, a - 2b, 2a - b vanishes mod n.  In the
definable case a real model is produced by conjugating with

    phi = [[1, 0, 0], [0, alpha, beta], [0, conj(alpha), conj(beta)]].

All model matrices are obtained by exact multiplication; the closed-form
entries are only used as a cross-check and mismatches are returned as
diagnostics, never raised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .cyclotomic import CycloElement, element_to_json, field, lcm, re_im, sin_2pi
from .errors import (BadParameters, CriterionFailed, DegenerateParams, IdentityElement,
                     NotFiniteOrder, OrderNotFound, PreconditionFailed)
from .finitegroup import closure, sigma_image
from .projlinear import (Matrix3, ProjElement, charpoly, conjugacy_necessary, eigen_scalar_search,
                         eigenratio_class, matrix_to_json, proj_order)

YES, NO, UNKNOWN = "yes", "no", "unknown"

OBSTRUCTION_HOMOLOGY = "homology-period>=3"
OBSTRUCTION_CYCLIC = "cyclic-subgroup-obstruction"
OBSTRUCTION_C3XC3 = "C3xC3-rule"
OBSTRUCTION_CRITERION = "criterion-failed"


@dataclass(frozen=True)
class CyclicNormalForm:
    n: int
    a: int
    b: int

    def __post_init__(self):
        n, a, b = self.n, self.a, self.b
        if n < 2:
            raise BadParameters("order must be at least 2")
        if not 0 <= a < b <= n - 1:
            raise BadParameters(f"need 0 <= a < b <= n-1, got n={n}, a={a}, b={b}")
        if math.gcd(a, b) != 1:
            raise BadParameters(f"need gcd(a, b) = 1, got gcd({a}, {b}) = {math.gcd(a, b)}")

    @property
    def homology_flag(self) -> bool:
        # the only repeated-eigenvalue pattern allowed by 0 <= a < b, gcd = 1
        return self.a == 0

    def matrix(self, N: int | None = None) -> Matrix3:
        F = field(N or self.n)
        return Matrix3.diag(1, F.root_of_unity(self.n, self.a), F.root_of_unity(self.n, self.b), N=F.N)

    def element(self, N: int | None = None) -> ProjElement:
        return ProjElement(self.matrix(N))

    def as_tuple(self):
        return (self.n, self.a, self.b)


@dataclass(frozen=True)
class RealModelParams:
    alpha: CycloElement
    beta: CycloElement

    def __post_init__(self):
        M = lcm(4, self.alpha.N, self.beta.N)
        object.__setattr__(self, "alpha", self.alpha.embed(M))
        object.__setattr__(self, "beta", self.beta.embed(M))
        if im_part(self.alpha * self.beta.conj()).is_zero():
            raise DegenerateParams("Im(alpha * conj(beta)) must be nonzero")

    @property
    def N(self) -> int:
        return self.alpha.N

    def phi(self, N: int | None = None) -> Matrix3:
        M = lcm(N or 1, self.N)
        al, be = self.alpha.embed(M), self.beta.embed(M)
        return Matrix3([[1, 0, 0], [0, al, be], [0, al.conj(), be.conj()]], M)

    def to_json(self):
        return {"alpha": element_to_json(self.alpha), "beta": element_to_json(self.beta)}


def default_params() -> RealModelParams:
    """alpha = 1, beta = i."""
    F = field(4)
    return RealModelParams(F.one(), F.i())


def im_part(x: CycloElement) -> CycloElement:
    return re_im(x)[1]


def re_part(x: CycloElement) -> CycloElement:
    return re_im(x)[0]


@dataclass
class DescentVerdict:
    real_field_of_moduli: str
    definable_over_R: str
    reason: str = ""
    witness: dict | None = None
    obstruction: str | None = None
    details: dict = dc_field(default_factory=dict)

    @property
    def pseudo_real(self) -> bool:
        return self.real_field_of_moduli == YES and self.definable_over_R == NO

    def to_json(self) -> dict:
        definable = {YES: True, NO: False}.get(self.definable_over_R)
        out = {"moduli": self.real_field_of_moduli, "definable": definable,
               "pseudo_real": self.pseudo_real, "reason": self.reason}
        if self.obstruction:
            out["obstruction"] = self.obstruction
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details:
            out["details"] = self.details
        return out


# --- normal form --------------------------------------------------------------

def _finite_order(g: ProjElement, max_order: int = 360) -> int:
    try:
        return proj_order(g, max_order)
    except OrderNotFound as exc:
        raise NotFiniteOrder(f"no finite order <= {max_order}") from exc


def canonical_pair(n: int, pairs) -> tuple[int, int]:
    """Lexicographically least valid (a, b) over the orbit of ``pairs``.

    The orbit is generated by re-anchoring the triple {0, a, b}, reordering
    it, and replacing the generator by a power coprime to n.
    """
    best = None
    units = [k for k in range(1, n) if math.gcd(k, n) == 1] or [1]
    for a0, b0 in pairs:
        for k in units:
            tri = (0, (k * a0) % n, (k * b0) % n)
            for anchor in tri:
                shifted = sorted((t - anchor) % n for t in tri)
                # shifted[0] == 0 after re-anchoring
                a, b = shifted[1], shifted[2]
                if a < b and math.gcd(a, b) == 1 and (best is None or (a, b) < best):
                    best = (a, b)
    if best is None:
        raise BadParameters(f"no normal form with gcd(a, b) = 1 in the orbit of {pairs[:1]} (n={n})")
    return best


def cyclic_normal_form(g: ProjElement) -> CyclicNormalForm:
    n = _finite_order(g)
    if n == 1:
        raise IdentityElement("the identity generates the trivial group")
    a, b = canonical_pair(n, eigenratio_class(g, n))
    return CyclicNormalForm(n, a, b)


def has_real_field_of_moduli_cyclic(nf: CyclicNormalForm) -> str:
    """Always yes; the sigma-stability of <diag(1, z^a, z^b)> is rechecked."""
    G = closure([nf.element()], cap=nf.n)
    if not sigma_image(G).same_elements(G):
        raise AssertionError(f"sigma<g> != <g> for {nf}")
    return YES


def definable_cyclic(nf: CyclicNormalForm) -> tuple[bool, str]:
    n, a, b = nf.n, nf.a, nf.b
    if n == 2:
        return True, "n=2"
    if (a + b) % n == 0:
        return True, "a+b=0 mod n"
    if (a - 2 * b) % n == 0:
        return True, "a-2b=0 mod n"
    if (2 * a - b) % n == 0:
        return True, "2a-b=0 mod n"
    if nf.homology_flag:
        return False, f"homology of period {n}>=3"
    return False, "a+b, a-2b, 2a-b all nonzero mod n"


# --- real models --------------------------------------------------------------

def _conjugate_scaled(X: Matrix3, phi: Matrix3) -> Matrix3:
    """adj(phi) X phi / i, the normalisation used by the closed-form entries."""
    M = lcm(X.N, phi.N)
    i = field(M).i()
    return (phi.adjugate() * X * phi) * (-i)


def _compare(computed: Matrix3, expected_rows, label: str) -> list[str]:
    out = []
    for r in range(3):
        for c in range(3):
            e = expected_rows[r][c]
            got = computed[r, c]
            if not (got == e):
                out.append(f"{label}[{r + 1},{c + 1}]: computed {got} but closed form gives {e}")
    return out


def rotation_formula(a: int, n: int, params: RealModelParams, M: int) -> list[list]:
    """Closed-form entries of the real model of diag(1, z^a, z^-a)."""
    al, be = params.alpha.embed(M), params.beta.embed(M)
    z = field(M).root_of_unity(n, a)
    ab = al * be.conj()
    s = sin_2pi(a, n, M)
    return [
        [2 * im_part(ab).embed(M), 0, 0],
        [0, 2 * im_part(ab * z).embed(M), 2 * (be * be.conj()) * s],
        [0, -2 * (al * al.conj()) * s, 2 * im_part(ab * z.conj()).embed(M)],
    ]


def reflection_formula(params: RealModelParams, M: int) -> list[list]:
    """Closed-form entries of the real model of [X:Z:Y]."""
    al, be = params.alpha.embed(M), params.beta.embed(M)
    return [
        [2 * im_part(al * be.conj()).embed(M), 0, 0],
        [0, -2 * im_part(al * be).embed(M), -2 * im_part(be * be).embed(M)],
        [0, 2 * im_part(al * al).embed(M), 2 * im_part(al * be).embed(M)],
    ]


@dataclass
class CyclicRealModel:
    """Real model phi^-1 psi^-1 D psi phi of the normal form D = diag(1, z^a, z^b)."""

    nf: CyclicNormalForm
    matrix: Matrix3
    psi: Matrix3
    phi: Matrix3
    reduced_a: int
    diagnostics: list = dc_field(default_factory=list)

    @property
    def conjugator(self) -> Matrix3:
        """chi with chi^-1 D chi equal to the model in PGL3."""
        return self.psi * self.phi

    def verify(self) -> dict:
        D = self.nf.element(lcm(self.nf.n, self.matrix.N))
        model = ProjElement(self.matrix)
        chi = ProjElement(self.conjugator)
        back = ProjElement(chi.lift * self.matrix * chi.lift.adjugate())
        return {
            "all_real": self.matrix.is_real(),
            "order": proj_order(model, self.nf.n) == self.nf.n,
            "back_conjugates_to_diagonal": back == D,
        }

    def to_json(self) -> dict:
        return {"normal_form": list(self.nf.as_tuple()), "reduced_a": self.reduced_a,
                "model": matrix_to_json(self.matrix), "conjugator": matrix_to_json(self.conjugator),
                "diagnostics": list(self.diagnostics)}


def _reduction(nf: CyclicNormalForm):
    """(psi, a') with psi^-1 D psi = diag(1, z^a', z^-a') in PGL3."""
    n, a, b = nf.n, nf.a, nf.b
    if (a + b) % n == 0:
        return Matrix3.identity(), a % n, "a+b=0 mod n"
    if (a - 2 * b) % n == 0:
        return Matrix3.permutation("YZX"), (-b) % n, "a-2b=0 mod n"
    if (2 * a - b) % n == 0:
        return Matrix3.permutation("ZXY"), a % n, "2a-b=0 mod n"
    raise CriterionFailed(f"(n, a, b) = {nf.as_tuple()} is not definable over R")


def real_model_cyclic(nf: CyclicNormalForm, params: RealModelParams | None = None) -> CyclicRealModel:
    if params is None:
        params = default_params()
    if nf.n == 2:
        D = nf.matrix(lcm(4, params.N))
        return CyclicRealModel(nf, D, Matrix3.identity(D.N), Matrix3.identity(D.N), 0)
    psi, a2, _ = _reduction(nf)
    M = lcm(4, nf.n, params.N)
    D = nf.matrix(M)
    psi = psi.embed(M)
    reduced = psi.adjugate() * D * psi
    F = field(M)
    target = Matrix3.diag(1, F.root_of_unity(nf.n, a2), F.root_of_unity(nf.n, -a2), N=M)
    if ProjElement(reduced) != ProjElement(target):
        raise AssertionError(f"permutation reduction failed for {nf}")
    phi = params.phi(M)
    model = _conjugate_scaled(target, phi)
    diags = _compare(model, rotation_formula(a2, nf.n, params, M), "phi^-1 A phi")
    return CyclicRealModel(nf, model, psi, phi, a2, diags)


@dataclass
class DihedralRealModel:
    n: int
    a: int
    rotation: Matrix3
    reflection: Matrix3
    phi: Matrix3
    diagnostics: list = dc_field(default_factory=list)

    def generators(self) -> list[ProjElement]:
        return [ProjElement(self.rotation), ProjElement(self.reflection)]

    def to_json(self) -> dict:
        return {"n": self.n, "a": self.a, "rotation": matrix_to_json(self.rotation),
                "reflection": matrix_to_json(self.reflection), "phi": matrix_to_json(self.phi),
                "diagnostics": list(self.diagnostics)}


def real_model_dihedral(n: int, a: int, params: RealModelParams | None = None) -> DihedralRealModel:
    """Real models of A = diag(1, z^a, z^-a) and B = [X:Z:Y] under one phi."""
    if n < 3 or math.gcd(n, a) != 1:
        raise BadParameters(f"need n >= 3 and gcd(n, a) = 1, got n={n}, a={a}")
    if params is None:
        params = default_params()
    M = lcm(4, n, params.N)
    F = field(M)
    A = Matrix3.diag(1, F.root_of_unity(n, a), F.root_of_unity(n, -a), N=M)
    B = Matrix3.permutation("XZY", M)
    phi = params.phi(M)
    A2 = _conjugate_scaled(A, phi)
    B2 = _conjugate_scaled(B, phi)
    diags = _compare(A2, rotation_formula(a % n, n, params, M), "phi^-1 A phi")
    diags += _compare(B2, reflection_formula(params, M), "phi^-1 B phi")
    return DihedralRealModel(n, a, A2, B2, phi, diags)


# --- characteristic polynomial lifts -----------------------------------------

@dataclass(frozen=True)
class RealLiftWitness:
    """A scalar c with c**power == value making charpoly(c * lift) real."""

    power: int
    value: CycloElement

    def to_json(self):
        return {"power": self.power, "value": element_to_json(self.value)}


def real_charpoly_witness(p) -> RealLiftWitness | None:
    """Scalar making c^3 p(t/c) real, decided exactly, or None.

    The rescaled coefficients are c*p2, c^2*p1, c^3*p0.  If p2 != 0 every
    solution is a real multiple of conj(p2); if p2 = 0 but p1, p0 != 0 every
    solution is a real multiple of p1*conj(p0); otherwise a square or cube
    root over C always works.
    """
    _, p2, p1, p0 = p
    if not p2.is_zero():
        c = p2.conj()
        ok = (c * c * p1).is_real() and (c * c * c * p0).is_real()
        return RealLiftWitness(1, c) if ok else None
    if not p1.is_zero() and not p0.is_zero():
        c = p1 * p0.conj()
        ok = (c * c * p1).is_real() and (c * c * c * p0).is_real()
        return RealLiftWitness(1, c) if ok else None
    if not p1.is_zero():
        return RealLiftWitness(2, p1.conj())
    return RealLiftWitness(3, p0.conj())


def exists_real_charpoly_lift(g: ProjElement) -> RealLiftWitness | None:
    n = _finite_order(g)
    if n < 3:
        raise PreconditionFailed(f"needs order >= 3, got {n}")
    return real_charpoly_witness(charpoly(g.lift))


def check_real_lift(g: ProjElement, w: RealLiftWitness) -> bool:
    """Recheck a witness: all of c*p2, c^2*p1, c^3*p0 real."""
    _, p2, p1, p0 = charpoly(g.lift)
    M = lcm(p2.N, w.value.N)
    p2, p1, p0, v = (x.embed(M) for x in (p2, p1, p0, w.value))
    if w.power == 1:
        return all(x.is_real() for x in (v * p2, v * v * p1, v * v * v * p0))
    if w.power == 2:
        return p2.is_zero() and p0.is_zero() and (v * p1).is_real()
    return p2.is_zero() and p1.is_zero() and (v * p0).is_real()


# --- full pipeline -----------------------------------------------------------

def inverse_obstruction(nf: CyclicNormalForm) -> dict:
    """Exponent-level check that diag(1, z^a, z^b) and its inverse differ by no scalar."""
    n, a, b = nf.as_tuple()
    hits = eigen_scalar_search((0, a, b), (0, -a, -b), n)
    return {"scalars_matching_inverse": hits, "certified_not_conjugate": not hits}


def verdict_cyclic(g: ProjElement, params: RealModelParams | None = None) -> DescentVerdict:
    nf = cyclic_normal_form(g)
    moduli = has_real_field_of_moduli_cyclic(nf)
    ok, reason = definable_cyclic(nf)
    details = {"normal_form": list(nf.as_tuple()), "homology": nf.homology_flag}
    if ok:
        model = real_model_cyclic(nf, params)
        checks = model.verify()
        if not all(checks.values()):
            raise AssertionError(f"real model failed its checks: {checks}")
        details["model_checks"] = checks
        witness = model.to_json()
        if params is not None:
            witness["params"] = params.to_json()
        return DescentVerdict(moduli, YES, reason, witness=witness, details=details)
    n = nf.n
    ratio = not conjugacy_necessary(g, g.inverse(), n)
    details["ratio_obstruction"] = ratio
    details.update(inverse_obstruction(nf))
    if not (ratio and details["certified_not_conjugate"]):
        raise AssertionError(f"criterion says non-definable but g ~ g^-1 is not excluded for {nf}")
    obstruction = OBSTRUCTION_HOMOLOGY if nf.homology_flag else OBSTRUCTION_CRITERION
    return DescentVerdict(moduli, NO, reason, obstruction=obstruction, details=details)


def verdict_from_normal_form(n: int, a: int, b: int, params: RealModelParams | None = None) -> DescentVerdict:
    nf = CyclicNormalForm(n, a, b)
    v = verdict_cyclic(nf.element(), params)
    v.details["input_normal_form"] = [n, a, b]
    return v
