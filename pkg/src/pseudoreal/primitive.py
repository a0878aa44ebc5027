"""The six finite primitive subgroups of PGL3(C).

Hessian groups are built from S, T, U, V over Q(zeta_12); the icosahedral
copy <A, B, C> over Q(zeta_20).  A6 has no matrices here and PSL(2,7) is
represented only by its element diag(1, zeta_7, zeta_7^3).

Obstruction rules used by :func:`pseudo_real_check`:

* cyclic: if some element generates a cyclic group that is not definable
  over R, neither is the whole group (the same conjugator would work).
* C3 x C3: PGL3(K) contains C3 x C3 only when K contains a primitive cube
  root of unity (Hu, "Jordan constants of PGL3", Lemma 5.2).  Trusted rule,
  not re-proved here.
* constructive: an explicit conjugate with all entries real.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .cyclotomic import cos_2pi, field
from .descent import (NO, OBSTRUCTION_C3XC3, OBSTRUCTION_CYCLIC, UNKNOWN, YES, DescentVerdict,
                      RealModelParams, _compare, _conjugate_scaled, default_params,
                      definable_cyclic, im_part, re_part, real_model_dihedral)
from .descent import CyclicNormalForm, canonical_pair
from .errors import NoGenerators
from .finitegroup import (FiniteSubgroup, closure, find_subgroup_C3xC3, fingerprint, sigma_image,
                          subgroup_conjugacy_search)
from .projlinear import (Matrix3, ProjElement, charpoly, charpoly_class_key, eigenratio_class,
                         matrix_to_json, proj_order)

HESSIAN_CONDUCTOR = 12
A5_CONDUCTOR = 20

HU_C3XC3_RULE = ("C3 x C3 embeds in PGL3(K) iff K contains a primitive cube root of unity "
                 "(Y. Hu, Lemma 5.2); zeta_3 is not real.")

COMPUTED, RULE_BASED, LITERATURE = "computed", "rule-based", "literature"


def hessian_generators(N: int = HESSIAN_CONDUCTOR) -> dict[str, ProjElement]:
    F = field(N)
    w = F.root_of_unity(3)
    return {
        "S": ProjElement(Matrix3.diag(1, w, w.conj(), N=N)),
        "T": ProjElement(Matrix3.permutation("YZX", N)),
        "U": ProjElement(Matrix3.diag(1, 1, w, N=N)),
        "V": ProjElement(Matrix3([[1, 1, 1], [1, w, w.conj()], [1, w.conj(), w]], N)),
    }


def hessian_generator_list(which: int, gens: dict | None = None) -> list[ProjElement]:
    g = gens or hessian_generators()
    S, T, U, V = g["S"], g["T"], g["U"], g["V"]
    if which == 216:
        return [S, T, U, V]
    if which == 72:
        return [S, T, V, U * V * U.inverse()]
    if which == 36:
        return [S, T, V]
    raise ValueError(f"no Hessian group of order {which}")


def build_hessian(which: int, gens: dict | None = None) -> FiniteSubgroup:
    return closure(hessian_generator_list(which, gens))


def sigma_hess72_generators(gens: dict | None = None) -> list[ProjElement]:
    """<S, T, V, U^-1 V^-1 U>, the conjugate copy of Hess72 inside Hess216."""
    g = gens or hessian_generators()
    S, T, U, V = g["S"], g["T"], g["U"], g["V"]
    return [S, T, V, U.inverse() * V.inverse() * U]


def a5_generators(N: int = A5_CONDUCTOR) -> dict[str, ProjElement]:
    """A = diag(1, z5^-1, z5), B = [X:Z:Y], C = [X+Y+Z : 2X+sY+tZ : 2X+tY+sZ].

    s = z5^2 + z5^3 = 2cos(4pi/5), t = z5 + z5^4 = 2cos(2pi/5).  See
    :func:`printed_c_matrix` for the variant with first row (2, 2, 2).
    """
    F = field(N)
    z = F.root_of_unity(5)
    c4, c2 = cos_2pi(2, 5, N), cos_2pi(1, 5, N)
    return {
        "A": ProjElement(Matrix3.diag(1, z.conj(), z, N=N)),
        "B": ProjElement(Matrix3.permutation("XZY", N)),
        "C": ProjElement(Matrix3([[1, 1, 1], [2, 2 * c4, 2 * c2], [2, 2 * c2, 2 * c4]], N)),
    }


def printed_c_matrix(N: int = A5_CONDUCTOR) -> Matrix3:
    """[[2,2,2],[1,cos(4pi/5),cos(2pi/5)],[1,cos(2pi/5),cos(4pi/5)]].

    Kept for comparison only: this matrix has no finite projective order,
    so it cannot generate A5 together with A and B.
    """
    c4, c2 = cos_2pi(2, 5, N), cos_2pi(1, 5, N)
    return Matrix3([[2, 2, 2], [1, c4, c2], [1, c2, c4]], N)


def build_a5(gens: dict | None = None) -> FiniteSubgroup:
    g = gens or a5_generators()
    return closure([g["A"], g["B"], g["C"]])


@dataclass
class A5RealModel:
    A: Matrix3
    B: Matrix3
    C: Matrix3
    phi: Matrix3
    diagnostics: list = dc_field(default_factory=list)

    def generators(self) -> list[ProjElement]:
        return [ProjElement(self.A), ProjElement(self.B), ProjElement(self.C)]

    def to_json(self) -> dict:
        return {"A": matrix_to_json(self.A), "B": matrix_to_json(self.B), "C": matrix_to_json(self.C),
                "phi": matrix_to_json(self.phi), "diagnostics": list(self.diagnostics)}


def c_model_formula(params: RealModelParams, M: int) -> list[list]:
    """Closed-form entries for phi^-1 C phi with the first row (2, 2, 2) convention."""
    al, be = params.alpha.embed(M), params.beta.embed(M)
    c4, c2 = cos_2pi(2, 5, M), cos_2pi(1, 5, M)
    I = im_part(al * be.conj()).embed(M)
    Iab = im_part(al * be).embed(M)
    return [
        [4 * I, 8 * I * re_part(al).embed(M), 8 * I * re_part(be).embed(M)],
        [2 * im_part(be.conj()).embed(M), 2 * (c4 * I - c2 * Iab), -2 * c2 * im_part(be * be).embed(M)],
        [2 * im_part(al).embed(M), 2 * c2 * im_part(al * al).embed(M), 2 * (c4 * I + c2 * Iab)],
    ]


def real_model_a5(params: RealModelParams | None = None) -> A5RealModel:
    """phi^-1 <A, B, C> phi, computed by exact conjugation (n = 5, a = 4)."""
    if params is None:
        params = default_params()
    dih = real_model_dihedral(5, 4, params)
    M = dih.phi.N
    C = a5_generators(M)["C"].lift
    C2 = _conjugate_scaled(C, dih.phi)
    diags = list(dih.diagnostics)
    diags += _compare(C2, c_model_formula(params, M), "phi^-1 C phi")
    printed = _conjugate_scaled(printed_c_matrix(M), dih.phi)
    if not _compare(printed, c_model_formula(params, M), "x"):
        diags.append("closed form for phi^-1 C phi matches the first-row-(2,2,2) matrix, "
                     "which differs from the generator C by scaling its first row")
    return A5RealModel(dih.rotation, dih.reflection, C2, dih.phi, diags)


# --- catalog ------------------------------------------------------------------

@dataclass
class CatalogEntry:
    name: str
    expected_order: int
    generators: list | None
    verdict: DescentVerdict
    verification_mode: str
    witness_element: ProjElement | None = None
    notes: str = ""

    def row(self) -> dict:
        v = self.verdict
        return {"name": self.name, "order": self.expected_order, "moduli": v.real_field_of_moduli,
                "definable": v.definable_over_R, "pseudo_real": v.pseudo_real,
                "mode": self.verification_mode}


@dataclass
class ModuliCheck:
    status: str
    mode: str
    witness: ProjElement | None = None
    detail: str = ""


@lru_cache(maxsize=None)
def _group(name: str) -> FiniteSubgroup:
    if name == "Hess216":
        return build_hessian(216)
    if name == "Hess72":
        return build_hessian(72)
    if name == "Hess36":
        return build_hessian(36)
    if name == "A5":
        return build_a5()
    raise NoGenerators(f"no generator matrices for {name}")


def _bare_entry(name: str) -> CatalogEntry:
    blank = DescentVerdict(UNKNOWN, UNKNOWN)
    if name in ("Hess216", "Hess72", "Hess36"):
        which = int(name[4:])
        return CatalogEntry(name, which, hessian_generator_list(which), blank, COMPUTED)
    if name == "A5":
        g = a5_generators()
        return CatalogEntry(name, 60, [g["A"], g["B"], g["C"]], blank, COMPUTED)
    if name == "A6":
        return CatalogEntry(name, 360, None, blank, RULE_BASED,
                            notes="no matrices; A6 contains C3 x C3 as an abstract subgroup")
    if name == "PSL27":
        F = field(7)
        w = ProjElement(Matrix3.diag(1, F.zeta(1), F.zeta(3), N=7))
        return CatalogEntry(name, 168, None, blank, LITERATURE, witness_element=w,
                            notes="represented by its element diag(1, z7, z7^3)")
    raise KeyError(name)


def moduli_check(entry: CatalogEntry) -> ModuliCheck:
    name = entry.name
    if name in ("Hess216", "Hess36", "A5"):
        G = _group(name)
        if sigma_image(G).same_elements(G):
            return ModuliCheck(YES, COMPUTED, G.identity(), "sigma(G) = G setwise")
        return ModuliCheck(YES, LITERATURE, None,
                           "sigma(G) != G setwise; unique conjugacy class (literature)")
    if name == "Hess72":
        H = _group("Hess72")
        K = closure(sigma_hess72_generators())
        if not sigma_image(H).same_elements(K):
            raise AssertionError("sigma(Hess72) is not <S, T, V, U^-1 V^-1 U>")
        psi = subgroup_conjugacy_search(H, K, _group("Hess216"))
        if psi is None:
            raise AssertionError("no conjugator for Hess72 inside Hess216")
        return ModuliCheck(YES, COMPUTED, psi, "psi^-1 Hess72 psi = sigma(Hess72), psi in Hess216")
    if name in ("A6", "PSL27"):
        return ModuliCheck(YES, LITERATURE, None, "single PGL3(C)-conjugacy class (Mitchell)")
    raise KeyError(name)


def cyclic_obstructions(G: FiniteSubgroup, limit: int | None = None) -> list[dict]:
    """Elements of G whose cyclic subgroup is not definable over R.

    Elements with equal characteristic-polynomial class share a normal form,
    so each class is classified once.
    """
    seen = {}
    out = []
    for g in G:
        if g.is_identity():
            continue
        key = charpoly_class_key(charpoly(g.lift))
        if key in seen:
            nf = seen[key]
        else:
            n = proj_order(g, G.order)
            nf = CyclicNormalForm(n, *canonical_pair(n, eigenratio_class(g, n)))
            seen[key] = nf
        ok, reason = definable_cyclic(nf)
        if not ok:
            out.append({"element": g, "normal_form": nf.as_tuple(), "reason": reason})
            if limit and len(out) >= limit:
                break
    return out


def _element_obstruction(g: ProjElement) -> dict | None:
    n = proj_order(g)
    nf = CyclicNormalForm(n, *canonical_pair(n, eigenratio_class(g, n)))
    ok, reason = definable_cyclic(nf)
    if ok:
        return None
    return {"element": g, "normal_form": nf.as_tuple(), "reason": reason}


def pseudo_real_check(entry: CatalogEntry) -> DescentVerdict:
    """Apply the cyclic, C3 x C3 and constructive rules; every rule that fires is recorded."""
    name = entry.name
    if entry.generators is None and entry.witness_element is None:
        raise NoGenerators(f"{name} has no matrices; its verdict is rule-based")
    moduli = moduli_check(entry)
    details = {"moduli_mode": moduli.mode, "moduli_detail": moduli.detail}
    if moduli.witness is not None:
        details["moduli_witness"] = matrix_to_json(moduli.witness.lift)
    obstructions = []
    if entry.generators is None:
        hit = _element_obstruction(entry.witness_element)
        if hit:
            obstructions.append({"rule": OBSTRUCTION_CYCLIC, "normal_form": list(hit["normal_form"]),
                                 "reason": hit["reason"]})
        details["definability_mode"] = COMPUTED
    else:
        G = _group(name)
        hits = cyclic_obstructions(G, limit=1)
        if hits:
            obstructions.append({"rule": OBSTRUCTION_CYCLIC, "normal_form": list(hits[0]["normal_form"]),
                                 "reason": hits[0]["reason"],
                                 "element": matrix_to_json(hits[0]["element"].lift)})
        pair = find_subgroup_C3xC3(G)
        if pair is not None:
            obstructions.append({"rule": OBSTRUCTION_C3XC3, "citation": HU_C3XC3_RULE,
                                 "pair": [matrix_to_json(p.lift) for p in pair]})
        details["definability_mode"] = COMPUTED
    details["obstructions"] = obstructions
    if obstructions:
        primary = next((o["rule"] for o in obstructions if o["rule"] == OBSTRUCTION_C3XC3),
                       obstructions[0]["rule"])
        return DescentVerdict(moduli.status, NO, f"{len(obstructions)} obstruction(s)",
                              obstruction=primary, details=details)
    if name == "A5":
        model = real_model_a5()
        gens = model.generators()
        G = closure(gens)
        real = all(g.is_real() for g in G)
        if real and G.order == 60:
            witness = model.to_json()
            witness["order"] = G.order
            return DescentVerdict(moduli.status, YES, "explicit real model", witness=witness,
                                  details=details)
    return DescentVerdict(moduli.status, UNKNOWN, "no rule applies", details=details)


def _a6_verdict() -> DescentVerdict:
    return DescentVerdict(YES, NO, "A6 contains C3 x C3 (abstract subgroup fact)",
                          obstruction=OBSTRUCTION_C3XC3,
                          details={"moduli_mode": LITERATURE, "definability_mode": RULE_BASED,
                                   "citation": HU_C3XC3_RULE})


@lru_cache(maxsize=None)
def catalog() -> tuple[CatalogEntry, ...]:
    entries = []
    for name in ("Hess216", "Hess72", "Hess36", "A5", "A6", "PSL27"):
        e = _bare_entry(name)
        e.verdict = _a6_verdict() if name == "A6" else pseudo_real_check(e)
        entries.append(e)
    return tuple(entries)


def catalog_entry(name: str) -> CatalogEntry:
    for e in catalog():
        if e.name.lower() == name.lower():
            return e
    raise KeyError(name)


def group_summary(G: FiniteSubgroup) -> dict:
    fp = fingerprint(G)
    return {"order": fp.order, "histogram": fp.order_histogram, "abelian": fp.abelian,
            "sigma_stable": sigma_image(G).same_elements(G)}
