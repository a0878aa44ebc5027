"""Explicit finite subgroups of PGL3 given by generators."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass

from .cyclotomic import lcm
from .errors import ClosureExceedsCap, NotSubgroupOfAmbient
from .projlinear import Matrix3, ProjElement, matrix_from_json, matrix_to_json, proj_order

DEFAULT_CAP = 400


@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    order_histogram: dict
    abelian: bool


class FiniteSubgroup:
    """Closure of a generator list; elements are stored by canonical key."""

    def __init__(self, generators, elements: dict):
        self.generators = list(generators)
        self._elements = elements
        self.N = next(iter(elements.values())).N

    @property
    def elements(self) -> list[ProjElement]:
        return list(self._elements.values())

    @property
    def order(self) -> int:
        return len(self._elements)

    def __len__(self):
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements.values())

    def __contains__(self, g: ProjElement) -> bool:
        return self.contains_any_field(g)

    def contains_any_field(self, g: ProjElement) -> bool:
        M = lcm(self.N, g.N)
        if M == self.N:
            return g.embed(M).key in self._elements
        return any(h == g for h in self)

    def identity(self) -> ProjElement:
        return ProjElement(Matrix3.identity(self.N))

    def is_subset_of(self, other: "FiniteSubgroup") -> bool:
        return all(other.contains_any_field(g) for g in self)

    def same_elements(self, other: "FiniteSubgroup") -> bool:
        return self.order == other.order and self.is_subset_of(other)

    def embed(self, M: int) -> "FiniteSubgroup":
        if M == self.N:
            return self
        els = {}
        for g in self:
            h = g.embed(M)
            els[h.key] = h
        return FiniteSubgroup([g.embed(M) for g in self.generators], els)

    def __repr__(self):
        return f"FiniteSubgroup(order={self.order}, N={self.N}, generators={len(self.generators)})"


def closure(gens, cap: int = DEFAULT_CAP) -> FiniteSubgroup:
    """Breadth-first product closure of ``gens`` with exact dedup."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    gens = [g if isinstance(g, ProjElement) else ProjElement(g) for g in gens]
    N = lcm(1, *(g.N for g in gens)) if gens else 1
    gens = [g.embed(N) for g in gens]
    e = ProjElement(Matrix3.identity(N))
    elements = {e.key: e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y.key not in elements:
                elements[y.key] = y
                if len(elements) > cap:
                    raise ClosureExceedsCap(f"closure exceeded {cap} elements")
                queue.append(y)
    return FiniteSubgroup(gens, elements)


def fingerprint(G: FiniteSubgroup) -> GroupFingerprint:
    hist = Counter(proj_order(g, max(G.order, 1)) for g in G)
    gens = G.generators
    abelian = all((a * b) == (b * a) for i, a in enumerate(gens) for b in gens[i + 1:])
    return GroupFingerprint(G.order, dict(sorted(hist.items())), abelian)


def sigma_image(G: FiniteSubgroup) -> FiniteSubgroup:
    els = {}
    for g in G:
        h = g.sigma()
        els[h.key] = h
    return FiniteSubgroup([g.sigma() for g in G.generators], els)


def conjugate_group(G: FiniteSubgroup, psi: ProjElement) -> FiniteSubgroup:
    """psi^-1 G psi."""
    M = lcm(G.N, psi.N)
    psi = psi.embed(M)
    els = {}
    for g in G:
        h = g.embed(M).conjugate_by(psi)
        els[h.key] = h
    return FiniteSubgroup([g.embed(M).conjugate_by(psi) for g in G.generators], els)


def _elements_of_order(G: FiniteSubgroup, k: int) -> list[ProjElement]:
    out = []
    for g in G:
        if (g.lift ** k).is_scalar() and not g.is_identity():
            if all(not (g.lift ** d).is_scalar() for d in range(1, k)):
                out.append(g)
    return out


def find_subgroup_C3xC3(G: FiniteSubgroup):
    """A commuting pair of order-3 elements generating a group of order 9, or None."""
    threes = _elements_of_order(G, 3)
    for i, x in enumerate(threes):
        cyc = {x.key, (x * x).key}
        for y in threes[i + 1:]:
            if y.key in cyc:
                continue
            if (x * y) == (y * x):
                H = closure([x, y], cap=9)
                if H.order == 9:
                    return x, y
    return None


def _require_subgroup(H: FiniteSubgroup, ambient: FiniteSubgroup):
    if not H.is_subset_of(ambient):
        raise NotSubgroupOfAmbient("subgroup is not contained in the ambient group")


def _maps_into(H: FiniteSubgroup, K: FiniteSubgroup, psi: ProjElement) -> bool:
    # enough to test generators: psi^-1 H psi is a group of the same order
    return all(K.contains_any_field(h.conjugate_by(psi)) for h in H.generators)


def subgroup_conjugacy_search(H: FiniteSubgroup, K: FiniteSubgroup, ambient: FiniteSubgroup):
    """Some psi in ``ambient`` with psi^-1 H psi = K, or None.

    Candidates are tested on generators of H; a hit is confirmed by
    conjugating every element of H.
    """
    _require_subgroup(H, ambient)
    _require_subgroup(K, ambient)
    if H.order != K.order:
        return None
    M = lcm(H.N, K.N, ambient.N)
    H, K, amb = H.embed(M), K.embed(M), ambient.embed(M)
    for psi in amb:
        if _maps_into(H, K, psi) and conjugate_group(H, psi).same_elements(K):
            return psi
    return None


def normalizer_in(H: FiniteSubgroup, ambient: FiniteSubgroup) -> FiniteSubgroup:
    """{g in ambient : g^-1 H g = H}."""
    _require_subgroup(H, ambient)
    M = lcm(H.N, ambient.N)
    H, amb = H.embed(M), ambient.embed(M)
    els = {g.key: g for g in amb if _maps_into(H, H, g)}
    return FiniteSubgroup(list(els.values()), els)


def is_closed(G: FiniteSubgroup) -> bool:
    """Closed under products and inverses (a full Cayley-table check)."""
    return (all(G.contains_any_field(a * b) for a in G for b in G)
            and all(G.contains_any_field(a.inverse()) for a in G))


def lagrange_holds(G: FiniteSubgroup) -> bool:
    return all(G.order % proj_order(g, G.order) == 0 for g in G)


def group_to_json(G: FiniteSubgroup, with_elements: bool = False) -> dict:
    out = {"generators": [matrix_to_json(g.lift) for g in G.generators], "order": G.order}
    if with_elements:
        out["elements"] = [matrix_to_json(g.lift) for g in G]
    return out


def group_from_json(obj: dict, cap: int = DEFAULT_CAP) -> FiniteSubgroup:
    gens = [ProjElement(matrix_from_json(m)) for m in obj["generators"]]
    G = closure(gens, cap=cap)
    if "order" in obj and int(obj["order"]) != G.order:
        raise ValueError(f"declared order {obj['order']} but closure has {G.order} elements")
    return G
