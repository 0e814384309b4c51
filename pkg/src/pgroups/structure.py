"""Structural computations on p-groups: subgroups in echelon form, conjugacy
data, characteristic subgroups and series, and conjugacy classes of subgroups
by cyclic extension.

All operations take a consistent :class:`~pgroups.presentation.PcPresentation`
and work internally on the cached multiplication table of the group.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .presentation import PcPresentation, PresentationError
from .table import TableGroup, SizeBoundError
from .pcbuild import pc_presentation_of, minimal_tuple, _span_products, _coset_labels

# Default order bound for subgroup-class enumeration.
SUBGROUP_ENUM_BOUND = max(2 ** 7, 5 ** 5)


def table_of(pres: PcPresentation) -> TableGroup:
    """The (cached) multiplication table of a presented group."""
    tg = getattr(pres, "_table", None)
    if tg is None:
        tg = TableGroup.from_presentation(pres)
        pres._table = tg
    return tg


def _lead(vec) -> int:
    for i, e in enumerate(vec):
        if e:
            return i
    return -1


class Subgroup:
    """A subgroup of a presented p-group, held as an induced generating
    sequence in canonical echelon form plus its explicit element set."""

    def __init__(self, parent: PcPresentation, igs: tuple, elements: np.ndarray):
        self.parent = parent
        self.igs = tuple(tuple(v) for v in igs)
        self.elements = np.asarray(elements)
        self.depth_map = {_lead(v): v for v in self.igs}

    @classmethod
    def from_elements(cls, parent: PcPresentation, elems) -> "Subgroup":
        tg = table_of(parent)
        elems = np.sort(np.asarray(elems))
        igs = _echelon_igs(parent, tg, elems)
        return cls(parent, igs, elems)

    @classmethod
    def generated_by(cls, parent: PcPresentation, gens) -> "Subgroup":
        tg = table_of(parent)
        idx = [tg.enc(g) if not isinstance(g, (int, np.integer)) else int(g)
               for g in gens]
        return cls.from_elements(parent, tg.closure(idx))

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, vec) -> bool:
        """Membership by sifting against the echelonized igs."""
        pres = self.parent
        w = tuple(int(x) for x in vec)
        while any(w):
            d = _lead(w)
            u = self.depth_map.get(d)
            if u is None:
                return False
            w = pres.mul(pres.pow(u, -w[d]), w)
        return True

    def is_normal(self) -> bool:
        return table_of(self.parent).is_normal(self.elements)

    def presentation(self) -> PcPresentation:
        return pc_presentation_of(table_of(self.parent).subgroup(self.elements))

    def sort_key(self):
        return (self.order, self.igs)

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and self.parent is other.parent
                and np.array_equal(self.elements, other.elements))

    def __hash__(self):
        return hash((id(self.parent), self.elements.tobytes()))

    def __repr__(self):
        return f"Subgroup(order={self.order}, igs={self.igs})"


def _echelon_igs(pres: PcPresentation, tg: TableGroup, elems: np.ndarray):
    """Canonical echelon-form induced generating sequence of a subgroup given
    by its full element set."""
    p = pres.p
    vecs = {}
    for x in elems:
        v = tg.vec(int(x))
        d = _lead(v)
        if d < 0:
            continue
        if d not in vecs or v < vecs[d]:
            vecs[d] = v
    igs = []
    for d in sorted(vecs):
        v = vecs[d]
        # normalize the leading exponent to 1
        t = pow(v[d], -1, p)
        igs.append(pres.pow(v, t))
    # clear entries sitting over later leading positions
    for i in range(len(igs) - 2, -1, -1):
        for j in range(i + 1, len(igs)):
            dj = _lead(igs[j])
            a = igs[i][dj]
            if a:
                igs[i] = pres.mul(igs[i], pres.pow(igs[j], -a))
    return tuple(igs)


@dataclass(frozen=True)
class ConjugacyClassInfo:
    representative: tuple
    size: int
    element_order: int


@dataclass
class SeriesData:
    kind: str
    terms: list


def conjugacy_classes(G: PcPresentation) -> list[ConjugacyClassInfo]:
    tg = table_of(G)
    return [ConjugacyClassInfo(representative=tg.vec(c["representative"]),
                               size=c["size"], element_order=c["order"])
            for c in tg.classes]


def element_order_multiset(G: PcPresentation) -> list[int]:
    return sorted(table_of(G).orders.tolist())


def center(G: PcPresentation) -> Subgroup:
    return Subgroup.from_elements(G, table_of(G).center())


def derived_subgroup(G: PcPresentation) -> Subgroup:
    return Subgroup.from_elements(G, table_of(G).derived_subgroup())


def frattini_subgroup(G: PcPresentation) -> Subgroup:
    return Subgroup.from_elements(G, table_of(G).frattini_subgroup())


_SERIES_KINDS = ("derived", "lower_central", "upper_central", "lower_exponent_p")


def series(G: PcPresentation, kind: str) -> SeriesData:
    tg = table_of(G)
    if kind == "derived":
        terms = tg.derived_series()
    elif kind == "lower_central":
        terms = tg.lower_central_series()
    elif kind == "upper_central":
        terms = tg.upper_central_series()
    elif kind == "lower_exponent_p":
        terms = tg.lower_exponent_p_central_series()
    else:
        raise ValueError(f"unknown series kind {kind!r}; expected one of {_SERIES_KINDS}")
    return SeriesData(kind=kind, terms=[Subgroup.from_elements(G, t) for t in terms])


def rank(G: PcPresentation) -> int:
    return table_of(G).rank()


def abelian_invariants(G: PcPresentation) -> list[int]:
    return table_of(G).abelian_invariants()


def derived_series_abelian_invariants(G: PcPresentation) -> list[list[int]]:
    """Abelian invariants of each abelianized term of the derived series."""
    tg = table_of(G)
    ds = tg.derived_series()
    out = []
    for term in ds:
        sub = tg.subgroup(term)
        out.append(sub.quotient(sub.derived_subgroup()).abelian_invariants())
    return out


def quotient(G: PcPresentation, N: Subgroup) -> PcPresentation:
    tg = table_of(G)
    if not tg.is_normal(N.elements):
        raise PresentationError("quotient requires a normal subgroup")
    return pc_presentation_of(tg.quotient(N.elements))


# -- subgroup-class enumeration by cyclic extension ---------------------------

def _subgroup_class_data(tg: TableGroup, bound: int):
    """Conjugacy classes of proper subgroups as (element array, class length),
    layered by order; cached on the table."""
    cached = tg._cache.get("subgroup_classes")
    if cached is not None:
        return cached
    if tg.size > bound:
        raise SizeBoundError(
            f"subgroup enumeration: order {tg.size} exceeds bound {bound}")
    N, p = tg.size, tg.p
    inv = tg.inverse
    arange = np.arange(N)
    pmap = np.array([tg.power(x, p) for x in range(N)])
    ggens = tg.generators

    def conj_set(elems, g):
        return np.sort(tg.table[tg.table[inv[g], elems], g]).astype(np.int64)

    if tg.size == 1:
        tg._cache["subgroup_classes"] = [[]]
        return [[]]
    layers = [[(np.array([tg.identity]), 1)]]
    total_layers = 0
    while tg.size > p ** (len(layers)):
        k = len(layers)
        seen: set[bytes] = set()
        classes = []
        for Uelems, _length in layers[k - 1]:
            mask_U = np.zeros(N, dtype=bool)
            mask_U[Uelems] = True
            # normalizer of U, vectorized over the conjugating element
            norm = np.ones(N, dtype=bool)
            for u in tg.subgroup_generators(Uelems):
                norm &= mask_U[tg.table[tg.table[inv, u], arange]]
            cand = np.flatnonzero(norm & ~mask_U & mask_U[pmap])
            for x in cand:
                cosets = [Uelems]
                cur = Uelems
                for _ in range(p - 1):
                    cur = tg.table[cur, x]
                    cosets.append(cur)
                V = np.sort(np.concatenate(cosets)).astype(np.int64)
                key = V.tobytes()
                if key in seen:
                    continue
                # conjugation orbit of the subgroup V
                orbit = {key: V}
                stack = [V]
                while stack:
                    S = stack.pop()
                    for g in ggens:
                        T = conj_set(S, g)
                        tk = T.tobytes()
                        if tk not in orbit:
                            orbit[tk] = T
                            stack.append(T)
                seen.update(orbit)
                rep = orbit[min(orbit)]
                classes.append((rep, len(orbit)))
        classes.sort(key=lambda c: (c[1], c[0].tobytes()))
        layers.append(classes)
        total_layers = k
    del total_layers
    tg._cache["subgroup_classes"] = layers
    return layers


def subgroup_conjugacy_classes(G: PcPresentation,
                               bound: int = SUBGROUP_ENUM_BOUND
                               ) -> list[tuple[Subgroup, int]]:
    """One representative per conjugacy class of proper subgroups (the trivial
    subgroup included), with class lengths; ordered by (order, length, igs)."""
    tg = table_of(G)
    layers = _subgroup_class_data(tg, bound)
    out = []
    for layer in layers:
        for elems, length in layer:
            out.append((Subgroup.from_elements(G, elems), length))
    out.sort(key=lambda t: (t[0].order, t[1], t[0].igs))
    return out


def normal_subgroups(G: PcPresentation,
                     bound: int = SUBGROUP_ENUM_BOUND) -> list[Subgroup]:
    """All nontrivial normal subgroups, including G itself."""
    tg = table_of(G)
    layers = _subgroup_class_data(tg, bound)
    out = []
    for layer in layers[1:]:
        for elems, length in layer:
            if length == 1:
                out.append(Subgroup.from_elements(G, elems))
    out.append(Subgroup.from_elements(G, np.arange(tg.size)))
    out.sort(key=Subgroup.sort_key)
    return out


def maximal_subgroups(G: PcPresentation) -> list[Subgroup]:
    """The index-p subgroups: preimages of hyperplanes of G/Phi(G)."""
    tg = table_of(G)
    p = G.p
    if tg.size == 1:
        return []
    tup = minimal_tuple(tg)
    d = len(tup)
    frat = tg.frattini_subgroup()
    labels = _coset_labels(tg, frat)
    prods, enc = _span_products(tg, tup, p)
    coords = {}
    radix = [p ** (d - 1 - i) for i in range(d)]
    for m, lab in enumerate(labels[prods]):
        coords[int(lab)] = tuple((m // r) % p for r in radix)
    coord_arr = np.array([coords[int(labels[x])] for x in range(tg.size)])
    out = []
    for phi in _normalized_functionals(p, d):
        mask = (coord_arr @ np.array(phi)) % p == 0
        out.append(Subgroup.from_elements(G, np.flatnonzero(mask)))
    out.sort(key=Subgroup.sort_key)
    return out


def _normalized_functionals(p: int, d: int):
    """Nonzero functionals on F_p^d with leading coefficient 1 (one per
    hyperplane)."""
    import itertools
    for lead in range(d):
        for rest in itertools.product(range(p), repeat=d - 1 - lead):
            yield (0,) * lead + (1,) + rest


def central_cyclic_subgroups(G: PcPresentation) -> list[Subgroup]:
    """Nontrivial cyclic subgroups of the center."""
    tg = table_of(G)
    seen: set[bytes] = set()
    out = []
    for z in tg.center():
        if int(z) == tg.identity:
            continue
        elems = tg.closure([int(z)])
        key = elems.tobytes()
        if key in seen:
            continue
        seen.add(key)
        out.append(Subgroup.from_elements(G, elems))
    out.sort(key=Subgroup.sort_key)
    return out
