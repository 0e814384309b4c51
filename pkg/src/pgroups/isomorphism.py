"""Isomorphism testing, automorphism counting, random presentation coding,
and isoclinism for finite p-groups.

The explicit isomorphism test backtracks over images of a minimal generating
tuple, pruned by per-element invariants, commutator invariants against the
partial image tuple, and generated-subgroup orders.  Soundness comes from a
final check of all pc relations; completeness from exhausting the pruned
search space.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .presentation import PcPresentation
from .table import TableGroup, SizeBoundError
from .canonical import element_invariants
from .pcbuild import (build_layered, minimal_tuple, random_tuple,
                      _span_products, _coset_labels)

DEFAULT_ISO_BOUND = 5 ** 5
DEFAULT_AUT_BOUND = 5 ** 4
DEFAULT_AUT_BUDGET = 2_000_000


@dataclass
class Isomorphism:
    """Witness mapping: images of the source pc generators in the target."""
    source: PcPresentation
    target: PcPresentation
    images: list[tuple]  # normal-form vectors in the target


def _quick_obstruction(a: TableGroup, b: TableGroup) -> bool:
    """True if a cheap invariant already separates the two groups."""
    if a.size != b.size or a.p != b.p:
        return True
    if sorted(a.orders.tolist()) != sorted(b.orders.tolist()):
        return True
    if [(c["size"], c["order"]) for c in a.classes] != \
            [(c["size"], c["order"]) for c in b.classes]:
        return True
    if a.abelian_invariants() != b.abelian_invariants():
        return True
    if [len(t) for t in a.lower_exponent_p_central_series()] != \
            [len(t) for t in b.lower_exponent_p_central_series()]:
        return True
    if [len(t) for t in a.lower_central_series()] != \
            [len(t) for t in b.lower_central_series()]:
        return True
    if len(a.center()) != len(b.center()):
        return True
    return False


class _IsoSearch:
    """Backtracking search for maps extending a fixed tuple of G into H."""

    def __init__(self, tg: TableGroup, th: TableGroup):
        self.tg, self.th = tg, th
        self.p = tg.p
        self.inv_g = element_invariants(tg)
        self.inv_h = element_invariants(th)
        sg = tg.lower_exponent_p_central_series()
        sh = th.lower_exponent_p_central_series()
        self.labels_g = _coset_labels(tg, sg[1] if len(sg) > 1 else
                                      np.array([tg.identity]))
        self.labels_h = _coset_labels(th, sh[1] if len(sh) > 1 else
                                      np.array([th.identity]))
        self.tuple_g = minimal_tuple(tg)
        self.ls_g = build_layered(tg, self.tuple_g)
        self.pres_g = self.ls_g.presentation()
        self.d = len(self.tuple_g)
        # invariant buckets in H
        buckets: dict[tuple, list[int]] = {}
        for x in range(th.size):
            buckets.setdefault(self.inv_h[x], []).append(x)
        self.buckets = buckets
        self.sub_sizes_g = [len(tg.closure(self.tuple_g[:j + 1]))
                            for j in range(self.d)]
        self.nodes = 0

    def _matches(self, x: int, j: int, images: list[int]) -> bool:
        tg, th = self.tg, self.th
        gj = self.tuple_g[j]
        for i in range(j):
            if self.inv_g[tg.comm(gj, self.tuple_g[i])] != \
                    self.inv_h[th.comm(x, images[i])]:
                return False
            if self.inv_g[int(tg.table[gj, self.tuple_g[i]])] != \
                    self.inv_h[int(th.table[x, images[i]])]:
                return False
        return True

    def _span_labels(self, images: list[int]) -> set:
        if not images:
            return {int(self.labels_h[self.th.identity])}
        prods, _ = _span_products(self.th, images, self.p)
        return set(int(v) for v in self.labels_h[prods])

    def _verify(self, images: list[int]):
        """Check that the tuple of images induces an isomorphism; return the
        full pc-generator image list or None."""
        th = self.th
        # rebuild the layer filling in H by mirroring the definitions in G
        if not hasattr(self, "_defs"):
            self._defs = _filling_definitions(self.tg, self.tuple_g, self.ls_g)
        defs = self._defs
        vals: list[int] = []
        for kind, a, b in defs:
            if kind == "first":
                vals.append(images[a])
            elif kind == "pow":
                vals.append(th.power(vals[a], self.p))
            else:  # comm with tuple position b
                vals.append(th.comm(vals[a], images[b]))
        # relations of the G presentation must hold for the image sequence
        pres = self.pres_g
        n = pres.n

        def eval_word(vec):
            r = th.identity
            for k in range(n):
                for _ in range(vec[k]):
                    r = int(th.table[r, vals[k]])
            return r

        for i in range(n):
            if th.power(vals[i], self.p) != eval_word(pres.power[i]):
                return None
        zero = (0,) * n
        for j in range(n):
            for i in range(j):
                if th.comm(vals[j], vals[i]) != eval_word(pres.comm.get((j, i), zero)):
                    return None
        if len(th.closure(images)) != th.size:
            return None
        return vals

    def find(self, count_all: bool = False, budget: int | None = None):
        """Return a witness image sequence, or count completions."""
        found: list = []
        counter = [0, 0]  # completions, nodes

        def dfs(j: int, images: list[int]):
            if found and not count_all:
                return
            if budget is not None and counter[1] > budget:
                raise _BudgetExceeded
            if j == self.d:
                vals = self._verify(images)
                if vals is not None:
                    counter[0] += 1
                    if not found:
                        found.append((list(images), vals))
                return
            gj = self.tuple_g[j]
            span = self._span_labels(images)
            cands = self.buckets.get(self.inv_g[gj], [])
            if j == 0 and not count_all:
                # composing with an inner automorphism of H moves the first
                # image within its conjugacy class, so one representative per
                # class suffices when only existence is asked
                cid = self.th.class_ids
                cands = [x for x in cands
                         if x == self.th.classes[cid[x]]["representative"]]
            for x in cands:
                counter[1] += 1
                if budget is not None and counter[1] > budget:
                    raise _BudgetExceeded
                if int(self.labels_h[x]) in span:
                    continue
                if not self._matches(x, j, images):
                    continue
                if len(self.th.closure(images + [x])) != self.sub_sizes_g[j]:
                    continue
                dfs(j + 1, images + [x])

        dfs(0, [])
        self.nodes = counter[1]
        return found, counter[0]


class BudgetExceeded(Exception):
    """A bounded isomorphism search ran out of its node budget."""


_BudgetExceeded = BudgetExceeded


def _filling_definitions(tg: TableGroup, first_tuple, ls):
    """How each pc generator of ``ls`` arises from the minimal tuple:
    ('first', i, -), ('pow', src_gen_pos, -) or ('comm', src_gen_pos, tuple_pos).
    Recomputed by replaying the layer filling."""
    p = tg.p
    series = ls.layers
    first_tuple = [int(x) for x in first_tuple]
    defs: list[tuple] = []
    gens: list[int] = []
    prev_positions: list[int] = []
    c = len(series) - 1
    for k in range(1, c + 1):
        nxt = series[k]
        labels = _coset_labels(tg, nxt)
        if k == 1:
            cand = [(("first", i, -1), x) for i, x in enumerate(first_tuple)]
        else:
            cand = []
            for pos in prev_positions:
                s = gens[pos]
                cand.append((("pow", pos, -1), tg.power(s, p)))
                for i, x in enumerate(first_tuple):
                    cand.append((("comm", pos, i), tg.comm(s, x)))
        lgens: list[int] = []
        lpos: list[int] = []
        seen = {int(labels[tg.identity])}
        for dfn, val in cand:
            lab = int(labels[val])
            if lab in seen:
                continue
            trial = lgens + [int(val)]
            prods, _ = _span_products(tg, trial, p)
            labs = set(int(v) for v in labels[prods])
            if len(labs) != len(prods):
                continue
            lgens.append(int(val))
            seen = labs
            defs.append(dfn)
            lpos.append(len(gens) + len(lgens) - 1)
        gens.extend(lgens)
        prev_positions = lpos
    assert gens == ls.gens
    return defs


def is_isomorphic(G: PcPresentation, H: PcPresentation,
                  bound: int = DEFAULT_ISO_BOUND,
                  budget: int | None = None) -> Isomorphism | None:
    """An explicit isomorphism G -> H, or None if none exists.

    With a ``budget``, the search raises :class:`BudgetExceeded` after that
    many explored nodes instead of running to completion.
    """
    if G.order > bound or H.order > bound:
        raise SizeBoundError("is_isomorphic: order exceeds bound")
    if G.order != H.order or G.p != H.p:
        return None
    tg = TableGroup.from_presentation(G)
    th = TableGroup.from_presentation(H)
    if tg.size == 1:
        return Isomorphism(G, H, [])
    if _quick_obstruction(tg, th):
        return None
    search = _IsoSearch(tg, th)
    found, _ = search.find(budget=budget)
    if not found:
        return None
    _, vals = found[0]
    # vals are images of the layered pc sequence of G; express the original
    # pc generators in that sequence and push them through the map
    images = []
    for i in range(G.n):
        exps = search.ls_g.normal_form(tg.enc(G.generator(i)))
        r = th.identity
        for v, e in zip(vals, exps):
            for _ in range(e):
                r = int(th.table[r, v])
        images.append(th.vec(r))
    return Isomorphism(G, H, images)


# -- random presentation coding ----------------------------------------------

def code_presentation(pres: PcPresentation) -> int:
    """Deterministic integer coding of a pc-presentation."""
    digits = [pres.p, pres.n]
    for i in range(pres.n):
        digits.extend(pres.power[i])
    zero = (0,) * pres.n
    for j in range(pres.n):
        for i in range(j):
            digits.extend(pres.comm.get((j, i), zero))
    base = max(pres.p, pres.n, 2) + 1
    code = 0
    for dgt in digits:
        code = code * base + dgt
    return code


def random_pc_code(G: PcPresentation, seed: int) -> int:
    """Integer code of a re-presentation on a random generating sequence."""
    rng = random.Random(seed)
    tg = TableGroup.from_presentation(G)
    if tg.size == 1:
        return code_presentation(G)
    ls = build_layered(tg, random_tuple(tg, rng))
    return code_presentation(ls.presentation())


@dataclass
class RandomIsoVerdict:
    isomorphic: bool
    method: str       # "random-collision" or "fallback"
    rounds_used: int


def random_iso_test(G: PcPresentation, H: PcPresentation, budget: int = 50,
                    seed: int = 0,
                    bound: int = DEFAULT_ISO_BOUND) -> RandomIsoVerdict:
    """Randomized isomorphism test; definitive via deterministic fallback."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    if G.order == H.order and G.p == H.p:
        rng = random.Random(seed)
        tg = TableGroup.from_presentation(G)
        th = TableGroup.from_presentation(H)
        if tg.size == 1:
            return RandomIsoVerdict(True, "random-collision", 0)
        if not (_quick_obstruction(tg, th)):
            codes_g: set[int] = set()
            codes_h: set[int] = set()
            for r in range(1, budget + 1):
                lg = build_layered(tg, random_tuple(tg, rng))
                lh = build_layered(th, random_tuple(th, rng))
                cg = code_presentation(lg.presentation())
                ch = code_presentation(lh.presentation())
                codes_g.add(cg)
                codes_h.add(ch)
                if codes_g & codes_h:
                    return RandomIsoVerdict(True, "random-collision", r)
    iso = is_isomorphic(G, H, bound=bound)
    return RandomIsoVerdict(iso is not None, "fallback", budget)


# -- automorphisms ------------------------------------------------------------

def _abelian_aut_order(p: int, type_exponents: list[int]) -> int:
    """|Aut| of the abelian p-group with cyclic factors p^{e_1} <= ... <= p^{e_m}
    (Hillar-Rhea formula)."""
    e = sorted(type_exponents)
    m = len(e)
    if m == 0:
        return 1
    d = [max(l for l in range(m) if e[l] == e[k]) for k in range(m)]
    c = [min(l for l in range(m) if e[l] == e[k]) for k in range(m)]
    total = 1
    for k in range(m):
        total *= p ** (d[k] + 1) - p ** k
    for j in range(m):
        total *= p ** (e[j] * (m - 1 - d[j]))
    for i in range(m):
        total *= p ** ((e[i] - 1) * (m - c[i]))
    return total


def automorphism_order(G: PcPresentation, bound: int = DEFAULT_AUT_BOUND,
                       budget: int = DEFAULT_AUT_BUDGET) -> int | None:
    """|Aut(G)| by backtracking enumeration; None means budget exceeded."""
    if G.order > bound:
        raise SizeBoundError("automorphism_order: order exceeds bound")
    tg = TableGroup.from_presentation(G)
    if tg.size == 1:
        return 1
    if tg.is_abelian():
        invs = tg.abelian_invariants()
        exps = [round(np.log(f) / np.log(G.p)) for f in invs]
        return _abelian_aut_order(G.p, exps)
    search = _IsoSearch(tg, tg)
    try:
        _, count = search.find(count_all=True, budget=budget)
    except _BudgetExceeded:
        return None
    return count


def automorphism_permutations(G: PcPresentation, bound: int = DEFAULT_AUT_BOUND,
                              budget: int = DEFAULT_AUT_BUDGET):
    """All automorphisms of G as element permutations; None if over budget."""
    if G.order > bound:
        raise SizeBoundError("automorphism_permutations: order exceeds bound")
    tg = TableGroup.from_presentation(G)
    if tg.size == 1:
        return [(0,)]
    search = _IsoSearch(tg, tg)
    perms: list[tuple] = []
    counter = [0]

    def dfs(j, images):
        counter[0] += 1
        if counter[0] > budget:
            raise _BudgetExceeded
        if j == search.d:
            vals = search._verify(images)
            if vals is not None:
                ls_img = _hom_permutation(tg, search, vals)
                perms.append(ls_img)
            return
        gj = search.tuple_g[j]
        span = search._span_labels(images)
        for x in search.buckets.get(search.inv_g[gj], []):
            if int(search.labels_h[x]) in span:
                continue
            if not search._matches(x, j, images):
                continue
            if len(tg.closure(images + [x])) != search.sub_sizes_g[j]:
                continue
            dfs(j + 1, images + [x])

    try:
        dfs(0, [])
    except _BudgetExceeded:
        return None
    return perms


def _hom_permutation(tg: TableGroup, search: "_IsoSearch", vals) -> tuple:
    """Element permutation of the automorphism with pc-generator images vals."""
    ls = search.ls_g
    out = []
    for x in range(tg.size):
        nf = ls.normal_form(x)
        r = tg.identity
        for v, e in zip(vals, nf):
            for _ in range(e):
                r = int(tg.table[r, v])
        out.append(r)
    return tuple(out)


def outer_equivalent(G: PcPresentation, H: PcPresentation,
                     bound: int = DEFAULT_AUT_BOUND,
                     budget: int = DEFAULT_AUT_BUDGET) -> bool | None:
    """Whether Out(G) and Out(H) are isomorphic; None means budget exceeded."""
    og = _outer_group(G, bound, budget)
    oh = _outer_group(H, bound, budget)
    if og is None or oh is None:
        return None
    return table_isomorphic(og, oh) is not None


def _outer_group(G: PcPresentation, bound: int, budget: int) -> TableGroup | None:
    perms = automorphism_permutations(G, bound=bound, budget=budget)
    if perms is None:
        return None
    tg = TableGroup.from_presentation(G)
    inner = set()
    for g in range(tg.size):
        inner.add(tuple(tg.conj(x, g) for x in range(tg.size)))
    index = {pm: i for i, pm in enumerate(perms)}
    inner_idx = sorted(index[pm] for pm in inner)
    # left cosets phi * Inn
    coset_label = {}
    for i, pm in enumerate(perms):
        members = []
        for j in inner_idx:
            inn = perms[j]
            comp = tuple(pm[inn[x]] for x in range(tg.size))
            members.append(index[comp])
        coset_label[i] = min(members)
    reps = sorted(set(coset_label.values()))
    rep_index = {r: i for i, r in enumerate(reps)}
    m = len(reps)
    table = np.empty((m, m), dtype=np.int64)
    for a, ra in enumerate(reps):
        pa = perms[ra]
        for b, rb in enumerate(reps):
            pb = perms[rb]
            comp = tuple(pa[pb[x]] for x in range(tg.size))
            table[a, b] = rep_index[coset_label[index[comp]]]
    return TableGroup(table)


# -- generic small-group isomorphism on tables --------------------------------

def table_isomorphic(ta: TableGroup, tb: TableGroup) -> list[int] | None:
    """Isomorphism between two table groups (any finite groups), as the image
    list of every element of ``ta``; None if non-isomorphic."""
    if ta.size != tb.size:
        return None
    n = ta.size
    if n == 1:
        return [tb.identity]
    if sorted(ta.orders.tolist()) != sorted(tb.orders.tolist()):
        return None
    gens = ta.generators
    # decompose every element of ta as a word in gens
    words: dict[int, tuple] = {ta.identity: ()}
    frontier = [ta.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for gi, g in enumerate(gens):
                y = int(ta.table[x, g])
                if y not in words:
                    words[y] = words[x] + (gi,)
                    nxt.append(y)
        frontier = nxt
    inv_a = [(int(ta.orders[x]), int(ta.classes[ta.class_ids[x]]["size"]))
             for x in range(n)]
    inv_b = [(int(tb.orders[x]), int(tb.classes[tb.class_ids[x]]["size"]))
             for x in range(n)]
    buckets: dict[tuple, list[int]] = {}
    for x in range(n):
        buckets.setdefault(inv_b[x], []).append(x)
    sub_sizes = [len(ta.closure(gens[:j + 1])) for j in range(len(gens))]

    result: list[list[int] | None] = [None]

    def build(images):
        phi = [0] * n
        for x, w in words.items():
            r = tb.identity
            for gi in w:
                r = int(tb.table[r, images[gi]])
            phi[x] = r
        if len(set(phi)) != n:
            return None
        for x in range(n):
            for y in gens:
                if phi[int(ta.table[x, y])] != int(tb.table[phi[x], phi[y]]):
                    return None
        # generator relations checked via full row tests above
        arr = np.array(phi)
        if not np.array_equal(arr[ta.table], tb.table[np.ix_(arr, arr)]):
            return None
        return phi

    def dfs(j, images):
        if result[0] is not None:
            return
        if j == len(gens):
            phi = build(images)
            if phi is not None:
                result[0] = phi
            return
        for x in buckets.get(inv_a[gens[j]], []):
            if len(tb.closure(images + [x])) != sub_sizes[j]:
                continue
            dfs(j + 1, images + [x])

    dfs(0, [])
    return result[0]


def table_isomorphisms(ta: TableGroup, tb: TableGroup, limit: int | None = None):
    """Yield element-image lists for isomorphisms ta -> tb (all of them)."""
    if ta.size != tb.size:
        return
    n = ta.size
    if n == 1:
        yield [tb.identity]
        return
    gens = ta.generators
    words: dict[int, tuple] = {ta.identity: ()}
    frontier = [ta.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for gi, g in enumerate(gens):
                y = int(ta.table[x, g])
                if y not in words:
                    words[y] = words[x] + (gi,)
                    nxt.append(y)
        frontier = nxt
    inv_a = [(int(ta.orders[x]), int(ta.classes[ta.class_ids[x]]["size"]))
             for x in range(n)]
    inv_b = [(int(tb.orders[x]), int(tb.classes[tb.class_ids[x]]["size"]))
             for x in range(n)]
    buckets: dict[tuple, list[int]] = {}
    for x in range(n):
        buckets.setdefault(inv_b[x], []).append(x)
    sub_sizes = [len(ta.closure(gens[:j + 1])) for j in range(len(gens))]
    out: list = []

    def build(images):
        phi = [0] * n
        for x, w in words.items():
            r = tb.identity
            for gi in w:
                r = int(tb.table[r, images[gi]])
            phi[x] = r
        if len(set(phi)) != n:
            return None
        arr = np.array(phi)
        if not np.array_equal(arr[ta.table], tb.table[np.ix_(arr, arr)]):
            return None
        return phi

    def dfs(j, images):
        if limit is not None and len(out) >= limit:
            return
        if j == len(gens):
            phi = build(images)
            if phi is not None:
                out.append(phi)
            return
        for x in buckets.get(inv_a[gens[j]], []):
            if len(tb.closure(images + [x])) != sub_sizes[j]:
                continue
            dfs(j + 1, images + [x])

    dfs(0, [])
    yield from out


# -- isoclinism ---------------------------------------------------------------

@dataclass
class IsoclinismWitness:
    """Compatible isomorphisms of central quotients and derived subgroups."""
    alpha: list[int]  # element images, G/Z(G) -> H/Z(H) (quotient indices)
    beta: list[int]   # element images, [G,G] -> [H,H] (subgroup indices)


def isoclinic(G: PcPresentation, H: PcPresentation,
              bound: int = DEFAULT_ISO_BOUND) -> IsoclinismWitness | None:
    """Search for an isoclinism between G and H."""
    if G.order > bound or H.order > bound:
        raise SizeBoundError("isoclinic: order exceeds bound")
    tg = TableGroup.from_presentation(G)
    th = TableGroup.from_presentation(H)
    qg = tg.quotient(tg.center())
    qh = th.quotient(th.center())
    dg_elems = tg.derived_subgroup()
    dh_elems = th.derived_subgroup()
    if qg.size != qh.size or len(dg_elems) != len(dh_elems):
        return None
    dg = tg.subgroup(dg_elems)
    dh = th.subgroup(dh_elems)
    # quotient/subgroup element index <-> parent element lookup
    reps_g = np.unique(tg.coset_labels(tg.center()))
    reps_h = np.unique(th.coset_labels(th.center()))
    pos_dg = {int(e): i for i, e in enumerate(dg_elems)}
    pos_dh = {int(e): i for i, e in enumerate(dh_elems)}
    for alpha in table_isomorphisms(qg, qh):
        # forced beta on commutator values
        mapping: dict[int, int] = {}
        ok = True
        for u in range(qg.size):
            for v in range(qg.size):
                cg = tg.comm(int(reps_g[u]), int(reps_g[v]))
                ch = th.comm(int(reps_h[alpha[u]]), int(reps_h[alpha[v]]))
                i, j = pos_dg[cg], pos_dh[ch]
                if mapping.setdefault(i, j) != j:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        if len(set(mapping.values())) != len(mapping):
            continue
        beta = _extend_from_values(dg, dh, mapping)
        if beta is not None:
            return IsoclinismWitness(alpha=alpha, beta=beta)
    return None


def _extend_from_values(dg: TableGroup, dh: TableGroup,
                        mapping: dict[int, int]) -> list[int] | None:
    """Extend a map on generating values of dg to an isomorphism dg -> dh and
    verify it agrees with all forced values; None on failure."""
    vals = sorted(mapping)
    gens: list[int] = []
    have = np.zeros(dg.size, dtype=bool)
    have[dg.identity] = True
    for v in vals:
        if not have[v]:
            gens.append(v)
            have[dg.closure(gens)] = True
    if not have.all():
        return None  # forced values do not generate the derived subgroup
    words: dict[int, tuple] = {dg.identity: ()}
    frontier = [dg.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for gi, g in enumerate(gens):
                y = int(dg.table[x, g])
                if y not in words:
                    words[y] = words[x] + (gi,)
                    nxt.append(y)
        frontier = nxt
    phi = [0] * dg.size
    for x, w in words.items():
        r = dh.identity
        for gi in w:
            r = int(dh.table[r, mapping[gens[gi]]])
        phi[x] = r
    if len(set(phi)) != dg.size:
        return None
    arr = np.array(phi)
    if not np.array_equal(arr[dg.table], dh.table[np.ix_(arr, arr)]):
        return None
    for v, img in mapping.items():
        if phi[v] != img:
            return None
    return phi
