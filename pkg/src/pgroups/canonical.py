"""Canonical identifiers for finite p-groups.

The canonical code of a group is the lexicographically least serialized
weighted pc-presentation over all admissible minimal generating tuples, with
the layer filling of :mod:`pcbuild` determining the rest of the sequence.
Candidate tuples are pruned by isomorphism-invariant element data, and
automorphisms discovered during the search collapse equivalent branches.
Abelian groups short-circuit to their invariant factors.

Two groups receive equal codes exactly when they are isomorphic (within the
configured order bound).
"""

from __future__ import annotations

import numpy as np

from .presentation import PcPresentation
from .table import TableGroup, SizeBoundError
from .pcbuild import build_layered, _span_products, _coset_labels

CODE_VERSION = 1

# Default bound on |G| for canonical-code computations.
DEFAULT_CODE_BOUND = 5 ** 5


class CanonicalCode:
    """An integer-sequence identifier; equal codes mean isomorphic groups."""

    __slots__ = ("ints",)

    def __init__(self, ints):
        self.ints = tuple(int(x) for x in ints)

    @property
    def order(self) -> int:
        return self.ints[1] ** self.ints[2]

    def __eq__(self, other):
        return isinstance(other, CanonicalCode) and self.ints == other.ints

    def __lt__(self, other):
        return self.ints < other.ints

    def __le__(self, other):
        return self.ints <= other.ints

    def __hash__(self):
        return hash(self.ints)

    def __repr__(self):
        return f"CanonicalCode(order={self.order}, len={len(self.ints)})"

    def to_text(self) -> str:
        return " ".join([str(len(self.ints))] + [str(x) for x in self.ints])

    @classmethod
    def from_text(cls, text: str) -> "CanonicalCode":
        parts = text.split()
        if not parts:
            raise ValueError("empty canonical code")
        k = int(parts[0])
        ints = [int(x) for x in parts[1:]]
        if len(ints) != k:
            raise ValueError("canonical code length prefix mismatch")
        if not ints or ints[0] != CODE_VERSION:
            raise ValueError("unsupported canonical code version")
        return cls(ints)


def element_invariants(tg: TableGroup) -> list[tuple]:
    """Per-element isomorphism-invariant tuples used for search pruning."""
    cached = tg._cache.get("elem_inv")
    if cached is not None:
        return cached
    N = tg.size
    orders = tg.orders
    csize = np.array([tg.classes[c]["size"] for c in tg.class_ids])
    series = tg.lower_exponent_p_central_series()
    depth = np.ones(N, dtype=np.int64)
    for k, term in enumerate(series[1:], start=2):
        depth[term] = k
    pmap = np.array([tg.power(x, tg.p) for x in range(N)])
    inv = [(int(orders[x]), int(csize[x]), int(depth[x]),
            int(orders[pmap[x]]), int(csize[pmap[x]]), int(depth[pmap[x]]))
           for x in range(N)]
    tg._cache["elem_inv"] = inv
    return inv


def _presentation_flat(pres: PcPresentation) -> list[int]:
    flat: list[int] = []
    n = pres.n
    for i in range(n):
        flat.extend(pres.power[i])
    zero = (0,) * n
    for j in range(n):
        for i in range(j):
            flat.extend(pres.comm.get((j, i), zero))
    return flat


def _apply_perm_fixed(perm, prefix) -> bool:
    return all(perm[x] == x for x in prefix)


class _CanonSearch:
    def __init__(self, tg: TableGroup):
        self.tg = tg
        self.p = tg.p
        self.inv = element_invariants(tg)
        series = tg.lower_exponent_p_central_series()
        L2 = series[1] if len(series) > 1 else np.array([tg.identity])
        self.labels = _coset_labels(tg, L2)
        self.d = tg.rank()
        self.best = None  # (key tuple sequence, relation flat, layered sequence)
        self.autos: list[tuple] = []  # element permutations of discovered autos

    def _rel_key(self, x: int, prefix: list[int]) -> tuple:
        tg = self.tg
        key = list(self.inv[x])
        for y in prefix:
            key.extend(self.inv[tg.comm(x, y)])
            key.extend(self.inv[int(tg.table[x, y])])
        return tuple(key)

    def _candidates(self, prefix: list[int]):
        tg, p = self.tg, self.p
        if prefix:
            prods, _ = _span_products(tg, prefix, p)
            span = set(int(v) for v in self.labels[prods])
        else:
            span = {int(self.labels[tg.identity])}
        cands = [x for x in range(tg.size) if int(self.labels[x]) not in span]
        best_key = None
        kept = []
        for x in cands:
            k = self._rel_key(x, prefix)
            if best_key is None or k < best_key:
                best_key, kept = k, [x]
            elif k == best_key:
                kept.append(x)
        return kept, best_key

    def _auto_from(self, ls_a, ls_b) -> tuple:
        tg = self.tg
        return tuple(ls_b.element_of(ls_a.normal_form(x)) for x in range(tg.size))

    def _orbit(self, seeds, fixed_prefix) -> set:
        perms = [a for a in self.autos if _apply_perm_fixed(a, fixed_prefix)]
        seen = set(seeds)
        stack = list(seeds)
        while stack:
            x = stack.pop()
            for a in perms:
                y = a[x]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def run(self):
        self._dfs([], ())
        keys, rel, ls = self.best
        return ls, keys, rel

    def _dfs(self, prefix: list[int], keys: tuple):
        tg = self.tg
        if len(prefix) == self.d:
            ls = build_layered(tg, prefix)
            assert ls is not None
            rel = tuple(_presentation_flat(ls.presentation()))
            if self.best is None or (keys, rel) < (self.best[0], self.best[1]):
                self.best = (keys, rel, ls)
            elif (keys, rel) == (self.best[0], self.best[1]):
                # two minimal sequences: their correspondence is an automorphism
                if len(self.autos) < 40:
                    self.autos.append(self._auto_from(self.best[2], ls))
            return
        cands, key = self._candidates(prefix)
        newkeys = keys + (key,)
        if self.best is not None and newkeys > self.best[0][:len(newkeys)]:
            return
        covered: set[int] = set()
        for x in cands:
            if x in covered:
                continue
            self._dfs(prefix + [x], newkeys)
            covered |= self._orbit({x}, prefix)


def canonical_code(pres: PcPresentation, bound: int = DEFAULT_CODE_BOUND) -> CanonicalCode:
    """Canonical identifier, invariant under re-presentation."""
    if pres.order > bound:
        raise SizeBoundError(
            f"canonical_code: order {pres.order} exceeds bound {bound}")
    tg = TableGroup.from_presentation(pres)
    return canonical_code_of_table(tg, bound=bound)


def canonical_code_of_table(tg: TableGroup, bound: int = DEFAULT_CODE_BOUND) -> CanonicalCode:
    if tg.size > bound:
        raise SizeBoundError(
            f"canonical_code: order {tg.size} exceeds bound {bound}")
    cached = tg._cache.get("canonical_code")
    if cached is not None:
        return cached
    p = tg.p
    if p is None:
        raise ValueError("canonical codes are defined for p-groups")
    n = round(np.log(tg.size) / np.log(p)) if tg.size > 1 else 0
    if p ** n != tg.size:
        raise ValueError("group order is not a power of p")
    if tg.size == 1:
        code = CanonicalCode([CODE_VERSION, p, 0, 0])
    elif tg.is_abelian():
        invs = tg.abelian_invariants()
        code = CanonicalCode([CODE_VERSION, p, n, 0, len(invs)] + invs)
    else:
        search = _CanonSearch(tg)
        ls, keys, rel = search.run()
        series_dims = [len(t) for t in ls.layers]
        keyflat: list[int] = []
        for k in keys:
            keyflat.extend([len(k)] + list(k))
        code = CanonicalCode(
            [CODE_VERSION, p, n, 1, search.d, len(series_dims)] + series_dims
            + [len(keyflat)] + keyflat + list(rel))
    tg._cache["canonical_code"] = code
    return code
