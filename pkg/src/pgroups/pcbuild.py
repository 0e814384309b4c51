"""Building weighted pc-presentations from a multiplication-table group.

Given a minimal generating tuple, the remaining pc generators are filled in
layer by layer along the lower exponent-p central series: the layer-k slots are
scanned in the fixed order  s^p, [s, x_1], ..., [s, x_d]  over the weight-(k-1)
generators s, keeping each value that is independent modulo the next term.
This makes the resulting presentation a deterministic function of the group
and the chosen tuple, which is what the canonical-form search and the random
re-presentation coding both rely on.
"""

from __future__ import annotations

import numpy as np

from .presentation import PcPresentation
from .table import TableGroup


class LayeredSequence:
    """A pc generating sequence of a p-group, organized by lambda-series layers."""

    def __init__(self, tg: TableGroup, gens: list[int], weights: list[int],
                 layers: list[np.ndarray], layer_data: list[dict]):
        self.tg = tg
        self.gens = gens
        self.weights = weights
        self.layers = layers          # L_1 = G > L_2 > ... > L_{c+1} = 1
        self._layer_data = layer_data  # per layer: coset labels, coord dict, prods

    @property
    def p(self) -> int:
        return self.tg.p

    def normal_form(self, x: int) -> tuple[int, ...]:
        tg = self.tg
        exps: list[int] = []
        cur = int(x)
        for data in self._layer_data:
            v = data["coords"][int(data["labels"][cur])]
            exps.extend(v)
            if any(v):
                rep = data["prods"][data["enc"](v)]
                cur = int(tg.table[tg.inverse[rep], cur])
        if cur != tg.identity:
            raise AssertionError("normal form did not terminate at the identity")
        return tuple(exps)

    def element_of(self, exps) -> int:
        tg = self.tg
        r = tg.identity
        for g, e in zip(self.gens, exps):
            for _ in range(e):
                r = int(tg.table[r, g])
        return r

    def presentation(self) -> PcPresentation:
        tg, p = self.tg, self.p
        n = len(self.gens)
        powers = {}
        comms = {}
        for i, g in enumerate(self.gens):
            w = self.normal_form(tg.power(g, p))
            if any(w):
                powers[i] = w
        for j in range(n):
            for i in range(j):
                w = self.normal_form(tg.comm(self.gens[j], self.gens[i]))
                if any(w):
                    comms[(j, i)] = w
        return PcPresentation(p, n, powers, comms)


def _span_products(tg: TableGroup, gens: list[int], p: int):
    """All products g_1^{v_1}...g_d^{v_d}; returns (prods array, enc function)."""
    d = len(gens)
    radix = [p ** (d - 1 - i) for i in range(d)]

    def enc(v):
        return sum(e * r for e, r in zip(v, radix))

    total = p ** d
    prods = np.empty(total, dtype=np.int64)
    prods[0] = tg.identity
    for m in range(1, total):
        rest = m
        j = d - 1
        # last nonzero digit position
        for i in range(d - 1, -1, -1):
            if (m // radix[i]) % p:
                j = i
                break
        prods[m] = tg.table[prods[m - radix[j]], gens[j]]
    return prods, enc


def _coset_labels(tg: TableGroup, sub_elems: np.ndarray) -> np.ndarray:
    return tg.table[np.asarray(sub_elems), :].min(axis=0)


def build_layered(tg: TableGroup, first_tuple) -> LayeredSequence | None:
    """Layered pc sequence from a minimal generating tuple, or None if the
    tuple is not independent modulo the Frattini quotient."""
    p = tg.p
    if p is None:
        raise ValueError("layered sequences require a p-group")
    series = tg.lower_exponent_p_central_series()
    if len(series[-1]) != 1:
        raise ValueError("lower exponent-p central series must reach the identity")
    layers = series
    first_tuple = [int(x) for x in first_tuple]

    gens: list[int] = []
    weights: list[int] = []
    layer_data: list[dict] = []
    c = len(layers) - 1  # number of proper layers
    prev_layer_gens: list[int] = []
    for k in range(1, c + 1):
        nxt = layers[k] if k < len(layers) else np.array([tg.identity])
        labels = _coset_labels(tg, nxt)
        if k == 1:
            candidates = list(first_tuple)
            required = True
        else:
            candidates = []
            for s in prev_layer_gens:
                candidates.append(tg.power(s, p))
                for x in first_tuple:
                    candidates.append(tg.comm(s, x))
            required = False
        lgens: list[int] = []
        seen = {int(labels[tg.identity])}
        for cand in candidates:
            lab = int(labels[cand])
            if lab in seen:
                if required:
                    return None
                continue
            lgens.append(int(cand))
            prods, enc = _span_products(tg, lgens, p)
            labs = labels[prods]
            if len(set(int(x) for x in labs)) != len(prods):
                if required:
                    return None
                lgens.pop()
                continue
            seen = set(int(x) for x in labs)
        # the span of the chosen layer generators must be the whole layer section
        want = len(layers[k - 1]) // len(nxt)
        if p ** len(lgens) != want:
            if required:
                return None
            raise AssertionError("layer filling failed to span a lambda-series section")
        if lgens:
            prods, enc = _span_products(tg, lgens, p)
            labs = labels[prods]
            coords = {}
            d = len(lgens)
            radix = [p ** (d - 1 - i) for i in range(d)]
            for m, lab in enumerate(labs):
                v = tuple((m // r) % p for r in radix)
                coords[int(lab)] = v
            layer_data.append({"labels": labels, "coords": coords,
                               "prods": prods, "enc": enc})
            gens.extend(lgens)
            weights.extend([k] * len(lgens))
        prev_layer_gens = lgens
    return LayeredSequence(tg, gens, weights, layers, layer_data)


def minimal_tuple(tg: TableGroup) -> list[int]:
    """A deterministic minimal generating tuple (smallest element indices)."""
    p = tg.p
    series = tg.lower_exponent_p_central_series()
    L2 = series[1] if len(series) > 1 else np.array([tg.identity])
    labels = _coset_labels(tg, L2)
    chosen: list[int] = []
    seen = {int(labels[tg.identity])}
    for x in range(tg.size):
        if int(labels[x]) in seen:
            continue
        chosen.append(x)
        prods, _ = _span_products(tg, chosen, p)
        labs = set(int(v) for v in labels[prods])
        if len(labs) != len(prods):
            chosen.pop()
            continue
        seen = labs
        if len(seen) * len(L2) == tg.size:
            break
    return chosen


def pc_presentation_of(tg: TableGroup) -> PcPresentation:
    """A deterministic pc-presentation of a p-group given by its table."""
    if tg.size == 1:
        return PcPresentation(tg.p if tg.p else 2, 0)
    ls = build_layered(tg, minimal_tuple(tg))
    assert ls is not None
    return ls.presentation()


def random_tuple(tg: TableGroup, rng) -> list[int]:
    """Uniformly random minimal generating tuple, by rejection sampling."""
    d = tg.rank()
    while True:
        cand = [int(rng.randrange(tg.size)) for _ in range(d)]
        if build_layered(tg, cand) is not None:
            return cand


def random_presentation(pres: PcPresentation, rng) -> PcPresentation:
    """A re-presentation of the same group on a random generating sequence."""
    tg = TableGroup.from_presentation(pres)
    if tg.size == 1:
        return PcPresentation(pres.p, 0)
    ls = build_layered(tg, random_tuple(tg, rng))
    return ls.presentation()


def quotient_presentation(tg: TableGroup, normal_elems) -> PcPresentation:
    return pc_presentation_of(tg.quotient(normal_elems))


def subgroup_presentation(tg: TableGroup, elems) -> PcPresentation:
    return pc_presentation_of(tg.subgroup(elems))
