"""Complete isomorphism-class catalogs of small p-groups, plus the explicit
order-p^4 and order-p^5 presentation families used throughout the test suite.

Enumeration is staged: every group of order p^n is a central extension of a
group of order p^{n-1} by C_p, so candidates are generated by adding a central
generator to each catalog entry of the previous order with all consistent
relation tails.  Consistency of a tail assignment is a linear condition over
F_p obtained from traced collection of the overlap identities; lift changes
(coboundaries) and relation-preserving generator permutations of the base cut
the candidate set before the final reduction by canonical code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .presentation import (PcPresentation, PresentationError, _overlaps,
                           format_presentation, parse_presentation,
                           check_consistency)
from .canonical import CanonicalCode, canonical_code
from .isomorphism import is_isomorphic
from .chartab import _rref, _nullspace


class CatalogError(ValueError):
    """Malformed, inconsistent, or tampered catalog data."""


@dataclass
class CatalogEntry:
    order: int
    index: int                 # 1-based, ascending canonical code
    presentation: PcPresentation
    code: CanonicalCode


class Catalog:
    """Entries of one or more complete orders, with code lookup."""

    def __init__(self, entries: list[CatalogEntry]):
        self.entries = list(entries)
        self._by_code = {e.code: (e.order, e.index) for e in self.entries}
        self._by_id = {(e.order, e.index): e for e in self.entries}

    def lookup(self, code: CanonicalCode):
        return self._by_code.get(code)

    def entry(self, order: int, index: int) -> CatalogEntry:
        return self._by_id[(order, index)]

    def of_order(self, order: int) -> list[CatalogEntry]:
        return [e for e in self.entries if e.order == order]

    def merged_with(self, other: "Catalog") -> "Catalog":
        return Catalog(self.entries + other.entries)


# -- paper presentation families ----------------------------------------------

def primitive_root(p: int) -> int:
    """Smallest positive primitive root modulo a prime p."""
    from sympy import isprime
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    for v in range(2, p):
        seen = set()
        x = 1
        for _ in range(p - 1):
            x = x * v % p
            seen.add(x)
        if len(seen) == p - 1:
            return v
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class FamilySpec:
    family: str       # theorem1_Gx | tuple1 | tuple2 | tuple3
    p: int
    parameter: int    # x or w


def family_parameters(family: str, p: int) -> list[int]:
    """The legal parameter values for a presentation family at the prime p."""
    from math import gcd
    v = primitive_root(p)
    if family == "theorem1_Gx":
        return [1, v]
    if family == "tuple1":
        return [1, v]
    if family == "tuple2":
        b = gcd(p - 1, 4)
        return [pow(v, e, p) for e in range(1, b + 1)]
    if family == "tuple3":
        a = gcd(p - 1, 3)
        return [pow(v, e, p) for e in range(1, a + 1)]
    raise ValueError(f"unknown family {family!r}")


def paper_family(spec: FamilySpec) -> PcPresentation:
    """The explicit rank-2 presentation families of order p^4 and p^5."""
    p, w = spec.p, spec.parameter
    if p <= 3:
        raise ValueError("presentation families require p > 3")
    if w % p != w or w not in family_parameters(spec.family, p):
        raise ValueError(
            f"parameter {w} not legal for {spec.family} at p={p}")
    if spec.family == "theorem1_Gx":
        pres = PcPresentation(
            p, 4,
            {1: (0, 0, 0, w)},
            {(1, 0): (0, 0, 1, 0), (2, 0): (0, 0, 0, 1)})
    elif spec.family == "tuple1":
        pres = PcPresentation(
            p, 5,
            {0: (0, 0, 0, 0, w)},
            {(1, 0): (0, 0, 1, 0, 0), (3, 0): (0, 0, 0, 0, 1),
             (2, 1): (0, 0, 0, 0, 1)})
    elif spec.family == "tuple2":
        pres = PcPresentation(
            p, 5,
            {0: (0, 0, 0, 0, w)},
            {(1, 0): (0, 0, 1, 0, 0), (2, 0): (0, 0, 0, 1, 0),
             (3, 0): (0, 0, 0, 0, 1), (2, 1): (0, 0, 0, 0, 1)})
    else:  # tuple3
        pres = PcPresentation(
            p, 5,
            {0: (0, 0, 0, 0, w)},
            {(1, 0): (0, 0, 1, 0, 0), (2, 0): (0, 0, 0, 0, 1),
             (2, 1): (0, 0, 0, 1, 0), (3, 1): (0, 0, 0, 0, 1)})
    if not check_consistency(pres):
        raise AssertionError(f"inconsistent family presentation {spec}")
    return pres


# -- central extension enumeration --------------------------------------------

def _tail_vars(nb: int):
    """Variable index map for power tails and commutator tails of a base with
    nb generators."""
    var = {}
    for i in range(nb):
        var[("pow", i)] = i
    k = nb
    for j in range(nb):
        for i in range(j):
            var[("comm", j, i)] = k
            k += 1
    return var, k


def _consistency_rows(base: PcPresentation, var, nv: int) -> np.ndarray:
    rows = []
    for (lhs, trl), (rhs, trr) in _overlaps(base, trace_factory=dict):
        if lhs != rhs:
            raise PresentationError("base presentation is inconsistent")
        row = np.zeros(nv, dtype=np.int64)
        for rel, cnt in trl.items():
            row[var[rel]] += cnt
        for rel, cnt in trr.items():
            row[var[rel]] -= cnt
        row %= base.p
        if row.any():
            rows.append(row)
    if not rows:
        return np.zeros((0, nv), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def _coboundary_rows(base: PcPresentation, var, nv: int) -> np.ndarray:
    """Tail shifts induced by changing the lift of each base generator."""
    nb, p = base.n, base.p
    rows = np.zeros((nb, nv), dtype=np.int64)
    for k in range(nb):
        for i in range(nb):
            rows[k, var[("pow", i)]] = (-base.power[i][k]) % p
        for (j, i), w in base.comm.items():
            rows[k, var[("comm", j, i)]] = (-w[k]) % p
    return rows


def _presentation_perms(base: PcPresentation) -> list[tuple]:
    """Permutations of the base generators that map the presentation to
    itself (commutators may flip orientation, inverting the relation word)."""
    nb, p = base.n, base.p
    if nb == 0:
        return [()]
    zero = (0,) * nb
    perms = []
    for perm in itertools.permutations(range(nb)):
        ok = True
        for i in range(nb):
            w = base.power[i]
            pw = _permute_word(base, w, perm)
            if pw != base.power[perm[i]]:
                ok = False
                break
        if ok:
            for j in range(nb):
                for i in range(j):
                    w = base.comm.get((j, i), zero)
                    pw = _permute_word(base, w, perm)
                    a, b = perm[j], perm[i]
                    if a > b:
                        want = base.comm.get((a, b), zero)
                    else:
                        want = base.inv(base.comm.get((b, a), zero))
                    if pw != want:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            perms.append(perm)
    return perms


def _permute_word(base: PcPresentation, w, perm):
    """Image of a normal-form word under a generator permutation, recollected."""
    if not any(w):
        return tuple(w)
    letters = [(perm[k], e) for k, e in enumerate(w) if e]
    letters.sort()
    return base.collect(letters)


def _transform_tail(base, tail, var, perm, unit):
    """Action of (generator permutation, kernel scaling) on a tail vector."""
    p, nb = base.p, base.n
    out = [0] * len(tail)
    for i in range(nb):
        out[var[("pow", perm[i])]] = tail[var[("pow", i)]] * unit % p
    for j in range(nb):
        for i in range(j):
            a, b = perm[j], perm[i]
            t = tail[var[("comm", j, i)]] * unit % p
            if a > b:
                out[var[("comm", a, b)]] = t
            else:
                out[var[("comm", b, a)]] = (-t) % p
    return tuple(out)


def _gl_generators(k: int, p: int) -> list[np.ndarray]:
    """Generating matrices of GL(k, p)."""
    gens = []
    eye = np.eye(k, dtype=np.int64)
    if k >= 2:
        cyc = np.zeros((k, k), dtype=np.int64)
        for i in range(k):
            cyc[i, (i + 1) % k] = 1
        gens.append(cyc)
        swap = eye.copy()
        swap[[0, 1]] = swap[[1, 0]]
        gens.append(swap)
        tv = eye.copy()
        tv[0, 1] = 1
        gens.append(tv)
    if p > 2:
        dg = eye.copy()
        dg[0, 0] = primitive_root(p)
        gens.append(dg)
    if not gens:
        gens.append(eye)
    return gens


def _linear_tail_map(M: np.ndarray, p: int, k: int, var, nv: int) -> np.ndarray:
    """Matrix of the tail-space action of a base automorphism M of an
    elementary abelian base: power tails transform by M (with a commutator
    correction when p = 2, from (xy)^2 = x^2 y^2 [y,x]), commutator tails by
    the induced map on alternating forms."""
    L = np.zeros((nv, nv), dtype=np.int64)
    for i in range(k):
        r = var[("pow", i)]
        for l in range(k):
            L[r, var[("pow", l)]] = M[i, l]
        if p == 2:
            for m in range(k):
                for l in range(m):
                    L[r, var[("comm", m, l)]] += M[i, m] * M[i, l]
    for j in range(k):
        for i in range(j):
            r = var[("comm", j, i)]
            for m in range(k):
                for l in range(m):
                    L[r, var[("comm", m, l)]] += \
                        M[j, m] * M[i, l] - M[j, l] * M[i, m]
    return L % p


def _elementary_orbit_reps(p: int, k: int):
    """Orbit representatives of the full tail space of the elementary abelian
    base C_p^k under GL(k, p) x kernel scaling, as tail tuples."""
    var, nv = _tail_vars(k)
    total = p ** nv
    radix = p ** np.arange(nv, dtype=np.int64)
    enc_all = np.arange(total, dtype=np.int64)
    digits = (enc_all[:, None] // radix[None, :]) % p
    maps = [_linear_tail_map(M, p, k, var, nv) for M in _gl_generators(k, p)]
    if p > 2:
        maps.append((primitive_root(p) * np.eye(nv, dtype=np.int64)) % p)
    images = [((digits @ L.T) % p) @ radix for L in maps]
    seen = np.zeros(total, dtype=bool)
    reps = []
    for e in range(total):
        if seen[e]:
            continue
        reps.append(tuple(int(x) for x in digits[e]))
        stack = [e]
        seen[e] = True
        while stack:
            x = stack.pop()
            for img in images:
                y = int(img[x])
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
    return reps


def _is_elementary_abelian(base: PcPresentation) -> bool:
    return not base.comm and not any(any(w) for w in base.power)


def _check_automorphism(base: PcPresentation, images) -> bool:
    """Do the generator images define an automorphism of the base?"""
    p, nb = base.p, base.n
    zero = (0,) * nb

    def ev(w):
        r = base.identity
        for k in range(nb):
            for _ in range(w[k]):
                r = base.mul(r, images[k])
        return r

    for i in range(nb):
        if base.pow(images[i], p) != ev(base.power[i]):
            return False
    for j in range(nb):
        for i in range(j):
            if base.commutator(images[j], images[i]) != \
                    ev(base.comm.get((j, i), zero)):
                return False
    # surjectivity: the images generate
    span = {base.identity}
    frontier = [base.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in images:
                y = base.mul(x, g)
                if y not in span:
                    span.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(span) == base.order


def _base_automorphism_images(base: PcPresentation):
    """Generator images of Aut(base) for the order-p^3 base shapes arising in
    odd-p enumeration, or None when the shape is not recognized.  The returned
    maps are verified automorphisms; an incomplete generating set only costs
    reduction strength, never correctness."""
    p, nb = base.p, base.n
    if p == 2 or nb != 3:
        return None
    from sympy import primitive_root as sympy_primitive_root
    g1, g2, g3 = (base.generator(i) for i in range(3))
    pw = tuple(1 if any(w) else 0 for w in base.power)
    has_comm = bool(base.comm)
    cands: list[list] = []
    if pw == (1, 1, 0) and not has_comm:
        # cyclic C_{p^3}: one generator of the unit group
        r = int(sympy_primitive_root(p ** 3))
        a1 = base.pow(g1, r)
        cands.append([a1, base.pow(a1, p), base.pow(a1, p * p)])
    elif pw == (1, 0, 0) and not has_comm:
        # C_{p^2} x C_p, generated by g1 and g3
        r = int(sympy_primitive_root(p ** 2))
        v = primitive_root(p)
        for a1, a3 in [(base.pow(g1, r), g3),
                       (g1, base.pow(g3, v)),
                       (base.mul(g1, g3), g3),
                       (g1, base.mul(g3, g2))]:
            cands.append([a1, base.pow(a1, p), a3])
    elif pw == (0, 0, 0) and base.comm.get((1, 0)) == g3:
        # Heisenberg group of exponent p: GL(2, p) on (g1, g2) plus a
        # central translation
        v = primitive_root(p)
        for a1, a2 in [(base.pow(g1, v), g2),
                       (base.mul(g1, g2), g2),
                       (g2, g1),
                       (base.mul(g1, g3), g2)]:
            cands.append([a1, a2, base.commutator(a2, a1)])
    elif pw == (0, 1, 0) and base.power[1] == g3 and \
            base.comm.get((1, 0)) == g3:
        # extraspecial of exponent p^2: g2^p = [g2, g1] = g3
        r = int(sympy_primitive_root(p ** 2))
        for a1, a2 in [(g1, base.pow(g2, r)),
                       (base.mul(g1, g3), g2),
                       (g1, base.mul(g2, g1))]:
            cands.append([a1, a2, base.pow(a2, p)])
    else:
        return None
    out = [imgs for imgs in cands if _check_automorphism(base, imgs)]
    return out or None


def _tail_action(base: PcPresentation, var, nv: int, images, tail):
    """Tail vector of the extension pulled back along a base automorphism."""
    p, nb = base.p, base.n
    ext = _extensions_from_tails(base, var, [tail])[0]
    lifts = [tuple(img) + (0,) for img in images]

    def ev(w):
        r = ext.identity
        for k in range(nb):
            for _ in range(w[k]):
                r = ext.mul(r, lifts[k])
        return r

    out = [0] * nv
    zero = (0,) * nb
    for i in range(nb):
        u = ext.pow(lifts[i], p)
        ph = ev(base.power[i])
        assert u[:-1] == ph[:-1]
        out[var[("pow", i)]] = (u[-1] - ph[-1]) % p
    for j in range(nb):
        for i in range(j):
            u = ext.commutator(lifts[j], lifts[i])
            ph = ev(base.comm.get((j, i), zero))
            assert u[:-1] == ph[:-1]
            out[var[("comm", j, i)]] = (u[-1] - ph[-1]) % p
    return tuple(out)


def _tail_affine_map(base: PcPresentation, var, nv: int, images):
    """The (matrix, shift) form of the tail action of one base automorphism."""
    p = base.p
    zero = (0,) * nv
    c = np.array(_tail_action(base, var, nv, images, zero), dtype=np.int64)
    L = np.zeros((nv, nv), dtype=np.int64)
    for k in range(nv):
        e = list(zero)
        e[k] = 1
        L[:, k] = (np.array(_tail_action(base, var, nv, images, tuple(e)),
                            dtype=np.int64) - c) % p
    return L, c


def central_extensions(base: PcPresentation) -> list[PcPresentation]:
    """Candidate presentations of order p^{n+1} extending the base by a
    central C_p, one representative per (coboundary x base-automorphism x
    kernel-scaling) orbit of consistent tails.  Orbit reduction uses the full
    linear group for elementary abelian bases and presentation-preserving
    generator permutations otherwise."""
    p, nb = base.p, base.n
    if nb == 0:
        return [PcPresentation(p, 1)]
    var, nv = _tail_vars(nb)
    if _is_elementary_abelian(base):
        reps = _elementary_orbit_reps(p, nb)
        return _extensions_from_tails(base, var, reps)
    rows = _consistency_rows(base, var, nv)
    zbasis = _nullspace(rows, p) if rows.shape[0] else \
        np.eye(nv, dtype=np.int64)
    cob = _coboundary_rows(base, var, nv)
    # complement of the coboundary space inside the solution space
    eche, _ = _rref(cob, p)
    comp = []
    work = [r for r in eche]
    for t in range(zbasis.shape[1]):
        v = zbasis[:, t] % p
        red = _reduce_row(v, work, p)
        if red.any():
            comp.append(red.copy())
            work.append(red)
    tails = []
    for lams in itertools.product(range(p), repeat=len(comp)):
        tail = np.zeros(nv, dtype=np.int64)
        for lam, c in zip(lams, comp):
            tail += lam * c
        tails.append(tuple(int(x) for x in tail % p))

    autos = _base_automorphism_images(base)
    if autos is not None:
        maps = [_tail_affine_map(base, var, nv, images) for images in autos]
        eye = np.eye(nv, dtype=np.int64)
        zshift = np.zeros(nv, dtype=np.int64)
        for u in range(2, p):
            maps.append((u * eye % p, zshift))

        def canon(t):
            return tuple(int(x) for x in _reduce_row(
                np.array(t, dtype=np.int64), list(eche), p))

        states = {canon(t): t for t in tails}
        seen_states: set[tuple] = set()
        reps = []
        for key in sorted(states):
            if key in seen_states:
                continue
            reps.append(states[key])
            stack = [key]
            seen_states.add(key)
            while stack:
                s = np.array(stack.pop(), dtype=np.int64)
                for L, c in maps:
                    img = canon((L @ s + c) % p)
                    if img not in seen_states:
                        assert img in states
                        seen_states.add(img)
                        stack.append(img)
        return _extensions_from_tails(base, var, reps)

    perms = _presentation_perms(base)
    units = list(range(1, p))
    seen: set[tuple] = set()
    reps = []
    for tail in tails:
        if tail in seen:
            continue
        orbit = set()
        for perm in perms:
            for u in units:
                orbit.add(_transform_tail(base, tail, var, perm, u))
        seen.update(orbit)
        reps.append(min(orbit))
    return _extensions_from_tails(base, var, reps)


def _extensions_from_tails(base: PcPresentation, var, tails) -> list[PcPresentation]:
    p, nb = base.p, base.n
    out = []
    zero_base = (0,) * nb
    for tail in tails:
        powers = {}
        for i in range(nb):
            w = base.power[i] + (tail[var[("pow", i)]],)
            if any(w):
                powers[i] = w
        comms = {}
        for j in range(nb):
            for i in range(j):
                w = base.comm.get((j, i), zero_base) + \
                    (tail[var[("comm", j, i)]],)
                if any(w):
                    comms[(j, i)] = w
        out.append(PcPresentation(p, nb + 1, powers, comms))
    return out


def _reduce_row(v: np.ndarray, rows: list[np.ndarray], p: int) -> np.ndarray:
    v = v % p
    for r in rows:
        nz = np.flatnonzero(r)
        if len(nz) == 0:
            continue
        lead = int(nz[0])
        if v[lead]:
            f = v[lead] * pow(int(r[lead]), -1, p) % p
            v = (v - f * r) % p
    return v


def feasible(p: int, n: int, allow_long: bool = False) -> bool:
    if n < 0:
        return False
    if p == 2:
        return n <= (7 if allow_long else 6)
    return n <= 4 and p ** n <= 5 ** 5


def enumerate_groups(p: int, n: int, allow_long: bool = False,
                     progress=None) -> list[CatalogEntry]:
    """All groups of order p^n up to isomorphism, sorted by canonical code."""
    from sympy import isprime
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if not feasible(p, n, allow_long):
        raise SizeError(f"enumeration of order {p}^{n} is out of bounds")
    if n == 0:
        pres = PcPresentation(p, 0)
        return [CatalogEntry(order=1, index=1, presentation=pres,
                             code=canonical_code(pres))]
    bases = enumerate_groups(p, n - 1, allow_long=allow_long,
                             progress=progress)
    # Dedupe candidates by cheap structural invariants plus explicit
    # isomorphism tests; canonical codes are computed once per survivor.
    found: dict[CanonicalCode, PcPresentation] = {}
    if p == 2:
        # canonical codes are cheap for 2-groups of these orders; key on them
        for b in bases:
            for cand in central_extensions(b.presentation):
                code = canonical_code(cand)
                if code not in found:
                    found[code] = cand
            if progress is not None:
                progress(f"order {p}^{n}: base {b.index}/{len(bases)} done, "
                         f"{len(found)} groups so far")
    else:
        buckets: dict[tuple, list[PcPresentation]] = {}
        nreps = 0
        for b in bases:
            for cand in central_extensions(b.presentation):
                fp = _quick_fingerprint(cand)
                lst = buckets.setdefault(fp, [])
                if all(not _same_type(cand, rep) for rep in lst):
                    lst.append(cand)
                    nreps += 1
            if progress is not None:
                progress(f"order {p}^{n}: base {b.index}/{len(bases)} done, "
                         f"{nreps} groups so far")
        for lst in buckets.values():
            for rep in lst:
                code = canonical_code(rep)
                if code in found:
                    raise AssertionError(
                        "isomorphic representatives escaped bucket dedupe")
                found[code] = rep
    entries = []
    for idx, code in enumerate(sorted(found), start=1):
        entries.append(CatalogEntry(order=p ** n, index=idx,
                                    presentation=found[code], code=code))
    return entries


def _same_type(a: PcPresentation, b: PcPresentation) -> bool:
    """Isomorphism test for enumeration dedupe: a cheap bounded search with a
    canonical-code fallback for the rare hard instances."""
    from .isomorphism import BudgetExceeded
    from .structure import table_of
    from .canonical import canonical_code_of_table
    try:
        return is_isomorphic(a, b, budget=2_000) is not None
    except BudgetExceeded:
        return canonical_code_of_table(table_of(a)) == \
            canonical_code_of_table(table_of(b))


def _quick_fingerprint(pres: PcPresentation) -> tuple:
    """Cheap isomorphism-invariant bucket key for enumeration dedupe."""
    from collections import Counter
    from .structure import table_of
    tg = table_of(pres)
    orders = tuple(sorted(Counter(tg.orders.tolist()).items()))
    csizes = tuple(sorted(Counter(int(c["size"]) for c in tg.classes).items()))
    return (orders, csizes, len(tg.center()), len(tg.derived_subgroup()),
            tuple(tg.abelian_invariants()))


class SizeError(ValueError):
    """Requested computation exceeds the configured feasibility bounds."""


# -- persistence --------------------------------------------------------------

def save_catalog(entries: list[CatalogEntry], path: str) -> None:
    if entries:
        p = entries[0].presentation.p
        order = entries[0].order
        n = entries[0].presentation.n
    else:
        p = n = order = 0
    lines = [f"pgf-catalog v1 {p} {n} {len(entries)}"]
    for e in entries:
        if e.order != order:
            raise CatalogError("save_catalog expects entries of a single order")
        lines.append(f"{e.index}\t{e.code.to_text()}\t"
                     f"{format_presentation(e.presentation)}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_catalog(path: str) -> list[CatalogEntry]:
    with open(path) as fh:
        lines = [ln.rstrip("\n") for ln in fh if ln.strip()]
    if not lines:
        return []
    head = lines[0].split()
    if len(head) != 5 or head[0] != "pgf-catalog" or head[1] != "v1":
        raise CatalogError(f"bad catalog header {lines[0]!r}")
    p, n, count = int(head[2]), int(head[3]), int(head[4])
    if len(lines) - 1 != count:
        raise CatalogError(f"catalog declares {count} entries, has {len(lines) - 1}")
    entries = []
    prev_code = None
    for pos, ln in enumerate(lines[1:], start=1):
        parts = ln.split("\t")
        if len(parts) != 3:
            raise CatalogError(f"malformed catalog record {ln!r}")
        idx = int(parts[0])
        if idx != pos:
            raise CatalogError(f"catalog index {idx} out of order at line {pos + 1}")
        code = CanonicalCode.from_text(parts[1])
        pres = parse_presentation(parts[2])
        if pres.p != p or pres.n != n:
            raise CatalogError(f"entry {idx} does not match catalog order")
        if not check_consistency(pres):
            raise CatalogError(f"entry {idx} presentation is inconsistent")
        if prev_code is not None and not prev_code < code:
            raise CatalogError(f"catalog codes not ascending at entry {idx}")
        prev_code = code
        entries.append(CatalogEntry(order=p ** n, index=idx,
                                    presentation=pres, code=code))
    return entries
