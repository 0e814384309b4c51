"""Exact character tables of p-groups by the Dixon-Burnside method, with
power maps, character-table equivalence, Brauer-pair testing, and twin
detection.

The class-algebra structure-constant matrices are simultaneously
diagonalized over a prime field F_l with l = 1 (mod exponent) and
l > 2*sqrt(|G|); eigenvalue data is lifted to exact cyclotomic values via
discrete Fourier inversion at a fixed primitive root of unity mod l.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .presentation import PcPresentation
from .table import TableGroup, SizeBoundError
from .structure import table_of
from .cyclotomic import Cyc

DEFAULT_CLASS_BOUND = 200


@dataclass
class CharacterTable:
    order: int
    exponent: int
    class_sizes: tuple
    class_orders: tuple
    class_reps: tuple          # element indices in the group's table
    irreducibles: tuple        # rows of Cyc values, one per irreducible
    power_classes: tuple       # power_classes[i][t] = class of rep_i^t, t < exponent

    @property
    def n_classes(self) -> int:
        return len(self.class_sizes)

    @property
    def degrees(self) -> tuple:
        return tuple(row[0].to_int() for row in self.irreducibles)

    def power_map(self, n: int) -> tuple:
        """The map class -> class induced by g -> g^n."""
        return tuple(self.power_classes[i][n % self.exponent]
                     for i in range(self.n_classes))


@dataclass
class ClassMatching:
    tau: tuple  # tau[i] = index of the matching class of H


# -- modular linear algebra ---------------------------------------------------

def _rref(A: np.ndarray, l: int):
    """Row-reduced echelon form mod l; returns (R, pivot column list)."""
    R = A.copy() % l
    rows, cols = R.shape
    piv = []
    rr = 0
    for c in range(cols):
        sel = None
        for r in range(rr, rows):
            if R[r, c] % l:
                sel = r
                break
        if sel is None:
            continue
        R[[rr, sel]] = R[[sel, rr]]
        R[rr] = (R[rr] * pow(int(R[rr, c]), -1, l)) % l
        for r in range(rows):
            if r != rr and R[r, c]:
                R[r] = (R[r] - R[r, c] * R[rr]) % l
        piv.append(c)
        rr += 1
        if rr == rows:
            break
    return R[:rr], piv


def _nullspace(A: np.ndarray, l: int) -> np.ndarray:
    """Columns spanning the kernel of A mod l."""
    R, piv = _rref(A, l)
    cols = A.shape[1]
    free = [c for c in range(cols) if c not in piv]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for r, pc in enumerate(piv):
            basis[pc, k] = (-R[r, fc]) % l
    return basis


def _echelon_columns(W: np.ndarray, l: int):
    """Column-echelonized copy of W (pivot rows carry an identity block)."""
    R, piv = _rref(W.T % l, l)
    return R.T, piv


def _min_poly_of_vector(B: np.ndarray, v: np.ndarray, l: int) -> list[int]:
    """Monic minimal polynomial coefficients (low to high) of v under B."""
    s = B.shape[0]
    # echelon basis of the Krylov space with tracked combinations
    pivots: list[tuple[int, np.ndarray, np.ndarray]] = []
    w = v % l
    comb = np.zeros(s + 1, dtype=np.int64)
    comb[0] = 1
    j = 0
    while True:
        red = w.copy()
        rc = comb.copy()
        for pr, pv, pcomb in pivots:
            f = red[pr] % l
            if f:
                red = (red - f * pv) % l
                rc = (rc - f * pcomb) % l
        nz = np.flatnonzero(red)
        if len(nz) == 0:
            # rc encodes the dependency: sum rc[t] B^t v = 0
            deg = j
            lead = pow(int(rc[deg]), -1, l)
            return [int(c * lead % l) for c in rc[:deg + 1]]
        pr = int(nz[0])
        inv = pow(int(red[pr]), -1, l)
        pivots.append((pr, (red * inv) % l, (rc * inv) % l))
        w = (B @ w) % l
        j += 1
        comb = np.zeros(s + 1, dtype=np.int64)
        comb[j] = 1


def _poly_roots(coeffs: list[int], l: int) -> list[int]:
    """All roots in F_l, by direct evaluation (the polynomials here split)."""
    xs = np.arange(l, dtype=np.int64)
    vals = np.zeros(l, dtype=np.int64)
    for c in reversed(coeffs):
        vals = (vals * xs + c) % l
    return sorted(int(x) for x in np.flatnonzero(vals == 0))


def _eigen_split(B: np.ndarray, l: int) -> list[np.ndarray]:
    """Bases of the eigenspaces of a diagonalizable matrix over F_l."""
    s = B.shape[0]
    roots: set[int] = set()
    spaces: dict[int, np.ndarray] = {}
    total = 0
    for start in range(s):
        v = np.zeros(s, dtype=np.int64)
        v[start] = 1
        for lam in _poly_roots(_min_poly_of_vector(B, v, l), l):
            if lam in roots:
                continue
            roots.add(lam)
            A = (B - lam * np.eye(s, dtype=np.int64)) % l
            ker = _nullspace(A, l)
            if ker.shape[1]:
                spaces[lam] = ker
                total += ker.shape[1]
        if total == s:
            break
    assert total == s, "matrix not diagonalizable over F_l"
    return [spaces[lam] for lam in sorted(spaces)]


# -- Dixon-Burnside -----------------------------------------------------------

def _choose_modulus(order: int, exponent: int) -> int:
    from sympy import isprime
    l = exponent + 1
    bound = 2 * int(np.ceil(np.sqrt(order)))
    while True:
        if l > bound and isprime(l):
            return l
        l += exponent


def _primitive_root_mod(l: int) -> int:
    from sympy import primitive_root
    return int(primitive_root(l))


def _class_matrices(tg: TableGroup) -> list[np.ndarray]:
    """M_i[j, k] = #{(x, y) in C_i x C_j : x y = z_k} for a fixed z_k."""
    r = len(tg.classes)
    cid = tg.class_ids
    sizes = np.array([c["size"] for c in tg.classes], dtype=np.int64)
    cid_all = cid  # class of every element y
    mats = []
    for i in range(r):
        count = np.zeros(r * r, dtype=np.int64)
        for x in tg.classes[i]["members"]:
            prod_cls = cid[tg.table[int(x), :]]
            np.add.at(count, cid_all * r + prod_cls, 1)
        count = count.reshape(r, r)
        mats.append(count // sizes[np.newaxis, :])
    return mats


def character_table(G: PcPresentation,
                    class_bound: int = DEFAULT_CLASS_BOUND) -> CharacterTable:
    tg = table_of(G)
    return character_table_of(tg, class_bound=class_bound)


def character_table_of(tg: TableGroup,
                       class_bound: int = DEFAULT_CLASS_BOUND) -> CharacterTable:
    cached = tg._cache.get("character_table")
    if cached is not None:
        return cached
    r = len(tg.classes)
    if r > class_bound:
        raise SizeBoundError(
            f"character table: {r} classes exceed bound {class_bound}")
    N = tg.size
    m = tg.exponent
    reps = [int(c["representative"]) for c in tg.classes]
    sizes = [int(c["size"]) for c in tg.classes]
    orders = [int(c["order"]) for c in tg.classes]
    cid = tg.class_ids
    # class of rep_i^t for all t < m
    power_classes = []
    for g in reps:
        row = []
        cur = tg.identity
        for _t in range(m):
            row.append(int(cid[cur]))
            cur = int(tg.table[cur, g])
        power_classes.append(tuple(row))
    if N == 1:
        table = CharacterTable(order=1, exponent=1, class_sizes=(1,),
                               class_orders=(1,), class_reps=(0,),
                               irreducibles=((Cyc.integer(1, 1),),),
                               power_classes=((0,),))
        tg._cache["character_table"] = table
        return table

    l = _choose_modulus(N, m)
    mats = [np.array(M, dtype=np.int64) % l for M in _class_matrices(tg)]

    # simultaneous diagonalization
    spaces = [np.eye(r, dtype=np.int64)]
    for i in range(1, r):
        if all(W.shape[1] == 1 for W in spaces):
            break
        nxt = []
        for W in spaces:
            if W.shape[1] == 1:
                nxt.append(W)
                continue
            We, piv = _echelon_columns(W, l)
            Y = (mats[i] @ We) % l
            B = Y[piv, :] % l
            for E in _eigen_split(B, l):
                nxt.append((We @ E) % l)
        spaces = nxt
    assert all(W.shape[1] == 1 for W in spaces), \
        "class algebra failed to split into one-dimensional eigenspaces"

    inv_sizes = [pow(s % l, -1, l) for s in sizes]
    inverse_class = [int(cid[tg.inverse[g]]) for g in reps]
    z = pow(_primitive_root_mod(l), (l - 1) // m, l)
    z_pows = [pow(z, t, l) for t in range(m)]
    z_inv_pows = [pow(z, (m - t) % m, l) for t in range(m)]
    inv_m = pow(m % l, -1, l)

    rows = []
    for W in spaces:
        v = W[:, 0] % l
        j0 = int(np.flatnonzero(v)[0])
        vj_inv = pow(int(v[j0]), -1, l)
        omega = [int((M[j0, :] @ v) % l * vj_inv % l) for M in mats]
        ssum = 0
        for i in range(r):
            ssum = (ssum + omega[i] * omega[inverse_class[i]] * inv_sizes[i]) % l
        d_sq = N % l * pow(ssum, -1, l) % l
        deg = None
        t = 0
        while tg.p ** (2 * t) <= N:
            if pow(tg.p, 2 * t, l) == d_sq:
                deg = tg.p ** t
                break
            t += 1
        assert deg is not None, "no p-power degree matches the eigenvalue data"
        chi_mod = [deg % l * omega[i] % l * inv_sizes[i] % l for i in range(r)]
        # lift each class value to an exact cyclotomic via Fourier inversion
        row = []
        for i in range(r):
            mu = [0] * m
            for k in range(m):
                acc = 0
                for t2 in range(m):
                    acc = (acc + chi_mod[power_classes[i][t2]]
                           * z_inv_pows[t2 * k % m]) % l
                mu[k] = acc * inv_m % l
            row.append(Cyc(m, mu))
        rows.append(tuple(row))
    rows.sort(key=lambda row: (row[0].to_int(),
                               tuple(v.coeffs for v in row)))

    table = CharacterTable(order=N, exponent=m, class_sizes=tuple(sizes),
                           class_orders=tuple(orders), class_reps=tuple(reps),
                           irreducibles=tuple(rows),
                           power_classes=tuple(power_classes))
    tg._cache["character_table"] = table
    return table


def power_map(G: PcPresentation, n: int) -> tuple:
    return character_table(G).power_map(n)


def check_orthogonality(table: CharacterTable) -> bool:
    """Exact first orthogonality relations for all character pairs."""
    m = table.exponent
    r = table.n_classes
    inv_of = []
    for i in range(r):
        # class of rep^{-1}: the power map at exponent-1 powers within order
        o = table.class_orders[i]
        inv_of.append(table.power_classes[i][(o - 1) % m if m > 1 else 0])
    for a, chi in enumerate(table.irreducibles):
        for b, psi in enumerate(table.irreducibles):
            acc = Cyc.integer(m, 0)
            for i in range(r):
                acc = acc + chi[i] * psi[inv_of[i]] * table.class_sizes[i]
            want = table.order if a == b else 0
            if acc != want:
                return False
    return True


# -- table equivalence, Brauer pairs, twins -----------------------------------

def _column_profiles(table: CharacterTable, with_orders: bool) -> list[tuple]:
    # element orders are not an invariant of the plain character table, so
    # they only constrain the search when power maps are part of the matching
    cols = []
    for i in range(table.n_classes):
        vals = sorted(row[i].coeffs for row in table.irreducibles)
        key = (table.class_sizes[i],)
        if with_orders:
            key += (table.class_orders[i],)
        cols.append(key + (tuple(vals),))
    return cols


def _primes_upto(n: int) -> list[int]:
    from sympy import primerange
    return list(primerange(2, n + 1))


def _match_tables(tG: CharacterTable, tH: CharacterTable,
                  with_power_maps: bool) -> ClassMatching | None:
    if (tG.order != tH.order or tG.exponent != tH.exponent
            or tG.n_classes != tH.n_classes
            or sorted(tG.degrees) != sorted(tH.degrees)):
        return None
    r = tG.n_classes
    profG = _column_profiles(tG, with_orders=with_power_maps)
    profH = _column_profiles(tH, with_orders=with_power_maps)
    if sorted(profG) != sorted(profH):
        return None
    primes = _primes_upto(tG.exponent) if with_power_maps else []
    pmapsG = {q: tG.power_map(q) for q in primes}
    pmapsH = {q: tH.power_map(q) for q in primes}

    if with_power_maps:
        # iterated refinement of class labels by power-map images
        def refine(prof, pmaps):
            labels = {key: i for i, key in enumerate(sorted(set(prof)))}
            lab = [labels[k] for k in prof]
            while True:
                keys = [(lab[i],) + tuple(lab[pmaps[q][i]] for q in primes)
                        for i in range(r)]
                newlab = {key: i for i, key in enumerate(sorted(set(keys)))}
                nl = [newlab[k] for k in keys]
                if nl == lab:
                    return [keys[i] for i in range(r)]
                lab = nl
        keyG = refine(profG, pmapsG)
        keyH = refine(profH, pmapsH)
        if sorted(keyG) != sorted(keyH):
            return None
    else:
        keyG, keyH = profG, profH

    cand = [[j for j in range(r) if keyH[j] == keyG[i]] for i in range(r)]
    order = sorted(range(r), key=lambda i: len(cand[i]))
    tau = [-1] * r
    used = [False] * r

    rowsG = sorted(tuple(v.coeffs for v in row) for row in tG.irreducibles)

    def verify(tau):
        rowsH = sorted(tuple(row[tau[i]].coeffs for i in range(r))
                       for row in tH.irreducibles)
        if rowsH != rowsG:
            return False
        if with_power_maps:
            for q in primes:
                for i in range(r):
                    if tau[pmapsG[q][i]] != pmapsH[q][tau[i]]:
                        return False
        return True

    result: list[ClassMatching | None] = [None]

    def dfs(k):
        if result[0] is not None:
            return
        if k == r:
            if verify(tau):
                result[0] = ClassMatching(tau=tuple(tau))
            return
        i = order[k]
        for j in cand[i]:
            if used[j]:
                continue
            if with_power_maps:
                ok = True
                for q in primes:
                    gi = pmapsG[q][i]
                    if tau[gi] >= 0 and tau[gi] != pmapsH[q][j]:
                        ok = False
                        break
                    # reverse: if some assigned i' powers to i, image must match
                if not ok:
                    continue
            tau[i] = j
            used[j] = True
            dfs(k + 1)
            tau[i] = -1
            used[j] = False

    dfs(0)
    return result[0]


def char_tables_equivalent(G: PcPresentation,
                           H: PcPresentation) -> ClassMatching | None:
    return _match_tables(character_table(G), character_table(H),
                         with_power_maps=False)


def brauer_pair(G: PcPresentation, H: PcPresentation) -> ClassMatching | None:
    """A class matching that preserves the character table and commutes with
    all power maps (checked for primes up to the exponent)."""
    return _match_tables(character_table(G), character_table(H),
                         with_power_maps=True)


def are_twins(G: PcPresentation, H: PcPresentation, catalog=None) -> bool:
    """Twins: siblings that are additionally a Brauer pair."""
    from .fingerprint import are_siblings
    if not are_siblings(G, H, catalog=catalog):
        return False
    return brauer_pair(G, H) is not None


# -- text export --------------------------------------------------------------

def table_to_text(table: CharacterTable) -> str:
    """Lossless textual form: header, one class line each, one row line per
    irreducible character."""
    lines = [f"chartab v1 {table.order} {table.exponent} {table.n_classes} "
             f"{len(table.irreducibles)}"]
    for i in range(table.n_classes):
        pcs = ",".join(str(x) for x in table.power_classes[i])
        lines.append(f"class {table.class_sizes[i]} {table.class_orders[i]} "
                     f"{table.class_reps[i]} {pcs}")
    for row in table.irreducibles:
        lines.append("irr " + " ".join(
            ",".join(str(c) for c in v.coeffs) for v in row))
    return "\n".join(lines)


def table_from_text(text: str) -> CharacterTable:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    head = lines[0].split()
    if head[:2] != ["chartab", "v1"]:
        raise ValueError("bad character table header")
    order, exponent, nc, ni = (int(x) for x in head[2:6])
    sizes, orders, reps, pcs = [], [], [], []
    rows = []
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "class":
            sizes.append(int(parts[1]))
            orders.append(int(parts[2]))
            reps.append(int(parts[3]))
            pcs.append(tuple(int(x) for x in parts[4].split(",")))
        elif parts[0] == "irr":
            rows.append(tuple(Cyc(exponent, [int(c) for c in fld.split(",")])
                              for fld in parts[1:]))
        else:
            raise ValueError(f"unknown record {parts[0]!r}")
    if len(sizes) != nc or len(rows) != ni:
        raise ValueError("character table record counts do not match header")
    return CharacterTable(order=order, exponent=exponent,
                          class_sizes=tuple(sizes), class_orders=tuple(orders),
                          class_reps=tuple(reps), irreducibles=tuple(rows),
                          power_classes=tuple(pcs))
