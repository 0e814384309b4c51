"""Dense multiplication-table model of a finite group.

Structural algorithms (conjugacy classes, characteristic subgroups, series,
quotients) operate on this model.  For a p-group given by a pc-presentation the
table is built by collection; elements are indexed by the mixed-radix encoding
of their exponent vectors, so index order equals lexicographic vector order.
"""

from __future__ import annotations

import numpy as np

from .presentation import PcPresentation


class SizeBoundError(RuntimeError):
    """A computation was requested beyond the configured size bound."""


# Groups above this order are refused by the table model.
MAX_TABLE_ORDER = 2 ** 14


class TableGroup:
    """A finite group as an N x N multiplication table of element indices."""

    def __init__(self, table: np.ndarray, p: int | None = None, pres=None):
        table = np.asarray(table)
        n = table.shape[0]
        if table.shape != (n, n):
            raise ValueError("multiplication table must be square")
        self.table = table
        self.size = n
        self.p = p
        self.pres = pres  # originating PcPresentation, if any
        idt = np.flatnonzero((table == np.arange(n)).all(axis=1) &
                             (table.T == np.arange(n)).all(axis=1))
        if len(idt) != 1:
            raise ValueError("table has no unique identity element")
        self.identity = int(idt[0])
        self._cache: dict = {}

    # -- construction --------------------------------------------------------

    @classmethod
    def from_presentation(cls, pres: PcPresentation) -> "TableGroup":
        N = pres.order
        if N > MAX_TABLE_ORDER:
            raise SizeBoundError(f"group order {N} exceeds table bound {MAX_TABLE_ORDER}")
        p, n = pres.p, pres.n
        dtype = np.int16 if N < 2 ** 15 else np.int32
        radix = [p ** (n - 1 - i) for i in range(n)]

        def enc(vec):
            return sum(e * r for e, r in zip(vec, radix))

        def dec(idx):
            out = []
            for r in radix:
                out.append(idx // r)
                idx %= r
            return tuple(out)

        # right-multiplication-by-generator tables
        rg = np.empty((n, N), dtype=dtype)
        for x in range(N):
            vx = dec(x)
            for g in range(n):
                rg[g, x] = enc(pres._mul_gen(vx, g))
        table = np.empty((N, N), dtype=dtype)
        table[:, 0] = np.arange(N, dtype=dtype)
        for y in range(1, N):
            # strip the last letter of y: column is one generator-gather away
            vy = dec(y)
            k = max(i for i in range(n) if vy[i])
            yprev = y - radix[k]
            table[:, y] = rg[k, table[:, yprev]]
        tg = cls(table, p=p, pres=pres)
        tg._enc, tg._dec, tg._radix = enc, dec, radix
        tg._cache["pc_generators"] = [enc(pres.generator(i)) for i in range(n)]
        return tg

    def vec(self, idx: int):
        return self._dec(idx)

    def enc(self, vec) -> int:
        return self._enc(vec)

    # -- elementary operations ----------------------------------------------

    @property
    def inverse(self) -> np.ndarray:
        inv = self._cache.get("inverse")
        if inv is None:
            rows, cols = np.nonzero(self.table == self.identity)
            inv = np.empty(self.size, dtype=self.table.dtype)
            inv[rows] = cols
            self._cache["inverse"] = inv
        return inv

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conj(self, x: int, g: int) -> int:
        return int(self.table[self.table[self.inverse[g], x], g])

    def comm(self, x: int, y: int) -> int:
        xy = self.table[x, y]
        yx = self.table[y, x]
        return int(self.table[self.inverse[yx], xy])

    def power(self, x: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(x), -k)
        r, sq = self.identity, x
        while k:
            if k & 1:
                r = int(self.table[r, sq])
            k >>= 1
            sq = int(self.table[sq, sq])
        return r

    @property
    def orders(self) -> np.ndarray:
        o = self._cache.get("orders")
        if o is None:
            o = np.empty(self.size, dtype=np.int64)
            for x in range(self.size):
                y, k = x, 1
                while y != self.identity:
                    y = int(self.table[y, x])
                    k += 1
                o[x] = k
            self._cache["orders"] = o
        return o

    @property
    def exponent(self) -> int:
        val = self._cache.get("exponent")
        if val is None:
            val = int(np.lcm.reduce(self.orders))
            self._cache["exponent"] = val
        return val

    @property
    def generators(self) -> list[int]:
        """A small generating set (the pc generators when available)."""
        g = self._cache.get("pc_generators")
        if g is None:
            g = self._cache.get("generators")
        if g is None:
            g = []
            have = np.zeros(self.size, dtype=bool)
            have[self.identity] = True
            order = np.argsort(-self.orders, kind="stable")
            for x in order:
                x = int(x)
                if not have[x]:
                    g.append(x)
                    have[self.closure_mask(g)] = True
                    if have.all():
                        break
            self._cache["generators"] = g
        return g

    # -- subgroups as element-index arrays -----------------------------------

    def closure(self, gens) -> np.ndarray:
        """Sorted element indices of the subgroup generated by ``gens``."""
        have = np.zeros(self.size, dtype=bool)
        have[self.identity] = True
        stack = []
        for g in gens:
            g = int(g)
            if not have[g]:
                have[g] = True
                stack.append(g)
        gens = [int(g) for g in gens]
        while stack:
            x = stack.pop()
            for g in gens:
                y = int(self.table[x, g])
                if not have[y]:
                    have[y] = True
                    stack.append(y)
                y = int(self.table[g, x])
                if not have[y]:
                    have[y] = True
                    stack.append(y)
        return np.flatnonzero(have)

    def closure_mask(self, gens) -> np.ndarray:
        m = np.zeros(self.size, dtype=bool)
        m[self.closure(gens)] = True
        return m

    def subgroup_generators(self, elems) -> list[int]:
        """A short generating list for the subgroup given by its elements."""
        elems = np.asarray(elems)
        gens: list[int] = []
        have = np.zeros(self.size, dtype=bool)
        have[self.identity] = True
        # largest orders first keeps the list short
        for x in elems[np.argsort(-self.orders[elems], kind="stable")]:
            x = int(x)
            if not have[x]:
                gens.append(x)
                have |= self.closure_mask(gens)
                if have[elems].all():
                    break
        return gens

    def normal_closure(self, gens) -> np.ndarray:
        cur = self.closure(gens)
        ggens = self.generators
        while True:
            sgens = self.subgroup_generators(cur)
            extra = [self.conj(x, g) for x in sgens for g in ggens]
            new = self.closure(list(sgens) + extra)
            if len(new) == len(cur):
                return new
            cur = new

    def is_subgroup(self, elems) -> bool:
        elems = np.asarray(elems)
        m = np.zeros(self.size, dtype=bool)
        m[elems] = True
        return bool(m[self.identity] and m[self.table[np.ix_(elems, elems)]].all())

    def is_normal(self, elems) -> bool:
        m = np.zeros(self.size, dtype=bool)
        m[np.asarray(elems)] = True
        for g in self.generators:
            if not m[[self.conj(int(x), g) for x in np.asarray(elems)]].all():
                return False
        return True

    # -- conjugacy classes ----------------------------------------------------

    @property
    def class_ids(self) -> np.ndarray:
        """Map element -> index of its conjugacy class (classes sorted by
        (size, element order, minimal member))."""
        self._classes()
        return self._cache["class_ids"]

    @property
    def classes(self) -> list[dict]:
        """One dict per class: representative, size, order, members."""
        self._classes()
        return self._cache["classes"]

    def _classes(self):
        if "classes" in self._cache:
            return
        N = self.size
        gens = self.generators
        comp = np.full(N, -1, dtype=np.int64)
        groups = []
        for x in range(N):
            if comp[x] >= 0:
                continue
            cid = len(groups)
            comp[x] = cid
            members = [x]
            stack = [x]
            while stack:
                y = stack.pop()
                for g in gens:
                    z = self.conj(y, g)
                    if comp[z] < 0:
                        comp[z] = cid
                        members.append(z)
                        stack.append(z)
            groups.append(members)
        orders = self.orders
        infos = []
        for members in groups:
            members = sorted(members)
            infos.append({"representative": members[0], "size": len(members),
                          "order": int(orders[members[0]]),
                          "members": np.array(members)})
        perm = sorted(range(len(infos)), key=lambda i: (
            infos[i]["size"], infos[i]["order"], infos[i]["representative"]))
        infos = [infos[i] for i in perm]
        ids = np.empty(N, dtype=np.int64)
        for ci, info in enumerate(infos):
            ids[info["members"]] = ci
        self._cache["classes"] = infos
        self._cache["class_ids"] = ids

    # -- characteristic subgroups and series ----------------------------------

    def center(self) -> np.ndarray:
        z = self._cache.get("center")
        if z is None:
            ok = np.ones(self.size, dtype=bool)
            for g in self.generators:
                ok &= self.table[:, g] == self.table[g, :]
            z = np.flatnonzero(ok)
            self._cache["center"] = z
        return z

    def centralizer_mask_of(self, elems) -> np.ndarray:
        ok = np.ones(self.size, dtype=bool)
        for g in self.subgroup_generators(elems):
            ok &= self.table[:, g] == self.table[g, :]
        return ok

    def derived_subgroup(self) -> np.ndarray:
        d = self._cache.get("derived")
        if d is None:
            gens = self.generators
            comms = [self.comm(a, b) for a in gens for b in gens]
            d = self.normal_closure(comms)
            self._cache["derived"] = d
        return d

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def frattini_subgroup(self) -> np.ndarray:
        f = self._cache.get("frattini")
        if f is None:
            if self.p is None:
                raise ValueError("Frattini subgroup implemented for p-groups only")
            gens = self.generators
            seeds = [self.power(g, self.p) for g in gens]
            f = self.closure(list(self.derived_subgroup()) + seeds)
            self._cache["frattini"] = f
        return f

    def rank(self) -> int:
        if self.p is None:
            raise ValueError("rank implemented for p-groups only")
        q = self.size // len(self.frattini_subgroup())
        return round(np.log(q) / np.log(self.p)) if q > 1 else 0

    def derived_series(self) -> list[np.ndarray]:
        terms = [np.arange(self.size)]
        while len(terms[-1]) > 1:
            sub = self.subgroup(terms[-1])
            nxt = terms[-1][sub.derived_subgroup()]
            if len(nxt) == len(terms[-1]):
                break
            terms.append(nxt)
        return terms

    def lower_central_series(self) -> list[np.ndarray]:
        terms = [np.arange(self.size)]
        gens = self.generators
        while len(terms[-1]) > 1:
            sgens = self.subgroup_generators(terms[-1])
            comms = [self.comm(int(a), g) for a in sgens for g in gens]
            nxt = self.normal_closure(comms)
            if len(nxt) == len(terms[-1]):
                break
            terms.append(nxt)
        return terms

    def upper_central_series(self) -> list[np.ndarray]:
        """Ascending: 1 = Z_0 < Z_1 <= ... terminating at the hypercenter."""
        terms = [np.array([self.identity])]
        gens = self.generators
        while True:
            mask = np.zeros(self.size, dtype=bool)
            mask[terms[-1]] = True
            ok = np.ones(self.size, dtype=bool)
            for g in gens:
                ok &= mask[[self.comm(x, g) for x in range(self.size)]]
            nxt = np.flatnonzero(ok)
            if len(nxt) == len(terms[-1]):
                break
            terms.append(nxt)
        return terms

    def lower_exponent_p_central_series(self) -> list[np.ndarray]:
        if self.p is None:
            raise ValueError("p-central series requires a p-group")
        terms = [np.arange(self.size)]
        gens = self.generators
        while len(terms[-1]) > 1:
            sgens = self.subgroup_generators(terms[-1])
            seeds = [self.comm(int(a), g) for a in sgens for g in gens]
            seeds += [self.power(int(a), self.p) for a in sgens]
            nxt = self.normal_closure(seeds)
            if len(nxt) == len(terms[-1]):
                break
            terms.append(nxt)
        return terms

    def abelian_invariants(self) -> list[int]:
        """Invariant factors of G/[G,G] (ascending), as integers."""
        der = self.derived_subgroup()
        q = self.quotient(der) if len(der) > 1 else self
        if q.size == 1:
            return []
        # For an abelian p-group the multiset of element orders determines the
        # decomposition; recover the partition from order counts.
        if self.p is not None:
            orders = q.orders
            p = self.p
            parts = []
            k = 1
            prev = 1
            while prev < q.size:
                cnt = int((orders <= p ** k).sum())
                mk = round(np.log(cnt) / np.log(p))
                mprev = round(np.log(prev) / np.log(p))
                parts.append(mk - mprev)  # number of factors with exponent >= k
                prev = cnt
                k += 1
            invs = []
            for exp_at_least in range(len(parts), 0, -1):
                count = parts[exp_at_least - 1] - (
                    parts[exp_at_least] if exp_at_least < len(parts) else 0)
                invs.extend([p ** exp_at_least] * count)
            return sorted(invs)
        raise ValueError("abelian invariants implemented for p-groups only")

    # -- quotients and subgroups as groups ------------------------------------

    def coset_labels(self, normal_elems) -> np.ndarray:
        """Label each element by the minimal member of its (left) coset."""
        elems = np.asarray(normal_elems)
        cosets = self.table[elems, :]  # rows: n*x for n in N
        return cosets.min(axis=0)

    def quotient(self, normal_elems) -> "TableGroup":
        elems = np.asarray(normal_elems)
        if not self.is_subgroup(elems) or not self.is_normal(elems):
            raise ValueError("quotient requires a normal subgroup")
        labels = self.coset_labels(elems)
        reps = np.unique(labels)
        index_of = {int(r): i for i, r in enumerate(reps)}
        lut = np.array([index_of[int(labels[r])] for r in range(self.size)])
        q = lut[self.table[np.ix_(reps, reps)]]
        return TableGroup(q.astype(self.table.dtype), p=self.p)

    def subgroup(self, elems) -> "TableGroup":
        elems = np.asarray(elems)
        if not self.is_subgroup(elems):
            raise ValueError("element set is not closed")
        index_of = np.full(self.size, -1, dtype=np.int64)
        index_of[elems] = np.arange(len(elems))
        sub = index_of[self.table[np.ix_(elems, elems)]]
        return TableGroup(sub.astype(self.table.dtype), p=self.p)
