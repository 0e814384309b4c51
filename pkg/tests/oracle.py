"""Independent brute-force group computations used to derive expected values.

Everything here is deliberately naive and self-contained: groups are built
from explicit permutations, matrices over Z/m, or direct multiplication
formulas, and all structure is computed by exhaustive loops.  Nothing in this
module imports the package under test.
"""

from __future__ import annotations

import itertools
from collections import Counter


class OracleGroup:
    """A finite group as an explicit element list with a multiplication map."""

    def __init__(self, elements, mul):
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)
        self.table = [[self.index[mul(a, b)] for b in self.elements]
                      for a in self.elements]
        ident = [i for i in range(n)
                 if all(self.table[i][j] == j == self.table[j][i]
                        for j in range(n))]
        assert len(ident) == 1, "not a group: no unique identity"
        self.identity = ident[0]
        self.inverse = [next(j for j in range(n)
                             if self.table[i][j] == self.identity)
                        for i in range(n)]

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def element_order(self, i: int) -> int:
        o, x = 1, i
        while x != self.identity:
            x = self.table[x][i]
            o += 1
        return o

    def order_multiset(self):
        return sorted(self.element_order(i) for i in range(self.order))

    def conjugacy_classes(self):
        """Sorted (size, element order) pairs over the conjugacy classes."""
        seen = set()
        out = []
        for i in range(self.order):
            if i in seen:
                continue
            cls = {self.table[self.table[self.inverse[g]][i]][g]
                   for g in range(self.order)}
            seen |= cls
            out.append((len(cls), self.element_order(i)))
        return sorted(out)

    def center_size(self) -> int:
        return sum(1 for i in range(self.order)
                   if all(self.table[i][j] == self.table[j][i]
                          for j in range(self.order)))

    def closure(self, gens):
        span = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in span:
                        span.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(span)

    def derived_size(self) -> int:
        comms = {self.table[self.table[self.inverse[a]][self.inverse[b]]]
                 [self.table[a][b]]
                 for a in range(self.order) for b in range(self.order)}
        return len(self.closure(list(comms)))

    def is_abelian(self) -> bool:
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(self.order) for j in range(self.order))

    def all_subgroups(self, max_gens: int = 4):
        """Every subgroup, by closing all generator subsets up to max_gens."""
        subs = {frozenset({self.identity})}
        layer = {frozenset({self.identity})}
        for _ in range(max_gens):
            nxt = set()
            for sub in layer:
                for g in range(self.order):
                    if g not in sub:
                        ext = self.closure(list(sub) + [g])
                        if ext not in subs:
                            subs.add(ext)
                            nxt.add(ext)
            layer = nxt
            if not layer:
                break
        return sorted(subs, key=lambda s: (len(s), sorted(s)))

    def subgroup(self, elems) -> "OracleGroup":
        return _subgroup_of(self, elems)

    def subgroup_class_profile(self):
        """Sorted (subgroup order, class length, multiplicity) triples over
        conjugacy classes of proper subgroups, trivial subgroup included."""
        subs = self.all_subgroups()
        subs = [s for s in subs if len(s) < self.order]
        seen = set()
        profile = Counter()
        for sub in subs:
            if sub in seen:
                continue
            orbit = set()
            for g in range(self.order):
                img = frozenset(self.table[self.table[self.inverse[g]][x]][g]
                                for x in sub)
                orbit.add(img)
            seen |= orbit
            profile[(len(sub), len(orbit))] += 1
        return sorted((o, l, m) for (o, l), m in profile.items())

    def _min_generating_set(self):
        for k in range(1, self.order + 1):
            for gens in itertools.combinations(range(self.order), k):
                if len(self.closure(gens)) == self.order:
                    return list(gens)
        raise AssertionError("unreachable")

    def _words(self, gens):
        """BFS expression of every element as a word in the generators."""
        words = {self.identity: ()}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for gi, g in enumerate(gens):
                    y = self.table[x][g]
                    if y not in words:
                        words[y] = words[x] + (gi,)
                        nxt.append(y)
            frontier = nxt
        return words

    def isomorphisms_onto(self, other: "OracleGroup", count_only=False):
        """Brute-force isomorphism search by generator images."""
        if self.order != other.order or \
                self.order_multiset() != other.order_multiset():
            return 0 if count_only else None
        gens = self._min_generating_set()
        words = self._words(gens)
        by_order = {}
        for j in range(other.order):
            by_order.setdefault(other.element_order(j), []).append(j)
        total = 0
        for images in itertools.product(
                *[by_order.get(self.element_order(g), []) for g in gens]):
            if len(other.closure(images)) != other.order:
                continue
            phi = [None] * self.order
            ok = True
            for x, w in words.items():
                y = other.identity
                for gi in w:
                    y = other.table[y][images[gi]]
                phi[x] = y
            for a in range(self.order):
                for b in range(self.order):
                    if phi[self.table[a][b]] != other.table[phi[a]][phi[b]]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                if not count_only:
                    return phi
                total += 1
        return total if count_only else None

    def is_isomorphic(self, other: "OracleGroup") -> bool:
        return self.isomorphisms_onto(other) is not None

    def automorphism_count(self) -> int:
        return self.isomorphisms_onto(self, count_only=True)


def _subgroup_of(G: OracleGroup, elems) -> OracleGroup:
    sub = [G.elements[i] for i in sorted(elems)]
    return OracleGroup(sub, lambda a, b: G.elements[
        G.table[G.index[a]][G.index[b]]])


# -- explicit constructions ---------------------------------------------------

def _perm_mul(a, b):
    return tuple(a[b[i]] for i in range(len(a)))


def permutation_group(gens) -> OracleGroup:
    n = len(gens[0])
    ident = tuple(range(n))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _perm_mul(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return OracleGroup(sorted(elems), _perm_mul)


def matrix_group(gens, mod) -> OracleGroup:
    k = len(gens[0])

    def mmul(a, b):
        return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(k)) % mod
                           for j in range(k)) for i in range(k))

    ident = tuple(tuple(1 if i == j else 0 for j in range(k))
                  for i in range(k))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mmul(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return OracleGroup(sorted(elems), mmul)


def cyclic(n: int) -> OracleGroup:
    return OracleGroup(range(n), lambda a, b: (a + b) % n)


def direct_product(A: OracleGroup, B: OracleGroup) -> OracleGroup:
    return OracleGroup(
        [(a, b) for a in A.elements for b in B.elements],
        lambda x, y: (A.elements[A.table[A.index[x[0]]][A.index[y[0]]]],
                      B.elements[B.table[B.index[x[1]]][B.index[y[1]]]]))


def dihedral(n: int) -> OracleGroup:
    """Dihedral group of order 2n, as affine maps x -> sx + t mod n."""
    return OracleGroup(
        [(s, t) for s in (1, n - 1) for t in range(n)],
        lambda a, b: ((a[0] * b[0]) % n, (b[0] * a[1] + b[1]) % n))


def quaternion8() -> OracleGroup:
    """Q8 as the subgroup {+-1, +-i, +-j, +-k} of the quaternions, with
    elements (sign, symbol)."""
    table = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"),
             ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
             ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"),
             ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
             ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"),
             ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
             ("k", "1"): (1, "k"), ("k", "i"): (1, "j"),
             ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1")}

    def mul(a, b):
        s, sym = table[(a[1], b[1])]
        return (a[0] * b[0] * s, sym)

    return OracleGroup([(s, sym) for s in (1, -1)
                        for sym in ("1", "i", "j", "k")], mul)


def generalized_quaternion(n: int) -> OracleGroup:
    """Q_{2^n} as 2x2 matrices over GF(17) (which has an element of order 16)."""
    assert 3 <= n <= 5
    zeta = pow(3, 16 // 2 ** (n - 1), 17)  # 3 has order 16 mod 17
    a = ((zeta, 0), (0, pow(zeta, 15, 17)))
    b = ((0, 1), (16, 0))
    return matrix_group([a, b], 17)


def semidihedral(n: int) -> OracleGroup:
    """SD_{2^n} as affine maps x -> sx + t mod 2^{n-1}, s in {1, 2^{n-2}-1}."""
    m = 2 ** (n - 1)
    s0 = 2 ** (n - 2) - 1
    return OracleGroup(
        [(pow(s0, k, m) if k else 1, t) for k in (0, 1) for t in range(m)],
        lambda a, b: ((a[0] * b[0]) % m, (b[0] * a[1] + b[1]) % m))


def modular_group(n: int) -> OracleGroup:
    """Modular (semidihedral-like) group of order 2^n: affine maps with
    multiplier 2^{n-2}+1 mod 2^{n-1}."""
    m = 2 ** (n - 1)
    s0 = 2 ** (n - 2) + 1
    return OracleGroup(
        [(pow(s0, k, m), t) for k in (0, 1) for t in range(m)],
        lambda a, b: ((a[0] * b[0]) % m, (b[0] * a[1] + b[1]) % m))


def modular_group_p(p: int) -> OracleGroup:
    """Extraspecial group of order p^3 and exponent p^2: affine maps
    x -> (1+p)^k x + t mod p^2."""
    m = p * p
    elems = [(pow(1 + p, k, m), t) for k in range(p) for t in range(m)]
    return OracleGroup(
        elems, lambda a, b: ((a[0] * b[0]) % m, (b[0] * a[1] + b[1]) % m))


def heisenberg(p: int) -> OracleGroup:
    """Unitriangular 3x3 matrices over GF(p): order p^3, exponent p (p odd)."""
    gens = [((1, 1, 0), (0, 1, 0), (0, 0, 1)),
            ((1, 0, 0), (0, 1, 1), (0, 0, 1))]
    return matrix_group(gens, p)


def pauli_group() -> OracleGroup:
    """Central product C4 o D8 of order 16, as 2x2 matrices over GF(5)
    (where 2 plays the role of i)."""
    X = ((0, 1), (1, 0))
    Z = ((1, 0), (0, 4))
    S = ((2, 0), (0, 2))
    return matrix_group([X, Z, S], 5)


def semidirect_c4_c4() -> OracleGroup:
    """C4 x| C4 with inversion action: (x1,y1)(x2,y2) = (x1 + (-1)^y1 x2, ...)."""
    def mul(a, b):
        sign = -1 if a[1] % 2 else 1
        return ((a[0] + sign * b[0]) % 4, (a[1] + b[1]) % 4)
    return OracleGroup([(x, y) for x in range(4) for y in range(4)], mul)


def semidirect_c22_c4() -> OracleGroup:
    """(C2 x C2) x| C4 with the coordinate swap action."""
    def mul(a, b):
        (v1, v2), k = a[0], a[1]
        (w1, w2), l = b[0], b[1]
        if k % 2:
            w1, w2 = w2, w1
        return (((v1 ^ w1), (v2 ^ w2)), (k + l) % 4)
    return OracleGroup([((v1, v2), k) for v1 in (0, 1) for v2 in (0, 1)
                        for k in range(4)], mul)


def sylow2_s8() -> OracleGroup:
    """A Sylow 2-subgroup of S_8 (iterated wreath product, order 128).

    Every group of order 8 embeds into S_8 by the regular representation,
    hence into this group up to conjugacy."""
    gens = [
        (1, 0, 2, 3, 4, 5, 6, 7),          # swap 0,1
        (2, 3, 0, 1, 4, 5, 6, 7),          # swap blocks {0,1},{2,3}
        (4, 5, 6, 7, 0, 1, 2, 3),          # swap halves
    ]
    return permutation_group(gens)


def groups_of_order_8_count() -> int:
    """The number of groups of order 8 up to isomorphism, derived by
    classifying all order-8 subgroups of a Sylow 2-subgroup of S_8."""
    W = sylow2_s8()
    subs = set()
    # cyclic and 2-generated subgroups
    for a in range(W.order):
        if W.element_order(a) == 8:
            subs.add(W.closure([a]))
    for a in range(W.order):
        for b in range(a + 1, W.order):
            c = W.closure([a, b])
            if len(c) == 8:
                subs.add(c)
    # elementary abelian subgroups need three generators
    invol = [i for i in range(W.order) if W.element_order(i) == 2]
    fours = set()
    for a, b in itertools.combinations(invol, 2):
        if W.table[a][b] == W.table[b][a]:
            c = W.closure([a, b])
            if len(c) == 4:
                fours.add(c)
    for V in fours:
        for t in invol:
            if t in V:
                continue
            if all(W.table[t][x] == W.table[x][t] for x in V):
                c = W.closure(list(V) + [t])
                if len(c) == 8:
                    subs.add(c)
    classes: list[OracleGroup] = []
    for sub in subs:
        H = _subgroup_of(W, sub)
        if not any(H.is_isomorphic(K) for K in classes):
            classes.append(H)
    return len(classes)


def all_groups_of_order_16() -> list[OracleGroup]:
    """Fourteen pairwise non-isomorphic groups of order 16, from independent
    explicit constructions."""
    c2, c4, c8, c16 = cyclic(2), cyclic(4), cyclic(8), cyclic(16)
    return [
        c16,
        direct_product(c8, c2),
        direct_product(c4, c4),
        direct_product(c4, direct_product(c2, c2)),
        direct_product(c2, direct_product(c2, direct_product(c2, c2))),
        dihedral(8),
        generalized_quaternion(4),
        semidihedral(4),
        modular_group(4),
        direct_product(dihedral(4), c2),
        direct_product(quaternion8(), c2),
        pauli_group(),
        semidirect_c4_c4(),
        semidirect_c22_c4(),
    ]
