"""Power-commutator presentations of finite p-groups.

A group of order p^n is described by generators g_1, ..., g_n with relations

    g_i^p       = (word in g_{i+1}, ..., g_n)
    [g_j, g_i]  = (word in g_{j+1}, ..., g_n)   for j > i,

where every word is stored in normal form g_1^{e_1} ... g_n^{e_n} as an
exponent vector with entries in [0, p).  Collection rewrites arbitrary
products of generators into this normal form.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Vec = tuple[int, ...]
Letter = tuple[int, int]  # (generator index, exponent)


class PresentationError(ValueError):
    """Raised for malformed or inconsistent presentation data."""


def _as_vec(v, n: int, p: int) -> Vec:
    t = tuple(int(x) for x in v)
    if len(t) != n:
        raise PresentationError(f"exponent vector has length {len(t)}, expected {n}")
    if any(x < 0 or x >= p for x in t):
        raise PresentationError(f"exponents must lie in [0, {p}): {t}")
    return t


class PcPresentation:
    """A weighted power-commutator presentation of a group of order p^n.

    ``power_relations`` maps generator index i (0-based) to the normal form of
    g_i^p; ``commutator_relations`` maps pairs (j, i) with j > i to the normal
    form of [g_j, g_i].  Missing entries mean the trivial word.  Every relation
    word may only involve generators with index strictly greater than the
    left-hand side's largest generator.
    """

    def __init__(self, p: int, ngens: int, power_relations=None,
                 commutator_relations=None):
        if p < 2:
            raise PresentationError(f"p must be at least 2, got {p}")
        if ngens < 0:
            raise PresentationError("ngens must be nonnegative")
        self.p = int(p)
        self.n = int(ngens)
        n = self.n
        zero = (0,) * n

        pw = [zero] * n
        for i, w in dict(power_relations or {}).items():
            if not 0 <= i < n:
                raise PresentationError(f"power relation index {i} out of range")
            pw[i] = _as_vec(w, n, p)
        self.power: tuple[Vec, ...] = tuple(pw)

        cm: dict[tuple[int, int], Vec] = {}
        for (j, i), w in dict(commutator_relations or {}).items():
            if not (0 <= i < j < n):
                raise PresentationError(f"commutator pair ({j}, {i}) out of range")
            w = _as_vec(w, n, p)
            if any(w):
                cm[(j, i)] = w
        self.comm: dict[tuple[int, int], Vec] = cm

        # Later-generator (weighted) shape checks.
        for i, w in enumerate(self.power):
            if any(w[k] for k in range(i + 1)):
                raise PresentationError(
                    f"power relation of g_{i + 1} uses a generator with index <= {i + 1}")
        for (j, i), w in self.comm.items():
            if any(w[k] for k in range(j + 1)):
                raise PresentationError(
                    f"[g_{j + 1}, g_{i + 1}] uses a generator with index <= {j + 1}")

        # Letter expansions used by the collector.
        self._pow_letters: list[tuple[Letter, ...]] = [
            tuple((k, w[k]) for k in range(n) if w[k]) for w in self.power]
        self._comm_letters: dict[tuple[int, int], tuple[Letter, ...]] = {
            ji: tuple((k, w[k]) for k in range(n) if w[k]) for ji, w in cm.items()}
        self._cache: dict[tuple[Vec, int], Vec] = {}

    # -- basic data ----------------------------------------------------------

    @property
    def order(self) -> int:
        return self.p ** self.n

    @property
    def identity(self) -> Vec:
        return (0,) * self.n

    def generator(self, i: int) -> Vec:
        e = [0] * self.n
        e[i] = 1
        return tuple(e)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PcPresentation) and self.p == other.p
                and self.n == other.n and self.power == other.power
                and self.comm == other.comm)

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.power, tuple(sorted(self.comm.items()))))

    def __repr__(self) -> str:
        return f"PcPresentation(p={self.p}, n={self.n})"

    # -- collection ----------------------------------------------------------

    def _mul_gen(self, e: Vec, i: int, trace=None) -> Vec:
        """Normal form of e * g_i.  ``trace`` counts relation firings."""
        if trace is None:
            hit = self._cache.get((e, i))
            if hit is not None:
                return hit
        p, n = self.p, self.n
        res = list(e)
        tail = [(j, res[j]) for j in range(i + 1, n) if res[j]]
        for j, _ in tail:
            res[j] = 0
        pending: list[Letter] = []
        res[i] += 1
        if res[i] == p:
            res[i] = 0
            pending.extend(self._pow_letters[i])
            if trace is not None:
                trace[("pow", i)] = trace.get(("pow", i), 0) + 1
        # Move g_i past the stripped tail: g_j g_i = g_i g_j [g_j, g_i].
        for j, a in tail:
            cw = self._comm_letters.get((j, i))
            if trace is not None:
                # a trivial commutator word still counts as a firing: central
                # extensions attach tails to trivial relations too
                trace[("comm", j, i)] = trace.get(("comm", j, i), 0) + a
            if cw is None:
                pending.append((j, a))
            else:
                for _ in range(a):
                    pending.append((j, 1))
                    pending.extend(cw)
        r: Vec = tuple(res)
        for k, b in pending:
            for _ in range(b):
                r = self._mul_gen(r, k, trace)
        if trace is None:
            self._cache[(e, i)] = r
        return r

    def collect(self, word: Iterable[Letter], trace=None) -> Vec:
        """Collect a word, given as (generator, exponent) letters, to normal form.

        Negative exponents are allowed and handled via element inverses.
        """
        r = self.identity
        for g, a in word:
            if a >= 0:
                for _ in range(a):
                    r = self._mul_gen(r, g, trace)
            else:
                if trace is not None:
                    raise PresentationError("traced collection requires positive words")
                r = self.mul(r, self.inv(self.pow(self.generator(g), -a)))
        return r

    def mul(self, u: Vec, v: Vec, trace=None) -> Vec:
        r = u
        for g in range(self.n):
            a = v[g]
            for _ in range(a):
                r = self._mul_gen(r, g, trace)
        return r

    def pow(self, u: Vec, k: int) -> Vec:
        if k < 0:
            return self.inv(self.pow(u, -k))
        r = self.identity
        sq = u
        while k:
            if k & 1:
                r = self.mul(r, sq)
            k >>= 1
            sq = self.mul(sq, sq)
        return r

    def element_order(self, u: Vec) -> int:
        o = 1
        while u != self.identity:
            u = self.pow(u, self.p)
            o *= self.p
        return o

    def inv(self, u: Vec) -> Vec:
        return self.pow(u, self.element_order(u) - 1)

    def conj(self, u: Vec, g: Vec) -> Vec:
        """g^-1 * u * g."""
        return self.mul(self.mul(self.inv(g), u), g)

    def commutator(self, u: Vec, v: Vec) -> Vec:
        return self.mul(self.inv(self.mul(v, u)), self.mul(u, v))

    def elements(self) -> Iterable[Vec]:
        import itertools
        for tup in itertools.product(range(self.p), repeat=self.n):
            yield tup


# -- consistency -------------------------------------------------------------

def overlap_pairs(pres: PcPresentation):
    """Yield (lhs, rhs) normal-form pairs for all overlap consistency tests.

    The presented group has order exactly p^n iff all pairs agree.
    Optionally collects with a trace (see ``overlap_pairs_traced``).
    """
    yield from _overlaps(pres, trace_factory=None)


def _elem_of_word(pres, letters, trace):
    r = pres.identity
    for g, a in letters:
        for _ in range(a):
            r = pres._mul_gen(r, g, trace)
    return r


def _overlaps(pres: PcPresentation, trace_factory):
    p, n = pres.p, pres.n
    make = trace_factory if trace_factory is not None else (lambda: None)
    for i in range(n):
        gi = pres.generator(i)
        # g_i * g_i^p  vs  g_i^p * g_i
        tl, tr = make(), make()
        lhs = pres.mul(gi, _elem_of_word(pres, pres._pow_letters[i], tl), tl)
        rhs = pres._mul_gen(_elem_of_word(pres, pres._pow_letters[i], tr), i, tr)
        yield (lhs, tl), (rhs, tr)
        for j in range(i + 1, n):
            gj = pres.generator(j)
            # g_j^p * g_i  vs  g_j^{p-1} * (g_j * g_i).  The left side
            # substitutes the power relation directly, which counts as one
            # firing in traced mode.
            tl, tr = make(), make()
            if tl is not None:
                tl[("pow", j)] = tl.get(("pow", j), 0) + 1
            lhs = pres._mul_gen(_elem_of_word(pres, pres._pow_letters[j], tl), i, tl)
            r = pres.collect([(j, p - 1)], tr)
            rhs = pres.mul(r, pres.collect([(j, 1), (i, 1)], tr), tr)
            yield (lhs, tl), (rhs, tr)
            # g_j * g_i^p  vs  (g_j * g_i) * g_i^{p-1}, left side substituting
            tl, tr = make(), make()
            if tl is not None:
                tl[("pow", i)] = tl.get(("pow", i), 0) + 1
            lhs = pres.mul(gj, _elem_of_word(pres, pres._pow_letters[i], tl), tl)
            rhs = pres.collect([(j, 1), (i, p)], tr)
            yield (lhs, tl), (rhs, tr)
            for k in range(j + 1, n):
                # g_k * (g_j * g_i)  vs  (g_k * g_j) * g_i
                tl, tr = make(), make()
                lhs = pres.mul(pres.generator(k),
                               pres.collect([(j, 1), (i, 1)], tl), tl)
                rhs = pres._mul_gen(pres.collect([(k, 1), (j, 1)], tr), i, tr)
                yield (lhs, tl), (rhs, tr)


def check_consistency(pres: PcPresentation) -> bool:
    """True iff all overlap consistency equations hold (so |G| = p^n)."""
    for (lhs, _), (rhs, _) in _overlaps(pres, None):
        if lhs != rhs:
            return False
    return True


# -- text format -------------------------------------------------------------
#
# One group per record:
#
#     p n | pow i: e1,e2,...,en | comm j i: e1,...,en | ...
#
# Generator indices are 1-based.  Trivial relations may be omitted; fields are
# separated by '|'.  Example (D_8):  "2 3 | comm 2 1: 0,0,1"

def format_presentation(pres: PcPresentation) -> str:
    parts = [f"{pres.p} {pres.n}"]
    for i, w in enumerate(pres.power):
        if any(w):
            parts.append(f"pow {i + 1}: " + ",".join(map(str, w)))
    for (j, i) in sorted(pres.comm):
        w = pres.comm[(j, i)]
        parts.append(f"comm {j + 1} {i + 1}: " + ",".join(map(str, w)))
    return " | ".join(parts)


def parse_presentation(text: str) -> PcPresentation:
    fields = [f.strip() for f in text.strip().split("|")]
    if not fields or not fields[0]:
        raise PresentationError("empty presentation record")
    head = fields[0].split()
    if len(head) != 2:
        raise PresentationError(f"bad header {fields[0]!r}, expected 'p n'")
    try:
        p, n = int(head[0]), int(head[1])
    except ValueError as exc:
        raise PresentationError(f"bad header {fields[0]!r}") from exc
    powers = {}
    comms = {}
    for f in fields[1:]:
        if not f:
            continue
        try:
            kind, rest = f.split(None, 1)
            idx_part, vec_part = rest.split(":")
            vec = tuple(int(x) for x in vec_part.strip().split(","))
            idx = idx_part.split()
            if kind == "pow":
                (i,) = (int(idx[0]),)
                powers[i - 1] = vec
            elif kind == "comm":
                j, i = int(idx[0]), int(idx[1])
                comms[(j - 1, i - 1)] = vec
            else:
                raise PresentationError(f"unknown relation kind {kind!r}")
        except PresentationError:
            raise
        except Exception as exc:
            raise PresentationError(f"malformed field {f!r}") from exc
    return PcPresentation(p, n, powers, comms)
