"""Exact arithmetic in the cyclotomic ring Z[zeta_m] for prime-power m.

Values are integer coefficient vectors over the power basis 1, zeta, ...,
zeta^{m-1}, kept in canonical reduced form: for m = p^k the relation
Phi_m(zeta) = sum_{i<p} zeta^{i p^{k-1}} = 0 clears all coefficients at
exponents >= (p-1)p^{k-1}.  Exponents of finite p-groups are always prime
powers, so this covers every character value the package produces.
"""

from __future__ import annotations


def _prime_power_split(m: int) -> tuple[int, int]:
    """(p, k) with m = p^k, for m >= 1 a prime power (p=1 for m=1)."""
    if m == 1:
        return 1, 0
    p = None
    for q in range(2, m + 1):
        if m % q == 0:
            p = q
            break
    k = 0
    t = m
    while t > 1:
        if t % p:
            raise ValueError(f"modulus {m} is not a prime power")
        t //= p
        k += 1
    return p, k


class Cyc:
    """An element of Z[zeta_m], m a prime power."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        self.m = int(m)
        c = list(int(x) for x in coeffs)
        if len(c) != self.m:
            raise ValueError(f"need {self.m} coefficients, got {len(c)}")
        p, k = _prime_power_split(self.m)
        if k > 0:
            step = self.m // p          # p^{k-1}
            top = (p - 1) * step        # degree of Phi_m
            for e in range(top, self.m):
                a = c[e]
                if a:
                    c[e] = 0
                    r = e - top
                    for i in range(p - 1):
                        c[r + i * step] -= a
        self.coeffs = tuple(c)

    @classmethod
    def integer(cls, m: int, value: int) -> "Cyc":
        c = [0] * m
        c[0] = int(value)
        return cls(m, c)

    @classmethod
    def root(cls, m: int, e: int) -> "Cyc":
        """zeta_m^e."""
        c = [0] * m
        c[e % m] = 1
        return cls(m, c)

    def __add__(self, other):
        other = self._coerce(other)
        return Cyc(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        other = self._coerce(other)
        return Cyc(self.m, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return Cyc(self.m, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyc(self.m, [a * other for a in self.coeffs])
        other = self._coerce(other)
        m = self.m
        out = [0] * m
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[(i + j) % m] += a * b
        return Cyc(m, out)

    __radd__ = __add__
    __rmul__ = __mul__

    def _coerce(self, other) -> "Cyc":
        if isinstance(other, Cyc):
            if other.m != self.m:
                raise ValueError("mixed cyclotomic moduli")
            return other
        if isinstance(other, int):
            return Cyc.integer(self.m, other)
        raise TypeError(f"cannot combine Cyc with {type(other).__name__}")

    def galois(self, t: int) -> "Cyc":
        """Image under zeta -> zeta^t (a ring map for gcd(t, m) = 1)."""
        out = [0] * self.m
        for e, a in enumerate(self.coeffs):
            if a:
                out[(e * t) % self.m] += a
        return Cyc(self.m, out)

    def conjugate(self) -> "Cyc":
        return self.galois(self.m - 1) if self.m > 1 else self

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_integer and self.coeffs[0] == other
        return isinstance(other, Cyc) and self.m == other.m \
            and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def __repr__(self):
        if self.is_integer:
            return f"Cyc({self.m}, {self.coeffs[0]})"
        terms = [f"{a}*z^{e}" for e, a in enumerate(self.coeffs) if a]
        return f"Cyc({self.m}: " + " + ".join(terms) + ")"
