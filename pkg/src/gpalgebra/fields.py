"""Exact scalars: arbitrary-precision rationals and prime residue fields.

Rational scalars are ``fractions.Fraction`` values (always reduced, positive
denominator).  Prime-field scalars are ``Fp`` residues kept in ``[0, p)``.
Both support ``+ - * /`` with exact results, so the linear algebra layer never
needs to know which field it is working over.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

MAX_PRIME = 2**31


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the 2**31 cap."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Fp:
    """Residue modulo a prime p, stored in [0, p).

    Integers mix freely in arithmetic and comparisons; two residues only
    interact when their moduli agree.
    """

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other.v
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return Fp(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return Fp(self.v - w, self.p)

    def __rsub__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return Fp(w - self.v, self.p)

    def __mul__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return Fp(self.v * w, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return Fp(self.v * pow(w, -1, self.p), self.p)

    def __rtruediv__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return Fp(w * pow(self.v, -1, self.p), self.p)

    def __pow__(self, e: int):
        if e < 0:
            return Fp(pow(pow(self.v, -1, self.p), -e, self.p), self.p)
        return Fp(pow(self.v, e, self.p), self.p)

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class Field:
    """Ground field descriptor: characteristic 0 means the rationals."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p == 0:
            return
        if p >= MAX_PRIME or not is_prime(p):
            raise ValueError(f"characteristic must be 0 or a prime below 2**31, got {p}")

    @property
    def kind(self) -> str:
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"

    @property
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else Fp(0, self.characteristic)

    @property
    def one(self):
        return Fraction(1) if self.characteristic == 0 else Fp(1, self.characteristic)

    def scalar(self, x):
        """Coerce an int, Fraction, Fp or literal string to a canonical scalar."""
        p = self.characteristic
        if p == 0:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
            if isinstance(x, str):
                return Fraction(x)
        else:
            if isinstance(x, Fp):
                if x.p != p:
                    raise ValueError(f"residue mod {x.p} in field of characteristic {p}")
                return x
            if isinstance(x, int):
                return Fp(x, p)
            if isinstance(x, Fraction):
                return Fp(x.numerator, p) / Fp(x.denominator, p)
            if isinstance(x, str):
                return self.scalar(Fraction(x))
        raise TypeError(f"cannot coerce {x!r} into {self.kind}")

    def parse(self, token: str):
        """Parse an exact literal: an integer or ``a/b``."""
        return self.scalar(Fraction(token))

    def format(self, s) -> str:
        return str(s)

    def sort_key(self, s):
        return s if self.characteristic == 0 else s.v

    def __str__(self):
        return self.kind


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)
