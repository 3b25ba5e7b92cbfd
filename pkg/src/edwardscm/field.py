"""Prime field arithmetic.

Field elements are plain ints holding the canonical residue in [0, p-1];
the PrimeField instance carried by each curve supplies the modulus.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import gmpy2

from . import poly
from .errors import InvalidParameterError


def is_prime(n: int) -> bool:
    return n >= 2 and bool(gmpy2.is_prime(n, 50))


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) >> 1, p) == 1 else -1


def kronecker(a: int, n: int) -> int:
    return int(gmpy2.kronecker(a, n))


@lru_cache(maxsize=None)
def _nonresidue(p: int) -> int:
    z = 2
    while legendre(z, p) != -1:
        z += 1
    return z


def sqrt_mod(a: int, p: int) -> int | None:
    """One square root of a mod an odd prime p (Tonelli-Shanks), or None."""
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) >> 2, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q >>= 1
        s += 1
    z = _nonresidue(p)
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) >> 1, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        p = self.p
        if not isinstance(p, int) or p <= 3 or not is_prime(p):
            raise InvalidParameterError(f"p must be a prime > 3, got {p!r}")

    def __call__(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.p)
        return pow(a, -1, self.p)

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def legendre(self, a: int) -> int:
        return legendre(a, self.p)

    def is_square(self, a: int) -> bool:
        return legendre(a, self.p) >= 0

    def sqrt(self, a: int) -> tuple[int, int] | None:
        """Both square roots, smaller residue first, or None for a nonresidue."""
        r = sqrt_mod(a, self.p)
        if r is None:
            return None
        s = (-r) % self.p
        return (r, s) if r <= s else (s, r)

    def nonresidue(self) -> int:
        return _nonresidue(self.p)

    def poly_roots(self, f) -> list[int]:
        """Roots of f (coefficients low to high) with multiplicity, ascending."""
        return poly.roots(f, self.p)


def poly_roots(f, field: PrimeField) -> list[int]:
    return field.poly_roots(f)
