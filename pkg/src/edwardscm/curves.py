"""Weierstrass, Montgomery and twisted Edwards models over F_p.

Affine points are (x, y) tuples of residues; the point at infinity of a
Weierstrass or Montgomery curve is None.  The Edwards identity is (0, 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterator, Optional, Tuple

from . import poly
from .errors import (
    ExceptionalPointError,
    InvalidParameterError,
    NotOnCurveError,
    SingularCurveError,
)
from .field import PrimeField

Point = Optional[Tuple[int, int]]
INF: Point = None


def _check_field(field) -> PrimeField:
    if isinstance(field, int):
        return PrimeField(field)
    return field


@dataclass(frozen=True)
class WeierstrassCurve:
    """Y^2 = X^3 + a2 X^2 + a4 X + a6."""

    field: PrimeField
    a2: int
    a4: int
    a6: int

    def __post_init__(self):
        f = _check_field(self.field)
        object.__setattr__(self, "field", f)
        for name in ("a2", "a4", "a6"):
            object.__setattr__(self, name, getattr(self, name) % f.p)
        if self.discriminant() == 0:
            raise SingularCurveError(f"singular curve {self.coefficients} over F_{f.p}")

    @classmethod
    def short(cls, field, a4: int, a6: int) -> "WeierstrassCurve":
        return cls(field, 0, a4, a6)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return (self.a2, self.a4, self.a6)

    def discriminant(self) -> int:
        a2, a4, a6, p = self.a2, self.a4, self.a6, self.field.p
        return (
            -64 * a6 * a2**3
            + 16 * a4**2 * a2**2
            + 288 * a4 * a6 * a2
            - 64 * a4**3
            - 432 * a6**2
        ) % p

    def j_invariant(self) -> int:
        a2, a4, p = self.a2, self.a4, self.field.p
        c4 = (16 * a2 * a2 - 48 * a4) % p
        return c4**3 * pow(self.discriminant(), -1, p) % p

    def cubic(self) -> poly.Poly:
        """The 2-division polynomial F(X), low degree first."""
        return (self.a6, self.a4, self.a2, 1)

    def rhs(self, x: int) -> int:
        return (((x + self.a2) * x + self.a4) * x + self.a6) % self.field.p

    def contains(self, P: Point) -> bool:
        if P is None:
            return True
        x, y = P
        return (y * y - self.rhs(x)) % self.field.p == 0

    def _check(self, P: Point) -> None:
        if not self.contains(P):
            raise NotOnCurveError(f"{P} is not on {self}")

    def neg(self, P: Point) -> Point:
        if P is None:
            return None
        return (P[0], (-P[1]) % self.field.p)

    def add(self, P: Point, Q: Point) -> Point:
        self._check(P)
        self._check(Q)
        return self._add(P, Q)

    def _add(self, P: Point, Q: Point) -> Point:
        if P is None:
            return Q
        if Q is None:
            return P
        p = self.field.p
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if (y1 + y2) % p == 0:
                return None
            lam = (3 * x1 * x1 + 2 * self.a2 * x1 + self.a4) * pow(2 * y1, -1, p) % p
        else:
            lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
        x3 = (lam * lam - self.a2 - x1 - x2) % p
        y3 = (lam * (x1 - x3) - y1) % p
        return (x3, y3)

    def mul(self, k: int, P: Point) -> Point:
        self._check(P)
        if k < 0:
            k, P = -k, self.neg(P)
        R: Point = None
        while k:
            if k & 1:
                R = self._add(R, P)
            k >>= 1
            if k:
                P = self._add(P, P)
        return R

    def order_of(self, P: Point, bound: int | None = None) -> int:
        """Order of P by repeated addition (small groups only)."""
        self._check(P)
        bound = bound or 2 * self.field.p + 2
        Q, n = P, 1
        while Q is not None:
            Q = self._add(Q, P)
            n += 1
            if n > bound:
                raise ArithmeticError("order exceeds bound")
        return n

    def points(self) -> Iterator[Point]:
        """Every rational point, infinity first.  O(p) square roots."""
        yield None
        f = self.field
        for x in range(f.p):
            rs = f.sqrt(self.rhs(x))
            if rs is None:
                continue
            yield (x, rs[0])
            if rs[1] != rs[0]:
                yield (x, rs[1])

    def quadratic_twist(self, c: int) -> "WeierstrassCurve":
        """Twist by c: Y^2 = X^3 + c a2 X^2 + c^2 a4 X + c^3 a6."""
        return WeierstrassCurve(self.field, c * self.a2, c * c * self.a4, c**3 * self.a6)

    def __str__(self):
        return f"E[{self.a2},{self.a4},{self.a6}]/F_{self.field.p}"


def discriminant(E: WeierstrassCurve) -> int:
    return E.discriminant()


def j_invariant(E: WeierstrassCurve) -> int:
    return E.j_invariant()


def group_law(E: WeierstrassCurve, P: Point, Q: Point) -> Point:
    return E.add(P, Q)


def scalar_mul(E: WeierstrassCurve, k: int, P: Point) -> Point:
    return E.mul(k, P)


@dataclass(frozen=True)
class Isomorphism:
    """(x, y) on target  ->  (u^2 x + r, u^3 y) on source.

    ``forward`` goes source -> target, ``backward`` target -> source.
    """

    source: WeierstrassCurve
    target: WeierstrassCurve
    u: int
    r: int

    def forward(self, P: Point) -> Point:
        if P is None:
            return None
        p = self.source.field.p
        ui = pow(self.u, -1, p)
        x, y = P
        return ((x - self.r) * ui * ui % p, y * ui**3 % p)

    def backward(self, P: Point) -> Point:
        if P is None:
            return None
        p = self.source.field.p
        x, y = P
        return ((self.u * self.u * x + self.r) % p, y * self.u**3 % p)

    def inverse(self) -> "Isomorphism":
        p = self.source.field.p
        ui = pow(self.u, -1, p)
        return Isomorphism(self.target, self.source, ui, (-self.r) * ui * ui % p)


def _satisfies(E: WeierstrassCurve, E2: WeierstrassCurve, u: int, r: int) -> bool:
    p = E.field.p
    u2 = u * u % p
    return (
        (u2 * E2.a2 - E.a2 - 3 * r) % p == 0
        and (u2 * u2 * E2.a4 - E.a4 - 2 * r * E.a2 - 3 * r * r) % p == 0
        and (u2**3 * E2.a6 - E.a6 - r * E.a4 - r * r * E.a2 - r**3) % p == 0
    )


def isomorphisms(E: WeierstrassCurve, E2: WeierstrassCurve) -> list[Isomorphism]:
    """All (u, r) solving the isomorphism system, sorted.

    With s = u^2 the first equation gives r = (s a2' - a2)/3; substituting
    into the other two leaves a quadratic and a cubic in s whose common
    roots are the admissible s.  Each square s != 0 yields u = +-sqrt(s).
    """
    if E.field != E2.field:
        return []
    f = E.field
    p = f.p
    i3 = pow(3, -1, p)
    # r = alpha s + beta
    alpha, beta = E2.a2 * i3 % p, (-E.a2) * i3 % p
    r_poly = poly.norm((beta, alpha), p)
    r2 = poly.mul(r_poly, r_poly, p)
    r3 = poly.mul(r2, r_poly, p)
    # s^2 a4' - (a4 + 2 r a2 + 3 r^2)
    eq2 = poly.sub(
        (0, 0, E2.a4),
        poly.add(poly.add((E.a4,), poly.scale(r_poly, 2 * E.a2, p), p), poly.scale(r2, 3, p), p),
        p,
    )
    eq3 = poly.sub(
        (0, 0, 0, E2.a6),
        poly.add(
            poly.add((E.a6,), poly.scale(r_poly, E.a4, p), p),
            poly.add(poly.scale(r2, E.a2, p), r3, p),
            p,
        ),
        p,
    )
    g = poly.gcd(eq2, eq3, p)
    if not g:
        raise InvalidParameterError("degenerate isomorphism system")
    out = []
    for s in poly.distinct_roots(g, p):
        if s == 0:
            continue
        roots = f.sqrt(s)
        if roots is None:
            continue
        r = (alpha * s + beta) % p
        for u in roots:
            if _satisfies(E, E2, u, r):
                out.append(Isomorphism(E, E2, u, r))
    out.sort(key=lambda iso: (iso.u, iso.r))
    return out


def isomorphism_solve(E: WeierstrassCurve, E2: WeierstrassCurve) -> Isomorphism | None:
    isos = isomorphisms(E, E2)
    return isos[0] if isos else None


@dataclass(frozen=True)
class MontgomeryCurve:
    """B y^2 = x^3 + A x^2 + x."""

    field: PrimeField
    A: int
    B: int

    def __post_init__(self):
        f = _check_field(self.field)
        object.__setattr__(self, "field", f)
        A, B = self.A % f.p, self.B % f.p
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        if B == 0 or A in (2, f.p - 2):
            raise InvalidParameterError(f"invalid Montgomery parameters A={A}, B={B}")

    @property
    def p(self) -> int:
        return self.field.p

    def contains(self, P: Point) -> bool:
        if P is None:
            return True
        x, y = P
        return (self.B * y * y - x * (x * x + self.A * x + 1)) % self.field.p == 0

    def add(self, P: Point, Q: Point) -> Point:
        for R in (P, Q):
            if not self.contains(R):
                raise NotOnCurveError(f"{R} is not on {self}")
        if P is None:
            return Q
        if Q is None:
            return P
        p = self.field.p
        A, B = self.A, self.B
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if (y1 + y2) % p == 0:
                return None
            lam = (3 * x1 * x1 + 2 * A * x1 + 1) * pow(2 * B * y1, -1, p) % p
        else:
            lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
        x3 = (B * lam * lam - A - x1 - x2) % p
        y3 = (lam * (x1 - x3) - y1) % p
        return (x3, y3)

    def points(self) -> Iterator[Point]:
        yield None
        f = self.field
        iB = f.inv(self.B)
        for x in range(f.p):
            rs = f.sqrt(x * (x * x + self.A * x + 1) * iB)
            if rs is None:
                continue
            yield (x, rs[0])
            if rs[1] != rs[0]:
                yield (x, rs[1])

    def j_invariant(self) -> int:
        p, A = self.field.p, self.A
        return 256 * pow(A * A - 3, 3, p) * pow(A * A - 4, -1, p) % p


@dataclass(frozen=True)
class TwistedEdwardsCurve:
    """a x^2 + y^2 = 1 + d x^2 y^2."""

    field: PrimeField
    a: int
    d: int

    def __post_init__(self):
        f = _check_field(self.field)
        object.__setattr__(self, "field", f)
        a, d = self.a % f.p, self.d % f.p
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "d", d)
        if a == 0 or d == 0 or a == d:
            raise InvalidParameterError(f"invalid twisted Edwards parameters a={a}, d={d}")

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def complete(self) -> bool:
        return self.field.legendre(self.a) == 1 and self.field.legendre(self.d) == -1

    @property
    def identity(self) -> tuple[int, int]:
        return (0, 1)

    def contains(self, P) -> bool:
        x, y = P
        x2, y2 = x * x, y * y
        return (self.a * x2 + y2 - 1 - self.d * x2 * y2) % self.field.p == 0

    def neg(self, P):
        return ((-P[0]) % self.field.p, P[1])

    def add(self, P, Q):
        for R in (P, Q):
            if not self.contains(R):
                raise NotOnCurveError(f"{R} is not on {self}")
        p = self.field.p
        x1, y1 = P
        x2, y2 = Q
        t = self.d * x1 * x2 * y1 * y2 % p
        den_x, den_y = (1 + t) % p, (1 - t) % p
        if den_x == 0 or den_y == 0:
            raise ExceptionalPointError(f"exceptional pair {P}, {Q} on {self}")
        x3 = (x1 * y2 + x2 * y1) * pow(den_x, -1, p) % p
        y3 = (y1 * y2 - self.a * x1 * x2) * pow(den_y, -1, p) % p
        return (x3, y3)

    def mul(self, k: int, P):
        if k < 0:
            k, P = -k, self.neg(P)
        R = self.identity
        while k:
            if k & 1:
                R = self.add(R, P)
            k >>= 1
            if k:
                P = self.add(P, P)
        return R

    def affine_points(self) -> Iterator[tuple[int, int]]:
        f = self.field
        p = f.p
        for x in range(p):
            x2 = x * x % p
            den = (1 - self.d * x2) % p
            if den == 0:
                continue
            rs = f.sqrt((1 - self.a * x2) * pow(den, -1, p))
            if rs is None:
                continue
            yield (x, rs[0])
            if rs[1] != rs[0]:
                yield (x, rs[1])

    def j_invariant(self) -> int:
        return twisted_edwards_j(self.a, self.d, self.field)


def edwards_add(C: TwistedEdwardsCurve, P, Q):
    return C.add(P, Q)


def twisted_edwards_j(a: int, d: int, field) -> int:
    """16 (a^2 + 14 a d + d^2)^3 / (a d (a - d)^4)."""
    f = _check_field(field)
    p = f.p
    den = a * d * pow(a - d, 4, p) % p
    if den == 0:
        raise InvalidParameterError("twisted Edwards j undefined for a d (a - d) = 0")
    return 16 * pow(a * a + 14 * a * d + d * d, 3, p) * pow(den, -1, p) % p


@dataclass(frozen=True)
class CurveMap:
    """A birational map given by explicit forward and backward point maps."""

    source: object
    target: object
    forward: Callable = dc_field(repr=False)
    backward: Callable = dc_field(repr=False)


def montgomery_to_weierstrass(M: MontgomeryCurve) -> tuple[WeierstrassCurve, CurveMap]:
    """Scale by B: (x, y) -> (x/B, y/B) onto Y^2 = X^3 + (A/B) X^2 + X/B^2."""
    f, p = M.field, M.field.p
    iB = f.inv(M.B)
    E = WeierstrassCurve(f, M.A * iB, iB * iB, 0)

    def fwd(P: Point) -> Point:
        if P is None:
            return None
        return (P[0] * iB % p, P[1] * iB % p)

    def bwd(P: Point) -> Point:
        if P is None:
            return None
        return (P[0] * M.B % p, P[1] * M.B % p)

    return E, CurveMap(M, E, fwd, bwd)


def montgomery_to_twisted_edwards(M: MontgomeryCurve) -> tuple[TwistedEdwardsCurve, CurveMap]:
    """a = (A+2)/B, d = (A-2)/B, (x, y) -> (x/y, (x-1)/(x+1)).

    The maps raise ExceptionalPointError on y = 0 or x = -1 (and on the
    Edwards side on v = 1 or u = 0); infinity maps to the identity.
    """
    f, p = M.field, M.field.p
    iB = f.inv(M.B)
    C = TwistedEdwardsCurve(f, (M.A + 2) * iB, (M.A - 2) * iB)

    def fwd(P: Point):
        if P is None:
            return (0, 1)
        x, y = P
        if y == 0 or (x + 1) % p == 0:
            raise ExceptionalPointError(f"{P} is exceptional for the Edwards map")
        return (x * pow(y, -1, p) % p, (x - 1) * pow(x + 1, -1, p) % p)

    def bwd(Q) -> Point:
        u, v = Q
        if (u, v) == (0, 1):
            return None
        if u == 0 or (1 - v) % p == 0:
            raise ExceptionalPointError(f"{Q} is exceptional for the Montgomery map")
        x = (1 + v) * pow(1 - v, -1, p) % p
        return (x, x * pow(u, -1, p) % p)

    return C, CurveMap(M, C, fwd, bwd)


def has_point_of_order_4(E: WeierstrassCurve) -> bool:
    """True iff E(F_p) has a point of order exactly 4."""
    from .torsion import classify_two_torsion

    return bool(classify_two_torsion(E).four_torsion)
