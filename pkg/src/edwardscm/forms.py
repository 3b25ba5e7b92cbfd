"""Parameterized models: curves from j, the X0(2) and X0(4) parameters,
Montgomery recovery and the Kubert / Edwards correspondence.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import poly
from .curves import (
    CurveMap,
    Isomorphism,
    MontgomeryCurve,
    Point,
    TwistedEdwardsCurve,
    WeierstrassCurve,
    isomorphisms,
    montgomery_to_twisted_edwards,
)
from .errors import (
    ConsistencyError,
    ExceptionalPointError,
    InvalidParameterError,
    SpecialJError,
    WrongTypeError,
)
from .field import PrimeField
from .torsion import TorsionType, TwoTorsionReport, classify_two_torsion


def _field(field) -> PrimeField:
    return PrimeField(field) if isinstance(field, int) else field


def curve_from_j(j: int, c: int, field) -> WeierstrassCurve:
    """Y^2 = X^3 + 3j/(1728-j) c^2 X + 2j/(1728-j) c^3."""
    f = _field(field)
    p = f.p
    j %= p
    if j in (0, 1728 % p):
        raise SpecialJError(f"special j-invariant {j} (j = 0 or 1728 mod {p}) needs an explicit model")
    if c % p == 0:
        raise InvalidParameterError("twist scale c must be nonzero")
    k = j * pow(1728 - j, -1, p) % p
    return WeierstrassCurve(f, 0, 3 * k * c * c, 2 * k * c**3)


def u_from_j(j: int, field) -> list[int]:
    """Roots u of (u + 16)^3 - j u, ascending."""
    f = _field(field)
    p = f.p
    return poly.distinct_roots(poly.norm((4096, 768 - j, 48, 1), p), p)


def j_from_u(u: int, field) -> int:
    p = _field(field).p
    return pow(u + 16, 3, p) * pow(u, -1, p) % p


@dataclass(frozen=True)
class X02Param:
    field: PrimeField
    u: int
    c: int = 1

    def __post_init__(self):
        f = _field(self.field)
        object.__setattr__(self, "field", f)
        p = f.p
        u, c = self.u % p, self.c % p
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "c", c)
        # u = -16 gives j = 0, u = 8 or -64 gives j = 1728
        if u in (0, 8, (-64) % p, (-16) % p) or c == 0:
            raise InvalidParameterError(f"invalid X0(2) parameter u={u}, c={c}")

    @property
    def j(self) -> int:
        return j_from_u(self.u, self.field)

    def curve(self) -> WeierstrassCurve:
        return curve_from_j(self.j, self.c, self.field)


@dataclass(frozen=True)
class X04Param:
    field: PrimeField
    w: int

    def __post_init__(self):
        f = _field(self.field)
        object.__setattr__(self, "field", f)
        w = self.w % f.p
        object.__setattr__(self, "w", w)
        if w in (0, (-16) % f.p):
            raise InvalidParameterError(f"invalid X0(4) parameter w={w}")

    @property
    def b(self) -> int:
        return pow(self.w, -1, self.field.p)

    @property
    def j(self) -> int:
        p, w = self.field.p, self.w
        return pow(w * w + 16 * w + 16, 3, p) * pow(w * (16 + w), -1, p) % p


@dataclass(frozen=True)
class MontgomeryMap:
    """X = scale x + shift, Y = scale^2 y, where B = scale.

    Relates Y^2 = F(X) on ``weierstrass`` to B y^2 = x^3 + A x^2 + x.
    """

    weierstrass: WeierstrassCurve
    montgomery: MontgomeryCurve
    scale: int
    shift: int

    def to_montgomery(self, P: Point) -> Point:
        if P is None:
            return None
        p = self.weierstrass.p
        si = pow(self.scale, -1, p)
        return ((P[0] - self.shift) * si % p, P[1] * si * si % p)

    def to_weierstrass(self, P: Point) -> Point:
        if P is None:
            return None
        p = self.weierstrass.p
        s = self.scale
        return ((s * P[0] + self.shift) % p, s * s * P[1] % p)


def _montgomery_at(E: WeierstrassCurve, x0: int, s: int) -> tuple[MontgomeryCurve, MontgomeryMap]:
    # F(X + x0) = X (X^2 + c2 X + c1) with c1 = s^2
    p = E.p
    c2 = (3 * x0 + E.a2) % p
    M = MontgomeryCurve(E.field, c2 * pow(s, -1, p), s)
    return M, MontgomeryMap(E, M, s, x0)


def montgomery_from_u(param: X02Param) -> tuple[MontgomeryCurve, MontgomeryMap] | None:
    """Montgomery form of curve_from_j(j(u), c) when u + 64 = v^2.

    A = -v/4 and B = k = 12 c (u+16) / ((u-8) v), reached by the shift
    X = X' - c(u+16)/(u-8) followed by X' = k X''.
    """
    f = param.field
    vs = f.sqrt(param.u + 64)
    if vs is None:
        return None
    return montgomery_from_u_with_root(param, vs[0])


def montgomery_from_u_with_root(param: X02Param, v: int) -> tuple[MontgomeryCurve, MontgomeryMap]:
    f = param.field
    p = f.p
    u, c = param.u, param.c
    if (v * v - u - 64) % p:
        raise InvalidParameterError("v^2 != u + 64")
    E = param.curve()
    root = (-c * (u + 16)) * pow(u - 8, -1, p) % p
    if E.rhs(root) != 0:
        raise ConsistencyError("shifted cubic has no root at -c(u+16)/(u-8)")
    k = 12 * c * (u + 16) * pow((u - 8) * v, -1, p) % p
    A = (-v) * pow(4, -1, p) % p
    M = MontgomeryCurve(f, A, k)
    return M, MontgomeryMap(E, M, k, root)


def montgomery_from_j(j: int, c: int, field) -> tuple[MontgomeryCurve, MontgomeryMap] | None:
    """Try every X0(2) parameter of j, those with u + 64 square first."""
    f = _field(field)
    if j % f.p in (0, 1728 % f.p):
        raise SpecialJError(f"special j-invariant {j % f.p} has no X0(2) parameterization here")
    us = [u for u in u_from_j(j, f) if u not in (0, 8, f.p - 64, f.p - 16)]
    us.sort(key=lambda u: (f.legendre(u + 64) != 1, u))
    for u in us:
        out = montgomery_from_u(X02Param(f, u, c))
        if out is not None:
            return out
    return None


def d2_from_u(u: int, c: int, field) -> int:
    """D2 of curve_from_j(j(u), c) at its root -c(u+16)/(u-8)."""
    p = _field(field).p
    return 144 * c * c * (u + 16) ** 2 * pow((u + 64) * (u - 8) ** 2, -1, p) % p


def montgomery_from_type_one(
    E: WeierstrassCurve, report: TwoTorsionReport | None = None
) -> tuple[MontgomeryCurve, MontgomeryMap] | None:
    """Montgomery form through a rational 2-torsion point (x0, 0).

    Shifting x0 to 0 gives y^2 = x (x^2 + c2 x + c1); a Montgomery model
    exists through x0 iff c1 = F'(x0) is a square s^2, and then B = s,
    A = c2 / s.  Roots are tried in ascending order.
    """
    report = report or classify_two_torsion(E)
    if report.torsion_type is TorsionType.NONE:
        return None
    f = E.field
    for x0 in report.roots:
        c1 = (3 * x0 * x0 + 2 * E.a2 * x0 + E.a4) % f.p
        ss = f.sqrt(c1)
        if ss is not None:
            return _montgomery_at(E, x0, ss[0])
    return None


@dataclass(frozen=True)
class KubertCurve:
    """Y^2 = (X - 4b)(X^2 + X - 4b)."""

    field: PrimeField
    b: int

    def __post_init__(self):
        f = _field(self.field)
        object.__setattr__(self, "field", f)
        b = self.b % f.p
        object.__setattr__(self, "b", b)
        if b == 0 or (16 * b + 1) % f.p == 0:
            raise InvalidParameterError(f"degenerate Kubert parameter b={b}")

    def weierstrass(self) -> WeierstrassCurve:
        b = self.b
        return WeierstrassCurve(self.field, 1 - 4 * b, -8 * b, 16 * b * b)

    def j_invariant(self) -> int:
        p, b = self.field.p, self.b
        return pow(16 * b * b + 16 * b + 1, 3, p) * pow(pow(b, 4, p) * (16 * b + 1), -1, p) % p


def kubert_curve(b: int, field) -> WeierstrassCurve:
    return KubertCurve(_field(field), b).weierstrass()


def kubert_from_type_one(
    E: WeierstrassCurve, report: TwoTorsionReport | None = None
) -> tuple[int, Isomorphism]:
    """Kubert parameter b with E isomorphic to EK_b, plus the isomorphism.

    With z^2 = D2 and u^2 = C + 2(x0 +- z) (whichever sign gives a square),
    the candidates are b = -+z / (4 u^2) and b = -(+-7z + 8x0 + 4C) / (4 u^2);
    the one admitting an isomorphism with r = ((1-4b) u^2 + x0 - C)/3 wins.
    """
    report = report or classify_two_torsion(E)
    f = E.field
    p = f.p
    if report.torsion_type is not TorsionType.I:
        raise WrongTypeError(f"{E} is not of type I")
    zs = f.sqrt(report.D2)
    if zs is None:
        raise WrongTypeError("D2 is not a square: no rational 4-torsion")
    z = zs[0]
    x0, C = report.x0, report.C
    i3, i4 = pow(3, -1, p), pow(4, -1, p)
    for sign in (1, -1):
        u2 = (C + 2 * (x0 + sign * z)) % p
        if f.legendre(u2) != 1:
            continue
        i4u2 = i4 * pow(u2, -1, p)
        candidates = [(-sign * z) * i4u2 % p, -(sign * 7 * z + 8 * x0 + 4 * C) * i4u2 % p]
        for b in candidates:
            if b == 0 or (16 * b + 1) % p == 0:
                continue
            r = ((1 - 4 * b) * u2 + x0 - C) * i3 % p
            for iso in isomorphisms(E, kubert_curve(b, f)):
                if iso.r == r and iso.u * iso.u % p == u2:
                    return b, iso
    raise ConsistencyError(f"no Kubert candidate validates for {E}")


def _kubert_to_edwards(b: int, f: PrimeField):
    # EK_b -> Montgomery through (4b, 0) with s = 4b: A = (8b+1)/(4b), B = 4b
    p = f.p
    K = kubert_curve(b, f)
    M, mmap = _montgomery_at(K, 4 * b % p, 4 * b % p)
    C1, emap = montgomery_to_twisted_edwards(M)
    return K, mmap, emap


def edwards_from_kubert(b: int, field) -> tuple[TwistedEdwardsCurve, CurveMap]:
    """Edwards curve x^2 + y^2 = 1 + (16b+1) x^2 y^2 birational to EK_b.

    The map runs EK_b -> Montgomery -> twisted Edwards with
    (a, d) = ((16b+1)/(16b^2), 1/(16b^2)), rescales x by 1/(4b) and swaps
    a and d through y -> 1/y.
    """
    f = _field(field)
    p = f.p
    KubertCurve(f, b)
    b %= p
    K, mmap, emap = _kubert_to_edwards(b, f)
    C = TwistedEdwardsCurve(f, 1, 16 * b + 1)
    i4b = pow(4 * b, -1, p)

    def fwd(P: Point):
        x, y = emap.forward(mmap.to_montgomery(P))
        if y == 0:
            raise ExceptionalPointError(f"{P} is exceptional for the Edwards map")
        return (x * i4b % p, pow(y, -1, p))

    def bwd(Q) -> Point:
        x, y = Q
        if y == 0:
            raise ExceptionalPointError(f"{Q} is exceptional for the Kubert map")
        return mmap.to_weierstrass(emap.backward((4 * b * x % p, pow(y, -1, p))))

    return C, CurveMap(K, C, fwd, bwd)


def w_param_bridge(w: int, field) -> tuple[int, int]:
    """u = w^2 + 16 w and v = w + 8, so that v^2 = u + 64."""
    param = X04Param(_field(field), w)
    p = param.field.p
    u = (param.w * param.w + 16 * param.w) % p
    if u == (-64) % p:
        raise InvalidParameterError("w = -8 gives u = -64 (j = 1728)")
    return u, (param.w + 8) % p
