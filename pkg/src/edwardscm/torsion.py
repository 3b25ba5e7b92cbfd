"""2- and 4-torsion of Y^2 = F(X) over F_p.

A curve is of type I when F has exactly one rational root x0, so that
F = (X - x0)(X^2 + C X + D) with an irreducible quadratic, and of type III
when F splits completely.  For type I the quantity D2 = x0^2 + C x0 + D
decides whether rational 4-torsion exists.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field

from . import poly
from .curves import Point, WeierstrassCurve
from .errors import ConsistencyError, InvalidParameterError, SingularCurveError, WrongTypeError
from .field import PrimeField


class TorsionType(str, enum.Enum):
    NONE = "none"
    I = "I"
    III = "III"


@dataclass(frozen=True)
class TwoTorsionReport:
    torsion_type: TorsionType
    roots: tuple[int, ...]
    x0: int | None = None
    C: int | None = None
    D: int | None = None
    D2: int | None = None
    four_torsion: tuple[Point, ...] = dc_field(default=())

    @property
    def complete_edwards(self) -> bool:
        """Unique 2-torsion point plus a point of order 4."""
        return self.torsion_type is TorsionType.I and bool(self.four_torsion)


@dataclass(frozen=True)
class F4Factorization:
    P2: poly.Poly
    P4: poly.Poly
    disc_P2: int
    disc_P4: int
    resultant: int


def f4_polynomial(E: WeierstrassCurve) -> poly.Poly:
    """The 4-division polynomial f4 (monic sextic), low degree first."""
    a2, a4, a6, p = E.a2, E.a4, E.a6, E.p
    return poly.norm(
        (
            4 * a4 * a6 * a2 - a4**3 - 8 * a6**2,
            -4 * a4 * a6 + 8 * a2**2 * a6 - 2 * a2 * a4**2,
            20 * a2 * a6 - 5 * a4**2,
            20 * a6,
            5 * a4,
            2 * a2,
            1,
        ),
        p,
    )


def _type_one_data(E: WeierstrassCurve, x0: int) -> tuple[int, int, int]:
    p = E.p
    # F / (X - x0) = X^2 + (a2 + x0) X + (a4 + x0 (a2 + x0))
    C = (E.a2 + x0) % p
    D = (E.a4 + x0 * C) % p
    D2 = (x0 * x0 + C * x0 + D) % p
    return C, D, D2


def _four_torsion_type_one(field: PrimeField, x0: int, C: int, D2: int) -> list[Point]:
    zs = field.sqrt(D2)
    if zs is None:
        return []
    p = field.p
    z = zs[0]
    out: list[Point] = []
    for x in sorted({(x0 + z) % p, (x0 - z) % p}):
        # y^2 = z^2 (C + 2x); the factor C + 2x decides rationality
        ys = field.sqrt(z * z * (C + 2 * x))
        if ys is None:
            continue
        if out:
            raise ConsistencyError("both roots of P2 gave rational ordinates")
        out.extend([(x, ys[0]), (x, ys[1])])
    if not out:
        raise ConsistencyError("D2 is a square but neither root of P2 lifts")
    return out


def four_torsion_type_three(e1: int, e2: int, e3: int, field) -> list[Point]:
    """Rational points of order 4 on Y^2 = (X - e1)(X - e2)(X - e3).

    Q_e = X^2 - 2e X + e(e' + e'') - e'e'' has discriminant
    4(e - e')(e - e''); its roots are e +- delta/2.
    """
    if isinstance(field, int):
        field = PrimeField(field)
    p = field.p
    es = (e1 % p, e2 % p, e3 % p)
    if len(set(es)) != 3:
        raise InvalidParameterError("type III roots must be distinct")
    i2 = pow(2, -1, p)
    out: set = set()
    for i, e in enumerate(es):
        f, g = es[(i + 1) % 3], es[(i + 2) % 3]
        deltas = field.sqrt(4 * (e - f) * (e - g))
        if deltas is None:
            continue
        for x in {(e + deltas[0] * i2) % p, (e - deltas[0] * i2) % p}:
            ys = field.sqrt((x - e) * (x - f) * (x - g))
            if ys is not None:
                out.add((x, ys[0]))
                out.add((x, ys[1]))
    return sorted(out)


def classify_two_torsion(E: WeierstrassCurve) -> TwoTorsionReport:
    p = E.p
    roots = tuple(poly.distinct_roots(E.cubic(), p))
    if not roots:
        return TwoTorsionReport(TorsionType.NONE, ())
    if len(roots) == 3:
        pts = four_torsion_type_three(*roots, E.field)
        return TwoTorsionReport(TorsionType.III, roots, four_torsion=tuple(pts))
    if len(roots) != 1:
        raise SingularCurveError(f"F has a repeated root on {E}")
    x0 = roots[0]
    C, D, D2 = _type_one_data(E, x0)
    pts = _four_torsion_type_one(E.field, x0, C, D2)
    return TwoTorsionReport(TorsionType.I, roots, x0, C, D, D2, tuple(pts))


def split_f4_type_one(x0: int, C: int, D: int, field) -> F4Factorization:
    """f4 = P2 * P4 for F = (X - x0)(X^2 + C X + D)."""
    if isinstance(field, int):
        field = PrimeField(field)
    p = field.p
    D2 = (x0 * x0 + C * x0 + D) % p
    if (C * C - 4 * D) % p == 0 or D2 == 0:
        raise SingularCurveError("F has a repeated root")
    P2 = poly.norm((-C * x0 - D, -2 * x0, 1), p)
    P4 = poly.norm(
        (
            (4 * D - C * C) * x0 * x0 + D * D,
            -8 * x0 * D + 2 * C * D + 2 * x0 * C * C,
            6 * D,
            2 * C,
            1,
        ),
        p,
    )
    return F4Factorization(
        P2,
        P4,
        poly.discriminant(P2, p),
        poly.discriminant(P4, p),
        poly.resultant(P2, P4, p),
    )


def factorization_pattern(f: poly.Poly, p: int) -> tuple[int, ...]:
    """Degrees of the irreducible factors of a squarefree polynomial."""
    return poly.factor_degrees(f, p)


def swan_parity_check(
    E: WeierstrassCurve, report: TwoTorsionReport | None = None, count: str = "f4"
) -> bool:
    """Check (-1)^{n4} = -(-D2 / p) on a curve with one rational 2-torsion point.

    ``count`` selects what n4 counts: the irreducible factors of f4 (the
    default) or of its quartic factor P4.  Only the P4 reading holds in
    general: Swan's theorem applied to f4 itself gives (-1)^{n4} = -(-1/p),
    which disagrees as soon as D2 is a nonsquare.
    """
    f = E.field
    if f.legendre(E.discriminant()) != -1:
        raise WrongTypeError("parity identity needs a unique rational 2-torsion point")
    report = report or classify_two_torsion(E)
    if count == "f4":
        target = f4_polynomial(E)
    elif count == "P4":
        target = split_f4_type_one(report.x0, report.C, report.D, f).P4
    else:
        raise InvalidParameterError(f"count must be 'f4' or 'P4', got {count!r}")
    n4 = len(poly.factor_degrees(target, f.p))
    return (-1) ** n4 == -f.legendre(-report.D2)


def predict_splitting(D2: int, field) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Factor degrees of (P2, P4) for a type I curve, from (D2/p) and p mod 4."""
    if isinstance(field, int):
        field = PrimeField(field)
    ls = field.legendre(D2)
    if ls == 0:
        raise SingularCurveError("D2 = 0: the curve is singular")
    one_mod_4 = field.p % 4 == 1
    if ls == 1:
        return ((1, 1), (4,) if one_mod_4 else (2, 2))
    return ((2,), (2, 2) if one_mod_4 else (4,))


def has_point_of_order_4(E: WeierstrassCurve) -> bool:
    return bool(classify_two_torsion(E).four_torsion)
