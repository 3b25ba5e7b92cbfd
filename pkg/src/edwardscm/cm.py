"""Finite-field CM data: Frobenius discriminants, the classification table,
class numbers, genus characters and the floor count of the 2-volcano.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np

from .curves import WeierstrassCurve
from .errors import InvalidParameterError, ResourceLimitError, UnsupportedCurveError
from .field import PrimeField, is_prime, kronecker, legendre
from .torsion import TorsionType, classify_two_torsion

# naive O(p) counting; the numpy tables are about 10 bytes per residue
COUNT_BOUND = 10**7


@lru_cache(maxsize=8)
def _chi_table(p: int) -> np.ndarray:
    """chi[a] = 1 + (a/p), i.e. the number of y with y^2 = a."""
    chi = np.zeros(p, dtype=np.int64)
    x = np.arange(1, p, dtype=np.int64)
    chi[(x * x) % p] = 2
    chi[0] = 1
    return chi


@lru_cache(maxsize=8)
def _xs(p: int) -> np.ndarray:
    return np.arange(p, dtype=np.int64)


def count_points(E: WeierstrassCurve) -> int:
    """|E(F_p)| = p + 1 + sum_x (F(x)/p), by direct summation."""
    p = E.p
    if p > COUNT_BOUND:
        raise ResourceLimitError(f"p = {p} exceeds the counting bound {COUNT_BOUND}")
    x = _xs(p)
    fx = (((x + E.a2) % p * x + E.a4) % p * x + E.a6) % p
    return int(_chi_table(p)[fx].sum()) + 1


def trace_of_frobenius(E: WeierstrassCurve) -> int:
    return E.p + 1 - count_points(E)


def _squarefree_split(n: int) -> tuple[int, int]:
    """n = s^2 m with m squarefree; returns (s, m).  Trial division."""
    s, m = 1, 1
    q = 2
    while q * q <= n:
        e = 0
        while n % q == 0:
            n //= q
            e += 1
        s *= q ** (e // 2)
        if e % 2:
            m *= q
        q += 1 if q == 2 else 2
    return s, m * n


def fundamental_decomposition(d: int) -> tuple[int, int]:
    """Write a negative discriminant d = V^2 D_K with D_K fundamental."""
    if d >= 0 or d % 4 not in (0, 1):
        raise InvalidParameterError(f"{d} is not a negative discriminant")
    s, m = _squarefree_split(-d)
    if (-m) % 4 == 1:
        return s, -m
    return s // 2, -4 * m


def is_fundamental(D: int) -> bool:
    return D < 0 and D % 4 in (0, 1) and fundamental_decomposition(D)[0] == 1


@dataclass(frozen=True)
class FrobeniusData:
    p: int
    order: int
    U: int
    disc_pi: int
    V: int
    D_K: int

    @property
    def two_valuation(self) -> int:
        """n with 2^n || V: the depth of the 2-volcano floor."""
        v, n = self.V, 0
        while v % 2 == 0:
            v //= 2
            n += 1
        return n


def frobenius_data(E: WeierstrassCurve) -> FrobeniusData:
    p = E.p
    order = count_points(E)
    U = p + 1 - order
    if U % p == 0:
        raise UnsupportedCurveError(f"{E} is supersingular")
    d = U * U - 4 * p
    V, D_K = fundamental_decomposition(d)
    return FrobeniusData(p, order, U, d, V, D_K)


class Montgomery(str, enum.Enum):
    YES = "yes"
    NO = "no"
    UNDETERMINED = "undetermined"


class Edwards(str, enum.Enum):
    COMPLETE = "complete"
    TWISTED_NOT_COMPLETE = "twisted_not_complete"
    NONE = "none"
    TWISTED_AT_BEST = "twisted_at_best"


@dataclass(frozen=True)
class CMClassification:
    D: int
    V_parity: str | None
    predicted_torsion: TorsionType
    montgomery: Montgomery
    edwards: Edwards


def classify_cm_predict(D: int, V_parity: str | None) -> CMClassification:
    """Row of the reduction table for an order of discriminant D.

    ``V_parity`` is "even" or "odd"; it is ignored when D = 1 mod 8.
    """
    if D >= 0 or D % 4 not in (0, 1):
        raise InvalidParameterError(f"{D} is not a negative discriminant")
    if V_parity not in ("even", "odd", None):
        raise InvalidParameterError(f"V parity must be 'even' or 'odd', got {V_parity!r}")
    if D % 8 == 1:
        return CMClassification(D, V_parity, TorsionType.III, Montgomery.YES, Edwards.TWISTED_NOT_COMPLETE)
    if V_parity is None:
        raise InvalidParameterError(f"D = {D} needs the parity of V")
    even = V_parity == "even"
    if D % 8 == 5:
        if even:
            return CMClassification(D, V_parity, TorsionType.III, Montgomery.YES, Edwards.TWISTED_NOT_COMPLETE)
        return CMClassification(D, V_parity, TorsionType.NONE, Montgomery.NO, Edwards.NONE)
    if D % 16 in (0, 4):
        if even:
            return CMClassification(D, V_parity, TorsionType.III, Montgomery.YES, Edwards.TWISTED_NOT_COMPLETE)
        return CMClassification(D, V_parity, TorsionType.I, Montgomery.YES, Edwards.COMPLETE)
    if even:
        return CMClassification(D, V_parity, TorsionType.III, Montgomery.UNDETERMINED, Edwards.TWISTED_AT_BEST)
    return CMClassification(D, V_parity, TorsionType.I, Montgomery.NO, Edwards.NONE)


@dataclass(frozen=True, order=True)
class QuadraticForm:
    """A x^2 + B x y + C y^2."""

    A: int
    B: int
    C: int

    @property
    def discriminant(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    def is_reduced(self) -> bool:
        A, B, C = self.A, self.B, self.C
        if not (abs(B) <= A <= C):
            return False
        return B >= 0 if (abs(B) == A or A == C) else True

    def is_primitive(self) -> bool:
        return math.gcd(math.gcd(self.A, self.B), self.C) == 1

    def __call__(self, x: int, y: int) -> int:
        return self.A * x * x + self.B * x * y + self.C * y * y


def reduced_forms(D: int) -> list[QuadraticForm]:
    """Reduced primitive positive definite forms of discriminant D."""
    if D >= 0 or D % 4 not in (0, 1):
        raise InvalidParameterError(f"{D} is not a negative discriminant")
    out = []
    a_max = math.isqrt(-D // 3)
    for A in range(1, a_max + 1):
        for B in range(-A + 1, A + 1):
            if (B * B - D) % (4 * A):
                continue
            C = (B * B - D) // (4 * A)
            f = QuadraticForm(A, B, C)
            if f.is_reduced() and f.is_primitive():
                out.append(f)
    return out


def class_number(D: int) -> int:
    return len(reduced_forms(D))


def principal_form(D: int) -> QuadraticForm:
    k = D % 2
    return QuadraticForm(1, k, (k - D) // 4)


@dataclass(frozen=True)
class GenusCharacters:
    D: int
    p: int
    values: dict = dc_field(default_factory=dict)

    @property
    def principal(self) -> bool:
        return all(v == 1 for v in self.values.values())


def _odd_prime_divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    while n % 2 == 0:
        n //= 2
    q = 3
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 2
    if n > 1:
        out.append(n)
    return out


def generic_characters(D: int, p: int) -> GenusCharacters:
    """Values of the generic characters of D at p."""
    if D >= 0 or D % 4 not in (0, 1):
        raise InvalidParameterError(f"{D} is not a negative discriminant")
    if math.gcd(p, 2 * D) != 1:
        raise InvalidParameterError(f"gcd({p}, 2D) != 1")
    values = {}
    for q in _odd_prime_divisors(D):
        values[f"({p}/{q})"] = legendre(p, q)
    if D % 2 == 0:
        chi4 = 1 if p % 4 == 1 else -1
        chi8 = 1 if p % 8 in (1, 7) else -1
        r = (D // 4) % 8
        if r in (3, 4, 7):
            values["chi4"] = chi4
        elif r == 2:
            values["chi8"] = chi8
        elif r == 6:
            values["chi4*chi8"] = chi4 * chi8
        elif r == 0:
            values["chi4"] = chi4
            values["chi8"] = chi8
    return GenusCharacters(D, p, values)


def volcano_level(E: WeierstrassCurve, frob: FrobeniusData | None = None) -> tuple[int, int]:
    """(level, n): level of E in its 2-volcano, counted from the crater,
    and n = v2(V), the level of the floor.

    The level is n minus the 2-isogeny distance from E to the floor, found
    by breadth-first search.  For n >= 1 the floor curves are exactly the
    curves with a single rational 2-torsion point.
    """
    from .isogeny import two_isogenous

    frob = frob or frobenius_data(E)
    n = frob.two_valuation
    if n == 0:
        return 0, 0
    seen = {E.j_invariant()}
    queue = deque([(E, 0)])
    while queue:
        curve, dist = queue.popleft()
        steps = two_isogenous(curve)
        if len(steps) == 1:
            if dist > n:
                raise AssertionError(f"floor of {E} further than n = {n}")
            return n - dist, n
        for step in steps:
            j = step.target.j_invariant()
            if j not in seen:
                seen.add(j)
                queue.append((step.target, dist + 1))
    raise AssertionError(f"no floor curve found from {E}")


def order_discriminant(frob: FrobeniusData, level: int) -> tuple[int, str]:
    """(D, parity of V) for the order at ``level`` of the 2-volcano.

    Only the 2-part of the conductor is tracked: the odd part changes
    neither D mod 16 nor the parity of V.
    """
    D = 4**level * frob.D_K
    v_over = frob.V >> level
    return D, "even" if v_over % 2 == 0 else "odd"


def curves_for_j(j: int, field: PrimeField) -> list[WeierstrassCurve]:
    """One curve per F_p-isomorphism class with invariant j."""
    from .forms import curve_from_j

    p = field.p
    if j not in (0, 1728 % p):
        E = curve_from_j(j, 1, field)
        return [E, E.quadratic_twist(field.nonresidue())]
    out, traces = [], set()
    for c in range(1, p):
        E = WeierstrassCurve(field, 0, 0, c) if j == 0 else WeierstrassCurve(field, 0, c, 0)
        # twists of j = 0 or 1728 with equal trace are isomorphic
        t = trace_of_frobenius(E)
        if t not in traces:
            traces.add(t)
            out.append(E)
    return out


def isomorphism_classes(field) -> list[WeierstrassCurve]:
    """A short Weierstrass representative of every isomorphism class over F_p.

    Supersingular j = 0, 1728 classes sharing trace 0 are collapsed.
    """
    if isinstance(field, int):
        field = PrimeField(field)
    out = []
    for j in range(field.p):
        out.extend(curves_for_j(j, field))
    return out


def complete_edwards_invariant_count(D_K: int, n: int) -> int:
    """2^(n-1) (2 - (D_K/2)) h(D_K) for n >= 1."""
    return 2 ** (n - 1) * (2 - kronecker(D_K, 2)) * class_number(D_K)


def count_complete_edwards_invariants(p: int, t: int) -> tuple[int, int]:
    """(predicted, observed) number of complete-Edwards j-invariants for trace +-t.

    Writes t^2 - 4p = V^2 D_K with 2^n || V; the prediction needs n >= 1.
    Observed counts distinct j over all curves of trace t or -t with a
    unique rational 2-torsion point and a rational point of order 4.
    """
    if not is_prime(p) or p <= 3:
        raise InvalidParameterError(f"p must be a prime > 3, got {p}")
    if p > COUNT_BOUND // 100:
        raise ResourceLimitError(f"exhaustive enumeration over F_{p} is too large")
    if t % p == 0 or t * t >= 4 * p:
        raise InvalidParameterError(f"trace {t} is not an ordinary trace for p = {p}")
    V, D_K = fundamental_decomposition(t * t - 4 * p)
    n = (V & -V).bit_length() - 1
    if n < 1:
        raise InvalidParameterError(f"t = {t}: V = {V} is odd, so the 2-volcano has no floor below the crater")
    predicted = complete_edwards_invariant_count(D_K, n)
    field = PrimeField(p)
    found = set()
    for E in isomorphism_classes(field):
        if abs(trace_of_frobenius(E)) != abs(t):
            continue
        if classify_two_torsion(E).complete_edwards:
            found.add(E.j_invariant())
    return predicted, len(found)


@dataclass(frozen=True)
class FundamentalExclusionReport:
    p: int
    classes: int
    ordinary: int
    fundamental: int
    violations: tuple = ()


def check_fundamental_exclusion(p: int) -> FundamentalExclusionReport:
    """Over every ordinary class with V = 1, no complete Edwards form."""
    field = PrimeField(p)
    classes = isomorphism_classes(field)
    ordinary = fundamental = 0
    bad = []
    for E in classes:
        U = trace_of_frobenius(E)
        if U % p == 0:
            continue
        ordinary += 1
        V, _ = fundamental_decomposition(U * U - 4 * p)
        if V != 1:
            continue
        fundamental += 1
        if classify_two_torsion(E).complete_edwards:
            bad.append(E.coefficients)
    return FundamentalExclusionReport(p, len(classes), ordinary, fundamental, tuple(bad))
