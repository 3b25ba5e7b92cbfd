"""Exhaustive verification sweeps over all curves of small prime fields.

Each suite returns a SweepReport; ``violations`` lists offending curves
with a short reason and must be empty.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterable, Iterator

from . import poly
from .cm import (
    Edwards,
    Montgomery,
    check_fundamental_exclusion,
    classify_cm_predict,
    frobenius_data,
    isomorphism_classes,
    order_discriminant,
    trace_of_frobenius,
    volcano_level,
)
from .curves import WeierstrassCurve
from .field import PrimeField, is_prime
from .forms import montgomery_from_type_one
from .torsion import (
    TorsionType,
    classify_two_torsion,
    predict_splitting,
    split_f4_type_one,
    swan_parity_check,
)


@dataclass
class SweepReport:
    suite: str
    primes: list = dc_field(default_factory=list)
    curves: int = 0
    checked: int = 0
    violations: list = dc_field(default_factory=list)
    tally: Counter = dc_field(default_factory=Counter)

    def merge(self, other: "SweepReport") -> None:
        self.primes.extend(other.primes)
        self.curves += other.curves
        self.checked += other.checked
        self.violations.extend(other.violations)
        self.tally.update(other.tally)

    @property
    def ok(self) -> bool:
        return not self.violations


def all_short_curves(p: int) -> Iterator[WeierstrassCurve]:
    """Every nonsingular Y^2 = X^3 + a4 X + a6 over F_p."""
    field = PrimeField(p)
    for a4 in range(p):
        for a6 in range(p):
            if (4 * a4**3 + 27 * a6 * a6) % p == 0:
                continue
            yield WeierstrassCurve(field, 0, a4, a6)


def brute_force_order4(E: WeierstrassCurve) -> list:
    """Points of exact order 4, by enumerating E(F_p)."""
    out = []
    for P in E.points():
        if P is None:
            continue
        Q = E.mul(2, P)
        if Q is not None and Q[1] == 0:
            out.append(P)
    return sorted(out)


def _four_torsion(p: int) -> SweepReport:
    rep = SweepReport("four-torsion", [p])
    for E in all_short_curves(p):
        rep.curves += 1
        r = classify_two_torsion(E)
        if r.torsion_type is not TorsionType.I:
            continue
        rep.checked += 1
        square = E.field.legendre(r.D2) == 1
        brute = brute_force_order4(E)
        if len(r.four_torsion) != (2 if square else 0):
            rep.violations.append((E.coefficients, "count of 4-torsion points vs D2"))
        if list(r.four_torsion) != brute:
            rep.violations.append((E.coefficients, "4-torsion differs from enumeration"))
        if square:
            z = E.field.sqrt(r.D2)[0]
            lift = [E.field.legendre(r.C + 2 * (r.x0 + s * z)) == 1 for s in (1, -1)]
            if sum(lift) != 1:
                rep.violations.append((E.coefficients, "not exactly one lifting factor"))
        rep.tally["square D2" if square else "nonsquare D2"] += 1
    return rep


def _p4_roots(p: int) -> SweepReport:
    rep = SweepReport("p4-roots", [p])
    for E in all_short_curves(p):
        rep.curves += 1
        r = classify_two_torsion(E)
        if r.torsion_type is not TorsionType.I:
            continue
        rep.checked += 1
        fac = split_f4_type_one(r.x0, r.C, r.D, E.field)
        if poly.distinct_roots(fac.P4, p):
            rep.violations.append((E.coefficients, "P4 has a rational root"))
    return rep


def _splitting(p: int) -> SweepReport:
    rep = SweepReport("splitting", [p])
    for E in all_short_curves(p):
        rep.curves += 1
        r = classify_two_torsion(E)
        if E.field.legendre(E.discriminant()) == -1:
            if not swan_parity_check(E, r, "f4"):
                rep.violations.append((E.coefficients, "parity of the number of factors of f4"))
            if not swan_parity_check(E, r, "P4"):
                rep.violations.append((E.coefficients, "parity of the number of factors of P4"))
        if r.torsion_type is not TorsionType.I:
            continue
        rep.checked += 1
        fac = split_f4_type_one(r.x0, r.C, r.D, E.field)
        observed = (poly.factor_degrees(fac.P2, p), poly.factor_degrees(fac.P4, p))
        if observed != predict_splitting(r.D2, E.field):
            rep.violations.append((E.coefficients, f"splitting {observed}"))
        rep.tally[observed] += 1
    return rep


def classify_observed(E: WeierstrassCurve) -> dict:
    """Everything the reduction table speaks about, measured on E."""
    frob = frobenius_data(E)
    level, n = volcano_level(E, frob)
    D, parity = order_discriminant(frob, level)
    r = classify_two_torsion(E)
    return {
        "D": D,
        "V_parity": parity,
        "level": level,
        "floor": n,
        "torsion": r.torsion_type,
        "montgomery": montgomery_from_type_one(E, r) is not None,
        "complete": r.complete_edwards,
        "disc_square": E.field.legendre(E.discriminant()) == 1,
    }


def table_row_key(D: int, parity: str) -> str:
    if D % 2:
        return f"D={D % 8} mod 8" + ("" if D % 8 == 1 else f", V {parity}")
    return f"D={D % 16} mod 16, V {parity}"


def _table(p: int) -> SweepReport:
    rep = SweepReport("table", [p])
    for E in isomorphism_classes(PrimeField(p)):
        rep.curves += 1
        if trace_of_frobenius(E) % p == 0:
            continue
        rep.checked += 1
        obs = classify_observed(E)
        D, parity = obs["D"], obs["V_parity"]
        row = classify_cm_predict(D, parity)
        key = table_row_key(D, parity)
        rep.tally[key] += 1
        where = (E.coefficients, p, key)
        if row.predicted_torsion is not obs["torsion"]:
            rep.violations.append(where + ("2-torsion",))
        if row.montgomery is Montgomery.YES and not obs["montgomery"]:
            rep.violations.append(where + ("Montgomery yes",))
        if row.montgomery is Montgomery.NO and obs["montgomery"]:
            rep.violations.append(where + ("Montgomery no",))
        # a twisted Edwards form exists iff a Montgomery form does
        ed = row.edwards
        if ed is Edwards.COMPLETE and not obs["complete"]:
            rep.violations.append(where + ("Edwards complete",))
        if ed is not Edwards.COMPLETE and obs["complete"]:
            rep.violations.append(where + ("Edwards not complete",))
        if ed is Edwards.TWISTED_NOT_COMPLETE and not obs["montgomery"]:
            rep.violations.append(where + ("Edwards twisted",))
        if ed is Edwards.NONE and obs["montgomery"]:
            rep.violations.append(where + ("Edwards none",))
        if (D % 2 == 1 or parity == "even") and not obs["disc_square"]:
            rep.violations.append(where + ("square discriminant",))
        if D % 16 in (0, 1, 4, 9) and not obs["montgomery"]:
            rep.violations.append(where + ("Montgomery for D mod 16 in {0,1,4,9}",))
    return rep


def _fundamental(p: int) -> SweepReport:
    r = check_fundamental_exclusion(p)
    rep = SweepReport("fundamental", [p], r.classes, r.fundamental)
    rep.violations.extend((c, p, "complete Edwards with V = 1") for c in r.violations)
    rep.tally["ordinary"] = r.ordinary
    return rep


SUITES: dict[str, Callable[[int], SweepReport]] = {
    "four-torsion": _four_torsion,
    "p4-roots": _p4_roots,
    "splitting": _splitting,
    "table": _table,
    "fundamental": _fundamental,
}


def primes_in(lo: int, hi: int) -> list[int]:
    return [q for q in range(max(lo, 5), hi + 1) if is_prime(q)]


def run_suite(name: str, primes: Iterable[int], jobs: int = 1) -> SweepReport:
    """Run one suite over the given primes, optionally in worker processes.

    Workers share nothing; per-prime reports are merged in prime order.
    """
    fn = SUITES[name]
    primes = list(primes)
    total = SweepReport(name)
    if jobs > 1 and len(primes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(fn, primes))
    else:
        parts = [fn(p) for p in primes]
    for part in parts:
        total.merge(part)
    return total
