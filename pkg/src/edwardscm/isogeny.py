"""Vélu 2-isogenies and descent down the 2-isogeny volcano."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import poly
from .curves import Point, WeierstrassCurve
from .errors import (
    ConsistencyError,
    NoEdwardsFormError,
    NotAKernelError,
    NotOnCurveError,
    SingularCurveError,
    UnsupportedCurveError,
)
from .torsion import TorsionType, TwoTorsionReport, classify_two_torsion


@dataclass(frozen=True)
class IsogenyStep:
    source: WeierstrassCurve
    kernel_x0: int
    t: int
    w: int
    target: WeierstrassCurve
    # abscissa of the generator of the dual kernel on the target
    dual_kernel_x0: int
    # images of the rational non-kernel 2-torsion abscissas of the source
    carried_roots: tuple[int, ...] = ()


def velu_2_isogeny(E: WeierstrassCurve, x0: int) -> IsogenyStep:
    p = E.p
    x0 %= p
    if E.rhs(x0) != 0:
        raise NotAKernelError(f"({x0}, 0) is not a 2-torsion point of {E}")
    a2, a4, a6 = E.coefficients
    t = (3 * x0 * x0 + 2 * a2 * x0 + a4) % p
    w = x0 * t % p
    try:
        target = WeierstrassCurve(E.field, a2, a4 - 5 * t, a6 - 4 * a2 * t - 7 * w)
    except SingularCurveError as exc:  # pragma: no cover - excluded by the formulas
        raise ConsistencyError(f"Vélu target of {E} is singular") from exc
    carried = tuple(
        sorted({(e + t * pow(e - x0, -1, p)) % p for e in poly.distinct_roots(E.cubic(), p) if e != x0})
    )
    # the other two roots sum to -a2 - x0, and each maps to e + t/(e - x0)
    dual = (-a2 - 2 * x0) % p
    if target.rhs(dual) != 0:
        raise ConsistencyError("dual kernel abscissa is not a root of the target cubic")
    return IsogenyStep(E, x0, t, w, target, dual, carried)


def transport_point(step: IsogenyStep, P: Point) -> Point:
    """(X, Y) -> (X + t/(X - x0), Y (1 - t/(X - x0)^2)); the kernel maps to infinity."""
    E = step.source
    if not E.contains(P):
        raise NotOnCurveError(f"{P} is not on {E}")
    if P is None:
        return None
    p = E.p
    x, y = P
    if x == step.kernel_x0:
        return None
    q = pow(x - step.kernel_x0, -1, p)
    tq = step.t * q % p
    Q = ((x + tq) % p, y * (1 - tq * q) % p)
    if not step.target.contains(Q):
        raise ConsistencyError(f"image {Q} is not on {step.target}")
    return Q


@dataclass(frozen=True)
class DescentPath:
    steps: tuple[IsogenyStep, ...]
    terminal: WeierstrassCurve
    terminal_report: TwoTorsionReport

    @property
    def curves(self) -> list[WeierstrassCurve]:
        return [s.source for s in self.steps] + [self.terminal]

    @property
    def kernels(self) -> list[int]:
        return [s.kernel_x0 for s in self.steps]


def is_complete_edwards_capable(report: TwoTorsionReport) -> bool:
    return report.complete_edwards


NODE_BUDGET = 20000


def depth_bound(p: int) -> int:
    return 2 * math.ceil(math.log2(4 * p))


def _is_supersingular(E: WeierstrassCurve) -> bool | None:
    from .cm import COUNT_BOUND, count_points

    if E.p > COUNT_BOUND:
        return None
    return (E.p + 1 - count_points(E)) % E.p == 0


def descend_to_complete_edwards(
    E: WeierstrassCurve, kernels: Sequence[int] | None = None
) -> DescentPath:
    """Walk 2-isogenies from E to a curve with a complete Edwards form.

    With ``kernels`` given, replays those kernel abscissas step by step.
    Otherwise runs an iterative-deepening depth-first search (so the path
    returned is a shortest one), children in ascending kernel order,
    skipping any neighbour whose j already lies on the current path; this
    includes the immediate backtrack.
    """
    if kernels is not None:
        return _replay(E, kernels)
    if _is_supersingular(E):
        raise UnsupportedCurveError(f"{E} is supersingular")
    report = classify_two_torsion(E)
    if report.complete_edwards:
        return DescentPath((), E, report)
    if report.torsion_type is TorsionType.NONE:
        raise NoEdwardsFormError(f"{E} has no rational 2-torsion point")

    bound = depth_bound(E.p)
    budget = [NODE_BUDGET]
    steps: list[IsogenyStep] = []
    on_path = [E.j_invariant()]
    children: dict = {}

    def expand(curve):
        key = curve.coefficients
        if key not in children:
            budget[0] -= 1
            if budget[0] < 0:
                raise NoEdwardsFormError(f"search from {E} exceeded {NODE_BUDGET} nodes")
            out = []
            for x0 in poly.distinct_roots(curve.cubic(), curve.p):
                step = velu_2_isogeny(curve, x0)
                out.append((step, step.target.j_invariant(), classify_two_torsion(step.target)))
            children[key] = out
        return children[key]

    def dfs(curve, left: int) -> TwoTorsionReport | None:
        for step, j, rep in expand(curve):
            if j in on_path:
                continue
            steps.append(step)
            on_path.append(j)
            if rep.complete_edwards:
                return rep
            if left > 1:
                found = dfs(step.target, left - 1)
                if found is not None:
                    return found
            else:
                cut[0] = True
            steps.pop()
            on_path.pop()
        return None

    for depth in range(1, bound + 1):
        cut = [False]
        final = dfs(E, depth)
        if final is not None:
            return DescentPath(tuple(steps), steps[-1].target, final)
        if not cut[0]:
            break
    raise NoEdwardsFormError(f"no curve 2-isogenous to {E} within depth {bound} is complete")


def _replay(E: WeierstrassCurve, kernels: Sequence[int]) -> DescentPath:
    steps = []
    curve = E
    for x0 in kernels:
        step = velu_2_isogeny(curve, x0)
        steps.append(step)
        curve = step.target
    report = classify_two_torsion(curve)
    if not report.complete_edwards:
        raise NoEdwardsFormError(f"scripted path ends at {curve}, which is not complete-Edwards capable")
    return DescentPath(tuple(steps), curve, report)


def two_isogenous(E: WeierstrassCurve) -> list[IsogenyStep]:
    """One Vélu step per rational 2-torsion point, ascending kernel."""
    return [velu_2_isogeny(E, x0) for x0 in poly.distinct_roots(E.cubic(), E.p)]
