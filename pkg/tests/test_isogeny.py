import time

import pytest

from edwardscm import poly
from edwardscm.curves import WeierstrassCurve
from edwardscm.errors import NoEdwardsFormError, NotAKernelError, UnsupportedCurveError
from edwardscm.field import PrimeField
from edwardscm.isogeny import (
    depth_bound,
    descend_to_complete_edwards,
    transport_point,
    two_isogenous,
    velu_2_isogeny,
)
from edwardscm.torsion import classify_two_torsion
from edwardscm.cm import count_points, isomorphism_classes, trace_of_frobenius

F1009 = PrimeField(1009)
E0 = WeierstrassCurve(F1009, 0, 1, 2)


def test_velu_golden_chain():
    s1 = velu_2_isogeny(E0, 1008)
    assert s1.target.coefficients == (0, 990, 30)
    s2 = velu_2_isogeny(s1.target, 3)
    assert s2.target.coefficients == (0, 950, 871)
    s3 = velu_2_isogeny(s2.target, 750)
    assert s3.target.coefficients == (0, 1003, 17)


def test_velu_target_is_isogenous():
    for step in two_isogenous(E0):
        assert count_points(step.target) == count_points(E0)
        assert step.target.rhs(step.dual_kernel_x0) == 0
        # the dual isogeny returns to a curve isomorphic to the source
        back = velu_2_isogeny(step.target, step.dual_kernel_x0)
        assert back.target.j_invariant() == E0.j_invariant()


def test_transport_is_a_homomorphism():
    step = velu_2_isogeny(E0, 463)
    pts = list(E0.points())[:40]
    for P in pts:
        for Q in pts[:10]:
            assert transport_point(step, E0.add(P, Q)) == step.target.add(
                transport_point(step, P), transport_point(step, Q)
            )
    assert transport_point(step, (463, 0)) is None


def test_not_a_kernel():
    with pytest.raises(NotAKernelError):
        velu_2_isogeny(E0, 5)


def test_scripted_replay_matches_golden():
    t0 = time.perf_counter()
    path = descend_to_complete_edwards(E0, [1008, 3, 750])
    assert time.perf_counter() - t0 < 1
    assert [c.coefficients for c in path.curves] == [(0, 1, 2), (0, 990, 30), (0, 950, 871), (0, 1003, 17)]
    assert [poly.distinct_roots(c.cubic(), 1009) for c in path.curves] == [
        [463, 547, 1008],
        [2, 3, 1004],
        [265, 750, 1003],
        [518],
    ]
    assert path.terminal_report.four_torsion == ((247, 19), (247, 990))


def test_default_search_is_shortest_and_deterministic():
    a = descend_to_complete_edwards(E0)
    b = descend_to_complete_edwards(E0)
    assert a.kernels == b.kernels == [1008, 3, 265]
    assert len(a.steps) == 3
    assert a.terminal_report.complete_edwards


def test_terminal_curve_has_empty_path():
    E3 = WeierstrassCurve(F1009, 0, 1003, 17)
    path = descend_to_complete_edwards(E3)
    assert path.steps == () and path.terminal == E3


def test_supersingular_unsupported():
    with pytest.raises(UnsupportedCurveError):
        descend_to_complete_edwards(WeierstrassCurve(F1009, 0, 1, 7))


def test_scripted_path_that_misses():
    with pytest.raises(NoEdwardsFormError):
        descend_to_complete_edwards(E0, [1008])


def test_depth_bound():
    assert depth_bound(1009) == 2 * 12


@pytest.mark.parametrize("p", [101, 103, 113])
def test_descent_succeeds_iff_isogeny_class_has_complete_curve(p):
    field = PrimeField(p)
    classes = [E for E in isomorphism_classes(field) if trace_of_frobenius(E) % p]
    complete_traces = {trace_of_frobenius(E) for E in classes if classify_two_torsion(E).complete_edwards}
    for E in classes:
        expected = trace_of_frobenius(E) in complete_traces
        try:
            path = descend_to_complete_edwards(E)
        except NoEdwardsFormError:
            assert not expected, E
            continue
        assert expected
        assert path.terminal_report.complete_edwards
        assert count_points(path.terminal) == count_points(E)
