import pytest

from edwardscm.sweeps import SUITES, all_short_curves, primes_in, run_suite, table_row_key


def test_all_short_curves_count():
    # p^2 - p pairs (a4, a6) are nonsingular
    assert sum(1 for _ in all_short_curves(13)) == 13 * 12


def test_primes_in():
    assert primes_in(1, 20) == [5, 7, 11, 13, 17, 19]


def test_row_keys():
    assert table_row_key(-7, "even") == "D=1 mod 8"
    assert table_row_key(-3, "odd") == "D=5 mod 8, V odd"
    assert table_row_key(-20, "odd") == "D=12 mod 16, V odd"


@pytest.mark.parametrize("name", ["four-torsion", "p4-roots", "fundamental"])
def test_small_suites_clean(name):
    rep = run_suite(name, [13, 17])
    assert rep.ok and rep.checked > 0


def test_parallel_equals_serial():
    a = run_suite("four-torsion", [13, 17, 19], jobs=1)
    b = run_suite("four-torsion", [13, 17, 19], jobs=3)
    assert (a.curves, a.checked, a.violations, a.tally) == (b.curves, b.checked, b.violations, b.tally)


def test_table_holds_for_p_1_mod_4():
    rep = run_suite("table", [p for p in primes_in(101, 199) if p % 4 == 1])
    assert rep.ok, rep.violations[:5]


def test_table_violations_confined_to_one_row():
    # for p = 3 mod 4 the D = 5 mod 8, V even classes have no point of order
    # 4, hence (having full 2-torsion) no Montgomery model at all
    rep = run_suite("table", [103, 107])
    assert rep.violations
    assert {v[2] for v in rep.violations} == {"D=5 mod 8, V even"}
    assert {v[3] for v in rep.violations} == {"Montgomery yes", "Edwards twisted"}


def test_splitting_violations_are_only_the_f4_parity_reading():
    rep = run_suite("splitting", [13, 23])
    assert {v[1] for v in rep.violations} == {"parity of the number of factors of f4"}


def test_suite_names():
    assert sorted(SUITES) == ["four-torsion", "fundamental", "p4-roots", "splitting", "table"]
