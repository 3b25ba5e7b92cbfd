import pytest
import sympy
from hypothesis import given, settings, strategies as st

from edwardscm.errors import InvalidParameterError
from edwardscm.field import PrimeField, is_prime, kronecker, legendre, sqrt_mod

PRIMES = [5, 7, 13, 17, 1009, 65537, 1000003, 2**61 - 1]


def test_is_prime_matches_sympy():
    assert [n for n in range(2000) if is_prime(n)] == list(sympy.primerange(0, 2000))


@pytest.mark.parametrize("p", PRIMES[:6])
def test_legendre_euler_criterion(p):
    for a in range(0, min(p, 3000)):
        euler = pow(a, (p - 1) // 2, p)
        assert legendre(a, p) == (0 if a % p == 0 else (1 if euler == 1 else -1))


def test_legendre_of_golden_discriminant():
    assert legendre(226, 1009) == 1


def test_kronecker_at_two():
    assert [kronecker(d, 2) for d in (-7, -3, -4, -15, -20)] == [1, -1, 0, 1, 0]


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(PRIMES), st.integers(min_value=0, max_value=2**64))
def test_sqrt_mod(p, a):
    r = sqrt_mod(a, p)
    if legendre(a, p) == -1:
        assert r is None
    else:
        assert r * r % p == a % p


def test_sqrt_covers_p_1_mod_8():
    # 17 and 65537 exercise the Tonelli-Shanks loop with 2-adic depth > 1
    for p in (17, 65537):
        squares = {x * x % p for x in range(p)}
        assert all(sqrt_mod(a, p) is not None for a in squares)


def test_field_sqrt_returns_sorted_pair():
    f = PrimeField(1009)
    assert f.sqrt(793) == (271, 738)
    assert f.sqrt(0) == (0, 0)
    assert f.sqrt(f.nonresidue()) is None


@pytest.mark.parametrize("bad", [2, 3, 4, 9, 1, 0, -7])
def test_field_rejects_bad_modulus(bad):
    with pytest.raises(InvalidParameterError):
        PrimeField(bad)


def test_field_ops():
    f = PrimeField(13)
    assert f(-1) == 12
    assert f.inv(5) * 5 % 13 == 1
    assert f.div(1, 2) == 7
    assert f.neg(3) == 10
    with pytest.raises(ZeroDivisionError):
        f.inv(0)
    assert f.poly_roots((-4, 0, 1)) == [2, 11]
