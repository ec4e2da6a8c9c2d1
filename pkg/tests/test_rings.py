import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from invcayley.errors import CapExceeded, DomainError
from invcayley.rings import (
    crt_combine,
    crt_combine_moduli,
    crt_split,
    factorize,
    inv_count_zn,
    involutions_zn,
    involutions_zn_bruteforce,
    is_cycle_modulus,
    is_odd_prime_power,
    prime_power_involutions,
)


def test_factorize_small():
    f = factorize(60)
    assert f.two_exp == 2
    assert f.odd_parts == ((3, 1), (5, 1))
    assert f.prime_power_moduli() == (4, 3, 5)


def test_factorize_prime_and_powers():
    assert factorize(97).odd_parts == ((97, 1),)
    assert factorize(512).two_exp == 9
    assert factorize(675).odd_parts == ((3, 3), (5, 2))


@pytest.mark.parametrize("bad", [1, 0, -6])
def test_factorize_rejects_small(bad):
    with pytest.raises(DomainError):
        factorize(bad)


def test_prime_power_involutions_table():
    assert prime_power_involutions(2, 1) == (1,)
    assert prime_power_involutions(2, 2) == (1, 3)
    assert prime_power_involutions(2, 3) == (1, 3, 5, 7)
    assert prime_power_involutions(2, 4) == (1, 7, 9, 15)
    assert prime_power_involutions(3, 3) == (1, 26)
    assert prime_power_involutions(7, 1) == (1, 6)


def test_involutions_published_values():
    assert involutions_zn(16) == (1, 7, 9, 15)
    assert involutions_zn(27) == (1, 26)
    assert len(involutions_zn(60)) == 8
    assert len(involutions_zn(24)) == 8
    assert len(involutions_zn(105)) == 8


def test_closed_form_matches_definition_exhaustively():
    for n in range(2, 2049):
        closed = involutions_zn(n)
        direct = tuple(u for u in range(n) if u * u % n == 1)
        assert closed == direct, f"mismatch at n={n}"
        assert inv_count_zn(n) == len(direct)


def test_bruteforce_agrees_and_caps():
    assert involutions_zn_bruteforce(16) == (1, 7, 9, 15)
    with pytest.raises(CapExceeded):
        involutions_zn_bruteforce(10**7, cap=10**6)


def test_cycle_modulus_classification():
    yes = [3, 5, 7, 9, 27, 6, 10, 14, 18, 50]
    no = [2, 4, 8, 12, 15, 16, 20, 30, 36, 105]
    assert all(is_cycle_modulus(n) for n in yes)
    assert not any(is_cycle_modulus(n) for n in no)
    assert is_odd_prime_power(49)
    assert not is_odd_prime_power(14)
    assert not is_odd_prime_power(8)


def test_crt_known_value():
    # x = 2 mod 3, x = 3 mod 5  ->  8 mod 15
    assert crt_combine_moduli((2, 3), (3, 5)) == 8


def test_crt_rejects_bad_input():
    with pytest.raises(DomainError):
        crt_combine_moduli((1, 1), (4, 6))  # not coprime
    with pytest.raises(DomainError):
        crt_combine_moduli((5, 0), (3, 7))  # residue out of range
    with pytest.raises(DomainError):
        crt_combine_moduli((0,), (3, 7))  # length mismatch


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=2, max_value=10**6), st.data())
def test_crt_round_trip(n, data):
    a = data.draw(st.integers(min_value=0, max_value=n - 1))
    fact = factorize(n)
    residues = crt_split(a, fact)
    assert crt_combine(residues, fact) == a
    for r, q in zip(residues, fact.prime_power_moduli()):
        assert r == a % q


def test_crt_split_range_check():
    fact = factorize(15)
    with pytest.raises(DomainError):
        crt_split(15, fact)


def test_inv_count_powers_of_two():
    assert [inv_count_zn(2**k) for k in range(1, 7)] == [1, 2, 4, 4, 4, 4]
