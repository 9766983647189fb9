import random

import pytest

from pracnum.arith import factorize, shared_spf_table, sigma
from pracnum.errors import CapacityError, DomainError
from pracnum.practical import (
    decompose,
    f_brute,
    f_fast,
    is_practical,
    is_practical_brute,
    verify_margenstern,
)

# first practical numbers, from the definitional subset-sum oracle
FIRST_PRACTICAL = [1, 2, 4, 6, 8, 12, 16, 18, 20, 24, 28, 30, 32, 36, 40]


def test_is_practical_examples():
    assert is_practical(6)
    assert is_practical(150)
    assert not is_practical(10)
    assert not is_practical(14)
    assert is_practical(1)
    assert is_practical(2)
    for n in range(3, 2000, 2):  # every odd n > 1 fails
        assert not is_practical(n)


def test_first_practical_numbers():
    assert [n for n in range(1, 41) if is_practical(n)] == FIRST_PRACTICAL


def test_decompose_examples():
    dec = decompose(10)
    assert (dec.component, dec.cofactor, dec.f_value) == (2, 5, 3)
    assert dec.component_index == 1
    assert not dec.is_practical

    dec = decompose(6)
    assert (dec.component, dec.cofactor, dec.f_value) == (6, 1, 12)
    assert dec.is_practical

    dec = decompose(45)  # least prime 3 > sigma(1)+1 = 2
    assert (dec.component, dec.cofactor, dec.f_value) == (1, 45, 1)
    assert dec.component_index == 0


def test_decompose_invariants():
    table = shared_spf_table(10**5)
    rng = random.Random(11)
    for n in [rng.randrange(1, 10**5) for _ in range(3000)]:
        dec = decompose(n, table)
        assert n % dec.component == 0
        assert dec.cofactor == n // dec.component
        assert is_practical(dec.component, table)
        assert dec.is_practical == (dec.cofactor == 1)
        assert dec.f_value == sigma(factorize(dec.component, table))
        if dec.cofactor > 1:
            least = factorize(dec.cofactor, table).least_prime_factor()
            assert least > dec.f_value + 1


@pytest.mark.parametrize("n,expected", [(10, 3), (14, 3), (1, 1), (4, 7), (6, 12)])
def test_f_fast_examples(n, expected):
    assert f_fast(n) == expected


@pytest.mark.parametrize("n,expected", [(10, 3), (3, 1), (8, 15), (1, 1), (12, 28)])
def test_f_brute_examples(n, expected):
    assert f_brute(n) == expected


def test_f_brute_guards():
    with pytest.raises(DomainError):
        f_brute(0)
    with pytest.raises(DomainError):
        f_brute(10**7 + 1)
    with pytest.raises(CapacityError):
        f_brute(10**6, bit_cap=100)


def test_is_practical_brute_examples():
    assert is_practical_brute(6)
    assert not is_practical_brute(10)
    assert is_practical_brute(2)
    with pytest.raises(DomainError):
        is_practical_brute(10**6 + 1)


def test_definition_equivalence_prefix():
    # exhaustive run to 10^4 lives in the acceptance suite
    for n in range(1, 2001):
        assert is_practical(n) == is_practical_brute(n), n


def test_oracle_equivalence_sampled():
    table = shared_spf_table(10**5)
    rng = random.Random(23)
    ns = list(range(1, 1001)) + [rng.randrange(1, 10**5) for _ in range(300)]
    for n in ns:
        assert f_fast(n, table) == f_brute(n), n


def test_stewart_strengthening_and_characterizations():
    table = shared_spf_table(5000)
    for n in range(1, 5001):
        f = f_fast(n, table)
        s = sigma(factorize(n, table))
        practical = is_practical(n, table)
        if practical:
            assert f == s  # representable all the way up to sigma(n)
        assert practical == (f >= n - 1) == (f == s)
        assert (f == 1) == (n == 1 or n % 2 == 1)
        if practical:
            assert n == 1 or n % 2 == 0


def test_verify_margenstern_examples():
    assert verify_margenstern(2, 4)
    assert verify_margenstern(6, 13)  # sigma(6)+1 = 13
    assert verify_margenstern(1, 2)


def test_verify_margenstern_sampled():
    table = shared_spf_table(4000)
    rng = random.Random(5)
    pool = [n for n in range(1, 2001) if is_practical(n, table)]
    for n in rng.sample(pool, 50):
        cap = min(sigma(factorize(n, table)) + 1, 30)
        assert verify_margenstern(n, cap, table)


def test_verify_margenstern_guards():
    with pytest.raises(DomainError):
        verify_margenstern(10, 2)  # 10 not practical
    with pytest.raises(DomainError):
        verify_margenstern(6, 14)  # above sigma(6)+1
    with pytest.raises(DomainError):
        verify_margenstern(6, 0)
