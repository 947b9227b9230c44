import pytest
from hypothesis import given

from conftest import P, catalan, motzkin, partition_strategy
from snchar.errors import DomainError, WeightMismatchError
from snchar.oracle import mn_character, sum_powers_brute
from snchar.partitions import conjugate, f_lambda, partitions_of


def test_sign_representation():
    for mu in partitions_of(5):
        assert mn_character(P(1, 1, 1, 1, 1), mu) == (-1) ** (5 - mu.length)


def test_known_values():
    assert mn_character(P(2, 2), P(3, 1)) == -1
    assert mn_character(P(4), P(2, 2)) == 1
    assert mn_character(P(3, 1), P(1, 1, 1, 1)) == 3
    assert mn_character(P(3, 2), P(5)) == 0


def test_empty_shape():
    assert mn_character(P(), P()) == 1


def test_weight_mismatch():
    with pytest.raises(WeightMismatchError):
        mn_character(P(2), P(1))


@given(partition_strategy(max_n=9))
def test_identity_class_gives_tableau_count(lam):
    assert mn_character(lam, P(*([1] * lam.weight))) == f_lambda(lam)


@pytest.mark.parametrize("n", range(1, 9))
def test_conjugation_twists_by_sign(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            sign = (-1) ** (n - mu.length)
            assert mn_character(conjugate(lam), mu) == sign * mn_character(lam, mu)


def test_sum_powers_brute_fixtures():
    ones4 = P(1, 1, 1, 1)
    assert sum_powers_brute(2, 2, ones4) == 14 == catalan(4)
    assert sum_powers_brute(3, 1, ones4) == 9 == motzkin(4)
    assert sum_powers_brute(4, 2, P(2, 1, 1)) == 4


def test_sum_powers_brute_domain():
    with pytest.raises(DomainError):
        sum_powers_brute(0, 2, P(1))
    with pytest.raises(DomainError):
        sum_powers_brute(2, 0, P(1))
