from math import comb

import pytest
from pydantic import ValidationError

from conftest import P, catalan, gouyou_beauchamps, motzkin
from snchar.characters import character_padded
from snchar.charsums import (
    hook_gf_coeffs,
    phi2,
    power_sum,
    psi2,
    remarkable_identity_holds,
)
from snchar.data.models import SUM_FAMILY, SumRequest
from snchar.errors import DomainError, PartitionError
from snchar.oracle import mn_character
from snchar.partitions import (
    centralizer_order,
    hook,
    in_meta_hook,
    mu0_catalog,
    pad_with_ones,
    partitions_of,
    two_row,
)


def rows_bounded(r: int, s: int, n: int, mu0=P()) -> int:
    return power_sum(SumRequest(family=SUM_FAMILY.ROWS_BOUNDED, r=r, s=s, n=n, mu0=mu0))


@pytest.mark.parametrize("n", range(13))
def test_two_rows_squared_is_catalan(n):
    assert rows_bounded(2, 2, n) == catalan(n)


@pytest.mark.parametrize("n", range(15))
def test_two_rows_first_power_is_central_binomial(n):
    assert rows_bounded(2, 1, n) == comb(n, n // 2)


@pytest.mark.parametrize("n", range(13))
def test_three_rows_first_power_is_motzkin(n):
    assert rows_bounded(3, 1, n) == motzkin(n)


@pytest.mark.parametrize("n", range(13))
def test_four_rows_first_power_is_gouyou_beauchamps(n):
    assert rows_bounded(4, 1, n) == gouyou_beauchamps(n)


def test_power_sum_examples():
    assert rows_bounded(2, 2, 4) == 14
    assert rows_bounded(4, 1, 5) == 25
    assert rows_bounded(2, 1, 5) == 10


@pytest.mark.parametrize("n", range(1, 9))
def test_all_shapes_squared_is_centralizer_order(n):
    for mu0 in mu0_catalog(n):
        req = SumRequest(family=SUM_FAMILY.ALL_SHAPES, s=2, mu0=mu0, n=n)
        assert power_sum(req) == centralizer_order(pad_with_ones(mu0, n))


@pytest.mark.parametrize("n", range(1, 8))
def test_rows_bounded_beyond_n_is_all_shapes(n):
    for s in (1, 2, 3):
        everything = SumRequest(family=SUM_FAMILY.ALL_SHAPES, s=s, n=n)
        assert rows_bounded(n, s, n) == power_sum(everything)
        assert rows_bounded(n + 3, s, n) == power_sum(everything)


def test_meta_hook_sum_matches_oracle():
    n, k, l, s = 7, 2, 1, 3
    mu0 = P(3)
    req = SumRequest(family=SUM_FAMILY.META_HOOK, k=k, l=l, s=s, mu0=mu0, n=n)
    mu = pad_with_ones(mu0, n)
    expected = sum(
        mn_character(lam, mu) ** s for lam in partitions_of(n) if in_meta_hook(lam, k, l)
    )
    assert power_sum(req) == expected


def test_meta_hook_one_one_is_hook_sum():
    for n in range(2, 9):
        hooks = SumRequest(family=SUM_FAMILY.HOOK, s=2, mu0=P(2), n=n)
        meta = SumRequest(family=SUM_FAMILY.META_HOOK, k=1, l=1, s=2, mu0=P(2), n=n)
        assert power_sum(hooks) == power_sum(meta)


def test_two_row_family_is_psi2():
    req = SumRequest(family=SUM_FAMILY.TWO_ROW, s=2, mu0=P(2, 2), n=9)
    assert power_sum(req) == psi2(P(2, 2), 9)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(family=SUM_FAMILY.ROWS_BOUNDED, n=4),
        dict(family=SUM_FAMILY.ROWS_BOUNDED, r=2, s=0, n=4),
        dict(family=SUM_FAMILY.META_HOOK, k=1, n=4),
        dict(family=SUM_FAMILY.HOOK, r=2, n=4),
        dict(family=SUM_FAMILY.TWO_ROW, n=1, mu0=P(2)),
        dict(family=SUM_FAMILY.TWO_ROW, n=4, mu0=P(2, 1)),
    ],
)
def test_invalid_requests(kwargs):
    with pytest.raises(ValidationError):
        SumRequest(**kwargs)


def test_phi2_examples():
    assert phi2(P(), 3) == 6
    assert phi2(P(2), 4) == 4
    assert phi2(P(), 1) == 1


def test_psi2_examples():
    assert psi2(P(), 4) == 14
    assert psi2(P(2), 4) == 2
    assert psi2(P(3), 4) == 2
    assert psi2(P(), 0) == 1


def test_sum_preconditions():
    with pytest.raises(DomainError):
        phi2(P(), 0)
    with pytest.raises(DomainError):
        psi2(P(3), 2)
    with pytest.raises(PartitionError):
        phi2(P(2, 1), 5)


@pytest.mark.parametrize("n", range(1, 11))
def test_sums_agree_with_oracle(n):
    for mu0 in mu0_catalog(min(n, 4)):
        mu = pad_with_ones(mu0, n)
        hooks = sum(mn_character(hook(n, j), mu) ** 2 for j in range(1, n + 1))
        rows = sum(mn_character(two_row(n, j), mu) ** 2 for j in range(n // 2 + 1))
        assert phi2(mu0, n) == hooks
        assert psi2(mu0, n) == rows


def test_hook_gf_examples():
    assert hook_gf_coeffs(P(), 4) == [(1, 1), (2, 3), (3, 3), (4, 1)]
    assert hook_gf_coeffs(P(2), 3) == [(1, -1), (3, 1)]


def test_hook_gf_without_ones():
    # n = |mu0|: the (1+x) power is -1
    assert hook_gf_coeffs(P(2), 2) == [(1, -1), (2, 1)]
    with pytest.raises(DomainError):
        hook_gf_coeffs(P(), 0)
    with pytest.raises(DomainError):
        hook_gf_coeffs(P(3), 2)


@pytest.mark.parametrize(
    "n", [*range(1, 10), *(pytest.param(n, marks=pytest.mark.slow) for n in (10, 11, 12))]
)
def test_hook_gf_matches_padded_characters(n):
    for mu0 in mu0_catalog(min(n, 5)):
        coeffs = dict(hook_gf_coeffs(mu0, n))
        for j in range(1, n + 1):
            assert coeffs.get(j, 0) == character_padded(hook(n, j), mu0), (mu0, n, j)
        assert set(coeffs) <= set(range(1, n + 1))


@pytest.mark.parametrize("n", range(1, 10))
def test_phi2_matches_squared_hook_characters(n):
    for mu0 in mu0_catalog(min(n, 4)):
        mu = pad_with_ones(mu0, n)
        direct = sum(mn_character(hook(n, j), mu) ** 2 for j in range(1, n + 1))
        assert phi2(mu0, n) == direct, mu0


@pytest.mark.parametrize("n", range(5, 31))
def test_remarkable_identity_by_summation(n):
    assert remarkable_identity_holds(n)


def test_remarkable_identity_domain():
    with pytest.raises(DomainError):
        remarkable_identity_holds(2)
