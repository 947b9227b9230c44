from fractions import Fraction
from math import comb

import pytest
from pydantic import ValidationError

from conftest import P, catalan
from snchar.characters import character_padded
from snchar.charsums import phi2, psi2
from snchar.closedform import (
    BinomialTerm,
    CentralBinomial,
    ClosedForm,
    SymLaurent,
    bilateral_square_sum,
    binomial,
    binomial_ratio,
    certification_window,
    check_antisymmetry,
    derive,
    derive_phi2,
    derive_psi2,
    eval_closed_form,
    two_power_hook_sum,
    two_row_expansion,
    two_row_value,
    vc_sum,
)
from snchar.data.models import CATALOG_KIND, CENTRAL_BASE
from snchar.errors import CertificationError, DomainError
from snchar.partitions import mu0_catalog, two_row
from snchar.rational import RationalFunction

PHI2_FORMS = {
    (): "1",
    (2,): "1/(2*n - 3)",
    (3,): "(n**2 - 7*n + 18)/(4*(2*n - 3)*(2*n - 5))",
    (2, 2): "3/((2*n - 3)*(2*n - 5))",
    (4,): "(n**2 - 9*n + 23)/((2*n - 3)*(2*n - 5)*(2*n - 7))",
    (5,): (
        "(n**4 - 22*n**3 + 239*n**2 - 1298*n + 2760)"
        "/(16*(2*n - 3)*(2*n - 5)*(2*n - 7)*(2*n - 9))"
    ),
    (3, 2): "(n**2 - 15*n + 74)/(4*(2*n - 3)*(2*n - 5)*(2*n - 7))",
}

PSI2_FORMS = {
    (): "1/(n + 1)",
    (2,): "(n**2 - 5*n + 9)/((2*n - 1)*(2*n - 3)*(n + 1))",
    (3,): "(n**2 - 11*n + 48)/(4*(2*n - 1)*(2*n - 3)*(n + 1))",
    (4,): (
        "(n**4 - 26*n**3 + 299*n**2 - 1354*n + 2100)"
        "/(4*(2*n - 1)*(2*n - 3)*(2*n - 5)*(2*n - 7)*(n + 1))"
    ),
    (2, 2): (
        "(n**4 - 14*n**3 + 89*n**2 - 316*n + 525)"
        "/((2*n - 1)*(2*n - 3)*(2*n - 5)*(2*n - 7)*(n + 1))"
    ),
    (5,): (
        "(n**4 - 38*n**3 + 659*n**2 - 4342*n + 10080)"
        "/(16*(2*n - 1)*(2*n - 3)*(2*n - 5)*(2*n - 7)*(n + 1))"
    ),
    (3, 2): (
        "(n**4 - 20*n**3 + 194*n**2 - 1045*n + 2520)"
        "/(4*(2*n - 1)*(2*n - 3)*(2*n - 5)*(2*n - 7)*(n + 1))"
    ),
}

SMALL_MU0 = list(mu0_catalog(4))
LARGER_MU0 = [
    pytest.param(mu0, marks=pytest.mark.slow)
    for mu0 in mu0_catalog(6)
    if mu0.weight > 4
]


def test_binomial_vanishes_outside_range():
    assert binomial(5, 2) == 10
    assert binomial(3, -1) == 0
    assert binomial(3, 4) == 0
    assert binomial(-1, 0) == 0


@pytest.mark.parametrize(
    "a, b, base",
    [
        (0, 0, CENTRAL_BASE.CENTRAL_2N),
        (2, 1, CENTRAL_BASE.CENTRAL_2N),
        (0, -1, CENTRAL_BASE.CENTRAL_2N),
        (4, 0, CENTRAL_BASE.CENTRAL_2N),
        (6, 4, CENTRAL_BASE.CENTRAL_2N),
        (2, 1, CENTRAL_BASE.CENTRAL_2N_MINUS_2),
        (6, 2, CENTRAL_BASE.CENTRAL_2N_MINUS_2),
        (6, 5, CENTRAL_BASE.CENTRAL_2N_MINUS_2),
    ],
)
def test_binomial_ratio_matches_direct_quotient(a, b, base):
    ratio = binomial_ratio(a, b, base)
    for n in range(max(a, 2), 25):
        if base == CENTRAL_BASE.CENTRAL_2N:
            whole = comb(2 * n, n)
        else:
            whole = comb(2 * n - 2, n - 1)
        assert ratio(n) * whole == binomial(2 * n - a, n - b), (a, b, n)


def test_binomial_ratio_examples():
    assert binomial_ratio(0, 0, CENTRAL_BASE.CENTRAL_2N) == RationalFunction.constant(1)
    assert binomial_ratio(2, 1, CENTRAL_BASE.CENTRAL_2N).to_text() == "n/(4*n - 2)"
    assert binomial_ratio(0, -1, CENTRAL_BASE.CENTRAL_2N) == RationalFunction.from_expr(
        "n/(n + 1)"
    )
    with pytest.raises(DomainError):
        binomial_ratio(-1, 0, CENTRAL_BASE.CENTRAL_2N)


def test_vc_sum_is_vandermonde():
    t1, t2 = BinomialTerm(2, 1, 0), BinomialTerm(3, 2, 1)
    coeff, central = vc_sum(t1, t2)
    assert (coeff, central) == (6, CentralBinomial(a=3, b=1))
    for n in range(2, 12):
        direct = sum(t1.value(n, j) * t2.value(n, j) for j in range(-2, n + 3))
        assert direct == coeff * central.value(n)


def test_two_row_expansion_of_empty_mu0():
    assert two_row_expansion(P()) == [BinomialTerm(1, 0, 0), BinomialTerm(-1, 0, 1)]


def test_two_row_expansion_of_a_transposition():
    assert two_row_expansion(P(2)) == [
        BinomialTerm(1, 2, 0),
        BinomialTerm(-1, 2, 1),
        BinomialTerm(1, 2, 2),
        BinomialTerm(-1, 2, 3),
    ]


@pytest.mark.parametrize("mu0", list(mu0_catalog(5)))
def test_two_row_expansion_gives_characters(mu0):
    terms = two_row_expansion(mu0)
    for n in range(max(mu0.weight, 1), mu0.weight + 6):
        for j in range(n // 2 + 1):
            assert two_row_value(terms, n, j) == character_padded(two_row(n, j), mu0)


@pytest.mark.parametrize("mu0", list(mu0_catalog(8)))
def test_two_row_expansion_is_antisymmetric(mu0):
    check_antisymmetry(two_row_expansion(mu0), mu0)


@pytest.mark.parametrize("mu0", list(mu0_catalog(8)))
def test_two_row_values_flip_sign_under_reflection(mu0):
    terms = two_row_expansion(mu0)
    for n in range(mu0.weight + 2, mu0.weight + 13):
        for j in range(-2, n + 4):
            assert two_row_value(terms, n, n + 1 - j) == -two_row_value(terms, n, j)


@pytest.mark.parametrize(
    "t1, t2",
    [
        (BinomialTerm(1, 0, 0), BinomialTerm(1, 0, 0)),
        (BinomialTerm(1, 2, 0), BinomialTerm(-1, 2, 1)),
        (BinomialTerm(2, 1, 0), BinomialTerm(3, 2, 1)),
        (BinomialTerm(-1, 3, 3), BinomialTerm(1, 3, 1)),
    ],
)
def test_vc_sum_is_symmetric_in_its_arguments(t1, t2):
    coeff, central = vc_sum(t1, t2)
    swapped_coeff, swapped = vc_sum(t2, t1)
    assert swapped_coeff == coeff
    for n in range(5, 16):
        assert swapped.value(n) == central.value(n)


def test_broken_expansion_fails_antisymmetry():
    with pytest.raises(CertificationError):
        check_antisymmetry([BinomialTerm(1, 0, 0), BinomialTerm(1, 0, 1)], P())


@pytest.mark.parametrize("mu0", list(mu0_catalog(6)))
def test_bilateral_sum_is_twice_psi2(mu0):
    terms = two_row_expansion(mu0)
    for n in range(mu0.weight, mu0.weight + 8):
        assert bilateral_square_sum(terms, n) == 2 * psi2(mu0, n)


def test_bilateral_sum_with_empty_mu0_is_twice_catalan():
    terms = two_row_expansion(P())
    assert [bilateral_square_sum(terms, n) for n in range(6)] == [
        2 * catalan(n) for n in range(6)
    ]


def test_sym_laurent_from_mu0():
    assert SymLaurent.from_mu0(P(2)).coefficients == {-2: -1, 0: 2, 2: -1}
    assert SymLaurent.from_mu0(P(3)).coefficients == {-3: 1, 0: 2, 3: 1}
    assert SymLaurent.from_mu0(P()).coefficients == {0: 1}


def test_sym_laurent_rejects_asymmetric_input():
    with pytest.raises(ValidationError):
        SymLaurent(coefficients={1: 1})


@pytest.mark.parametrize("parts, expr", PHI2_FORMS.items())
def test_phi2_closed_forms(parts, expr):
    cf = derive_phi2(P(*parts))
    assert cf.base == CENTRAL_BASE.CENTRAL_2N_MINUS_2
    assert cf.factor == RationalFunction.from_expr(expr)
    assert cf.valid_from == max(1, sum(parts) + 1)


@pytest.mark.parametrize("parts, expr", PSI2_FORMS.items())
def test_psi2_closed_forms(parts, expr):
    cf = derive_psi2(P(*parts))
    assert cf.base == CENTRAL_BASE.CENTRAL_2N
    assert cf.factor == RationalFunction.from_expr(expr)
    assert cf.valid_from == sum(parts)


def test_psi2_pretty_form():
    assert derive_psi2(P(2)).pretty() == (
        "(n^2 - 5*n + 9)/((2*n - 1)*(2*n - 3)*(n + 1)) * C(2n,n)"
    )


def test_serialize():
    assert derive_psi2(P()).serialize() == (
        "R(n) = 1/(n + 1); base = C(2n,n); valid_from = 0"
    )
    assert derive_phi2(P(2)).serialize() == (
        "R(n) = 1/(2*n - 3); base = C(2n-2,n-1); valid_from = 3"
    )


@pytest.mark.parametrize("mu0", SMALL_MU0 + LARGER_MU0)
def test_closed_forms_agree_with_direct_sums(mu0):
    psi = derive(CATALOG_KIND.PSI2, mu0)
    phi = derive(CATALOG_KIND.PHI2, mu0)
    lo, hi = certification_window(phi, mu0)
    for n in range(psi.valid_from, hi + 6):
        assert eval_closed_form(psi, n) == psi2(mu0, n)
    for n in range(lo, hi + 6):
        assert eval_closed_form(phi, n) == phi2(mu0, n)


@pytest.mark.parametrize("r", range(5))
def test_two_power_hook_sum(r):
    mu0 = P(*([2] * r))
    cf = derive_phi2(mu0)
    for n in range(2 * r + 1, 21):
        assert two_power_hook_sum(r, n) == phi2(mu0, n)
        assert eval_closed_form(cf, n) == two_power_hook_sum(r, n)


def test_two_power_hook_sum_domain():
    assert two_power_hook_sum(1, 2) == phi2(P(2), 2)
    with pytest.raises(DomainError):
        two_power_hook_sum(2, 3)
    with pytest.raises(DomainError):
        two_power_hook_sum(-1, 3)


def test_remarkable_identity_by_closed_forms():
    psi, phi = derive_psi2(P(3)), derive_phi2(P(3, 2))
    for n in range(5, 31):
        assert 2 * eval_closed_form(psi, n) == eval_closed_form(phi, n + 2), n


def test_eval_closed_form():
    cf = derive_psi2(P())
    assert eval_closed_form(cf, 4) == Fraction(14)
    assert eval_closed_form(cf, 0) == 1
    cf = derive_phi2(P(2))
    assert eval_closed_form(cf, 4) == 4
    with pytest.raises(DomainError):
        eval_closed_form(cf, 2)


def test_closed_form_rejects_poles_in_range():
    factor = RationalFunction.from_expr("1/(n - 3)")
    with pytest.raises(ValidationError):
        ClosedForm(base=CENTRAL_BASE.CENTRAL_2N, factor=factor, valid_from=2)
    cf = ClosedForm(base=CENTRAL_BASE.CENTRAL_2N, factor=factor, valid_from=4)
    assert eval_closed_form(cf, 4) == comb(8, 4)


def test_to_record():
    record = derive_psi2(P(2)).to_record()
    assert record.num == [9, -5, 1]
    assert record.den == [3, -5, -4, 4]
    assert record.base == CENTRAL_BASE.CENTRAL_2N
    assert record.valid_from == 2


def test_certification_window():
    cf = derive_psi2(P(3))
    assert certification_window(cf, P(3)) == (3, 25)
