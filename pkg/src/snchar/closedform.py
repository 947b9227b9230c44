"""
Closed forms ``R(n) * C(2n,n)`` (two-row sums) and ``R(n) * C(2n-2,n-1)`` (hook sums).

Two-row characters at ``mu0 1^{n-|mu0|}`` are integer combinations of shifted
binomials ``C(n-|mu0|, j-beta)``. Squaring and summing over all integers ``j``
is a sum of Vandermonde-Chu convolutions; the combination is antisymmetric
under ``j -> n+1-j``, so the bilateral sum is twice the two-row sum.

The hook sum is the constant term of ``F(x) F(1/x)``, which reduces to the
Laurent polynomial ``Q(x) = prod (x^a - (-1)^a)(x^{-a} - (-1)^a)`` against
shifted central binomials.

Every derived form is checked against direct summation on
``[valid_from, valid_from + 4|mu0| + 10]`` before it is returned.
"""

from collections import defaultdict
from fractions import Fraction
from math import comb, factorial
from typing import NamedTuple

from loguru import logger
from pydantic import BaseModel, ConfigDict, field_validator, model_validator
from sympy import Mul

from snchar.charsums import phi2, psi2
from snchar.data.models import CATALOG_KIND, CENTRAL_BASE, FormulaRecord
from snchar.errors import CertificationError, DomainError
from snchar.laurent import LaurentPoly, lp_mul
from snchar.partitions import Partition, check_mu0
from snchar.rational import RationalFunction, n


def binomial(a: int, b: int) -> int:
    """``C(a, b)``, zero unless ``0 <= b <= a``"""
    if b < 0 or b > a:
        return 0
    return comb(a, b)


class BinomialTerm(NamedTuple):
    """``coeff * C(n - alpha, j - beta)``"""

    coeff: int
    alpha: int
    beta: int

    def value(self, n_value: int, j: int) -> int:
        return self.coeff * binomial(n_value - self.alpha, j - self.beta)


class CentralBinomial(NamedTuple):
    """``C(2n - a, n - b)``"""

    a: int
    b: int

    def value(self, n_value: int) -> int:
        return binomial(2 * n_value - self.a, n_value - self.b)


class SymLaurent(BaseModel):
    """Univariate Laurent polynomial with ``q_{-j} = q_j``"""

    model_config = ConfigDict(frozen=True)

    coefficients: dict[int, int]

    @field_validator("coefficients")
    @classmethod
    def _check_symmetric(cls, value: dict[int, int]) -> dict[int, int]:
        for j, q in value.items():
            if value.get(-j, 0) != q:
                raise ValueError(f"q_{j}={q} differs from q_{-j}={value.get(-j, 0)}")
        return {j: q for j, q in sorted(value.items()) if q}

    @classmethod
    def from_mu0(cls, mu0: Partition) -> "SymLaurent":
        """``Q(x) = prod_i (x^{a_i} - (-1)^{a_i}) (x^{-a_i} - (-1)^{a_i})``"""
        q = LaurentPoly.constant(1)
        for a in mu0.parts:
            sign = (-1) ** a
            q = lp_mul(q, LaurentPoly(1, {(a,): 1, (0,): -sign}))
            q = lp_mul(q, LaurentPoly(1, {(-a,): 1, (0,): -sign}))
        return cls(coefficients={e[0]: c for e, c in q.terms.items()})


class ClosedForm(BaseModel):
    model_config = ConfigDict(frozen=True)

    base: CENTRAL_BASE
    factor: RationalFunction
    valid_from: int

    @model_validator(mode="after")
    def _no_pole_in_range(self) -> "ClosedForm":
        roots = self.factor.integer_denominator_roots()
        poles = [r for r in roots if r >= self.valid_from]
        if poles:
            raise ValueError(
                f"denominator of {self.factor} vanishes at n={poles[0]} >= valid_from"
            )
        return self

    def serialize(self) -> str:
        return (
            f"R(n) = {self.factor.to_text()}; base = {self.base}; "
            f"valid_from = {self.valid_from}"
        )

    def pretty(self) -> str:
        return f"{self.factor.pretty()} * {self.base}"

    def to_record(self) -> FormulaRecord:
        return FormulaRecord(
            num=list(self.factor.num),
            den=list(self.factor.den),
            base=self.base,
            valid_from=self.valid_from,
        )


def _factorial_quotient(c: int, u: int, v: int):
    """``(c*n + u)! / (c*n + v)!`` as a sympy expression in ``n``"""
    if u >= v:
        return Mul(*(c * n + i for i in range(v + 1, u + 1)))
    return 1 / Mul(*(c * n + i for i in range(u + 1, v + 1)))


def binomial_ratio(a: int, b: int, base: CENTRAL_BASE) -> RationalFunction:
    """
    ``rho(n)`` with ``C(2n - a, n - b) = rho(n) * base(n)`` wherever ``2n - a >= 0``
    (and ``n >= 1`` for ``C(2n-2, n-1)``).

    Examples
    --------
    >>> binomial_ratio(2, 1, CENTRAL_BASE.CENTRAL_2N).to_text()
    'n/(4*n - 2)'
    """
    if a < 0:
        raise DomainError(f"upper shift a must be >= 0, got {a}")
    if base == CENTRAL_BASE.CENTRAL_2N:
        expr = (
            _factorial_quotient(2, -a, 0)
            * _factorial_quotient(1, 0, -b)
            * _factorial_quotient(1, 0, b - a)
        )
    else:
        expr = (
            _factorial_quotient(2, -a, -2)
            * _factorial_quotient(1, -1, -b)
            * _factorial_quotient(1, -1, b - a)
        )
    return RationalFunction.from_expr(expr)


def vc_sum(t1: BinomialTerm, t2: BinomialTerm) -> tuple[int, CentralBinomial]:
    """
    ``sum_j C(n-alpha, j-beta) C(n-alpha', j-beta') = C(2n-alpha-alpha', n+beta'-alpha'-beta)``,
    with the product of the two coefficients.
    """
    return t1.coeff * t2.coeff, CentralBinomial(
        a=t1.alpha + t2.alpha, b=t2.alpha + t1.beta - t2.beta
    )


def two_row_expansion(mu0: Partition) -> list[BinomialTerm]:
    """
    ``chi^{(n-j,j)}(mu0 1^{n-|mu0|}) = sum_t t.coeff * C(n-|mu0|, j-t.beta)``, terms
    ordered by ``beta``. It comes from the monomials of
    ``(1 - x2/x1) prod_i (x1^{a_i} + x2^{a_i})``.
    """
    check_mu0(mu0)
    product = LaurentPoly(2, {(0, 0): 1, (-1, 1): -1})
    for a in mu0.parts:
        product = lp_mul(product, LaurentPoly(2, {(a, 0): 1, (0, a): 1}))

    merged: dict[int, int] = defaultdict(int)
    for (_, e2), c in product.terms.items():
        merged[e2] += c
    return [
        BinomialTerm(coeff=c, alpha=mu0.weight, beta=beta)
        for beta, c in sorted(merged.items())
        if c
    ]


def two_row_value(terms: list[BinomialTerm], n_value: int, j: int) -> int:
    return sum(t.value(n_value, j) for t in terms)


def check_antisymmetry(terms: list[BinomialTerm], mu0: Partition) -> None:
    """Terms pair up as ``beta <-> |mu0| + 1 - beta`` with opposite coefficients"""
    by_beta = {t.beta: t.coeff for t in terms}
    for beta, c in by_beta.items():
        partner = mu0.weight + 1 - beta
        if by_beta.get(partner, 0) != -c:
            raise CertificationError(
                f"two-row expansion of ({mu0}) is not antisymmetric at beta={beta}"
            )


def bilateral_square_sum(terms: list[BinomialTerm], n_value: int) -> int:
    """``sum_{j in Z} c(j)^2``; ``c`` vanishes outside ``[min beta, n + max beta]``"""
    if not terms:
        return 0
    lo = min(t.beta for t in terms)
    hi = n_value + max(t.beta for t in terms)
    return sum(two_row_value(terms, n_value, j) ** 2 for j in range(lo, hi + 1))


def certification_window(cf: ClosedForm, mu0: Partition) -> tuple[int, int]:
    return cf.valid_from, cf.valid_from + 4 * mu0.weight + 10


def eval_closed_form(cf: ClosedForm, n_value: int) -> Fraction:
    if n_value < cf.valid_from:
        raise DomainError(f"n={n_value} is below valid_from={cf.valid_from}")
    if cf.base == CENTRAL_BASE.CENTRAL_2N:
        base = binomial(2 * n_value, n_value)
    else:
        base = binomial(2 * n_value - 2, n_value - 1)
    return cf.factor(n_value) * base


def _first_valid(factor: RationalFunction, start: int) -> int:
    poles = [r for r in factor.integer_denominator_roots() if r >= start]
    return max(poles) + 1 if poles else start


def _certify(
    cf: ClosedForm, mu0: Partition, expected: dict[int, int], label: str
) -> None:
    for n_value, value in expected.items():
        got = eval_closed_form(cf, n_value)
        if got != value:
            raise CertificationError(
                f"{label} closed form for mu0=({mu0}) gives {got} at n={n_value}, "
                f"direct summation gives {value}"
            )
    logger.debug(f"{label} mu0=({mu0}) certified on {len(expected)} points")


def derive_psi2(mu0: Partition) -> ClosedForm:
    """Certified ``R(n)`` with ``psi2(mu0, n) = R(n) C(2n,n)`` for ``n >= valid_from``"""
    terms = two_row_expansion(mu0)
    check_antisymmetry(terms, mu0)

    grouped: dict[CentralBinomial, int] = defaultdict(int)
    for t1 in terms:
        for t2 in terms:
            coeff, binom = vc_sum(t1, t2)
            grouped[binom] += coeff

    factor = RationalFunction.constant(0)
    for binom, coeff in sorted(grouped.items()):
        if coeff:
            factor = factor + coeff * binomial_ratio(
                binom.a, binom.b, CENTRAL_BASE.CENTRAL_2N
            )
    factor = factor * Fraction(1, 2)

    cf = ClosedForm(
        base=CENTRAL_BASE.CENTRAL_2N,
        factor=factor,
        valid_from=_first_valid(factor, mu0.weight),
    )
    lo, hi = certification_window(cf, mu0)
    expected = {n_value: psi2(mu0, n_value) for n_value in range(lo, hi + 1)}
    for n_value, value in expected.items():
        if bilateral_square_sum(terms, n_value) != 2 * value:
            raise CertificationError(
                f"bilateral two-row sum for mu0=({mu0}) is not twice psi2 at n={n_value}"
            )
    _certify(cf, mu0, expected, CATALOG_KIND.PSI2)
    logger.info(f"psi2 mu0=({mu0}): {cf.serialize()}")
    return cf


def derive_phi2(mu0: Partition) -> ClosedForm:
    """Certified ``R(n)`` with ``phi2(mu0, n) = R(n) C(2n-2,n-1)`` for ``n >= valid_from``"""
    check_mu0(mu0)
    q = SymLaurent.from_mu0(mu0)
    factor = RationalFunction.constant(0)
    for j, q_j in q.coefficients.items():
        factor = factor + q_j * binomial_ratio(
            2 + 2 * mu0.weight, 1 + mu0.weight + j, CENTRAL_BASE.CENTRAL_2N_MINUS_2
        )

    cf = ClosedForm(
        base=CENTRAL_BASE.CENTRAL_2N_MINUS_2,
        factor=factor,
        valid_from=_first_valid(factor, mu0.weight + 1),
    )
    lo, hi = certification_window(cf, mu0)
    expected = {n_value: phi2(mu0, n_value) for n_value in range(lo, hi + 1)}
    _certify(cf, mu0, expected, CATALOG_KIND.PHI2)
    logger.info(f"phi2 mu0=({mu0}): {cf.serialize()}")
    return cf


def derive(kind: CATALOG_KIND, mu0: Partition) -> ClosedForm:
    match kind:
        case CATALOG_KIND.PHI2:
            return derive_phi2(mu0)
        case CATALOG_KIND.PSI2:
            return derive_psi2(mu0)
    raise DomainError(f"unknown closed-form kind {kind!r}")


def two_power_hook_sum(r: int, n_value: int) -> int:
    """``phi2((2^r), n) = (2r)! (2n-2r-2)! / (r! (n-1)! (n-r-1)!)``"""
    if r < 0 or n_value < max(1, 2 * r):
        raise DomainError(f"need r >= 0 and n >= max(1, 2r), got r={r}, n={n_value}")
    numerator = factorial(2 * r) * factorial(2 * n_value - 2 * r - 2)
    denominator = factorial(r) * factorial(n_value - 1) * factorial(n_value - r - 1)
    return numerator // denominator

