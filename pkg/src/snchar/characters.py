"""
Characters of S_n as constant terms.

``chi^lam(mu)`` is the coefficient of ``x^lam`` in
``prod_{i<j} (1 - x_j/x_i) * prod_k p_{mu_k}(x_1, ..., x_m)`` where ``p_a`` is the
power sum ``x_1^a + ... + x_m^a``. Factors are folded one at a time and every
partial product is pruned to the terms that can still reach ``x^lam``.
"""

from math import factorial, prod
from operator import add
from typing import NamedTuple

from loguru import logger

from snchar.errors import DomainError, WeightMismatchError
from snchar.laurent import Exponents, LaurentPoly, PruneWindow, coefficient, lp_mul
from snchar.partitions import Partition, check_mu0, partitions_of


class CharacterTable(NamedTuple):
    """Rows indexed by shapes, columns by cycle types, both reverse-lex"""

    partitions: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]

    def value(self, lam: Partition, mu: Partition) -> int:
        return self.values[self.partitions.index(lam)][self.partitions.index(mu)]

    def column(self, mu: Partition) -> tuple[int, ...]:
        j = self.partitions.index(mu)
        return tuple(row[j] for row in self.values)


def _vandermonde_factors(m: int) -> list[LaurentPoly]:
    # i runs downwards so the upper exponent window of x_i closes early
    factors = []
    for i in range(m - 2, -1, -1):
        for j in range(i + 1, m):
            exponents = [0] * m
            exponents[i] = -1
            exponents[j] = 1
            factors.append(
                LaurentPoly(m, {(0,) * m: 1, tuple(exponents): -1})
            )
    return factors


def _power_sum(m: int, a: int) -> LaurentPoly:
    terms = {}
    for i in range(m):
        exponents = [0] * m
        exponents[i] = a
        terms[tuple(exponents)] = 1
    return LaurentPoly(m, terms)


def _fold(factors: list[LaurentPoly], target: Exponents, tail: int = 0) -> LaurentPoly:
    """
    Multiply ``factors`` left to right, keeping only terms that can still be
    completed to ``target``. ``tail`` is the per-variable exponent range
    ``[0, tail]`` of a further factor the caller handles itself.
    """
    m = len(target)
    suffix_lo: list[Exponents] = [(0,) * m] * (len(factors) + 1)
    suffix_hi: list[Exponents] = [(tail,) * m] * (len(factors) + 1)
    for k in range(len(factors) - 1, -1, -1):
        lo, hi = factors[k].exponent_bounds()
        suffix_lo[k] = tuple(map(add, suffix_lo[k + 1], lo))
        suffix_hi[k] = tuple(map(add, suffix_hi[k + 1], hi))

    product = LaurentPoly.constant(m)
    for k, factor in enumerate(factors):
        window = PruneWindow(
            lower=tuple(t - hi for t, hi in zip(target, suffix_hi[k + 1])),
            upper=tuple(t - lo for t, lo in zip(target, suffix_lo[k + 1])),
        )
        product = lp_mul(product, factor, prune=window)
        if product.is_zero():
            break
    logger.debug(
        f"folded {len(factors)} factors in {m} variables, {len(product)} terms kept"
    )
    return product


def character_ct(lam: Partition, mu: Partition, num_vars: int | None = None) -> int:
    """
    Character value ``chi^lam(mu)`` by constant-term extraction.

    ``num_vars`` defaults to ``len(lam)``; any larger value gives the same result.
    """
    if lam.weight != mu.weight:
        raise WeightMismatchError(
            f"|lambda|={lam.weight} differs from |mu|={mu.weight}"
        )
    m = lam.length if num_vars is None else num_vars
    if m < lam.length:
        raise DomainError(f"{m} variables cannot carry the {lam.length} rows of ({lam})")
    if m == 0:
        return 1

    factors = _vandermonde_factors(m) + [_power_sum(m, a) for a in mu.parts]
    target = lam.padded(m)
    return coefficient(_fold(factors, target), target)


def character_padded(lam: Partition, mu0: Partition) -> int:
    """
    ``chi^lam(mu0 1^{n-|mu0|})`` with ``n = |lam|``.

    Only the prefactor ``prod_{i<j}(1 - x_j/x_i) * prod_k p_{a_k}`` is expanded;
    the power ``p_1^N`` of the ones is applied term by term through the
    multinomial coefficient ``N! / prod_i (lam_i - e_i)!``.
    """
    check_mu0(mu0)
    n = lam.weight
    if n < mu0.weight:
        raise DomainError(f"|lambda|={n} is smaller than |mu0|={mu0.weight}")
    m = lam.length
    if m == 0:
        return 1
    free = n - mu0.weight

    factors = _vandermonde_factors(m) + [_power_sum(m, a) for a in mu0.parts]
    target = lam.padded(m)
    prefactor = _fold(factors, target, tail=free)

    total = 0
    for exponents, coeff in prefactor.terms.items():
        residual = [t - e for t, e in zip(target, exponents)]
        if min(residual) < 0 or sum(residual) != free:
            continue
        total += coeff * factorial(free) // prod(factorial(r) for r in residual)
    return total


def character_table(n: int) -> CharacterTable:
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    shapes = tuple(partitions_of(n))
    logger.debug(f"character table of S_{n}: {len(shapes)} classes")
    return CharacterTable(
        partitions=shapes,
        values=tuple(
            tuple(character_ct(lam, mu) for mu in shapes) for lam in shapes
        ),
    )
