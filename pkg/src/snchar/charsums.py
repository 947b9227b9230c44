"""
Restricted sums of character powers at ``mu = mu0 1^{n-|mu0|}``.

Two-row, bounded-row, meta-hook and all-shape sums read every character from
``character_padded``. Hook characters come from the generating function

    F(x) = sum_j chi^{(j,1^{n-j})}(mu) x^j = x (1+x)^{n-1-|mu0|} prod_i (x^{a_i} - (-1)^{a_i})

since an m-row hook would cost ``2^{m-1}`` prefactor terms in the padded formula.
"""

from collections.abc import Iterator

from loguru import logger
from sympy import Poly, symbols

from snchar.characters import character_padded
from snchar.data.models import SUM_FAMILY, SumRequest
from snchar.errors import DomainError
from snchar.partitions import (
    Partition,
    check_mu0,
    in_meta_hook,
    partitions_of,
    two_row,
)

x = symbols("x")


def hook_gf_coeffs(mu0: Partition, n: int) -> list[tuple[int, int]]:
    """
    Nonzero coefficients ``(j, chi^{(j,1^{n-j})}(mu0 1^{n-|mu0|}))``, ascending in ``j``.

    ``n = |mu0|`` is allowed for non-empty ``mu0``; then the ``(1+x)`` power is
    ``-1`` and the division is exact because every factor vanishes at ``x = -1``.
    """
    check_mu0(mu0)
    free = n - 1 - mu0.weight
    if free < -1 or (free == -1 and not mu0.parts):
        raise DomainError(
            f"hook generating function needs n >= {max(1, mu0.weight)}, got n={n}"
        )

    product = Poly(x, x)
    for a in mu0.parts:
        product *= Poly(x**a - (-1) ** a, x)
    if free >= 0:
        product *= Poly(1 + x, x) ** free
    else:
        product = product.exquo(Poly(1 + x, x))

    return [
        (j, int(c))
        for (j,), c in sorted(product.terms())
        if c != 0
    ]


def _shapes(req: SumRequest) -> Iterator[Partition]:
    match req.family:
        case SUM_FAMILY.ROWS_BOUNDED:
            yield from partitions_of(req.n, max_parts=req.r)
        case SUM_FAMILY.TWO_ROW:
            for j in range(req.n // 2 + 1):
                yield two_row(req.n, j)
        case SUM_FAMILY.META_HOOK:
            for lam in partitions_of(req.n):
                if in_meta_hook(lam, req.k, req.l):
                    yield lam
        case SUM_FAMILY.ALL_SHAPES:
            yield from partitions_of(req.n)
        case _:
            raise DomainError(f"no shape stream for family {req.family}")


def power_sum(req: SumRequest) -> int:
    """``sum_lam chi^lam(mu0 1^{n-|mu0|})^s`` over the requested family of shapes"""
    if req.family == SUM_FAMILY.HOOK:
        total = sum(c**req.s for _, c in hook_gf_coeffs(req.mu0, req.n))
    else:
        total = sum(character_padded(lam, req.mu0) ** req.s for lam in _shapes(req))
    logger.debug(f"{req.family} s={req.s} mu0=({req.mu0}) n={req.n}: {total}")
    return total


def phi2(mu0: Partition, n: int) -> int:
    """Sum of squared hook characters"""
    check_mu0(mu0)
    if n < max(1, mu0.weight):
        raise DomainError(f"phi2 needs n >= {max(1, mu0.weight)}, got n={n}")
    return sum(c * c for _, c in hook_gf_coeffs(mu0, n))


def psi2(mu0: Partition, n: int) -> int:
    """Sum of squared characters of the shapes ``(n-j, j)``, ``0 <= j <= n/2``"""
    check_mu0(mu0)
    if n < mu0.weight:
        raise DomainError(f"psi2 needs n >= |mu0|={mu0.weight}, got n={n}")
    return sum(
        character_padded(two_row(n, j), mu0) ** 2 for j in range(n // 2 + 1)
    )


def remarkable_identity_holds(n: int) -> bool:
    """``2 psi2((3), n) == phi2((3,2), n+2)``, evaluated by direct summation"""
    if n < 3:
        raise DomainError(f"the identity needs n >= 3, got n={n}")
    return 2 * psi2(Partition(parts=(3,)), n) == phi2(Partition(parts=(3, 2)), n + 2)
