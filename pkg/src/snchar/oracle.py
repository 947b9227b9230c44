"""
Murnaghan-Nakayama rule on beta-sets (abacus with one runner).

Removing a rim hook of size ``k`` from a shape moves one bead from position
``b`` to the free position ``b - k``; the leg length of the hook is the number
of beads strictly between the two positions.
"""

from functools import lru_cache

from snchar.errors import DomainError, WeightMismatchError
from snchar.partitions import Partition, partitions_of


def _beta_set(lam: Partition) -> tuple[int, ...]:
    m = lam.length
    return tuple(part + m - 1 - i for i, part in enumerate(lam.parts))


def mn_character(lam: Partition, mu: Partition) -> int:
    if lam.weight != mu.weight:
        raise WeightMismatchError(
            f"|lambda|={lam.weight} differs from |mu|={mu.weight}"
        )
    cycles = mu.parts

    # the cache lives for one call only
    @lru_cache(maxsize=None)
    def _chi(beads: tuple[int, ...], consumed: int) -> int:
        if consumed == len(cycles):
            return 1
        k = cycles[consumed]
        occupied = set(beads)
        total = 0
        for bead in beads:
            landing = bead - k
            if landing < 0 or landing in occupied:
                continue
            leg = sum(1 for other in beads if landing < other < bead)
            moved = tuple(sorted((occupied - {bead}) | {landing}, reverse=True))
            value = _chi(moved, consumed + 1)
            total += -value if leg % 2 else value
        return total

    return _chi(_beta_set(lam), 0)


def sum_powers_brute(r: int, s: int, mu: Partition) -> int:
    """Sum of ``chi^lam(mu)^s`` over shapes ``lam`` of ``|mu|`` with at most ``r`` rows"""
    if r < 1 or s < 1:
        raise DomainError(f"r and s must be >= 1, got r={r}, s={s}")
    return sum(
        mn_character(lam, mu) ** s for lam in partitions_of(mu.weight, max_parts=r)
    )
