"""
Partitions, cycle types and the product formulas attached to shapes.

A ``Partition`` is stored without trailing zeros; it serves both as a shape
``lambda`` (an irreducible representation of S_n) and as a cycle type ``mu``
(a conjugacy class).
"""

import re
from collections import Counter
from collections.abc import Iterable, Iterator
from fractions import Fraction
from math import factorial, prod

from pydantic import BaseModel, ConfigDict, PrivateAttr, field_validator

from snchar.errors import DomainError, PartitionError


class Partition(BaseModel):
    model_config = ConfigDict(frozen=True)

    parts: tuple[int, ...] = ()
    _weight: int = PrivateAttr(default=0)

    @field_validator("parts")
    @classmethod
    def _check_parts(cls, parts: tuple[int, ...]) -> tuple[int, ...]:
        for part in parts:
            if part <= 0:
                raise ValueError(f"non-positive part: {part}")
        for previous, current in zip(parts, parts[1:]):
            if current > previous:
                raise ValueError(f"parts must be non-increasing: {parts}")
        return parts

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Sort ``parts`` non-increasing and validate them"""
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        for part in parts:
            if part <= 0:
                raise PartitionError(f"non-positive part: {part}")
        return cls(parts=parts)

    def model_post_init(self, __context) -> None:
        self._weight = sum(self.parts)

    @property
    def weight(self) -> int:
        return self._weight

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """0-based part access, zero past the last row"""
        return self.parts[i] if i < len(self.parts) else 0

    def padded(self, m: int) -> tuple[int, ...]:
        if m < len(self.parts):
            raise DomainError(f"cannot pad {self} to {m} rows")
        return self.parts + (0,) * (m - len(self.parts))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


class CycleType(BaseModel):
    """Frequency notation ``1^{a_1} 2^{a_2} ...``; only positive counts are stored"""

    model_config = ConfigDict(frozen=True)

    multiplicities: dict[int, int] = {}

    @field_validator("multiplicities")
    @classmethod
    def _check_multiplicities(cls, value: dict[int, int]) -> dict[int, int]:
        for size, count in value.items():
            if size <= 0 or count <= 0:
                raise ValueError(f"invalid multiplicity {size}^{count}")
        return dict(sorted(value.items(), reverse=True))

    @classmethod
    def from_partition(cls, mu: Partition) -> "CycleType":
        return cls(multiplicities=dict(Counter(mu.parts)))

    def to_partition(self) -> Partition:
        return Partition.from_parts(
            size for size, count in self.multiplicities.items() for _ in range(count)
        )


_TOKEN = re.compile(r"^(-?\d+)(?:\^(-?\d+))?$")


def parse_partition(text: str) -> Partition:
    """
    Parse comma form ``3,2,1`` or frequency form ``2^3 1^4``.

    Parts may be given in any order; the result is sorted non-increasing.
    An empty (or blank) string is the empty partition.

    Examples
    --------
    >>> parse_partition("3,2").parts
    (3, 2)
    >>> parse_partition("2^3 1^4").parts
    (2, 2, 2, 1, 1, 1, 1)
    """
    text = text.strip()
    if text in ("", "()"):
        return Partition()

    parts: list[int] = []
    for token in re.split(r"[,\s]+", text.strip("()")):
        if token == "":
            continue
        match = _TOKEN.match(token)
        if match is None:
            raise PartitionError(f"malformed partition token {token!r}")
        part = int(match.group(1))
        if part <= 0:
            raise PartitionError(f"non-positive part in token {token!r}")
        count = 1 if match.group(2) is None else int(match.group(2))
        if count <= 0:
            raise PartitionError(f"non-positive multiplicity in token {token!r}")
        parts.extend([part] * count)
    return Partition.from_parts(parts)


def frequency_form(mu: Partition) -> str:
    """``(3,2,1,1)`` -> ``3 2 1^2``"""
    tokens = []
    for size, count in CycleType.from_partition(mu).multiplicities.items():
        tokens.append(str(size) if count == 1 else f"{size}^{count}")
    return " ".join(tokens)


def partitions_of(
    n: int, max_parts: int | None = None, min_part: int = 1
) -> Iterator[Partition]:
    """
    Yield every partition of ``n`` with at most ``max_parts`` parts (and every
    part at least ``min_part``) exactly once, in reverse-lexicographic order.
    """
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    slots = n if max_parts is None else max_parts

    def _descend(remaining: int, largest: int, slots: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(remaining, largest), min_part - 1, -1):
            # the remaining slots cannot absorb the rest any more
            if first * slots < remaining:
                break
            for rest in _descend(remaining - first, first, slots - 1):
                yield (first,) + rest

    for parts in _descend(n, n, slots):
        yield Partition(parts=parts)


def mu0_catalog(max_weight: int) -> Iterator[Partition]:
    """Every mu0 with parts >= 2 and weight <= max_weight, by weight then reverse-lex"""
    for weight in range(max_weight + 1):
        yield from partitions_of(weight, min_part=2)


def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return Partition()
    return Partition(
        parts=tuple(
            sum(1 for part in lam.parts if part > column)
            for column in range(lam.parts[0])
        )
    )


def hook(n: int, j: int) -> Partition:
    """The hook ``(j, 1^{n-j})``, 1 <= j <= n"""
    if not 1 <= j <= n:
        raise DomainError(f"hook arm {j} outside 1..{n}")
    return Partition(parts=(j,) + (1,) * (n - j))


def two_row(n: int, j: int) -> Partition:
    """The shape ``(n-j, j)``; ``j = 0`` gives the single row ``(n)``"""
    if not 0 <= j <= n // 2:
        raise DomainError(f"second row {j} outside 0..{n // 2}")
    return Partition(parts=tuple(p for p in (n - j, j) if p > 0))


def f_lambda(lam: Partition) -> int:
    """
    Number of standard Young tableaux of shape ``lam`` (Young-Frobenius formula).

    With ``l_i = lam_i + r - i``:  f = n! * prod_{i<j}(l_i - l_j) / prod_i l_i!
    """
    r = lam.length
    shifted = [lam.parts[i] + r - 1 - i for i in range(r)]
    # reduce n! / prod l_i! before the Vandermonde factors come in
    value = Fraction(factorial(lam.weight), prod(factorial(l) for l in shifted))
    for i in range(r):
        for j in range(i + 1, r):
            value *= shifted[i] - shifted[j]
    return int(value)


def centralizer_order(mu: CycleType | Partition) -> int:
    """``prod_i i^{a_i} a_i!``, the order of the centralizer of a permutation of type ``mu``"""
    if isinstance(mu, Partition):
        mu = CycleType.from_partition(mu)
    return prod(size**count * factorial(count) for size, count in mu.multiplicities.items())


def sign_of(mu: Partition) -> int:
    return -1 if (mu.weight - mu.length) % 2 else 1


def check_mu0(mu0: Partition) -> Partition:
    if any(part == 1 for part in mu0.parts):
        raise PartitionError(f"mu0 must have every part >= 2, got ({mu0})")
    return mu0


def pad_with_ones(mu0: Partition, n: int) -> Partition:
    """``mu0 1^{n - |mu0|}``"""
    check_mu0(mu0)
    if n < mu0.weight:
        raise DomainError(f"n={n} is smaller than |mu0|={mu0.weight}")
    return Partition(parts=mu0.parts + (1,) * (n - mu0.weight))


def in_meta_hook(lam: Partition, k: int, l: int) -> bool:
    """True iff ``lam`` has no cell at row k+1, column l+1"""
    if k < 0 or l < 0:
        raise DomainError(f"meta-hook bounds must be >= 0, got k={k}, l={l}")
    return lam.part(k) <= l
