from enum import StrEnum

from pydantic import BaseModel, ConfigDict, model_validator

from snchar.partitions import Partition


class SUM_FAMILY(StrEnum):
    ROWS_BOUNDED = "rows_bounded"
    HOOK = "hook"
    TWO_ROW = "two_row"
    META_HOOK = "meta_hook"
    ALL_SHAPES = "all_shapes"


class CENTRAL_BASE(StrEnum):
    CENTRAL_2N = "C(2n,n)"
    CENTRAL_2N_MINUS_2 = "C(2n-2,n-1)"


class CATALOG_KIND(StrEnum):
    PHI2 = "phi2"
    PSI2 = "psi2"


class ENGINE(StrEnum):
    CT = "ct"
    MN = "mn"
    BOTH = "both"


class OUTPUT_FORMAT(StrEnum):
    TEXT = "text"
    JSON = "json"


class SumRequest(BaseModel):
    """
    One restricted sum of character powers at ``mu = mu0 1^{n-|mu0|}``.

    ``r`` is required by ``rows_bounded`` only, ``k`` and ``l`` by ``meta_hook`` only.
    """

    model_config = ConfigDict(frozen=True)

    family: SUM_FAMILY
    s: int = 2
    mu0: Partition = Partition()
    n: int
    r: int | None = None
    k: int | None = None
    l: int | None = None

    @model_validator(mode="after")
    def _check_family_parameters(self) -> "SumRequest":
        if self.s < 1:
            raise ValueError(f"power s must be >= 1, got {self.s}")
        if any(part == 1 for part in self.mu0.parts):
            raise ValueError(f"mu0 must have every part >= 2, got ({self.mu0})")
        if self.n < self.mu0.weight:
            raise ValueError(f"n={self.n} is smaller than |mu0|={self.mu0.weight}")

        if self.family == SUM_FAMILY.ROWS_BOUNDED:
            if self.r is None or self.r < 1:
                raise ValueError("rows_bounded needs r >= 1")
        elif self.r is not None:
            raise ValueError(f"{self.family} does not take r")

        if self.family == SUM_FAMILY.META_HOOK:
            if self.k is None or self.l is None or self.k < 0 or self.l < 0:
                raise ValueError("meta_hook needs k >= 0 and l >= 0")
        elif self.k is not None or self.l is not None:
            raise ValueError(f"{self.family} does not take k or l")

        if self.family == SUM_FAMILY.HOOK and self.n < 1:
            raise ValueError("hook sums need n >= 1")
        return self


class FormulaRecord(BaseModel):
    """Serialized closed form; polynomials as integer coefficients, low to high"""

    num: list[int]
    den: list[int]
    base: CENTRAL_BASE
    valid_from: int


class CatalogEntry(BaseModel):
    kind: CATALOG_KIND
    mu0: list[int]
    formula: FormulaRecord
    certified_range: tuple[int, int]
