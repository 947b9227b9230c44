"""
Sparse Laurent polynomials in ``m`` variables with exact integer coefficients.

Terms are kept in a dict ``exponent vector -> coefficient``; zero coefficients
are never stored. Instances are immutable once built.
"""

from collections.abc import Mapping
from operator import add
from types import MappingProxyType
from typing import NamedTuple

from snchar.errors import VariableCountError

Exponents = tuple[int, ...]


class PruneWindow(NamedTuple):
    """Per-variable exponent bounds a term must satisfy to be kept"""

    lower: Exponents
    upper: Exponents

    def admits(self, exponents: Exponents) -> bool:
        for e, lo, hi in zip(exponents, self.lower, self.upper):
            if e < lo or e > hi:
                return False
        return True


class LaurentPoly:
    __slots__ = ("num_vars", "_terms")

    def __init__(self, num_vars: int, terms: Mapping[Exponents, int] | None = None):
        self.num_vars = num_vars
        cleaned: dict[Exponents, int] = {}
        for exponents, coeff in (terms or {}).items():
            exponents = tuple(exponents)
            if len(exponents) != num_vars:
                raise VariableCountError(
                    f"exponent vector {exponents} does not have {num_vars} entries"
                )
            if coeff:
                cleaned[exponents] = cleaned.get(exponents, 0) + coeff
        self._terms = {e: c for e, c in cleaned.items() if c}

    @classmethod
    def _from_clean(cls, num_vars: int, terms: dict[Exponents, int]) -> "LaurentPoly":
        poly = cls.__new__(cls)
        poly.num_vars = num_vars
        poly._terms = terms
        return poly

    @classmethod
    def constant(cls, num_vars: int, value: int = 1) -> "LaurentPoly":
        return cls(num_vars, {(0,) * num_vars: value})

    @classmethod
    def variable(cls, num_vars: int, index: int, power: int = 1) -> "LaurentPoly":
        exponents = [0] * num_vars
        exponents[index] = power
        return cls(num_vars, {tuple(exponents): 1})

    @property
    def terms(self) -> Mapping[Exponents, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def exponent_bounds(self) -> tuple[Exponents, Exponents]:
        """Componentwise minimum and maximum exponent over all terms"""
        if not self._terms:
            zero = (0,) * self.num_vars
            return zero, zero
        columns = list(zip(*self._terms))
        if not columns:
            return (), ()
        return tuple(map(min, columns)), tuple(map(max, columns))

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return lp_add(self, other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._from_clean(
            self.num_vars, {e: -c for e, c in self._terms.items()}
        )

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return lp_add(self, -other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        return lp_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.num_vars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return "LaurentPoly(0)"
        shown = " + ".join(f"{c}*x^{e}" for e, c in sorted(self._terms.items()))
        return f"LaurentPoly({shown})"


def _check_vars(p: LaurentPoly, q: LaurentPoly) -> None:
    if p.num_vars != q.num_vars:
        raise VariableCountError(
            f"cannot combine polynomials in {p.num_vars} and {q.num_vars} variables"
        )


def lp_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    _check_vars(p, q)
    terms = dict(p._terms)
    for exponents, coeff in q._terms.items():
        total = terms.get(exponents, 0) + coeff
        if total:
            terms[exponents] = total
        else:
            terms.pop(exponents, None)
    return LaurentPoly._from_clean(p.num_vars, terms)


def lp_mul(
    p: LaurentPoly, q: LaurentPoly, prune: PruneWindow | None = None
) -> LaurentPoly:
    """
    Exact product of ``p`` and ``q``.

    With ``prune``, product terms outside the window are dropped; the caller
    derives the window from the sought coefficient and the exponent ranges of
    the factors still to be multiplied in.
    """
    _check_vars(p, q)
    terms: dict[Exponents, int] = {}
    for e1, c1 in p._terms.items():
        for e2, c2 in q._terms.items():
            exponents = tuple(map(add, e1, e2))
            if prune is not None and not prune.admits(exponents):
                continue
            terms[exponents] = terms.get(exponents, 0) + c1 * c2
    return LaurentPoly._from_clean(
        p.num_vars, {e: c for e, c in terms.items() if c}
    )


def coefficient(p: LaurentPoly, exponents: Exponents) -> int:
    exponents = tuple(exponents)
    if len(exponents) != p.num_vars:
        raise VariableCountError(
            f"exponent vector {exponents} does not have {p.num_vars} entries"
        )
    return p._terms.get(exponents, 0)


def constant_term(p: LaurentPoly) -> int:
    return coefficient(p, (0,) * p.num_vars)
