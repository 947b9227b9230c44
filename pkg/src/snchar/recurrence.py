"""
Guessing P-recurrences ``sum_{i=0}^{L} p_i(n) a(n+i) = 0`` by undetermined coefficients.

For each ``(L, d)`` in lexicographic order the unknown coefficients of
``p_0, ..., p_L`` (degree ``<= d``) are fitted exactly on a prefix of the terms;
the remaining holdout suffix must also be annihilated before a candidate is
accepted. Accepted recurrences are empirically certified, not proved.
"""

from functools import reduce
from math import gcd, lcm

from loguru import logger
from pydantic import BaseModel, ConfigDict, field_validator
from sympy import Matrix, Poly, Rational

from snchar.errors import (
    DomainError,
    InsufficientTermsError,
    RecurrenceInconsistencyError,
    SingularPointError,
)
from snchar.rational import format_poly, n

Terms = list[tuple[int, int]]

# order 1, degree 0 needs 2 unknowns, 1 shift and a holdout of 8
MIN_TERMS = 11


def _trim(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    coeffs = tuple(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    return coeffs or (0,)


def _eval(coeffs: tuple[int, ...], value: int) -> int:
    return sum(c * value**e for e, c in enumerate(coeffs))


class Recurrence(BaseModel):
    """``coeffs[i]`` holds ``p_i(n)``, integer coefficients low to high"""

    model_config = ConfigDict(frozen=True)

    coeffs: tuple[tuple[int, ...], ...]

    @field_validator("coeffs")
    @classmethod
    def _check_coeffs(
        cls, value: tuple[tuple[int, ...], ...]
    ) -> tuple[tuple[int, ...], ...]:
        if len(value) < 2:
            raise ValueError("a recurrence needs at least p_0 and p_1")
        value = tuple(_trim(p) for p in value)
        if value[-1] == (0,):
            raise ValueError("leading coefficient p_L is identically zero")
        return value

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        return max(len(p) - 1 for p in self.coeffs)

    def p(self, i: int, value: int) -> int:
        return _eval(self.coeffs[i], value)

    def to_text(self) -> str:
        """e.g. ``(n + 2)*a(n+1) + (-4*n - 2)*a(n) = 0``"""
        pieces = []
        for i in range(self.order, -1, -1):
            if self.coeffs[i] == (0,):
                continue
            shift = "a(n)" if i == 0 else f"a(n+{i})"
            pieces.append(f"({format_poly(self.coeffs[i])})*{shift}")
        return " + ".join(pieces) + " = 0"

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "degree": self.degree,
            "coefficients": [list(p) for p in self.coeffs],
        }


def _check_consecutive(terms: Terms) -> None:
    for (n0, _), (n1, _) in zip(terms, terms[1:]):
        if n1 != n0 + 1:
            raise DomainError(f"terms are not consecutive: n={n0} followed by n={n1}")


def verify_recurrence(rec: Recurrence, terms: Terms) -> bool:
    _check_consecutive(terms)
    values = [v for _, v in terms]
    for k in range(len(terms) - rec.order):
        n_k = terms[k][0]
        if sum(rec.p(i, n_k) * values[k + i] for i in range(rec.order + 1)):
            return False
    return True


def holdout_report(rec: Recurrence, terms: Terms) -> str:
    return (
        f"annihilates n={terms[0][0]}..{terms[-1][0]} (empirically certified)"
        if verify_recurrence(rec, terms)
        else f"FAILS on n={terms[0][0]}..{terms[-1][0]}"
    )


def _kernel_to_recurrence(vector, order: int, degree: int) -> Recurrence | None:
    entries = [Rational(c) for c in vector]
    scale = lcm(*(c.q for c in entries))
    ints = [int(c * scale) for c in entries]
    content = gcd(*ints)
    if content == 0:
        return None
    ints = [c // content for c in ints]
    coeffs = tuple(
        _trim(tuple(ints[i * (degree + 1) : (i + 1) * (degree + 1)]))
        for i in range(order + 1)
    )
    if coeffs[-1] == (0,):
        return None
    return Recurrence(coeffs=coeffs)


def _fix_sign(coeffs: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    flat = [c for p in coeffs for c in p]
    content = gcd(*flat)
    if coeffs[-1][-1] < 0:
        content = -content
    return tuple(tuple(c // content for c in p) for p in coeffs)


def _normalize(rec: Recurrence, terms: Terms) -> Recurrence:
    """Strip a common polynomial factor of the ``p_i``, clear content, make ``p_L`` lead positive"""
    polys = [Poly(list(reversed(p)), n, domain="ZZ") for p in rec.coeffs]
    common = reduce(lambda a, b: a.gcd(b), [p for p in polys if not p.is_zero])
    coeffs = rec.coeffs
    if common.degree() > 0:
        reduced = Recurrence(
            coeffs=tuple(
                tuple(int(c) for c in reversed(p.exquo(common).all_coeffs()))
                for p in polys
            )
        )
        if verify_recurrence(reduced, terms):
            coeffs = reduced.coeffs
        else:
            logger.warning(
                f"common factor {common.as_expr()} kept: "
                "the reduced recurrence fails on the input terms"
            )
    return Recurrence(coeffs=_fix_sign(coeffs))


def guess_recurrence(
    terms: Terms, max_order: int = 8, max_degree: int = 8
) -> Recurrence | None:
    """
    Smallest ``(L, d)`` recurrence that fits the terms and survives the holdout.

    Returns ``None`` when nothing within the bounds fits, and raises
    ``InsufficientTermsError`` when there are too few terms to try even ``(1, 0)``.
    """
    if len(terms) < MIN_TERMS:
        raise InsufficientTermsError(
            f"need at least {MIN_TERMS} terms to guess a recurrence, got {len(terms)}"
        )
    _check_consecutive(terms)
    values = [v for _, v in terms]

    for order in range(1, max_order + 1):
        for degree in range(max_degree + 1):
            unknowns = (order + 1) * (degree + 1)
            holdout = max(order + degree + 5, 8)
            fit = len(terms) - holdout
            equations = fit - order
            if equations < unknowns:
                logger.debug(
                    f"(L={order}, d={degree}) skipped: {equations} equations "
                    f"for {unknowns} unknowns"
                )
                continue

            rows = [
                [
                    terms[k][0] ** e * values[k + i]
                    for i in range(order + 1)
                    for e in range(degree + 1)
                ]
                for k in range(equations)
            ]
            kernel = Matrix(rows).nullspace()
            logger.debug(f"(L={order}, d={degree}) kernel dimension {len(kernel)}")
            for vector in kernel:
                candidate = _kernel_to_recurrence(vector, order, degree)
                if candidate is None or not verify_recurrence(candidate, terms):
                    continue
                rec = _normalize(candidate, terms)
                logger.info(f"accepted (L={order}, d={degree}): {rec.to_text()}")
                return rec
    return None


def extend_sequence(rec: Recurrence, seed: Terms, count: int) -> Terms:
    """``count`` further terms after ``seed``, exact integer division by ``p_L(n)``"""
    if len(seed) < rec.order:
        raise DomainError(
            f"seed has {len(seed)} terms, the recurrence needs {rec.order}"
        )
    _check_consecutive(seed)
    window = list(seed[-rec.order :])
    out: Terms = []
    for _ in range(count):
        start = window[0][0]
        lead = rec.p(rec.order, start)
        if lead == 0:
            raise SingularPointError(
                f"p_{rec.order}(n) vanishes at n={start}; cannot compute a({start + rec.order})"
            )
        rest = sum(rec.p(i, start) * window[i][1] for i in range(rec.order))
        if rest % lead:
            raise RecurrenceInconsistencyError(
                f"a({start + rec.order}) = {-rest}/{lead} is not an integer"
            )
        term = (start + rec.order, -rest // lead)
        out.append(term)
        window = window[1:] + [term]
    return out
