"""
Univariate rational functions in ``n`` with exact coefficients.

A ``RationalFunction`` is always stored in normal form: integer numerator and
denominator coefficients (low to high) without a common polynomial factor,
joint content 1, and a positive leading denominator coefficient. Equal
functions therefore have equal fields.
"""

from fractions import Fraction
from math import gcd, lcm

from pydantic import BaseModel, ConfigDict, model_validator
from sympy import Expr, Poly, Rational, cancel, fraction, symbols, sympify

n = symbols("n")


def _poly(coeffs) -> Poly:
    return Poly(list(reversed([Rational(c) for c in coeffs])), n, domain="QQ")


def _int_coeffs(poly: Poly, scale: int) -> tuple[int, ...]:
    scaled = [c * scale for c in reversed(poly.all_coeffs())]
    return tuple(int(c) for c in scaled)


def _normalize(num: Poly, den: Poly) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if den.is_zero:
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero:
        return (0,), (1,)

    common = num.gcd(den)
    num, den = num.exquo(common), den.exquo(common)

    scale = lcm(*(Rational(c).q for c in num.all_coeffs() + den.all_coeffs()))
    num_ints, den_ints = _int_coeffs(num, scale), _int_coeffs(den, scale)
    content = gcd(*num_ints, *den_ints)
    if den_ints[-1] < 0:
        content = -content
    return (
        tuple(c // content for c in num_ints),
        tuple(c // content for c in den_ints),
    )


def format_poly(coeffs: tuple[int, ...]) -> str:
    """``(9, -5, 1)`` -> ``n^2 - 5*n + 9``"""
    pieces: list[str] = []
    for degree in range(len(coeffs) - 1, -1, -1):
        c = coeffs[degree]
        if c == 0:
            continue
        monomial = "" if degree == 0 else ("n" if degree == 1 else f"n^{degree}")
        magnitude = abs(c)
        if monomial and magnitude == 1:
            body = monomial
        elif monomial:
            body = f"{magnitude}*{monomial}"
        else:
            body = str(magnitude)
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(pieces) if pieces else "0"


def _wrap(text: str) -> str:
    return f"({text})" if " " in text or "*" in text else text


class RationalFunction(BaseModel):
    model_config = ConfigDict(frozen=True)

    num: tuple[int, ...] = (0,)
    den: tuple[int, ...] = (1,)

    @model_validator(mode="before")
    @classmethod
    def _to_normal_form(cls, data):
        if isinstance(data, dict):
            num = data.get("num", (0,))
            den = data.get("den", (1,))
            num_n, den_n = _normalize(_poly(num or (0,)), _poly(den or (0,)))
            data = {**data, "num": num_n, "den": den_n}
        return data

    @classmethod
    def from_expr(cls, expr: Expr | int | str) -> "RationalFunction":
        """Build from a sympy expression in the symbol ``n``"""
        top, bottom = fraction(cancel(sympify(expr)))
        return cls.from_polys(Poly(top, n, domain="QQ"), Poly(bottom, n, domain="QQ"))

    @classmethod
    def constant(cls, value: int | Fraction) -> "RationalFunction":
        value = Fraction(value)
        return cls(num=(value.numerator,), den=(value.denominator,))

    @classmethod
    def from_polys(cls, num: Poly, den: Poly) -> "RationalFunction":
        # the validator normalizes; pass coefficient lists low to high
        num = Poly(num, n, domain="QQ")
        den = Poly(den, n, domain="QQ")
        return cls(
            num=tuple(reversed(num.all_coeffs())),
            den=tuple(reversed(den.all_coeffs())),
        )

    def num_poly(self) -> Poly:
        return _poly(self.num)

    def den_poly(self) -> Poly:
        return _poly(self.den)

    def to_expr(self) -> Expr:
        return self.num_poly().as_expr() / self.den_poly().as_expr()

    def is_zero(self) -> bool:
        return self.num == (0,)

    @property
    def num_degree(self) -> int:
        return len(self.num) - 1

    @property
    def den_degree(self) -> int:
        return len(self.den) - 1

    def __call__(self, value: int) -> Fraction:
        top = sum(c * value**i for i, c in enumerate(self.num))
        bottom = sum(c * value**i for i, c in enumerate(self.den))
        if bottom == 0:
            raise ZeroDivisionError(
                f"denominator of {self.to_text()} vanishes at n={value}"
            )
        return Fraction(top, bottom)

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(other)
        return NotImplemented

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction.from_polys(
            self.num_poly() * other.den_poly() + other.num_poly() * self.den_poly(),
            self.den_poly() * other.den_poly(),
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(num=tuple(-c for c in self.num), den=self.den)

    def __sub__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction.from_polys(
            self.num_poly() * other.num_poly(), self.den_poly() * other.den_poly()
        )

    __rmul__ = __mul__

    def integer_denominator_roots(self) -> list[int]:
        roots = Poly(self.den_poly().as_expr(), n, domain="ZZ").ground_roots()
        # ground_roots also reports rational roots such as 1/2
        return sorted(int(root) for root in roots if root.is_integer)

    def to_text(self) -> str:
        """Expanded form, e.g. ``(n^2 - 5*n + 9)/(4*n^3 - 4*n^2 - 5*n + 3)``"""
        if self.den == (1,):
            return format_poly(self.num)
        return f"{_wrap(format_poly(self.num))}/{_wrap(format_poly(self.den))}"

    def pretty(self) -> str:
        """Denominator split into integer linear factors where it has them,
        e.g. ``(n^2 - 5*n + 9)/((2*n - 1)*(2*n - 3)*(n + 1))``"""
        top = _wrap(format_poly(self.num))
        if self.den == (1,):
            return top

        content, factors = Poly(self.den_poly().as_expr(), n, domain="ZZ").factor_list()
        rendered = []
        for factor, multiplicity in sorted(
            factors, key=lambda item: [-int(c) for c in item[0].all_coeffs()]
        ):
            coeffs = tuple(int(c) for c in reversed(factor.all_coeffs()))
            piece = f"({format_poly(coeffs)})"
            rendered.append(piece if multiplicity == 1 else f"{piece}^{multiplicity}")
        if content != 1 or not rendered:
            rendered.insert(0, str(int(content)))
        bottom = "*".join(rendered)
        if len(rendered) > 1:
            bottom = f"({bottom})"
        return f"{top}/{bottom}"

    def __str__(self) -> str:
        return self.to_text()
