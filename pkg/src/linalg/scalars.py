"""
Exact scalar rings: rationals (fractions.Fraction) and Laurent polynomials
in one variable with rational coefficients.

A Laurent polynomial is a {degree: coeff} mapping, frozen as a sorted tuple
with zero coefficients dropped, so equal values compare and hash equal.
"""
from enum import Enum
from fractions import Fraction
from typing import Dict, Mapping, Tuple, Union

from ..exceptions import NonInvertibleError, RingMismatchError

RationalLike = Union[int, Fraction]


class Laurent:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, RationalLike] = None):
        cleaned = {}
        for deg, coeff in (terms or {}).items():
            value = Fraction(coeff)
            if value != 0:
                cleaned[int(deg)] = value
        self._terms: Tuple[Tuple[int, Fraction], ...] = tuple(sorted(cleaned.items()))

    @classmethod
    def constant(cls, value: RationalLike) -> "Laurent":
        return cls({0: value})

    @classmethod
    def monomial(cls, coeff: RationalLike, degree: int) -> "Laurent":
        return cls({degree: coeff})

    @classmethod
    def variable(cls) -> "Laurent":
        return cls({1: 1})

    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def valuation(self) -> int:
        """Lowest degree; the zero polynomial has none"""
        if not self._terms:
            raise ValueError("The zero polynomial has no valuation")
        return self._terms[0][0]

    def constant_term(self) -> Fraction:
        return self.terms.get(0, Fraction(0))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0] == 0)

    def inverse(self) -> "Laurent":
        # only monomials are units in Q[s, 1/s]
        if not self.is_monomial():
            raise NonInvertibleError(f"{self} is not a unit of the Laurent ring")
        deg, coeff = self._terms[0]
        return Laurent.monomial(1 / coeff, -deg)

    def evaluate(self, value: RationalLike) -> Fraction:
        value = Fraction(value)
        if value == 0 and any(deg < 0 for deg, _ in self._terms):
            raise ZeroDivisionError("Negative powers cannot be evaluated at 0")
        return sum((coeff * value ** deg for deg, coeff in self._terms), Fraction(0))

    def evaluate_in_square(self, value: RationalLike) -> Fraction:
        """Evaluate a polynomial in t with even degrees only at t^2 = value"""
        value = Fraction(value)
        total = Fraction(0)
        for deg, coeff in self._terms:
            if deg % 2:
                raise ValueError(f"Odd degree {deg} in {self}; not a polynomial in t^2")
            total += coeff * value ** (deg // 2)
        return total

    @staticmethod
    def _coerce(other) -> "Laurent":
        if isinstance(other, Laurent):
            return other
        if isinstance(other, (int, Fraction)):
            return Laurent.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        total = self.terms
        for deg, coeff in other._terms:
            total[deg] = total.get(deg, 0) + coeff
        return Laurent(total)

    __radd__ = __add__

    def __neg__(self) -> "Laurent":
        return Laurent({deg: -coeff for deg, coeff in self._terms})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        product: Dict[int, Fraction] = {}
        for d1, c1 in self._terms:
            for d2, c2 in other._terms:
                product[d1 + d2] = product.get(d1 + d2, 0) + c1 * c2
        return Laurent(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Laurent":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Laurent.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant_term())
        return hash(self._terms)

    def __repr__(self) -> str:
        return f"Laurent({self.terms!r})"

    def __str__(self) -> str:
        return format_laurent(self)


def format_laurent(value: Laurent, var: str = "s") -> str:
    """Highest degree first: 's^2-s+1', '1/2*s^-2', '-s'"""
    if value.is_zero():
        return "0"
    pieces = []
    for deg, coeff in reversed(list(value.terms.items())):
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if deg == 0:
            body = str(mag)
        else:
            power = var if deg == 1 else f"{var}^{deg}"
            body = power if mag == 1 else f"{mag}*{power}"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += f"{sign}{body}"
    return text


Scalar = Union[Fraction, Laurent]


class Ring(Enum):
    RATIONAL = "Q"
    LAURENT = "Q[s,1/s]"

    def zero(self) -> Scalar:
        return Fraction(0) if self is Ring.RATIONAL else Laurent()

    def one(self) -> Scalar:
        return Fraction(1) if self is Ring.RATIONAL else Laurent.constant(1)

    def coerce(self, value) -> Scalar:
        """Bring int/Fraction/Laurent into this ring"""
        if self is Ring.RATIONAL:
            if isinstance(value, Laurent):
                if not value.is_constant():
                    raise RingMismatchError(f"{value} is not a rational constant")
                return value.constant_term()
            return Fraction(value)
        if isinstance(value, Laurent):
            return value
        return Laurent.constant(value)

    def invert(self, value: Scalar) -> Scalar:
        value = self.coerce(value)
        if self is Ring.RATIONAL:
            if value == 0:
                raise NonInvertibleError("Zero has no inverse")
            return 1 / value
        return value.inverse()

    def is_zero(self, value: Scalar) -> bool:
        return not value


def format_scalar(value, var: str = "s") -> str:
    if isinstance(value, Laurent):
        return format_laurent(value, var)
    return str(Fraction(value))
