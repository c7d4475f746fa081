"""Rational functions in a formal loop parameter, used as generic Temperley-Lieb scalars.

Numerator and denominator are ``flint.fmpq_poly`` values kept coprime with a monic
denominator, so equal functions have equal representations.
"""

from __future__ import annotations

from fractions import Fraction

import flint

from anfield.cyclotomic import LaurentPoly

__all__ = ["RationalFunction", "DELTA"]


def _poly_coeffs(p: flint.fmpq_poly) -> list[Fraction]:
    return [Fraction(int(c.p), int(c.q)) for c in p.coeffs()]


class RationalFunction:
    """An element of Q(delta).

    >>> d = RationalFunction.variable()
    >>> (d * d - 1) / (d - 1) == d + 1
    True
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, _normalized: bool = False):
        num = flint.fmpq_poly(num) if not isinstance(num, flint.fmpq_poly) else num
        if den is None:
            den = flint.fmpq_poly([1])
        elif not isinstance(den, flint.fmpq_poly):
            den = flint.fmpq_poly(den)
        if not _normalized:
            if den.is_zero():
                raise ZeroDivisionError("rational function with zero denominator")
            if num.is_zero():
                den = flint.fmpq_poly([1])
            else:
                g = num.gcd(den)
                if g.degree() > 0:
                    num = num // g
                    den = den // g
                lead = den.coeffs()[-1]
                if lead != 1:
                    num = num / lead
                    den = den / lead
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def variable(cls) -> RationalFunction:
        return cls(flint.fmpq_poly([0, 1]), _normalized=True)

    @classmethod
    def constant(cls, value) -> RationalFunction:
        value = Fraction(value)
        return cls(flint.fmpq_poly([flint.fmpq(value.numerator, value.denominator)]), _normalized=True)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(other)
        return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RationalFunction(flint.fmpq_poly(), _normalized=True)
            other = Fraction(other)
            return RationalFunction(
                self.num * flint.fmpq(other.numerator, other.denominator), self.den, _normalized=True
            )
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num**n, self.den**n, _normalized=True)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            if self.den.degree() == 0 and self.num.degree() <= 0:
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((tuple(_poly_coeffs(self.num)), tuple(_poly_coeffs(self.den))))
        return self._hash

    def constant_value(self) -> Fraction:
        if self.num.degree() > 0 or self.den.degree() > 0:
            raise ValueError(f"{self!r} is not constant")
        coeffs = _poly_coeffs(self.num)
        return coeffs[0] if coeffs else Fraction(0)

    def numerator(self, var: str = "delta") -> LaurentPoly:
        return LaurentPoly.from_coefficients(_poly_coeffs(self.num), 0, var)

    def denominator(self, var: str = "delta") -> LaurentPoly:
        return LaurentPoly.from_coefficients(_poly_coeffs(self.den), 0, var)

    def evaluate(self, x):
        """Substitute ``delta = x``; raises ZeroDivisionError at a pole."""
        num = self.numerator().evaluate(x)
        den = self.denominator().evaluate(x)
        if den == 0:
            raise ZeroDivisionError(f"{self!r} has a pole at {x!r}")
        return num / den

    def to_json(self) -> dict:
        return {
            "numerator": [[c.numerator, c.denominator] for c in _poly_coeffs(self.num)],
            "denominator": [[c.numerator, c.denominator] for c in _poly_coeffs(self.den)],
        }

    def __repr__(self):
        num = repr(self.numerator())
        if self.den.degree() == 0:
            return num
        return f"({num}) / ({self.denominator()!r})"


DELTA = RationalFunction.variable()
