"""Exact arithmetic in cyclotomic fields, Laurent polynomials and quantum integers.

An element of Q(zeta_N) is stored in the power basis 1, zeta, ..., zeta^(phi(N)-1),
reduced modulo the N-th cyclotomic polynomial, as a vector of integer numerators over
one positive common denominator.  Operands living in different fields are promoted to
Q(zeta_lcm) before any binary operation.

Quantum integers use the variable ``s`` with ``v = s^2``:

    [n] = (v^n - v^-n) / (v - v^-1) = v^(1-n) * prod_{d | 2n, d >= 3} Phi_d(v)

so a ratio of quantum factorials is a monomial times a product of powers of
cyclotomic polynomials in ``v``.  Cancellation is done on that exponent vector before
anything is specialised, which is what lets ratios like [2k+2]!/[k+1]![k+1]! be
evaluated at roots of unity where individual factors vanish.
"""

from __future__ import annotations

import functools
import math
from collections import Counter
import decimal
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import mpmath

Rational = Fraction

__all__ = [
    "Rational",
    "InexactDivisionError",
    "LaurentPoly",
    "CyclotomicNumber",
    "euler_phi",
    "cyclotomic_polynomial",
    "root_of_unity",
    "approx_complex",
    "quantum_integer",
    "quantum_factorial_ratio",
    "quantum_factorial_ratio_symbolic",
    "factorial_ratio_at",
    "FactorialRatio",
]


class InexactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi needs a positive integer, got {n}")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _mobius(n: int) -> int:
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


# ---------------------------------------------------------------------------
# Laurent polynomials over Q
# ---------------------------------------------------------------------------


class LaurentPoly:
    """Finite sum of rational multiples of integer powers of one variable.

    >>> x = LaurentPoly.monomial(1)
    >>> (x + x**-1) * (x - x**-1)
    x^2 - x^-2
    """

    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[int, object] | None = None, var: str = "x"):
        clean: dict[int, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            c = Fraction(coeff)
            if c:
                clean[int(exp)] = c
        self._terms = clean
        self.var = var

    @classmethod
    def monomial(cls, exp: int, coeff=1, var: str = "x") -> LaurentPoly:
        return cls({exp: coeff}, var)

    @classmethod
    def constant(cls, value, var: str = "x") -> LaurentPoly:
        return cls({0: value}, var)

    @classmethod
    def from_coefficients(cls, coeffs: Sequence, low: int = 0, var: str = "x") -> LaurentPoly:
        """Build ``sum coeffs[i] * x^(low + i)``."""
        return cls({low + i: c for i, c in enumerate(coeffs)}, var)

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero Laurent polynomial has no degree")
        return max(self._terms)

    def low_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero Laurent polynomial has no low degree")
        return min(self._terms)

    def coefficient(self, exp: int) -> Fraction:
        return self._terms.get(exp, Fraction(0))

    def coefficient_list(self) -> tuple[int, list[Fraction]]:
        """Return ``(low, [c_low, ..., c_high])`` (``(0, [])`` for zero)."""
        if not self._terms:
            return 0, []
        lo, hi = self.low_degree(), self.degree()
        return lo, [self.coefficient(e) for e in range(lo, hi + 1)]

    def _coerce(self, other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            if other.var != self.var and other._terms and self._terms:
                if not (other.is_constant() or self.is_constant()):
                    raise ValueError(f"variables differ: {self.var} vs {other.var}")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({0: other}, self.var)
        return None

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in o._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self.var)

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
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise InexactDivisionError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            return LaurentPoly({e * n: c**n}, self.var)
        result = LaurentPoly({0: 1}, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod_exact(self, other: LaurentPoly) -> LaurentPoly:
        """Exact quotient ``self / other``; raises :class:`InexactDivisionError`."""
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a Laurent polynomial by zero")
            return LaurentPoly({e: c / other for e, c in self._terms.items()}, self.var)
        if other.is_zero():
            raise ZeroDivisionError("division of a Laurent polynomial by zero")
        if self.is_zero():
            return LaurentPoly({}, self.var)
        a_lo, a = self.coefficient_list()
        b_lo, b = other.coefficient_list()
        rem = list(a)
        quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
        lead = b[-1]
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + len(b) - 1] / lead
            quot[i] = c
            if c:
                for j, bj in enumerate(b):
                    rem[i + j] -= c * bj
        if any(rem):
            raise InexactDivisionError(f"{other!r} does not divide {self!r}")
        return LaurentPoly.from_coefficients(quot, a_lo - b_lo, self.var)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.divmod_exact(other)
        return NotImplemented

    def substitute_power(self, k: int) -> LaurentPoly:
        """Return ``p(x^k)``."""
        return LaurentPoly({e * k: c for e, c in self._terms.items()}, self.var)

    def evaluate(self, x):
        """Evaluate at ``x`` (any ring element supporting ``**`` with negative powers)."""
        total = 0
        for e, c in sorted(self._terms.items()):
            total = total + (x**e) * c
        return total

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, LaurentPoly) else other
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self.is_constant():
            return hash(self._terms.get(0, Fraction(0)))
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = self.var if e == 1 else f"{self.var}^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> LaurentPoly:
    """The n-th cyclotomic polynomial, by dividing ``x^n - 1`` by ``Phi_d`` for ``d | n, d < n``.

    >>> cyclotomic_polynomial(6)
    x^2 - x + 1
    """
    if n < 1:
        raise ValueError(f"cyclotomic polynomial index must be positive, got {n}")
    poly = LaurentPoly({n: 1, 0: -1})
    for d in _divisors(n)[:-1]:
        poly = poly.divmod_exact(cyclotomic_polynomial(d))
    return poly


# ---------------------------------------------------------------------------
# Field tables
# ---------------------------------------------------------------------------


class _Field:
    """Precomputed data for Q(zeta_N)."""

    def __init__(self, order: int):
        self.order = order
        poly = cyclotomic_polynomial(order)
        phi = poly.degree()
        self.phi = phi
        coeffs = [int(poly.coefficient(i)) for i in range(phi)]
        # zeta^phi = -sum_{i<phi} coeffs[i] zeta^i
        self.tail = [(i, c) for i, c in enumerate(coeffs) if c]
        rows = []
        row = [0] * phi
        row[0] = 1
        for _ in range(order):
            rows.append(tuple(row))
            top = row[-1]
            row = [0] + row[:-1]
            if top:
                for i, c in self.tail:
                    row[i] -= top * c
        self.rows = rows
        # normalized trace of zeta^i equals the Ramanujan sum c_N(i) / phi(N)
        self.trace_weights = tuple(self._ramanujan(i) for i in range(phi))
        self.units = tuple(j for j in range(1, order + 1) if math.gcd(j, order) == 1)

    def _ramanujan(self, i: int) -> Fraction:
        g = math.gcd(i, self.order)
        m = self.order // g
        return Fraction(_mobius(m) * euler_phi(self.order) // euler_phi(m), self.phi)

    def reduce(self, vec: list[int]) -> list[int]:
        phi = self.phi
        tail = self.tail
        for j in range(len(vec) - 1, phi - 1, -1):
            c = vec[j]
            if c:
                base = j - phi
                for i, p in tail:
                    vec[base + i] -= c * p
        del vec[phi:]
        if len(vec) < phi:
            vec.extend([0] * (phi - len(vec)))
        return vec


@functools.lru_cache(maxsize=None)
def _field(order: int) -> _Field:
    return _Field(order)


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = math.gcd(den, *num)
    if g > 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


# ---------------------------------------------------------------------------
# Cyclotomic numbers
# ---------------------------------------------------------------------------


class CyclotomicNumber:
    """An exact element of the cyclotomic field Q(zeta_N), ``zeta_N = exp(2 pi i / N)``.

    ``coeffs`` are the rational coordinates in the power basis; longer input vectors
    are reduced modulo Phi_N.

    >>> z = root_of_unity(4)
    >>> z * z == -1
    True
    """

    __slots__ = ("order", "_num", "_den", "_hash")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 1:
            raise ValueError(f"cyclotomic order must be positive, got {order}")
        fracs = [Fraction(c) for c in coeffs]
        fld = _field(order)
        den = 1
        for c in fracs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [int(c * den) for c in fracs]
        if len(nums) < fld.phi:
            nums.extend([0] * (fld.phi - len(nums)))
        else:
            nums = _reduce_long(nums, fld)
        self.order = order
        self._num, self._den = _normalize(nums, den)
        self._hash = None

    @classmethod
    def _raw(cls, order: int, num: tuple[int, ...], den: int) -> CyclotomicNumber:
        obj = cls.__new__(cls)
        obj.order = order
        obj._num = num
        obj._den = den
        obj._hash = None
        return obj

    @classmethod
    def from_rational(cls, value, order: int = 1) -> CyclotomicNumber:
        value = Fraction(value)
        phi = _field(order).phi
        return cls._raw(order, (value.numerator,) + (0,) * (phi - 1), value.denominator)

    # -- accessors -------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._num[0], self._den)

    # -- field changes ---------------------------------------------------
    def to_order(self, order: int) -> CyclotomicNumber:
        """Embed into Q(zeta_order); ``self.order`` must divide ``order``."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})")
        fld = _field(order)
        step = order // self.order
        acc = [0] * fld.phi
        for i, c in enumerate(self._num):
            if c:
                row = fld.rows[(i * step) % order]
                for j, r in enumerate(row):
                    if r:
                        acc[j] += c * r
        return CyclotomicNumber._raw(order, tuple(acc), self._den)

    def galois_apply(self, j: int) -> CyclotomicNumber:
        """Apply the automorphism ``zeta -> zeta^j`` (``gcd(j, N) = 1``)."""
        n = self.order
        if math.gcd(j, n) != 1:
            raise ValueError(f"{j} is not a unit modulo {n}")
        fld = _field(n)
        acc = [0] * fld.phi
        for i, c in enumerate(self._num):
            if c:
                row = fld.rows[(i * j) % n]
                for t, r in enumerate(row):
                    if r:
                        acc[t] += c * r
        return CyclotomicNumber._raw(n, tuple(acc), self._den)

    def conjugate(self) -> CyclotomicNumber:
        return self.galois_apply(-1 % self.order if self.order > 1 else 1)

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        prod = self
        for j in _field(self.order).units:
            if j != 1:
                prod = prod * self.galois_apply(j)
        return prod.to_rational()

    def trace(self) -> Fraction:
        """Normalized trace ``Tr(x) / phi(N)``, which does not depend on N."""
        weights = _field(self.order).trace_weights
        total = sum((c * w for c, w in zip(self._num, weights) if c), Fraction(0))
        return total / self._den

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(other, self.order)
        return None

    @staticmethod
    def _align(a: CyclotomicNumber, b: CyclotomicNumber):
        if a.order == b.order:
            return a, b
        n = a.order * b.order // math.gcd(a.order, b.order)
        return a.to_order(n), b.to_order(n)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._align(self, o)
        if a._den == b._den:
            num = [x + y for x, y in zip(a._num, b._num)]
            den = a._den
        else:
            num = [x * b._den + y * a._den for x, y in zip(a._num, b._num)]
            den = a._den * b._den
        return CyclotomicNumber._raw(a.order, *_normalize(num, den))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self.order, tuple(-c for c in self._num), self._den)

    def __pos__(self):
        return self

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
            other = Fraction(other)
            num = [c * other.numerator for c in self._num]
            return CyclotomicNumber._raw(
                self.order, *_normalize(num, self._den * other.denominator)
            )
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._align(self, other)
        fld = _field(a.order)
        phi = fld.phi
        prod = [0] * (2 * phi - 1)
        for i, x in enumerate(a._num):
            if x:
                for j, y in enumerate(b._num):
                    if y:
                        prod[i + j] += x * y
        num = fld.reduce(prod)
        return CyclotomicNumber._raw(a.order, *_normalize(num, a._den * b._den))

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicNumber:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CyclotomicNumber.from_rational(1 / self.to_rational(), self.order)
        others = None
        for j in _field(self.order).units:
            if j != 1:
                conj = self.galois_apply(j)
                others = conj if others is None else others * conj
        norm = (self * others).to_rational()
        return others * (1 / norm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a cyclotomic number by zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = CyclotomicNumber.from_rational(1, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._align(self, o)
        return a._den == b._den and a._num == b._num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.trace()) if not self.is_rational() else hash(
                Fraction(self._num[0], self._den)
            )
        return self._hash

    # -- roots of unity --------------------------------------------------
    def root_of_unity_exponent(self) -> tuple[int, int] | None:
        """Return ``(M, j)`` with ``self == zeta_M^j`` and ``M = lcm(2, N)``, or None."""
        n = self.order
        if self._den != 1:
            return None
        rows = _field(n).rows
        if n % 2 == 0:
            for j in range(n):
                if rows[j] == self._num:
                    return n, j
            return None
        negated = tuple(-c for c in self._num)
        for i in range(n):
            if rows[i] == self._num:
                return 2 * n, 2 * i
            if rows[i] == negated:
                # -zeta_N^i = zeta_2N^(2i + N)
                return 2 * n, (2 * i + n) % (2 * n)
        return None

    def multiplicative_order(self) -> int:
        """Multiplicative order of a root of unity; raises ValueError otherwise."""
        found = self.root_of_unity_exponent()
        if found is None:
            raise ValueError(f"{self!r} is not a root of unity")
        m, j = found
        return m // math.gcd(m, j)

    # -- display and serialization --------------------------------------
    def approx(self) -> complex:
        re, im = approx_complex(self, 15)
        return complex(float(re), float(im))

    def to_json(self, digits: int = 12) -> dict:
        re, im = approx_complex(self, digits)
        return {
            "order": self.order,
            "coeffs": [[c.numerator, c.denominator] for c in self.coeffs],
            "approx": [float(re), float(im)],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> CyclotomicNumber:
        return cls(int(data["order"]), [Fraction(n, d) for n, d in data["coeffs"]])

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                if i == 0:
                    terms.append(str(c))
                else:
                    z = f"z{self.order}" if i == 1 else f"z{self.order}^{i}"
                    terms.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _reduce_long(nums: list[int], fld: _Field) -> list[int]:
    # fold exponents >= N using zeta^N = 1 first, then reduce modulo Phi_N
    n = fld.order
    if len(nums) > n:
        folded = [0] * n
        for i, c in enumerate(nums):
            folded[i % n] += c
        nums = folded
    return fld.reduce(list(nums))


def root_of_unity(order: int, j: int = 1) -> CyclotomicNumber:
    """``zeta_order^j`` as an element of Q(zeta_order)."""
    fld = _field(order)
    return CyclotomicNumber._raw(order, fld.rows[j % order], 1)


# ---------------------------------------------------------------------------
# Numerical approximation
# ---------------------------------------------------------------------------


def approx_complex(a: CyclotomicNumber | int | Fraction, digits: int = 15) -> tuple[Decimal, Decimal]:
    """Real and imaginary parts rounded to ``digits`` decimal places.

    The sum is evaluated in interval arithmetic, raising the working precision until
    both interval endpoints round to the same decimal.
    """
    if not isinstance(a, CyclotomicNumber):
        a = CyclotomicNumber.from_rational(a)
    quantum = Decimal(1).scaleb(-digits)
    ctx = decimal.Context(prec=digits + 40)
    prec_bits = int(digits * 3.33) + 40
    iv = mpmath.iv
    saved = iv.prec
    try:
        for _ in range(8):
            iv.prec = prec_bits
            re = iv.mpf(0)
            im = iv.mpf(0)
            for i, c in enumerate(a.coeffs):
                if c:
                    angle = 2 * iv.pi * i / a.order
                    cval = iv.mpf(c.numerator) / c.denominator
                    re += cval * iv.cos(angle)
                    im += cval * iv.sin(angle)
            parts = []
            for comp in (re, im):
                lo = _to_decimal(comp.a, digits, prec_bits).quantize(quantum, ROUND_HALF_EVEN, ctx)
                hi = _to_decimal(comp.b, digits, prec_bits).quantize(quantum, ROUND_HALF_EVEN, ctx)
                parts.append((lo, hi))
            if all(lo == hi for lo, hi in parts):
                break
            prec_bits *= 2
    finally:
        iv.prec = saved
    # plus() also turns a rounded -0 into 0
    return ctx.plus(parts[0][0]), ctx.plus(parts[1][0])


def _to_decimal(x, digits: int, prec_bits: int) -> Decimal:
    with mpmath.workprec(prec_bits):
        text = mpmath.nstr(mpmath.mpf(x), digits + 20, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)
    return Decimal(text)


# ---------------------------------------------------------------------------
# Quantum integers and factorial ratios
# ---------------------------------------------------------------------------


def quantum_integer(n: int, s: CyclotomicNumber) -> CyclotomicNumber:
    """``[n]`` at ``s``: ``(s^(2n) - s^(-2n)) / (s^2 - s^(-2))``.

    Undefined when ``s^4 = 1``.
    """
    v = s * s
    if v * v == 1:
        raise ValueError("quantum integers are undefined when s^4 = 1")
    if n == 0:
        return v * 0
    return factorial_ratio_at([n], [n - 1], v) if n > 0 else -quantum_integer(-n, s)


class FactorialRatio:
    """``v^shift * prod_d Phi_d(v)^exponents[d]``, a reduced ratio of quantum factorials."""

    __slots__ = ("shift", "exponents")

    def __init__(self, shift: int = 0, exponents: Mapping[int, int] | None = None):
        self.shift = shift
        self.exponents = {d: e for d, e in (exponents or {}).items() if e}

    @staticmethod
    @functools.lru_cache(maxsize=None)
    def _factorial(n: int) -> tuple[int, tuple[tuple[int, int], ...]]:
        shift = 0
        counts: Counter[int] = Counter()
        for j in range(1, n + 1):
            shift += 1 - j
            for d in _divisors(2 * j):
                if d >= 3:
                    counts[d] += 1
        return shift, tuple(sorted(counts.items()))

    @classmethod
    def of(cls, num: Iterable[int], den: Iterable[int]) -> FactorialRatio:
        shift = 0
        exps: Counter[int] = Counter()
        for sign, group in ((1, num), (-1, den)):
            for n in group:
                if n < 0:
                    raise ValueError(f"quantum factorial of a negative integer {n}")
                sh, counts = cls._factorial(n)
                shift += sign * sh
                for d, c in counts:
                    exps[d] += sign * c
        return cls(shift, exps)

    def is_polynomial(self) -> bool:
        return all(e > 0 for e in self.exponents.values())

    def numerator(self, var: str = "s") -> LaurentPoly:
        """Numerator as a Laurent polynomial in ``s`` (with ``v = s^2``)."""
        poly = LaurentPoly.monomial(2 * self.shift, 1, var)
        for d, e in sorted(self.exponents.items()):
            if e > 0:
                poly = poly * _phi_in_s(d, var) ** e
        return poly

    def denominator(self, var: str = "s") -> LaurentPoly:
        poly = LaurentPoly.constant(1, var)
        for d, e in sorted(self.exponents.items()):
            if e < 0:
                poly = poly * _phi_in_s(d, var) ** (-e)
        return poly

    def evaluate(self, v: CyclotomicNumber) -> CyclotomicNumber:
        """Specialise at ``v = s^2``; raises ZeroDivisionError at a pole."""
        zero = False
        result = v**self.shift
        for d, e in sorted(self.exponents.items()):
            val = _phi_at(d, v)
            if val.is_zero():
                if e < 0:
                    raise ZeroDivisionError(f"quantum factorial ratio has a pole (Phi_{d} vanishes)")
                zero = True
                continue
            result = result * _phi_power(d, v, e)
        return result * 0 if zero else result


@functools.lru_cache(maxsize=None)
def _phi_in_s(d: int, var: str) -> LaurentPoly:
    return LaurentPoly(cyclotomic_polynomial(d).terms, var).substitute_power(2)


@functools.lru_cache(maxsize=4096)
def _phi_at(d: int, v: CyclotomicNumber) -> CyclotomicNumber:
    return cyclotomic_polynomial(d).evaluate(v)


@functools.lru_cache(maxsize=8192)
def _phi_power(d: int, v: CyclotomicNumber, e: int) -> CyclotomicNumber:
    return _phi_at(d, v) ** e


def factorial_ratio_at(num: Iterable[int], den: Iterable[int], v: CyclotomicNumber) -> CyclotomicNumber:
    """``prod [n_i]! / prod [d_j]!`` evaluated at ``v = s^2`` after cancellation."""
    return FactorialRatio.of(num, den).evaluate(v)


def quantum_factorial_ratio(num: Iterable[int], den: Iterable[int], s: CyclotomicNumber) -> CyclotomicNumber:
    """``prod [n_i]! / prod [d_j]!`` at ``s``, cancelling symbolically before specialising.

    Raises ZeroDivisionError if a surviving denominator factor vanishes at ``s``.
    """
    return factorial_ratio_at(num, den, s * s)


def quantum_factorial_ratio_symbolic(
    num: Iterable[int], den: Iterable[int], var: str = "s"
) -> tuple[LaurentPoly, LaurentPoly]:
    """The reduced ratio as ``(numerator, denominator)`` Laurent polynomials in ``s``."""
    ratio = FactorialRatio.of(num, den)
    return ratio.numerator(var), ratio.denominator(var)
