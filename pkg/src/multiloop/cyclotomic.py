"""Exact arithmetic in cyclotomic number fields Q(zeta_M).

A scalar is a vector of rationals in the power basis 1, z, ..., z^(phi(M)-1),
fully reduced modulo the M-th cyclotomic polynomial, so equality is
coefficient-wise.  All arithmetic stays inside one ambient conductor M;
mixing conductors raises MismatchError.
"""

from __future__ import annotations

import cmath
import re
from fractions import Fraction
from functools import lru_cache

from .errors import MismatchError

_ZERO = Fraction(0)
_ONE = Fraction(1)


def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError(f"conductor must be positive, got {m}")
    result = m
    p, n = 2, m
    while p * p <= n:
        if n % p == 0:
            result -= result // p
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _poly_divmod(num, den):
    """Exact division of rational coefficient lists (lowest degree first)."""
    num = list(num)
    q = [_ZERO] * max(len(num) - len(den) + 1, 0)
    inv_lead = 1 / den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] * inv_lead
        q[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    while len(num) >= len(den):
        assert num.pop() == 0
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Coefficients of the m-th cyclotomic polynomial, lowest degree first."""
    if m < 1:
        raise ValueError(f"conductor must be positive, got {m}")
    if m == 1:
        return (Fraction(-1), _ONE)
    num = [_ZERO] * (m + 1)
    num[0], num[m] = Fraction(-1), _ONE  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(num)


class CyclotomicField:
    """The field Q(zeta_M), with zeta_M represented by the power-basis symbol z."""

    def __init__(self, conductor: int):
        if conductor < 1:
            raise ValueError(f"conductor must be a positive integer, got {conductor}")
        self.conductor = conductor
        self.minpoly = cyclotomic_polynomial(conductor)
        self.degree = len(self.minpoly) - 1  # phi(conductor)
        # x^k mod minpoly for 0 <= k <= 2*degree - 2, used to fold products
        powers = {}
        cur = [_ZERO] * self.degree
        cur[0] = _ONE
        for k in range(2 * self.degree - 1):
            powers[k] = tuple(cur)
            cur = self._shift_reduce(cur)
        self._fold = powers
        self.zero = CyclotomicNumber(self, (_ZERO,) * self.degree)
        self.one = CyclotomicNumber(self, ((_ONE,) + (_ZERO,) * (self.degree - 1)))

    def _shift_reduce(self, coeffs):
        # multiply by x, reduce the overflowing top coefficient
        top = coeffs[-1]
        out = [_ZERO] + list(coeffs[:-1])
        if top:
            for i in range(self.degree):
                out[i] -= top * self.minpoly[i]
        return out

    def __repr__(self):
        return f"CyclotomicField({self.conductor})"

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.conductor == self.conductor

    def __hash__(self):
        return hash(("CyclotomicField", self.conductor))

    # -- constructors ------------------------------------------------------

    def scalar(self, value) -> "CyclotomicNumber":
        if isinstance(value, CyclotomicNumber):
            if value.field != self:
                raise MismatchError(
                    f"conductor mismatch: {value.field.conductor} vs {self.conductor}"
                )
            return value
        q = Fraction(value)
        return CyclotomicNumber(self, (q,) + (_ZERO,) * (self.degree - 1))

    def from_coeffs(self, coeffs) -> "CyclotomicNumber":
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients, got {len(coeffs)}")
        return CyclotomicNumber(self, tuple(coeffs))

    def zeta(self, power: int = 1) -> "CyclotomicNumber":
        """zeta_M^power in canonical form."""
        power %= self.conductor
        coeffs = [_ZERO] * self.degree
        if self.conductor == 1:
            coeffs[0] = _ONE
            return CyclotomicNumber(self, tuple(coeffs))
        coeffs[0] = _ONE
        cur = coeffs
        for _ in range(power):
            cur = self._shift_reduce(cur)
        return CyclotomicNumber(self, tuple(cur))

    def root_of_unity(self, order: int, power: int = 1) -> "CyclotomicNumber":
        """zeta_order^power, embedded via zeta_order = zeta_M^(M/order)."""
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        if self.conductor % order != 0:
            raise MismatchError(
                f"order {order} does not divide the ambient conductor {self.conductor}"
            )
        return self.zeta((self.conductor // order) * power)

    # -- internal coefficient arithmetic ------------------------------------

    def _mul(self, a, b):
        d = self.degree
        conv = [_ZERO] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        out = list(conv[:d])
        for k in range(d, 2 * d - 1):
            ck = conv[k]
            if ck:
                fold = self._fold[k]
                for i in range(d):
                    if fold[i]:
                        out[i] += ck * fold[i]
        return tuple(out)

    def _inv(self, a):
        # extended Euclid in Q[x] against the cyclotomic polynomial
        if not any(a):
            raise ZeroDivisionError("division by zero in cyclotomic field")
        r0, r1 = list(self.minpoly), list(a)
        s0, s1 = [], [_ONE]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                inv = 1 / r1[0]
                out = [c * inv for c in s1]
                out += [_ZERO] * (self.degree - len(out))
                return tuple(out[: self.degree])
            q, rem = _poly_divmod(r0, r1)
            # s_new = s0 - q*s1
            s_new = list(s0) + [_ZERO] * max(0, len(q) + len(s1) - 1 - len(s0))
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        s_new[i + j] -= qi * sj
            r0, r1 = r1, rem
            s0, s1 = s1, s_new

    def parse(self, text: str) -> "CyclotomicNumber":
        """Parse the canonical string form, e.g. "1/2 - 3*z + z^2"."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty scalar string")
        s = s.replace("-", "+-")
        if s.startswith("+"):
            s = s[1:]
        coeffs = [_ZERO] * self.degree
        for term in s.split("+"):
            if not term:
                raise ValueError(f"malformed scalar string {text!r}")
            sign = 1
            if term.startswith("-"):
                sign, term = -1, term[1:]
            m = re.fullmatch(r"(?:(\d+(?:/\d+)?))?(?:\*?(z)(?:\^(\d+))?)?", term)
            if not m or (m.group(1) is None and m.group(2) is None):
                raise ValueError(f"malformed scalar term {term!r} in {text!r}")
            coeff = Fraction(m.group(1)) if m.group(1) else _ONE
            if m.group(2) is None:
                power = 0
            else:
                power = int(m.group(3)) if m.group(3) else 1
            if power >= self.degree:
                raise ValueError(
                    f"power z^{power} exceeds field degree {self.degree} in {text!r}"
                )
            coeffs[power] += sign * coeff
        return CyclotomicNumber(self, tuple(coeffs))


class CyclotomicNumber:
    """An element of Q(zeta_M) in reduced power-basis coordinates.  Immutable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.field != self.field:
                raise MismatchError(
                    f"conductor mismatch: {self.field.conductor} vs {other.field.conductor}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber(
            self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber(
            self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber(self.field, self.field._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * CyclotomicNumber(self.field, self.field._inv(other.coeffs))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def inverse(self):
        return CyclotomicNumber(self.field, self.field._inv(self.coeffs))

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        acc = self.field.one
        base = self
        e = exponent
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.conductor, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def multiplicative_order(self, bound: int = 10_000) -> int:
        """Smallest j >= 1 with self^j == 1; raises if none up to bound."""
        acc = self
        for j in range(1, bound + 1):
            if acc == self.field.one:
                return j
            acc = acc * self
        raise ValueError("element has no small multiplicative order")

    def to_complex(self) -> complex:
        m = self.field.conductor
        return sum(
            complex(c) * cmath.exp(2j * cmath.pi * k / m)
            for k, c in enumerate(self.coeffs)
        )

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                body = str(c)
            else:
                sym = "z" if k == 1 else f"z^{k}"
                if c == 1:
                    body = sym
                elif c == -1:
                    body = f"-{sym}"
                else:
                    body = f"{c}*{sym}"
            parts.append(body)
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"<{self} in Q(zeta_{self.field.conductor})>"


def root_of_unity(order: int, power: int = 1) -> CyclotomicNumber:
    """zeta_order^power as an element of Q(zeta_order)."""
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    return CyclotomicField(order).zeta(power)
