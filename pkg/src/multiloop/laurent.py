"""Sparse multivariate Laurent polynomials over a cyclotomic field.

Internal variables are s_1..s_n with s_i = t_i^(1/m_i); the base ring R is
the sublattice of exponents divisible componentwise by (m_1,...,m_n).  The
Galois group G = prod Z/m_i acts by monomial characters s_i -> zeta_{m_i} s_i.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from itertools import product

from .cyclotomic import CyclotomicField, CyclotomicNumber
from .errors import MismatchError


def box_degrees(n: int, d: int):
    """All exponent vectors alpha in Z^n with |alpha_i| <= d, sorted."""
    return [tuple(v) for v in product(range(-d, d + 1), repeat=n)]


class GaloisGroup:
    """G = prod_i Z/m_i Z acting on exponents by characters."""

    def __init__(self, field: CyclotomicField, orders):
        self.field = field
        self.orders = tuple(int(m) for m in orders)
        if any(m < 1 for m in self.orders):
            raise MismatchError(f"orders must be positive, got {self.orders}")
        for m in self.orders:
            if field.conductor % m != 0:
                raise MismatchError(
                    f"field conductor {field.conductor} lacks order-{m} roots of unity"
                )
        self.n = len(self.orders)

    def element(self, components) -> "GaloisElement":
        return GaloisElement(self, components)

    @property
    def identity(self) -> "GaloisElement":
        return GaloisElement(self, (0,) * self.n)

    def generator(self, i: int) -> "GaloisElement":
        return GaloisElement(self, tuple(1 if j == i else 0 for j in range(self.n)))

    def elements(self):
        return [GaloisElement(self, c) for c in product(*(range(m) for m in self.orders))]

    def order(self) -> int:
        total = 1
        for m in self.orders:
            total *= m
        return total

    def character(self, g: "GaloisElement", alpha) -> CyclotomicNumber:
        """Value of g on the monomial s^alpha: prod_i zeta_{m_i}^(g_i * alpha_i)."""
        M = self.field.conductor
        total = 0
        for gi, ai, mi in zip(g.components, alpha, self.orders):
            total += (M // mi) * gi * ai
        return self.field.zeta(total % M)

    def __eq__(self, other):
        return (
            isinstance(other, GaloisGroup)
            and other.orders == self.orders
            and other.field == self.field
        )

    def __hash__(self):
        return hash((self.field.conductor, self.orders))


class GaloisElement:
    __slots__ = ("group", "components")

    def __init__(self, group: GaloisGroup, components):
        components = tuple(int(c) % m for c, m in zip(components, group.orders))
        if len(components) != group.n:
            raise MismatchError("wrong number of Galois components")
        self.group = group
        self.components = components

    def __add__(self, other: "GaloisElement") -> "GaloisElement":
        if other.group != self.group:
            raise MismatchError("Galois elements from different groups")
        return GaloisElement(
            self.group, tuple(a + b for a, b in zip(self.components, other.components))
        )

    def __neg__(self) -> "GaloisElement":
        return GaloisElement(self.group, tuple(-c for c in self.components))

    def __eq__(self, other):
        return (
            isinstance(other, GaloisElement)
            and other.group == self.group
            and other.components == self.components
        )

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"g{list(self.components)}"


def _split_terms(s: str):
    """Split a polynomial string at top-level " + " / " - " separators."""
    parts, cur, depth, i = [], [], 0, 0
    while i < len(s):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and s.startswith(" + ", i):
            parts.append("".join(cur))
            cur, i = [], i + 3
            continue
        if depth == 0 and s.startswith(" - ", i):
            parts.append("".join(cur))
            cur, i = ["-"], i + 3
            continue
        cur.append(ch)
        i += 1
    parts.append("".join(cur))
    return parts


class LaurentRing:
    """S = k[s_1^{+-1},...,s_n^{+-1}] with R the m-divisible exponent subring."""

    def __init__(self, field: CyclotomicField, orders):
        self.field = field
        self.orders = tuple(int(m) for m in orders)
        self.n = len(self.orders)
        self.group = GaloisGroup(field, self.orders)
        self.zero = LaurentPoly(self, {})
        self.one = LaurentPoly(self, {(0,) * self.n: field.one})

    def monomial(self, exponents, coeff=1) -> "LaurentPoly":
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != self.n:
            raise MismatchError(f"expected {self.n} exponents, got {len(exponents)}")
        c = self.field.scalar(coeff)
        return LaurentPoly(self, {exponents: c} if c else {})

    def s(self, i: int, power: int = 1) -> "LaurentPoly":
        return self.monomial(tuple(power if j == i else 0 for j in range(self.n)))

    def t(self, i: int, power: int = 1) -> "LaurentPoly":
        """t_i = s_i^{m_i}, a generator of the base ring R."""
        return self.s(i, power * self.orders[i])

    def scalar_poly(self, value) -> "LaurentPoly":
        c = self.field.scalar(value)
        return LaurentPoly(self, {(0,) * self.n: c} if c else {})

    def from_terms(self, terms) -> "LaurentPoly":
        out = {}
        for exp, coeff in terms:
            exp = tuple(int(e) for e in exp)
            c = self.field.scalar(coeff)
            if exp in out:
                c = out[exp] + c
            if c:
                out[exp] = c
            elif exp in out:
                del out[exp]
        return LaurentPoly(self, out)

    def in_base_lattice(self, exp) -> bool:
        return all(e % m == 0 for e, m in zip(exp, self.orders))

    def __eq__(self, other):
        return (
            isinstance(other, LaurentRing)
            and other.orders == self.orders
            and other.field == self.field
        )

    def __hash__(self):
        return hash((self.field.conductor, self.orders))

    def __repr__(self):
        return f"LaurentRing(n={self.n}, orders={self.orders}, conductor={self.field.conductor})"

    def parse(self, text: str) -> "LaurentPoly":
        """Inverse of LaurentPoly.__str__, e.g. "3/2*s1^-2*s2^3 + s1"."""
        s = text.strip()
        if s == "0":
            return self.zero
        terms = {}
        for chunk in _split_terms(s):
            chunk = chunk.strip()
            negate = chunk.startswith("-") and not chunk.startswith("-s")
            sign_from_body = False
            if chunk.startswith("-s"):
                sign_from_body = True
                chunk = chunk[1:]
            elif negate:
                chunk = chunk[1:]
            if chunk.startswith("("):
                close = chunk.index(")")
                coeff = self.field.parse(chunk[1:close])
                body = chunk[close + 1 :].lstrip("*")
            elif chunk.startswith("s"):
                coeff, body = self.field.one, chunk
            elif "*s" in chunk:
                coeff_txt, body = chunk.split("*s", 1)
                coeff = self.field.parse(coeff_txt)
                body = "s" + body
            else:
                coeff, body = self.field.parse(chunk), ""
            if negate or sign_from_body:
                coeff = -coeff
            exp = [0] * self.n
            if body:
                for var in body.split("*"):
                    m = re.fullmatch(r"s(\d+)(?:\^(-?\d+))?", var)
                    if not m:
                        raise ValueError(f"malformed monomial {var!r} in {text!r}")
                    idx = int(m.group(1)) - 1
                    if not 0 <= idx < self.n:
                        raise ValueError(f"variable s{idx + 1} out of range in {text!r}")
                    exp[idx] += int(m.group(2)) if m.group(2) else 1
            key = tuple(exp)
            c = terms.get(key, self.field.zero) + coeff
            if c:
                terms[key] = c
            elif key in terms:
                del terms[key]
        return LaurentPoly(self, terms)


class LaurentPoly:
    """Finitely supported exponent-vector -> coefficient map; immutable by convention."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: LaurentRing, terms: dict):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}

    def _check(self, other):
        if isinstance(other, LaurentPoly):
            if other.ring != self.ring:
                raise MismatchError("Laurent polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return self.ring.scalar_poly(other)
        return None

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, self.ring.field.zero) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return LaurentPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            c = self.ring.field.scalar(other)
            return LaurentPoly(self.ring, {e: v * c for e, v in self.terms.items()})
        other = self._check(other)
        if other is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, self.ring.field.zero) + c1 * c2
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        return LaurentPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            if len(self.terms) != 1:
                raise ValueError("negative powers only for monomials")
            ((e, c),) = self.terms.items()
            return LaurentPoly(
                self.ring, {tuple(x * exponent for x in e): c ** exponent}
            )
        acc, base, e = self.ring.one, self, exponent
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __eq__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self):
        return sorted(self.terms)

    def galois(self, g: GaloisElement) -> "LaurentPoly":
        """Ring automorphism s_i -> zeta_{m_i}^{g_i} s_i, applied termwise."""
        group = self.ring.group
        if g.group != group:
            raise MismatchError("Galois element does not match the ring")
        return LaurentPoly(
            self.ring,
            {e: c * group.character(g, e) for e, c in self.terms.items()},
        )

    def in_base_ring(self) -> bool:
        return all(self.ring.in_base_lattice(e) for e in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            body = "*".join(
                f"s{i + 1}" if p == 1 else f"s{i + 1}^{p}"
                for i, p in enumerate(e)
                if p
            )
            cs = str(c)
            if not body:
                parts.append(cs if c.is_rational() else f"({cs})")
            elif cs == "1":
                parts.append(body)
            elif cs == "-1":
                parts.append(f"-{body}")
            elif c.is_rational():
                parts.append(f"{cs}*{body}")
            else:
                parts.append(f"({cs})*{body}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"<{self}>"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"exp": list(e), "c": str(self.terms[e])} for e in sorted(self.terms)
            ]
        }

    @classmethod
    def from_json(cls, ring: LaurentRing, data) -> "LaurentPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return ring.from_terms(
            (tuple(t["exp"]), ring.field.parse(t["c"])) for t in data["terms"]
        )
