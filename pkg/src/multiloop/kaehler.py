"""Kahler differentials of the Laurent ring and the quotient by exact forms.

A form sum_i f_i ds_i is graded by deg(s^beta ds_i) = beta + e_i, so the
universal derivation d preserves degree and the Galois group acts on each
graded piece by a single character.  Within degree alpha != 0 the exact
forms span the single relation vector alpha, and the canonical form
eliminates the pivot coordinate (the smallest index with alpha_p != 0);
degree 0 keeps all n coordinates (classes of s_i^{-1} ds_i).
"""

from __future__ import annotations

from .errors import MismatchError
from .laurent import GaloisElement, LaurentPoly, LaurentRing, box_degrees


class DifferentialForm:
    """sum_i f_i ds_i with Laurent coefficients, immutable by convention."""

    __slots__ = ("ring", "comps")

    def __init__(self, ring: LaurentRing, comps):
        comps = tuple(comps)
        if len(comps) != ring.n:
            raise MismatchError(f"expected {ring.n} components, got {len(comps)}")
        for c in comps:
            if c.ring != ring:
                raise MismatchError("component from a different ring")
        self.ring = ring
        self.comps = comps

    def __add__(self, other: "DifferentialForm") -> "DifferentialForm":
        if not isinstance(other, DifferentialForm) or other.ring != self.ring:
            raise MismatchError("differential forms from different rings")
        return DifferentialForm(
            self.ring, tuple(a + b for a, b in zip(self.comps, other.comps))
        )

    def __neg__(self):
        return DifferentialForm(self.ring, tuple(-c for c in self.comps))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return DifferentialForm(self.ring, tuple(c * scalar for c in self.comps))

    __rmul__ = __mul__

    def scale_poly(self, p: LaurentPoly) -> "DifferentialForm":
        return DifferentialForm(self.ring, tuple(p * c for c in self.comps))

    def galois(self, g: GaloisElement) -> "DifferentialForm":
        """^g(f ds_i) = (^g f) * zeta_{m_i}^{g_i} ds_i."""
        group = self.ring.group
        out = []
        for i, c in enumerate(self.comps):
            chi = group.character(g, tuple(1 if j == i else 0 for j in range(self.ring.n)))
            out.append(c.galois(g) * chi)
        return DifferentialForm(self.ring, tuple(out))

    def __eq__(self, other):
        return (
            isinstance(other, DifferentialForm)
            and other.ring == self.ring
            and other.comps == self.comps
        )

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def graded_pieces(self):
        """Map degree alpha -> coefficient vector (c_1..c_n) of s^(alpha-e_i) ds_i."""
        field = self.ring.field
        out = {}
        for i, comp in enumerate(self.comps):
            for beta, c in comp.terms.items():
                degree = tuple(b + (1 if j == i else 0) for j, b in enumerate(beta))
                vec = out.get(degree)
                if vec is None:
                    vec = [field.zero] * self.ring.n
                    out[degree] = vec
                vec[i] = vec[i] + c
        return out

    def __str__(self):
        parts = [
            f"({comp}) ds{i + 1}" for i, comp in enumerate(self.comps) if comp
        ]
        return " + ".join(parts) if parts else "0"


def differential(p: LaurentPoly) -> DifferentialForm:
    """d(s^alpha) = sum_i alpha_i s^(alpha - e_i) ds_i, extended linearly."""
    ring = p.ring
    comps = [dict() for _ in range(ring.n)]
    for alpha, c in p.terms.items():
        for i, a in enumerate(alpha):
            if a:
                e = tuple(x - (1 if j == i else 0) for j, x in enumerate(alpha))
                cur = comps[i].get(e, ring.field.zero) + c * a
                if cur:
                    comps[i][e] = cur
                elif e in comps[i]:
                    del comps[i][e]
    return DifferentialForm(ring, tuple(LaurentPoly(ring, t) for t in comps))


def pivot_index(degree) -> int | None:
    """Smallest index with a nonzero degree entry; None for degree 0."""
    for i, a in enumerate(degree):
        if a:
            return i
    return None


def slot_indices(ring: LaurentRing, degree):
    """Coordinate slots that survive reduction at this degree."""
    p = pivot_index(degree)
    return [i for i in range(ring.n) if i != p]


def _reduce_vector(ring, degree, vec):
    field = ring.field
    p = pivot_index(degree)
    out = list(vec)
    if p is not None and out[p]:
        factor = out[p] / field.scalar(degree[p])
        for i, a in enumerate(degree):
            if a:
                out[i] = out[i] - factor * field.scalar(a)
        out[p] = field.zero
    return out


class CentralClass:
    """Canonical-form element of Omega_S/dS: pivot-reduced graded coordinates."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring: LaurentRing, raw: dict, reduced: bool = False):
        self.ring = ring
        coords = {}
        for degree, vec in raw.items():
            out = list(vec) if reduced else _reduce_vector(ring, degree, vec)
            if any(out):
                coords[tuple(degree)] = tuple(out)
        self.coords = coords

    @classmethod
    def zero(cls, ring: LaurentRing) -> "CentralClass":
        return cls(ring, {})

    @classmethod
    def basis_class(cls, ring: LaurentRing, degree, index: int) -> "CentralClass":
        """Class of the surviving generator s^(degree - e_index) ds_index."""
        degree = tuple(degree)
        p = pivot_index(degree)
        if index == p:
            raise ValueError(f"slot {index} is the pivot at degree {degree}")
        vec = [ring.field.zero] * ring.n
        vec[index] = ring.field.one
        return cls(ring, {degree: vec}, reduced=True)

    def _check(self, other):
        if not isinstance(other, CentralClass) or other.ring != self.ring:
            raise MismatchError("central classes from different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        field = self.ring.field
        out = {d: list(v) for d, v in self.coords.items()}
        for d, v in other.coords.items():
            cur = out.get(d)
            if cur is None:
                out[d] = list(v)
            else:
                for i in range(self.ring.n):
                    cur[i] = cur[i] + v[i]
        return CentralClass(self.ring, out, reduced=True)

    def __neg__(self):
        return CentralClass(
            self.ring,
            {d: [-x for x in v] for d, v in self.coords.items()},
            reduced=True,
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        scalar = self.ring.field.scalar(scalar)
        return CentralClass(
            self.ring,
            {d: [x * scalar for x in v] for d, v in self.coords.items()},
            reduced=True,
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._check(other)
        return self.coords == other.coords

    def __hash__(self):
        return hash(frozenset((d, v) for d, v in self.coords.items()))

    def __bool__(self):
        return bool(self.coords)

    def is_zero(self) -> bool:
        return not self.coords

    def degrees(self):
        return sorted(self.coords)

    def component(self, degree):
        return self.coords.get(
            tuple(degree), tuple([self.ring.field.zero] * self.ring.n)
        )

    def galois(self, g: GaloisElement) -> "CentralClass":
        """Degree-alpha component scales by the character value at alpha."""
        group = self.ring.group
        out = {}
        for d, v in self.coords.items():
            chi = group.character(g, d)
            out[d] = [x * chi for x in v]
        return CentralClass(self.ring, out, reduced=True)

    def in_base_part(self) -> bool:
        """True iff every supported degree lies in the base lattice mZ^n."""
        return all(self.ring.in_base_lattice(d) for d in self.coords)

    def to_json(self):
        out = []
        for d in sorted(self.coords):
            v = self.coords[d]
            out.append(
                {
                    "degree": list(d),
                    "coords": [str(x) for x in v],
                    "pivot": pivot_index(d),
                }
            )
        return out

    def to_text(self) -> str:
        """Readable sum of surviving generators, e.g. "2 * s^(-1) ds1 (mod dS)"."""
        parts = []
        for d in sorted(self.coords):
            v = self.coords[d]
            for i, x in enumerate(v):
                if x:
                    mono = tuple(a - (1 if j == i else 0) for j, a in enumerate(d))
                    parts.append(f"{x} * s^{mono} ds{i + 1}")
        if not parts:
            return "0 (mod dS)"
        return " + ".join(parts) + " (mod dS)"

    def __repr__(self):
        return f"<{self.to_text()}>"


def reduce_form(form: DifferentialForm) -> CentralClass:
    """Quotient map Omega_S -> Omega_S/dS in canonical coordinates."""
    return CentralClass(form.ring, form.graded_pieces())


def class_basis_at(ring: LaurentRing, degree):
    """Canonical basis of (Omega_S/dS)_degree: dimension n at 0, n-1 otherwise."""
    return [
        CentralClass.basis_class(ring, degree, i) for i in slot_indices(ring, degree)
    ]


def graded_class_dim(ring: LaurentRing, degree) -> int:
    return ring.n if not any(degree) else ring.n - 1


def invariant_class_basis(ring: LaurentRing, window: int):
    """Basis of (Omega_S/dS)^G restricted to the degree box |alpha_i| <= window.

    These are exactly the classes whose degree is divisible by the orders.
    """
    out = []
    for degree in box_degrees(ring.n, window):
        if ring.in_base_lattice(degree):
            out.extend(class_basis_at(ring, degree))
    return out


def base_ring_form(ring: LaurentRing, a_exponents, i: int) -> DifferentialForm:
    """The R-form t^a dt_i as a form in the s variables."""
    m = ring.orders
    exp = tuple(m[j] * a_exponents[j] + (m[i] - 1 if j == i else 0) for j in range(ring.n))
    comps = [ring.zero] * ring.n
    comps[i] = ring.monomial(exp, m[i])
    return DifferentialForm(ring, tuple(comps))


def base_ring_classes_at(ring: LaurentRing, degree):
    """reduce(t^a dt_i) for every R-monomial form of the given degree."""
    degree = tuple(degree)
    if not ring.in_base_lattice(degree):
        return []
    out = []
    for i in range(ring.n):
        a = tuple(
            (degree[j] - (ring.orders[i] if j == i else 0)) // ring.orders[j]
            for j in range(ring.n)
        )
        out.append(reduce_form(base_ring_form(ring, a, i)))
    return out


def invariant_matches_base_image_at(ring: LaurentRing, degree) -> bool:
    """Invariant classes at the degree equal the reduced base-ring image.

    Both inclusions are checked by rank computation; base-ring forms may not
    leak into other degrees.
    """
    from . import linalg

    degree = tuple(degree)
    slots = slot_indices(ring, degree)

    def flat(c):
        vec = c.component(degree)
        return [vec[i] for i in slots]

    base = base_ring_classes_at(ring, degree)
    for c in base:
        if any(d != degree for d in c.degrees()):
            return False
    inv = [flat(c) for c in class_basis_at(ring, degree)]
    img = [flat(c) for c in base]
    ra = linalg.rank(inv, ring.field) if inv else 0
    rb = linalg.rank(img, ring.field) if img else 0
    rab = linalg.rank(inv + img, ring.field) if inv or img else 0
    return ra == rb == rab


def invariant_matches_base_image(ring: LaurentRing, window: int) -> bool:
    """The window fixed classes equal the reduced base-ring image, degree by degree."""
    from .laurent import box_degrees as _box

    for degree in _box(ring.n, window):
        if ring.in_base_lattice(degree):
            if not invariant_matches_base_image_at(ring, degree):
                return False
        elif base_ring_classes_at(ring, degree):
            return False
    return True
