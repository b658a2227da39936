"""Loop algebras g tensor S, constant descent cocycles and the descended algebra.

A constant cocycle is stored through its generator images v_1..v_n; the value
at g = (j_1..j_n) is u_g = prod v_i^{j_i} tensor id.  Building a twist from
automorphisms sigma_1..sigma_n sets v_i = sigma_i^(-1), which makes the
degree-alpha component of the descended algebra equal to the simultaneous
sigma-eigenspace of residue alpha mod (m_1..m_n), tensored with s^alpha.
"""

from __future__ import annotations

from . import linalg
from .errors import MismatchError, StructureError
from .laurent import GaloisElement, LaurentPoly, LaurentRing, box_degrees
from .liealg import EigenspaceDecomposition, LieAutomorphism, SplitSimpleLieAlgebra


class LoopAlgebra:
    """g tensor S with the bracket [x (x) a, y (x) b] = [x,y] (x) ab."""

    def __init__(self, algebra: SplitSimpleLieAlgebra, ring: LaurentRing):
        if algebra.field != ring.field:
            raise MismatchError("algebra and ring live over different fields")
        self.algebra = algebra
        self.ring = ring
        self.field = algebra.field

    def zero(self) -> "LoopElement":
        return LoopElement(self, {})

    def pure(self, gvec, exponent) -> "LoopElement":
        """x tensor s^exponent."""
        exponent = tuple(int(e) for e in exponent)
        if len(exponent) != self.ring.n:
            raise MismatchError("exponent arity does not match the ring")
        if not any(gvec):
            return self.zero()
        return LoopElement(self, {exponent: tuple(gvec)})

    def tensor(self, gvec, poly: LaurentPoly) -> "LoopElement":
        """x tensor p for a polynomial p."""
        out = self.zero()
        for exp, c in poly.terms.items():
            out = out + self.pure([c * v for v in gvec], exp)
        return out

    def bracket(self, x: "LoopElement", y: "LoopElement") -> "LoopElement":
        terms = {}
        alg = self.algebra
        for ea, va in x.terms.items():
            for eb, vb in y.terms.items():
                w = alg.bracket(list(va), list(vb))
                if any(w):
                    e = tuple(a + b for a, b in zip(ea, eb))
                    cur = terms.get(e)
                    if cur is None:
                        terms[e] = w
                    else:
                        for i in range(alg.dim):
                            cur[i] = cur[i] + w[i]
        return LoopElement(
            self, {e: tuple(v) for e, v in terms.items() if any(v)}
        )

    def __eq__(self, other):
        return (
            isinstance(other, LoopAlgebra)
            and other.algebra is self.algebra
            and other.ring == self.ring
        )

    def __hash__(self):
        return hash((id(self.algebra), self.ring))


class LoopElement:
    """Finitely supported map exponent -> g-coefficient vector."""

    __slots__ = ("parent", "terms")

    def __init__(self, parent: LoopAlgebra, terms: dict):
        self.parent = parent
        self.terms = {e: v for e, v in terms.items() if any(v)}

    def _check(self, other):
        if not isinstance(other, LoopElement) or other.parent != self.parent:
            raise MismatchError("loop elements from different algebras")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = {e: list(v) for e, v in self.terms.items()}
        dim = self.parent.algebra.dim
        for e, v in other.terms.items():
            cur = out.get(e)
            if cur is None:
                out[e] = list(v)
            else:
                for i in range(dim):
                    cur[i] = cur[i] + v[i]
        return LoopElement(self.parent, {e: tuple(v) for e, v in out.items()})

    def __neg__(self):
        return LoopElement(
            self.parent, {e: tuple(-x for x in v) for e, v in self.terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        scalar = self.parent.field.scalar(scalar)
        return LoopElement(
            self.parent,
            {e: tuple(x * scalar for x in v) for e, v in self.terms.items()},
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._check(other)
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self):
        return sorted(self.terms)

    def component(self, exponent):
        dim = self.parent.algebra.dim
        return self.terms.get(tuple(exponent), tuple([self.parent.field.zero] * dim))

    def galois_ring(self, g: GaloisElement) -> "LoopElement":
        """Act on the ring part only: x tensor s^a -> character * x tensor s^a."""
        group = self.parent.ring.group
        out = {}
        for e, v in self.terms.items():
            chi = group.character(g, e)
            out[e] = tuple(x * chi for x in v)
        return LoopElement(self.parent, out)

    def apply_gmap(self, auto: LieAutomorphism) -> "LoopElement":
        """Apply an automorphism of g to every coefficient vector."""
        return LoopElement(
            self.parent,
            {e: tuple(auto.apply(list(v))) for e, v in self.terms.items()},
        )

    def to_json(self):
        out = []
        for e in sorted(self.terms):
            out.append({"exp": list(e), "vec": [str(x) for x in self.terms[e]]})
        return out

    @classmethod
    def from_json(cls, parent: LoopAlgebra, data) -> "LoopElement":
        out = parent.zero()
        for term in data:
            vec = [parent.field.parse(x) for x in term["vec"]]
            out = out + parent.pure(vec, tuple(term["exp"]))
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        alg = self.parent.algebra
        parts = []
        for e in sorted(self.terms):
            v = self.terms[e]
            body = " + ".join(
                f"{c}*{alg.labels[i]}" for i, c in enumerate(v) if c
            )
            parts.append(f"({body}) (x) s^{e}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self}>"


class DescentCocycle:
    """Constant cocycle u_g = (prod_i v_i^{g_i}) tensor id on the loop algebra."""

    def __init__(self, loopalg: LoopAlgebra, generators, orders, verify_law: bool = True):
        self.loopalg = loopalg
        self.generators = tuple(generators)
        self.orders = tuple(int(m) for m in orders)
        if len(self.generators) != len(self.orders):
            raise MismatchError("one generator image per Galois factor is required")
        if self.orders != loopalg.ring.orders:
            raise MismatchError("cocycle orders do not match the ring")
        from .liealg import identity_automorphism

        ident = identity_automorphism(loopalg.algebra)
        for i, (v, m) in enumerate(zip(self.generators, self.orders)):
            if v.algebra is not loopalg.algebra:
                raise StructureError("generator image acts on a different algebra")
            if v ** m != ident:
                raise StructureError(
                    f"generator image {i} does not satisfy v^{m} = id"
                )
        for i in range(len(self.generators)):
            for j in range(i + 1, len(self.generators)):
                if not self.generators[i].commutes_with(self.generators[j]):
                    raise StructureError(
                        f"generator images {i} and {j} do not commute; "
                        "only constant cocycles over an abelian family are supported"
                    )
        self._values = {}
        if verify_law:
            self._verify_constant_law()

    def value(self, g: GaloisElement) -> LieAutomorphism:
        key = g.components
        cached = self._values.get(key)
        if cached is None:
            from .liealg import identity_automorphism

            cached = identity_automorphism(self.loopalg.algebra)
            for v, j in zip(self.generators, key):
                if j:
                    cached = cached.compose(v ** j)
            self._values[key] = cached
        return cached

    def _verify_constant_law(self):
        group = self.loopalg.ring.group
        elems = group.elements()
        for g in elems:
            for h in elems:
                lhs = self.value(g + h)
                rhs = self.value(g).compose(self.value(h))
                if lhs.columns != rhs.columns:
                    raise StructureError("constant cocycle law u_(g+h) = u_g u_h fails")

    def apply(self, g: GaloisElement, x: LoopElement) -> LoopElement:
        """The semilinear descent action x -> u_g(^g x)."""
        return x.galois_ring(g).apply_gmap(self.value(g))


class TwistedLoopAlgebra:
    """The descended algebra L_u of a constant cocycle built from sigma_1..sigma_n."""

    def __init__(self, loopalg: LoopAlgebra, sigmas, orders):
        self.loopalg = loopalg
        self.algebra = loopalg.algebra
        self.ring = loopalg.ring
        self.field = loopalg.field
        self.group = loopalg.ring.group
        self.sigmas = tuple(sigmas)
        self.orders = tuple(int(m) for m in orders)
        if self.orders != self.ring.orders:
            raise MismatchError("twist orders do not match the ring")
        self.eigen = EigenspaceDecomposition(self.algebra, self.sigmas, self.orders)
        self.cocycle = DescentCocycle(
            loopalg, [s.inverse() for s in self.sigmas], self.orders
        )

    # -- components -----------------------------------------------------------

    def residue(self, degree):
        return tuple(a % m for a, m in zip(degree, self.orders))

    def component_gbasis(self, degree):
        return self.eigen.component(self.residue(degree))

    def component_dim(self, degree) -> int:
        return len(self.component_gbasis(degree))

    def component_basis(self, degree):
        degree = tuple(degree)
        return [
            self.loopalg.pure(list(v), degree) for v in self.component_gbasis(degree)
        ]

    def component_coords(self, degree, gvec):
        """Coordinates of a g-vector in the eigen-adapted component basis."""
        return self.eigen.coords(self.residue(degree), list(gvec))

    def component_direct(self, degree):
        """Fixed-point computation of the degree component, as an independent route."""
        degree = tuple(degree)
        field = self.field
        dim = self.algebra.dim
        rows = []
        for g in self.group.elements():
            chi = self.group.character(g, degree)
            u = self.cocycle.value(g)
            for r in range(dim):
                row = [chi * u.columns[c][r] for c in range(dim)]
                row[r] = row[r] - field.one
                rows.append(row)
        return [tuple(v) for v in linalg.nullspace(rows, dim, field)]

    def contains(self, x: LoopElement) -> bool:
        """Membership in L_u: u_g(^g x) = x for every g, exhaustively."""
        if x.parent != self.loopalg:
            raise MismatchError("element from a different loop algebra")
        for g in self.group.elements():
            if self.cocycle.apply(g, x) != x:
                return False
        return True

    # -- window bookkeeping -----------------------------------------------------

    def window_degrees(self, window: int):
        return box_degrees(self.ring.n, window)

    def window_basis(self, window: int):
        """Flat list of (degree, position, LoopElement) over the degree box."""
        out = []
        for degree in self.window_degrees(window):
            for pos, el in enumerate(self.component_basis(degree)):
                out.append((degree, pos, el))
        return out

    # -- the fixed subalgebra and the subspaces attached to ring elements --------

    def g0_basis(self):
        return self.eigen.component((0,) * len(self.orders))

    def g_a_subspace(self, a: LaurentPoly):
        """{x : v_g(x) tensor ^g a = x tensor a for all g}, by character decomposition."""
        if a.is_zero():
            raise ValueError("the subspace is defined for nonzero ring elements only")
        residues = sorted({self.residue(e) for e in a.terms})
        basis = [list(v) for v in self.eigen.component(residues[0])]
        for res in residues[1:]:
            basis = linalg.intersect(
                basis, [list(v) for v in self.eigen.component(res)], self.field
            )
            if not basis:
                break
        return [tuple(v) for v in basis]

    def in_g0(self, gvec) -> bool:
        return self.eigen.contains((0,) * len(self.orders), list(gvec))


def build_twist(algebra, ring, sigmas) -> TwistedLoopAlgebra:
    return TwistedLoopAlgebra(LoopAlgebra(algebra, ring), sigmas, ring.orders)
