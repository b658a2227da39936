"""Split simple Lie algebras in a Chevalley basis, with exact structure constants.

Basis order: root vectors for positive roots (height-lex order), then root
vectors for the corresponding negative roots, then the Cartan elements
h_1..h_rank.  Structure-constant signs are fixed by setting N = +(p+1) on
extraspecial pairs and propagating through the standard quadruple identity,
so the table is deterministic; antisymmetry and the Jacobi identity are
verified exhaustively at build time.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from . import linalg
from .cyclotomic import CyclotomicField
from .errors import MismatchError, StructureError
from .rootsystem import RootSystem, root_system


def _positive_pair_constants(rs: RootSystem):
    """N_{alpha,beta} over Q for all positive-root pairs summing to a root."""
    N = {}

    def mixed(xi, eta):
        # N for the pair (x_xi, x_{-eta}), xi != eta positive roots
        diff = tuple(a - b for a, b in zip(xi, eta))
        if diff in rs.index:  # difference is a positive root delta, delta + eta = xi
            return rs.norm(diff) * N[(diff, eta)] / rs.norm(xi)
        neg = tuple(-c for c in diff)
        if neg in rs.index:  # eta - xi positive root delta', delta' + xi = eta
            return rs.norm(neg) * N[(neg, xi)] / rs.norm(eta)
        return Fraction(0)

    for gamma in rs.positive_roots:
        decs = rs.decompositions(gamma)
        if not decs:
            continue
        a1, b1 = decs[0]  # extraspecial pair: sign fixed to +
        p = rs.string_down(a1, b1)
        N[(a1, b1)] = Fraction(p + 1)
        N[(b1, a1)] = Fraction(-(p + 1))
        for alpha, beta in decs[1:]:
            t1 = Fraction(0)
            d1 = tuple(x - y for x, y in zip(b1, alpha))
            d2 = tuple(x - y for x, y in zip(a1, beta))
            if d1 in rs.all_roots and d2 in rs.all_roots:
                t1 = mixed(b1, alpha) * mixed(a1, beta) / rs.norm(d1)
            t2 = Fraction(0)
            d3 = tuple(x - y for x, y in zip(a1, alpha))
            d4 = tuple(x - y for x, y in zip(b1, beta))
            if d3 in rs.all_roots and d4 in rs.all_roots:
                t2 = -mixed(a1, alpha) * mixed(b1, beta) / rs.norm(d3)
            value = rs.norm(gamma) / N[(a1, b1)] * (t1 + t2)
            expect = rs.string_down(alpha, beta) + 1
            if value.denominator != 1 or abs(value) != expect:
                raise StructureError(
                    f"structure constant for {alpha}+{beta} came out {value}, "
                    f"expected magnitude {expect}"
                )
            N[(alpha, beta)] = value
            N[(beta, alpha)] = -value
    return N


def _signed_pair_constant(rs, N, a, b):
    """N for arbitrary signed roots a, b with a + b a root (Q-valued)."""
    a_pos, b_pos = a in rs.index, b in rs.index
    if a_pos and b_pos:
        return N.get((a, b), Fraction(0))
    if not a_pos and not b_pos:
        na, nb = tuple(-c for c in a), tuple(-c for c in b)
        return -N.get((na, nb), Fraction(0))
    if not a_pos:
        return -_signed_pair_constant(rs, N, b, a)
    # a positive, b negative
    eta = tuple(-c for c in b)
    s = tuple(x + y for x, y in zip(a, b))
    if s in rs.index:
        return rs.norm(s) * N[(s, eta)] / rs.norm(a)
    ns = tuple(-c for c in s)
    if ns in rs.index:
        return rs.norm(ns) * N[(ns, a)] / rs.norm(eta)
    return Fraction(0)


class SplitSimpleLieAlgebra:
    """Chevalley-basis realization of a split simple Lie algebra over Q(zeta_M)."""

    def __init__(self, family: str, rank: int, field: CyclotomicField):
        self.rootsystem = root_system(family, rank)
        self.field = field
        rs = self.rootsystem
        npos = len(rs.positive_roots)
        self.dim = 2 * npos + rank
        self.npos = npos
        self.rank = rank
        self.family = rs.family

        # signed root of basis index (None for Cartan indices)
        self.root_of_index = [None] * self.dim
        self.index_of_root = {}
        for i, r in enumerate(rs.positive_roots):
            neg = tuple(-c for c in r)
            self.root_of_index[i] = r
            self.root_of_index[npos + i] = neg
            self.index_of_root[r] = i
            self.index_of_root[neg] = npos + i
        self.labels = (
            [f"x{list(r)}" for r in rs.positive_roots]
            + [f"x{[-c for c in r]}" for r in rs.positive_roots]
            + [f"h{i + 1}" for i in range(rank)]
        )

        self._build_structure()
        self._build_killing()
        self.verify_chevalley()

    # -- construction --------------------------------------------------------

    def _build_structure(self):
        rs = self.rootsystem
        field = self.field
        N = _positive_pair_constants(rs)
        struct = {}

        def put(i, j, entries):
            entries = tuple((k, c) for k, c in entries if c)
            if entries:
                struct[(i, j)] = entries
                struct[(j, i)] = tuple((k, -c) for k, c in entries)

        h0 = 2 * self.npos
        for i in range(self.npos):
            alpha = rs.positive_roots[i]
            coroot = rs.coroot(alpha)
            put(i, self.npos + i, [(h0 + t, field.scalar(c)) for t, c in enumerate(coroot)])
        for ia in range(2 * self.npos):
            a = self.root_of_index[ia]
            for ib in range(ia + 1, 2 * self.npos):
                b = self.root_of_index[ib]
                s = tuple(x + y for x, y in zip(a, b))
                if not any(s):
                    continue  # handled above
                if s in rs.all_roots:
                    c = _signed_pair_constant(rs, N, a, b)
                    put(ia, ib, [(self.index_of_root[s], field.scalar(c))])
        for t in range(self.rank):
            for ia in range(2 * self.npos):
                a = self.root_of_index[ia]
                pairing = rs.pairing(a, t)
                if pairing:
                    put(h0 + t, ia, [(ia, field.scalar(pairing))])
        self.struct = struct
        self._struct_map = {key: dict(val) for key, val in struct.items()}

    def _build_killing(self):
        field = self.field
        d = self.dim
        kill = [[field.zero] * d for _ in range(d)]
        for i in range(d):
            for j in range(i, d):
                total = field.zero
                for c in range(d):
                    row_j = self.struct.get((j, c))
                    if not row_j:
                        continue
                    row_i_map = None
                    for r, w in row_j:
                        row_i_map = self._struct_map.get((i, r))
                        if row_i_map:
                            v = row_i_map.get(c)
                            if v is not None:
                                total = total + v * w
                kill[i][j] = total
                kill[j][i] = total
        self.killing_matrix = kill

    # -- vectors ---------------------------------------------------------------

    def zero_vector(self):
        return [self.field.zero] * self.dim

    def basis_vector(self, i: int):
        v = self.zero_vector()
        v[i] = self.field.one
        return v

    def e(self, i: int):
        """Generator x_{alpha_i} (0-indexed simple root)."""
        alpha = tuple(1 if j == i else 0 for j in range(self.rank))
        return self.basis_vector(self.index_of_root[alpha])

    def f(self, i: int):
        alpha = tuple(-1 if j == i else 0 for j in range(self.rank))
        return self.basis_vector(self.index_of_root[alpha])

    def h(self, i: int):
        return self.basis_vector(2 * self.npos + i)

    def bracket(self, u, v):
        if len(u) != self.dim or len(v) != self.dim:
            raise MismatchError("vector dimension does not match the algebra")
        out = [self.field.zero] * self.dim
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b:
                        entries = self.struct.get((i, j))
                        if entries:
                            ab = a * b
                            for k, c in entries:
                                out[k] = out[k] + ab * c
        return out

    def killing(self, u, v):
        if len(u) != self.dim or len(v) != self.dim:
            raise MismatchError("vector dimension does not match the algebra")
        total = self.field.zero
        for i, a in enumerate(u):
            if a:
                row = self.killing_matrix[i]
                for j, b in enumerate(v):
                    if b:
                        total = total + a * b * row[j]
        return total

    # -- verification ------------------------------------------------------------

    def _jacobi_defect(self, i, j, k):
        acc = {}

        def add_term(a, inner):
            for m, c in inner:
                entries = self.struct.get((a, m))
                if entries:
                    for t, w in entries:
                        acc[t] = acc.get(t, self.field.zero) + c * w

        add_term(i, self.struct.get((j, k), ()))
        add_term(j, self.struct.get((k, i), ()))
        add_term(k, self.struct.get((i, j), ()))
        return {t: v for t, v in acc.items() if v}

    def verify_chevalley(self):
        """Exhaustive antisymmetry + Jacobi on basis triples; Killing nondegeneracy."""
        for (i, j), entries in self.struct.items():
            mirrored = dict(self.struct.get((j, i), ()))
            if {k: -c for k, c in entries} != mirrored:
                raise StructureError(f"antisymmetry fails on basis pair ({i},{j})")
        for i in range(self.dim):
            if (i, i) in self.struct:
                raise StructureError(f"[b_{i}, b_{i}] != 0")
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(j + 1, self.dim):
                    if self._jacobi_defect(i, j, k):
                        raise StructureError(
                            f"Jacobi fails on basis triple ({i},{j},{k})"
                        )
        if not linalg.det(self.killing_matrix, self.field):
            raise StructureError("Killing form is degenerate")

    def jacobi_holds_ordered(self) -> bool:
        """Jacobi over all ordered basis triples (slow path used by test suites)."""
        d = self.dim
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    if self._jacobi_defect(i, j, k):
                        return False
        return True

    # -- serialization ------------------------------------------------------------

    def structure_records(self):
        out = []
        for (i, j), entries in sorted(self.struct.items()):
            for k, c in entries:
                out.append({"i": i, "j": j, "k": k, "c": str(c)})
        return out

    def __repr__(self):
        return f"SplitSimpleLieAlgebra({self.family}{self.rank}, dim={self.dim})"


_ALGEBRA_CACHE = {}


def build_algebra(family: str, rank: int, field: CyclotomicField | None = None):
    """Validated Chevalley-basis algebra; cached per (type, conductor)."""
    if field is None:
        field = CyclotomicField(1)
    key = (family.upper(), rank, field.conductor)
    algebra = _ALGEBRA_CACHE.get(key)
    if algebra is None:
        algebra = SplitSimpleLieAlgebra(family, rank, field)
        _ALGEBRA_CACHE[key] = algebra
    return algebra


def _apply_columns(algebra, columns, vec):
    out = [algebra.field.zero] * algebra.dim
    for j, a in enumerate(vec):
        if a:
            col = columns[j]
            for t in range(algebra.dim):
                if col[t]:
                    out[t] = out[t] + a * col[t]
    return out


def _compose_columns(algebra, a_cols, b_cols):
    return tuple(tuple(_apply_columns(algebra, a_cols, col)) for col in b_cols)


def _identity_columns(algebra):
    return tuple(tuple(algebra.basis_vector(i)) for i in range(algebra.dim))


class LieAutomorphism:
    """A bracket-preserving linear map of finite order, stored column-wise."""

    def __init__(self, algebra, columns, order: int, validate: bool = True):
        self.algebra = algebra
        self.columns = tuple(tuple(col) for col in columns)
        if len(self.columns) != algebra.dim or any(
            len(c) != algebra.dim for c in self.columns
        ):
            raise MismatchError("automorphism matrix has wrong shape")
        if validate:
            self._validate_bracket()
            order = self._validate_order(order)
        self.order = order

    def _validate_bracket(self):
        alg = self.algebra
        for i in range(alg.dim):
            for j in range(i + 1, alg.dim):
                entries = alg.struct.get((i, j), ())
                lhs = alg.zero_vector()
                for k, c in entries:
                    col = self.columns[k]
                    for t in range(alg.dim):
                        if col[t]:
                            lhs[t] = lhs[t] + c * col[t]
                rhs = alg.bracket(self.columns[i], self.columns[j])
                if lhs != rhs:
                    raise StructureError(
                        f"matrix does not preserve the bracket on basis pair ({i},{j})"
                    )

    def _validate_order(self, declared: int) -> int:
        if declared < 1:
            raise StructureError("automorphism order must be positive")
        ident = _identity_columns(self.algebra)
        power = self.columns
        minimal = None
        for j in range(1, declared + 1):
            if power == ident:  # power holds A^j at the top of iteration j
                minimal = j
                break
            power = _compose_columns(self.algebra, self.columns, power)
        if minimal is None or declared % minimal != 0:
            raise StructureError(f"matrix does not have order dividing {declared}")
        return minimal

    def apply(self, vec):
        return _apply_columns(self.algebra, self.columns, vec)

    def compose(self, other: "LieAutomorphism") -> "LieAutomorphism":
        if other.algebra is not self.algebra:
            raise MismatchError("automorphisms act on different algebras")
        cols = _compose_columns(self.algebra, self.columns, other.columns)
        bound = lcm(self.order, other.order)
        return LieAutomorphism(self.algebra, cols, order=bound, validate=False)

    def __pow__(self, exponent: int) -> "LieAutomorphism":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        acc = identity_automorphism(self.algebra)
        base = self
        e = exponent
        while e:
            if e & 1:
                acc = acc.compose(base)
            base = base.compose(base)
            e >>= 1
        return acc

    def inverse(self) -> "LieAutomorphism":
        return self ** (self.order - 1) if self.order > 1 else self

    def commutes_with(self, other: "LieAutomorphism") -> bool:
        return self.compose(other).columns == other.compose(self).columns

    def is_identity(self) -> bool:
        alg = self.algebra
        return self.columns == tuple(tuple(alg.basis_vector(i)) for i in range(alg.dim))

    def __eq__(self, other):
        return (
            isinstance(other, LieAutomorphism)
            and other.algebra is self.algebra
            and other.columns == self.columns
        )

    def __hash__(self):
        return hash(self.columns)

    def fixed_space(self):
        return self.eigenspace(self.algebra.field.one)

    def eigenspace(self, eigenvalue):
        alg = self.algebra
        rows = []
        for r in range(alg.dim):
            row = [self.columns[c][r] for c in range(alg.dim)]
            row[r] = row[r] - eigenvalue
            rows.append(row)
        return linalg.nullspace(rows, alg.dim, alg.field)

    def matrix_records(self):
        return [[str(self.columns[j][i]) for j in range(self.algebra.dim)]
                for i in range(self.algebra.dim)]


def identity_automorphism(algebra) -> LieAutomorphism:
    cols = [algebra.basis_vector(i) for i in range(algebra.dim)]
    return LieAutomorphism(algebra, cols, order=1, validate=False)


def diagram_automorphism(algebra, perm) -> LieAutomorphism:
    """Extend a Dynkin-diagram symmetry from the generators by bracket words.

    Every decomposition of a root is used and must agree; a disagreement
    signals an inconsistency in the structure constants and raises.
    """
    rs = algebra.rootsystem
    rank = algebra.rank
    perm = tuple(perm)
    if sorted(perm) != list(range(rank)):
        raise StructureError(f"{perm} is not a permutation of 0..{rank - 1}")
    for i in range(rank):
        for j in range(rank):
            if rs.cartan[perm[i]][perm[j]] != rs.cartan[i][j]:
                raise StructureError(f"{perm} does not preserve the Cartan matrix")

    field = algebra.field
    N = _positive_pair_constants(rs)
    npos = algebra.npos
    images = {}
    for i in range(rank):
        alpha = tuple(1 if j == i else 0 for j in range(rank))
        target = tuple(1 if j == perm[i] else 0 for j in range(rank))
        images[algebra.index_of_root[alpha]] = algebra.basis_vector(
            algebra.index_of_root[target]
        )
        neg, tneg = tuple(-c for c in alpha), tuple(-c for c in target)
        images[algebra.index_of_root[neg]] = algebra.basis_vector(
            algebra.index_of_root[tneg]
        )
        images[2 * npos + i] = algebra.basis_vector(2 * npos + perm[i])

    for gamma in rs.positive_roots:
        decs = rs.decompositions(gamma)
        if not decs:
            continue
        for sign in (1, -1):
            target_idx = algebra.index_of_root[tuple(sign * c for c in gamma)]
            candidate = None
            for alpha, beta in decs:
                ia = algebra.index_of_root[tuple(sign * c for c in alpha)]
                ib = algebra.index_of_root[tuple(sign * c for c in beta)]
                coeff = field.scalar(sign * N[(alpha, beta)])
                img = algebra.bracket(images[ia], images[ib])
                inv = coeff.inverse()
                img = [x * inv for x in img]
                if candidate is None:
                    candidate = img
                elif candidate != img:
                    raise StructureError(
                        f"bracket words disagree while extending {perm} at root {gamma}"
                    )
            images[target_idx] = candidate

    columns = [images[i] for i in range(algebra.dim)]
    order = _perm_order(perm)
    return LieAutomorphism(algebra, columns, order=order)


def _perm_order(perm) -> int:
    order = 1
    seen = set()
    for start in range(len(perm)):
        if start in seen:
            continue
        length, cur = 0, start
        while cur not in seen:
            seen.add(cur)
            cur = perm[cur]
            length += 1
        order = lcm(order, length)
    return order


class EigenspaceDecomposition:
    """Simultaneous eigenspaces of a commuting family of finite-order maps."""

    def __init__(self, algebra, autos, orders):
        self.algebra = algebra
        self.autos = tuple(autos)
        self.orders = tuple(orders)
        field = algebra.field
        n = len(autos)
        if len(orders) != n:
            raise MismatchError("one order per automorphism is required")
        for m in orders:
            if m < 1:
                raise StructureError(f"orders must be positive, got {m}")
            if field.conductor % m != 0:
                raise MismatchError(
                    f"field conductor {field.conductor} lacks the order-{m} roots of unity"
                )
        ident = identity_automorphism(algebra)
        for a, m in zip(autos, orders):
            if a.algebra is not algebra:
                raise MismatchError("automorphisms act on different algebras")
            if a ** m != ident:
                raise StructureError(f"automorphism order does not divide {m}")
        for i in range(n):
            for j in range(i + 1, n):
                if not autos[i].commutes_with(autos[j]):
                    raise StructureError(f"automorphisms {i} and {j} do not commute")

        self.components = {}
        residues = [()]
        for m in orders:
            residues = [r + (i,) for r in residues for i in range(m)]
        total = 0
        stacked = []
        for res in residues:
            rows = []
            for a, m, i in zip(autos, orders, res):
                lam = field.root_of_unity(m, i)
                for r in range(algebra.dim):
                    row = [a.columns[c][r] for c in range(algebra.dim)]
                    row[r] = row[r] - lam
                    rows.append(row)
            if rows:
                basis = linalg.nullspace(rows, algebra.dim, field)
            else:
                basis = [algebra.basis_vector(i) for i in range(algebra.dim)]
            self.components[res] = tuple(tuple(v) for v in basis)
            total += len(basis)
            stacked.extend(basis)
        if total != algebra.dim or linalg.rank(stacked, field) != algebra.dim:
            raise StructureError("eigenspaces do not decompose the algebra")
        for res, basis in self.components.items():
            for v in basis:
                for a, m, i in zip(autos, orders, res):
                    lam = field.root_of_unity(m, i)
                    if a.apply(list(v)) != [lam * x for x in v]:
                        raise StructureError("eigenvector check failed")
        self._solvers = {
            res: linalg.SpanSolver(field, basis) for res, basis in self.components.items()
        }

    def residue(self, degree):
        return tuple(a % m for a, m in zip(degree, self.orders))

    def component(self, residue):
        return self.components[tuple(residue)]

    def dims(self):
        return {res: len(b) for res, b in sorted(self.components.items())}

    def coords(self, residue, vector):
        return self._solvers[tuple(residue)].coords(vector)

    def contains(self, residue, vector) -> bool:
        return self._solvers[tuple(residue)].contains(vector)


def simultaneous_eigenspaces(autos, orders) -> EigenspaceDecomposition:
    if not autos:
        raise MismatchError("at least one automorphism is required")
    return EigenspaceDecomposition(autos[0].algebra, autos, orders)


def is_central_simple(algebra, basis) -> bool:
    """Killing nondegeneracy of the subalgebra plus one-dimensional adjoint commutant."""
    field = algebra.field
    basis = [list(v) for v in basis]
    d = len(basis)
    if d == 0:
        return False
    solver = linalg.SpanSolver(field, basis)
    if solver.dim != d:
        raise StructureError("subalgebra basis is linearly dependent")
    ad = [[[field.zero] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            coords = solver.coords(algebra.bracket(basis[i], basis[j]))
            if coords is None:
                raise StructureError("basis is not closed under the bracket")
            for r in range(d):
                ad[i][r][j] = coords[r]  # ad_i column j
    kill = [[field.zero] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            tr = field.zero
            for r in range(d):
                for c in range(d):
                    tr = tr + ad[i][r][c] * ad[j][c][r]
            kill[i][j] = tr
            kill[j][i] = tr
    if not linalg.det(kill, field):
        return False
    elim = linalg.SparseEliminator(field)
    for i in range(d):
        for r in range(d):
            for c in range(d):
                row = {}
                for m in range(d):
                    v = ad[i][m][c]
                    if v:
                        row[r * d + m] = row.get(r * d + m, field.zero) + v
                    w = ad[i][r][m]
                    if w:
                        row[m * d + c] = row.get(m * d + c, field.zero) - w
                row = {k: v for k, v in row.items() if v}
                if row:
                    elim.add(row)
    return d * d - elim.rank == 1
