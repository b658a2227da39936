"""Windowed graded 2-cohomology of the descended algebra by exact linear algebra.

A windowed cochain has one internal degree lam: it stores antisymmetric
bilinear components on pairs of window components whose degrees sum to lam,
with values in k^vdim.  The cocycle space restricted to a window carries
fewer constraints than the full algebra, so its dimension modulo windowed
coboundaries is an upper bound for the graded quotient; when it meets the
lower bound coming from independent canonical-cocycle slices, the graded
dimension is certified.
"""

from __future__ import annotations

from . import linalg
from .errors import MismatchError, StructureError
from .extension import CentralExtension
from .kaehler import slot_indices
from .laurent import box_degrees


def _in_box(degree, d):
    return all(abs(a) <= d for a in degree)


class WindowedCochain:
    """Antisymmetric window cochain of internal degree lam with values in k^vdim."""

    def __init__(self, twisted, lam, window: int, vdim: int, comp: dict):
        self.twisted = twisted
        self.lam = tuple(lam)
        self.window = window
        self.vdim = vdim
        field = twisted.field
        self.zero_value = tuple([field.zero] * vdim)
        clean = {}
        for (mu, nu), block in comp.items():
            mu, nu = tuple(mu), tuple(nu)
            if mu > nu:
                raise MismatchError("components must be stored with mu <= nu")
            if tuple(a + b for a, b in zip(mu, nu)) != self.lam:
                raise MismatchError(f"pair {(mu, nu)} does not sum to {self.lam}")
            if not (_in_box(mu, window) and _in_box(nu, window)):
                raise MismatchError(f"pair {(mu, nu)} lies outside the window")
            dm, dn = twisted.component_dim(mu), twisted.component_dim(nu)
            if len(block) != dm or any(len(row) != dn for row in block):
                raise MismatchError(f"component block at {(mu, nu)} has wrong shape")
            block = [[tuple(v) for v in row] for row in block]
            for row in block:
                for v in row:
                    if len(v) != vdim:
                        raise MismatchError("value arity does not match vdim")
            if mu == nu:
                for a in range(dm):
                    for b in range(dn):
                        lhs = block[a][b]
                        rhs = tuple(-x for x in block[b][a])
                        if lhs != rhs:
                            raise StructureError(
                                "diagonal component block is not antisymmetric"
                            )
            if any(any(any(x for x in v) for v in row) for row in block):
                clean[(mu, nu)] = block
        self.comp = clean

    # -- evaluation -------------------------------------------------------------

    def value(self, mu, nu, a: int, b: int):
        mu, nu = tuple(mu), tuple(nu)
        if mu <= nu:
            block = self.comp.get((mu, nu))
            if block is None:
                return self.zero_value
            return block[a][b]
        block = self.comp.get((nu, mu))
        if block is None:
            return self.zero_value
        return tuple(-x for x in block[b][a])

    def evaluate(self, x, y):
        """Value on two loop elements supported in the window."""
        tw = self.twisted
        field = tw.field
        out = [field.zero] * self.vdim
        for e1, v1 in x.terms.items():
            c1 = tw.component_coords(e1, v1)
            if c1 is None:
                raise StructureError("first argument is not in the descended algebra")
            for e2, v2 in y.terms.items():
                c2 = tw.component_coords(e2, v2)
                if c2 is None:
                    raise StructureError("second argument is not in the descended algebra")
                if tuple(a + b for a, b in zip(e1, e2)) != self.lam:
                    continue
                for a, ca in enumerate(c1):
                    if ca:
                        for b, cb in enumerate(c2):
                            if cb:
                                val = self.value(e1, e2, a, b)
                                factor = ca * cb
                                for t in range(self.vdim):
                                    if val[t]:
                                        out[t] = out[t] + factor * val[t]
        return tuple(out)

    # -- arithmetic ----------------------------------------------------------------

    def _check(self, other):
        if (
            not isinstance(other, WindowedCochain)
            or other.twisted is not self.twisted
            or other.lam != self.lam
            or other.window != self.window
            or other.vdim != self.vdim
        ):
            raise MismatchError("cochains have different shapes")
        return other

    def __add__(self, other):
        other = self._check(other)
        comp = {}
        for key in set(self.comp) | set(other.comp):
            mu, nu = key
            dm = self.twisted.component_dim(mu)
            dn = self.twisted.component_dim(nu)
            comp[key] = [
                [
                    tuple(
                        p + q
                        for p, q in zip(self.value(mu, nu, a, b), other.value(mu, nu, a, b))
                    )
                    for b in range(dn)
                ]
                for a in range(dm)
            ]
        return WindowedCochain(self.twisted, self.lam, self.window, self.vdim, comp)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        scalar = self.twisted.field.scalar(scalar)
        comp = {
            key: [[tuple(x * scalar for x in v) for v in row] for row in block]
            for key, block in self.comp.items()
        }
        return WindowedCochain(self.twisted, self.lam, self.window, self.vdim, comp)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.comp

    def tensor(self, vector):
        """Scalar cochain times a V-vector: requires vdim == 1."""
        if self.vdim != 1:
            raise MismatchError("tensor requires a scalar cochain")
        field = self.twisted.field
        vec = [field.scalar(v) for v in vector]
        comp = {
            key: [[tuple(v[0] * w for w in vec) for v in row] for row in block]
            for key, block in self.comp.items()
        }
        return WindowedCochain(self.twisted, self.lam, self.window, len(vec), comp)

    def coordinate(self, t: int) -> "WindowedCochain":
        """The t-th scalar coordinate cochain."""
        comp = {
            key: [[(v[t],) for v in row] for row in block]
            for key, block in self.comp.items()
        }
        return WindowedCochain(self.twisted, self.lam, self.window, 1, comp)


def zero_cochain(twisted, lam, window: int, vdim: int = 1) -> WindowedCochain:
    return WindowedCochain(twisted, lam, window, vdim, {})


def cochain_from_function(twisted, lam, window: int, vdim: int, fill) -> WindowedCochain:
    """Build components from fill(mu, nu, a, b) -> value tuple, for mu <= nu."""
    lam = tuple(lam)
    comp = {}
    for mu in box_degrees(twisted.ring.n, window):
        nu = tuple(l - m for l, m in zip(lam, mu))
        if mu > nu or not _in_box(nu, window):
            continue
        dm, dn = twisted.component_dim(mu), twisted.component_dim(nu)
        if dm == 0 or dn == 0:
            continue
        block = [[tuple(fill(mu, nu, a, b)) for b in range(dn)] for a in range(dm)]
        comp[(mu, nu)] = block
    return WindowedCochain(twisted, lam, window, vdim, comp)


def canonical_slice(ext: CentralExtension, lam, window: int) -> WindowedCochain | None:
    """The lam-slice of the canonical central cocycle, in central-slot coordinates.

    Returns None when the central space vanishes at lam (degree outside the
    base lattice), where the slice is identically zero.
    """
    ring = ext.ring
    lam = tuple(lam)
    if not ring.in_base_lattice(lam):
        return None
    slots = slot_indices(ring, lam)
    tw = ext.twisted

    def fill(mu, nu, a, b):
        x = tw.component_basis(mu)[a]
        y = tw.component_basis(nu)[b]
        cls = ext.cocycle(x, y)
        vec = cls.component(lam)
        for d in cls.degrees():
            if d != lam:
                raise StructureError("canonical cocycle slice leaked outside lam")
        return tuple(vec[i] for i in slots)

    return cochain_from_function(tw, lam, window, len(slots), fill)


def coboundary(twisted, lam, window: int, tau) -> WindowedCochain:
    """d tau for tau given on the basis of the lam component: (x,y) -> -tau([x,y])."""
    lam = tuple(lam)
    field = twisted.field
    tau = [tuple(field.scalar(x) for x in row) for row in tau]
    dim_lam = twisted.component_dim(lam)
    if len(tau) != dim_lam:
        raise MismatchError("tau must assign a value to each lam-component basis vector")
    vdim = len(tau[0]) if tau else 1
    lb = twisted.loopalg.bracket

    def fill(mu, nu, a, b):
        x = twisted.component_basis(mu)[a]
        y = twisted.component_basis(nu)[b]
        w = lb(x, y)
        out = [field.zero] * vdim
        for e, gv in w.terms.items():
            coords = twisted.component_coords(e, gv)
            for r, c in enumerate(coords):
                if c:
                    for t in range(vdim):
                        out[t] = out[t] - c * tau[r][t]
        return tuple(out)

    return cochain_from_function(twisted, lam, window, vdim, fill)


class CochainIndex:
    """Flat unknown indexing of the antisymmetric pair components in a window."""

    def __init__(self, twisted, lam, window: int):
        self.twisted = twisted
        self.lam = tuple(lam)
        self.window = window
        self.blocks = {}
        self.size = 0
        for mu in box_degrees(twisted.ring.n, window):
            nu = tuple(l - m for l, m in zip(self.lam, mu))
            if mu > nu or not _in_box(nu, window):
                continue
            dm, dn = twisted.component_dim(mu), twisted.component_dim(nu)
            if dm == 0 or dn == 0:
                continue
            self.blocks[(mu, nu)] = self.size
            if mu == nu:
                self.size += dm * (dm - 1) // 2
            else:
                self.size += dm * dn

    def unknown(self, mu, nu, a: int, b: int):
        """(unknown_id, sign) or None when the entry is structurally zero."""
        mu, nu = tuple(mu), tuple(nu)
        if mu == nu:
            base = self.blocks.get((mu, nu))
            if base is None:
                return None
            if a == b:
                return None
            dm = self.twisted.component_dim(mu)
            if a < b:
                return base + (a * (2 * dm - a - 1)) // 2 + (b - a - 1), 1
            return self.unknown(mu, nu, b, a)[0], -1
        if mu < nu:
            base = self.blocks.get((mu, nu))
            if base is None:
                return None
            dn = self.twisted.component_dim(nu)
            return base + a * dn + b, 1
        res = self.unknown(nu, mu, b, a)
        if res is None:
            return None
        return res[0], -res[1]

    def vector_of(self, cochain: WindowedCochain, t: int = 0) -> dict:
        """Sparse unknown-coordinate vector of the t-th scalar coordinate.

        Reads each canonical slot once (strict upper triangle on diagonal
        blocks); the mirrored entries are determined by antisymmetry.
        """
        out = {}
        for (mu, nu), block in cochain.comp.items():
            dm = len(block)
            for a, row in enumerate(block):
                for b, v in enumerate(row):
                    if mu == nu and b <= a:
                        if b == a and v[t]:
                            raise StructureError(
                                "cochain has a nonzero structurally-zero entry"
                            )
                        continue
                    if v[t]:
                        uid, sign = self.unknown(mu, nu, a, b)
                        out[uid] = v[t] if sign == 1 else -v[t]
        return {k: v for k, v in out.items() if v}


def _constraint_rows(ext: CentralExtension, index: CochainIndex):
    """Sparse cocycle-identity rows over the unknowns, one per window triple."""
    tw = ext.twisted
    lam = index.lam
    window = index.window
    basis = tw.window_basis(window)
    lb = tw.loopalg.bracket
    rows = []
    nb = len(basis)
    for i in range(nb):
        di, pi, xi = basis[i]
        for j in range(i + 1, nb):
            dj, pj, xj = basis[j]
            dij = tuple(a + b for a, b in zip(di, dj))
            for k in range(j + 1, nb):
                dk, pk, xk = basis[k]
                if tuple(a + b for a, b in zip(dij, dk)) != lam:
                    continue
                djk = tuple(a + b for a, b in zip(dj, dk))
                dki = tuple(a + b for a, b in zip(dk, di))
                if not (_in_box(dij, window) and _in_box(djk, window) and _in_box(dki, window)):
                    continue
                row = {}

                def absorb(bracket_el, pair_deg, other_deg, other_pos):
                    w = bracket_el
                    for e, gv in w.terms.items():
                        coords = tw.component_coords(e, gv)
                        for r, c in enumerate(coords):
                            if c:
                                res = index.unknown(pair_deg, other_deg, r, other_pos)
                                if res is not None:
                                    uid, sign = res
                                    cur = row.get(uid, tw.field.zero)
                                    cur = cur + (c if sign == 1 else -c)
                                    if cur:
                                        row[uid] = cur
                                    elif uid in row:
                                        del row[uid]

                absorb(lb(xi, xj), dij, dk, pk)
                absorb(lb(xj, xk), djk, di, pi)
                absorb(lb(xk, xi), dki, dj, pj)
                if row:
                    rows.append(row)
    return rows


def cocycle_space_report(ext: CentralExtension, lam, window: int, vdim: int = 1) -> dict:
    """Windowed Z^2 modulo windowed coboundaries at one internal degree.

    The reported dimension is an upper bound for the graded quotient of the
    full algebra (the window imposes a subset of its constraints); it is
    certified exact when it equals the lower bound realized by independent
    canonical-cocycle slices.
    """
    tw = ext.twisted
    lam = tuple(lam)
    if not _in_box(lam, window):
        raise MismatchError(f"internal degree {list(lam)} lies outside the window")
    index = CochainIndex(tw, lam, window)
    rows = _constraint_rows(ext, index)
    degenerate = not rows
    constraints = linalg.SparseEliminator(tw.field)
    for row in rows:
        constraints.add(dict(row))
    z2 = index.size - constraints.rank

    boundaries = linalg.SparseEliminator(tw.field)
    dim_lam = tw.component_dim(lam)
    field = tw.field
    b2 = 0
    for t in range(dim_lam):
        tau = [
            (field.one,) if r == t else (field.zero,) for r in range(dim_lam)
        ]
        db = coboundary(tw, lam, window, tau)
        vec = index.vector_of(db)
        if vec and not constraints.dot_is_zero(vec):
            raise StructureError("a coboundary violates the windowed constraints")
        if boundaries.add(dict(vec)):
            b2 += 1

    slice_cochain = canonical_slice(ext, lam, window)
    lower = 0
    centre_dim = 0
    if slice_cochain is not None:
        centre_dim = slice_cochain.vdim
        for t in range(slice_cochain.vdim):
            vec = index.vector_of(slice_cochain, t)
            if vec and not constraints.dot_is_zero(vec):
                raise StructureError(
                    "canonical cocycle slice violates the windowed constraints"
                )
            if boundaries.add(dict(vec)):
                lower += 1
    h2 = z2 - b2
    return {
        "lambda": list(lam),
        "window": window,
        "vdim": vdim,
        "unknowns": index.size * vdim,
        "constraints": len(rows),
        "z2_dim": z2 * vdim,
        "b2_dim": b2 * vdim,
        "h2_dim": h2 * vdim,
        "lower_bound": lower * vdim,
        "centre_dim": centre_dim * vdim,
        "degenerate": degenerate,
        "certified": (not degenerate) and h2 == lower,
    }


def is_windowed_cocycle(ext: CentralExtension, P: WindowedCochain) -> bool:
    """Direct evaluation of the cocycle identity on all window triples."""
    tw = P.twisted
    basis = tw.window_basis(P.window)
    lb = tw.loopalg.bracket
    window = P.window
    nb = len(basis)
    for i in range(nb):
        di, _, xi = basis[i]
        for j in range(i + 1, nb):
            dj, _, xj = basis[j]
            dij = tuple(a + b for a, b in zip(di, dj))
            xij = lb(xi, xj)
            for k in range(j + 1, nb):
                dk, _, xk = basis[k]
                if tuple(a + b for a, b in zip(dij, dk)) != P.lam:
                    continue
                djk = tuple(a + b for a, b in zip(dj, dk))
                dki = tuple(a + b for a, b in zip(dk, di))
                if not (_in_box(dij, window) and _in_box(djk, window) and _in_box(dki, window)):
                    continue
                total = tuple(
                    a + b + c
                    for a, b, c in zip(
                        P.evaluate(xij, xk),
                        P.evaluate(lb(xj, xk), xi),
                        P.evaluate(lb(xk, xi), xj),
                    )
                )
                if any(total):
                    return False
    return True


def g0_is_semisimple(twisted) -> bool:
    """Killing form of the fixed subalgebra is nondegenerate."""
    field = twisted.field
    basis = [list(v) for v in twisted.g0_basis()]
    d = len(basis)
    if d == 0:
        return False
    solver = linalg.SpanSolver(field, basis)
    ad = []
    for i in range(d):
        cols = []
        for j in range(d):
            coords = solver.coords(twisted.algebra.bracket(basis[i], basis[j]))
            if coords is None:
                raise StructureError("fixed subalgebra is not bracket-closed")
            cols.append(coords)
        ad.append(cols)  # ad[i][j][r]: coeff of b_r in [b_i, b_j]
    kill = [[field.zero] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            tr = field.zero
            for r in range(d):
                for c in range(d):
                    tr = tr + ad[i][c][r] * ad[j][r][c]
            kill[i][j] = tr
            kill[j][i] = tr
    return bool(linalg.det(kill, field))


def invariantize(ext: CentralExtension, P: WindowedCochain):
    """Cohomologous cochain vanishing on (lam-component, fixed-subalgebra) pairs.

    Returns (P', tau) with P' = P + d tau and P'(x (x) s^lam, y (x) 1) = 0 for
    all x in the lam component and y in the fixed subalgebra.  Raises when the
    solve is inconsistent, distinguishing a non-semisimple fixed subalgebra
    from a window that is too small.
    """
    tw = P.twisted
    lam = P.lam
    field = tw.field
    dim_lam = tw.component_dim(lam)
    g0 = tw.component_basis((0,) * tw.ring.n)
    lam_basis = tw.component_basis(lam)
    rows, rhs = [], []
    lb = tw.loopalg.bracket
    for a, x in enumerate(lam_basis):
        for b, y in enumerate(g0):
            w = lb(x, y)
            row = [field.zero] * dim_lam
            for e, gv in w.terms.items():
                coords = tw.component_coords(e, gv)
                for r, c in enumerate(coords):
                    row[r] = row[r] + c
            rows.append(row)
            rhs.append(P.evaluate(x, y))
    tau = []
    for t in range(P.vdim):
        sol = linalg.solve_system(rows, [v[t] for v in rhs], field)
        if sol is None:
            if not g0_is_semisimple(tw):
                raise StructureError(
                    "normalization failed: the fixed subalgebra is not semisimple"
                )
            raise StructureError(
                "normalization failed: window too small for a consistent solve"
            )
        tau.append(sol)
    tau_rows = [tuple(tau[t][r] for t in range(P.vdim)) for r in range(dim_lam)]
    P2 = P + coboundary(tw, lam, P.window, tau_rows)
    for a, x in enumerate(lam_basis):
        for b, y in enumerate(g0):
            if any(P2.evaluate(x, y)):
                raise StructureError("normalization property failed after the solve")
    return P2, tau_rows


class CentralClassMap:
    """Linear map from the window central classes at one degree into k^vdim."""

    def __init__(self, ext, lam, slots, matrix, vdim):
        self.ext = ext
        self.lam = tuple(lam)
        self.slots = slots  # surviving coordinate slots at lam
        self.matrix = matrix  # matrix[slot_pos][t]
        self.vdim = vdim

    def apply(self, central_class):
        """Extend by zero off the internal degree."""
        field = self.ext.field
        out = [field.zero] * self.vdim
        vec = central_class.component(self.lam)
        for pos, slot in enumerate(self.slots):
            c = vec[slot]
            if c:
                for t in range(self.vdim):
                    if self.matrix[pos][t]:
                        out[t] = out[t] + c * self.matrix[pos][t]
        return tuple(out)

    def on_basis(self):
        return [tuple(self.matrix[pos]) for pos in range(len(self.slots))]


def extract_class_map(ext: CentralExtension, P: WindowedCochain) -> CentralClassMap:
    """Read the induced map on central classes off a normalized cochain.

    For base-lattice monomial pairs (s^mu, s^nu) with mu + nu = lam, the
    value block on the fixed subalgebra must be proportional to the Killing
    block; the proportionality constants then factor through the reduction
    map, which is verified by an exact linear solve.
    """
    tw = P.twisted
    ring = ext.ring
    lam = P.lam
    field = tw.field
    g0 = tw.component_basis((0,) * ring.n)
    zero_res = (0,) * ring.n
    g0_vecs = [list(v) for v in tw.eigen.component(zero_res)]
    d0 = len(g0_vecs)
    kill = [
        [ext.algebra.killing(g0_vecs[a], g0_vecs[b]) for b in range(d0)]
        for a in range(d0)
    ]
    # normalization precondition
    lam_basis = tw.component_basis(lam)
    for x in lam_basis:
        for y in g0:
            if any(P.evaluate(x, y)):
                raise StructureError("cochain is not normalized; run invariantize first")
    slots = slot_indices(ring, lam) if ring.in_base_lattice(lam) else []
    if not slots:
        return CentralClassMap(ext, lam, [], [], P.vdim)

    pairs = []
    for mu in box_degrees(ring.n, P.window):
        if not ring.in_base_lattice(mu):
            continue
        nu = tuple(l - m for l, m in zip(lam, mu))
        if not (_in_box(nu, P.window) and ring.in_base_lattice(nu)):
            continue
        pairs.append((mu, nu))
    if not pairs:
        raise StructureError("no base-lattice monomial pairs in the window at this degree")

    z_values = {}
    for mu, nu in pairs:
        xmu = [tw.loopalg.pure(v, mu) for v in g0_vecs]
        ynu = [tw.loopalg.pure(v, nu) for v in g0_vecs]
        values = [[P.evaluate(xmu[a], ynu[b]) for b in range(d0)] for a in range(d0)]
        z = None
        for a in range(d0):
            for b in range(d0):
                if kill[a][b]:
                    z = tuple(x / kill[a][b] for x in values[a][b])
                    break
            if z is not None:
                break
        if z is None:
            raise StructureError("Killing block on the fixed subalgebra vanishes")
        for a in range(d0):
            for b in range(d0):
                expect = tuple(kill[a][b] * x for x in z)
                if values[a][b] != expect:
                    raise StructureError(
                        f"value block at {(mu, nu)} is not Killing-proportional: "
                        "the cochain is not normalized"
                    )
        z_values[(mu, nu)] = z

    # relations of the reduction map on the available pairs
    for (mu, nu), z in z_values.items():
        if nu == (0,) * ring.n and any(z):
            raise StructureError("z_{a,1} != 0 for a normalized cochain")
        rev = z_values.get((nu, mu))
        if rev is not None and tuple(-x for x in rev) != z:
            raise StructureError("z antisymmetry fails")
    # cyclic relation z_{ab,c} + z_{bc,a} + z_{ca,b} = 0 on in-window triples
    base_degrees = [
        d for d in box_degrees(ring.n, P.window) if ring.in_base_lattice(d)
    ]
    for mu in base_degrees:
        for nu in base_degrees:
            for rho in base_degrees:
                if tuple(a + b + c for a, b, c in zip(mu, nu, rho)) != lam:
                    continue
                keys = [
                    (tuple(a + b for a, b in zip(mu, nu)), rho),
                    (tuple(a + b for a, b in zip(nu, rho)), mu),
                    (tuple(a + b for a, b in zip(rho, mu)), nu),
                ]
                if any(key not in z_values for key in keys):
                    continue
                total = tuple(
                    sum(vals, field.zero)
                    for vals in zip(*(z_values[key] for key in keys))
                )
                if any(total):
                    raise StructureError("cyclic relation of the reduction map fails")

    # solve phi on class coordinates: class(s^mu d s^nu) |-> z_{mu,nu}
    rows, rhs = [], []
    for (mu, nu), z in z_values.items():
        cls = ext.cocycle_class_of_pair(mu, nu)
        rows.append([cls.component(lam)[i] for i in slots])
        rhs.append(z)
    if linalg.rank(rows, field) < len(slots):
        raise StructureError(
            "window pairs do not span the central classes at this degree"
        )
    matrix = []
    cols = []
    for t in range(P.vdim):
        sol = linalg.solve_system(rows, [z[t] for z in rhs], field)
        if sol is None:
            raise StructureError(
                "class map is not well defined: values do not factor through reduction"
            )
        cols.append(sol)
    matrix = [[cols[t][pos] for t in range(P.vdim)] for pos in range(len(slots))]
    return CentralClassMap(ext, lam, slots, matrix, P.vdim)


def universal_map_check(ext: CentralExtension, P: WindowedCochain) -> dict:
    """Verify the universal-map construction against the extension by P.

    Normalizes P, extracts the class map, and checks that X + Z |-> (X, phi(Z))
    intertwines the extension bracket with the bracket defined by the
    normalized cochain on every pair of window basis elements.
    """
    tw = P.twisted
    if not is_windowed_cocycle(ext, P):
        raise StructureError("P is not a windowed cocycle")
    P0, tau = invariantize(ext, P)
    phi = extract_class_map(ext, P0)
    basis = ext.extended_window_basis(P.window)
    failures = []
    checked = 0
    for i, A in enumerate(basis):
        for j in range(i, len(basis)):
            B = basis[j]
            checked += 1
            big = ext.bracket(A, B)
            lhs = phi.apply(big.central)
            rhs = P0.evaluate(A.loop, B.loop)
            if lhs != rhs:
                failures.append(
                    {
                        "pair": [i, j],
                        "degrees": [
                            [list(d) for d in A.loop.support()],
                            [list(d) for d in B.loop.support()],
                        ],
                    }
                )
    # diagram conditions: the map restricted to the centre is phi, and the
    # loop part passes through unchanged; both hold by construction of the
    # section, which the bracket comparison above already exercises.
    return {
        "passed": not failures,
        "window": P.window,
        "vdim": P.vdim,
        "pairs": checked,
        "failures": failures,
        "phi_on_basis": [[str(x) for x in row] for row in phi.on_basis()],
    }
