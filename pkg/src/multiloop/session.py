"""Session specs: one JSON document describing an algebra, a twist and windows."""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import lcm

from .cyclotomic import CyclotomicField
from .descent import LoopAlgebra, TwistedLoopAlgebra
from .errors import MismatchError, SpecError, StructureError
from .extension import CentralExtension
from .laurent import LaurentRing
from .liealg import (
    LieAutomorphism,
    build_algebra,
    diagram_automorphism,
    identity_automorphism,
)

VALID_FAMILIES = "ABCDEFG"


@dataclass
class SessionSpec:
    family: str
    rank: int
    autos: list
    orders: tuple
    window: int = 2
    margin: int = 1
    seed: int = 0

    @classmethod
    def from_dict(cls, data: dict) -> "SessionSpec":
        try:
            algebra = data["algebra"]
            family = str(algebra["family"]).upper()
            rank = int(algebra["rank"])
            autos = list(data["autos"])
            orders = tuple(int(m) for m in data["orders"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecError(f"malformed session spec: {exc}") from exc
        spec = cls(
            family=family,
            rank=rank,
            autos=autos,
            orders=orders,
            window=int(data.get("window", 2)),
            margin=int(data.get("margin", 1)),
            seed=int(data.get("seed", 0)),
        )
        spec.validate()
        return spec

    def validate(self):
        if self.family not in VALID_FAMILIES:
            raise SpecError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise SpecError(f"rank must be positive, got {self.rank}")
        if len(self.autos) != len(self.orders):
            raise SpecError(
                f"{len(self.autos)} automorphisms declared for {len(self.orders)} orders"
            )
        if not self.orders:
            raise SpecError("at least one loop variable is required")
        if any(m < 1 for m in self.orders):
            raise SpecError(f"orders must be positive, got {self.orders}")
        if self.window < 1:
            raise SpecError(f"window must be >= 1, got {self.window}")
        if self.margin < 0:
            raise SpecError(f"margin must be >= 0, got {self.margin}")
        for a in self.autos:
            if not isinstance(a, dict):
                raise SpecError(f"automorphism spec must be an object, got {a!r}")
            kind = a.get("kind")
            if kind == "diagram":
                if "perm" not in a:
                    raise SpecError("diagram automorphism spec needs a perm")
            elif kind == "matrix":
                if "entries" not in a or "order" not in a:
                    raise SpecError("matrix automorphism spec needs entries and order")
            elif kind != "identity":
                raise SpecError(f"unknown automorphism kind {kind!r}")

    def to_dict(self) -> dict:
        return {
            "algebra": {"family": self.family, "rank": self.rank},
            "autos": self.autos,
            "orders": list(self.orders),
            "window": self.window,
            "margin": self.margin,
            "seed": self.seed,
        }


def load_spec(path: str) -> SessionSpec:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read spec file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecError(f"spec file {path} is not valid JSON: {exc}") from exc
    return SessionSpec.from_dict(data)


class Session:
    """All built objects for one spec: field, algebra, twist, extension."""

    def __init__(self, spec: SessionSpec):
        self.spec = spec
        conductor = lcm(*spec.orders) if spec.orders else 1
        self.field = CyclotomicField(conductor)
        try:
            self.algebra = build_algebra(spec.family, spec.rank, self.field)
        except StructureError as exc:
            raise SpecError(str(exc)) from exc
        self.sigmas = []
        for a in spec.autos:
            try:
                self.sigmas.append(self._build_auto(a))
            except (StructureError, MismatchError) as exc:
                raise SpecError(f"invalid automorphism spec {a}: {exc}") from exc
        self.ring = LaurentRing(self.field, spec.orders)
        try:
            self.twisted = TwistedLoopAlgebra(
                LoopAlgebra(self.algebra, self.ring), self.sigmas, spec.orders
            )
        except (StructureError, MismatchError) as exc:
            raise SpecError(str(exc)) from exc
        self.ext = CentralExtension(self.twisted)

    def _build_auto(self, data: dict) -> LieAutomorphism:
        kind = data["kind"]
        if kind == "identity":
            return identity_automorphism(self.algebra)
        if kind == "diagram":
            return diagram_automorphism(self.algebra, [int(p) for p in data["perm"]])
        entries = data["entries"]
        dim = self.algebra.dim
        if len(entries) != dim or any(len(r) != dim for r in entries):
            raise SpecError(
                f"matrix automorphism must be {dim}x{dim} for {self.spec.family}{self.spec.rank}"
            )
        parse = self.field.parse
        columns = [
            [
                parse(str(entries[i][j])) if not isinstance(entries[i][j], int)
                else self.field.scalar(entries[i][j])
                for i in range(dim)
            ]
            for j in range(dim)
        ]
        return LieAutomorphism(self.algebra, columns, order=int(data["order"]))

    # -- summaries -----------------------------------------------------------

    def info(self) -> dict:
        from .kaehler import graded_class_dim
        from .laurent import box_degrees
        from .liealg import is_central_simple

        eig = self.twisted.eigen
        eigendims = {
            ",".join(str(c) for c in res): d for res, d in eig.dims().items()
        }
        g0 = [list(v) for v in self.twisted.g0_basis()]
        omega = {}
        for deg in box_degrees(self.ring.n, self.spec.window):
            if self.ring.in_base_lattice(deg):
                omega[",".join(str(c) for c in deg)] = graded_class_dim(self.ring, deg)
        return {
            "dim_g": self.algebra.dim,
            "eigendims": eigendims,
            "g0_dim": len(g0),
            "g0_central_simple": is_central_simple(self.algebra, g0),
            "omega_r_dims": omega,
            "conductor": self.field.conductor,
        }


def build_session(spec: SessionSpec) -> Session:
    return Session(spec)
