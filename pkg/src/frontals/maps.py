"""Polynomial map-germs, Jacobian/adjugate calculus, and composition.

A ``PolyMap`` is a tuple of polynomials sharing one source variable list; it
represents a map-germ based at the origin when every component has zero
constant term.  All determinants are expanded by exact cofactors (source
dimensions here never exceed a handful), and the chain rule, adjugate
identity and composition associativity hold as exact polynomial statements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .poly import Poly, PolyError, VariableMismatchError
from .scalars import ExtField, Scalar, scalar_is_zero

Covector = tuple[Poly, ...]


@dataclass(frozen=True)
class PolyMap:
    """A polynomial map R^n -> R^p given by p components in n shared variables."""

    components: tuple[Poly, ...]

    def __post_init__(self):
        if not self.components:
            raise PolyError("a map needs at least one component")
        vars0 = self.components[0].vars
        for comp in self.components[1:]:
            if comp.vars != vars0:
                raise VariableMismatchError("map components must share one variable list")
        object.__setattr__(self, "components", tuple(self.components))

    @classmethod
    def from_exprs(cls, exprs: Sequence[str], vars: Sequence[str],
                   field: ExtField | None = None) -> "PolyMap":
        from .poly import parse_poly

        return cls(tuple(parse_poly(e, vars, field) for e in exprs))

    @classmethod
    def identity(cls, vars: Sequence[str]) -> "PolyMap":
        vs = tuple(vars)
        return cls(tuple(Poly.variable(vs, v) for v in vs))

    @property
    def source_vars(self) -> tuple[str, ...]:
        return self.components[0].vars

    @property
    def source_dim(self) -> int:
        return len(self.source_vars)

    @property
    def target_dim(self) -> int:
        return len(self.components)

    @property
    def is_equidimensional(self) -> bool:
        return self.source_dim == self.target_dim

    @property
    def is_origin_preserving(self) -> bool:
        return all(scalar_is_zero(c.constant_term()) for c in self.components)

    def eval(self, point: Sequence) -> tuple[Scalar, ...]:
        return tuple(c.eval(point) for c in self.components)

    def demote_rational(self) -> "PolyMap":
        return PolyMap(tuple(c.demote_rational() for c in self.components))

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.components)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"


@dataclass(frozen=True)
class PolyMatrix:
    """Rectangular matrix of polynomials over one shared variable list."""

    rows: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if not rows or not rows[0]:
            raise PolyError("matrix must be non-empty")
        width = len(rows[0])
        vars0 = rows[0][0].vars
        for row in rows:
            if len(row) != width:
                raise PolyError("matrix rows must have equal length")
            for entry in row:
                if entry.vars != vars0:
                    raise VariableMismatchError("matrix entries must share one variable list")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, vars: Sequence[str], n: int) -> "PolyMatrix":
        vs = tuple(vars)
        one = Poly.const(vs, 1)
        zero = Poly.zero(vs)
        return cls(tuple(
            tuple(one if i == j else zero for j in range(n)) for i in range(n)
        ))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def vars(self) -> tuple[str, ...]:
        return self.rows[0][0].vars

    def entry(self, i: int, j: int) -> Poly:
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Poly, ...]:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> "PolyMatrix":
        r, c = self.shape
        return PolyMatrix(tuple(tuple(self.rows[i][j] for i in range(r)) for j in range(c)))

    def matmul(self, other: "PolyMatrix") -> "PolyMatrix":
        r, k = self.shape
        k2, c = other.shape
        if k != k2:
            raise PolyError(f"cannot multiply {self.shape} by {other.shape}")
        zero = Poly.zero(self.vars)
        out = []
        for i in range(r):
            row = []
            for j in range(c):
                acc = zero
                for t in range(k):
                    acc = acc + self.rows[i][t] * other.rows[t][j]
                row.append(acc)
            out.append(tuple(row))
        return PolyMatrix(tuple(out))

    def scale(self, p: Poly) -> "PolyMatrix":
        return PolyMatrix(tuple(tuple(p * e for e in row) for row in self.rows))

    def substitute(self, images: Sequence[Poly]) -> "PolyMatrix":
        return PolyMatrix(tuple(
            tuple(e.substitute(images) for e in row) for row in self.rows
        ))

    def eval(self, point: Sequence) -> list[list[Scalar]]:
        return [[e.eval(point) for e in row] for row in self.rows]

    def det(self) -> Poly:
        r, c = self.shape
        if r != c:
            raise PolyError(f"determinant of a non-square {self.shape} matrix")
        return _det_cofactor(self.rows)

    def adjugate(self) -> "PolyMatrix":
        return adjugate(self)

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.rows)


def _det_cofactor(rows: tuple[tuple[Poly, ...], ...]) -> Poly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    vars0 = rows[0][0].vars
    acc = Poly.zero(vars0)
    for j in range(n):
        entry = rows[0][j]
        if entry.is_zero():
            continue
        minor = tuple(row[:j] + row[j + 1 :] for row in rows[1:])
        cofactor = entry * _det_cofactor(minor)
        acc = acc + cofactor if j % 2 == 0 else acc - cofactor
    return acc


def adjugate(matrix: PolyMatrix) -> PolyMatrix:
    """Adjugate (transposed cofactor matrix): adj(M)*M = M*adj(M) = det(M)*I.

    The 1x1 adjugate is [[1]] (empty-minor convention), which keeps the
    identity det(M)*I = adj(M)*M valid in every dimension.
    """
    r, c = matrix.shape
    if r != c:
        raise PolyError(f"adjugate of a non-square {matrix.shape} matrix")
    if r == 1:
        return PolyMatrix(((Poly.const(matrix.vars, 1),),))
    rows = matrix.rows
    out = [[None] * r for _ in range(r)]
    for i in range(r):
        for j in range(r):
            minor = tuple(
                tuple(row[jj] for jj in range(r) if jj != j)
                for ii, row in enumerate(rows)
                if ii != i
            )
            cof = _det_cofactor(minor)
            out[j][i] = cof if (i + j) % 2 == 0 else -cof  # transposed position
    return PolyMatrix(tuple(tuple(row) for row in out))


def jacobian_matrix(f: PolyMap) -> PolyMatrix:
    """Matrix of partials: entry (i, j) = d f_i / d x_j, shape p x n."""
    vs = f.source_vars
    return PolyMatrix(tuple(
        tuple(comp.diff(v) for v in vs) for comp in f.components
    ))


def jacobian_det(f: PolyMap) -> Poly:
    if not f.is_equidimensional:
        raise PolyError(
            f"Jacobian determinant needs an equidimensional map, got "
            f"{f.source_dim} -> {f.target_dim}")
    return jacobian_matrix(f).det()


def differential(h: Poly) -> Covector:
    """Exterior differential of a function-germ as the row (dh/dx_1, ..., dh/dx_n)."""
    return tuple(h.diff(v) for v in h.vars)


def compose(g: PolyMap, f: PolyMap) -> PolyMap:
    """Exact composition g o f; f's target arity must equal g's source arity."""
    if f.target_dim != g.source_dim:
        raise PolyError(
            f"cannot compose: inner map has target dimension {f.target_dim}, "
            f"outer map expects {g.source_dim}")
    images = list(f.components)
    return PolyMap(tuple(comp.substitute(images) for comp in g.components))


def corank_at_zero(f: PolyMap) -> int:
    """n minus the rank of the differential at the origin."""
    if not f.is_equidimensional:
        raise PolyError("corank is defined here for equidimensional maps only")
    origin = [Fraction(0)] * f.source_dim
    values = jacobian_matrix(f).eval(origin)
    return f.source_dim - linalg.scalar_rank(values)


def linear_part_invertible_at_zero(f: PolyMap) -> bool:
    """True when the differential at 0 is an isomorphism (diffeomorphism-germ witness)."""
    if not f.is_equidimensional:
        return False
    origin = [Fraction(0)] * f.source_dim
    values = jacobian_matrix(f).eval(origin)
    return not scalar_is_zero(linalg.scalar_det(values))
