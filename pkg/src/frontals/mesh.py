"""OBJ mesh export for surface frontals (n = 2, one multiplier, image in R^3).

The frontal is sampled exactly on an (m+1) x (m+1) rational grid over
[-r, r]^2; only the final decimal rendering is lossy (12 significant digits,
round-half-even), so the byte output is deterministic for fixed inputs.
Vertices are emitted row-major (y rows, x fastest), each grid cell split
into two triangles.
"""

from __future__ import annotations

from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from .frontal import build_frontal
from .maps import PolyMap
from .poly import Poly, PolyError
from .scalars import ExtScalar, Scalar


def decimal12(value: Scalar) -> str:
    """Render an exact rational with 12 significant digits, round-half-even."""
    if isinstance(value, ExtScalar):
        value = value.to_fraction()
    if value == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = 12
        ctx.rounding = ROUND_HALF_EVEN
        d = Decimal(value.numerator) / Decimal(value.denominator)
        d = d.normalize()
    return format(d, "f")


def frontal_surface(germ: PolyMap, multipliers: tuple[Poly, ...]) -> PolyMap:
    if germ.source_dim != 2:
        raise PolyError(f"mesh export needs a 2-variable base germ, got {germ.source_dim}")
    if len(multipliers) != 1:
        raise PolyError(
            f"mesh export needs exactly one multiplier (image in R^3), got {len(multipliers)}")
    F = build_frontal(germ, multipliers)
    if not F.is_rational():
        raise PolyError("mesh export needs rational coefficients")
    return F


def build_obj(F: PolyMap, r: Fraction, m: int) -> str:
    """Sample F on the grid and emit an OBJ string (v and f records only)."""
    if F.source_dim != 2 or F.target_dim != 3:
        raise PolyError(f"OBJ export needs a map R^2 -> R^3, got "
                        f"{F.source_dim} -> {F.target_dim}")
    if r <= 0:
        raise PolyError(f"grid half-width must be positive, got {r}")
    if m < 2:
        raise PolyError(f"grid resolution must be at least 2, got {m}")
    lines: list[str] = []
    step = Fraction(2 * r, m)
    coords = [-r + step * i for i in range(m + 1)]
    for y in coords:
        for x in coords:
            vx, vy, vz = F.eval([x, y])
            lines.append(f"v {decimal12(vx)} {decimal12(vy)} {decimal12(vz)}")
    width = m + 1
    for j in range(m):
        for i in range(m):
            a = j * width + i + 1  # OBJ indices are 1-based
            b = a + 1
            c = a + width + 1
            d = a + width
            lines.append(f"f {a} {b} {c}")
            lines.append(f"f {a} {c} {d}")
    return "\n".join(lines) + "\n"
