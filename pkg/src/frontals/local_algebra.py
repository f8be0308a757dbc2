"""Multiplicity of an equidimensional germ via jet-truncated ideal linear algebra.

dim Q(f) = dim E_n / (f_1, ..., f_n) is approximated at each jet order k by
the codimension of span{ jet_k(m * f_i) : deg(m) <= k } inside the space of
polynomials of degree <= k (the constant monomial included, so the class of 1
is counted).  For a finite germ the codimensions stabilize; the first value
attained at two consecutive orders is reported.  Stabilization by a finite
cap is a certificate of finiteness in the heuristic sense only, and the
result says so rather than overclaiming.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import SparseSolver
from .maps import PolyMap
from .poly import PolyError, monomials_up_to


@dataclass(frozen=True)
class MultiplicityResult:
    """Dimension of the local algebra, or evidence that it did not stabilize."""

    value: int | None            # None <=> not stabilized by the cap
    jet_order: int               # order where stabilization was seen, else the cap
    dimension_sequence: tuple[int, ...]  # codimension at orders 0..jet_order

    @property
    def stabilized(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        seq = ", ".join(str(d) for d in self.dimension_sequence)
        if self.stabilized:
            return f"multiplicity {self.value} (stabilized at jet order {self.jet_order}; sequence {seq})"
        return f"not stabilized at jet order {self.jet_order} (sequence {seq})"


def _codimension_at_order(f: PolyMap, k: int) -> int:
    vs = f.source_vars
    monos = monomials_up_to(vs, k)
    index = {m: i for i, m in enumerate(monos)}
    solver = SparseSolver()
    for comp in f.components:
        comp_k = comp.jet(k)
        if comp_k.is_zero():
            continue
        for m in monos:
            row: dict = {}
            for term, coeff in comp_k.terms.items():
                shifted = tuple(a + b for a, b in zip(m, term))
                if sum(shifted) <= k:
                    row[index[shifted]] = row.get(index[shifted], 0) + coeff
            if row:
                solver.add_row(row)
    return len(monos) - solver.rank


def multiplicity(f: PolyMap, k_max: int = 12) -> MultiplicityResult:
    """dim_R Q(f) via stabilized jet codimensions (window of two equal orders)."""
    if not f.is_equidimensional:
        raise PolyError("multiplicity is defined here for equidimensional germs only")
    if not f.is_origin_preserving:
        raise PolyError("multiplicity needs an origin-preserving germ")
    sequence: list[int] = []
    for k in range(k_max + 1):
        d = _codimension_at_order(f, k)
        sequence.append(d)
        if k >= 1 and sequence[k] == sequence[k - 1]:
            return MultiplicityResult(value=d, jet_order=k,
                                      dimension_sequence=tuple(sequence))
    return MultiplicityResult(value=None, jet_order=k_max,
                              dimension_sequence=tuple(sequence))


def is_finite_up_to(f: PolyMap, k_max: int = 12) -> bool:
    """True iff the multiplicity stabilizes by k_max (heuristic certificate)."""
    return multiplicity(f, k_max).stabilized
