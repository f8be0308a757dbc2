"""Seeded random generators shared by the property and acceptance tests."""

from __future__ import annotations

import random
from fractions import Fraction

from frontals.maps import PolyMap
from frontals.poly import Poly, monomials_up_to

VARSETS = {1: ("x",), 2: ("x", "y"), 3: ("x", "y", "z")}


def random_poly(rng: random.Random, vars: tuple[str, ...], max_degree: int,
                min_degree: int = 0, max_terms: int = 4) -> Poly:
    monos = [m for m in monomials_up_to(vars, max_degree) if sum(m) >= min_degree]
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        m = rng.choice(monos)
        c = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2, 3]))
        terms[m] = terms.get(m, Fraction(0)) + c
    return Poly(vars, terms)


def random_nonzero_poly(rng: random.Random, vars: tuple[str, ...], max_degree: int,
                        min_degree: int = 0) -> Poly:
    while True:
        p = random_poly(rng, vars, max_degree, min_degree)
        if not p.is_zero():
            return p


def random_origin_germ(rng: random.Random, n: int, max_degree: int) -> PolyMap:
    vars = VARSETS[n]
    return PolyMap(tuple(
        random_poly(rng, vars, max_degree, min_degree=1) for _ in range(n)
    ))


def random_linear_iso(rng: random.Random, n: int) -> PolyMap:
    """Random invertible linear map, by rejection on the exact determinant."""
    from frontals.linalg import scalar_det

    vars = VARSETS[n]
    while True:
        entries = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        if scalar_det(entries) != 0:
            break
    comps = []
    for i in range(n):
        p = Poly.zero(vars)
        for j, v in enumerate(vars):
            p = p + Poly.variable(vars, v).scale(entries[i][j])
        comps.append(p)
    return PolyMap(tuple(comps))
