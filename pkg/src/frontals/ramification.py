"""Jet-level membership tests with re-checkable witness certificates.

Two module membership questions, both answered modulo m^(k+1) by exact
linear algebra over the rationals:

* gradient module: does d(psi) lie in the module generated by the df_i over
  function-germ coefficients?  Unknowns are coefficient polynomials a_i of
  degree <= k; the jet-k coefficients of d(psi) - sum a_i df_i must vanish
  componentwise.

* Jacobian-squared plus pullback: is psi = mu * det(Jf)^2 + eta o f modulo
  m^(k+1), with mu a source polynomial and eta a polynomial in n target
  variables, both of degree <= k?

A feasible system yields MEMBER with explicit witnesses, re-checked by
substitution before the verdict is returned; an infeasible system is a proof
of non-membership at that jet order (membership in the smooth category would
make every finite jet feasible), reported as NOT-MEMBER-MOD-JET.  The degree
bound on the unknowns equals the jet order, which makes jet feasibility
exactly equivalent to solvability of the finite system.  MEMBER verdicts are
always "modulo m^(k+1)": a finite-jet tool proves nothing about flat
directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .linalg import SparseSolver
from .maps import PolyMap, differential, jacobian_det
from .poly import Exponents, Poly, PolyError, VariableMismatchError, monomials_up_to

MEMBER = "MEMBER"
NOT_MEMBER_MOD_JET = "NOT-MEMBER-MOD-JET"
UNDECIDED = "UNDECIDED"

DEFAULT_UNKNOWN_CAP = 20000


@dataclass(frozen=True)
class GradientCertificate:
    """Witnesses a_1..a_n with jet_k(d(psi) - sum a_i df_i) = 0 componentwise."""

    kind = "gradient-module"
    jet_order: int
    psi: Poly
    germ: PolyMap
    witnesses: tuple[Poly, ...]

    def residuals(self) -> tuple[Poly, ...]:
        dpsi = differential(self.psi)
        out = []
        for j, v in enumerate(self.germ.source_vars):
            acc = dpsi[j]
            for a, comp in zip(self.witnesses, self.germ.components):
                acc = acc - a * comp.diff(v)
            out.append(acc.jet(self.jet_order))
        return tuple(out)

    def recheck(self) -> bool:
        return all(r.is_zero() for r in self.residuals())


@dataclass(frozen=True)
class PullbackCertificate:
    """Witnesses mu, eta with jet_k(psi - mu*det(Jf)^2 - eta o f) = 0."""

    kind = "jsq-plus-pullback"
    jet_order: int
    psi: Poly
    germ: PolyMap
    mu: Poly
    eta: Poly  # in the target variables

    def residual(self) -> Poly:
        jsq = jacobian_det(self.germ) ** 2
        pulled = self.eta.substitute(list(self.germ.components))
        return (self.psi - self.mu * jsq - pulled).jet(self.jet_order)

    def recheck(self) -> bool:
        return self.residual().is_zero()


Certificate = Union[GradientCertificate, PullbackCertificate]


@dataclass(frozen=True)
class MembershipVerdict:
    status: str  # MEMBER | NOT-MEMBER-MOD-JET | UNDECIDED
    jet_order: int
    certificate: Certificate | None = None
    reason: str | None = None

    @property
    def is_member(self) -> bool:
        return self.status == MEMBER

    def __str__(self) -> str:
        if self.status == MEMBER:
            return f"MEMBER (modulo m^{self.jet_order + 1})"
        if self.status == NOT_MEMBER_MOD_JET:
            return f"NOT-MEMBER-MOD-JET({self.jet_order})"
        return f"UNDECIDED ({self.reason})"


def _check_arity(psi: Poly, f: PolyMap) -> None:
    if psi.vars != f.source_vars:
        raise VariableMismatchError(
            f"psi uses variables {psi.vars}, germ uses {f.source_vars}")
    if not f.is_equidimensional:
        raise PolyError("membership tests are defined for equidimensional germs")


def _target_vars(source_vars: tuple[str, ...]) -> tuple[str, ...]:
    upper = tuple(v.upper() for v in source_vars)
    if len(set(upper)) == len(upper):
        return upper
    return tuple(f"X{i + 1}" for i in range(len(source_vars)))


def gradient_module_membership(
    psi: Poly, f: PolyMap, k: int,
    unknown_cap: int = DEFAULT_UNKNOWN_CAP,
) -> MembershipVerdict:
    """Decide d(psi) in <df_1, ..., df_n> at jet order k."""
    _check_arity(psi, f)
    n = f.source_dim
    vs = f.source_vars
    monos = monomials_up_to(vs, k)
    unknown_count = n * len(monos)
    if unknown_count > unknown_cap:
        return MembershipVerdict(
            status=UNDECIDED, jet_order=k,
            reason=f"{unknown_count} unknowns exceed the cap {unknown_cap}")

    col_of = {(i, m): i * len(monos) + t for i in range(n) for t, m in enumerate(monos)}
    dpsi = [psi.diff(v).jet(k) for v in vs]
    dcomp = [[comp.diff(v).jet(k) for v in vs] for comp in f.components]

    # rows keyed by (component j, monomial): coefficient of each unknown there
    rows: dict[tuple[int, Exponents], dict[int, Fraction]] = {}
    for i in range(n):
        for t, m in enumerate(monos):
            col = col_of[(i, m)]
            for j in range(n):
                for term, coeff in dcomp[i][j].terms.items():
                    shifted = tuple(a + b for a, b in zip(m, term))
                    if sum(shifted) <= k:
                        row = rows.setdefault((j, shifted), {})
                        row[col] = row.get(col, Fraction(0)) + coeff

    solver = SparseSolver()
    for j in range(n):
        for m in monos:
            rhs = dpsi[j].coefficient(m)
            row = rows.get((j, m), {})
            solver.add_row(row, rhs)
            if solver.inconsistent:
                return MembershipVerdict(status=NOT_MEMBER_MOD_JET, jet_order=k)

    values = solver.solve()
    witnesses = []
    for i in range(n):
        terms = {}
        for t, m in enumerate(monos):
            v = values.get(col_of[(i, m)])
            if v is not None:
                terms[m] = v
        witnesses.append(Poly(vs, terms))
    cert = GradientCertificate(jet_order=k, psi=psi, germ=f, witnesses=tuple(witnesses))
    if not cert.recheck():
        raise AssertionError("solver produced a witness that fails its recheck")
    return MembershipVerdict(status=MEMBER, jet_order=k, certificate=cert)


def jsq_plus_pullback_membership(
    psi: Poly, f: PolyMap, k: int,
    unknown_cap: int = DEFAULT_UNKNOWN_CAP,
) -> MembershipVerdict:
    """Decide psi in <det(Jf)^2>_{E_n} + f^*(E_n) at jet order k."""
    _check_arity(psi, f)
    n = f.source_dim
    vs = f.source_vars
    tvs = _target_vars(vs)
    monos = monomials_up_to(vs, k)
    target_monos = monomials_up_to(tvs, k)
    unknown_count = len(monos) + len(target_monos)
    if unknown_count > unknown_cap:
        return MembershipVerdict(
            status=UNDECIDED, jet_order=k,
            reason=f"{unknown_count} unknowns exceed the cap {unknown_cap}")

    jsq = (jacobian_det(f) ** 2).jet(k)

    # cached jet-k powers of the components, truncated at every step
    comp_powers: list[dict[int, Poly]] = [
        {0: Poly.const(vs, 1), 1: comp.jet(k)} for comp in f.components
    ]

    def component_power(i: int, e: int) -> Poly:
        cache = comp_powers[i]
        if e not in cache:
            cache[e] = (component_power(i, e - 1) * cache[1]).jet(k)
        return cache[e]

    def pullback_monomial(alpha: Exponents) -> Poly:
        acc = Poly.const(vs, 1)
        for i, e in enumerate(alpha):
            if e:
                acc = (acc * component_power(i, e)).jet(k)
        return acc

    rows: dict[Exponents, dict[int, Fraction]] = {}

    def add_contribution(col: int, contribution: Poly) -> None:
        for term, coeff in contribution.terms.items():
            row = rows.setdefault(term, {})
            row[col] = row.get(col, Fraction(0)) + coeff

    mono_poly_cache = {m: Poly(vs, {m: Fraction(1)}) for m in monos}
    for t, m in enumerate(monos):
        add_contribution(t, (mono_poly_cache[m] * jsq).jet(k))
    offset = len(monos)
    for t, alpha in enumerate(target_monos):
        add_contribution(offset + t, pullback_monomial(alpha))

    psi_k = psi.jet(k)
    solver = SparseSolver()
    for m in monos:
        solver.add_row(rows.get(m, {}), psi_k.coefficient(m))
        if solver.inconsistent:
            return MembershipVerdict(status=NOT_MEMBER_MOD_JET, jet_order=k)

    values = solver.solve()
    mu_terms = {m: values[t] for t, m in enumerate(monos) if t in values}
    eta_terms = {
        alpha: values[offset + t]
        for t, alpha in enumerate(target_monos)
        if offset + t in values
    }
    cert = PullbackCertificate(
        jet_order=k, psi=psi, germ=f,
        mu=Poly(vs, mu_terms), eta=Poly(tvs, eta_terms),
    )
    if not cert.recheck():
        raise AssertionError("solver produced a witness that fails its recheck")
    return MembershipVerdict(status=MEMBER, jet_order=k, certificate=cert)


def verify_identity(lhs: Poly, rhs: Poly) -> bool:
    """Exact equality of canonical forms."""
    return lhs == rhs


@dataclass(frozen=True)
class GeneratorCheck:
    generator: Poly
    gradient: MembershipVerdict
    jsq_plus_pullback: MembershipVerdict

    @property
    def both_member(self) -> bool:
        return self.gradient.is_member and self.jsq_plus_pullback.is_member


@dataclass(frozen=True)
class GeneratorListReport:
    germ: PolyMap
    jet_order: int
    checks: tuple[GeneratorCheck, ...]

    @property
    def all_member(self) -> bool:
        return all(c.both_member for c in self.checks)


def check_generator_list(f: PolyMap, generators: Sequence[Poly], k: int) -> GeneratorListReport:
    """Run both membership tests on each listed generator of the ramification module."""
    checks = tuple(
        GeneratorCheck(
            generator=g,
            gradient=gradient_module_membership(g, f, k),
            jsq_plus_pullback=jsq_plus_pullback_membership(g, f, k),
        )
        for g in generators
    )
    return GeneratorListReport(germ=f, jet_order=k, checks=checks)
