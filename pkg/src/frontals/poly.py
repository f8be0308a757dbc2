"""Sparse multivariate polynomials over an exact coefficient field.

A ``Poly`` is a fixed, ordered variable list plus a term table mapping
exponent tuples to nonzero coefficients (``Fraction`` or ``ExtScalar``).
Every operation is exact; there is no floating point anywhere.  Terms are
kept canonical (no zero coefficients) and printed in descending
graded-lexicographic order, so canonical printing is deterministic and
``parse(print(p)) == p``.

The accepted expression grammar (ASCII, whitespace insignificant):

    expr     := term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' nat)?
    base     := rational | ident | '(' expr ')'
    rational := int ('/' nat)?

Implicit multiplication is rejected ("2x" is a syntax error; write "2*x").
The sign of a literal lives in the int, so a negative leading term prints
as "-1*x", which re-parses under this grammar.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .scalars import ExtField, ExtScalar, Scalar, scalar_is_zero, scalar_str

Exponents = tuple[int, ...]


class PolyError(ValueError):
    """Base error for polynomial operations."""


class VariableMismatchError(PolyError):
    """Operands do not share a variable list, or an arity is wrong."""


class PolyParseError(PolyError):
    """Syntax or name error while parsing an expression; carries the position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _grlex_descending(monomials: Iterable[Exponents]) -> list[Exponents]:
    return sorted(monomials, key=lambda m: (sum(m), m), reverse=True)


def _coerce_coeff(value: Union[int, Fraction, ExtScalar]) -> Scalar:
    if isinstance(value, ExtScalar):
        return value
    return Fraction(value)


class Poly:
    """Immutable sparse polynomial with exact coefficients."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: dict[Exponents, Scalar]):
        vs = tuple(vars)
        table: dict[Exponents, Scalar] = {}
        for mono, coeff in terms.items():
            if len(mono) != len(vs):
                raise VariableMismatchError(
                    f"exponent tuple {mono} does not match {len(vs)} variables"
                )
            c = _coerce_coeff(coeff)
            if not scalar_is_zero(c):
                table[mono] = c
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", table)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "Poly":
        return cls(vars, {})

    @classmethod
    def const(cls, vars: Sequence[str], value: Union[int, Fraction, ExtScalar]) -> "Poly":
        return cls(vars, {(0,) * len(tuple(vars)): _coerce_coeff(value)})

    @classmethod
    def variable(cls, vars: Sequence[str], name: str) -> "Poly":
        vs = tuple(vars)
        if name not in vs:
            raise VariableMismatchError(f"unknown variable {name!r} (have {vs})")
        mono = tuple(1 if v == name else 0 for v in vs)
        return cls(vs, {mono: Fraction(1)})

    # -- inspection ----------------------------------------------------------

    @property
    def arity(self) -> int:
        return len(self.vars)

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def coefficient(self, mono: Exponents) -> Scalar:
        return self.terms.get(tuple(mono), Fraction(0))

    def degree(self) -> int:
        """Maximal total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def order(self) -> Union[int, float]:
        """Minimal total degree of a term; math.inf for the zero polynomial."""
        if not self.terms:
            return math.inf
        return min(sum(m) for m in self.terms)

    def sorted_terms(self) -> Iterator[tuple[Exponents, Scalar]]:
        for mono in _grlex_descending(self.terms):
            yield mono, self.terms[mono]

    def is_rational(self) -> bool:
        """True when every coefficient lies in Q (extension residues of degree 0 count)."""
        return all(not isinstance(c, ExtScalar) or c.is_rational() for c in self.terms.values())

    def demote_rational(self) -> "Poly":
        """Convert degree-0 extension coefficients back to plain Fractions."""
        out: dict[Exponents, Scalar] = {}
        for mono, coeff in self.terms.items():
            if isinstance(coeff, ExtScalar) and coeff.is_rational():
                out[mono] = coeff.to_fraction()
            else:
                out[mono] = coeff
        return Poly(self.vars, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.vars, frozenset((m, scalar_str(c)) for m, c in self.terms.items())))

    # -- ring operations -----------------------------------------------------

    def _check_same_vars(self, other: "Poly") -> None:
        if self.vars != other.vars:
            raise VariableMismatchError(
                f"mismatched variable lists {self.vars} vs {other.vars}"
            )

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_same_vars(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            s = out.get(mono, 0) + coeff
            if scalar_is_zero(s):
                out.pop(mono, None)
            else:
                out[mono] = s
        return Poly(self.vars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_same_vars(other)
        out: dict[Exponents, Scalar] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = tuple(x + y for x, y in zip(ma, mb))
                s = out.get(mono, 0) + ca * cb
                if scalar_is_zero(s):
                    out.pop(mono, None)
                else:
                    out[mono] = s
        return Poly(self.vars, out)

    def scale(self, value: Union[int, Fraction, ExtScalar]) -> "Poly":
        c = _coerce_coeff(value)
        if scalar_is_zero(c):
            return Poly.zero(self.vars)
        return Poly(self.vars, {m: c * v for m, v in self.terms.items()})

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise PolyError(f"polynomial exponent must be a non-negative integer, got {exponent}")
        result = Poly.const(self.vars, 1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- calculus and composition ---------------------------------------------

    def diff(self, var: str) -> "Poly":
        """Formal partial derivative with respect to one variable."""
        if var not in self.vars:
            raise VariableMismatchError(f"unknown variable {var!r} (have {self.vars})")
        idx = self.vars.index(var)
        out: dict[Exponents, Scalar] = {}
        for mono, coeff in self.terms.items():
            e = mono[idx]
            if e == 0:
                continue
            dm = mono[:idx] + (e - 1,) + mono[idx + 1 :]
            s = out.get(dm, 0) + coeff * e
            if scalar_is_zero(s):
                out.pop(dm, None)
            else:
                out[dm] = s
        return Poly(self.vars, out)

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Exact composition p(images); a ring homomorphism into the images' ring."""
        images = list(images)
        if len(images) != len(self.vars):
            raise VariableMismatchError(
                f"expected {len(self.vars)} images, got {len(images)}"
            )
        if not images:
            raise VariableMismatchError("cannot substitute into a polynomial with no variables")
        target_vars = images[0].vars
        for g in images[1:]:
            if g.vars != target_vars:
                raise VariableMismatchError("images must share one variable list")
        result = Poly.zero(target_vars)
        pow_cache: list[dict[int, Poly]] = [
            {0: Poly.const(target_vars, 1), 1: g} for g in images
        ]

        def image_power(i: int, e: int) -> Poly:
            cache = pow_cache[i]
            if e not in cache:
                half = image_power(i, e // 2)
                sq = half * half
                cache[e] = sq if e % 2 == 0 else sq * images[i]
            return cache[e]

        for mono, coeff in self.terms.items():
            term = Poly.const(target_vars, coeff)
            for i, e in enumerate(mono):
                if e:
                    term = term * image_power(i, e)
            result = result + term
        return result

    def eval(self, point: Sequence[Union[int, Fraction, ExtScalar]]) -> Scalar:
        """Exact evaluation at a point of scalars."""
        values = [_coerce_coeff(v) for v in point]
        if len(values) != len(self.vars):
            raise VariableMismatchError(
                f"expected {len(self.vars)} coordinates, got {len(values)}"
            )
        total: Scalar = Fraction(0)
        for mono, coeff in self.terms.items():
            term: Scalar = coeff
            for v, e in zip(values, mono):
                if e:
                    term = term * v**e
            total = total + term
        return total

    def jet(self, k: int) -> "Poly":
        """Truncate to total degree <= k (the k-jet at the origin)."""
        if k < 0:
            raise PolyError(f"jet order must be >= 0, got {k}")
        return Poly(self.vars, {m: c for m, c in self.terms.items() if sum(m) <= k})

    # -- printing --------------------------------------------------------------

    def _term_str(self, mono: Exponents, coeff: Scalar) -> tuple[bool, str]:
        """Render one term as (is_negative, body); sign handling is the caller's."""
        factors = [
            v if e == 1 else f"{v}^{e}"
            for v, e in zip(self.vars, mono)
            if e > 0
        ]
        if isinstance(coeff, ExtScalar) and not coeff.is_rational():
            nonzero = [q for q in coeff.coeffs if q != 0]
            if len(nonzero) == 1:
                # single power of c: pull its rational sign out
                i = next(i for i, q in enumerate(coeff.coeffs) if q != 0)
                q = coeff.coeffs[i]
                sym = coeff.field.symbol
                cpow = sym if i == 1 else f"{sym}^{i}"
                head = [] if abs(q) == 1 else [str(abs(q))]
                return q < 0, "*".join(head + [cpow] + factors)
            return False, "*".join([f"({coeff})"] + factors)
        q = coeff.to_fraction() if isinstance(coeff, ExtScalar) else coeff
        if not factors:
            return q < 0, str(abs(q))
        if abs(q) == 1:
            return q < 0, "*".join(factors)
        return q < 0, "*".join([str(abs(q))] + factors)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for mono, coeff in self.sorted_terms():
            negative, body = self._term_str(mono, coeff)
            if not pieces:
                # a leading negative must stay inside the grammar: the sign can
                # only live in an int literal, so "-x" becomes "-1*x"
                if negative:
                    pieces.append("-" + body if body[0].isdigit() else "-1*" + body)
                else:
                    pieces.append(body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({self})"


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_OPS = set("+-*^()/")


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind: str, text: str, pos: int):
        self.kind = kind  # "int" | "ident" | "op" | "end"
        self.text = text
        self.pos = pos


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("ident", text[i:j], i))
            i = j
            continue
        if ch in _OPS:
            tokens.append(_Token("op", ch, i))
            i += 1
            continue
        raise PolyParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], vars: tuple[str, ...], field: ExtField | None):
        self.tokens = tokens
        self.i = 0
        self.vars = vars
        self.field = field

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> _Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != op:
            raise PolyParseError(f"expected {op!r}, found {tok.text or 'end of input'!r}", tok.pos)
        return self.advance()

    def parse_expr(self) -> Poly:
        result = self.parse_term()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.advance()
                rhs = self.parse_term()
                result = result + rhs if tok.text == "+" else result - rhs
            else:
                return result

    def parse_term(self) -> Poly:
        result = self.parse_factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.advance()
                result = result * self.parse_factor()
            elif tok.kind == "op" and tok.text == "/":
                raise PolyParseError(
                    "division by a non-constant: '/' is only allowed inside a"
                    " rational literal like 1/2", tok.pos)
            elif tok.kind in ("int", "ident") or (tok.kind == "op" and tok.text == "("):
                raise PolyParseError(
                    f"implicit multiplication is not allowed before {tok.text!r};"
                    " write an explicit '*'", tok.pos)
            else:
                return result

    def parse_factor(self) -> Poly:
        base = self.parse_base()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.advance()
            exp_tok = self.peek()
            if exp_tok.kind != "int":
                raise PolyParseError("exponent must be a non-negative integer", exp_tok.pos)
            self.advance()
            return base ** int(exp_tok.text)
        return base

    def parse_base(self) -> Poly:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            num_tok = self.peek()
            if num_tok.kind != "int":
                raise PolyParseError("expected an integer after '-'", num_tok.pos)
            return self.parse_rational(negative=True)
        if tok.kind == "int":
            return self.parse_rational(negative=False)
        if tok.kind == "ident":
            self.advance()
            name = tok.text
            if self.field is not None and name == self.field.symbol:
                return Poly.const(self.vars, self.field.generator)
            if name not in self.vars:
                raise PolyParseError(f"unknown variable {name!r}", tok.pos)
            return Poly.variable(self.vars, name)
        raise PolyParseError(
            f"expected a number, variable or '(', found {tok.text or 'end of input'!r}",
            tok.pos)

    def parse_rational(self, negative: bool) -> Poly:
        num_tok = self.advance()
        numerator = -int(num_tok.text) if negative else int(num_tok.text)
        tok = self.peek()
        if tok.kind == "op" and tok.text == "/":
            self.advance()
            den_tok = self.peek()
            if den_tok.kind == "ident":
                raise PolyParseError("division by a non-constant", den_tok.pos)
            if den_tok.kind != "int":
                raise PolyParseError("expected an integer denominator", den_tok.pos)
            self.advance()
            denominator = int(den_tok.text)
            if denominator == 0:
                raise PolyParseError("zero denominator in rational literal", den_tok.pos)
            return Poly.const(self.vars, Fraction(numerator, denominator))
        return Poly.const(self.vars, Fraction(numerator))


def parse_poly(text: str, vars: Sequence[str], field: ExtField | None = None) -> Poly:
    """Parse an expression into a canonical Poly over the given variables.

    When ``field`` is an ExtField, its generator symbol (default "c") is
    accepted as a coefficient constant; the symbol must then not collide
    with a variable name.
    """
    vs = tuple(vars)
    if field is not None and field.symbol in vs:
        raise PolyParseError(
            f"variable name {field.symbol!r} collides with the extension generator", 0)
    parser = _Parser(_tokenize(text), vs, field)
    result = parser.parse_expr()
    tail = parser.peek()
    if tail.kind != "end":
        raise PolyParseError(f"unexpected trailing input {tail.text!r}", tail.pos)
    return result


def monomials_up_to(vars: Sequence[str], k: int) -> list[Exponents]:
    """All exponent tuples of total degree <= k, ascending graded-lex order."""
    vs = tuple(vars)
    n = len(vs)
    out: list[Exponents] = []

    def rec(prefix: list[int], remaining: int, pos: int) -> None:
        if pos == n:
            out.append(tuple(prefix))
            return
        for e in range(remaining + 1):
            prefix.append(e)
            rec(prefix, remaining - e, pos + 1)
            prefix.pop()

    rec([], k, 0)
    return sorted(out, key=lambda m: (sum(m), m))
