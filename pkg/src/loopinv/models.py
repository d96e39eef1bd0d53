"""Minimal models, their free-loop and circle-equivariant Borel models.

The model DSL is line oriented (``#`` starts a comment):

    gen <name> <degree>          declare a generator; declaration order
                                 is the canonical monomial order
    d <name> = <poly>            differential value; generators without a
                                 d line have differential zero

with <poly> ::= 0 | term (('+'|'-') term)* and
term ::= [rational '*'] factor ('*' factor)*, factor ::= name ['^' posint],
rational ::= int ['/' posint].

From a minimal model (all generator degrees >= 2, square-zero decomposable
differential d) this module builds

* the free loop model on generators {v} u {v_bar}, deg v_bar = deg v - 1,
  with differential delta(v) = d(v), delta(v_bar) = -s(d(v)), where s is
  the degree -1 derivation sending v to v_bar and v_bar to 0;
* the Borel model, which adds a degree 2 polynomial generator and uses
  D = delta + alpha * s, together with the loop-reversal involution
  T(alpha) = -alpha, T(v) = v, T(v_bar) = -v_bar.

Both constructions are gated: a model is only returned after the square-
zero check and (for the Borel model) the involution compatibility checks
pass on every generator, so a sign-convention mismatch surfaces as a hard
error instead of a wrong table.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import (
    AlgebraMap,
    Derivation,
    GradedAlgebra,
    Polynomial,
    check_differential,
)


class ModelError(Exception):
    category = "ModelError"


class ModelSyntaxError(ModelError):
    category = "SyntaxError"

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class DegreeMismatchError(ModelError):
    category = "DegreeMismatch"


class NotSquareZeroError(ModelError):
    category = "NotSquareZero"


class SimpleConnectivityError(ModelError):
    category = "SimpleConnectivity"


class BorelSquareZeroError(ModelError):
    category = "BorelSquareZeroFailure"


class InvolutionIncompatibleError(ModelError):
    category = "InvolutionIncompatible"


class NotMinimalWarning(UserWarning):
    category = "NotMinimal"


@dataclass(frozen=True)
class MinimalModel:
    """Free graded-commutative algebra on generators of degree >= 2 with a
    degree +1 square-zero differential.

    A differential with a linear term (a word-length-1 monomial) is
    accepted with a NotMinimalWarning; generator degrees below 2 are
    rejected outright.
    """

    algebra: GradedAlgebra
    differential: Derivation

    def __post_init__(self):
        for g in self.algebra.generators:
            if g.degree < 2:
                raise SimpleConnectivityError(
                    f"generator {g.name} has degree {g.degree}; "
                    "a simply-connected model needs all degrees >= 2"
                )
        if self.differential.algebra != self.algebra:
            raise ValueError("differential belongs to a different algebra")
        top = max((g.degree for g in self.algebra.generators), default=0)
        violation = check_differential(self.differential, top + 2)
        if violation is not None:
            raise NotSquareZeroError(str(violation))
        for g in self.algebra.generators:
            value = self.differential.of_generator(g.name)
            wl = value.min_word_length()
            if wl is not None and wl < 2:
                warnings.warn(
                    NotMinimalWarning(
                        f"d({g.name}) = {value} has a linear term; "
                        "the model is valid but not minimal"
                    ),
                    stacklevel=3,
                )

    @classmethod
    def empty(cls) -> "MinimalModel":
        alg = GradedAlgebra(())
        return cls(alg, Derivation(alg, 1, {}))

    def generator_names(self) -> tuple[str, ...]:
        return self.algebra.names


@dataclass(frozen=True)
class DgaModel:
    """Free graded-commutative algebra with a square-zero degree +1
    differential and, optionally, an involution commuting with it."""

    algebra: GradedAlgebra
    differential: Derivation
    involution: Optional[AlgebraMap] = None

    def __post_init__(self):
        if self.differential.algebra != self.algebra:
            raise ValueError("differential belongs to a different algebra")
        top = max((g.degree for g in self.algebra.generators), default=0)
        violation = check_differential(self.differential, top + 2)
        if violation is not None:
            raise NotSquareZeroError(str(violation))
        t = self.involution
        if t is not None:
            if t.algebra != self.algebra:
                raise ValueError("involution belongs to a different algebra")
            d = self.differential
            for g in self.algebra.generators:
                gen = self.algebra.gen(g.name)
                if t(t(gen)) != gen:
                    raise InvolutionIncompatibleError(
                        f"involution squared is not the identity on {g.name}"
                    )
                if t(d(gen)) != d(t(gen)):
                    raise InvolutionIncompatibleError(
                        f"involution does not commute with the differential on {g.name}"
                    )


# ---------------------------------------------------------------------
# model DSL parser


_NAME_RE = r"[A-Za-z_][A-Za-z0-9_]*"
_TOKEN_RE = re.compile(
    rf"(?P<ws>\s+)|(?P<name>{_NAME_RE})|(?P<int>\d+)|(?P<op>[\^*/+\-=])|(?P<bad>.)"
)


def _tokenize(body: str, line_no: int) -> list[tuple[str, str, int]]:
    tokens = []
    for m in _TOKEN_RE.finditer(body):
        kind = m.lastgroup
        if kind == "ws":
            continue
        if kind == "bad":
            raise ModelSyntaxError(f"unexpected character {m.group()!r}", line_no, m.start() + 1)
        tokens.append((kind, m.group(), m.start() + 1))
    return tokens


class _PolyParser:
    def __init__(self, algebra: GradedAlgebra, tokens, line_no: int):
        self.algebra = algebra
        self.tokens = tokens
        self.line = line_no
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok is None:
            raise ModelSyntaxError("unexpected end of line", self.line, 0)
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ModelSyntaxError(f"unexpected token {tok[1]!r}", self.line, tok[2])
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        result = self.algebra.zero()
        sign = 1
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] in "+-":
            sign = -1 if tok[1] == "-" else 1
            self.pos += 1
        while True:
            result = result + self.parse_term().scale(sign)
            tok = self.peek()
            if tok is None:
                return result
            if tok[0] == "op" and tok[1] in "+-":
                sign = -1 if tok[1] == "-" else 1
                self.pos += 1
                continue
            raise ModelSyntaxError(f"unexpected token {tok[1]!r}", self.line, tok[2])

    def parse_term(self) -> Polynomial:
        coeff = Fraction(1)
        saw_coeff = False
        tok = self.peek()
        # signed integer coefficient, e.g. "-3*a"
        if (
            tok is not None
            and tok[0] == "op"
            and tok[1] in "+-"
            and self.pos + 1 < len(self.tokens)
            and self.tokens[self.pos + 1][0] == "int"
        ):
            if tok[1] == "-":
                coeff = -coeff
            self.pos += 1
            tok = self.peek()
        if tok is not None and tok[0] == "int":
            saw_coeff = True
            num = int(self.take("int")[1])
            den = 1
            nxt = self.peek()
            if nxt and nxt[0] == "op" and nxt[1] == "/":
                self.pos += 1
                den_tok = self.take("int")
                den = int(den_tok[1])
                if den == 0:
                    raise ModelSyntaxError("zero denominator", self.line, den_tok[2])
            coeff *= Fraction(num, den)
            nxt = self.peek()
            if nxt and nxt[0] == "op" and nxt[1] == "*":
                self.pos += 1
            else:
                # bare rational term; only 0 survives degree checks later
                return self.algebra.unit().scale(coeff)
        poly = self.algebra.unit().scale(coeff)
        poly = poly * self.parse_factor()
        while True:
            nxt = self.peek()
            if nxt and nxt[0] == "op" and nxt[1] == "*":
                self.pos += 1
                poly = poly * self.parse_factor()
            else:
                if nxt and nxt[0] in ("name", "int") and not saw_coeff:
                    raise ModelSyntaxError(
                        f"missing '*' before {nxt[1]!r}", self.line, nxt[2]
                    )
                return poly

    def parse_factor(self) -> Polynomial:
        tok = self.take("name")
        try:
            base = self.algebra.gen(tok[1])
        except KeyError:
            raise ModelSyntaxError(f"unknown generator {tok[1]!r}", self.line, tok[2]) from None
        nxt = self.peek()
        if nxt and nxt[0] == "op" and nxt[1] == "^":
            self.pos += 1
            exp_tok = self.take("int")
            exp = int(exp_tok[1])
            if exp < 1:
                raise ModelSyntaxError("exponent must be >= 1", self.line, exp_tok[2])
            return base**exp
        return base


def parse_model(text: str) -> MinimalModel:
    """Parse the model DSL into a validated MinimalModel."""
    gen_specs: list[tuple[str, int]] = []
    seen: dict[str, int] = {}
    d_lines: list[tuple[int, str, int, list]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = _tokenize(body, line_no)
        if not tokens:
            continue
        kind, value, col = tokens[0]
        if kind == "name" and value == "gen":
            if len(tokens) != 3 or tokens[1][0] != "name" or tokens[2][0] != "int":
                raise ModelSyntaxError("expected: gen <name> <degree>", line_no, col)
            name, degree = tokens[1][1], int(tokens[2][1])
            if name in seen:
                raise ModelSyntaxError(
                    f"generator {name!r} already declared on line {seen[name]}",
                    line_no,
                    tokens[1][2],
                )
            if degree < 2:
                raise SimpleConnectivityError(
                    f"line {line_no}: generator {name} has degree {degree}; "
                    "a simply-connected model needs all degrees >= 2"
                )
            seen[name] = line_no
            gen_specs.append((name, degree))
        elif kind == "name" and value == "d":
            if len(tokens) < 4 or tokens[1][0] != "name" or tokens[2][1] != "=":
                raise ModelSyntaxError("expected: d <name> = <poly>", line_no, col)
            d_lines.append((line_no, tokens[1][1], tokens[1][2], tokens[3:]))
        else:
            raise ModelSyntaxError(
                f"expected 'gen' or 'd', got {value!r}", line_no, col
            )
    algebra = GradedAlgebra(gen_specs)
    diff_values: dict[str, Polynomial] = {}
    diff_lines: dict[str, int] = {}
    for line_no, name, name_col, tokens in d_lines:
        if name not in seen:
            raise ModelSyntaxError(f"unknown generator {name!r}", line_no, name_col)
        if name in diff_values:
            raise ModelSyntaxError(
                f"d {name} already given on line {diff_lines[name]}", line_no, 1
            )
        poly = _PolyParser(algebra, tokens, line_no).parse()
        target = algebra.degree_of(name) + 1
        if not poly.is_homogeneous_of(target):
            raise DegreeMismatchError(
                f"line {line_no}: d({name}) = {poly} is not homogeneous of degree "
                f"{target} (= degree({name}) + 1); term degrees are "
                f"{sorted(poly.degrees())}"
            )
        diff_values[name] = poly
        diff_lines[name] = line_no
    differential = Derivation(algebra, 1, diff_values)
    return MinimalModel(algebra, differential)


# ---------------------------------------------------------------------
# loop, Borel and point models


def _fresh_name(base: str, taken: set[str]) -> str:
    name = base
    while name in taken:
        name += "_"
    return name


def _barred_names(model: MinimalModel) -> dict[str, str]:
    taken = set(model.algebra.names)
    bars: dict[str, str] = {}
    for g in model.algebra.generators:
        bar = _fresh_name(g.name + "_bar", taken | set(bars.values()))
        bars[g.name] = bar
    return bars


def _transport(poly: Polynomial, target: GradedAlgebra) -> Polynomial:
    """Rebuild a polynomial in a larger algebra, matching generators by
    name.  The relative order of shared generators must be preserved so
    no Koszul sign can arise; this holds for the loop and Borel algebras
    built here."""
    src = poly.algebra
    idx = [target.index(g.name) for g in src.generators]
    width = len(target.generators)
    terms = {}
    for mono, coeff in poly.terms.items():
        new = [0] * width
        for i, e in enumerate(mono):
            new[idx[i]] = e
        terms[tuple(new)] = coeff
    return Polynomial(target, terms)


def loop_model(model: MinimalModel) -> DgaModel:
    """Free loop model: generators {v} u {v_bar} with deg v_bar =
    deg v - 1, differential delta(v) = d(v), delta(v_bar) = -s(d(v))."""
    bars = _barred_names(model)
    gens = []
    for g in model.algebra.generators:
        gens.append((g.name, g.degree))
        gens.append((bars[g.name], g.degree - 1))
    algebra = GradedAlgebra(gens)
    suspension = Derivation(
        algebra, -1, {g.name: algebra.gen(bars[g.name]) for g in model.algebra.generators}
    )
    values: dict[str, Polynomial] = {}
    for g in model.algebra.generators:
        dv = _transport(model.differential.of_generator(g.name), algebra)
        values[g.name] = dv
        values[bars[g.name]] = -suspension(dv)
    delta = Derivation(algebra, 1, values)
    return DgaModel(algebra, delta, None)


def borel_model(model: MinimalModel, cap: int = 2) -> DgaModel:
    """Circle-equivariant Borel model with its loop-reversal involution.

    Generators are {alpha} u {v} u {v_bar} with deg alpha = 2, and
    D = delta + alpha * s.  The square-zero check runs on every generator
    (at least up to `cap`) and the involution is verified to be a
    differential-compatible involution; any failure raises instead of
    returning a corrupt model.
    """
    if cap < 2:
        raise ValueError("cap must be >= 2")
    bars = _barred_names(model)
    alpha = _fresh_name("alpha", set(model.algebra.names) | set(bars.values()))
    gens: list[tuple[str, int]] = [(alpha, 2)]
    for g in model.algebra.generators:
        gens.append((g.name, g.degree))
        gens.append((bars[g.name], g.degree - 1))
    algebra = GradedAlgebra(gens)
    alpha_poly = algebra.gen(alpha)
    suspension = Derivation(
        algebra, -1, {g.name: algebra.gen(bars[g.name]) for g in model.algebra.generators}
    )
    values: dict[str, Polynomial] = {alpha: algebra.zero()}
    for g in model.algebra.generators:
        dv = _transport(model.differential.of_generator(g.name), algebra)
        values[g.name] = dv + alpha_poly * suspension(algebra.gen(g.name))
        values[bars[g.name]] = -suspension(dv)
    differential = Derivation(algebra, 1, values)
    violation = check_differential(differential, max(cap, max(d for _, d in gens) + 2))
    if violation is not None:
        raise BorelSquareZeroError(
            f"Borel differential does not square to zero: {violation}"
        )
    t_values = {alpha: -alpha_poly}
    for g in model.algebra.generators:
        t_values[g.name] = algebra.gen(g.name)
        t_values[bars[g.name]] = -algebra.gen(bars[g.name])
    involution = AlgebraMap(algebra, t_values)
    return DgaModel(algebra, differential, involution)


def point_borel_model() -> DgaModel:
    """Borel model of the one-point space: Lambda(alpha), zero
    differential, involution alpha -> -alpha."""
    return borel_model(MinimalModel.empty())


def base_dga(model: MinimalModel) -> DgaModel:
    """The minimal model itself, viewed as a DgaModel (no involution)."""
    return DgaModel(model.algebra, model.differential, None)
