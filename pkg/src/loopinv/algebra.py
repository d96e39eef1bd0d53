"""Free graded-commutative algebras over Q on finitely many generators.

A monomial is a tuple of exponents aligned with the algebra's generator
order (declaration order is canonical order).  Odd-degree generators are
exterior: their exponents never exceed one and their squares vanish.
Reordering a product into canonical order accumulates the Koszul sign,
one factor of -1 for every transposition of two odd generators, and that
single rule is the source of truth for every sign in the package:
derivations and algebra maps are extended from generator values through
ordinary polynomial multiplication.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Optional, Union

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]


class Generator(NamedTuple):
    name: str
    degree: int


class WrongDegreeShiftError(ValueError):
    """check_differential got a derivation whose shift is not +1."""

    category = "WrongDegreeShift"


class GradedAlgebra:
    """Lambda(g_1, ..., g_l): polynomial on even generators tensor
    exterior on odd generators."""

    __slots__ = ("generators", "_index", "_degrees", "_odd", "_basis_cache")

    def __init__(self, generators: Iterable):
        gens = []
        for g in generators:
            name, degree = g
            if not isinstance(name, str) or not name:
                raise ValueError(f"generator name must be a nonempty string, got {name!r}")
            if degree < 1:
                raise ValueError(f"generator {name} has degree {degree}; degrees must be >= 1")
            gens.append(Generator(name, int(degree)))
        self.generators = tuple(gens)
        self._index = {g.name: i for i, g in enumerate(self.generators)}
        if len(self._index) != len(self.generators):
            raise ValueError("generator names must be unique")
        self._degrees = tuple(g.degree for g in self.generators)
        self._odd = tuple(g.degree % 2 == 1 for g in self.generators)
        self._basis_cache: dict[int, tuple[Monomial, ...]] = {}

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedAlgebra) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self) -> str:
        inner = ", ".join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"GradedAlgebra({inner})"

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def degree_of(self, name: str) -> int:
        return self._degrees[self.index(name)]

    def monomial_degree(self, mono: Monomial) -> int:
        return sum(e * d for e, d in zip(mono, self._degrees))

    @staticmethod
    def word_length(mono: Monomial) -> int:
        return sum(mono)

    def unit_monomial(self) -> Monomial:
        return (0,) * len(self.generators)

    def multiply_monomials(self, m1: Monomial, m2: Monomial) -> Optional[tuple[int, Monomial]]:
        """(koszul sign, product monomial), or None when an odd generator
        repeats and the product is zero."""
        odd = self._odd
        n = len(m1)
        # suffix[j] = number of odd factors of m1 at indices >= j
        suffix = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            suffix[i] = suffix[i + 1] + (1 if odd[i] and m1[i] else 0)
        # Each odd factor of m2 moves left past the odd factors of m1
        # sitting at strictly larger generator indices.
        sign_exp = 0
        for j, b in enumerate(m2):
            if b and odd[j]:
                if m1[j]:
                    return None
                sign_exp += suffix[j + 1]
        prod = tuple(a + b for a, b in zip(m1, m2))
        return (-1 if sign_exp % 2 else 1, prod)

    def monomial_basis(self, degree: int) -> tuple[Monomial, ...]:
        """All monomials of the given total degree, in ascending
        lexicographic order of exponent tuples.  Degree 0 is exactly the
        unit monomial."""
        if degree < 0:
            raise ValueError("degree must be >= 0")
        cached = self._basis_cache.get(degree)
        if cached is not None:
            return cached
        n = len(self.generators)
        out: list[Monomial] = []
        mono = [0] * n

        def rec(i: int, remaining: int) -> None:
            if remaining == 0:
                out.append(tuple(mono))
                return
            if i == n:
                return
            d = self._degrees[i]
            top = min(1, remaining // d) if self._odd[i] else remaining // d
            for e in range(top + 1):
                mono[i] = e
                rec(i + 1, remaining - e * d)
            mono[i] = 0

        rec(0, degree)
        result = tuple(out)
        self._basis_cache[degree] = result
        return result

    def monomial_str(self, mono: Monomial) -> str:
        parts = []
        for g, e in zip(self.generators, mono):
            if e == 1:
                parts.append(g.name)
            elif e > 1:
                parts.append(f"{g.name}^{e}")
        return "*".join(parts) if parts else "1"

    # -- polynomial constructors ------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def unit(self) -> "Polynomial":
        return Polynomial(self, {self.unit_monomial(): Fraction(1)})

    def gen(self, name: str) -> "Polynomial":
        i = self.index(name)
        mono = tuple(1 if j == i else 0 for j in range(len(self.generators)))
        return Polynomial(self, {mono: Fraction(1)})

    def poly(self, terms: Mapping[Monomial, Scalar]) -> "Polynomial":
        return Polynomial(self, dict(terms))


class Polynomial:
    """Finite Q-linear combination of monomials of one algebra.

    ``terms`` maps monomials to nonzero Fractions; treat it as immutable.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: GradedAlgebra, terms: Mapping[Monomial, Scalar]):
        clean: dict[Monomial, Fraction] = {}
        width = len(algebra.generators)
        for mono, coeff in terms.items():
            c = Fraction(coeff)
            if not c:
                continue
            if len(mono) != width:
                raise ValueError(f"monomial {mono} has wrong width for {algebra!r}")
            mono = tuple(mono)
            if any(e > 1 and algebra._odd[i] for i, e in enumerate(mono)):
                continue  # squares of odd generators vanish
            clean[mono] = c
        self.algebra = algebra
        self.terms = clean

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.algebra == other.algebra
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.algebra, frozenset(self.terms.items())))

    def _require_same_algebra(self, other: "Polynomial") -> None:
        if self.algebra != other.algebra:
            raise ValueError("polynomials live in different algebras")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_algebra(other)
        acc = dict(self.terms)
        for mono, c in other.terms.items():
            s = acc.get(mono, 0) + c
            if s:
                acc[mono] = s
            else:
                acc.pop(mono, None)
        return Polynomial(self.algebra, acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_algebra(other)
        acc: dict[Monomial, Fraction] = {}
        mult = self.algebra.multiply_monomials
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                hit = mult(m1, m2)
                if hit is None:
                    continue
                sign, mono = hit
                s = acc.get(mono, 0) + sign * c1 * c2
                if s:
                    acc[mono] = s
                else:
                    acc.pop(mono, None)
        return Polynomial(self.algebra, acc)

    def __rmul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        out = self.algebra.unit()
        for _ in range(exponent):
            out = out * self
        return out

    def scale(self, scalar: Scalar) -> "Polynomial":
        c = Fraction(scalar)
        if not c:
            return self.algebra.zero()
        return Polynomial(self.algebra, {m: c * v for m, v in self.terms.items()})

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def degrees(self) -> set[int]:
        return {self.algebra.monomial_degree(m) for m in self.terms}

    def is_homogeneous_of(self, degree: int) -> bool:
        """True when every term has the given degree (vacuously for 0)."""
        return all(self.algebra.monomial_degree(m) == degree for m in self.terms)

    def min_word_length(self) -> Optional[int]:
        if not self.terms:
            return None
        return min(sum(m) for m in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(
            self.terms.items(), key=lambda kv: (self.algebra.monomial_degree(kv[0]), kv[0])
        )
        chunks = []
        for mono, coeff in items:
            mono_s = self.algebra.monomial_str(mono)
            if mono_s == "1":
                body = str(coeff)
            elif coeff == 1:
                body = mono_s
            elif coeff == -1:
                body = f"-{mono_s}"
            else:
                body = f"{coeff}*{mono_s}"
            chunks.append(body)
        out = chunks[0]
        for chunk in chunks[1:]:
            out += f" - {chunk[1:]}" if chunk.startswith("-") else f" + {chunk}"
        return out

    __repr__ = __str__


class Derivation:
    """Graded derivation with a fixed degree shift, determined by its
    values on generators and extended by the graded Leibniz rule

        D(ab) = D(a) b + (-1)^(shift * deg a) a D(b).

    Every value must be zero or homogeneous of degree(generator) + shift.
    Generators missing from ``values`` map to zero.
    """

    __slots__ = ("algebra", "degree_shift", "_values")

    def __init__(self, algebra: GradedAlgebra, degree_shift: int, values: Mapping[str, Polynomial]):
        self.algebra = algebra
        self.degree_shift = int(degree_shift)
        clean: dict[str, Polynomial] = {}
        for name, poly in values.items():
            target = algebra.degree_of(name) + self.degree_shift
            if poly.algebra != algebra:
                raise ValueError(f"value for {name} lives in a different algebra")
            if not poly.is_homogeneous_of(target):
                raise ValueError(
                    f"value for {name} must be homogeneous of degree {target}, got {poly}"
                )
            if poly:
                clean[name] = poly
        self._values = clean

    def of_generator(self, name: str) -> Polynomial:
        self.algebra.index(name)
        return self._values.get(name, self.algebra.zero())

    def value_names(self) -> tuple[str, ...]:
        return tuple(sorted(self._values))

    def __call__(self, p: Polynomial) -> Polynomial:
        if p.algebra != self.algebra:
            raise ValueError("polynomial lives in a different algebra")
        out = self.algebra.zero()
        for mono, coeff in p.terms.items():
            out = out + self._apply_monomial(mono).scale(coeff)
        return out

    def _apply_monomial(self, mono: Monomial) -> Polynomial:
        alg = self.algebra
        gens = alg.generators
        odd_shift = self.degree_shift % 2 == 1
        result = alg.zero()
        prefix_degree = 0
        for i, e in enumerate(mono):
            if e:
                g = gens[i]
                dg = self._values.get(g.name)
                if dg is not None:
                    sign = -1 if odd_shift and prefix_degree % 2 else 1
                    mult = e if g.degree % 2 == 0 else 1
                    left = tuple(
                        (mono[j] if j < i else e - 1 if j == i else 0) for j in range(len(mono))
                    )
                    right = tuple((mono[j] if j > i else 0) for j in range(len(mono)))
                    term = alg.poly({left: sign * mult}) * dg * alg.poly({right: 1})
                    result = result + term
                prefix_degree += e * g.degree
        return result


class AlgebraMap:
    """Degree-preserving algebra endomorphism, determined by generator
    values and extended multiplicatively.  Generators missing from
    ``values`` are fixed."""

    __slots__ = ("algebra", "_values")

    def __init__(self, algebra: GradedAlgebra, values: Mapping[str, Polynomial]):
        self.algebra = algebra
        clean: dict[str, Polynomial] = {}
        for name, poly in values.items():
            target = algebra.degree_of(name)
            if poly.algebra != algebra:
                raise ValueError(f"value for {name} lives in a different algebra")
            if not poly.is_homogeneous_of(target):
                raise ValueError(
                    f"value for {name} must be homogeneous of degree {target}, got {poly}"
                )
            clean[name] = poly
        self._values = clean

    def of_generator(self, name: str) -> Polynomial:
        self.algebra.index(name)
        value = self._values.get(name)
        return value if value is not None else self.algebra.gen(name)

    def __call__(self, p: Polynomial) -> Polynomial:
        if p.algebra != self.algebra:
            raise ValueError("polynomial lives in a different algebra")
        alg = self.algebra
        out = alg.zero()
        for mono, coeff in p.terms.items():
            term = alg.unit()
            for i, e in enumerate(mono):
                if e:
                    img = self.of_generator(alg.generators[i].name)
                    for _ in range(e):
                        term = term * img
                    if not term:
                        break
            out = out + term.scale(coeff)
        return out


class DifferentialViolation(NamedTuple):
    generator: str
    residual: Polynomial

    def __str__(self) -> str:
        return f"d^2({self.generator}) = {self.residual} != 0"


def check_differential(d: Derivation, max_degree: int) -> Optional[DifferentialViolation]:
    """Verify d(d(g)) == 0 for every generator g with degree(g) + 2 <=
    max_degree; returns the first violation in generator order, or None.

    Since d∘d is itself a derivation, vanishing on generators is
    equivalent to vanishing everywhere.
    """
    if d.degree_shift != 1:
        raise WrongDegreeShiftError(
            f"differential must have degree shift +1, got {d.degree_shift}"
        )
    alg = d.algebra
    for g in alg.generators:
        if g.degree + 2 <= max_degree:
            residual = d(d.of_generator(g.name))
            if residual:
                return DifferentialViolation(g.name, residual)
    return None
