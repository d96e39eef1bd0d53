"""Truncated Poincare series and closed-form series expressions.

A TruncatedSeries stores integer coefficients for degrees 0..cap-1 and
stores nothing else: every arithmetic operation shrinks the stored range
to whatever remains reliable, so a coefficient you can read is a
coefficient you can trust.  Closed forms are sums of terms c*t^a and
c*t^a/(1-t^b); the module only expands and compares them, it never
infers a closed form from a truncation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional


class SeriesExprError(ValueError):
    """Malformed closed-form series expression."""

    category = "SeriesSyntax"


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    @property
    def cap(self) -> int:
        """Coefficients are known for degrees 0..cap-1."""
        return len(self.coeffs)

    def __getitem__(self, degree: int) -> int:
        if not 0 <= degree < len(self.coeffs):
            raise IndexError(
                f"degree {degree} is outside the reliable range 0..{len(self.coeffs) - 1}"
            )
        return self.coeffs[degree]

    def truncate(self, cap: int) -> "TruncatedSeries":
        if cap < 0:
            raise ValueError("cap must be >= 0")
        return TruncatedSeries(self.coeffs[:cap])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(len(self.coeffs), len(other.coeffs))
        return TruncatedSeries(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n]))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(len(self.coeffs), len(other.coeffs))
        return TruncatedSeries(a - b for a, b in zip(self.coeffs[:n], other.coeffs[:n]))

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by t^k.  k > 0 zero-fills below degree k; k < 0 drops
        the lowest coefficients and shortens the reliable range."""
        if k >= 0:
            return TruncatedSeries((0,) * k + self.coeffs)
        return TruncatedSeries(self.coeffs[-k:])

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"


@dataclass(frozen=True)
class ExprTerm:
    """coeff * t^power, or coeff * t^power / (1 - t^period)."""

    coeff: int
    power: int
    period: Optional[int] = None

    def __post_init__(self):
        if self.power < 0:
            raise SeriesExprError("numerator power must be >= 0")
        if self.period is not None and self.period < 1:
            raise SeriesExprError("denominator period must be >= 1")

    def __str__(self) -> str:
        if self.power == 0:
            head = str(abs(self.coeff)) if abs(self.coeff) != 1 or self.period is None else "1"
        else:
            t = "t" if self.power == 1 else f"t^{self.power}"
            head = t if abs(self.coeff) == 1 else f"{abs(self.coeff)}*{t}"
        if self.period is not None:
            head += f"/(1-t^{self.period})"
        return head


@dataclass(frozen=True)
class RationalExpr:
    terms: tuple[ExprTerm, ...]

    def __init__(self, terms: Iterable[ExprTerm]):
        object.__setattr__(self, "terms", tuple(terms))

    @classmethod
    def zero(cls) -> "RationalExpr":
        return cls(())

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "RationalExpr":
        return cls((ExprTerm(coeff, power, None),))

    @classmethod
    def geometric(cls, power: int, period: int, coeff: int = 1) -> "RationalExpr":
        """coeff * t^power / (1 - t^period)."""
        return cls((ExprTerm(coeff, power, period),))

    def __add__(self, other: "RationalExpr") -> "RationalExpr":
        return RationalExpr(self.terms + other.terms)

    def expand(self, cap: int) -> TruncatedSeries:
        if cap < 1:
            raise ValueError("cap must be >= 1")
        coeffs = [0] * cap
        for term in self.terms:
            if term.period is None:
                if term.power < cap:
                    coeffs[term.power] += term.coeff
            else:
                for n in range(term.power, cap, term.period):
                    coeffs[n] += term.coeff
        return TruncatedSeries(coeffs)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for i, term in enumerate(self.terms):
            if i == 0:
                out = ("-" if term.coeff < 0 else "") + str(term)
            else:
                out += (" - " if term.coeff < 0 else " + ") + str(term)
        return out


_TERM_RE = re.compile(
    r"^(?:(?P<coeff>\d+)\*?)?"
    r"(?:t(?:\^(?P<power>\d+))?)?"
    r"(?:/\(1-t\^(?P<period>\d+)\))?$"
)


def parse_expr(text: str) -> RationalExpr:
    """Parse `c*t^a/(1-t^b)` terms joined by + or -; whitespace ignored."""
    squeezed = re.sub(r"\s+", "", text)
    if not squeezed:
        raise SeriesExprError("empty expression")
    if squeezed == "0":
        return RationalExpr.zero()
    chunks: list[tuple[int, str]] = []
    sign, start, depth = 1, 0, 0
    if squeezed[0] in "+-":
        sign = -1 if squeezed[0] == "-" else 1
        start = 1
    pos = start
    for pos in range(start, len(squeezed)):
        ch = squeezed[pos]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0:
            chunks.append((sign, squeezed[start:pos]))
            sign = -1 if ch == "-" else 1
            start = pos + 1
    chunks.append((sign, squeezed[start:]))
    terms = []
    for sgn, chunk in chunks:
        m = _TERM_RE.match(chunk)
        if not m or not chunk:
            raise SeriesExprError(f"cannot parse series term {chunk!r}")
        coeff_s, power_s, period_s = m.group("coeff"), m.group("power"), m.group("period")
        has_t = "t" in chunk.split("/(", 1)[0]
        if coeff_s is None and not has_t:
            raise SeriesExprError(f"cannot parse series term {chunk!r}")
        coeff = int(coeff_s) if coeff_s is not None else 1
        power = int(power_s) if power_s is not None else (1 if has_t else 0)
        period = int(period_s) if period_s is not None else None
        terms.append(ExprTerm(sgn * coeff, power, period))
    return RationalExpr(terms)


def expand(expr: RationalExpr, cap: int) -> TruncatedSeries:
    return expr.expand(cap)


def equals_expr(s: TruncatedSeries, e: RationalExpr) -> bool:
    """True iff the expansion of e matches s on s's whole reliable range."""
    if s.cap == 0:
        return True
    return e.expand(s.cap).coeffs == s.coeffs


def algebra_generating_function(algebra, cap: int) -> TruncatedSeries:
    """Expansion of prod_even 1/(1-t^deg) * prod_odd (1+t^deg): the
    coefficient at n equals the number of degree-n monomials."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    coeffs = [0] * cap
    coeffs[0] = 1
    for g in algebra.generators:
        d = g.degree
        if d % 2 == 0:
            for n in range(d, cap):
                coeffs[n] += coeffs[n - d]
        else:
            for n in range(cap - 1, d - 1, -1):
                coeffs[n] += coeffs[n - d]
    return TruncatedSeries(coeffs)
