"""Degree-by-degree cohomology of a DgaModel over Q and the induced
involution eigenspace split.

Cochain spaces use the canonical monomial bases; the matrix of the
differential in degree n sends coordinates at n to coordinates at n+1.
Cohomology representatives are the first kernel vectors (in canonical
order) that stay independent modulo the image of the previous
differential, which makes every reported matrix deterministic.  Eigenspace
dimensions are basis independent regardless.

Degrees at or beyond the cap are never extrapolated: a table computed
with cap N answers for degrees 0..N-1 only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import linalg
from .algebra import Monomial, Polynomial
from .models import DgaModel
from .series import TruncatedSeries


class NoInvolutionError(ValueError):
    category = "NoInvolution"


class InternalInconsistencyError(RuntimeError):
    """A cocycle failed to reduce modulo coboundaries, or an induced
    involution failed to square to the identity.  Unreachable for models
    that passed their construction gates."""

    category = "InternalInconsistency"


@dataclass(frozen=True)
class DegreeSlice:
    degree: int
    cochain_dim: int
    betti: int
    inv_plus: Optional[int] = None
    inv_minus: Optional[int] = None

    def __post_init__(self):
        if not 0 <= self.betti <= self.cochain_dim:
            raise ValueError(f"betti {self.betti} out of range at degree {self.degree}")
        if (self.inv_plus is None) != (self.inv_minus is None):
            raise ValueError("eigen data must be all-or-nothing")
        if self.inv_plus is not None and self.inv_plus + self.inv_minus != self.betti:
            raise ValueError(
                f"eigen split {self.inv_plus}+{self.inv_minus} != betti {self.betti} "
                f"at degree {self.degree}"
            )


@dataclass(frozen=True)
class EigenTable:
    """Slices for degrees 0..cap-1."""

    cap: int
    slices: tuple[DegreeSlice, ...]

    def __post_init__(self):
        if len(self.slices) != self.cap:
            raise ValueError("need one slice per degree 0..cap-1")
        for n, s in enumerate(self.slices):
            if s.degree != n:
                raise ValueError("slices must be contiguous from degree 0")

    def slice(self, degree: int) -> DegreeSlice:
        return self.slices[degree]

    @property
    def has_eigen_data(self) -> bool:
        return bool(self.slices) and self.slices[0].inv_plus is not None

    def betti_series(self) -> TruncatedSeries:
        return TruncatedSeries(s.betti for s in self.slices)

    def cochain_series(self) -> TruncatedSeries:
        return TruncatedSeries(s.cochain_dim for s in self.slices)

    def inv_plus_series(self) -> TruncatedSeries:
        if not self.has_eigen_data:
            raise NoInvolutionError("table has no eigenspace data")
        return TruncatedSeries(s.inv_plus for s in self.slices)

    def inv_minus_series(self) -> TruncatedSeries:
        if not self.has_eigen_data:
            raise NoInvolutionError("table has no eigenspace data")
        return TruncatedSeries(s.inv_minus for s in self.slices)


def _coords(poly: Polynomial, index: dict[Monomial, int], dim: int):
    v = [0] * dim
    for mono, coeff in poly.terms.items():
        v[index[mono]] = coeff
    return v


def cochain_matrix(model: DgaModel, n: int) -> linalg.QMatrix:
    """Matrix of the differential from degree n to degree n+1; column j
    holds the coordinates of D(basis_n[j])."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    alg = model.algebra
    basis_n = alg.monomial_basis(n)
    basis_next = alg.monomial_basis(n + 1)
    index = {mono: i for i, mono in enumerate(basis_next)}
    d = model.differential
    cols = []
    for mono in basis_n:
        image = d(alg.poly({mono: 1}))
        cols.append(_coords(image, index, len(basis_next)))
    return linalg.QMatrix.from_columns(cols, rows=len(basis_next))


def betti(model: DgaModel, n: int) -> int:
    """dim ker(D_n) - rank(D_{n-1})."""
    d_n = cochain_matrix(model, n)
    rank_prev = linalg.rank(cochain_matrix(model, n - 1)) if n > 0 else 0
    return (d_n.cols - linalg.rank(d_n)) - rank_prev


def _involution_matrix(model: DgaModel, n: int) -> linalg.QMatrix:
    alg = model.algebra
    basis = alg.monomial_basis(n)
    index = {mono: i for i, mono in enumerate(basis)}
    t = model.involution
    cols = [_coords(t(alg.poly({mono: 1})), index, len(basis)) for mono in basis]
    return linalg.QMatrix.from_columns(cols, rows=len(basis))


def _eigen_split(
    model: DgaModel,
    n: int,
    kernel: list,
    prev_matrix: Optional[linalg.QMatrix],
    prev_pivots: tuple[int, ...],
) -> tuple[linalg.QMatrix, int, int]:
    """Induced involution matrix on H^n plus its eigenspace dimensions."""
    dim_n = len(model.algebra.monomial_basis(n))
    im_cols = (
        [prev_matrix.column(c) for c in prev_pivots] if prev_matrix is not None else []
    )
    if kernel:
        stacked = linalg.QMatrix.from_columns(im_cols + list(kernel), rows=dim_n)
        pivots = linalg.pivot_columns(stacked)
        reps = [kernel[p - len(im_cols)] for p in pivots if p >= len(im_cols)]
    else:
        reps = []
    if not reps:
        return linalg.QMatrix.zero(0, 0), 0, 0
    t_matrix = _involution_matrix(model, n)
    images = [t_matrix.matvec(r) for r in reps]
    solved = linalg.solve_in_span(
        linalg.QMatrix.from_columns(im_cols + reps, rows=dim_n), images
    )
    cols = []
    for sol in solved:
        if sol is None:
            raise InternalInconsistencyError(
                "involution image of a cocycle failed to reduce modulo coboundaries"
            )
        cols.append(sol[len(im_cols) :])
    induced = linalg.QMatrix.from_columns(cols, rows=len(reps))
    try:
        plus, minus = linalg.involution_eigen_dims(induced)
    except linalg.NotAnInvolutionError as exc:
        raise InternalInconsistencyError(
            f"induced involution is not an involution: {exc}"
        ) from exc
    return induced, plus, minus


def induced_involution(model: DgaModel, n: int) -> linalg.QMatrix:
    """Matrix of the involution on a deterministic basis of H^n."""
    if model.involution is None:
        raise NoInvolutionError("model has no involution")
    kernel, _ = linalg.kernel_and_pivots(cochain_matrix(model, n))
    if n > 0:
        prev = cochain_matrix(model, n - 1)
        prev_pivots = linalg.pivot_columns(prev)
    else:
        prev, prev_pivots = None, ()
    induced, _, _ = _eigen_split(model, n, kernel, prev, prev_pivots)
    return induced


def eigen_table(model: DgaModel, cap: int) -> EigenTable:
    """Per-degree cochain dimension, betti number and (when the model has
    an involution) the eigenspace split, for degrees 0..cap-1."""
    if cap < 2:
        raise ValueError("cap must be >= 2")
    alg = model.algebra
    with_eigen = model.involution is not None
    dims = [len(alg.monomial_basis(n)) for n in range(cap + 1)]
    slices = []
    prev_matrix: Optional[linalg.QMatrix] = None
    prev_pivots: tuple[int, ...] = ()
    for n in range(cap):
        matrix = cochain_matrix(model, n)
        kernel, pivots = linalg.kernel_and_pivots(matrix)
        rank_prev = len(prev_pivots)
        b = len(kernel) - rank_prev
        if with_eigen:
            _, plus, minus = _eigen_split(model, n, kernel, prev_matrix, prev_pivots)
            if plus + minus != b:
                raise InternalInconsistencyError(
                    f"eigen split {plus}+{minus} != betti {b} at degree {n}"
                )
            slices.append(DegreeSlice(n, dims[n], b, plus, minus))
        else:
            slices.append(DegreeSlice(n, dims[n], b))
        prev_matrix, prev_pivots = matrix, pivots
    return EigenTable(cap, tuple(slices))
