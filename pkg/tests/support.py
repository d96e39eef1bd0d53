"""Shared helpers for the test suite: bundled-model loading, random
minimal model generation, and independent oracle code paths that the main
library must agree with."""

from __future__ import annotations

import itertools
import random
from pathlib import Path

from loopinv import linalg
from loopinv.algebra import Derivation, GradedAlgebra
from loopinv.cohomology import cochain_matrix
from loopinv.models import DgaModel, MinimalModel, parse_model
from loopinv.series import algebra_generating_function

MODELS_DIR = Path(__file__).resolve().parent.parent / "models"


def load_model(name: str) -> MinimalModel:
    return parse_model((MODELS_DIR / name).read_text(encoding="utf-8"))


def sphere_bundle_model(d: int) -> MinimalModel:
    """Unit tangent bundle of S^{2d}: one exterior generator of degree
    4d-1, zero differential."""
    alg = GradedAlgebra([("x", 4 * d - 1)])
    return MinimalModel(alg, Derivation(alg, 1, {}))


# ---------------------------------------------------------------------
# independent oracles (used only by tests)


def oracle_betti(model: DgaModel, n: int) -> int:
    """Brute-force betti: stack the previous differential's columns with
    a kernel basis of the current one and row-reduce the stack.  The
    kernel spans the cocycles and contains the coboundaries, so

        betti = rank [D_{n-1} | kernel] - rank D_{n-1}.

    This is a different identity from the production formula
    dim ker(D_n) - rank(D_{n-1})."""
    d_n = cochain_matrix(model, n)
    kernel = linalg.kernel_basis(d_n)
    if n > 0:
        prev = cochain_matrix(model, n - 1)
        prev_cols = prev.columns()
        rank_prev = linalg.rank(prev)
    else:
        prev_cols, rank_prev = [], 0
    stacked_cols = prev_cols + kernel
    stacked = linalg.QMatrix.from_columns(stacked_cols, rows=d_n.cols)
    return linalg.rank(stacked) - rank_prev


def brute_force_monomial_count(algebra: GradedAlgebra, degree: int) -> int:
    """Count degree-n monomials by raw exponent enumeration, independent
    of the recursive basis builder."""
    ranges = []
    for g in algebra.generators:
        top = 1 if g.degree % 2 else degree // g.degree
        ranges.append(range(top + 1))
    count = 0
    for expo in itertools.product(*ranges):
        if sum(e * g.degree for e, g in zip(expo, algebra.generators)) == degree:
            count += 1
    return count


# ---------------------------------------------------------------------
# random valid minimal models


def random_minimal_model(rng: random.Random, max_generators: int = 4) -> MinimalModel:
    """A random valid minimal model: generator degrees in 2..9 and each
    nonzero differential value a combination of word-length >= 2
    monomials in *closed* generators, which forces d^2 = 0."""
    n = rng.randint(1, max_generators)
    degrees = sorted(rng.randint(2, 9) for _ in range(n))
    names = [f"g{k}" for k in range(n)]
    alg = GradedAlgebra(list(zip(names, degrees)))
    closed: list[int] = []
    values = {}
    for k in range(n):
        target = degrees[k] + 1
        candidates = []
        if closed and rng.random() < 0.7:
            sub = GradedAlgebra([(names[j], degrees[j]) for j in closed])
            for mono in sub.monomial_basis(target):
                if sum(mono) >= 2:
                    full = [0] * n
                    for pos, j in enumerate(closed):
                        full[j] = mono[pos]
                    candidates.append(tuple(full))
        if candidates:
            picked = rng.sample(candidates, k=rng.randint(1, min(3, len(candidates))))
            terms = {mono: rng.choice([-2, -1, 1, 2, 3]) for mono in picked}
            values[names[k]] = alg.poly(terms)
        else:
            closed.append(k)
    return MinimalModel(alg, Derivation(alg, 1, values))


def random_models_within_budget(
    seed: int, count: int, cap: int = 24, max_cochain_dim: int = 140
) -> list[MinimalModel]:
    """Deterministic stream of random models whose Borel cochain spaces
    stay desk-sized (at most max_cochain_dim monomials per degree up to
    cap), so exact elimination stays fast."""
    rng = random.Random(seed)
    out: list[MinimalModel] = []
    while len(out) < count:
        model = random_minimal_model(rng)
        borel_gens = [("alpha", 2)]
        for g in model.algebra.generators:
            borel_gens.append((g.name, g.degree))
            borel_gens.append((g.name + "_bar", g.degree - 1))
        gf = algebra_generating_function(GradedAlgebra(borel_gens), cap + 1)
        if max(gf.coeffs) <= max_cochain_dim:
            out.append(model)
    return out
