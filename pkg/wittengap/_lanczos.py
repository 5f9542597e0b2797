"""
Eigensolvers for the lowest non-constant modes of a weighted Laplacian pencil (A, M) with diagonal M.

Both paths work on the mass-symmetrized operator S = M^-1/2 A M^-1/2 whose kernel is spanned by
y0 = M^1/2 1.  The constant mode is removed by explicit projection against y0.

    :: dense    (n <= dense_limit)  subset `eigh` of S, the mode overlapping y0 is dropped
    :: lanczos  (n >  dense_limit)  block Lanczos with full reorthogonalization on (S + shift I)^-1
"""
from __future__ import annotations

import dataclasses
import logging
import math
import typing

import numpy as np
import scipy.linalg
import scipy.sparse
import scipy.sparse.linalg

from ._constants import DENSE_FALLBACK_LIMIT
from ._constants import LANCZOS_BLOCK_SIZE
from ._constants import LANCZOS_MAX_BLOCKS
from ._constants import LANCZOS_SEED
from ._constants import LANCZOS_SHIFT
from ._constants import LANCZOS_TOL
from ._exceptions import InvalidInputException
from ._exceptions import LanczosConvergenceException
from ._types import ARRAY_ALIAS

log = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class LowModes:
    """Lowest non-constant generalized eigenpairs, vectors mass-normalized, residuals in the mass norm."""

    values: ARRAY_ALIAS
    vectors: ARRAY_ALIAS
    residuals: ARRAY_ALIAS
    method: str
    iterations: int = 0


def pencil_residual(stiffness: scipy.sparse.spmatrix, mass: ARRAY_ALIAS, value: float, vector: ARRAY_ALIAS) -> float:
    """||M^-1/2 (A v - value M v)|| / ||M^1/2 v||."""
    r = stiffness @ vector - value * mass * vector
    return math.sqrt(float(np.sum(r * r / mass)) / float(np.sum(mass * vector * vector)))


def _finish(
    stiffness: scipy.sparse.spmatrix, mass: ARRAY_ALIAS, sym_vectors: ARRAY_ALIAS, method: str, iterations: int
) -> LowModes:
    """Undo the symmetrization, mass-normalize and replace Ritz values by pencil Rayleigh quotients."""
    vectors = sym_vectors / np.sqrt(mass)[:, None]
    values = np.empty(vectors.shape[1])
    residuals = np.empty(vectors.shape[1])
    for index in range(vectors.shape[1]):
        v = vectors[:, index]
        v /= math.sqrt(float(np.sum(mass * v * v)))
        values[index] = float(v @ (stiffness @ v))
        residuals[index] = pencil_residual(stiffness, mass, values[index], v)
    order = np.argsort(values)
    return LowModes(values[order], vectors[:, order], residuals[order], method, iterations)


def _dense(stiffness: scipy.sparse.spmatrix, mass: ARRAY_ALIAS, count: int, y0: ARRAY_ALIAS) -> LowModes:
    scale = 1.0 / np.sqrt(mass)
    symmetric = stiffness.toarray() * scale[:, None] * scale[None, :]
    symmetric = 0.5 * (symmetric + symmetric.T)
    _, vectors = scipy.linalg.eigh(symmetric, subset_by_index=[0, count])
    null = int(np.argmax(np.abs(y0 @ vectors)))
    vectors = np.delete(vectors, null, axis=1)
    vectors -= np.outer(y0, y0 @ vectors)
    return _finish(stiffness, mass, vectors, "dense", 0)


def _block_tridiagonal(alphas: typing.List[ARRAY_ALIAS], betas: typing.List[ARRAY_ALIAS]) -> ARRAY_ALIAS:
    b = alphas[0].shape[0]
    size = b * len(alphas)
    t = np.zeros((size, size))
    for j, alpha in enumerate(alphas):
        t[j * b : (j + 1) * b, j * b : (j + 1) * b] = alpha
    for j, beta in enumerate(betas[: len(alphas) - 1]):
        t[(j + 1) * b : (j + 2) * b, j * b : (j + 1) * b] = beta
        t[j * b : (j + 1) * b, (j + 1) * b : (j + 2) * b] = beta.T
    return t


def block_lanczos(
    stiffness: scipy.sparse.spmatrix,
    mass: ARRAY_ALIAS,
    count: int,
    *,
    shift: float = LANCZOS_SHIFT,
    block_size: int = LANCZOS_BLOCK_SIZE,
    max_blocks: int = LANCZOS_MAX_BLOCKS,
    tol: float = LANCZOS_TOL,
    seed: int = LANCZOS_SEED,
) -> LowModes:
    """
    Block Lanczos on T = (S + shift I)^-1 restricted to the complement of y0.  The wanted modes are the
    largest Ritz values theta of T, lambda = 1 / theta - shift.  A block larger than the wanted cluster
    resolves exactly degenerate eigenvalues, which a single-vector recurrence cannot.  The recurrence is
    internally sequential and seeded, so repeated solves of the same pencil give identical iterates.
    """
    n = len(mass)
    sqrt_m = np.sqrt(mass)
    y0 = sqrt_m / np.linalg.norm(sqrt_m)
    block_size = max(block_size, count)
    factor = scipy.sparse.linalg.splu((stiffness + shift * scipy.sparse.diags(mass)).tocsc())

    def deflate(block: ARRAY_ALIAS) -> ARRAY_ALIAS:
        return block - np.outer(y0, y0 @ block)

    def operator(block: ARRAY_ALIAS) -> ARRAY_ALIAS:
        return deflate(sqrt_m[:, None] * factor.solve(sqrt_m[:, None] * block))

    rng = np.random.default_rng(seed)
    q, _ = np.linalg.qr(deflate(rng.standard_normal((n, block_size))))
    basis = [q]
    alphas: typing.List[ARRAY_ALIAS] = []
    betas: typing.List[ARRAY_ALIAS] = []
    previous = np.zeros_like(q)
    beta_previous = np.zeros((block_size, block_size))
    best, worst = float("nan"), float("inf")
    max_blocks = min(max_blocks, max(2, (n - 1) // block_size))
    for step in range(max_blocks):
        current = basis[-1]
        w = operator(current)
        alpha = current.T @ w
        alpha = 0.5 * (alpha + alpha.T)
        w = w - current @ alpha - previous @ beta_previous.T
        stacked = np.hstack(basis)
        for _ in range(2):
            w = deflate(w - stacked @ (stacked.T @ w))
        q_next, beta = np.linalg.qr(w)
        alphas.append(alpha)
        betas.append(beta)
        thetas, ritz = np.linalg.eigh(_block_tridiagonal(alphas, betas))
        wanted = slice(len(thetas) - count, len(thetas))
        estimates = np.linalg.norm(beta @ ritz[-block_size:, wanted], axis=0)
        best = 1.0 / thetas[-1] - shift
        worst = float(np.max(estimates))
        log.debug("block lanczos step %d: lowest %.12g, worst residual %.3e", step, best, worst)
        if worst <= tol * thetas[-1]:
            vectors = stacked @ ritz[:, wanted]
            return _finish(stiffness, mass, deflate(vectors), "lanczos", step + 1)
        if np.min(np.abs(np.diag(beta))) <= 1e-14 * max(1.0, float(np.max(np.abs(alpha)))):
            # Invariant subspace found without the wanted accuracy; continue from fresh directions.
            fresh = deflate(rng.standard_normal((n, block_size)))
            for _ in range(2):
                fresh = deflate(fresh - stacked @ (stacked.T @ fresh))
            q_next, _ = np.linalg.qr(fresh)
            betas[-1] = np.zeros_like(beta)
        previous, beta_previous = current, betas[-1]
        basis.append(q_next)
    raise LanczosConvergenceException(
        f"block Lanczos did not converge in {max_blocks} blocks (best estimate {best:.12g})",
        residual=worst,
        estimate=best,
    )


def lowest_nonconstant_modes(
    stiffness: scipy.sparse.spmatrix,
    mass: ARRAY_ALIAS,
    count: int,
    *,
    dense_limit: int = DENSE_FALLBACK_LIMIT,
    **lanczos_kwargs: typing.Any,
) -> LowModes:
    n = len(mass)
    if not 1 <= count < n:
        raise InvalidInputException(f"count must lie in [1, {n - 1}], got {count}")
    if n <= dense_limit:
        sqrt_m = np.sqrt(mass)
        return _dense(stiffness, mass, count, sqrt_m / np.linalg.norm(sqrt_m))
    return block_lanczos(stiffness, mass, count, **lanczos_kwargs)
