"""Exact score functions, jump rates, the perturbation rule, and curvature
diagnostics for the reverse heat process.

The score of coordinate i at an inner point x is s_i = x_i d_i f(x) / f(x).
The reverse process flips coordinate i at rate 1/2 - s_i, and the perturbed
companion at rate 1/2 - (1 - delta_i) s_i while the perturbation is active.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import boolfn
from .boolfn import BooleanFunction
from .errors import BadDeltaBar, DivisionByZero, RateSingularity


@dataclass(frozen=True)
class ScoreVector:
    s: np.ndarray
    at: np.ndarray

    def __post_init__(self):
        self.s.setflags(write=False)
        self.at.setflags(write=False)


@dataclass(frozen=True)
class ScoreJumpMatrix:
    """Jump increments of the score field.

    delta[j, i] is the change of s_i when coordinate j flips; r[i, j] is the
    second-order ratio x_i x_j d_ij f(x) / f(x), zero on the diagonal.
    """

    delta: np.ndarray
    r: np.ndarray


def score(f: BooleanFunction, x) -> ScoreVector:
    """Exact score vector of f at an inner point x."""
    x = np.asarray(x, dtype=np.float64)
    fx = boolfn.eval_multilinear(f, x)
    if fx == 0.0:
        raise DivisionByZero("f vanishes at the evaluation point")
    grad = boolfn.gradient(f, x)
    return ScoreVector(s=x * grad / fx, at=x.copy())


def jump_rate_reverse(f: BooleanFunction, x, i: int) -> float:
    """Reverse-process flip rate 1/2 - s_i(x), computed as f(flip)/2f(x)."""
    return 0.5 * boolfn.edge_ratio(f, i, x)


def delta_perturbation(s_i: float, delta_bar: float) -> float:
    """State-dependent perturbation magnitude.

    Always in (0, 1); bounded by 2*delta_bar whenever the score satisfies
    |s_i| <= 1 / (2 (1 - 2 delta_bar)), which covers the moderate-score band
    the coupled construction operates in.
    """
    _check_delta_bar(delta_bar)
    if s_i > 0:
        return delta_bar
    return delta_bar * (1.0 - 2.0 * s_i) / (1.0 - 2.0 * delta_bar * s_i)


def delta_of_scores(v: np.ndarray, delta_bar: float) -> np.ndarray:
    """Vectorized delta_perturbation over an array of scores."""
    _check_delta_bar(delta_bar)
    return np.where(
        v > 0,
        delta_bar,
        delta_bar * (1.0 - 2.0 * v) / (1.0 - 2.0 * delta_bar * v),
    )


def perturbed_jump_rate(
    f: BooleanFunction, x, i: int, delta_bar: float, active: bool
) -> float:
    """Flip rate of the perturbed companion: 1/2 - (1 - delta_i * active) s_i."""
    _check_delta_bar(delta_bar)
    s = score(f, x).s[i]
    if not active:
        return 0.5 - s
    return 0.5 - (1.0 - delta_perturbation(s, delta_bar)) * s


def _check_delta_bar(delta_bar: float) -> None:
    if not (0.0 < delta_bar < 0.5):
        raise BadDeltaBar(f"delta_bar must lie in (0, 1/2), got {delta_bar}")


def score_jump_matrix(f: BooleanFunction, x) -> ScoreJumpMatrix:
    """Closed-form jump increments delta[j, i] = s_i(flip_j(x)) - s_i(x)."""
    x = np.asarray(x, dtype=np.float64)
    n = f.n
    fx = boolfn.eval_multilinear(f, x)
    if fx == 0.0:
        raise DivisionByZero("f vanishes at the evaluation point")
    s = x * boolfn.gradient(f, x) / fx
    r = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            rij = x[i] * x[j] * boolfn.mixed_partial(f, i, j, x) / fx
            r[i, j] = rij
            r[j, i] = rij
    denom = 1.0 - 2.0 * s
    if np.any(denom <= 0.0):
        raise RateSingularity(
            "1 - 2 s_j <= 0 at an interior point; input table is corrupted"
        )
    delta = 2.0 * (s[None, :] * s[:, None] - r) / denom[:, None]
    ii = np.arange(n)
    delta[ii, ii] = -2.0 * s * (1.0 - s) / denom
    return ScoreJumpMatrix(delta=delta, r=r)


def log_hessian(f: BooleanFunction, x) -> np.ndarray:
    """Hessian of log f at an inner point, using multilinearity of f."""
    x = np.asarray(x, dtype=np.float64)
    n = f.n
    fx = boolfn.eval_multilinear(f, x)
    if fx == 0.0:
        raise DivisionByZero("f vanishes at the evaluation point")
    g = boolfn.gradient(f, x) / fx
    H = -np.outer(g, g)
    for i in range(n):
        for j in range(i + 1, n):
            H[i, j] += boolfn.mixed_partial(f, i, j, x) / fx
            H[j, i] = H[i, j]
    return H


def log_hessian_min_eig(f: BooleanFunction, x) -> float:
    """Smallest eigenvalue of the log-Hessian of f at x."""
    H = log_hessian(f, x)
    return float(np.linalg.eigvalsh(H)[0])


def score_state_table(f: BooleanFunction, rho: float) -> np.ndarray:
    """S_i(rho * x) for every cube vertex x, shape (n, 2^n).

    Uses the flip identity 1/2 - S_i(z) = f(flip_i z) / (2 f(z)) on the
    scaled table, so a single noise-operator table serves all coordinates.
    """
    F = boolfn.noise_table(f, rho)
    if np.any(F <= 0.0):
        raise DivisionByZero("scaled table is not strictly positive")
    idx = np.arange(2**f.n)
    out = np.empty((f.n, 2**f.n))
    for i in range(f.n):
        out[i] = 0.5 - F[idx ^ (1 << i)] / (2.0 * F)
    return out
