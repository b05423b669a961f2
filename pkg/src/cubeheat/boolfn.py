"""Functions on the Boolean hypercube {-1,1}^n and their multilinear calculus.

Truth tables are indexed by bitmask: bit i of the index is set iff x_i = +1.
Fourier coefficients are indexed by subset bitmask: bit i of the index is set
iff coordinate i belongs to the subset. Coordinates are 0-based throughout.

A function f with nonnegative table and mean 1 is a probability density with
respect to the uniform measure; those are the inputs of the process modules.
"""

from __future__ import annotations

import csv
import hashlib
import json
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import (
    AllZero,
    BadCoordinate,
    BadExponent,
    DegenerateBias,
    DimensionMismatch,
    DivisionByZero,
    NegativeDensity,
    NegativeTime,
    NotBoolean,
    OutOfCube,
)

MAX_N = 24  # 2^24 doubles = 128 MiB; the exactness boundary for dense tables

_EVAL_TOL = 1e-12

_degree_cache: dict[int, np.ndarray] = {}


def subset_degrees(n: int) -> np.ndarray:
    """popcount of every subset bitmask below 2^n, as uint8."""
    if n not in _degree_cache:
        deg = np.zeros(1, dtype=np.uint8)
        for _ in range(n):
            deg = np.concatenate([deg, deg + 1])
        _degree_cache[n] = deg
    return _degree_cache[n]


def fwht(a: np.ndarray) -> np.ndarray:
    """Unnormalized fast Walsh-Hadamard transform, O(n 2^n), returns a copy."""
    a = np.array(a, dtype=np.float64)
    size = a.shape[0]
    h = 1
    while h < size:
        a = a.reshape(-1, 2, h)
        x = a[:, 0, :].copy()
        y = a[:, 1, :]
        a[:, 0, :] = x + y
        a[:, 1, :] = x - y
        a = a.reshape(size)
        h *= 2
    return a


@dataclass(frozen=True)
class BooleanFunction:
    """A function {-1,1}^n -> R stored as a dense truth table.

    values[b] is the value at the vertex encoded by bitmask b. The Fourier
    table is computed lazily on first access and cached; both arrays are
    read-only, so instances are safe to share across threads.
    """

    n: int
    values: np.ndarray
    strictly_positive: bool
    _fourier: list = field(default_factory=list, repr=False, compare=False)

    @property
    def fourier(self) -> np.ndarray:
        if not self._fourier:
            coeffs = fwht(self.values[::-1]) / float(2**self.n)
            coeffs.setflags(write=False)
            self._fourier.append(coeffs)
        return self._fourier[0]

    def __len__(self) -> int:
        return 2**self.n

    def content_hash(self) -> str:
        h = hashlib.sha256()
        h.update(str(self.n).encode())
        h.update(np.ascontiguousarray(self.values).tobytes())
        return h.hexdigest()


def make_function(
    values: Sequence[float] | np.ndarray,
    n: int,
    normalize: bool = False,
    nonnegative: bool = True,
) -> BooleanFunction:
    """Build a BooleanFunction from a truth table of length 2^n.

    With normalize=True the table is rescaled to mean 1 (unit L1 norm for a
    nonnegative table). nonnegative=False skips the density checks and is
    meant for generic multilinear test functions.
    """
    if not (1 <= n <= MAX_N):
        raise DimensionMismatch(f"n must be in [1, {MAX_N}], got {n}")
    arr = np.asarray(values, dtype=np.float64).copy()
    if arr.ndim != 1 or arr.shape[0] != 2**n:
        raise DimensionMismatch(
            f"expected 2^{n} = {2**n} values, got shape {arr.shape}"
        )
    if not np.all(np.isfinite(arr)):
        raise DimensionMismatch("table entries must be finite")
    if nonnegative:
        if np.any(arr < 0):
            raise NegativeDensity("density table has negative entries")
        if not np.any(arr > 0):
            raise AllZero("density table is identically zero")
    if normalize:
        mean = float(arr.mean())
        if mean == 0.0:
            raise AllZero("cannot normalize a zero-mean table")
        arr /= mean
    arr.setflags(write=False)
    return BooleanFunction(
        n=n, values=arr, strictly_positive=bool(np.all(arr > 0))
    )


def fourier_transform(f: BooleanFunction) -> np.ndarray:
    """All Fourier coefficients of f, indexed by subset bitmask."""
    return f.fourier


def inverse_fourier(coeffs: np.ndarray) -> np.ndarray:
    """Truth table of the multilinear polynomial with the given coefficients."""
    return fwht(coeffs)[::-1]


def _check_inner(z: np.ndarray, n: int) -> np.ndarray:
    z = np.asarray(z, dtype=np.float64)
    if z.shape != (n,):
        raise DimensionMismatch(f"point must have shape ({n},), got {z.shape}")
    if np.any(np.abs(z) > 1.0 + _EVAL_TOL):
        raise OutOfCube(f"coordinates exceed [-1,1]: {z}")
    return z


def _fold(coeffs: np.ndarray, pairs: np.ndarray) -> float:
    # pairs[i] = (a_i, b_i); computes sum_S c(S) prod_{i not in S} a_i prod_{i in S} b_i.
    arr = coeffs
    for a, b in pairs:
        arr = arr.reshape(-1, 2)
        arr = a * arr[:, 0] + b * arr[:, 1]
    return float(arr[0])


def eval_multilinear(f: BooleanFunction, z: Sequence[float]) -> float:
    """Evaluate the multilinear extension of f at a point of [-1,1]^n."""
    z = _check_inner(z, f.n)
    pairs = np.stack([np.ones(f.n), z], axis=1)
    return _fold(f.fourier, pairs)


def partial_derivative(f: BooleanFunction, i: int, z: Sequence[float]) -> float:
    """d/dz_i of the multilinear extension; independent of z_i itself."""
    z = _check_inner(z, f.n)
    if not (0 <= i < f.n):
        raise BadCoordinate(f"coordinate {i} out of range for n={f.n}")
    pairs = np.stack([np.ones(f.n), z], axis=1)
    pairs[i] = (0.0, 1.0)
    return _fold(f.fourier, pairs)


def mixed_partial(f: BooleanFunction, i: int, j: int, z: Sequence[float]) -> float:
    """Second mixed derivative d2/(dz_i dz_j); zero when i == j (multilinearity)."""
    z = _check_inner(z, f.n)
    for k in (i, j):
        if not (0 <= k < f.n):
            raise BadCoordinate(f"coordinate {k} out of range for n={f.n}")
    if i == j:
        return 0.0
    pairs = np.stack([np.ones(f.n), z], axis=1)
    pairs[i] = (0.0, 1.0)
    pairs[j] = (0.0, 1.0)
    return _fold(f.fourier, pairs)


def gradient(f: BooleanFunction, z: Sequence[float]) -> np.ndarray:
    """All first partials at z, one fold per coordinate."""
    z = _check_inner(z, f.n)
    out = np.empty(f.n)
    for i in range(f.n):
        pairs = np.stack([np.ones(f.n), z], axis=1)
        pairs[i] = (0.0, 1.0)
        out[i] = _fold(f.fourier, pairs)
    return out


def heat_semigroup(f: BooleanFunction, t: float, z: Sequence[float]) -> float:
    """Heat semigroup applied to f, evaluated at z: the value f(e^{-t} z)."""
    if t < 0:
        raise NegativeTime(f"time must be nonnegative, got {t}")
    z = _check_inner(z, f.n)
    return eval_multilinear(f, math.exp(-t) * z)


def noise_table(f: BooleanFunction, rho: float) -> np.ndarray:
    """Truth table of x -> f(rho * x) over the cube (the noise operator)."""
    deg = subset_degrees(f.n).astype(np.float64)
    return inverse_fourier(f.fourier * rho**deg)


def degree_tables(f: BooleanFunction) -> np.ndarray:
    """A of shape (n+1, 2^n) with f(rho * x) = sum_d A[d, x] rho^d for cube x."""
    deg = subset_degrees(f.n)
    out = np.empty((f.n + 1, 2**f.n))
    for d in range(f.n + 1):
        masked = np.where(deg == d, f.fourier, 0.0)
        out[d] = inverse_fourier(masked)
    return out


def lp_norm(f: BooleanFunction, p: float) -> float:
    """L^p norm with respect to the uniform measure on the cube."""
    if p < 1:
        raise BadExponent(f"p must be >= 1, got {p}")
    return float(np.mean(np.abs(f.values) ** p) ** (1.0 / p))


def edge_ratio(f: BooleanFunction, i: int, z: Sequence[float]) -> float:
    """The ratio f(z with coordinate i flipped) / f(z)."""
    z = _check_inner(z, f.n)
    if not (0 <= i < f.n):
        raise BadCoordinate(f"coordinate {i} out of range for n={f.n}")
    denom = eval_multilinear(f, z)
    if denom == 0.0:
        raise DivisionByZero("f vanishes at the evaluation point")
    zf = z.copy()
    zf[i] = -zf[i]
    return eval_multilinear(f, zf) / denom


def edge_ratio_bounds(zi: float) -> tuple[float, float]:
    """A priori [lower, upper] bounds on the edge ratio at |z_i|.

    On the boundary |z_i| = 1 the bounds degenerate to the sentinel [0, inf).
    """
    a = abs(zi)
    if a >= 1.0:
        return 0.0, math.inf
    return (1.0 - a) / (1.0 + a), (1.0 + a) / (1.0 - a)


def level1_deficit(h: BooleanFunction, z: Sequence[float]) -> float:
    """Slack in the level-1 inequality for a {0,1}-valued h at an interior z.

    Returns h(z) - h(z)^2 - sum_i (1 - z_i^2) (d_i h(z))^2, which is
    nonnegative up to roundoff.
    """
    if not np.all((h.values == 0.0) | (h.values == 1.0)):
        raise NotBoolean("table values must be exactly 0 or 1")
    z = _check_inner(z, h.n)
    hz = eval_multilinear(h, z)
    grad = gradient(h, z)
    return hz - hz**2 - float(np.sum((1.0 - z**2) * grad**2))


def _vertex_signs(n: int) -> np.ndarray:
    # signs[b, i] = +1 if bit i of b is set else -1
    b = np.arange(2**n)
    return np.where((b[:, None] >> np.arange(n)[None, :]) & 1, 1.0, -1.0)


def phi_basis(p: np.ndarray, n: int) -> np.ndarray:
    """Values phi_i(y) of the biased orthonormal basis, shape (2^n, n)."""
    p = np.asarray(p, dtype=np.float64)
    if p.shape != (n,):
        raise DimensionMismatch(f"bias vector must have shape ({n},)")
    if np.any(p <= 0.0) or np.any(p >= 1.0):
        raise DegenerateBias(f"bias probabilities must lie in (0,1): {p}")
    y = _vertex_signs(n)
    return ((1.0 - 2.0 * p)[None, :] + y) / (2.0 * np.sqrt(p * (1.0 - p))[None, :])


def biased_measure(p: np.ndarray, n: int) -> np.ndarray:
    """Product measure on the cube with P(y_i = +1) = p_i, shape (2^n,)."""
    p = np.asarray(p, dtype=np.float64)
    y = _vertex_signs(n)
    return np.prod((1.0 + y * (2.0 * p - 1.0)[None, :]) / 2.0, axis=1)


def p_biased_coefficient(f: BooleanFunction, p: Sequence[float], S: int) -> float:
    """Biased Fourier coefficient of f on the subset bitmask S under bias p."""
    p = np.asarray(p, dtype=np.float64)
    if not (0 <= S < 2**f.n):
        raise BadCoordinate(f"subset bitmask {S} out of range for n={f.n}")
    mu = biased_measure(p, f.n)
    phi = phi_basis(p, f.n)
    phi_S = np.ones(2**f.n)
    for i in range(f.n):
        if (S >> i) & 1:
            phi_S *= phi[:, i]
    return float(np.sum(mu * f.values * phi_S))


def function_from_json(text: str) -> BooleanFunction:
    """Parse the ingestion document {"n": int, "values": [...], "normalize": bool}."""
    doc = json.loads(text)
    try:
        n = int(doc["n"])
        values = doc["values"]
        normalize = bool(doc.get("normalize", False))
    except (KeyError, TypeError) as exc:
        raise DimensionMismatch(f"malformed function document: {exc}") from exc
    return make_function(values, n, normalize=normalize)


def function_to_json(f: BooleanFunction) -> str:
    return json.dumps(
        {"n": f.n, "values": f.values.tolist(), "normalize": False}
    )


def fourier_to_csv(f: BooleanFunction, path: str) -> None:
    """Write all Fourier coefficients as CSV rows (subset_bitmask, coefficient)."""
    coeffs = f.fourier
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["subset_bitmask", "coefficient"])
        for S, c in enumerate(coeffs):
            writer.writerow([S, repr(float(c))])
