"""Run configuration for the coupled reverse-process construction."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .boolfn import BooleanFunction
from .errors import BadDeltaBar, BadEta, DimensionMismatch, HypothesisViolated, NonPositiveDensity

ETA_MIN = math.exp(3.0)


def default_T(n: int, tau: float) -> float:
    """Horizon large enough for the squared-score bound regime: max(100 ln n, tau + 2)."""
    return max(100.0 * math.log(n), tau + 2.0)


def default_delta_bar(eta: float) -> float:
    """Perturbation size tied to the tail level: (log(log eta)/2 + 0.91) / log eta."""
    return (0.5 * math.log(math.log(eta)) + 0.91) / math.log(eta)


@dataclass
class CouplingConfig:
    """All free parameters of the coupled simulation.

    T and delta_bar may be omitted; they then take the derived defaults above.
    Horizons below the 100 ln n regime are accepted but trigger a warning,
    since the expected-squared-score bound is only claimed above it.
    """

    n: int
    f: BooleanFunction
    tau: float
    eta: float
    seed: int = 0
    T: float | None = None
    delta_bar: float | None = None
    time_tol: float = 1e-9
    grid_step: float = 0.01
    norm_tol: float = field(default=1e-9, repr=False)

    def __post_init__(self):
        if self.f.n != self.n:
            raise DimensionMismatch(
                f"config n={self.n} does not match function n={self.f.n}"
            )
        if not self.f.strictly_positive:
            raise NonPositiveDensity(
                "coupled simulation needs a strictly positive density"
            )
        if abs(float(np.mean(self.f.values)) - 1.0) > self.norm_tol:
            raise NonPositiveDensity("density must be normalized to unit mean")
        if not self.tau > 0:
            raise ValueError(f"tau must be positive, got {self.tau}")
        if not self.eta > ETA_MIN:
            raise BadEta(f"eta must exceed e^3 = {ETA_MIN:.6f}, got {self.eta}")
        if self.T is None:
            self.T = default_T(self.n, self.tau)
        if self.delta_bar is None:
            self.delta_bar = default_delta_bar(self.eta)
        if not (0.0 < self.delta_bar < 0.5):
            raise BadDeltaBar(
                f"delta_bar must lie in (0, 1/2), got {self.delta_bar}"
            )
        if not self.T - self.tau > 1.0:
            raise ValueError(
                f"need T - tau > 1 for the stage partition, got T={self.T}, tau={self.tau}"
            )
        if self.n >= 3 and self.T < 100.0 * math.log(self.n) - 1e-12:
            warnings.warn(
                f"T={self.T:.3f} is below 100 ln n = {100*math.log(self.n):.3f}; "
                "the expected-squared-score bound is not guaranteed in this regime",
                HypothesisViolated,
                stacklevel=2,
            )

    # -- derived quantities ------------------------------------------------

    @property
    def T_o(self) -> float:
        return self.T - self.tau

    @property
    def m(self) -> int:
        """Number of stages in the early-stopped family."""
        return int(math.floor(self.T_o))

    @property
    def upsilon(self) -> float:
        return self.T_o / self.m

    def stage_time(self, k: int) -> float:
        return k * self.upsilon

    def rho(self, t: float):
        """Scale factor e^{-(T-t)} mapping cube states to the inner cube."""
        return np.exp(-(self.T - np.asarray(t, dtype=np.float64)))

    @property
    def dominating_rate(self) -> float:
        """Per-coordinate thinning rate valid for both processes on [0, T - tau]."""
        r = math.exp(-self.tau)
        return (1.0 + r) / (2.0 * (1.0 - r))

    @property
    def alpha(self) -> float:
        r = math.exp(-self.tau)
        return (1.0 - r) / (1.0 + r)

    @property
    def log_eta(self) -> float:
        return math.log(self.eta)

    @property
    def w_threshold(self) -> float:
        """Stopping level for log f of the perturbed process."""
        return self.log_eta

    @property
    def v_threshold(self) -> float:
        """Stopping level for log f of the reverse process."""
        return self.log_eta + 0.5 * math.log(self.log_eta) + 1.0

    def crossing_possible(self, rho: float) -> bool:
        """Cheap a priori test: can log f(rho * x) exceed the lower stopping level?

        Uses the pointwise product bound f(z) <= prod (1 + |z_i|) for unit-mass
        densities, so a False return is a proof of no crossing.
        """
        return self.n * math.log1p(rho) > self.w_threshold

    def echo(self) -> dict:
        """JSON-serializable summary embedded in reports and manifests."""
        return {
            "n": self.n,
            "tau": self.tau,
            "T": self.T,
            "T_o": self.T_o,
            "delta_bar": self.delta_bar,
            "eta": self.eta,
            "seed": self.seed,
            "time_tol": self.time_tol,
            "grid_step": self.grid_step,
            "function_hash": self.f.content_hash(),
        }
