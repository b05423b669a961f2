"""Heat semigroup on the Boolean hypercube: exact scores, reverse jump
processes, perturbed couplings, and small-n verification oracles."""

from .boolfn import (
    BooleanFunction,
    eval_multilinear,
    fourier_transform,
    heat_semigroup,
    make_function,
)
from .config import CouplingConfig, default_T, default_delta_bar
from .scores import score

__version__ = "0.1.0"

__all__ = [
    "BooleanFunction",
    "CouplingConfig",
    "default_T",
    "default_delta_bar",
    "eval_multilinear",
    "fourier_transform",
    "heat_semigroup",
    "make_function",
    "score",
    "__version__",
]
