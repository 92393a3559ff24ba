"""Exact computations in the Neveu-Schwarz algebra and its Gamma modules."""

from ._core import (
    Generator,
    Module,
    NsalgError,
    Scalar,
    bracket,
    find_intertwiner,
    minimal_annihilator,
    omega,
    run_cli,
    simplicity,
    verify_identities,
    verify_jacobi,
)

__all__ = [
    "Generator",
    "Module",
    "NsalgError",
    "Scalar",
    "bracket",
    "find_intertwiner",
    "minimal_annihilator",
    "omega",
    "run_cli",
    "simplicity",
    "verify_identities",
    "verify_jacobi",
]
__version__ = "0.1.0"
