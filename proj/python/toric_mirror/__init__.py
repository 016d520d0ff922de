"""Exact toric mirror-symmetry computations."""

from ._core import (
    Error,
    InputError,
    PreconditionError,
    chambers,
    hodge,
    is_reflexive,
    lattice_points,
    polar,
    run,
)

__all__ = [
    "Error",
    "InputError",
    "PreconditionError",
    "chambers",
    "hodge",
    "is_reflexive",
    "lattice_points",
    "polar",
    "run",
]
