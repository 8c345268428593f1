"""Exact counts of plane tropical curves via lattice paths and Newton subdivisions."""
from __future__ import annotations

from .counts import (
    e_trop_large_j,
    e_trop_small_j,
    n_trop,
    n_via_corollary,
    severi_degree,
)
from .paths import LatticePath, enumerate_paths, mikhalkin_multiplicity
from .subdivisions import generate_subdivisions

__all__ = [
    "LatticePath",
    "e_trop_large_j",
    "e_trop_small_j",
    "enumerate_paths",
    "generate_subdivisions",
    "mikhalkin_multiplicity",
    "n_trop",
    "n_via_corollary",
    "severi_degree",
]
