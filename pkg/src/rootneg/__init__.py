"""Exact-arithmetic root system combinatorics.

Finite (possibly non-reduced) root systems with all data kept in rational
arithmetic: integrality classes of parameters, chamber galleries, sublattice
invariants, and linear-programming certificates of negativity conditions.
"""

from .rootsys import (
    CapacityError,
    Parameter,
    RootSystem,
    RootSystemSpec,
    WeylElement,
    act,
    build_root_system,
    dual,
    pairing,
    rho,
    weyl_group,
)

__all__ = [
    "CapacityError",
    "Parameter",
    "RootSystem",
    "RootSystemSpec",
    "WeylElement",
    "act",
    "build_root_system",
    "dual",
    "pairing",
    "rho",
    "weyl_group",
]

__version__ = "0.1.0"
