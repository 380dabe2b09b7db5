"""Exact xi- and beta-invariants for two-orbit Fano blow-ups."""

from .arith import Factorization, factorize, is_prime
from .config import PRESETS, load_config, parse_config, preset
from .flag_degree import complementary_roots, degree, degree_bivariate, degree_pencil
from .k_stability import (
    InvariantReport,
    TwoOrbitConfig,
    beta,
    report,
    S_invariant,
    volume_polynomial,
    xi,
)
from .polynomial import BiPoly, UniPoly, definite_integral
from .root_system import DynkinDiagram, RootSystem, build

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "DynkinDiagram",
    "Factorization",
    "InvariantReport",
    "PRESETS",
    "RootSystem",
    "S_invariant",
    "TwoOrbitConfig",
    "UniPoly",
    "beta",
    "build",
    "complementary_roots",
    "definite_integral",
    "degree",
    "degree_bivariate",
    "degree_pencil",
    "factorize",
    "is_prime",
    "load_config",
    "parse_config",
    "preset",
    "report",
    "volume_polynomial",
    "xi",
]
