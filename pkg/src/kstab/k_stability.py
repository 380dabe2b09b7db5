"""The xi- and beta-invariants of the exceptional divisor of a two-orbit blow-up.

Setting: ``X`` a Fano manifold of dimension ``n`` with ``-K_X = k H_X``,
``phi: X~ -> X`` the blow-up along a smooth center ``Z`` of codimension
``r`` with exceptional divisor ``E``, and ``pi: X~ -> Y`` a fibration.  The
exceptional divisor is a flag variety ``G/P_{Y,Z}``, ``E = a_Y pi^*H_Y + a_X phi^*H_X``,
and on ``E`` the classes ``pi^*H_Y`` and ``phi^*H_X`` restrict to the line
bundles of the weights ``omega_Y`` and ``omega_Z``.

Every intersection number on ``X~`` is written in the basis
``{E, pi^*H_Y}``.  Monomials without ``E`` vanish (they are pulled back from
``Y``, which has smaller dimension); the others are computed on ``E`` with
the flag-variety degree polynomial.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Optional, Sequence

from .arith import Factorization, factorize
from .flag_degree import (
    TableRow,
    WeightError,
    complementary_roots,
    degree_bivariate,
    degree_pencil,
    pencil_table,
    support,
)
from .polynomial import BiPoly, UniPoly, bi_product, definite_integral
from .root_system import DynkinDiagram, RootSystem, build


class ConfigError(ValueError):
    """The geometric input is inconsistent."""


class DominanceError(ValueError):
    """The restricted pencil leaves the dominant cone inside the window."""


@dataclass(frozen=True)
class TwoOrbitConfig:
    """Geometric input of one computation.

    ``E_class = (a_Y, a_X)`` means ``E = a_Y pi^*H_Y + a_X phi^*H_X``.
    """

    name: str
    diagram: DynkinDiagram
    omega_Y: tuple[Fraction, ...]
    omega_Z: tuple[Fraction, ...]
    dim_X: int
    codim: int
    epsilon: Fraction
    minus_KX_multiple: int
    E_class: tuple[int, int]
    symmetrizer_scales: Optional[tuple[Fraction, ...]] = None

    def __post_init__(self):
        n = self.diagram.rank
        if len(self.omega_Y) != n or len(self.omega_Z) != n:
            raise ConfigError(f"weights must have {n} coefficients for {self.diagram}")
        if any(c < 0 for c in self.omega_Y + self.omega_Z):
            raise ConfigError("omega_Y and omega_Z must be dominant")
        if not support(self.omega_Y) or not support(self.omega_Z):
            raise ConfigError("omega_Y and omega_Z must be nonzero")
        if self.dim_X < 2:
            raise ConfigError("dim_X must be at least 2")
        if not 1 <= self.codim < self.dim_X:
            raise ConfigError("codim must satisfy 1 <= codim < dim_X")
        if self.epsilon < 0:
            raise ConfigError("epsilon must be nonnegative")
        if self.minus_KX_multiple <= 0:
            raise ConfigError("minus_KX_multiple must be positive")
        if self.E_class[1] == 0:
            raise ConfigError("a_X must be nonzero")
        dim_E = len(complementary_roots(self.root_system, self.marking))
        if dim_E != self.dim_X - 1:
            raise ConfigError(
                f"dim_X - 1 = {self.dim_X - 1} but the flag variety of the marking has dimension {dim_E}"
            )

    @cached_property
    def root_system(self) -> RootSystem:
        return build(self.diagram, self.symmetrizer_scales)

    @property
    def marking(self) -> frozenset[int]:
        return support(self.omega_Y) | support(self.omega_Z)

    @property
    def a_Y(self) -> int:
        return self.E_class[0]

    @property
    def a_X(self) -> int:
        return self.E_class[1]

    @cached_property
    def mixed_degrees(self) -> BiPoly:
        """``P(s, t) = deg_E(s omega_Y + t omega_Z)``."""
        return degree_bivariate(self.root_system, self.marking, self.omega_Y, self.omega_Z)


@dataclass(frozen=True)
class DivisorClass:
    """``e * E + h * pi^*H_Y`` on the blow-up."""

    e: Fraction = Fraction(0)
    h: Fraction = Fraction(0)

    @classmethod
    def from_pullbacks(cls, cfg: TwoOrbitConfig, phi_HX=0, pi_HY=0, E=0) -> "DivisorClass":
        """Rewrite ``phi_HX phi^*H_X + pi_HY pi^*H_Y + E E`` in the ``{E, pi^*H_Y}`` basis."""
        a_Y, a_X = Fraction(cfg.a_Y), Fraction(cfg.a_X)
        phi_HX = Fraction(phi_HX)
        # phi^*H_X = (E - a_Y pi^*H_Y) / a_X
        return cls(Fraction(E) + phi_HX / a_X, Fraction(pi_HY) - phi_HX * a_Y / a_X)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.e + other.e, self.h + other.h)

    def __mul__(self, c) -> "DivisorClass":
        return DivisorClass(self.e * c, self.h * c)

    __rmul__ = __mul__


def hyperplane_class(cfg: TwoOrbitConfig) -> DivisorClass:
    return DivisorClass.from_pullbacks(cfg, phi_HX=1)


def anticanonical_class(cfg: TwoOrbitConfig) -> DivisorClass:
    return DivisorClass.from_pullbacks(cfg, phi_HX=cfg.minus_KX_multiple)


def restrict_to_E(c: DivisorClass, cfg: TwoOrbitConfig) -> tuple[Fraction, Fraction]:
    """Coefficients ``(y, z)`` with ``c|_E = y * omega_Y + z * omega_Z``."""
    return (c.e * cfg.a_Y + c.h, c.e * cfg.a_X)


def restricted_weight(c: DivisorClass, cfg: TwoOrbitConfig) -> tuple[Fraction, ...]:
    y, z = restrict_to_E(c, cfg)
    return tuple(y * a + z * b for a, b in zip(cfg.omega_Y, cfg.omega_Z))


def _mixed(cfg: TwoOrbitConfig, k: int) -> Fraction:
    # omega_Y^k omega_Z^(d-k) on E
    d = cfg.dim_X - 1
    return cfg.mixed_degrees.coefficient(k, d - k) / comb(d, k)


def intersection_number(cfg: TwoOrbitConfig, b: int) -> Fraction:
    """``E^b (pi^*H_Y)^(n-b)`` on the blow-up."""
    n = cfg.dim_X
    if not 0 <= b <= n:
        raise ValueError(f"power of E must lie in [0, {n}]")
    if b == 0:
        return Fraction(0)
    # E^b H^(n-b) = (E|_E)^(b-1) (omega_Y)^(n-b) on E, E|_E = a_Y omega_Y + a_X omega_Z
    a_Y, a_X = cfg.a_Y, cfg.a_X
    total = Fraction(0)
    for j in range(b):
        total += comb(b - 1, j) * Fraction(a_Y) ** j * Fraction(a_X) ** (b - 1 - j) * _mixed(cfg, j + n - b)
    return total


def intersect(cfg: TwoOrbitConfig, classes: Sequence[DivisorClass]) -> Fraction:
    """Intersection number of ``n = dim_X`` divisor classes, by multilinearity."""
    n = cfg.dim_X
    if len(classes) != n:
        raise ValueError(f"need exactly {n} classes, got {len(classes)}")
    expanded = bi_product(BiPoly.linear(c.e, c.h) for c in classes)
    return sum((v * intersection_number(cfg, i) for (i, _), v in expanded.terms.items()), Fraction(0))


def volume_polynomial(cfg: TwoOrbitConfig) -> UniPoly:
    """``v(x) = (phi^*(-K_X) - x E)^n``; the volume on ``[0, epsilon]``."""
    n = cfg.dim_X
    L = anticanonical_class(cfg)
    e_part = UniPoly.linear(L.e, -1)
    h_part = L.h
    out = UniPoly()
    for b in range(1, n + 1):
        I = intersection_number(cfg, b)
        if I:
            out = out + (e_part**b) * (comb(n, b) * h_part ** (n - b) * I)
    return out


def log_discrepancy(cfg: TwoOrbitConfig) -> Fraction:
    """A(E) for the blow-up of a smooth center: its codimension."""
    return Fraction(cfg.codim)


def S_invariant(cfg: TwoOrbitConfig) -> Fraction:
    v = volume_polynomial(cfg)
    L_n = v(0)
    if L_n == 0:
        raise ConfigError("degenerate polarization: L^n = 0")
    return definite_integral(v, 0, cfg.epsilon) / L_n


def beta(cfg: TwoOrbitConfig) -> Fraction:
    v = volume_polynomial(cfg)
    return v(0) * (log_discrepancy(cfg) - S_invariant(cfg))


def restricted_pencil(cfg: TwoOrbitConfig) -> list[UniPoly]:
    """Per-node coefficients of ``(phi^*(-K_X) - x E)|_E``, linear in ``x``."""
    k = cfg.minus_KX_multiple
    y = UniPoly.linear(0, -cfg.a_Y)
    z = UniPoly.linear(k, -cfg.a_X)
    return [y * a + z * b for a, b in zip(cfg.omega_Y, cfg.omega_Z)]


def check_dominance(cfg: TwoOrbitConfig) -> None:
    # linear in x, so checking both ends of [0, epsilon] suffices
    for i, p in enumerate(restricted_pencil(cfg)):
        for x in (Fraction(0), cfg.epsilon):
            if p(x) < 0:
                raise DominanceError(
                    f"restricted class is not dominant at x = {x} (node {i + 1} coefficient {p(x)})"
                )


def xi_integrand(cfg: TwoOrbitConfig) -> UniPoly:
    """``n (r - x) E.(phi^*(-K_X) - x E)^(n-1)`` as a polynomial in ``x``."""
    check_dominance(cfg)
    deg = degree_pencil(cfg.root_system, cfg.marking, restricted_pencil(cfg))
    return UniPoly.linear(cfg.codim, -1) * deg * cfg.dim_X


def xi(cfg: TwoOrbitConfig) -> Fraction:
    return definite_integral(xi_integrand(cfg), 0, cfg.epsilon)


class Verdict(str, enum.Enum):
    POSITIVE = "positive"
    ZERO = "zero"
    NEGATIVE = "negative"

    @classmethod
    def of(cls, value: Fraction) -> "Verdict":
        if value > 0:
            return cls.POSITIVE
        return cls.ZERO if value == 0 else cls.NEGATIVE

    def describe(self) -> str:
        if self is Verdict.POSITIVE:
            return (
                "xi(Z) > 0: K-polystable, given that E is the unique G-invariant "
                "prime divisor over X and Aut^0(X) is reductive"
            )
        return f"xi(Z) is {self.value}: the divisor E does not certify K-polystability"


@dataclass(frozen=True)
class InvariantReport:
    name: str
    xi: Fraction
    xi_factored: Optional[Factorization]
    beta: Fraction
    A: Fraction
    S: Fraction
    L_to_n: Fraction
    volume_poly: UniPoly
    integrand_poly: UniPoly
    table: list[TableRow] = field(repr=False)
    verdict: Verdict


def report(cfg: TwoOrbitConfig) -> InvariantReport:
    integrand = xi_integrand(cfg)
    xi_value = definite_integral(integrand, 0, cfg.epsilon)
    v = volume_polynomial(cfg)
    S = S_invariant(cfg)
    A = log_discrepancy(cfg)
    return InvariantReport(
        name=cfg.name,
        xi=xi_value,
        xi_factored=factorize(xi_value.numerator) if xi_value.denominator == 1 else None,
        beta=v(0) * (A - S),
        A=A,
        S=S,
        L_to_n=v(0),
        volume_poly=v,
        integrand_poly=integrand,
        table=pencil_table(cfg.root_system, cfg.marking, restricted_pencil(cfg)),
        verdict=Verdict.of(xi_value),
    )


__all__ = [
    "ConfigError",
    "DominanceError",
    "TwoOrbitConfig",
    "DivisorClass",
    "InvariantReport",
    "Verdict",
    "WeightError",
    "anticanonical_class",
    "beta",
    "hyperplane_class",
    "intersect",
    "intersection_number",
    "log_discrepancy",
    "report",
    "restrict_to_E",
    "restricted_pencil",
    "S_invariant",
    "volume_polynomial",
    "xi",
    "xi_integrand",
]
