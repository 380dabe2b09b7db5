"""Degrees of line bundles on flag varieties G/P.

For a dominant weight ``w`` supported on the marked nodes ``S`` the degree
of the associated line bundle on ``G/P_S`` is

    deg = (dim G/P_S)! * prod over complementary roots g of (w, g) / (rho, g)

where the complementary roots are the positive roots with a nonzero
coefficient on some marked node.  The same product with ``w`` replaced by
a pencil of weights gives the degree as a polynomial in the pencil
parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .polynomial import BiPoly, UniPoly, bi_product, product
from .root_system import Root, RootSystem


class WeightError(ValueError):
    """A weight or pencil violates dominance or support requirements."""


def marking(nodes: Iterable[int], rank: int) -> frozenset[int]:
    """Validate a set of marked 0-based nodes."""
    S = frozenset(nodes)
    if not S:
        raise ValueError("marking must be nonempty")
    bad = [i for i in S if not 0 <= i < rank]
    if bad:
        raise ValueError(f"marked nodes out of range: {sorted(bad)}")
    return S


def support(w: Sequence) -> frozenset[int]:
    """Nodes where a weight (or a pencil of weights) is not identically zero."""
    out = set()
    for i, c in enumerate(w):
        if isinstance(c, UniPoly):
            if not c.is_zero():
                out.add(i)
        elif c != 0:
            out.add(i)
    return frozenset(out)


def complementary_roots(rs: RootSystem, S: Iterable[int]) -> tuple[Root, ...]:
    S = marking(S, rs.rank)
    return tuple(r for r in rs.positive_roots if any(r[i] for i in S))


def _check_support(w: Sequence, S: frozenset[int]) -> None:
    extra = support(w) - S
    if extra:
        labels = ", ".join(str(i + 1) for i in sorted(extra))
        raise WeightError(f"weight has nonzero coefficients on unmarked node(s) {labels}")


def degree(rs: RootSystem, S: Iterable[int], w: Sequence[Fraction]) -> Fraction:
    """Degree of the line bundle of the dominant weight ``w`` on ``G/P_S``."""
    S = marking(S, rs.rank)
    w = tuple(Fraction(c) for c in w)
    if len(w) != rs.rank:
        raise WeightError(f"weight has {len(w)} coefficients, rank is {rs.rank}")
    if any(c < 0 for c in w):
        raise WeightError(f"weight {tuple(map(str, w))} is not dominant")
    _check_support(w, S)
    C = complementary_roots(rs, S)
    rho = rs.rho()
    out = Fraction(factorial(len(C)))
    for g in C:
        out *= rs.pairing(w, g) / rs.pairing(rho, g)
    return out


@dataclass(frozen=True)
class TableRow:
    """One complementary root with its numerator form and denominator."""

    root: Root
    numerator: UniPoly
    denominator: Fraction


def pencil_table(rs: RootSystem, S: Iterable[int], pencil: Sequence[UniPoly]) -> list[TableRow]:
    """Per-root factors ``((pencil(x), g), (rho, g))`` over the complementary roots."""
    S = marking(S, rs.rank)
    if len(pencil) != rs.rank:
        raise WeightError(f"pencil has {len(pencil)} entries, rank is {rs.rank}")
    _check_support(pencil, S)
    rho = rs.rho()
    rows = []
    for g in complementary_roots(rs, S):
        num = UniPoly()
        for i, (p, m) in enumerate(zip(pencil, g)):
            if m:
                num = num + p * (m * rs.symmetrizers[i])
        rows.append(TableRow(g, num, rs.pairing(rho, g)))
    return rows


def degree_pencil(rs: RootSystem, S: Iterable[int], pencil: Sequence[UniPoly]) -> UniPoly:
    """Degree of the weight ``sum_i pencil[i](x) * omega_i`` as a polynomial in ``x``.

    Dominance is not checked here; callers restrict ``x`` to the range where
    the pencil is dominant.
    """
    rows = pencil_table(rs, S, pencil)
    den = Fraction(1)
    for row in rows:
        den *= row.denominator
    return product(row.numerator for row in rows) * (Fraction(factorial(len(rows))) / den)


def degree_bivariate(rs: RootSystem, S: Iterable[int], w_a: Sequence[Fraction], w_b: Sequence[Fraction]) -> BiPoly:
    """Homogeneous degree polynomial ``P(s, t) = deg(s*w_a + t*w_b)``.

    With ``d = dim G/P_S``, the mixed number ``A^k B^(d-k)`` on ``G/P_S`` is
    ``P.coefficient(k, d - k) / binomial(d, k)``.  Both weights may be
    non-dominant; the polynomial identity holds regardless.
    """
    S = marking(S, rs.rank)
    w_a = tuple(Fraction(c) for c in w_a)
    w_b = tuple(Fraction(c) for c in w_b)
    _check_support(w_a, S)
    _check_support(w_b, S)
    rho = rs.rho()
    C = complementary_roots(rs, S)
    den = Fraction(1)
    for g in C:
        den *= rs.pairing(rho, g)
    P = bi_product(BiPoly.linear(rs.pairing(w_a, g), rs.pairing(w_b, g)) for g in C)
    return P * (Fraction(factorial(len(C))) / den)
