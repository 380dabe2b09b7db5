"""Finite root systems built from Dynkin data.

Conventions:

* Bourbaki numbering inside every simple component; a product diagram such
  as ``A1xG2`` concatenates node indices in component order.
* ``cartan[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)``.
* ``symmetrizers[i] = (alpha_i, alpha_i) / 2``, so ``(alpha_i, alpha_j) = d_j c_ij``
  and ``(omega_i, alpha_j) = d_j delta_ij``.

Roots are integer tuples over the simple roots, weights are rational tuples
over the fundamental weights.  Indices in this module are 0-based; the
1-based node labels only appear at the text/CLI boundary.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

Root = tuple[int, ...]
Weight = tuple[Fraction, ...]
Matrix = tuple[tuple[Fraction, ...], ...]


class DiagramError(ValueError):
    """Raised for an unknown type letter, a bad rank or unparsable text."""


_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def classical_root_count(letter: str, rank: int) -> int:
    """Number of positive roots of a simple type, by closed form."""
    return _POSITIVE_ROOT_COUNT[letter](rank)


@dataclass(frozen=True)
class DynkinDiagram:
    components: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if not self.components:
            raise DiagramError("empty Dynkin diagram")
        for letter, rank in self.components:
            if letter not in _RANK_OK:
                raise DiagramError(f"unknown type {letter!r}")
            if not isinstance(rank, int) or not _RANK_OK[letter](rank):
                raise DiagramError(f"invalid rank {rank!r} for type {letter}")

    @classmethod
    def parse(cls, text: str) -> "DynkinDiagram":
        """Parse ``"F4"``, ``"A1xG2"``, ``"B3xA2"`` and the like."""
        parts = text.strip().split("x")
        components = []
        for part in parts:
            m = re.fullmatch(r"\s*([A-G])(\d+)\s*", part)
            if not m:
                raise DiagramError(f"cannot parse diagram {text!r}")
            components.append((m.group(1), int(m.group(2))))
        return cls(tuple(components))

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.components)

    def offsets(self) -> list[int]:
        out, k = [], 0
        for _, r in self.components:
            out.append(k)
            k += r
        return out

    def component_of(self, node: int) -> int:
        """Index of the component containing the 0-based ``node``."""
        for c, (off, (_, r)) in enumerate(zip(self.offsets(), self.components)):
            if off <= node < off + r:
                return c
        raise IndexError(node)

    def __str__(self) -> str:
        return "x".join(f"{letter}{rank}" for letter, rank in self.components)


def _simple_component(letter: str, n: int) -> tuple[list[Fraction], list[tuple[int, int]]]:
    """Squared lengths of the simple roots and the edges, Bourbaki order.

    Lengths are normalized so the shortest root has squared length 2.
    """
    two = Fraction(2)
    if letter == "A":
        norms = [two] * n
        edges = [(i, i + 1) for i in range(n - 1)]
    elif letter == "B":
        norms = [Fraction(4)] * (n - 1) + [two]
        edges = [(i, i + 1) for i in range(n - 1)]
    elif letter == "C":
        norms = [two] * (n - 1) + [Fraction(4)]
        edges = [(i, i + 1) for i in range(n - 1)]
    elif letter == "D":
        norms = [two] * n
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif letter == "E":
        norms = [two] * n
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
    elif letter == "F":
        norms = [Fraction(4), Fraction(4), two, two]
        edges = [(0, 1), (1, 2), (2, 3)]
    elif letter == "G":
        norms = [two, Fraction(6)]
        edges = [(0, 1)]
    else:
        raise DiagramError(f"unknown type {letter!r}")
    return norms, edges


def _invert(matrix: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Exact Gauss-Jordan inverse."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _enumerate_positive_roots(cartan: Sequence[Sequence[int]], bound: int) -> list[Root]:
    """Positive roots by root strings, one height layer at a time.

    ``beta + alpha_i`` is a root iff ``q - <beta, alpha_i^vee> >= 1``, where
    ``q`` is the length of the alpha_i-string below ``beta``.
    """
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    known = set(simple)
    layer = list(simple)
    roots = list(simple)
    layers = 1
    while layer:
        layers += 1
        if layers > bound:
            raise AssertionError("root enumeration exceeded its safety bound")
        nxt = set()
        for beta in layer:
            for i in range(n):
                pairing = sum(beta[j] * cartan[j][i] for j in range(n))
                q, below = 0, list(beta)
                while True:
                    below[i] -= 1
                    if tuple(below) not in known:
                        break
                    q += 1
                if q - pairing >= 1:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        layer = sorted(nxt, reverse=True)
        known.update(layer)
        roots.extend(layer)
    return roots


def _height_key(root: Root):
    # height first; inside a height, descending lexicographic order
    return (sum(root), tuple(-c for c in root))


@dataclass(frozen=True)
class RootSystem:
    """Root datum of a (product of) simple type(s).

    Build with :func:`build`.  ``scales`` holds one positive rational per
    component multiplying that component's symmetrizers.
    """

    diagram: DynkinDiagram
    scales: tuple[Fraction, ...]
    cartan: tuple[tuple[int, ...], ...] = field(repr=False)
    symmetrizers: tuple[Fraction, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.diagram.rank

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        roots = _enumerate_positive_roots(self.cartan, bound=64 * self.rank)
        return tuple(sorted(roots, key=_height_key))

    @cached_property
    def fundamental_weights(self) -> Matrix:
        """Row ``i`` is omega_i over the simple roots; the inverse Cartan matrix."""
        return tuple(tuple(row) for row in _invert(self.cartan))

    def rho(self) -> Weight:
        return tuple(Fraction(1) for _ in range(self.rank))

    def to_simple_basis(self, w: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Expand a weight given over the fundamental weights into simple roots."""
        self._check_len(w)
        M = self.fundamental_weights
        return tuple(sum((w[i] * M[i][j] for i in range(self.rank)), Fraction(0)) for j in range(self.rank))

    def pairing(self, w: Sequence[Fraction], root: Sequence[int]) -> Fraction:
        """Inner product of a weight (fundamental basis) with a root (simple basis)."""
        self._check_len(w)
        self._check_len(root)
        return sum((Fraction(c) * m * d for c, m, d in zip(w, root, self.symmetrizers)), Fraction(0))

    def root_inner_product(self, i: int, j: int) -> Fraction:
        return self.symmetrizers[j] * self.cartan[i][j]

    def dim_adjoint(self) -> int:
        """Dimension of the Lie algebra: roots plus Cartan subalgebra."""
        return 2 * len(self.positive_roots) + self.rank

    def component_roots(self, c: int) -> tuple[Root, ...]:
        off = self.diagram.offsets()[c]
        size = self.diagram.components[c][1]
        return tuple(r for r in self.positive_roots if any(r[off : off + size]))

    def _check_len(self, v: Sequence) -> None:
        if len(v) != self.rank:
            raise ValueError(f"expected a vector of length {self.rank}, got {len(v)}")


def build(diagram: DynkinDiagram | str, scales: Optional[Sequence[Fraction]] = None) -> RootSystem:
    """Assemble the Cartan matrix and symmetrizers for ``diagram``.

    Without ``scales`` each component's smallest symmetrizer is 1 (G2 gets
    ``(1, 3)``, F4 gets ``(2, 2, 1, 1)``).
    """
    if isinstance(diagram, str):
        diagram = DynkinDiagram.parse(diagram)
    if scales is None:
        scales = [Fraction(1)] * len(diagram.components)
    scales = tuple(Fraction(s) for s in scales)
    if len(scales) != len(diagram.components):
        raise ValueError("need one symmetrizer scale per component")
    if any(s <= 0 for s in scales):
        raise ValueError("symmetrizer scales must be positive")

    n = diagram.rank
    # half the Gram matrix of the simple roots; its diagonal is the symmetrizers
    half_gram = [[Fraction(0)] * n for _ in range(n)]
    for off, (letter, rank), scale in zip(diagram.offsets(), diagram.components, scales):
        norms, edges = _simple_component(letter, rank)
        for i, norm in enumerate(norms):
            half_gram[off + i][off + i] = norm * scale / 2
        for i, j in edges:
            # adjacent simple roots: (a_i, a_j) = -max(|a_i|^2, |a_j|^2) / 2, halved
            value = -max(norms[i], norms[j]) * scale / 4
            half_gram[off + i][off + j] = half_gram[off + j][off + i] = value
    cartan = tuple(tuple(int(2 * half_gram[i][j] / half_gram[j][j]) for j in range(n)) for i in range(n))
    symmetrizers = tuple(half_gram[i][i] for i in range(n))
    return RootSystem(diagram, scales, cartan, symmetrizers)
