"""Dense univariate and sparse bivariate polynomials over Q."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .arith import format_rational

Scalar = Union[int, Fraction]


def _trim(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class UniPoly:
    """Polynomial in ``x``; ``coeffs[k]`` multiplies ``x**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs = _trim(coeffs)

    @classmethod
    def constant(cls, c: Scalar) -> "UniPoly":
        return cls([c])

    @classmethod
    def linear(cls, const: Scalar, slope: Scalar) -> "UniPoly":
        """``const + slope * x``."""
        return cls([const, slope])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coefficient(k) + other.coefficient(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, c: Scalar) -> "UniPoly":
        # scalar division only
        c = Fraction(c)
        return UniPoly(a / c for a in self.coeffs)

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative power")
        result, base = UniPoly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def antiderivative(self) -> "UniPoly":
        return UniPoly([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def derivative(self) -> "UniPoly":
        return UniPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self) -> str:
        """Descending powers, e.g. ``-2048/3*x^5 + x - 1/2``."""
        if self.is_zero():
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def product(polys: Iterable[UniPoly]) -> UniPoly:
    out = UniPoly([1])
    for p in polys:
        out = out * p
    return out


def definite_integral(p: UniPoly, lo: Scalar, hi: Scalar) -> Fraction:
    """Exact integral of ``p`` over ``[lo, hi]``."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError("integration bounds must satisfy lo <= hi")
    F = p.antiderivative()
    return F(hi) - F(lo)


class BiPoly:
    """Sparse polynomial in ``s`` and ``t``: ``{(i, j): coefficient of s^i t^j}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def linear(cls, a: Scalar, b: Scalar) -> "BiPoly":
        """``a*s + b*t``."""
        return cls({(1, 0): a, (0, 1): b})

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return BiPoly(out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiPoly({k: v * other for k, v in self.terms.items()})
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, Fraction(0)) + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __call__(self, s: Scalar, t: Scalar) -> Fraction:
        return sum((v * Fraction(s) ** i * Fraction(t) ** j for (i, j), v in self.terms.items()), Fraction(0))

    def is_homogeneous(self, d: int) -> bool:
        return all(i + j == d for i, j in self.terms)

    def specialize(self, c: Scalar, m: Scalar) -> UniPoly:
        """Substitute ``s = x`` and ``t = c - m*x``."""
        t = UniPoly.linear(c, -Fraction(m))
        x = UniPoly.x()
        out = UniPoly()
        for (i, j), v in self.terms.items():
            out = out + (x**i) * (t**j) * v
        return out

    def __repr__(self):
        items = ", ".join(f"s^{i}t^{j}: {format_rational(v)}" for (i, j), v in sorted(self.terms.items()))
        return f"BiPoly({{{items}}})"


def bi_product(polys: Iterable[BiPoly]) -> BiPoly:
    out = BiPoly({(0, 0): 1})
    for p in polys:
        out = out * p
    return out
