"""Independent reference computations used only by the tests."""

from functools import lru_cache
from math import prod


@lru_cache(maxsize=None)
def count_syt(shape: tuple[int, ...]) -> int:
    """Standard Young tableaux of a partition shape, by removing the largest entry."""
    shape = tuple(p for p in shape if p)
    if not shape:
        return 1
    total = 0
    for i, row in enumerate(shape):
        # the largest entry sits in a removable corner
        if i + 1 == len(shape) or shape[i + 1] < row:
            total += count_syt(shape[:i] + (row - 1,) + shape[i + 1 :])
    return total


def grassmannian_degree(k: int, n: int) -> int:
    """Plücker degree of Gr(k, n): tableaux of the k x (n-k) rectangle."""
    return count_syt((n - k,) * k)


def expand_linear_factors(factors):
    """Coefficients (ascending) of prod(a + b x) by schoolbook expansion on ints/Fractions."""
    coeffs = [1]
    for a, b in factors:
        out = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            out[i] += c * a
            out[i + 1] += c * b
        coeffs = out
    return coeffs


def integrate_coeffs(coeffs, lo, hi):
    from fractions import Fraction

    return sum(Fraction(c) * (Fraction(hi) ** (k + 1) - Fraction(lo) ** (k + 1)) / (k + 1) for k, c in enumerate(coeffs))


def product_of_powers(pairs):
    return prod(p**e for p, e in pairs)
