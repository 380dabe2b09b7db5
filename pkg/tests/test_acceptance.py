"""Exit criteria.  Every comparison is exact (zero tolerance).

Run alone with ``pytest tests/test_acceptance.py``; the terminal summary
prints one PASS/FAIL line per criterion.
"""

import json
import random
from fractions import Fraction

import pytest

from configs import random_configs
from kstab.arith import factorize
from kstab.cli import linear_form, main
from kstab.config import preset
from kstab.flag_degree import degree, pencil_table
from kstab.k_stability import beta, hyperplane_class, intersect, report, restricted_pencil, xi
from kstab.polynomial import UniPoly, definite_integral
from kstab.root_system import build
from oracles import grassmannian_degree

pytestmark = pytest.mark.acceptance

x = UniPoly.x()

F4_TABLE = [
    ((1, 0, 0, 0), "x", "1"), ((0, 0, 1, 0), "(8-x)/2", "1/2"), ((1, 1, 0, 0), "x", "2"),
    ((0, 1, 1, 0), "(8-x)/2", "3/2"), ((0, 0, 1, 1), "(8-x)/2", "1"), ((1, 1, 1, 0), "(8+x)/2", "5/2"),
    ((0, 1, 1, 1), "(8-x)/2", "2"), ((1, 1, 1, 1), "(8+x)/2", "3"), ((0, 1, 2, 0), "8-x", "2"),
    ((1, 1, 2, 0), "8", "3"), ((0, 1, 2, 1), "8-x", "5/2"), ((1, 2, 2, 0), "8", "4"),
    ((1, 1, 2, 1), "8", "7/2"), ((0, 1, 2, 2), "8-x", "3"), ((1, 2, 2, 1), "8", "9/2"),
    ((1, 1, 2, 2), "8", "4"), ((1, 2, 3, 1), "(24-x)/2", "5"), ((1, 2, 2, 2), "8", "5"),
    ((1, 2, 3, 2), "(24-x)/2", "11/2"), ((1, 2, 4, 2), "16-x", "6"), ((1, 3, 4, 2), "16-x", "7"),
    ((2, 3, 4, 2), "16", "8"),
]  # fmt: skip

# alpha_0, alpha_1, alpha_2, alpha_1+alpha_2, 2alpha_1+alpha_2, 3alpha_1+alpha_2, 3alpha_1+2alpha_2
A1G2_TABLE = [
    ((1, 0, 0), "6-2x", "1"), ((0, 1, 0), "6-2x", "1"), ((0, 0, 1), "3x", "3"), ((0, 1, 1), "6+x", "4"),
    ((0, 2, 1), "12-x", "5"), ((0, 3, 1), "18-3x", "6"), ((0, 3, 2), "18", "9"),
]  # fmt: skip

F4_ROOTS = [row[0] for row in F4_TABLE] + [(0, 1, 0, 0), (0, 0, 0, 1)]


def _run_json(capsys, *argv):
    code = main(list(argv) + ["--json"])
    return code, json.loads(capsys.readouterr().out)


def test_criterion_1_pas_f4_xi(capsys):
    """preset run pas-f4: xi = 2^73 * 19 * 23 * 199 * 1049 exactly, verdict positive."""
    code, doc = _run_json(capsys, "preset", "run", "pas-f4")
    assert code == 0
    assert int(doc["xi"]["value"]) == 2**73 * 19 * 23 * 199 * 1049
    assert doc["xi"]["factored"] == "2^73 · 19 · 23 · 199 · 1049"
    assert doc["verdict"] == "positive"


def test_criterion_2_pas_a1g2_xi(capsys):
    """preset run pas-a1g2: xi = 2^4 * 3^9 * 5 * 11 exactly, verdict positive."""
    code, doc = _run_json(capsys, "preset", "run", "pas-a1g2")
    assert code == 0
    assert int(doc["xi"]["value"]) == 2**4 * 3**9 * 5 * 11
    assert doc["xi"]["factored"] == "2^4 · 3^9 · 5 · 11"
    assert doc["verdict"] == "positive"


def test_criterion_3_f4_intermediate_products():
    """prod (rho, g) = 2^4 3^7 5^4 7^2 11 and the numerator product as an expanded polynomial."""
    cfg = preset("pas-f4")
    rows = pencil_table(cfg.root_system, cfg.marking, restricted_pencil(cfg))
    rho_product = Fraction(1)
    numerator = UniPoly([1])
    for row in rows:
        rho_product *= row.denominator
        numerator = numerator * row.numerator
    assert rho_product == 2**4 * 3**7 * 5**4 * 7**2 * 11
    assert numerator == (x**2) * ((x - 8) ** 7) * ((x + 8) ** 2) * ((x - 24) ** 2) * ((x - 16) ** 2) * (-(2**14))


def _table(name):
    rep = report(preset(name))
    return [(r.root, linear_form(r.numerator), str(r.denominator)) for r in rep.table]


def test_criterion_4_tables():
    """All 22 F4 rows and all 7 A1xG2 rows (root, numerator, denominator) match exactly."""
    f4 = _table("pas-f4")
    assert len(f4) == 22
    assert sorted(f4) == sorted(F4_TABLE)
    a1g2 = _table("pas-a1g2")
    assert len(a1g2) == 7
    assert sorted(a1g2) == sorted(A1G2_TABLE)


def test_criterion_5_root_system_goldens():
    """F4 roots, fundamental weights and rho; G2 weights and rho."""
    f4 = build("F4")
    assert len(f4.positive_roots) == 24
    assert sorted(f4.positive_roots) == sorted(F4_ROOTS)
    assert f4.fundamental_weights == ((2, 3, 4, 2), (3, 6, 8, 4), (2, 4, 6, 3), (1, 2, 3, 2))
    assert f4.to_simple_basis(f4.rho()) == (8, 15, 21, 11)
    g2 = build("G2")
    assert g2.fundamental_weights == ((2, 1), (3, 2))
    assert g2.to_simple_basis(g2.rho()) == (5, 3)


def test_criterion_6_intersection_engine():
    """H_X^8 = 12 for pas-a1g2 through the blow-up expansion; dim of A1xG2 is 17."""
    cfg = preset("pas-a1g2")
    assert intersect(cfg, [hyperplane_class(cfg)] * 8) == 12
    assert build("A1xG2").dim_adjoint() == 17


def test_criterion_7_beta_equals_xi():
    """beta = xi exactly for both presets and 20 randomized small configs."""
    configs = [preset("pas-f4"), preset("pas-a1g2")] + random_configs(20, seed=2024)
    assert len(configs) == 22
    for cfg in configs:
        assert beta(cfg) == xi(cfg), cfg


def test_criterion_8_degree_oracles():
    """Gr(2,4) = 2 and Gr(2,5) = 5 against a tableaux count; every projective space has degree 1."""
    assert degree(build("A3"), {1}, (0, 1, 0)) == grassmannian_degree(2, 4) == 2
    assert degree(build("A4"), {1}, (0, 1, 0, 0)) == grassmannian_degree(2, 5) == 5
    for n in range(1, 9):
        w = (1,) + (0,) * (n - 1)
        assert degree(build(f"A{n}"), {0}, w) == 1
        # the last node gives the dual projective space
        assert degree(build(f"A{n}"), {n - 1}, tuple(reversed(w))) == 1


ALL_TYPES = (
    [f"A{n}" for n in range(1, 9)]
    + [f"B{n}" for n in range(2, 9)]
    + [f"C{n}" for n in range(2, 9)]
    + [f"D{n}" for n in range(4, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)


def test_criterion_9_properties():
    """Scaling invariance of xi, rho = half-sum for all types, integral additivity, factorization round-trip."""
    import dataclasses

    for name, scales in (("pas-f4", (2,)), ("pas-a1g2", (2, 2)), ("pas-a1g2", (Fraction(1, 3), 7))):
        cfg = preset(name)
        scaled = dataclasses.replace(cfg, symmetrizer_scales=tuple(Fraction(s) for s in scales))
        assert xi(scaled) == xi(cfg)

    for name in ALL_TYPES:
        rs = build(name)
        half_sum = tuple(Fraction(sum(r[j] for r in rs.positive_roots), 2) for j in range(rs.rank))
        assert rs.to_simple_basis(rs.rho()) == half_sum, name

    rng = random.Random(9)
    for _ in range(200):
        p = UniPoly([Fraction(rng.randint(-99, 99), rng.randint(1, 9)) for _ in range(rng.randint(0, 12))])
        a, b, c = sorted(Fraction(rng.randint(-50, 50), rng.randint(1, 7)) for _ in range(3))
        assert definite_integral(p, a, b) + definite_integral(p, b, c) == definite_integral(p, a, c)

    for _ in range(1000):
        n = rng.randrange(1, 10**30)
        f = factorize(n)
        assert f.value() == n
        assert [p for p, _ in f.factors] == sorted({p for p, _ in f.factors})


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
