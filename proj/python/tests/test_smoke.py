import json
import math
import pathlib
import random
from fractions import Fraction

import pytest

sbolab = pytest.importorskip("sbolab")

SCHEMA = pathlib.Path(__file__).resolve().parents[2] / "schemas" / "verification_report.schema.json"


def test_gamma_values():
    assert abs(sbolab.gamma(5) - 24) < 1e-12
    assert abs(sbolab.gamma(0.5) - math.sqrt(math.pi)) < 1e-14
    assert sbolab.recip_gamma(-3) == 0
    with pytest.raises(sbolab.DomainError):
        sbolab.gamma(-2)


def test_gamma_functional_equation():
    rng = random.Random(3)
    for _ in range(50):
        z = complex(rng.uniform(-3.5, 6), rng.uniform(-2, 2))
        assert abs(sbolab.gamma(z + 1) / (z * sbolab.gamma(z)) - 1) < 1e-12


def test_hyp2f1_closed_forms():
    z = 0.3
    assert abs(sbolab.hyp2f1(1, 1, 2, z) + math.log(1 - z) / z) < 1e-14
    assert abs(sbolab.hyp2f1(0.5, 1, 1.5, -z * z) - math.atan(z) / z) < 1e-14


def test_gegenbauer_and_inflated():
    t = 0.37
    assert abs(sbolab.gegenbauer(2, 1.5, t) - (2 * 1.5 * 2.5 * t * t - 1.5)) < 1e-14
    # C~(c^2 v, c t) = c^{2l} C~(v, t)
    v, c = 0.8, 1.7
    a = sbolab.inflated_gegenbauer(3, 0.25, c * c * v, c * t)
    b = sbolab.inflated_gegenbauer(3, 0.25, v, t)
    assert abs(a - c**6 * b) < 1e-11 * abs(a)


def test_exact_tables():
    coeffs = sbolab.inflated_gegenbauer_coefficients(2, Fraction(1, 2))
    assert all(isinstance(x, Fraction) for x in coeffs)
    assert len(coeffs) == 3
    b = sbolab.juhl_coefficients(3, 1, 3)
    assert b == [Fraction(2), Fraction(1)]
    with pytest.raises(sbolab.DomainError):
        sbolab.juhl_coefficients(3, 1, 2)


def test_fmethod_dimension_one():
    for n in (2, 3, 4):
        for l in range(4):
            lam = Fraction(5, 7)
            sol = sbolab.solve_sol_space(n, l, lam)
            assert len(sol) == 1
            juhl = sbolab.juhl_symbol_coefficients(n, l, lam)
            k = next(i for i, x in enumerate(juhl) if x != 0)
            ratio = sol[0][k] / juhl[k]
            assert [x / ratio for x in sol[0]] == juhl


def test_residue_formula_point():
    n, l, lam = 3, 2, 0.4
    nu = lam + 2 * l
    zb, zn = [0.7, -0.3], 0.2
    lhs = sbolab.asymbol(n, lam, nu, zb, zn)
    rhs = sbolab.residue_constant(l, n, nu) * sbolab.csymbol(n, lam, nu, zb, zn)
    assert abs(lhs - rhs) <= 1e-10 * abs(rhs)
    assert sbolab.in_l_even(-2, 0)
    assert abs(sbolab.asymbol(2, -2, 0, [0.6], 0.3)) < 1e-12


def test_run_suite_report_validates():
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(SCHEMA.read_text())
    runs = {
        "specfun": {"samples": 4, "seed": 9},
        "weyl": {"samples": 4, "seed": 9},
        "residue": {"samples": 2, "n": "2..3", "l": "0..2", "grid": 10},
        "fmethod": {"samples": 2, "n": "2..3", "l": "0..2", "formal": True},
    }
    for suite, options in runs.items():
        report = sbolab.run_suite(suite, options)
        jsonschema.validate(report, schema)
        assert report["suite"] == suite
        assert report["summary"]["failed"] == 0
    assert "covariance" in sbolab.suite_names()


def test_run_suite_errors():
    with pytest.raises(sbolab.ConfigError):
        sbolab.run_suite("nope")
    with pytest.raises(sbolab.ConfigError):
        sbolab.run_suite("specfun", {"bogus": 1})
    with pytest.raises(sbolab.BudgetExceeded):
        sbolab.run_suite("fourier-kernel", {"budget": 1000})
