import json
import math

import numpy as np
import pytest

import lightshift as ls


def test_sr87_constants():
    a_hf, gamma = ls.derive_constants("sr87")
    assert gamma == pytest.approx(0.0057, rel=1e-2)
    assert a_hf / (2 * math.pi * 1e3) == pytest.approx(-260828.0625)
    assert ls.preset("sr87")["spin"] == 4.5


def test_point_values_match_oracle():
    lower, mid, upper = ls.hf_energies(4.5, 0.0057)
    delta = (lower + mid + upper) / 3
    b0, b1, b2 = ls.b_coefficients(4.5, 0.0057, delta)
    assert (b0.real, b1.real, b2.real) == pytest.approx((0.76, 0.09, 0.05), abs=0.01)
    o0, o1, o2, residual = ls.oracle_b(4.5, 0.0057, delta)
    assert residual < 1e-12
    for got, want in ((o0, b0), (o1, b1), (o2, b2)):
        assert abs(got - want) <= 1e-12 * abs(want)


def test_heff_is_hermitian():
    coeffs = ls.b_coefficients(1.5, 0.0, 2.0)
    h = ls.assemble_heff(coeffs, np.array([0.3 + 0.1j, -0.2j, 0.5]), 1.5)
    assert h.shape == (4, 4)
    assert np.allclose(h, h.conj().T, atol=1e-14)


def test_errors_map_to_python_exceptions():
    with pytest.raises(ls.PoleError):
        ls.b_coefficients(4.5, 0.0, -1.0)
    with pytest.raises(ls.InfeasibleError):
        ls.solve_tensor_cancellation(6.0, 8.0, 4.5, 0.0057, 0.0)
    with pytest.raises(ValueError):
        ls.run("coeffs", "spin_twice = 0\n")


def test_merit_scan_and_cli():
    _, gamma = ls.derive_constants("sr87")
    rows = ls.merit_scan(4.5, gamma, 3e-5, [2.5, 2.8, 3.1])
    assert all(r["status"] == "ok" for r in rows)
    assert 5e3 < max(abs(r["ratio"]) for r in rows) < 2e4

    code, out = ls.run("oracle-diff", "atom = sr87\n")
    assert code == 0
    assert json.loads(out)["pass"] is True
    assert ls.run("scan", "atom = sr87\n") == ls.run("scan", "atom = sr87\n")
