import cmath

import numpy as np
import pytest

import elliptica as el


def test_theta_triple_product():
    z, p = 0.4 + 0.7j, 0.3 + 0.1j
    series = sum((-1) ** n * p ** (n * (n - 1) / 2) * z**n for n in range(-40, 41))
    assert abs(el.theta_p(z, p) - series) < 1e-12 * abs(series)


def test_qpoch_two_bases():
    a, b, z = 0.25, -0.2 + 0.1j, 0.6
    ref = np.prod([1 - z * a**i * b**j for i in range(40) for j in range(40)])
    assert abs(el.qpoch(z, [a, b]) - ref) < 1e-13


def test_w_matrix_shape_and_regularity():
    w = el.w_matrix(1.0, 0.6, 0.25)
    assert w.shape == (4, 4)
    perm = np.eye(4)[[0, 2, 1, 3]]
    assert np.allclose(w, perm, atol=1e-12)


def test_yang_baxter_from_numpy():
    q, p = 0.6, 0.25
    z1, z2 = 0.8 + 0.3j, 1.1 - 0.2j
    I2 = np.eye(2)
    P = np.eye(4)[[0, 2, 1, 3]]
    P23 = np.kron(I2, P)

    def e12(m):
        return np.kron(m, I2)

    def e23(m):
        return np.kron(I2, m)

    def e13(m):
        return P23 @ e12(m) @ P23

    lhs = e12(el.w_matrix(z1, q, p)) @ e13(el.w_matrix(z2, q, p)) @ e23(el.w_matrix(z2 / z1, q, p))
    rhs = e23(el.w_matrix(z2 / z1, q, p)) @ e13(el.w_matrix(z2, q, p)) @ e12(el.w_matrix(z1, q, p))
    assert np.linalg.norm(lhs - rhs) < 1e-10 * np.linalg.norm(rhs)


def test_reports():
    reps = el.verify_gl2(samples=5)
    assert [r["check_name"] for r in reps] == ["gl2.ybe", "gl2.unitarity", "gl2.crossing", "gl2.antisymmetry"]
    assert all(r["passed"] for r in reps)
    assert all(r["passed"] for r in el.verify_glN(samples=3) if not r.get("informational"))


def test_case_study_surface():
    pr = el.case_study_params(0.55 + 0.05j)
    assert el.surface_residual(1, 7, pr) < 1e-14
    sol = el.solve_exponent(1, 7)
    assert sol["a"] == (3, 2) and (sol["r"], sol["s"]) == (1, 3)


def test_h_is_odd():
    x = 0.7 + 0.1j
    assert abs(el.h_poisson(1 / x, 0.5) + el.h_poisson(x, 0.5)) < 1e-10


def test_errors_carry_kind():
    with pytest.raises(el.Error) as info:
        el.solve_exponent(2, 2)
    assert info.value.kind == "Degenerate"
    assert info.value.residual == pytest.approx(-1.0)
    with pytest.raises(el.Error):
        el.theta_p(0, 0.3)


def test_cli_roundtrip():
    code, rep, _ = el.cli("surface", "--solve", "--ell", "1")
    assert code == 0
    assert any(s["ell_prime"] == 7 and s["relation"] == "p^1 = q^3" for s in rep["solutions"])
    code, rep, err = el.cli("rmatrix", "--q", "abc")
    assert code == 2 and rep is None and "complex" in err
    a = el.cli("table", "--z-samples", "3")[1]
    b = el.cli("table", "--z-samples", "3")[1]
    assert a == b and a["passed"]
