import math

import numpy as np
import pytest

import dephasing as dp


def test_ohmic_closed_form():
    bath = dp.BathSpec(1.0, 1.0, 1.0)
    assert dp.gamma(bath, 1.0) == pytest.approx(0.5 * math.log(2.0), rel=1e-14)
    assert dp.p_x(dp.ModelSpec(bath), 1.0) == pytest.approx(2 ** -0.5, rel=1e-14)


def test_evaluate_columns_agree_with_pointwise():
    model = dp.ModelSpec(dp.BathSpec(0.5, 0.3, 2.0), eps=0.7)
    times = np.linspace(0.0, 5.0, 11)
    out = dp.evaluate(model, list(times))
    assert out["source"] == "closed"
    np.testing.assert_allclose(out["t"], times)
    for t, p, c in zip(times, out["P_x"], out["C_x"]):
        assert p == dp.p_x(model, t)
        assert c == dp.c_x(model, t)


def test_closed_form_matches_quadrature():
    model = dp.ModelSpec(dp.BathSpec(1.5, 0.4, 1.0))
    t = 3.0
    assert dp.gamma_quadrature(model, t) == pytest.approx(dp.gamma(model.bath, t), rel=1e-8)


def test_nonhermitian_renormalization():
    bath = dp.BathSpec(1.0, 1.0, 1.0, tau=0.5)
    a, b = dp.renormalize(bath)
    assert a == pytest.approx(2 ** -1.5)
    assert b == pytest.approx(2 ** 0.5)
    assert dp.p_x_nh(bath, 1.0) == pytest.approx(dp.p_x(dp.ModelSpec(dp.BathSpec(1.0, a, b)), 1.0), rel=1e-15)
    assert dp.dp_dtau(bath, 1.0) > 0


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        dp.BathSpec(-1.0, 1.0, 1.0)
    with pytest.raises(dp.SingularityError):
        dp.gamma_fn(0.0)


def test_figure_and_verify():
    csv = dp.figure_csv(3, [0.0, 0.5])
    assert csv.splitlines()[0] == "s,tau,t,P_x"
    checks = dp.verify()
    assert checks and all(passed for _, passed, _, _ in checks)
