import math

import numpy as np
import pytest

import sphconf as sc

TBP_ENERGY = -3 * math.log(3) - 8 * math.log(2)


def test_version():
    assert sc.__version__ == "0.1.0"


def test_constructions_and_energy():
    tbp = sc.orthogonal_simplexes([3, 2])
    assert tbp.points.shape == (5, 3)
    assert abs(sc.energy(tbp, sc.Potential.log()) - TBP_ENERGY) < 1e-12
    pyr = sc.pyramid_config([1, 2, 2])
    assert np.array_equal(pyr.points, sc.square_pyramid(-0.25).points)


def test_force_report_and_classify():
    tbp = sc.orthogonal_simplexes([3, 2])
    rep = sc.log_force_report(tbp)
    assert rep.max_residual < 1e-10
    assert np.allclose(rep.lambda_, 4.0)
    assert sc.classify(tbp).to_string() == "TwoSimplex(3,2)"


def test_minimize_returns_config_and_trace():
    cfg, trace = sc.minimize(sc.random_config(3, 5, 7), sc.Potential.log())
    assert trace.converged
    assert trace.final_grad_norm < 1e-10
    assert trace.final_class.to_string() == "TwoSimplex(3,2)"
    assert abs(sc.energy(cfg, sc.Potential.log()) - TBP_ENERGY) < 1e-8


def test_chart_and_morse():
    v = sc.chart_square_pyramid()
    assert np.asarray(v).reshape(-1).shape == (7,)
    rep = sc.chart_morse_index(v)
    assert (rep.index, rep.nullity) == (1, 0)
    gen = sc.morse_index(sc.from_spherical(sc.chart_bipyramid()), sc.Potential.log())
    assert (gen.index, gen.nullity, gen.orbit_dim) == (0, 0, 3)


def test_crossover():
    assert 15.04 < sc.find_crossover(15.0, 15.1) < 15.06


def test_json_round_trip():
    c = sc.random_config(4, 6, 3)
    back = sc.config_from_json(sc.config_to_json(c))
    assert np.array_equal(back.points, c.points)


def test_error_mapping():
    with pytest.raises(ValueError):
        sc.regular_simplex(1)
    with pytest.raises(ValueError):
        sc.Potential.riesz(0)
    with pytest.raises(ArithmeticError):
        sc.Potential.log().eval(1.0)
